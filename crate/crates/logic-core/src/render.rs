//! Pretty-printers. `parse(render(f), dialect)` returns a structurally
//! identical AST; parentheses are emitted only where precedence demands.

use crate::ast::{FoFormula, Formula, HsFormula, PointFormula, Polarity};

pub fn render(f: &Formula) -> String {
    match f {
        Formula::Hs(h) => render_hs(h),
        Formula::Point(p) => render_point(p),
        Formula::Fo(q) => render_fo(q),
    }
}

pub fn render_hs(f: &HsFormula) -> String {
    let mut s = String::new();
    hs_at(f, 0, &mut s);
    s
}

pub fn render_point(f: &PointFormula) -> String {
    let mut s = String::new();
    pt_at(f, 0, &mut s);
    s
}

pub fn render_fo(f: &FoFormula) -> String {
    let mut s = String::new();
    fo_at(f, 0, &mut s);
    s
}

// Precedence levels: 0 implies/binders, 1 or, 2 and, 3 until/since, 4 unary,
// 5 primary. A node is parenthesized when its level is below the context's.

fn hs_prec(f: &HsFormula) -> u8 {
    match f {
        HsFormula::Implies(_, _) => 0,
        HsFormula::Or(_, _) => 1,
        HsFormula::And(_, _) => 2,
        HsFormula::Not(a) if **a == HsFormula::True => 5, // rendered as `false`
        HsFormula::Not(_) | HsFormula::Modal(_, _, _) => 4,
        HsFormula::Atom(_) | HsFormula::True => 5,
    }
}

fn hs_at(f: &HsFormula, ctx: u8, out: &mut String) {
    let prec = hs_prec(f);
    if prec < ctx {
        out.push('(');
        hs_at(f, 0, out);
        out.push(')');
        return;
    }
    match f {
        HsFormula::Atom(a) => out.push_str(a),
        HsFormula::True => out.push_str("true"),
        HsFormula::Not(a) if **a == HsFormula::True => out.push_str("false"),
        HsFormula::Not(a) => {
            out.push('!');
            hs_at(a, 4, out);
        }
        HsFormula::And(a, b) => {
            hs_at(a, 2, out);
            out.push_str(" & ");
            hs_at(b, 3, out);
        }
        HsFormula::Or(a, b) => {
            hs_at(a, 1, out);
            out.push_str(" | ");
            hs_at(b, 2, out);
        }
        HsFormula::Implies(a, b) => {
            hs_at(a, 1, out);
            out.push_str(" -> ");
            hs_at(b, 0, out);
        }
        HsFormula::Modal(r, pol, a) => {
            match pol {
                Polarity::Ex => {
                    out.push('<');
                    out.push_str(r.name());
                    out.push('>');
                }
                Polarity::Univ => {
                    out.push('[');
                    out.push_str(r.name());
                    out.push(']');
                }
            }
            out.push(' ');
            hs_at(a, 4, out);
        }
    }
}

fn pt_prec(f: &PointFormula) -> u8 {
    use PointFormula::*;
    match f {
        Implies(_, _) | Bind(_, _) => 0,
        Or(_, _) => 1,
        And(_, _) => 2,
        Until(_, _) | Since(_, _) => 3,
        Not(a) if **a == True => 5,
        Not(_) | Next(_) | Ev(_) | Alw(_) | Prev(_) | EvPast(_) | AlwPast(_) => 4,
        Atom(_) | True | Var(_) | Exists(_) | Forall(_) | ExistsF(_) | ForallF(_) => 5,
    }
}

fn pt_at(f: &PointFormula, ctx: u8, out: &mut String) {
    use PointFormula::*;
    let prec = pt_prec(f);
    if prec < ctx {
        out.push('(');
        pt_at(f, 0, out);
        out.push(')');
        return;
    }
    let unary = |tok: &str, a: &PointFormula, out: &mut String| {
        out.push_str(tok);
        out.push(' ');
        pt_at(a, 4, out);
    };
    match f {
        Atom(a) | Var(a) => out.push_str(a),
        True => out.push_str("true"),
        Not(a) if **a == True => out.push_str("false"),
        Not(a) => {
            out.push('!');
            pt_at(a, 4, out);
        }
        And(a, b) => {
            pt_at(a, 2, out);
            out.push_str(" & ");
            pt_at(b, 3, out);
        }
        Or(a, b) => {
            pt_at(a, 1, out);
            out.push_str(" | ");
            pt_at(b, 2, out);
        }
        Implies(a, b) => {
            pt_at(a, 1, out);
            out.push_str(" -> ");
            pt_at(b, 0, out);
        }
        Until(a, b) => {
            pt_at(a, 4, out);
            out.push_str(" U ");
            pt_at(b, 3, out);
        }
        Since(a, b) => {
            pt_at(a, 4, out);
            out.push_str(" S ");
            pt_at(b, 3, out);
        }
        Next(a) => unary("X", a, out),
        Ev(a) => unary("F", a, out),
        Alw(a) => unary("G", a, out),
        Prev(a) => unary("Y", a, out),
        EvPast(a) => unary("P", a, out),
        AlwPast(a) => unary("H", a, out),
        Exists(a) => quant("E", a, out),
        Forall(a) => quant("A", a, out),
        ExistsF(a) => quant("Ef", a, out),
        ForallF(a) => quant("Af", a, out),
        Bind(x, a) => {
            out.push_str("down ");
            out.push_str(x);
            out.push_str(" . ");
            pt_at(a, 0, out);
        }
    }
}

fn quant(tok: &str, a: &PointFormula, out: &mut String) {
    out.push_str(tok);
    out.push('(');
    pt_at(a, 0, out);
    out.push(')');
}

fn fo_prec(f: &FoFormula) -> u8 {
    use FoFormula::*;
    match f {
        Implies(_, _) | Exists(_, _) | Forall(_, _) => 0,
        Or(_, _) => 1,
        And(_, _) => 2,
        Not(a) if **a == True => 5,
        Not(_) => 4,
        True | Pred(_, _) | Le(_, _) | Lt(_, _) => 5,
    }
}

fn fo_at(f: &FoFormula, ctx: u8, out: &mut String) {
    use FoFormula::*;
    let prec = fo_prec(f);
    if prec < ctx {
        out.push('(');
        fo_at(f, 0, out);
        out.push(')');
        return;
    }
    match f {
        True => out.push_str("true"),
        Pred(p, v) => {
            out.push_str(p);
            out.push('(');
            out.push_str(v);
            out.push(')');
        }
        Le(a, b) => {
            out.push_str(a);
            out.push_str(" <= ");
            out.push_str(b);
        }
        Lt(a, b) => {
            out.push_str(a);
            out.push_str(" < ");
            out.push_str(b);
        }
        Not(a) if **a == True => out.push_str("false"),
        Not(a) => {
            out.push('!');
            fo_at(a, 4, out);
        }
        And(a, b) => {
            fo_at(a, 2, out);
            out.push_str(" & ");
            fo_at(b, 3, out);
        }
        Or(a, b) => {
            fo_at(a, 1, out);
            out.push_str(" | ");
            fo_at(b, 2, out);
        }
        Implies(a, b) => {
            fo_at(a, 1, out);
            out.push_str(" -> ");
            fo_at(b, 0, out);
        }
        Exists(x, a) => {
            out.push_str("exists ");
            out.push_str(x);
            out.push_str(" . ");
            fo_at(a, 0, out);
        }
        Forall(x, a) => {
            out.push_str("forall ");
            out.push_str(x);
            out.push_str(" . ");
            fo_at(a, 0, out);
        }
    }
}
