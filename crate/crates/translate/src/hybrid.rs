//! HS under the computation-tree semantics into hybrid linear-past logic.
//!
//! The current interval [x, i] is carried by the bound variable x (its
//! start) and the evaluation position i (its end). Prefixes move the end
//! into the past, suffixes rebind the start, and right extensions use the
//! memoryful path quantifier; the sentence form binds x at the origin and
//! quantifies every prefix end with G.

use crate::TranslateError;
use logic_core::{expand_derived, HsFormula, PointFormula, Polarity, Rel};

/// Translates an HS formula (derived modalities expanded first) into a
/// well-formed hybrid sentence ↓x.G f(φ,x). With `finitary` set, the path
/// quantifier of the ⟨B̄⟩ clause is the finitary ∃_f. Fresh variables are
/// drawn from a deterministic counter y0, y1, ….
pub fn hs_ct_to_hybrid(f: &HsFormula, finitary: bool) -> Result<PointFormula, TranslateError> {
    let core = expand_derived(f);
    let mut counter = 0usize;
    let open = t(&core, finitary, &mut counter);
    Ok(PointFormula::bind("x", PointFormula::alw(open)))
}

fn fresh(counter: &mut usize) -> String {
    let y = format!("y{counter}");
    *counter += 1;
    y
}

fn x() -> PointFormula {
    PointFormula::var("x")
}

fn t(f: &HsFormula, fin: bool, c: &mut usize) -> PointFormula {
    use PointFormula as P;
    match f {
        HsFormula::True => P::True,
        // G⁻((F⁻x) → p): homogeneity over the positions from x to the end
        HsFormula::Atom(p) => P::alw_past(P::implies(P::ev_past(x()), P::atom(p.clone()))),
        HsFormula::Not(a) => P::not(t(a, fin, c)),
        HsFormula::And(a, b) => P::and(t(a, fin, c), t(b, fin, c)),
        HsFormula::Or(a, b) => P::or(t(a, fin, c), t(b, fin, c)),
        HsFormula::Implies(a, b) => P::implies(t(a, fin, c), t(b, fin, c)),
        HsFormula::Modal(r, Polarity::Ex, a) => {
            let body = t(a, fin, c);
            match r {
                // X⁻F⁻(f(ψ,x) ∧ F⁻x): some strictly earlier end, at or
                // after the start
                Rel::B => P::prev(P::ev_past(P::and(body, P::ev_past(x())))),
                // ∃(XF f(ψ,x)) ∧ F⁻x: a continuation with a later end
                Rel::BBar => {
                    let q = P::next(P::ev(body));
                    let quant = if fin {
                        P::ExistsF(Box::new(q))
                    } else {
                        P::Exists(Box::new(q))
                    };
                    P::and(quant, P::ev_past(x()))
                }
                // ↓y.F⁻(x ∧ XF↓x.F(y ∧ f(ψ,x))): move the start strictly
                // right, remembering the end in y
                Rel::E => {
                    let y = fresh(c);
                    P::bind(
                        y.clone(),
                        P::ev_past(P::and(
                            x(),
                            P::next(P::ev(P::bind(
                                "x",
                                P::ev(P::and(P::var(y), body)),
                            ))),
                        )),
                    )
                }
                // ↓y.F⁻((XF x) ∧ ↓x.F(y ∧ f(ψ,x))): move the start
                // strictly left
                Rel::EBar => {
                    let y = fresh(c);
                    P::bind(
                        y.clone(),
                        P::ev_past(P::and(
                            P::next(P::ev(x())),
                            P::bind("x", P::ev(P::and(P::var(y), body))),
                        )),
                    )
                }
                _ => unreachable!("expand_derived leaves only core relations"),
            }
        }
        HsFormula::Modal(r, Polarity::Univ, a) => {
            // [X]φ = ¬⟨X⟩¬φ
            let ex = HsFormula::ex(*r, HsFormula::not((**a).clone()));
            P::not(t(&ex, fin, c))
        }
    }
}

/// Both syntactic well-formedness conditions: every path-quantified
/// subformula has at most one free variable, and when it has one, the
/// quantifier occurs conjoined with F⁻x (in either order).
pub fn is_well_formed(f: &PointFormula) -> bool {
    go(f, None)
}

fn guard_of(f: &PointFormula) -> Option<&str> {
    if let PointFormula::EvPast(a) = f {
        if let PointFormula::Var(x) = &**a {
            return Some(x);
        }
    }
    None
}

fn go(f: &PointFormula, guard: Option<&str>) -> bool {
    use PointFormula as P;
    match f {
        P::And(a, b) => go(a, guard_of(b)) && go(b, guard_of(a)),
        P::Exists(a) | P::Forall(a) | P::ExistsF(a) | P::ForallF(a) => {
            let fv = a.free_vars();
            fv.len() <= 1
                && (fv.is_empty() || guard == Some(fv[0].as_str()))
                && go(a, None)
        }
        P::True | P::Atom(_) | P::Var(_) => true,
        P::Not(a) | P::Next(a) | P::Ev(a) | P::Alw(a) | P::Prev(a) | P::EvPast(a)
        | P::AlwPast(a) | P::Bind(_, a) => go(a, None),
        P::Or(a, b) | P::Implies(a, b) | P::Until(a, b) | P::Since(a, b) => {
            go(a, None) && go(b, None)
        }
    }
}
