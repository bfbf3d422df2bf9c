//! AST definitions shared by every dialect.

use std::fmt;

/// Interval (Allen) relations. The twelve proper HS modalities plus `G`,
/// the derived "some subinterval, including the interval itself" operator,
/// which `expand_derived` eliminates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rel {
    A,
    ABar,
    B,
    BBar,
    E,
    EBar,
    L,
    LBar,
    D,
    DBar,
    O,
    OBar,
    G,
}

impl Rel {
    pub const ALL: [Rel; 12] = [
        Rel::A,
        Rel::ABar,
        Rel::B,
        Rel::BBar,
        Rel::E,
        Rel::EBar,
        Rel::L,
        Rel::LBar,
        Rel::D,
        Rel::DBar,
        Rel::O,
        Rel::OBar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rel::A => "A",
            Rel::ABar => "Abar",
            Rel::B => "B",
            Rel::BBar => "Bbar",
            Rel::E => "E",
            Rel::EBar => "Ebar",
            Rel::L => "L",
            Rel::LBar => "Lbar",
            Rel::D => "D",
            Rel::DBar => "Dbar",
            Rel::O => "O",
            Rel::OBar => "Obar",
            Rel::G => "G",
        }
    }

    pub fn from_name(s: &str) -> Option<Rel> {
        Some(match s {
            "A" => Rel::A,
            "Abar" => Rel::ABar,
            "B" => Rel::B,
            "Bbar" => Rel::BBar,
            "E" => Rel::E,
            "Ebar" => Rel::EBar,
            "L" => Rel::L,
            "Lbar" => Rel::LBar,
            "D" => Rel::D,
            "Dbar" => Rel::DBar,
            "O" => Rel::O,
            "Obar" => Rel::OBar,
            "G" => Rel::G,
            _ => return None,
        })
    }

    /// True for the core relations kept by `expand_derived`.
    pub fn is_core(self) -> bool {
        matches!(self, Rel::B | Rel::BBar | Rel::E | Rel::EBar)
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Existential `<X>` vs universal `[X]` modality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Ex,
    Univ,
}

/// HS interval formulas.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HsFormula {
    Atom(String),
    True,
    Not(Box<HsFormula>),
    And(Box<HsFormula>, Box<HsFormula>),
    Or(Box<HsFormula>, Box<HsFormula>),
    Implies(Box<HsFormula>, Box<HsFormula>),
    Modal(Rel, Polarity, Box<HsFormula>),
}

impl HsFormula {
    pub fn atom(s: impl Into<String>) -> Self {
        HsFormula::Atom(s.into())
    }
    pub fn falsum() -> Self {
        HsFormula::Not(Box::new(HsFormula::True))
    }
    pub fn not(a: HsFormula) -> Self {
        HsFormula::Not(Box::new(a))
    }
    pub fn and(a: HsFormula, b: HsFormula) -> Self {
        HsFormula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: HsFormula, b: HsFormula) -> Self {
        HsFormula::Or(Box::new(a), Box::new(b))
    }
    pub fn implies(a: HsFormula, b: HsFormula) -> Self {
        HsFormula::Implies(Box::new(a), Box::new(b))
    }
    pub fn ex(r: Rel, a: HsFormula) -> Self {
        HsFormula::Modal(r, Polarity::Ex, Box::new(a))
    }
    pub fn univ(r: Rel, a: HsFormula) -> Self {
        HsFormula::Modal(r, Polarity::Univ, Box::new(a))
    }

    /// Conjunction of possibly many formulas; ⊤ when empty.
    pub fn conj(items: Vec<HsFormula>) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => HsFormula::True,
            Some(first) => it.fold(first, HsFormula::and),
        }
    }

    /// Disjunction of possibly many formulas; ⊥ when empty.
    pub fn disj(items: Vec<HsFormula>) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => HsFormula::falsum(),
            Some(first) => it.fold(first, HsFormula::or),
        }
    }

    /// Relations occurring anywhere in the formula.
    pub fn relations(&self) -> Vec<Rel> {
        let mut out = Vec::new();
        self.walk(&mut |f| {
            if let HsFormula::Modal(r, _, _) = f {
                if !out.contains(r) {
                    out.push(*r);
                }
            }
        });
        out
    }

    /// Atom names occurring anywhere in the formula.
    pub fn atoms(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.walk(&mut |f| {
            if let HsFormula::Atom(a) = f {
                if !out.contains(a) {
                    out.push(a.clone());
                }
            }
        });
        out
    }

    fn walk(&self, visit: &mut impl FnMut(&HsFormula)) {
        visit(self);
        match self {
            HsFormula::Atom(_) | HsFormula::True => {}
            HsFormula::Not(a) | HsFormula::Modal(_, _, a) => a.walk(visit),
            HsFormula::And(a, b) | HsFormula::Or(a, b) | HsFormula::Implies(a, b) => {
                a.walk(visit);
                b.walk(visit);
            }
        }
    }
}

/// Point-based formulas: LTL with past, CTL*, finitary CTL*, and hybrid
/// CTL* with position variables and the `down` binder, in one AST.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointFormula {
    Atom(String),
    True,
    Not(Box<PointFormula>),
    And(Box<PointFormula>, Box<PointFormula>),
    Or(Box<PointFormula>, Box<PointFormula>),
    Implies(Box<PointFormula>, Box<PointFormula>),
    Next(Box<PointFormula>),
    Until(Box<PointFormula>, Box<PointFormula>),
    Ev(Box<PointFormula>),
    Alw(Box<PointFormula>),
    Prev(Box<PointFormula>),
    Since(Box<PointFormula>, Box<PointFormula>),
    EvPast(Box<PointFormula>),
    AlwPast(Box<PointFormula>),
    Exists(Box<PointFormula>),
    Forall(Box<PointFormula>),
    ExistsF(Box<PointFormula>),
    ForallF(Box<PointFormula>),
    Var(String),
    Bind(String, Box<PointFormula>),
}

impl PointFormula {
    pub fn atom(s: impl Into<String>) -> Self {
        PointFormula::Atom(s.into())
    }
    pub fn falsum() -> Self {
        PointFormula::Not(Box::new(PointFormula::True))
    }
    pub fn not(a: PointFormula) -> Self {
        PointFormula::Not(Box::new(a))
    }
    pub fn and(a: PointFormula, b: PointFormula) -> Self {
        PointFormula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: PointFormula, b: PointFormula) -> Self {
        PointFormula::Or(Box::new(a), Box::new(b))
    }
    pub fn implies(a: PointFormula, b: PointFormula) -> Self {
        PointFormula::Implies(Box::new(a), Box::new(b))
    }
    pub fn next(a: PointFormula) -> Self {
        PointFormula::Next(Box::new(a))
    }
    pub fn until(a: PointFormula, b: PointFormula) -> Self {
        PointFormula::Until(Box::new(a), Box::new(b))
    }
    pub fn ev(a: PointFormula) -> Self {
        PointFormula::Ev(Box::new(a))
    }
    pub fn alw(a: PointFormula) -> Self {
        PointFormula::Alw(Box::new(a))
    }
    pub fn prev(a: PointFormula) -> Self {
        PointFormula::Prev(Box::new(a))
    }
    pub fn since(a: PointFormula, b: PointFormula) -> Self {
        PointFormula::Since(Box::new(a), Box::new(b))
    }
    pub fn ev_past(a: PointFormula) -> Self {
        PointFormula::EvPast(Box::new(a))
    }
    pub fn alw_past(a: PointFormula) -> Self {
        PointFormula::AlwPast(Box::new(a))
    }
    pub fn bind(x: impl Into<String>, a: PointFormula) -> Self {
        PointFormula::Bind(x.into(), Box::new(a))
    }
    pub fn var(x: impl Into<String>) -> Self {
        PointFormula::Var(x.into())
    }

    /// Pure LTL: no past operators, no quantifiers, no variables/binders.
    pub fn is_pure_ltl(&self) -> bool {
        use PointFormula::*;
        match self {
            Atom(_) | True => true,
            Not(a) | Next(a) | Ev(a) | Alw(a) => a.is_pure_ltl(),
            And(a, b) | Or(a, b) | Implies(a, b) | Until(a, b) => {
                a.is_pure_ltl() && b.is_pure_ltl()
            }
            _ => false,
        }
    }

    /// Pure-past: no future operators, no quantifiers, no variables/binders.
    pub fn is_pure_past(&self) -> bool {
        use PointFormula::*;
        match self {
            Atom(_) | True => true,
            Not(a) | Prev(a) | EvPast(a) | AlwPast(a) => a.is_pure_past(),
            And(a, b) | Or(a, b) | Implies(a, b) | Since(a, b) => {
                a.is_pure_past() && b.is_pure_past()
            }
            _ => false,
        }
    }

    /// True when no past operator occurs anywhere.
    pub fn is_past_free(&self) -> bool {
        use PointFormula::*;
        match self {
            Atom(_) | True | Var(_) => true,
            Prev(_) | Since(_, _) | EvPast(_) | AlwPast(_) => false,
            Not(a) | Next(a) | Ev(a) | Alw(a) | Exists(a) | Forall(a) | ExistsF(a)
            | ForallF(a) | Bind(_, a) => a.is_past_free(),
            And(a, b) | Or(a, b) | Implies(a, b) | Until(a, b) => {
                a.is_past_free() && b.is_past_free()
            }
        }
    }

    /// Free position variables, in first-occurrence order.
    pub fn free_vars(&self) -> Vec<String> {
        fn go(f: &PointFormula, bound: &mut Vec<String>, out: &mut Vec<String>) {
            use PointFormula::*;
            match f {
                Var(x) => {
                    if !bound.contains(x) && !out.contains(x) {
                        out.push(x.clone());
                    }
                }
                Atom(_) | True => {}
                Bind(x, a) => {
                    bound.push(x.clone());
                    go(a, bound, out);
                    bound.pop();
                }
                Not(a) | Next(a) | Ev(a) | Alw(a) | Prev(a) | EvPast(a) | AlwPast(a)
                | Exists(a) | Forall(a) | ExistsF(a) | ForallF(a) => go(a, bound, out),
                And(a, b) | Or(a, b) | Implies(a, b) | Until(a, b) | Since(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }
}

/// First-order formulas over labeled paths, the target of the
/// interval-to-FO translation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FoFormula {
    True,
    Pred(String, String),
    Le(String, String),
    Lt(String, String),
    Not(Box<FoFormula>),
    And(Box<FoFormula>, Box<FoFormula>),
    Or(Box<FoFormula>, Box<FoFormula>),
    Implies(Box<FoFormula>, Box<FoFormula>),
    Exists(String, Box<FoFormula>),
    Forall(String, Box<FoFormula>),
}

impl FoFormula {
    pub fn pred(p: impl Into<String>, v: impl Into<String>) -> Self {
        FoFormula::Pred(p.into(), v.into())
    }
    pub fn le(a: impl Into<String>, b: impl Into<String>) -> Self {
        FoFormula::Le(a.into(), b.into())
    }
    pub fn lt(a: impl Into<String>, b: impl Into<String>) -> Self {
        FoFormula::Lt(a.into(), b.into())
    }
    pub fn not(a: FoFormula) -> Self {
        FoFormula::Not(Box::new(a))
    }
    pub fn and(a: FoFormula, b: FoFormula) -> Self {
        FoFormula::And(Box::new(a), Box::new(b))
    }
    pub fn or(a: FoFormula, b: FoFormula) -> Self {
        FoFormula::Or(Box::new(a), Box::new(b))
    }
    pub fn implies(a: FoFormula, b: FoFormula) -> Self {
        FoFormula::Implies(Box::new(a), Box::new(b))
    }
    pub fn exists(x: impl Into<String>, a: FoFormula) -> Self {
        FoFormula::Exists(x.into(), Box::new(a))
    }
    pub fn forall(x: impl Into<String>, a: FoFormula) -> Self {
        FoFormula::Forall(x.into(), Box::new(a))
    }

    /// Free variables, in first-occurrence order.
    pub fn free_vars(&self) -> Vec<String> {
        fn go(f: &FoFormula, bound: &mut Vec<String>, out: &mut Vec<String>) {
            use FoFormula::*;
            let touch = |v: &String, bound: &Vec<String>, out: &mut Vec<String>| {
                if !bound.contains(v) && !out.contains(v) {
                    out.push(v.clone());
                }
            };
            match f {
                True => {}
                Pred(_, v) => touch(v, bound, out),
                Le(a, b) | Lt(a, b) => {
                    touch(a, bound, out);
                    touch(b, bound, out);
                }
                Not(a) => go(a, bound, out),
                And(a, b) | Or(a, b) | Implies(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
                Exists(x, a) | Forall(x, a) => {
                    bound.push(x.clone());
                    go(a, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }
}

/// Tagged union across dialects.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Hs(HsFormula),
    Point(PointFormula),
    Fo(FoFormula),
}

impl Formula {
    pub fn as_hs(&self) -> Option<&HsFormula> {
        match self {
            Formula::Hs(f) => Some(f),
            _ => None,
        }
    }
    pub fn as_point(&self) -> Option<&PointFormula> {
        match self {
            Formula::Point(f) => Some(f),
            _ => None,
        }
    }
    pub fn as_fo(&self) -> Option<&FoFormula> {
        match self {
            Formula::Fo(f) => Some(f),
            _ => None,
        }
    }
}

/// Surface syntax dialect, always selected explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dialect {
    Hs,
    Point,
    Fo,
}
