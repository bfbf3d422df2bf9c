//! Formula ASTs for the interval-logic workbench: HS formulas, point-based
//! formulas (LTL with past, CTL*, finitary CTL*, hybrid CTL* with binders),
//! and first-order formulas over paths; plus parsing, rendering, the size
//! metric, and expansion of derived HS modalities into the B/E core.

pub mod ast;
pub mod expand;
pub mod parse;
pub mod render;

pub use ast::{Dialect, FoFormula, Formula, HsFormula, PointFormula, Polarity, Rel};
pub use expand::expand_derived;
pub use parse::{parse, parse_fo_with_free, ParseError};
pub use render::render;

/// Number of AST nodes of a formula. F/G shorthands count as one node each;
/// derived HS modalities count as one node before expansion.
pub fn formula_size(f: &Formula) -> usize {
    match f {
        Formula::Hs(h) => hs_size(h),
        Formula::Point(p) => point_size(p),
        Formula::Fo(q) => fo_size(q),
    }
}

pub fn hs_size(f: &HsFormula) -> usize {
    use HsFormula::*;
    match f {
        Atom(_) | True => 1,
        // ⊥ is stored as ¬⊤ but rendered (and counted) as one symbol
        Not(a) if **a == True => 1,
        Not(a) => 1 + hs_size(a),
        And(a, b) | Or(a, b) | Implies(a, b) => 1 + hs_size(a) + hs_size(b),
        Modal(_, _, a) => 1 + hs_size(a),
    }
}

pub fn point_size(f: &PointFormula) -> usize {
    use PointFormula::*;
    match f {
        Atom(_) | True | Var(_) => 1,
        Not(a) if **a == True => 1,
        Not(a) | Next(a) | Ev(a) | Alw(a) | Prev(a) | EvPast(a) | AlwPast(a) => 1 + point_size(a),
        Exists(a) | Forall(a) | ExistsF(a) | ForallF(a) | Bind(_, a) => 1 + point_size(a),
        And(a, b) | Or(a, b) | Implies(a, b) | Until(a, b) | Since(a, b) => {
            1 + point_size(a) + point_size(b)
        }
    }
}

pub fn fo_size(f: &FoFormula) -> usize {
    use FoFormula::*;
    match f {
        True | Pred(_, _) | Le(_, _) | Lt(_, _) => 1,
        Not(a) if **a == True => 1,
        Not(a) => 1 + fo_size(a),
        And(a, b) | Or(a, b) | Implies(a, b) => 1 + fo_size(a) + fo_size(b),
        Exists(_, a) | Forall(_, a) => 1 + fo_size(a),
    }
}

/// The formula length_n = (⟨B⟩^{n-1} ⊤) ∧ ([B]^n ⊥), true exactly on
/// intervals spanning n states. Rejects n = 0.
pub fn build_length(n: usize) -> Result<HsFormula, BuildLengthError> {
    if n == 0 {
        return Err(BuildLengthError);
    }
    let mut ex = HsFormula::True;
    for _ in 0..n - 1 {
        ex = HsFormula::Modal(Rel::B, Polarity::Ex, Box::new(ex));
    }
    let mut univ = HsFormula::falsum();
    for _ in 0..n {
        univ = HsFormula::Modal(Rel::B, Polarity::Univ, Box::new(univ));
    }
    Ok(HsFormula::And(Box::new(ex), Box::new(univ)))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("length formula requires n >= 1")]
pub struct BuildLengthError;
