//! LTL into the AB fragment of HS under the trace-based semantics.
//!
//! The contract is pointwise: π, i ⊨ ψ iff the induced interval structure
//! satisfies the translation on the point interval [i, i]; at the model
//! level, K ⊨ ψ iff K ⊨ length₁ → ltl_to_ab(ψ) linearly.

use crate::TranslateError;
use logic_core::{build_length, HsFormula, PointFormula, Rel};

/// Translates a pure-future LTL formula into an AB formula. F/G are
/// expanded to U first so the clause set is total.
pub fn ltl_to_ab(f: &PointFormula) -> Result<HsFormula, TranslateError> {
    if !f.is_pure_ltl() {
        return Err(TranslateError::NotPureLtl);
    }
    Ok(go(f))
}

fn len(n: usize) -> HsFormula {
    build_length(n).expect("n >= 1")
}

/// ⟨A⟩(length₁ ∧ φ): the point met by the current interval satisfies φ.
fn at_next_point(phi: HsFormula) -> HsFormula {
    HsFormula::ex(Rel::A, HsFormula::and(len(1), phi))
}

fn go(f: &PointFormula) -> HsFormula {
    use PointFormula::*;
    match f {
        True => HsFormula::True,
        Atom(p) => HsFormula::atom(p.clone()),
        Not(a) => HsFormula::not(go(a)),
        And(a, b) => HsFormula::and(go(a), go(b)),
        Or(a, b) => HsFormula::or(go(a), go(b)),
        Implies(a, b) => HsFormula::implies(go(a), go(b)),
        // step to the two-point interval met at i, then to its final point
        Next(a) => HsFormula::ex(
            Rel::A,
            HsFormula::and(len(2), at_next_point(go(a))),
        ),
        // some met interval [i, j] whose final point satisfies ψ₂ while the
        // final point of every proper prefix satisfies ψ₁
        Until(a, b) => HsFormula::ex(
            Rel::A,
            HsFormula::and(
                at_next_point(go(b)),
                HsFormula::univ(Rel::B, at_next_point(go(a))),
            ),
        ),
        Ev(a) => go(&PointFormula::until(True, (**a).clone())),
        Alw(a) => go(&PointFormula::not(PointFormula::until(
            True,
            PointFormula::not((**a).clone()),
        ))),
        _ => unreachable!("guarded by is_pure_ltl"),
    }
}
