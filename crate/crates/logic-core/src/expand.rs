//! Rewriting of derived HS modalities into the {B, Bbar, E, Ebar} core.
//!
//! The expansions of the non-core modalities are the standard ones for the
//! non-strict setting (point intervals allowed); each is validated against
//! the native Allen-relation evaluator by brute force in the hs-eval tests.

use crate::ast::{HsFormula, Polarity, Rel};
use crate::build_length;

/// Rewrites every occurrence of A, Abar, L, Lbar, D, Dbar, O, Obar and the
/// subinterval operator G into the core relations. Idempotent; truth
/// preserving under all three semantics.
pub fn expand_derived(f: &HsFormula) -> HsFormula {
    use HsFormula::*;
    match f {
        Atom(_) | True => f.clone(),
        Not(a) => HsFormula::not(expand_derived(a)),
        And(a, b) => HsFormula::and(expand_derived(a), expand_derived(b)),
        Or(a, b) => HsFormula::or(expand_derived(a), expand_derived(b)),
        Implies(a, b) => HsFormula::implies(expand_derived(a), expand_derived(b)),
        Modal(r, pol, a) if r.is_core() => HsFormula::Modal(*r, *pol, Box::new(expand_derived(a))),
        Modal(r, Polarity::Ex, a) => expand_derived(&expand_ex(*r, (**a).clone())),
        Modal(r, Polarity::Univ, a) => {
            // [X]φ = ¬⟨X⟩¬φ for derived X.
            let inner = expand_ex(*r, HsFormula::not((**a).clone()));
            expand_derived(&HsFormula::not(inner))
        }
    }
}

/// One-step expansion of an existential derived modality; the result may
/// still contain derived modalities (handled by the recursive caller).
fn expand_ex(r: Rel, phi: HsFormula) -> HsFormula {
    use HsFormula as H;
    let not_len1 = || H::not(build_length(1).expect("n >= 1"));
    match r {
        // ⟨A⟩φ = ([E]⊥ ∧ (φ ∨ ⟨B̄⟩φ)) ∨ ⟨E⟩([E]⊥ ∧ (φ ∨ ⟨B̄⟩φ)):
        // shrink to the final point, then either stay (point meets itself
        // vacuously via φ on the point) or grow to the right.
        Rel::A => {
            let at_point = H::and(
                H::univ(Rel::E, H::falsum()),
                H::or(phi.clone(), H::ex(Rel::BBar, phi)),
            );
            H::or(at_point.clone(), H::ex(Rel::E, at_point))
        }
        // Mirror image of ⟨A⟩ at the left endpoint.
        Rel::ABar => {
            let at_point = H::and(
                H::univ(Rel::B, H::falsum()),
                H::or(phi.clone(), H::ex(Rel::EBar, phi)),
            );
            H::or(at_point.clone(), H::ex(Rel::B, at_point))
        }
        // Strictly-later intervals: two meets chained through a length ≥ 2 gap.
        Rel::L => H::ex(Rel::A, H::and(not_len1(), H::ex(Rel::A, phi))),
        Rel::LBar => H::ex(Rel::ABar, H::and(not_len1(), H::ex(Rel::ABar, phi))),
        // Strict subintervals / superintervals.
        Rel::D => H::ex(Rel::B, H::ex(Rel::E, phi)),
        Rel::DBar => H::ex(Rel::BBar, H::ex(Rel::EBar, phi)),
        // Overlaps: a proper suffix of length ≥ 2, extended to the right.
        Rel::O => H::ex(Rel::E, H::and(not_len1(), H::ex(Rel::BBar, phi))),
        Rel::OBar => H::ex(Rel::B, H::and(not_len1(), H::ex(Rel::EBar, phi))),
        // Subintervals including the interval itself.
        Rel::G => H::or(
            phi.clone(),
            H::or(
                H::ex(Rel::B, phi.clone()),
                H::or(H::ex(Rel::E, phi.clone()), H::ex(Rel::B, H::ex(Rel::E, phi))),
            ),
        ),
        Rel::B | Rel::BBar | Rel::E | Rel::EBar => unreachable!("core relation"),
    }
}
