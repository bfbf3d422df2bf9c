//! Elimination of past operators at the initial position.
//!
//! At position 0 the past is empty: X⁻θ is false, θ₁U⁻θ₂ collapses to
//! θ₂, and F⁻/G⁻ collapse to their argument. The rewriting recurses
//! through the whole formula, so the position-0 congruence
//! `π,0 ⊨ f  iff  π,0 ⊨ eliminate_initial_past(f)` is guaranteed when no
//! past operator occurs beneath a future operator or a path quantifier
//! (in particular for pure-past formulas, possibly over letters standing
//! for future-only subformulas).

use logic_core::PointFormula;

pub fn eliminate_initial_past(f: &PointFormula) -> PointFormula {
    use PointFormula as P;
    match f {
        P::Prev(_) => P::falsum(),
        P::Since(_, b) => eliminate_initial_past(b),
        P::EvPast(a) | P::AlwPast(a) => eliminate_initial_past(a),
        P::True | P::Atom(_) | P::Var(_) => f.clone(),
        P::Not(a) => P::not(eliminate_initial_past(a)),
        P::And(a, b) => P::and(eliminate_initial_past(a), eliminate_initial_past(b)),
        P::Or(a, b) => P::or(eliminate_initial_past(a), eliminate_initial_past(b)),
        P::Implies(a, b) => P::implies(eliminate_initial_past(a), eliminate_initial_past(b)),
        P::Next(a) => P::next(eliminate_initial_past(a)),
        P::Until(a, b) => P::until(eliminate_initial_past(a), eliminate_initial_past(b)),
        P::Ev(a) => P::ev(eliminate_initial_past(a)),
        P::Alw(a) => P::alw(eliminate_initial_past(a)),
        P::Exists(a) => P::Exists(Box::new(eliminate_initial_past(a))),
        P::Forall(a) => P::Forall(Box::new(eliminate_initial_past(a))),
        P::ExistsF(a) => P::ExistsF(Box::new(eliminate_initial_past(a))),
        P::ForallF(a) => P::ForallF(Box::new(eliminate_initial_past(a))),
        P::Bind(v, a) => P::Bind(v.clone(), Box::new(eliminate_initial_past(a))),
    }
}
