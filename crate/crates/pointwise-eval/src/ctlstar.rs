//! Finitary CTL*: temporal operators range over the positions of one
//! finite trace, and the finitary path quantifier restarts on fresh
//! bounded traces from the current state.

use crate::{holds_at, traces_from};
use hs_eval::{Verdict, Witness};
use kripke_model::{enumerate_traces, Kripke, Trace};
use logic_core::PointFormula;

/// ρ, i ⊨ f with ∃_f ranging over traces of length ≤ bound from ρ(i).
pub fn eval_finitary_ctlstar(
    k: &Kripke,
    rho: &Trace,
    i: usize,
    f: &PointFormula,
    bound: usize,
) -> bool {
    assert!(k.is_trace(rho), "not a trace of the structure");
    assert!(i < rho.len(), "position outside the trace");
    assert!(bound >= 1);
    go(k, rho, i, f, bound)
}

fn go(k: &Kripke, rho: &Trace, i: usize, f: &PointFormula, m: usize) -> bool {
    use PointFormula::*;
    match f {
        True => true,
        Atom(a) => holds_at(k, rho[i], a),
        Not(a) => !go(k, rho, i, a, m),
        And(a, b) => go(k, rho, i, a, m) && go(k, rho, i, b, m),
        Or(a, b) => go(k, rho, i, a, m) || go(k, rho, i, b, m),
        Implies(a, b) => !go(k, rho, i, a, m) || go(k, rho, i, b, m),
        Next(a) => i + 1 < rho.len() && go(k, rho, i + 1, a, m),
        Until(a, b) => {
            for j in i..rho.len() {
                if go(k, rho, j, b, m) {
                    return true;
                }
                if !go(k, rho, j, a, m) {
                    return false;
                }
            }
            false
        }
        Ev(a) => (i..rho.len()).any(|j| go(k, rho, j, a, m)),
        Alw(a) => (i..rho.len()).all(|j| go(k, rho, j, a, m)),
        Prev(a) => i > 0 && go(k, rho, i - 1, a, m),
        Since(a, b) => {
            for j in (0..=i).rev() {
                if go(k, rho, j, b, m) {
                    return true;
                }
                if !go(k, rho, j, a, m) {
                    return false;
                }
            }
            false
        }
        EvPast(a) => (0..=i).any(|j| go(k, rho, j, a, m)),
        AlwPast(a) => (0..=i).all(|j| go(k, rho, j, a, m)),
        ExistsF(a) => traces_from(k, rho[i], m).iter().any(|r| go(k, r, 0, a, m)),
        ForallF(a) => traces_from(k, rho[i], m).iter().all(|r| go(k, r, 0, a, m)),
        Var(_) | Bind(..) | Exists(_) | Forall(_) => {
            panic!("finitary CTL* has no hybrid machinery or plain path quantifiers")
        }
    }
}

/// Checks `f` at position 0 of every initial trace of length ≤ bound.
pub fn check_finitary_ctlstar(k: &Kripke, f: &PointFormula, bound: usize) -> Verdict {
    for t in enumerate_traces(k, bound, true) {
        if !eval_finitary_ctlstar(k, &t, 0, f, bound) {
            return Verdict::failed(Witness::Trace(t), true, false);
        }
    }
    Verdict::positive(true)
}
