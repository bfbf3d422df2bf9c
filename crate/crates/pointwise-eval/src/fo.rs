//! First-order formulas over the positions of an ultimately periodic path,
//! with quantifiers bounded by a horizon. A caller comparing against the
//! genuine infinite-domain semantics should pick a horizon of at least
//! |stem| + (vars + 1)·|loop| past every free-variable value.

use crate::holds_at;
use kripke_model::{Kripke, Lasso};
use logic_core::FoFormula;
use std::collections::BTreeMap;

/// π ⊨ f under `assign`, with ∃/∀ ranging over positions 0 ..= horizon.
pub fn eval_fo(
    k: &Kripke,
    pi: &Lasso,
    assign: &BTreeMap<String, usize>,
    f: &FoFormula,
    horizon: usize,
) -> bool {
    use FoFormula::*;
    match f {
        True => true,
        Pred(p, z) => holds_at(k, pi.at(val(assign, z)), p),
        Le(a, b) => val(assign, a) <= val(assign, b),
        Lt(a, b) => val(assign, a) < val(assign, b),
        Not(a) => !eval_fo(k, pi, assign, a, horizon),
        And(a, b) => eval_fo(k, pi, assign, a, horizon) && eval_fo(k, pi, assign, b, horizon),
        Or(a, b) => eval_fo(k, pi, assign, a, horizon) || eval_fo(k, pi, assign, b, horizon),
        Implies(a, b) => {
            !eval_fo(k, pi, assign, a, horizon) || eval_fo(k, pi, assign, b, horizon)
        }
        Exists(z, a) => (0..=horizon).any(|v| {
            let mut a2 = assign.clone();
            a2.insert(z.clone(), v);
            eval_fo(k, pi, &a2, a, horizon)
        }),
        Forall(z, a) => (0..=horizon).all(|v| {
            let mut a2 = assign.clone();
            a2.insert(z.clone(), v);
            eval_fo(k, pi, &a2, a, horizon)
        }),
    }
}

fn val(assign: &BTreeMap<String, usize>, z: &str) -> usize {
    *assign
        .get(z)
        .unwrap_or_else(|| panic!("unbound first-order variable {z}"))
}
