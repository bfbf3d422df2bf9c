//! Pointwise evaluators: LTL over lassos, finitary CTL*, hybrid linear-past
//! logic, first-order formulas over path positions, and membership in the
//! action languages of finite-word formulas.

mod ctlstar;
mod fo;
mod hybrid;
mod lact;
mod ltl;

pub use ctlstar::{check_finitary_ctlstar, eval_finitary_ctlstar};
pub use fo::eval_fo;
pub use hybrid::{
    check_hybrid, check_hybrid_finitary, eval_hybrid, eval_hybrid_finitary, Assignment,
};
pub use lact::{lact_enumerate, lact_member, lact_member_hs, lact_member_ltl};
pub use ltl::{check_ltl, eval_ltl, temporal_depth};

use kripke_model::{Kripke, StateId, Trace};

/// True iff atom `a` labels state `s` (pointwise, not homogeneous).
pub(crate) fn holds_at(k: &Kripke, s: StateId, a: &str) -> bool {
    match k.atom_index(a) {
        Some(b) => k.label_mask(s) >> b & 1 == 1,
        None => false,
    }
}

/// All traces starting at `s` of length 1 ..= max_len, in length-lex order.
pub(crate) fn traces_from(k: &Kripke, s: StateId, max_len: usize) -> Vec<Trace> {
    let mut out = vec![vec![s]];
    let mut layer = vec![vec![s]];
    for _ in 1..max_len {
        let mut next: Vec<Trace> = Vec::new();
        for t in &layer {
            for &v in k.succ(*t.last().unwrap()) {
                let mut t2 = t.clone();
                t2.push(v);
                next.push(t2);
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// All traces extending `prefix` (inclusive) up to `max_len` states.
pub(crate) fn extensions_of(k: &Kripke, prefix: &[StateId], max_len: usize) -> Vec<Trace> {
    let mut out = vec![prefix.to_vec()];
    let mut layer = vec![prefix.to_vec()];
    while layer.first().map_or(false, |t| t.len() < max_len) {
        let mut next: Vec<Trace> = Vec::new();
        for t in &layer {
            for &v in k.succ(*t.last().unwrap()) {
                let mut t2 = t.clone();
                t2.push(v);
                next.push(t2);
            }
        }
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
