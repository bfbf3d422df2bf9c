//! Trace profiles on the chain family K_n and the relation R(h).

use kripke_model::{kn, Kripke, StateId, Trace};
use std::collections::VecDeque;

/// The three quantities classifying a trace of K_n: the number of
/// unlabeled states, the number of p-states, and the state count of the
/// minimal trace from the last state to s_{2n} (0 once p has been hit).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceProfile {
    pub n_empty: usize,
    pub n_p: usize,
    pub d_p: usize,
}

/// Profile of `t` on kn(n). Lengths count states, so the one-state trace
/// s_{2n} has d_p = 1 and s0 has d_p = 2n+1.
pub fn profile(n: usize, t: &Trace) -> TraceProfile {
    profile_in(&kn(n), n, t)
}

/// Profile against an already-built kn(n), for bulk callers.
pub(crate) fn profile_in(k: &Kripke, n: usize, t: &Trace) -> TraceProfile {
    assert!(k.is_trace(t), "not a trace of kn({n})");
    let p = k.atom_index("p").expect("kn labels p");
    let n_p = t
        .iter()
        .filter(|&&s| k.label_mask(s) >> p & 1 == 1)
        .count();
    let n_empty = t.len() - n_p;
    let d_p = if n_p > 0 {
        0
    } else {
        let target = k.state_index(&format!("s{}", 2 * n)).expect("s_2n exists");
        min_trace_len(&k, *t.last().unwrap(), target)
    };
    TraceProfile { n_empty, n_p, d_p }
}

/// State count of the shortest trace from `from` to `to`.
fn min_trace_len(k: &Kripke, from: StateId, to: StateId) -> usize {
    let mut dist = vec![usize::MAX; k.n_states()];
    dist[from as usize] = 1;
    let mut queue = VecDeque::from([from]);
    while let Some(s) = queue.pop_front() {
        if s == to {
            return dist[s as usize];
        }
        for &v in k.succ(s) {
            if dist[v as usize] == usize::MAX {
                dist[v as usize] = dist[s as usize] + 1;
                queue.push_back(v);
            }
        }
    }
    panic!("no trace reaches the target state");
}

/// The relation R(h) on traces of kn(n): equal p-parts, and ∅-parts and
/// distances that are equal or both at least h.
pub fn h_compatible(n: usize, t1: &Trace, t2: &Trace, h: usize) -> bool {
    assert!(1 <= h && h <= n, "require 1 <= h <= n");
    compat(profile(n, t1), profile(n, t2), h)
}

pub(crate) fn compat(p1: TraceProfile, p2: TraceProfile, h: usize) -> bool {
    p1.n_p == p2.n_p
        && (p1.n_empty == p2.n_empty || (p1.n_empty >= h && p2.n_empty >= h))
        && (p1.d_p == p2.d_p || (p1.d_p >= h && p2.d_p >= h))
}
