//! Bounded exhaustive verification of the compatibility lemma: R(h) pairs
//! survive prefixing and forward extension at R(⌊h/2⌋), suffixing at
//! R(h−1), and backward extension at R(h).

use crate::profile::{compat, profile_in};
use crate::{Report, TraceProfile};
use kripke_model::{enumerate_traces, kn, Kripke, Trace};

/// Checks the four matching properties for every ordered pair of R(h)
/// traces of kn(n) with lengths ≤ bound, using the canonical relation.
///
/// Works on deduplicated profile sets: the canonical relation only looks
/// at profiles, so each prefix/suffix/extension family collapses to a few
/// dozen profiles and the pair grid stays fast at bound 10.
pub fn verify_compatibility_lemma(n: usize, h: usize, bound: usize) -> Report {
    assert!(2 <= h && h <= n, "require 2 <= h <= n");
    let k = kn(n);
    let traces = enumerate_traces(&k, bound, false);
    let profiles: Vec<TraceProfile> = traces.iter().map(|t| profile_in(&k, n, t)).collect();
    let sets: Vec<FamilySets> = traces
        .iter()
        .map(|t| FamilySets::of(&k, n, t, bound, 2 * bound + 2 * n + 2))
        .collect();
    let hh = h / 2;
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for i in 0..traces.len() {
        for j in 0..traces.len() {
            if !compat(profiles[i], profiles[j], h) {
                continue;
            }
            checked += 1;
            let (r1, r2) = (&traces[i], &traces[j]);
            let (s1, s2) = (&sets[i], &sets[j]);
            for (what, left, right, hm) in [
                ("prefix", &s1.prefixes, &s2.prefixes, hh),
                ("suffix", &s1.suffixes, &s2.suffixes, h - 1),
                ("forward extension", &s1.fwd, &s2.fwd_cand, hh),
                ("backward extension", &s1.bwd, &s2.bwd_cand, h),
            ] {
                for (p, t) in left {
                    if !right.iter().any(|(q, _)| compat(*p, *q, hm)) {
                        violations.push(format!(
                            "{what} {} of {} has no partner on {}",
                            k.trace_names(t).join("·"),
                            k.trace_names(r1).join("·"),
                            k.trace_names(r2).join("·")
                        ));
                    }
                }
            }
        }
    }
    Report {
        title: format!("compatibility lemma n={n} h={h} bound={bound}"),
        checked,
        violations,
    }
}

/// The derived trace families of one trace, each deduplicated by profile
/// with a representative trace kept for violation messages. The `_cand`
/// variants are the candidate-side extension sets: a matching extension
/// may need to run past the bound (a full-length partner mirroring a
/// p-carrying extension of a short trace must still cross the whole
/// chain and match the p-count), so they run to 2·bound + 2n + 2.
struct FamilySets {
    prefixes: Vec<(TraceProfile, Trace)>,
    suffixes: Vec<(TraceProfile, Trace)>,
    fwd: Vec<(TraceProfile, Trace)>,
    fwd_cand: Vec<(TraceProfile, Trace)>,
    bwd: Vec<(TraceProfile, Trace)>,
    bwd_cand: Vec<(TraceProfile, Trace)>,
}

impl FamilySets {
    fn of(k: &Kripke, n: usize, t: &Trace, bound: usize, cand_bound: usize) -> FamilySets {
        let dedup = |items: Vec<Trace>| {
            let mut out: Vec<(TraceProfile, Trace)> = Vec::new();
            for w in items {
                let p = profile_in(k, n, &w);
                if !out.iter().any(|(q, _)| *q == p) {
                    out.push((p, w));
                }
            }
            out
        };
        FamilySets {
            prefixes: dedup((1..t.len()).map(|c| t[..c].to_vec()).collect()),
            suffixes: dedup((1..t.len()).map(|c| t[c..].to_vec()).collect()),
            fwd: dedup(forward_extensions(k, t, bound)),
            fwd_cand: dedup(forward_extensions(k, t, cand_bound)),
            bwd: dedup(backward_extensions(k, t, bound)),
            bwd_cand: dedup(backward_extensions(k, t, cand_bound)),
        }
    }
}

/// Same grid over an arbitrary candidate relation, evaluated directly on
/// traces, so perturbed relations can be shown to break the lemma. Keep
/// the bound small: this path rechecks the relation per candidate pair.
pub fn verify_compatibility_with(
    n: usize,
    h: usize,
    bound: usize,
    rel: &dyn Fn(&Trace, &Trace, usize) -> bool,
) -> Report {
    assert!(2 <= h && h <= n, "require 2 <= h <= n");
    let k = kn(n);
    let traces = enumerate_traces(&k, bound, false);
    let hh = h / 2;
    let mut checked = 0usize;
    let mut violations = Vec::new();
    let fail = |what: &str, t: &Trace, r1: &Trace, r2: &Trace| {
        format!(
            "{what} {} of {} has no partner on {}",
            k.trace_names(t).join("·"),
            k.trace_names(r1).join("·"),
            k.trace_names(r2).join("·")
        )
    };
    for r1 in &traces {
        for r2 in &traces {
            if !rel(r1, r2, h) {
                continue;
            }
            checked += 1;
            for cut in 1..r1.len() {
                let sigma: Trace = r1[..cut].to_vec();
                if !(1..r2.len()).any(|c| rel(&sigma, &r2[..c].to_vec(), hh)) {
                    violations.push(fail("prefix", &sigma, r1, r2));
                }
            }
            for cut in 1..r1.len() {
                let sigma: Trace = r1[cut..].to_vec();
                if !(1..r2.len()).any(|c| rel(&sigma, &r2[c..].to_vec(), h - 1)) {
                    violations.push(fail("suffix", &sigma, r1, r2));
                }
            }
            let fwd2 = forward_extensions(&k, r2, 2 * bound + 2 * n + 2);
            for e1 in forward_extensions(&k, r1, bound) {
                if !fwd2.iter().any(|e2| rel(&e1, e2, hh)) {
                    violations.push(fail("forward extension", &e1, r1, r2));
                }
            }
            let bwd2 = backward_extensions(&k, r2, 2 * bound + 2 * n + 2);
            for e1 in backward_extensions(&k, r1, bound) {
                if !bwd2.iter().any(|e2| rel(&e1, e2, h)) {
                    violations.push(fail("backward extension", &e1, r1, r2));
                }
            }
        }
    }
    Report {
        title: format!("compatibility lemma n={n} h={h} bound={bound}"),
        checked,
        violations,
    }
}

/// Strict forward extensions t·τ, τ ≠ ε, total length ≤ max_len.
fn forward_extensions(k: &Kripke, t: &Trace, max_len: usize) -> Vec<Trace> {
    let mut out = Vec::new();
    let mut layer = vec![t.clone()];
    while layer.first().map_or(false, |w| w.len() < max_len) {
        let mut next = Vec::new();
        for w in &layer {
            for &v in k.succ(*w.last().unwrap()) {
                let mut w2 = w.clone();
                w2.push(v);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Strict backward extensions τ·t, τ ≠ ε, total length ≤ max_len.
fn backward_extensions(k: &Kripke, t: &Trace, max_len: usize) -> Vec<Trace> {
    let mut out = Vec::new();
    let mut layer = vec![t.clone()];
    while layer.first().map_or(false, |w| w.len() < max_len) {
        let mut next = Vec::new();
        for w in &layer {
            for &v in k.pred(w[0]) {
                let mut w2 = vec![v];
                w2.extend(w.iter().copied());
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
