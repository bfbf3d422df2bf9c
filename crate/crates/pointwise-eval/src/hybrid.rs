//! Hybrid linear-past logic: position variables, binders, and memoryful
//! path quantifiers, in two flavours. The path-based evaluator works on
//! lassos with ∃ ranging over bounded initial lassos sharing the history;
//! the finitary evaluator works on finite traces with ∃ ranging over
//! bounded traces sharing the history.

use crate::{extensions_of, holds_at, ltl::temporal_depth};
use hs_eval::{Verdict, Witness};
use kripke_model::{enumerate_lassos, enumerate_traces, Kripke, Lasso, Trace};
use logic_core::PointFormula;
use std::collections::BTreeMap;

/// Valuation of position variables; unmapped variables sit at position 0.
pub type Assignment = BTreeMap<String, usize>;

fn lookup(g: &Assignment, x: &str) -> usize {
    g.get(x).copied().unwrap_or(0)
}

/// Earliest position remembered by the valuation; 0 when none is bound.
/// Path quantifiers measure their bounded universe from this anchor, so a
/// quantified continuation may run for `bound` states past the earliest
/// interval start rather than past the current position.
fn anchor(g: &Assignment) -> usize {
    g.values().copied().min().unwrap_or(0)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn has_path_quantifier(f: &PointFormula) -> bool {
    use PointFormula::*;
    match f {
        Atom(_) | True | Var(_) => false,
        Exists(_) | Forall(_) => true,
        Not(a) | Bind(_, a) | ExistsF(a) | ForallF(a) | Next(a) | Ev(a) | Alw(a) | Prev(a)
        | EvPast(a) | AlwPast(a) => has_path_quantifier(a),
        And(a, b) | Or(a, b) | Implies(a, b) | Until(a, b) | Since(a, b) => {
            has_path_quantifier(a) || has_path_quantifier(b)
        }
    }
}

struct Hy<'a> {
    k: &'a Kripke,
    bound: usize,
    /// Common period of all paths that can appear during evaluation.
    period: usize,
    candidates: Vec<Lasso>,
}

impl Hy<'_> {
    /// First window position from which the remaining future is periodic:
    /// beyond every bound variable, the stems of all candidate paths, and
    /// the index where prefix-sharing path sets stabilize.
    fn window_end(&self, pi: &Lasso, depth: usize, lo: usize) -> usize {
        let settle = pi.stem.len().max(self.bound) + self.period;
        let start = (lo + 1).max(settle);
        let aligned = pi.stem.len()
            + (start - pi.stem.len().min(start)).div_ceil(self.period) * self.period;
        aligned + (depth + 2) * self.period
    }

    fn go(&self, pi: &Lasso, i: usize, g: &Assignment, f: &PointFormula) -> bool {
        use PointFormula::*;
        match f {
            True => true,
            Atom(a) => holds_at(self.k, pi.at(i), a),
            Var(x) => lookup(g, x) == i,
            Bind(x, a) => {
                let mut g2 = g.clone();
                g2.insert(x.clone(), i);
                self.go(pi, i, &g2, a)
            }
            Not(a) => !self.go(pi, i, g, a),
            And(a, b) => self.go(pi, i, g, a) && self.go(pi, i, g, b),
            Or(a, b) => self.go(pi, i, g, a) || self.go(pi, i, g, b),
            Implies(a, b) => !self.go(pi, i, g, a) || self.go(pi, i, g, b),
            Next(a) => self.go(pi, i + 1, g, a),
            Prev(a) => i > 0 && self.go(pi, i - 1, g, a),
            Until(a, b) => {
                let hi = self.scan_hi(pi, f, i, g);
                for j in i..=hi {
                    if self.go(pi, j, g, b) {
                        return true;
                    }
                    if !self.go(pi, j, g, a) {
                        return false;
                    }
                }
                false
            }
            Ev(a) => {
                let hi = self.scan_hi(pi, f, i, g);
                (i..=hi).any(|j| self.go(pi, j, g, a))
            }
            Alw(a) => {
                let hi = self.scan_hi(pi, f, i, g);
                (i..=hi).all(|j| self.go(pi, j, g, a))
            }
            Since(a, b) => {
                for j in (0..=i).rev() {
                    if self.go(pi, j, g, b) {
                        return true;
                    }
                    if !self.go(pi, j, g, a) {
                        return false;
                    }
                }
                false
            }
            EvPast(a) => (0..=i).any(|j| self.go(pi, j, g, a)),
            AlwPast(a) => (0..=i).all(|j| self.go(pi, j, g, a)),
            Exists(a) => self
                .sharing(pi, i)
                .iter()
                .any(|pi2| self.go(pi2, i, g, a)),
            Forall(a) => self
                .sharing(pi, i)
                .iter()
                .all(|pi2| self.go(pi2, i, g, a)),
            ExistsF(a) => self
                .sharing_traces(pi, i, g)
                .iter()
                .any(|r| eval_hybrid_finitary(self.k, r, i, g, a, self.bound)),
            ForallF(a) => self
                .sharing_traces(pi, i, g)
                .iter()
                .all(|r| eval_hybrid_finitary(self.k, r, i, g, a, self.bound)),
        }
    }

    fn scan_hi(&self, pi: &Lasso, f: &PointFormula, i: usize, g: &Assignment) -> usize {
        let lo = g.values().copied().fold(i, usize::max);
        self.window_end(pi, temporal_depth(f), lo)
    }

    /// Bounded initial lassos whose path agrees with π on [0, i].
    fn sharing(&self, pi: &Lasso, i: usize) -> Vec<Lasso> {
        let pre = pi.prefix(i + 1);
        self.candidates.iter().filter(|c| c.prefix(i + 1) == pre).cloned().collect()
    }

    /// Traces whose first i+1 states agree with π, running for at most
    /// `bound` states past the valuation's anchor.
    fn sharing_traces(&self, pi: &Lasso, i: usize, g: &Assignment) -> Vec<Trace> {
        extensions_of(self.k, &pi.prefix(i + 1), (i + 1).max(anchor(g) + self.bound))
    }
}

/// π, i ⊨ f under valuation g, with path quantifiers ranging over initial
/// lassos of total size ≤ bound that share the history [0, i].
pub fn eval_hybrid(
    k: &Kripke,
    pi: &Lasso,
    i: usize,
    g: &Assignment,
    f: &PointFormula,
    bound: usize,
) -> bool {
    assert!(pi.is_valid(k), "lasso does not denote a path of the structure");
    assert!(bound >= 1);
    let candidates = enumerate_lassos(k, bound);
    let period = if has_path_quantifier(f) {
        candidates
            .iter()
            .map(|c| c.looping.len())
            .fold(pi.looping.len(), lcm)
    } else {
        pi.looping.len()
    };
    Hy { k, bound, period, candidates }.go(pi, i, g, f)
}

/// Checks `f` at position 0 of every initial lasso ≤ bound, g ≡ 0.
pub fn check_hybrid(k: &Kripke, f: &PointFormula, bound: usize) -> Verdict {
    let g = Assignment::new();
    for pi in enumerate_lassos(k, bound) {
        if !eval_hybrid(k, &pi, 0, &g, f, bound) {
            return Verdict::failed(Witness::Lasso(pi), true, false);
        }
    }
    Verdict::positive(true)
}

/// ρ, i ⊨ f finitarily: temporal operators stop at the end of ρ, and both
/// path quantifiers range over traces ≤ bound sharing the history [0, i].
pub fn eval_hybrid_finitary(
    k: &Kripke,
    rho: &Trace,
    i: usize,
    g: &Assignment,
    f: &PointFormula,
    bound: usize,
) -> bool {
    use PointFormula::*;
    assert!(k.is_trace(rho), "not a trace of the structure");
    assert!(i < rho.len(), "position outside the trace");
    match f {
        True => true,
        Atom(a) => holds_at(k, rho[i], a),
        Var(x) => lookup(g, x) == i,
        Bind(x, a) => {
            let mut g2 = g.clone();
            g2.insert(x.clone(), i);
            eval_hybrid_finitary(k, rho, i, &g2, a, bound)
        }
        Not(a) => !eval_hybrid_finitary(k, rho, i, g, a, bound),
        And(a, b) => {
            eval_hybrid_finitary(k, rho, i, g, a, bound)
                && eval_hybrid_finitary(k, rho, i, g, b, bound)
        }
        Or(a, b) => {
            eval_hybrid_finitary(k, rho, i, g, a, bound)
                || eval_hybrid_finitary(k, rho, i, g, b, bound)
        }
        Implies(a, b) => {
            !eval_hybrid_finitary(k, rho, i, g, a, bound)
                || eval_hybrid_finitary(k, rho, i, g, b, bound)
        }
        Next(a) => i + 1 < rho.len() && eval_hybrid_finitary(k, rho, i + 1, g, a, bound),
        Prev(a) => i > 0 && eval_hybrid_finitary(k, rho, i - 1, g, a, bound),
        Until(a, b) => {
            for j in i..rho.len() {
                if eval_hybrid_finitary(k, rho, j, g, b, bound) {
                    return true;
                }
                if !eval_hybrid_finitary(k, rho, j, g, a, bound) {
                    return false;
                }
            }
            false
        }
        Ev(a) => (i..rho.len()).any(|j| eval_hybrid_finitary(k, rho, j, g, a, bound)),
        Alw(a) => (i..rho.len()).all(|j| eval_hybrid_finitary(k, rho, j, g, a, bound)),
        Since(a, b) => {
            for j in (0..=i).rev() {
                if eval_hybrid_finitary(k, rho, j, g, b, bound) {
                    return true;
                }
                if !eval_hybrid_finitary(k, rho, j, g, a, bound) {
                    return false;
                }
            }
            false
        }
        EvPast(a) => (0..=i).any(|j| eval_hybrid_finitary(k, rho, j, g, a, bound)),
        AlwPast(a) => (0..=i).all(|j| eval_hybrid_finitary(k, rho, j, g, a, bound)),
        // continuations run for at most `bound` states past the earliest
        // position remembered by the valuation, so quantified intervals are
        // capped by their own span rather than by an absolute trace length
        Exists(a) | ExistsF(a) => {
            extensions_of(k, &rho[..=i], (i + 1).max(anchor(g) + bound))
                .iter()
                .any(|r| eval_hybrid_finitary(k, r, i, g, a, bound))
        }
        Forall(a) | ForallF(a) => {
            extensions_of(k, &rho[..=i], (i + 1).max(anchor(g) + bound))
                .iter()
                .all(|r| eval_hybrid_finitary(k, r, i, g, a, bound))
        }
    }
}

/// Checks `f` at position 0 of every initial trace ≤ bound, g ≡ 0.
pub fn check_hybrid_finitary(k: &Kripke, f: &PointFormula, bound: usize) -> Verdict {
    let g = Assignment::new();
    for t in enumerate_traces(k, bound, true) {
        if !eval_hybrid_finitary(k, &t, 0, &g, f, bound) {
            return Verdict::failed(Witness::Trace(t), true, false);
        }
    }
    Verdict::positive(true)
}
