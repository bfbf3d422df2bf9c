//! Exact LTL (with past) over ultimately periodic paths.
//!
//! Truth tables are computed over an unrolled window of
//! `|stem| + (d+2)·|loop|` positions, where d is the temporal depth. Truth
//! of every subformula is ultimately periodic with period |loop| and
//! preperiod at most |stem| + d·|loop|, so the final window period is a
//! faithful copy of the infinite tail: future scans that exhaust the
//! window without deciding are exactly false, and indices just past the
//! window reduce into the final period.

use crate::holds_at;
use hs_eval::{Verdict, Witness};
use kripke_model::{enumerate_lassos, Kripke, Lasso};
use logic_core::PointFormula;

/// Maximal nesting of temporal operators (future or past).
pub fn temporal_depth(f: &PointFormula) -> usize {
    use PointFormula::*;
    match f {
        Atom(_) | True | Var(_) => 0,
        Not(a) | Bind(_, a) | Exists(a) | Forall(a) | ExistsF(a) | ForallF(a) => temporal_depth(a),
        And(a, b) | Or(a, b) | Implies(a, b) => temporal_depth(a).max(temporal_depth(b)),
        Next(a) | Ev(a) | Alw(a) | Prev(a) | EvPast(a) | AlwPast(a) => 1 + temporal_depth(a),
        Until(a, b) | Since(a, b) => 1 + temporal_depth(a).max(temporal_depth(b)),
    }
}

struct Tables<'a> {
    k: &'a Kripke,
    pi: &'a Lasso,
    n: usize,
    lp: usize,
}

impl Tables<'_> {
    /// Maps an index at or just beyond the window into the final period.
    fn reduce(&self, j: usize) -> usize {
        if j < self.n {
            j
        } else {
            let p = self.n - self.lp;
            p + (j - p) % self.lp
        }
    }

    fn table(&self, f: &PointFormula) -> Vec<bool> {
        use PointFormula::*;
        let n = self.n;
        match f {
            True => vec![true; n],
            Atom(a) => (0..n).map(|i| holds_at(self.k, self.pi.at(i), a)).collect(),
            Not(a) => self.table(a).into_iter().map(|v| !v).collect(),
            And(a, b) => zip(self.table(a), self.table(b), |x, y| x && y),
            Or(a, b) => zip(self.table(a), self.table(b), |x, y| x || y),
            Implies(a, b) => zip(self.table(a), self.table(b), |x, y| !x || y),
            Next(a) => {
                let t = self.table(a);
                (0..n).map(|i| t[self.reduce(i + 1)]).collect()
            }
            Until(a, b) => {
                let (ta, tb) = (self.table(a), self.table(b));
                // scan one period past the window so every start position
                // sees a full copy of the periodic tail before giving up
                (0..n)
                    .map(|i| {
                        for j in i..n + self.lp {
                            if tb[self.reduce(j)] {
                                return true;
                            }
                            if !ta[self.reduce(j)] {
                                return false;
                            }
                        }
                        false
                    })
                    .collect()
            }
            Ev(a) => {
                let t = self.table(a);
                (0..n).map(|i| (i..n + self.lp).any(|j| t[self.reduce(j)])).collect()
            }
            Alw(a) => {
                let t = self.table(a);
                (0..n).map(|i| (i..n + self.lp).all(|j| t[self.reduce(j)])).collect()
            }
            Prev(a) => {
                let t = self.table(a);
                (0..n).map(|i| i > 0 && t[i - 1]).collect()
            }
            Since(a, b) => {
                let (ta, tb) = (self.table(a), self.table(b));
                (0..n)
                    .map(|i| {
                        for j in (0..=i).rev() {
                            if tb[j] {
                                return true;
                            }
                            if !ta[j] {
                                return false;
                            }
                        }
                        false
                    })
                    .collect()
            }
            EvPast(a) => {
                let t = self.table(a);
                (0..n).map(|i| (0..=i).any(|j| t[j])).collect()
            }
            AlwPast(a) => {
                let t = self.table(a);
                (0..n).map(|i| (0..=i).all(|j| t[j])).collect()
            }
            Var(_) | Bind(..) | Exists(_) | Forall(_) | ExistsF(_) | ForallF(_) => {
                panic!("eval_ltl handles LTL with past only")
            }
        }
    }
}

fn zip(a: Vec<bool>, b: Vec<bool>, f: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

fn is_ltl_with_past(f: &PointFormula) -> bool {
    use PointFormula::*;
    match f {
        Atom(_) | True => true,
        Var(_) | Bind(..) | Exists(_) | Forall(_) | ExistsF(_) | ForallF(_) => false,
        Not(a) | Next(a) | Ev(a) | Alw(a) | Prev(a) | EvPast(a) | AlwPast(a) => {
            is_ltl_with_past(a)
        }
        And(a, b) | Or(a, b) | Implies(a, b) | Until(a, b) | Since(a, b) => {
            is_ltl_with_past(a) && is_ltl_with_past(b)
        }
    }
}

/// π, i ⊨ f over the infinite path stem · loop^ω.
pub fn eval_ltl(k: &Kripke, pi: &Lasso, i: usize, f: &PointFormula) -> bool {
    assert!(is_ltl_with_past(f), "eval_ltl handles LTL with past only");
    assert!(pi.is_valid(k), "lasso does not denote a path of the structure");
    let (st, lp) = (pi.stem.len(), pi.looping.len());
    // align the window start so the final period is loop-aligned
    let base = if i + 1 <= st { st } else { st + (i + 1 - st).div_ceil(lp) * lp };
    let n = base + (temporal_depth(f) + 2) * lp;
    let tables = Tables { k, pi, n, lp };
    tables.table(f)[i]
}

/// Checks `f` at position 0 of every initial lasso with total size ≤ bound.
pub fn check_ltl(k: &Kripke, f: &PointFormula, bound: usize) -> Verdict {
    for pi in enumerate_lassos(k, bound) {
        if !eval_ltl(k, &pi, 0, f) {
            // LTL truth on a single full path is exact, but longer lassos
            // stay unexplored, so a passing verdict is only bound-relative
            return Verdict::failed(Witness::Lasso(pi), true, true);
        }
    }
    Verdict::positive(true)
}
