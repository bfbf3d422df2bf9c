//! Trace-based semantics: intervals are position pairs [i,j] on one
//! infinite path, with right extensions capped at a horizon.

use crate::arena::{Arena, Node, NodeId};
use crate::{EvalContext, Semantics, Tv, Verdict, Witness};
use kripke_model::{enumerate_lassos, Kripke, Lasso};
use logic_core::{HsFormula, Polarity, Rel};
use std::collections::HashMap;

pub struct LinEvaluator<'a> {
    k: &'a Kripke,
    pi: &'a Lasso,
    horizon: usize,
    arena: Arena,
    memo: HashMap<(NodeId, usize, usize), Tv>,
    any_trunc: bool,
}

impl<'a> LinEvaluator<'a> {
    pub fn new(k: &'a Kripke, pi: &'a Lasso, horizon: usize, f: &HsFormula) -> Self {
        assert!(pi.is_valid(k), "lasso does not denote a path of the structure");
        LinEvaluator {
            k,
            pi,
            horizon,
            arena: Arena::build(f, k),
            memo: HashMap::new(),
            any_trunc: false,
        }
    }

    pub fn eval(&mut self, i: usize, j: usize) -> bool {
        self.eval_tv(i, j).val
    }

    pub(crate) fn eval_tv(&mut self, i: usize, j: usize) -> Tv {
        assert!(i <= j, "interval endpoints out of order");
        assert!(j <= self.horizon, "interval end beyond the horizon");
        self.go(self.arena.root, i, j)
    }

    pub fn bound_hit(&self) -> bool {
        self.any_trunc
    }

    fn label(&self, i: usize, j: usize) -> u64 {
        (i..=j).fold(!0u64, |m, h| m & self.k.label_mask(self.pi.at(h)))
    }

    fn go(&mut self, id: NodeId, i: usize, j: usize) -> Tv {
        if let Some(&tv) = self.memo.get(&(id, i, j)) {
            return tv;
        }
        let tv = match self.arena.node(id) {
            Node::True => Tv::stable(true),
            Node::Atom(bit) => Tv::stable(match bit {
                Some(b) => self.label(i, j) >> b & 1 == 1,
                None => false,
            }),
            Node::Not(a) => self.go(a, i, j).not(),
            Node::And(a, b) => self.go(a, i, j).and(self.go(b, i, j)),
            Node::Or(a, b) => self.go(a, i, j).or(self.go(b, i, j)),
            Node::Implies(a, b) => self.go(a, i, j).not().or(self.go(b, i, j)),
            Node::Modal(rel, pol, a) => {
                let (domain, trunc) = self.domain(rel, i, j);
                if trunc {
                    self.any_trunc = true;
                }
                let univ = pol == Polarity::Univ;
                let mut saw_flip_apx = false;
                let mut saw_other_apx = false;
                let mut decided = None;
                for &(i2, j2) in &domain {
                    let mut tv = self.go(a, i2, j2);
                    if univ {
                        tv = tv.not();
                    }
                    if tv.val {
                        if !tv.apx {
                            decided = Some(if univ { Tv::stable(false) } else { Tv::stable(true) });
                            break;
                        }
                        saw_flip_apx = true;
                    } else if tv.apx {
                        saw_other_apx = true;
                    }
                }
                decided.unwrap_or_else(|| {
                    let ex = if saw_flip_apx {
                        Tv { val: true, apx: true }
                    } else {
                        Tv { val: false, apx: trunc || saw_other_apx }
                    };
                    if univ {
                        ex.not()
                    } else {
                        ex
                    }
                })
            }
        };
        self.memo.insert((id, i, j), tv);
        tv
    }

    /// Witness intervals for ⟨rel⟩ at [i,j]; truncated whenever the right
    /// edge of the search is the horizon (positions are unbounded).
    fn domain(&self, rel: Rel, i: usize, j: usize) -> (Vec<(usize, usize)>, bool) {
        let h = self.horizon;
        let mut out = Vec::new();
        let mut trunc = false;
        match rel {
            Rel::B => out.extend((i..j).map(|j2| (i, j2))),
            Rel::E => out.extend((i + 1..=j).map(|i2| (i2, j))),
            Rel::BBar => {
                out.extend((j + 1..=h).map(|j2| (i, j2)));
                trunc = true;
            }
            Rel::EBar => out.extend((0..i).rev().map(|i2| (i2, j))),
            Rel::A => {
                out.extend((j..=h).map(|j2| (j, j2)));
                trunc = true;
            }
            Rel::ABar => out.extend((0..=i).rev().map(|i2| (i2, i))),
            Rel::L => {
                for i2 in j + 1..=h {
                    for j2 in i2..=h {
                        out.push((i2, j2));
                    }
                }
                trunc = true;
            }
            Rel::LBar => {
                for j2 in 0..i {
                    for i2 in 0..=j2 {
                        out.push((i2, j2));
                    }
                }
            }
            Rel::D => {
                for i2 in i + 1..=j.saturating_sub(1) {
                    for j2 in i2..j {
                        out.push((i2, j2));
                    }
                }
            }
            Rel::DBar => {
                for i2 in 0..i {
                    for j2 in j + 1..=h {
                        out.push((i2, j2));
                    }
                }
                trunc = true;
            }
            Rel::O => {
                for i2 in i + 1..j {
                    for j2 in j + 1..=h {
                        out.push((i2, j2));
                    }
                }
                trunc = true;
            }
            Rel::OBar => {
                for j2 in i + 1..j {
                    for i2 in 0..i {
                        out.push((i2, j2));
                    }
                }
            }
            Rel::G => panic!("expand_derived must run before evaluation of <G>"),
        }
        (out, trunc)
    }
}

/// HS truth over the interval structure induced by `pi`, at interval [i,j].
pub fn eval_interval(
    k: &Kripke,
    pi: &Lasso,
    i: usize,
    j: usize,
    f: &HsFormula,
    horizon: usize,
) -> bool {
    assert!(i <= j && j <= horizon, "require i <= j <= horizon");
    LinEvaluator::new(k, pi, horizon, f).eval(i, j)
}

/// Exact truth of a future-only formula at [i,j] of the infinite interval
/// structure of `pi`, with no horizon. Only the right- and inward-looking
/// relations (B, E, B̄, A, L, D, O and their universals) are supported;
/// their truth at [i,j] depends on π[i..] alone, so intervals can be
/// shifted down by the loop period, and an unbounded right-extension
/// existential is decided by scanning up to a periodicity cutoff: past
/// max(j, |stem|) + (depth+3)·|loop| the body's truth is periodic in the
/// right endpoint (the candidate interval gains only whole loop
/// repetitions, invisible at the body's modal depth, while the future
/// beyond the endpoint repeats exactly).
pub fn eval_interval_limit(k: &Kripke, pi: &Lasso, i: usize, j: usize, f: &HsFormula) -> bool {
    assert!(pi.is_valid(k), "lasso does not denote a path of the structure");
    assert!(i <= j, "interval endpoints out of order");
    let arena = Arena::build(f, k);
    let mut depths = vec![0usize; arena.nodes.len()];
    for (id, node) in arena.nodes.iter().enumerate() {
        depths[id] = match node {
            Node::True | Node::Atom(_) => 0,
            Node::Not(a) => depths[*a as usize],
            Node::And(a, b) | Node::Or(a, b) | Node::Implies(a, b) => {
                depths[*a as usize].max(depths[*b as usize])
            }
            Node::Modal(_, _, a) => depths[*a as usize] + 1,
        };
    }
    let mut ev = LimitEvaluator {
        k,
        pi,
        stem: pi.stem.len(),
        period: pi.looping.len(),
        arena,
        depths,
        memo: HashMap::new(),
    };
    ev.go(ev.arena.root, i, j)
}

struct LimitEvaluator<'a> {
    k: &'a Kripke,
    pi: &'a Lasso,
    stem: usize,
    period: usize,
    arena: Arena,
    depths: Vec<usize>,
    memo: HashMap<(NodeId, usize, usize), bool>,
}

impl LimitEvaluator<'_> {
    /// Last right endpoint that needs scanning before periodicity takes
    /// over, for a body of the given modal depth and intervals from `lo`.
    fn cutoff(&self, lo: usize, depth: usize) -> usize {
        lo.max(self.stem) + (depth + 3) * self.period
    }

    fn go(&mut self, id: NodeId, i: usize, j: usize) -> bool {
        // the suffix π[i-P..] repeats π[i..], so slide high intervals down
        if i >= self.stem + self.period {
            return self.go(id, i - self.period, j - self.period);
        }
        if let Some(&v) = self.memo.get(&(id, i, j)) {
            return v;
        }
        let v = match self.arena.node(id) {
            Node::True => true,
            Node::Atom(bit) => match bit {
                Some(b) => (i..=j).all(|h| self.k.label_mask(self.pi.at(h)) >> b & 1 == 1),
                None => false,
            },
            Node::Not(a) => !self.go(a, i, j),
            Node::And(a, b) => self.go(a, i, j) && self.go(b, i, j),
            Node::Or(a, b) => self.go(a, i, j) || self.go(b, i, j),
            Node::Implies(a, b) => !self.go(a, i, j) || self.go(b, i, j),
            Node::Modal(rel, pol, a) => {
                let d = self.depths[a as usize];
                let found = match rel {
                    Rel::B => (i..j).any(|j2| self.flip(a, pol, i, j2)),
                    Rel::E => (i + 1..=j).any(|i2| self.flip(a, pol, i2, j)),
                    Rel::BBar => {
                        (j + 1..=self.cutoff(j, d)).any(|j2| self.flip(a, pol, i, j2))
                    }
                    Rel::A => (j..=self.cutoff(j, d)).any(|j2| self.flip(a, pol, j, j2)),
                    // one period of start positions covers every later
                    // suffix up to shift
                    Rel::L => (j + 1..=j.max(self.stem) + self.period).any(|i2| {
                        (i2..=self.cutoff(i2, d)).any(|j2| self.flip(a, pol, i2, j2))
                    }),
                    Rel::D => (i + 1..=j)
                        .any(|i2| (i2..j).any(|j2| self.flip(a, pol, i2, j2))),
                    Rel::O => (i + 1..j).any(|i2| {
                        (j + 1..=self.cutoff(j, d)).any(|j2| self.flip(a, pol, i2, j2))
                    }),
                    _ => panic!("eval_interval_limit supports future-only relations, not {rel:?}"),
                };
                if pol == Polarity::Univ {
                    !found
                } else {
                    found
                }
            }
        };
        self.memo.insert((id, i, j), v);
        v
    }

    /// Body truth, negated under a universal so both polarities reduce to
    /// a witness search.
    fn flip(&mut self, a: NodeId, pol: Polarity, i: usize, j: usize) -> bool {
        let v = self.go(a, i, j);
        if pol == Polarity::Univ {
            !v
        } else {
            v
        }
    }
}

/// True when every modality of `f` looks rightwards only, i.e. when
/// `eval_interval_limit` can decide it exactly.
pub fn future_only(f: &HsFormula) -> bool {
    match f {
        HsFormula::Atom(_) | HsFormula::True => true,
        HsFormula::Not(a) => future_only(a),
        HsFormula::And(a, b) | HsFormula::Or(a, b) | HsFormula::Implies(a, b) => {
            future_only(a) && future_only(b)
        }
        HsFormula::Modal(rel, _, a) => {
            matches!(
                rel,
                Rel::B | Rel::E | Rel::BBar | Rel::A | Rel::L | Rel::D | Rel::O
            ) && future_only(a)
        }
    }
}

/// Checks `f` at every initial interval [0,i], i ≤ bound, of every initial
/// lasso with |stem|+|loop| ≤ bound. Formulas without past modalities are
/// decided exactly via periodicity; otherwise right extensions see
/// 2·bound positions and verdicts carry the usual truncation caveats.
pub fn check_lin(ctx: &EvalContext, f: &HsFormula) -> Verdict {
    assert_eq!(ctx.semantics, Semantics::Lin, "context semantics must be lin");
    if future_only(f) {
        for pi in enumerate_lassos(ctx.k, ctx.bound) {
            for i in 0..=ctx.bound {
                if !eval_interval_limit(ctx.k, &pi, 0, i, f) {
                    return Verdict::failed(Witness::LassoInterval(pi, (0, i)), true, true);
                }
            }
        }
        return Verdict::positive(true);
    }
    let horizon = 2 * ctx.bound;
    for pi in enumerate_lassos(ctx.k, ctx.bound) {
        let mut ev = LinEvaluator::new(ctx.k, &pi, horizon, f);
        for i in 0..=ctx.bound {
            let tv = ev.eval_tv(0, i);
            if !tv.val {
                return Verdict::failed(Witness::LassoInterval(pi.clone(), (0, i)), true, !tv.apx);
            }
        }
    }
    Verdict::positive(true)
}
