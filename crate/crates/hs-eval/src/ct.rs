//! Computation-tree-based semantics: intervals are tree traces of the
//! unwinding, encoded as (initial base trace, start index). The future
//! branches, the past is linear and cumulative.

use crate::arena::{Arena, Node, NodeId};
use crate::{EvalContext, Semantics, Tv, Verdict, Witness};
use kripke_model::{enumerate_traces, CtNode, Kripke, Trace};
use logic_core::{HsFormula, Polarity, Rel};
use std::collections::HashMap;

pub struct CtEvaluator<'a> {
    k: &'a Kripke,
    bound: usize,
    arena: Arena,
    memo: HashMap<(NodeId, Trace, usize), Tv>,
    any_trunc: bool,
}

impl<'a> CtEvaluator<'a> {
    pub fn new(k: &'a Kripke, bound: usize, f: &HsFormula) -> Self {
        assert!(bound >= 1);
        CtEvaluator { k, bound, arena: Arena::build(f, k), memo: HashMap::new(), any_trunc: false }
    }

    pub fn eval(&mut self, node: &CtNode) -> bool {
        self.eval_tv(node).val
    }

    pub(crate) fn eval_tv(&mut self, node: &CtNode) -> Tv {
        assert!(node.is_valid(self.k), "invalid computation-tree node");
        assert!(node.span() <= self.bound, "interval longer than the bound");
        self.go(self.arena.root, &node.base, node.start)
    }

    pub fn bound_hit(&self) -> bool {
        self.any_trunc
    }

    fn go(&mut self, id: NodeId, base: &Trace, start: usize) -> Tv {
        let key = (id, base.clone(), start);
        if let Some(&tv) = self.memo.get(&key) {
            return tv;
        }
        let tv = match self.arena.node(id) {
            Node::True => Tv::stable(true),
            Node::Atom(bit) => Tv::stable(match bit {
                Some(b) => self.k.trace_mask(&base[start..]) >> b & 1 == 1,
                None => false,
            }),
            Node::Not(a) => self.go(a, base, start).not(),
            Node::And(a, b) => self.go(a, base, start).and(self.go(b, base, start)),
            Node::Or(a, b) => self.go(a, base, start).or(self.go(b, base, start)),
            Node::Implies(a, b) => {
                self.go(a, base, start).not().or(self.go(b, base, start))
            }
            Node::Modal(rel, pol, a) => {
                let (domain, trunc) = self.domain(rel, base, start);
                if trunc {
                    self.any_trunc = true;
                }
                let univ = pol == Polarity::Univ;
                let mut saw_flip_apx = false;
                let mut saw_other_apx = false;
                let mut decided = None;
                for (b2, s2) in &domain {
                    let mut tv = self.go(a, b2, *s2);
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
        self.memo.insert(key, tv);
        tv
    }

    /// Witness intervals for ⟨rel⟩ at the tree trace (base, start). The
    /// current interval spans positions start ..= end with end = |base|-1.
    /// Candidates whose own span would exceed the bound are dropped and
    /// reported through the truncation marker; within-base candidates with
    /// an admissible span are enumerated exhaustively (the tree's past is
    /// linear and finite, so only forward extensions are open-ended).
    fn domain(&self, rel: Rel, base: &Trace, start: usize) -> (Vec<(Trace, usize)>, bool) {
        let end = base.len() - 1;
        let m = self.bound;
        let mut out = Vec::new();
        let mut trunc = false;
        match rel {
            // shorten the end: proper prefixes share the start node
            Rel::B => {
                for e2 in start..end {
                    out.push((base[..=e2].to_vec(), start));
                }
            }
            // advance the start toward the end: proper suffixes
            Rel::E => {
                for s2 in start + 1..=end {
                    out.push((base.clone(), s2));
                }
            }
            // extend the base forward along any transition
            Rel::BBar => {
                self.extend(base, start + m, &mut |b2| out.push((b2, start)));
                trunc = true;
            }
            // move the start backward: the linear past
            Rel::EBar => {
                let lo = base.len().saturating_sub(m);
                for s2 in (lo.min(start)..start).rev() {
                    out.push((base.clone(), s2));
                }
                trunc = lo > 0 && start > 0;
            }
            // fresh intervals beginning at the end node
            Rel::A => {
                out.push((base.clone(), end));
                self.extend(base, end + m, &mut |b2| out.push((b2, end)));
                trunc = true;
            }
            // intervals of the unique history ending at the start node
            Rel::ABar => {
                let lo = (start + 1).saturating_sub(m);
                for s2 in (lo..=start).rev() {
                    out.push((base[..=start].to_vec(), s2));
                }
                trunc = start + 1 > m;
            }
            // strictly after: start beyond the current end, connecting gap
            // capped at bound-1 like the other semantics
            Rel::L => {
                self.extend(base, end + 2 * m - 1, &mut |b2| {
                    let hi = (end + m - 1).min(b2.len() - 1);
                    let lo = (end + 1).max(b2.len().saturating_sub(m));
                    for s2 in lo..=hi {
                        out.push((b2.clone(), s2));
                    }
                });
                trunc = true;
            }
            // strictly before: both endpoints below the current start
            Rel::LBar => {
                for e2 in 0..start {
                    if start - e2 > m - 1 {
                        trunc = true;
                        continue;
                    }
                    for s2 in 0..=e2 {
                        if e2 - s2 + 1 > m {
                            trunc = true;
                            continue;
                        }
                        out.push((base[..=e2].to_vec(), s2));
                    }
                }
            }
            // strictly inside
            Rel::D => {
                for s2 in start + 1..=end {
                    for e2 in s2..end {
                        out.push((base[..=e2].to_vec(), s2));
                    }
                }
            }
            // strictly containing: earlier start, extended end
            Rel::DBar => {
                if start > 0 {
                    self.extend(base, m + start - 1, &mut |b2| {
                        for s2 in b2.len().saturating_sub(m)..start {
                            out.push((b2.clone(), s2));
                        }
                    });
                }
                trunc = true;
            }
            // starts inside, ends beyond
            Rel::O => {
                if end > start + 1 {
                    self.extend(base, end - 1 + m, &mut |b2| {
                        let lo = (start + 1).max(b2.len().saturating_sub(m));
                        for s2 in lo..end {
                            out.push((b2.clone(), s2));
                        }
                    });
                }
                trunc = true;
            }
            // starts before, ends inside
            Rel::OBar => {
                for e2 in start + 1..end {
                    for s2 in 0..start {
                        if e2 - s2 + 1 > m {
                            trunc = true;
                            continue;
                        }
                        out.push((base[..=e2].to_vec(), s2));
                    }
                }
            }
            Rel::G => panic!("expand_derived must run before evaluation of <G>"),
        }
        (out, trunc)
    }

    /// Calls `emit` on every strict forward extension of `base` up to `max_len`.
    fn extend(&self, base: &Trace, max_len: usize, emit: &mut impl FnMut(Trace)) {
        fn rec(k: &Kripke, cur: Trace, max_len: usize, emit: &mut impl FnMut(Trace)) {
            if cur.len() >= max_len {
                return;
            }
            for &s in k.succ(*cur.last().unwrap()) {
                let mut b2 = cur.clone();
                b2.push(s);
                emit(b2.clone());
                rec(k, b2, max_len, emit);
            }
        }
        rec(self.k, base.clone(), max_len, emit);
    }
}

/// Truth of `f` at a computation-tree node.
pub fn eval_ct(ctx: &EvalContext, node: &CtNode, f: &HsFormula) -> bool {
    assert_eq!(ctx.semantics, Semantics::Ct, "context semantics must be ct");
    CtEvaluator::new(ctx.k, ctx.bound, f).eval(node)
}

/// Checks `f` at every computation-tree node (base, 0) with |base| ≤ bound.
pub fn check_ct(ctx: &EvalContext, f: &HsFormula) -> Verdict {
    assert_eq!(ctx.semantics, Semantics::Ct, "context semantics must be ct");
    let mut ev = CtEvaluator::new(ctx.k, ctx.bound, f);
    for t in enumerate_traces(ctx.k, ctx.bound, true) {
        let tv = ev.eval_tv(&CtNode::new(t.clone(), 0));
        if !tv.val {
            return Verdict::failed(Witness::Trace(t), true, !tv.apx);
        }
    }
    Verdict::positive(true)
}
