//! State-based semantics: intervals are traces, both past and future branch.

use crate::arena::{Arena, Node, NodeId};
use crate::{EvalContext, Semantics, Tv, Verdict, Witness};
use kripke_model::{enumerate_traces, Kripke, StateId, Trace};
use logic_core::{HsFormula, Polarity, Rel};
use std::collections::HashMap;

/// Reusable evaluator for one formula over one structure.
pub struct StEvaluator<'a> {
    k: &'a Kripke,
    bound: usize,
    arena: Arena,
    memo: HashMap<(NodeId, Trace), Tv>,
    any_trunc: bool,
}

impl<'a> StEvaluator<'a> {
    pub fn new(k: &'a Kripke, bound: usize, f: &HsFormula) -> Self {
        assert!(bound >= 1);
        StEvaluator { k, bound, arena: Arena::build(f, k), memo: HashMap::new(), any_trunc: false }
    }

    pub fn eval(&mut self, t: &Trace) -> bool {
        self.eval_tv(t).val
    }

    pub(crate) fn eval_tv(&mut self, t: &Trace) -> Tv {
        assert!(self.k.is_trace(t), "not a trace of the structure");
        assert!(t.len() <= self.bound, "trace longer than the bound");
        self.go(self.arena.root, t)
    }

    pub fn bound_hit(&self) -> bool {
        self.any_trunc
    }

    fn go(&mut self, id: NodeId, t: &Trace) -> Tv {
        let key = (id, t.clone());
        if let Some(&tv) = self.memo.get(&key) {
            return tv;
        }
        let tv = match self.arena.node(id) {
            Node::True => Tv::stable(true),
            Node::Atom(bit) => Tv::stable(match bit {
                Some(b) => self.k.trace_mask(t) >> b & 1 == 1,
                None => false,
            }),
            Node::Not(a) => self.go(a, t).not(),
            Node::And(a, b) => self.go(a, t).and(self.go(b, t)),
            Node::Or(a, b) => self.go(a, t).or(self.go(b, t)),
            Node::Implies(a, b) => self.go(a, t).not().or(self.go(b, t)),
            Node::Modal(rel, pol, a) => {
                let (domain, trunc) = self.domain(rel, t);
                if trunc {
                    self.any_trunc = true;
                }
                self.quantify(a, &domain, trunc, pol)
            }
        };
        self.memo.insert(key, tv);
        tv
    }

    fn quantify(&mut self, child: NodeId, domain: &[Trace], trunc: bool, pol: Polarity) -> Tv {
        // existential over the domain; universal by duality of the markers
        let univ = pol == Polarity::Univ;
        let mut saw_flip_apx = false; // a value that already decides, but unstably
        let mut saw_other_apx = false;
        for d in domain {
            let mut tv = self.go(child, d);
            if univ {
                tv = tv.not();
            }
            if tv.val {
                if !tv.apx {
                    // stable witness (or stable universal counterexample)
                    return if univ { Tv::stable(false) } else { Tv::stable(true) };
                }
                saw_flip_apx = true;
            } else if tv.apx {
                saw_other_apx = true;
            }
        }
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
    }

    /// Witness intervals for ⟨rel⟩ at trace `t`, with a truncation marker
    /// saying whether intervals beyond the bound were cut off.
    fn domain(&self, rel: Rel, t: &Trace) -> (Vec<Trace>, bool) {
        let len = t.len();
        let m = self.bound;
        match rel {
            Rel::B => ((1..len).map(|i| t[..i].to_vec()).collect(), false),
            Rel::E => ((1..len).map(|i| t[i..].to_vec()).collect(), false),
            Rel::BBar => {
                let mut out = Vec::new();
                self.extend_right(t.clone(), m, &mut out);
                (out, true)
            }
            Rel::EBar => {
                let (out, trunc) = self.extend_left(t, m);
                (out, trunc)
            }
            Rel::A => {
                let last = *t.last().unwrap();
                let mut out = vec![vec![last]];
                self.extend_right(vec![last], m, &mut out);
                (out, true)
            }
            Rel::ABar => {
                let first = t[0];
                let mut out = vec![vec![first]];
                let (mut exts, trunc) = self.extend_left(&[first], m);
                out.append(&mut exts);
                (out, trunc)
            }
            Rel::L => {
                let mut out = Vec::new();
                for s in self.reachable_after(*t.last().unwrap()) {
                    out.push(vec![s]);
                    self.extend_right(vec![s], m, &mut out);
                }
                (out, true)
            }
            Rel::LBar => {
                let mut out = Vec::new();
                let mut trunc = false;
                for s in self.reachable_before(t[0]) {
                    out.push(vec![s]);
                    let (mut exts, tr) = self.extend_left(&[s], m);
                    out.append(&mut exts);
                    trunc |= tr;
                }
                // the distance cap on the gap also hides longer gaps
                (out, trunc || m >= 2)
            }
            Rel::D => {
                let mut out = Vec::new();
                for i in 1..len {
                    for j in i..len.saturating_sub(1) {
                        out.push(t[i..=j].to_vec());
                    }
                }
                (out, false)
            }
            Rel::DBar => {
                let mut rights = Vec::new();
                self.extend_right(t.clone(), m.saturating_sub(1), &mut rights);
                let mut out = Vec::new();
                for r in &rights {
                    let (mut exts, _) = self.extend_left(r, m);
                    out.append(&mut exts);
                }
                (out, true)
            }
            Rel::O => {
                let mut out = Vec::new();
                for i in 1..len.saturating_sub(1) {
                    self.extend_right(t[i..].to_vec(), m, &mut out);
                }
                (out, true)
            }
            Rel::OBar => {
                let mut out = Vec::new();
                let mut trunc = false;
                for j in 1..len.saturating_sub(1) {
                    let (mut exts, tr) = self.extend_left(&t[..=j], m);
                    out.append(&mut exts);
                    trunc |= tr;
                }
                (out, trunc)
            }
            Rel::G => panic!("expand_derived must run before evaluation of <G>"),
        }
    }

    /// All strict right extensions of `t` up to length `max_len`.
    fn extend_right(&self, t: Trace, max_len: usize, out: &mut Vec<Trace>) {
        if t.len() >= max_len {
            return;
        }
        for &s in self.k.succ(*t.last().unwrap()) {
            let mut t2 = t.clone();
            t2.push(s);
            out.push(t2.clone());
            self.extend_right(t2, max_len, out);
        }
    }

    /// All strict left extensions of `t` up to length `max_len`; the flag
    /// reports whether an extension of length `max_len + 1` exists.
    fn extend_left(&self, t: &[StateId], max_len: usize) -> (Vec<Trace>, bool) {
        let mut out = Vec::new();
        let mut over = false;
        let mut layer: Vec<Trace> = vec![t.to_vec()];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for u in &layer {
                for &s in self.k.pred(u[0]) {
                    let mut u2 = Vec::with_capacity(u.len() + 1);
                    u2.push(s);
                    u2.extend_from_slice(u);
                    if u2.len() > max_len {
                        over = true;
                    } else {
                        out.push(u2.clone());
                        next.push(u2);
                    }
                }
            }
            layer = next;
        }
        (out, over)
    }

    /// States reachable from `s` in 1 ..= bound-1 steps (targets of the
    /// strictly-later relation's connecting gap).
    fn reachable_after(&self, s: StateId) -> Vec<StateId> {
        self.reach(s, |k, v| k.succ(v))
    }

    fn reachable_before(&self, s: StateId) -> Vec<StateId> {
        self.reach(s, |k, v| k.pred(v))
    }

    fn reach(&self, s: StateId, step: impl Fn(&Kripke, StateId) -> &[StateId]) -> Vec<StateId> {
        let mut seen = vec![false; self.k.n_states()];
        let mut out = Vec::new();
        let mut layer = vec![s];
        for _ in 1..self.bound {
            let mut next = Vec::new();
            for &v in &layer {
                for &w in step(self.k, v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        out.push(w);
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        out.sort_unstable();
        out
    }
}

/// Truth of `f` at trace `t` in the bounded universe.
pub fn eval_st(ctx: &EvalContext, t: &Trace, f: &HsFormula) -> bool {
    assert_eq!(ctx.semantics, Semantics::St, "context semantics must be st");
    StEvaluator::new(ctx.k, ctx.bound, f).eval(t)
}

/// Checks `f` over every initial trace of length ≤ bound.
pub fn check_st(ctx: &EvalContext, f: &HsFormula) -> Verdict {
    assert_eq!(ctx.semantics, Semantics::St, "context semantics must be st");
    let mut ev = StEvaluator::new(ctx.k, ctx.bound, f);
    for t in enumerate_traces(ctx.k, ctx.bound, true) {
        let tv = ev.eval_tv(&t);
        if !tv.val {
            return Verdict::failed(Witness::Trace(t), true, !tv.apx);
        }
    }
    // left-total structures always have initial traces beyond any bound
    Verdict::positive(true)
}
