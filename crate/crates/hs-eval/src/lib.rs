//! Bounded HS model checking under the three semantic variants.
//!
//! Every quantifier domain is finite (trace lengths capped by the context
//! bound, path positions by a horizon). Evaluation tracks, per subresult,
//! whether a truncated domain could still flip it at a larger bound; this
//! powers the three-valued verdicts and the witness purity flag.

mod arena;
mod ct;
mod lin;
mod st;

pub use ct::{check_ct, eval_ct, CtEvaluator};
pub use lin::{check_lin, eval_interval, eval_interval_limit, future_only, LinEvaluator};
pub use st::{check_st, eval_st, StEvaluator};

use kripke_model::{Kripke, Lasso, Trace};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    St,
    Ct,
    Lin,
}

impl Semantics {
    pub fn name(self) -> &'static str {
        match self {
            Semantics::St => "st",
            Semantics::Ct => "ct",
            Semantics::Lin => "lin",
        }
    }
}

/// Checker configuration: structure, semantic variant, and the bound
/// (max trace length for st/ct; max |stem|+|loop| and max initial interval
/// endpoint for lin, with right extensions capped at 2·bound).
#[derive(Clone, Copy)]
pub struct EvalContext<'a> {
    pub k: &'a Kripke,
    pub semantics: Semantics,
    pub bound: usize,
}

impl<'a> EvalContext<'a> {
    pub fn new(k: &'a Kripke, semantics: Semantics, bound: usize) -> Self {
        assert!(bound >= 1, "bound must be >= 1");
        EvalContext { k, semantics, bound }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictValue {
    Holds,
    Fails,
    HoldsInBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Failing initial trace (st/ct, and the pointwise finitary checkers).
    Trace(Trace),
    /// Failing initial interval on an initial lasso (lin).
    LassoInterval(Lasso, (usize, usize)),
    /// Failing initial path (the pointwise path-based checkers).
    Lasso(Lasso),
}

/// Outcome of a bounded check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub value: VerdictValue,
    pub witness: Option<Witness>,
    /// Some quantifier domain was truncated somewhere during the check.
    pub bound_hit: bool,
    /// For fails: the counterexample's evaluation never relied on a
    /// truncated universal domain, so it survives at every larger bound.
    pub pure_witness: bool,
}

impl Verdict {
    pub fn passes(&self) -> bool {
        matches!(self.value, VerdictValue::Holds | VerdictValue::HoldsInBound)
    }

    pub fn positive(bound_hit: bool) -> Verdict {
        Verdict {
            value: if bound_hit { VerdictValue::HoldsInBound } else { VerdictValue::Holds },
            witness: None,
            bound_hit,
            pure_witness: false,
        }
    }

    pub fn failed(witness: Witness, bound_hit: bool, pure_witness: bool) -> Verdict {
        Verdict { value: VerdictValue::Fails, witness: Some(witness), bound_hit, pure_witness }
    }
}

/// Truth value with an approximation marker: `apx` means a truncated
/// quantifier domain could change `val` at a larger bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Tv {
    pub val: bool,
    pub apx: bool,
}

impl Tv {
    pub(crate) const fn stable(val: bool) -> Tv {
        Tv { val, apx: false }
    }
    pub(crate) fn not(self) -> Tv {
        Tv { val: !self.val, apx: self.apx }
    }
    pub(crate) fn and(self, other: Tv) -> Tv {
        match (self.val, other.val) {
            (true, true) => Tv { val: true, apx: self.apx || other.apx },
            (false, _) if !self.apx => Tv::stable(false),
            (_, false) if !other.apx => Tv::stable(false),
            _ => Tv { val: false, apx: true },
        }
    }
    pub(crate) fn or(self, other: Tv) -> Tv {
        self.not().and(other.not()).not()
    }
}
