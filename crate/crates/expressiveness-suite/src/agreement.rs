//! R(h)-indistinguishability of balanced formulas on the chain family,
//! and the two-structure report for the formula that tells K1 from K2.

use crate::balanced::{enumerate_balanced, BalancedFormulaSpec};
use crate::profile::profile_in;
use crate::Report;
use hs_eval::{check_ct, check_st, EvalContext, Semantics, StEvaluator, Verdict, Witness};
use kripke_model::{enumerate_traces, k1, k2, kn, mn};
use logic_core::{build_length, hs_size, render::render_hs, HsFormula, Rel};
use std::fmt;

/// For every balanced formula f of size ≤ max_size over {p}: traces of
/// kn(n) related by R(size(f)) agree on f, and kn(n) and mn(n) reach the
/// same overall verdict. Requires max_size ≤ n so that R(size(f)) is
/// defined.
pub fn agreement_check(n: usize, max_size: usize, bound: usize) -> Report {
    assert!(
        1 <= max_size && max_size <= n,
        "require 1 <= max_size <= n"
    );
    let k = kn(n);
    let m = mn(n);
    let traces = enumerate_traces(&k, bound, false);
    let profiles: Vec<_> = traces.iter().map(|t| profile_in(&k, n, t)).collect();
    let formulas = enumerate_balanced(&BalancedFormulaSpec {
        atoms: vec!["p".to_string()],
        relations: vec![Rel::B, Rel::BBar, Rel::E, Rel::EBar],
        max_size,
    });
    let mut checked = 0usize;
    let mut violations = Vec::new();
    for f in &formulas {
        let h = hs_size(f);
        // each nested left/right extension adds at least one state, so
        // max_size states of slack keep the evaluator's cap invisible to
        // the formulas under test even on full-length traces
        let mut ev = StEvaluator::new(&k, bound + max_size, f);
        let vals: Vec<bool> = traces.iter().map(|t| ev.eval(t)).collect();
        for i in 0..traces.len() {
            for j in i + 1..traces.len() {
                if !crate::profile::compat(profiles[i], profiles[j], h) {
                    continue;
                }
                checked += 1;
                if vals[i] != vals[j] {
                    violations.push(format!(
                        "{} splits R({h}) pair {} / {}",
                        render_hs(f),
                        k.trace_names(&traces[i]).join("·"),
                        k.trace_names(&traces[j]).join("·")
                    ));
                }
            }
        }
        checked += 1;
        let vk = check_st(&EvalContext::new(&k, Semantics::St, bound), f);
        let vm = check_st(&EvalContext::new(&m, Semantics::St, bound), f);
        if vk.value != vm.value {
            violations.push(format!(
                "{} separates the structures: {:?} vs {:?}",
                render_hs(f),
                vk.value,
                vm.value
            ));
        }
    }
    Report {
        title: format!("balanced agreement n={n} max_size={max_size} bound={bound}"),
        checked,
        violations,
    }
}

/// Verdicts of the K1/K2-separating formula under both trace-shaped
/// semantics at bound 6.
#[derive(Debug, Clone)]
pub struct DistinguishingReport {
    pub psi: HsFormula,
    pub st_k1: Verdict,
    pub st_k2: Verdict,
    pub ct_k1: Verdict,
    pub ct_k2: Verdict,
}

/// ⟨E⟩(p ∧ len1) → ⟨E⟩(len1 ∧ ⟨Ā⟩(p ∧ ¬len1)): every p-suffix forces a
/// point suffix that meets a longer p-interval backwards.
fn separating_formula() -> HsFormula {
    let len1 = build_length(1).expect("length 1 is buildable");
    HsFormula::implies(
        HsFormula::ex(Rel::E, HsFormula::and(HsFormula::atom("p"), len1.clone())),
        HsFormula::ex(
            Rel::E,
            HsFormula::and(
                len1.clone(),
                HsFormula::ex(
                    Rel::ABar,
                    HsFormula::and(HsFormula::atom("p"), HsFormula::not(len1)),
                ),
            ),
        ),
    )
}

pub fn distinguishing_report() -> DistinguishingReport {
    let psi = separating_formula();
    let a = k1();
    let b = k2();
    DistinguishingReport {
        st_k1: check_st(&EvalContext::new(&a, Semantics::St, 6), &psi),
        st_k2: check_st(&EvalContext::new(&b, Semantics::St, 6), &psi),
        ct_k1: check_ct(&EvalContext::new(&a, Semantics::Ct, 6), &psi),
        ct_k2: check_ct(&EvalContext::new(&b, Semantics::Ct, 6), &psi),
        psi,
    }
}

impl fmt::Display for DistinguishingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "psi = {}", render_hs(&self.psi))?;
        let (a, b) = (k1(), k2());
        for (label, v, k) in [
            ("st K1", &self.st_k1, &a),
            ("st K2", &self.st_k2, &b),
            ("ct K1", &self.ct_k1, &a),
            ("ct K2", &self.ct_k2, &b),
        ] {
            write!(f, "{label}: {:?}", v.value)?;
            if let Some(Witness::Trace(t)) = &v.witness {
                write!(f, " at {}", k.trace_names(t).join("·"))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
