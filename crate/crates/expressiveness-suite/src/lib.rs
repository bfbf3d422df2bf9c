//! Replays of the chain-family separation arguments: trace profiles and
//! the compatibility relation R(h), bounded exhaustive verification of the
//! compatibility lemma, balanced-formula enumeration, the K_n/M_n
//! agreement grid, and the two-structure distinguishing report.

mod agreement;
mod balanced;
mod lemma;
mod profile;

pub use agreement::{agreement_check, distinguishing_report, DistinguishingReport};
pub use balanced::{enumerate_balanced, BalancedFormulaSpec};
pub use lemma::{verify_compatibility_lemma, verify_compatibility_with};
pub use profile::{h_compatible, profile, TraceProfile};

use std::fmt;

/// Outcome of a bounded exhaustive check: how many cases were examined
/// and a description of each violation found.
#[derive(Debug, Clone)]
pub struct Report {
    pub title: String,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} cases checked, {} violation(s)",
            self.title,
            self.checked,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}
