//! Constructive translations between the formula dialects: HS into
//! first-order logic over path positions, LTL into the AB fragment,
//! closure/marker constructions for action languages, finitary CTL* into
//! ABE via an injected LTL-to-BE oracle, HS under the tree semantics into
//! hybrid linear-past logic, and elimination of initial past operators.
//! Each mapping is paired with a brute-force validation hook in the tests.

mod ab;
mod abe;
mod closure;
mod fo;
mod hybrid;
mod past;

pub use ab::ltl_to_ab;
pub use abe::{
    finitary_ctlstar_to_abe, maximal_finitary_subformulas, BeOracle, BeOracleEntry,
    ORACLE_VALIDATION_LEN,
};
pub use closure::{closure_formula, closure_substitute, ClosureKind, LetterDef, LetterTheory};
pub use fo::{hs_to_fo, FoTranslation};
pub use hybrid::{hs_ct_to_hybrid, is_well_formed};
pub use past::eliminate_initial_past;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranslateError {
    #[error("input must be pure future LTL (no past operators, no quantifiers)")]
    NotPureLtl,
    #[error("marker letter `{0}` already occurs in the formula")]
    MarkerInFormula(String),
    #[error("prefix/suffix formulas admit only <B>/<E>, found {0}")]
    NotBe(String),
    #[error("letter `{0}` is not defined by the theory")]
    MissingLetter(String),
    #[error("letters `{d1}` and `{d2}` overlap on the block `{word}`")]
    OverlappingLetters { word: String, d1: String, d2: String },
    #[error("no oracle entry for the skeleton `{0}`")]
    MissingOracleEntry(String),
    #[error("oracle entry for `{ltl}` disagrees with its BE formula on the word `{word}`")]
    OracleMismatch { ltl: String, word: String },
    #[error("oracle entry for `{ltl}` lists a different alphabet than the skeleton's letters")]
    OracleAlphabet { ltl: String },
    #[error("oracle entry does not parse: {0}")]
    OracleSyntax(String),
    #[error("input contains a non-finitary quantifier or hybrid machinery")]
    NotFinitaryCtlstar,
}
