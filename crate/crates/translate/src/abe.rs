//! Finitary CTL* into ABE formulas.
//!
//! The construction lifts the maximal ∃_f-subformulas H of the input to
//! fresh letters, views the input as finite-word LTL over the powerset
//! alphabet Σ = 2^(AP ∪ H), converts that skeleton to a BE formula via an
//! injected oracle table (validated by enumeration before use), and then
//! replaces every letter P by the interval formula forcing each point of
//! the interval to carry exactly the atoms and ∃_f-obligations of P, with
//! the obligations themselves translated recursively.

use crate::TranslateError;
use logic_core::{
    build_length,
    parse::{parse_hs, parse_point},
    render::render_point,
    HsFormula, PointFormula, Rel,
};
use pointwise_eval::{lact_member_hs, lact_member_ltl};
use serde::{Deserialize, Serialize};

/// Word length up to which oracle entries are checked by enumeration.
pub const ORACLE_VALIDATION_LEN: usize = 4;

/// One LTL-to-BE conversion: a rendered finite-word LTL formula over the
/// braced letter alphabet and a BE formula with the same action language.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BeOracleEntry {
    pub ltl: String,
    pub be: String,
    pub alphabet: Vec<String>,
}

/// Table of hand-built LTL-to-BE conversions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BeOracle {
    pub entries: Vec<BeOracleEntry>,
}

impl BeOracle {
    pub fn from_json(text: &str) -> Result<BeOracle, TranslateError> {
        serde_json::from_str(text).map_err(|e| TranslateError::OracleSyntax(e.to_string()))
    }

    /// Checks every entry on all words over its alphabet up to max_len;
    /// the first disagreement is reported with the separating word.
    pub fn validate(&self, max_len: usize) -> Result<(), TranslateError> {
        for entry in &self.entries {
            validate_entry(entry, max_len)?;
        }
        Ok(())
    }

    fn lookup(&self, rendered: &str) -> Option<&BeOracleEntry> {
        self.entries.iter().find(|e| e.ltl == rendered)
    }
}

fn parse_entry(entry: &BeOracleEntry) -> Result<(PointFormula, HsFormula), TranslateError> {
    let ltl =
        parse_point(&entry.ltl).map_err(|e| TranslateError::OracleSyntax(e.to_string()))?;
    let be = parse_hs(&entry.be).map_err(|e| TranslateError::OracleSyntax(e.to_string()))?;
    Ok((ltl, be))
}

fn validate_entry(entry: &BeOracleEntry, max_len: usize) -> Result<(), TranslateError> {
    let (ltl, be) = parse_entry(entry)?;
    let sigma: Vec<&str> = entry.alphabet.iter().map(|s| s.as_str()).collect();
    let mut layer: Vec<Vec<&str>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &c in &sigma {
                let mut w2 = w.clone();
                w2.push(c);
                next.push(w2);
            }
        }
        for w in &next {
            if lact_member_ltl(w, &ltl) != lact_member_hs(w, &be) {
                return Err(TranslateError::OracleMismatch {
                    ltl: entry.ltl.clone(),
                    word: w.join(" "),
                });
            }
        }
        layer = next;
    }
    Ok(())
}

/// The maximal ∃_f-subformulas of f (outermost occurrences only), in
/// first-occurrence order, structurally deduplicated. ∀_f is normalized
/// to ¬∃_f¬ first, so the result also covers universal obligations.
pub fn maximal_finitary_subformulas(
    f: &PointFormula,
) -> Result<Vec<PointFormula>, TranslateError> {
    let g = normalize_fin(f)?;
    let mut out = Vec::new();
    collect(&g, &mut out);
    Ok(out)
}

fn normalize_fin(f: &PointFormula) -> Result<PointFormula, TranslateError> {
    use PointFormula as P;
    Ok(match f {
        P::True => P::True,
        P::Atom(a) => P::Atom(a.clone()),
        P::Not(a) => P::not(normalize_fin(a)?),
        P::And(a, b) => P::and(normalize_fin(a)?, normalize_fin(b)?),
        P::Or(a, b) => P::or(normalize_fin(a)?, normalize_fin(b)?),
        P::Implies(a, b) => P::implies(normalize_fin(a)?, normalize_fin(b)?),
        P::Next(a) => P::next(normalize_fin(a)?),
        P::Until(a, b) => P::until(normalize_fin(a)?, normalize_fin(b)?),
        P::Ev(a) => P::ev(normalize_fin(a)?),
        P::Alw(a) => P::alw(normalize_fin(a)?),
        P::ExistsF(a) => P::ExistsF(Box::new(normalize_fin(a)?)),
        P::ForallF(a) => P::not(P::ExistsF(Box::new(P::not(normalize_fin(a)?)))),
        _ => return Err(TranslateError::NotFinitaryCtlstar),
    })
}

fn collect(f: &PointFormula, out: &mut Vec<PointFormula>) {
    use PointFormula as P;
    match f {
        P::ExistsF(_) => {
            if !out.contains(f) {
                out.push(f.clone());
            }
        }
        P::True | P::Atom(_) => {}
        P::Not(a) | P::Next(a) | P::Ev(a) | P::Alw(a) => collect(a, out),
        P::And(a, b) | P::Or(a, b) | P::Implies(a, b) | P::Until(a, b) => {
            collect(a, out);
            collect(b, out);
        }
        _ => unreachable!("normalized input"),
    }
}

fn point_atoms(f: &PointFormula, out: &mut Vec<String>) {
    use PointFormula as P;
    match f {
        P::Atom(a) => {
            if !out.contains(a) {
                out.push(a.clone());
            }
        }
        P::True => {}
        P::Not(a) | P::Next(a) | P::Ev(a) | P::Alw(a) | P::ExistsF(a) => point_atoms(a, out),
        P::And(a, b) | P::Or(a, b) | P::Implies(a, b) | P::Until(a, b) => {
            point_atoms(a, out);
            point_atoms(b, out);
        }
        _ => unreachable!("normalized input"),
    }
}

/// Letters of 2^elems in binary-counting order, each a sorted index set.
fn powerset(n: usize) -> Vec<Vec<usize>> {
    (0..1usize << n)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

fn letter_name(elems: &[String], letter: &[usize]) -> String {
    let parts: Vec<&str> = letter.iter().map(|&i| elems[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Translates a finitary CTL* formula into an ABE formula whose truth on
/// an interval (as a trace) matches the formula's truth at position 0 of
/// that trace; at the model level, check_st of the result reproduces the
/// finitary CTL* verdict. The oracle supplies the LTL-to-BE step and is
/// validated up to ORACLE_VALIDATION_LEN before use.
pub fn finitary_ctlstar_to_abe(
    f: &PointFormula,
    oracle: &BeOracle,
) -> Result<HsFormula, TranslateError> {
    let g = normalize_fin(f)?;
    let mut hs = Vec::new();
    collect(&g, &mut hs);
    let mut aps = Vec::new();
    point_atoms(&g, &mut aps);
    aps.sort();

    // alphabet elements: atoms first, then one tag per obligation
    let mut elems = aps.clone();
    for i in 0..hs.len() {
        elems.push(format!("h{i}"));
    }
    let letters = powerset(elems.len());
    let names: Vec<String> = letters.iter().map(|l| letter_name(&elems, l)).collect();

    let skeleton = skeletonize(&g, &aps, &hs, &letters, &names);
    let rendered = render_point(&skeleton);
    let entry = oracle
        .lookup(&rendered)
        .ok_or_else(|| TranslateError::MissingOracleEntry(rendered.clone()))?;
    let mut sorted_entry = entry.alphabet.clone();
    sorted_entry.sort();
    let mut sorted_names = names.clone();
    sorted_names.sort();
    if sorted_entry != sorted_names {
        return Err(TranslateError::OracleAlphabet { ltl: entry.ltl.clone() });
    }
    validate_entry(entry, ORACLE_VALIDATION_LEN)?;
    let (_, be) = parse_entry(entry)?;

    // recursively translate each obligation's body
    let mut obligations = Vec::new();
    for h in &hs {
        let body = match h {
            PointFormula::ExistsF(a) => a,
            _ => unreachable!(),
        };
        obligations.push(finitary_ctlstar_to_abe(body, oracle)?);
    }

    let descriptions: Vec<HsFormula> = letters
        .iter()
        .map(|l| letter_description(l, &aps, &obligations))
        .collect();
    Ok(replace_letters(&be, &names, &descriptions))
}

fn skeletonize(
    f: &PointFormula,
    aps: &[String],
    hs: &[PointFormula],
    letters: &[Vec<usize>],
    names: &[String],
) -> PointFormula {
    use PointFormula as P;
    let letters_with = |idx: usize| -> PointFormula {
        let mut items = Vec::new();
        for (l, name) in letters.iter().zip(names) {
            if l.contains(&idx) {
                items.push(P::Atom(name.clone()));
            }
        }
        items
            .into_iter()
            .reduce(P::or)
            .expect("every element occurs in some letter")
    };
    match f {
        P::ExistsF(_) => {
            let i = hs.iter().position(|h| h == f).expect("collected");
            letters_with(aps.len() + i)
        }
        P::Atom(a) => {
            let i = aps.iter().position(|p| p == a).expect("collected");
            letters_with(i)
        }
        P::True => P::True,
        P::Not(a) => P::not(skeletonize(a, aps, hs, letters, names)),
        P::Next(a) => P::next(skeletonize(a, aps, hs, letters, names)),
        P::Ev(a) => P::ev(skeletonize(a, aps, hs, letters, names)),
        P::Alw(a) => P::alw(skeletonize(a, aps, hs, letters, names)),
        P::And(a, b) => P::and(
            skeletonize(a, aps, hs, letters, names),
            skeletonize(b, aps, hs, letters, names),
        ),
        P::Or(a, b) => P::or(
            skeletonize(a, aps, hs, letters, names),
            skeletonize(b, aps, hs, letters, names),
        ),
        P::Implies(a, b) => P::implies(
            skeletonize(a, aps, hs, letters, names),
            skeletonize(b, aps, hs, letters, names),
        ),
        P::Until(a, b) => P::until(
            skeletonize(a, aps, hs, letters, names),
            skeletonize(b, aps, hs, letters, names),
        ),
        _ => unreachable!("normalized input"),
    }
}

/// [G](length₁ → …): every point of the interval carries exactly the
/// atoms of the letter and meets exactly the letter's obligations.
fn letter_description(
    letter: &[usize],
    aps: &[String],
    obligations: &[HsFormula],
) -> HsFormula {
    use HsFormula as H;
    let mut conj = Vec::new();
    for (i, ob) in obligations.iter().enumerate() {
        let idx = aps.len() + i;
        let meets = H::ex(Rel::A, ob.clone());
        conj.push(if letter.contains(&idx) { meets } else { H::not(meets) });
    }
    for (i, p) in aps.iter().enumerate() {
        let atom = H::atom(p.clone());
        conj.push(if letter.contains(&i) { atom } else { H::not(atom) });
    }
    H::univ(
        Rel::G,
        H::implies(build_length(1).expect("n >= 1"), H::conj(conj)),
    )
}

fn replace_letters(f: &HsFormula, names: &[String], descriptions: &[HsFormula]) -> HsFormula {
    use HsFormula as H;
    match f {
        H::Atom(a) => match names.iter().position(|n| n == a) {
            Some(i) => descriptions[i].clone(),
            None => f.clone(),
        },
        H::True => H::True,
        H::Not(a) => H::not(replace_letters(a, names, descriptions)),
        H::And(a, b) => H::and(
            replace_letters(a, names, descriptions),
            replace_letters(b, names, descriptions),
        ),
        H::Or(a, b) => H::or(
            replace_letters(a, names, descriptions),
            replace_letters(b, names, descriptions),
        ),
        H::Implies(a, b) => H::implies(
            replace_letters(a, names, descriptions),
            replace_letters(b, names, descriptions),
        ),
        H::Modal(r, pol, a) => {
            H::Modal(*r, *pol, Box::new(replace_letters(a, names, descriptions)))
        }
    }
}
