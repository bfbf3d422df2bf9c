//! Structure document loading. Format (JSON): top-level keys `atoms`
//! (list of names), `states` (list of {id, label}), `edges` (list of
//! [from, to] pairs), `initial` (id). Unknown keys are rejected.

use crate::{Kripke, KripkeError};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    atoms: Vec<String>,
    states: Vec<StateDoc>,
    edges: Vec<(String, String)>,
    initial: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateDoc {
    id: String,
    label: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("malformed structure document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] KripkeError),
}

pub fn load_kripke(document: &str) -> Result<Kripke, LoadError> {
    let doc: Doc = serde_json::from_str(document)?;
    let initial = doc.initial.as_deref().ok_or(KripkeError::MissingInitial)?;
    let atoms: Vec<&str> = doc.atoms.iter().map(|s| s.as_str()).collect();
    let labels: Vec<Vec<&str>> = doc
        .states
        .iter()
        .map(|s| s.label.iter().map(|a| a.as_str()).collect())
        .collect();
    let states: Vec<(&str, &[&str])> = doc
        .states
        .iter()
        .zip(&labels)
        .map(|(s, l)| (s.id.as_str(), l.as_slice()))
        .collect();
    let edges: Vec<(&str, &str)> =
        doc.edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Ok(Kripke::new(&atoms, &states, &edges, initial)?)
}

/// Renders a structure back into the document format (used for
/// machine-readable output and tests).
pub fn dump_kripke(k: &Kripke) -> String {
    let states: Vec<serde_json::Value> = (0..k.n_states())
        .map(|i| {
            let s = i as u32;
            let label: Vec<&str> = k
                .atom_names()
                .iter()
                .enumerate()
                .filter(|(j, _)| k.label_mask(s) >> j & 1 == 1)
                .map(|(_, a)| a.as_str())
                .collect();
            serde_json::json!({"id": k.state_name(s), "label": label})
        })
        .collect();
    let mut edges = Vec::new();
    for i in 0..k.n_states() {
        for &t in k.succ(i as u32) {
            edges.push(serde_json::json!([k.state_name(i as u32), k.state_name(t)]));
        }
    }
    serde_json::to_string_pretty(&serde_json::json!({
        "atoms": k.atom_names(),
        "states": states,
        "edges": edges,
        "initial": k.state_name(k.initial()),
    }))
    .expect("serializable")
}
