//! Finite Kripke structures with left-total transition relations, their
//! traces (nonempty finite paths), lassos (ultimately periodic infinite
//! paths), computation-tree nodes, and the built-in example structures.

mod builtins;
mod load;

pub use builtins::{builtin, fig1, k1, k2, kn, mn, vending};
pub use load::{dump_kripke, load_kripke, LoadError};

use std::collections::BTreeSet;

/// State index into a [`Kripke`]. Traces are sequences of these.
pub type StateId = u32;

/// A nonempty finite path, stored as state indices.
pub type Trace = Vec<StateId>;

/// Validated Kripke structure. Successor and predecessor lists are sorted
/// by state index, which fixes the length-lexicographic enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kripke {
    atom_names: Vec<String>,
    state_names: Vec<String>,
    labels: Vec<u64>,
    succ: Vec<Vec<StateId>>,
    pred: Vec<Vec<StateId>>,
    initial: StateId,
    /// Dead-end states permitted (diagnostic trees only).
    diagnostic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KripkeError {
    #[error("state `{0}` has no outgoing transition (relation not left-total)")]
    NotLeftTotal(String),
    #[error("unknown atom `{atom}` in label of state `{state}`")]
    UnknownAtom { state: String, atom: String },
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("duplicate state id `{0}`")]
    DuplicateState(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("missing initial state")]
    MissingInitial,
    #[error("too many atoms (max 64)")]
    TooManyAtoms,
}

impl Kripke {
    /// Builds and validates a structure from names.
    pub fn new(
        atoms: &[&str],
        states: &[(&str, &[&str])],
        edges: &[(&str, &str)],
        initial: &str,
    ) -> Result<Kripke, KripkeError> {
        Self::build(atoms, states, edges, initial, false)
    }

    fn build(
        atoms: &[&str],
        states: &[(&str, &[&str])],
        edges: &[(&str, &str)],
        initial: &str,
        diagnostic: bool,
    ) -> Result<Kripke, KripkeError> {
        if atoms.len() > 64 {
            return Err(KripkeError::TooManyAtoms);
        }
        let atom_names: Vec<String> = atoms.iter().map(|s| s.to_string()).collect();
        for (i, a) in atom_names.iter().enumerate() {
            if atom_names[..i].contains(a) {
                return Err(KripkeError::DuplicateAtom(a.clone()));
            }
        }
        let state_names: Vec<String> = states.iter().map(|(n, _)| n.to_string()).collect();
        for (i, s) in state_names.iter().enumerate() {
            if state_names[..i].contains(s) {
                return Err(KripkeError::DuplicateState(s.clone()));
            }
        }
        let idx = |name: &str| -> Result<StateId, KripkeError> {
            state_names
                .iter()
                .position(|s| s == name)
                .map(|i| i as StateId)
                .ok_or_else(|| KripkeError::UnknownState(name.to_string()))
        };
        let mut labels = Vec::with_capacity(states.len());
        for (name, label) in states {
            let mut mask = 0u64;
            for a in *label {
                match atom_names.iter().position(|x| x == a) {
                    Some(i) => mask |= 1 << i,
                    None => {
                        return Err(KripkeError::UnknownAtom {
                            state: name.to_string(),
                            atom: a.to_string(),
                        })
                    }
                }
            }
            labels.push(mask);
        }
        let mut succ = vec![Vec::new(); states.len()];
        let mut pred = vec![Vec::new(); states.len()];
        for (from, to) in edges {
            let f = idx(from)?;
            let t = idx(to)?;
            if !succ[f as usize].contains(&t) {
                succ[f as usize].push(t);
                pred[t as usize].push(f);
            }
        }
        for v in succ.iter_mut().chain(pred.iter_mut()) {
            v.sort_unstable();
        }
        if !diagnostic {
            for (i, s) in succ.iter().enumerate() {
                if s.is_empty() {
                    return Err(KripkeError::NotLeftTotal(state_names[i].clone()));
                }
            }
        }
        let initial = idx(initial)?;
        Ok(Kripke { atom_names, state_names, labels, succ, pred, initial, diagnostic })
    }

    pub fn n_states(&self) -> usize {
        self.state_names.len()
    }
    pub fn initial(&self) -> StateId {
        self.initial
    }
    pub fn atom_names(&self) -> &[String] {
        &self.atom_names
    }
    pub fn state_name(&self, s: StateId) -> &str {
        &self.state_names[s as usize]
    }
    pub fn state_index(&self, name: &str) -> Option<StateId> {
        self.state_names.iter().position(|s| s == name).map(|i| i as StateId)
    }
    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atom_names.iter().position(|s| s == name)
    }
    pub fn label_mask(&self, s: StateId) -> u64 {
        self.labels[s as usize]
    }
    pub fn succ(&self, s: StateId) -> &[StateId] {
        &self.succ[s as usize]
    }
    pub fn pred(&self, s: StateId) -> &[StateId] {
        &self.pred[s as usize]
    }
    pub fn is_diagnostic(&self) -> bool {
        self.diagnostic
    }

    pub fn has_edge(&self, a: StateId, b: StateId) -> bool {
        self.succ[a as usize].contains(&b)
    }

    /// Checks that `t` is a nonempty path of this structure.
    pub fn is_trace(&self, t: &[StateId]) -> bool {
        !t.is_empty()
            && t.iter().all(|&s| (s as usize) < self.n_states())
            && t.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Homogeneous label of a trace: intersection of the state labels.
    pub fn trace_mask(&self, t: &[StateId]) -> u64 {
        t.iter().fold(!0u64, |m, &s| m & self.labels[s as usize])
    }

    pub fn trace_names(&self, t: &[StateId]) -> Vec<String> {
        t.iter().map(|&s| self.state_name(s).to_string()).collect()
    }

    pub fn parse_trace(&self, names: &[&str]) -> Result<Trace, KripkeError> {
        names
            .iter()
            .map(|n| self.state_index(n).ok_or_else(|| KripkeError::UnknownState(n.to_string())))
            .collect()
    }
}

/// Homogeneous labeling of a trace, as atom names.
pub fn trace_label(k: &Kripke, t: &[StateId]) -> Result<BTreeSet<String>, KripkeError> {
    if !k.is_trace(t) {
        return Err(KripkeError::UnknownState(format!("{t:?} is not a trace")));
    }
    let mask = k.trace_mask(t);
    Ok(k.atom_names
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, a)| a.clone())
        .collect())
}

/// All traces (or all initial traces) of length ≤ `max_len`, each exactly
/// once, in length-lexicographic order over state indices.
pub fn enumerate_traces(k: &Kripke, max_len: usize, initial_only: bool) -> Vec<Trace> {
    assert!(max_len >= 1, "max_len must be >= 1");
    let mut out = Vec::new();
    let mut layer: Vec<Trace> = if initial_only {
        vec![vec![k.initial]]
    } else {
        (0..k.n_states() as StateId).map(|s| vec![s]).collect()
    };
    for len in 1..=max_len {
        out.extend(layer.iter().cloned());
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for t in &layer {
            let last = *t.last().unwrap();
            for &s in k.succ(last) {
                let mut t2 = t.clone();
                t2.push(s);
                next.push(t2);
            }
        }
        layer = next;
    }
    out
}

/// Finite representation of the infinite path `stem · loop^ω`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lasso {
    pub stem: Vec<StateId>,
    pub looping: Vec<StateId>,
}

impl Lasso {
    pub fn new(stem: Vec<StateId>, looping: Vec<StateId>) -> Lasso {
        assert!(!looping.is_empty(), "loop must be nonempty");
        Lasso { stem, looping }
    }

    /// State at position `i` of the infinite path.
    pub fn at(&self, i: usize) -> StateId {
        if i < self.stem.len() {
            self.stem[i]
        } else {
            self.looping[(i - self.stem.len()) % self.looping.len()]
        }
    }

    pub fn total_len(&self) -> usize {
        self.stem.len() + self.looping.len()
    }

    /// The first `n` states of the unrolled path (a trace when n ≥ 1).
    pub fn prefix(&self, n: usize) -> Trace {
        (0..n).map(|i| self.at(i)).collect()
    }

    /// Checks stem·loop·loop is a trace and the loop closes.
    pub fn is_valid(&self, k: &Kripke) -> bool {
        let unrolled = self.prefix(self.stem.len() + 2 * self.looping.len());
        k.is_trace(&unrolled) && k.has_edge(*self.looping.last().unwrap(), self.looping[0])
    }
}

/// All initial lassos with |stem| + |loop| ≤ `max_total`, deduplicated by
/// (stem, loop) pair, ordered by the underlying trace (length-lex) and
/// then by stem length.
pub fn enumerate_lassos(k: &Kripke, max_total: usize) -> Vec<Lasso> {
    assert!(max_total >= 1, "max_total must be >= 1");
    let mut out = Vec::new();
    for w in enumerate_traces(k, max_total, true) {
        let last = *w.last().unwrap();
        for i in 0..w.len() {
            if k.has_edge(last, w[i]) {
                out.push(Lasso::new(w[..i].to_vec(), w[i..].to_vec()));
            }
        }
    }
    out
}

/// Node of the computation tree: the tree trace running from node
/// `base[0..=start]` to node `base` itself.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CtNode {
    pub base: Trace,
    pub start: usize,
}

impl CtNode {
    pub fn new(base: Trace, start: usize) -> CtNode {
        assert!(start < base.len(), "start must index into base");
        CtNode { base, start }
    }

    /// Number of tree nodes spanned (interval length in states).
    pub fn span(&self) -> usize {
        self.base.len() - self.start
    }

    pub fn is_valid(&self, k: &Kripke) -> bool {
        self.start < self.base.len()
            && self.base[0] == k.initial()
            && k.is_trace(&self.base)
    }
}

/// Frontier-truncated unwinding of the computation tree, as a structure
/// whose node names are dot-joined state names. Not left-total: for
/// diagnostics only, never fed to evaluators.
pub fn unwind(k: &Kripke, depth: usize) -> Kripke {
    assert!(depth >= 1, "depth must be >= 1");
    let traces = enumerate_traces(k, depth, true);
    let name_of =
        |t: &Trace| t.iter().map(|&s| k.state_name(s)).collect::<Vec<_>>().join(".");
    let names: Vec<String> = traces.iter().map(&name_of).collect();
    let atoms: Vec<&str> = k.atom_names.iter().map(|s| s.as_str()).collect();
    let mut states: Vec<(&str, Vec<&str>)> = Vec::new();
    for (t, n) in traces.iter().zip(&names) {
        let last = *t.last().unwrap();
        let label: Vec<&str> = k
            .atom_names
            .iter()
            .enumerate()
            .filter(|(i, _)| k.label_mask(last) >> i & 1 == 1)
            .map(|(_, a)| a.as_str())
            .collect();
        states.push((n.as_str(), label));
    }
    let mut edges: Vec<(String, String)> = Vec::new();
    for (t, n) in traces.iter().zip(&names) {
        if t.len() == depth {
            continue;
        }
        let last = *t.last().unwrap();
        for &s in k.succ(last) {
            let mut child = t.clone();
            child.push(s);
            edges.push((n.clone(), name_of(&child)));
        }
    }
    let states_ref: Vec<(&str, &[&str])> =
        states.iter().map(|(n, l)| (*n, l.as_slice())).collect();
    let edges_ref: Vec<(&str, &str)> =
        edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Kripke::build(&atoms, &states_ref, &edges_ref, &names[0], true)
        .expect("unwound tree is well-formed")
}
