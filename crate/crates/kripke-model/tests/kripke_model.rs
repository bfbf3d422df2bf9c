use kripke_model::*;
use std::collections::BTreeSet;

fn names(k: &Kripke, t: &[StateId]) -> String {
    k.trace_names(t).join(" ")
}

const FIG1_DOC: &str = r#"{
  "atoms": ["p", "q"],
  "states": [{"id": "s0", "label": ["p"]}, {"id": "s1", "label": ["q"]}],
  "edges": [["s0", "s1"], ["s1", "s0"], ["s1", "s1"]],
  "initial": "s0"
}"#;

#[test]
fn load_fig1_document() {
    let k = load_kripke(FIG1_DOC).unwrap();
    assert_eq!(k, fig1());
    assert_eq!(k.n_states(), 2);
    assert_eq!(k.state_name(k.initial()), "s0");
    // dump round-trips
    assert_eq!(load_kripke(&dump_kripke(&k)).unwrap(), k);
}

#[test]
fn load_rejections() {
    let dead_end = FIG1_DOC.replace(r#"["s1", "s0"], ["s1", "s1"]"#, r#"["s0", "s0"]"#);
    let err = load_kripke(&dead_end).unwrap_err().to_string();
    assert!(err.contains("s1") && err.contains("left-total"), "{err}");

    let bad_atom = FIG1_DOC.replace(r#""label": ["q"]"#, r#""label": ["r"]"#);
    let err = load_kripke(&bad_atom).unwrap_err().to_string();
    assert!(err.contains("unknown atom `r`"), "{err}");

    let no_init = FIG1_DOC.replace(r#",
  "initial": "s0""#, "");
    let err = load_kripke(&no_init).unwrap_err().to_string();
    assert!(err.contains("missing initial"), "{err}");

    let extra_key = FIG1_DOC.replace(r#""atoms""#, r#""extra": 1, "atoms""#);
    assert!(load_kripke(&extra_key).is_err());
}

#[test]
fn trace_label_examples() {
    let k = fig1();
    let t = k.parse_trace(&["s0", "s1"]).unwrap();
    assert!(trace_label(&k, &t).unwrap().is_empty());
    let t = k.parse_trace(&["s1", "s1"]).unwrap();
    assert_eq!(trace_label(&k, &t).unwrap(), BTreeSet::from(["q".to_string()]));

    let v = vending();
    let t = v.parse_trace(&["s0", "s1", "s4"]).unwrap();
    assert_eq!(
        trace_label(&v, &t).unwrap(),
        BTreeSet::from(["p_operative".to_string()])
    );

    // not a trace
    let t = vec![0, 0];
    assert!(trace_label(&k, &t).is_err());
}

/// Independent trace-count oracle: sum over path counts by matrix powers.
fn count_traces(k: &Kripke, max_len: usize, initial_only: bool) -> usize {
    let n = k.n_states();
    let mut counts = vec![0usize; n];
    for s in 0..n {
        counts[s] = if initial_only && s != k.initial() as usize { 0 } else { 1 };
    }
    let mut total: usize = counts.iter().sum();
    let mut frontier = counts;
    for _ in 1..max_len {
        let mut next = vec![0usize; n];
        for s in 0..n {
            for &t in k.succ(s as StateId) {
                next[t as usize] += frontier[s];
            }
        }
        total += next.iter().sum::<usize>();
        frontier = next;
    }
    total
}

#[test]
fn enumerate_traces_examples() {
    let k = fig1();
    let t1 = enumerate_traces(&k, 1, true);
    assert_eq!(t1.len(), 1);
    assert_eq!(names(&k, &t1[0]), "s0");

    let t2 = enumerate_traces(&k, 2, true);
    assert_eq!(
        t2.iter().map(|t| names(&k, t)).collect::<Vec<_>>(),
        vec!["s0", "s0 s1"]
    );

    let all3 = enumerate_traces(&k, 3, false);
    assert_eq!(all3.len(), count_traces(&k, 3, false));
    // no duplicates, all valid, length-lex ordered
    let mut seen = BTreeSet::new();
    let mut prev: Option<&Trace> = None;
    for t in &all3 {
        assert!(k.is_trace(t));
        assert!(seen.insert(t.clone()));
        if let Some(p) = prev {
            assert!((p.len(), p) <= (t.len(), t));
        }
        prev = Some(t);
    }
}

#[test]
fn enumerate_traces_counts_match_oracle() {
    for k in [fig1(), vending(), k1(), k2(), kn(2), mn(2)] {
        for max_len in 1..=6 {
            for initial_only in [false, true] {
                assert_eq!(
                    enumerate_traces(&k, max_len, initial_only).len(),
                    count_traces(&k, max_len, initial_only)
                );
            }
        }
    }
}

#[test]
fn prefix_restriction_invariant() {
    let k = vending();
    for m in 2..=5 {
        let shorter = enumerate_traces(&k, m - 1, false);
        let filtered: Vec<Trace> = enumerate_traces(&k, m, false)
            .into_iter()
            .filter(|t| t.len() <= m - 1)
            .collect();
        assert_eq!(shorter, filtered);
    }
}

#[test]
fn label_monotonicity() {
    let k = vending();
    for t in enumerate_traces(&k, 4, false) {
        let last = *t.last().unwrap();
        for &s in k.succ(last) {
            let mut t2 = t.clone();
            t2.push(s);
            let l1 = k.trace_mask(&t);
            let l2 = k.trace_mask(&t2);
            assert_eq!(l1 & l2, l2, "labels must shrink along extension");
        }
    }
}

#[test]
fn enumerate_lassos_examples() {
    let k = fig1();
    let ls = enumerate_lassos(&k, 2);
    assert_eq!(ls.len(), 2);
    assert_eq!(ls[0], Lasso::new(vec![], vec![0, 1]));
    assert_eq!(ls[1], Lasso::new(vec![0], vec![1]));
    for l in &ls {
        assert!(l.is_valid(&k));
    }

    // self-loop at the initial state yields the stemless unit lasso
    let ls = enumerate_lassos(&kn(1), 1);
    assert_eq!(ls, vec![Lasso::new(vec![], vec![kn(1).initial()])]);

    // every lasso unrolls to a valid trace of any length, and the set is
    // duplicate-free
    let k = vending();
    let ls = enumerate_lassos(&k, 6);
    let mut seen = BTreeSet::new();
    for l in &ls {
        assert!(l.is_valid(&k));
        assert!(k.is_trace(&l.prefix(17)));
        assert!(seen.insert((l.stem.clone(), l.looping.clone())));
    }
}

#[test]
fn lasso_indexing() {
    let l = Lasso::new(vec![7], vec![3, 4]);
    let got: Vec<StateId> = (0..6).map(|i| l.at(i)).collect();
    assert_eq!(got, vec![7, 3, 4, 3, 4, 3]);
    assert_eq!(l.total_len(), 3);
}

#[test]
fn unwind_examples() {
    let k = fig1();
    let u = unwind(&k, 3);
    assert!(u.is_diagnostic());
    assert_eq!(u.n_states(), enumerate_traces(&k, 3, true).len());
    for name in ["s0", "s0.s1", "s0.s1.s0", "s0.s1.s1"] {
        assert!(u.state_index(name).is_some(), "missing node {name}");
    }
    // node label mirrors the label of the last state on the branch
    let node = u.state_index("s0.s1").unwrap();
    assert_eq!(u.label_mask(node), k.label_mask(k.state_index("s1").unwrap()));

    let root_only = unwind(&k, 1);
    assert_eq!(root_only.n_states(), 1);
}

#[test]
fn builtin_structures() {
    assert_eq!(builtin("fig1").unwrap(), fig1());
    assert_eq!(builtin("kn(2)").unwrap(), kn(2));
    assert_eq!(builtin("mn(3)").unwrap(), mn(3));
    assert!(builtin("nope").is_err());

    let k = kn(1);
    assert_eq!(k.n_states(), 4);
    assert_eq!(k.state_name(k.initial()), "s0");
    assert!(k.has_edge(k.state_index("s0").unwrap(), k.state_index("s0").unwrap()));
    assert!(k.has_edge(k.state_index("t").unwrap(), k.state_index("t").unwrap()));
    let t_idx = k.state_index("t").unwrap();
    assert_eq!(k.label_mask(t_idx), 1);

    let m = mn(2);
    assert_eq!(m.state_name(m.initial()), "s1");
    assert_eq!(m.n_states(), 6);

    let k1 = k1();
    assert_eq!(k1.n_states(), 2);
    assert!(k1.has_edge(1, 1));
    let k2 = k2();
    assert_eq!(k2.n_states(), 3);
    assert_eq!(k2.label_mask(1), k2.label_mask(2));

    let v = vending();
    assert_eq!(v.n_states(), 10);
    let op = v.atom_index("p_operative").unwrap();
    for i in 0..8u32 {
        assert_eq!(v.label_mask(i) >> op & 1, 1, "p_operative missing on s{i}");
    }
    for i in 8..10u32 {
        assert_eq!(v.label_mask(i) >> op & 1, 0);
    }
}

#[test]
fn homogeneity_exhaustive() {
    let k = fig1();
    for t in enumerate_traces(&k, 6, false) {
        let label = k.trace_mask(&t);
        for a in 0..k.atom_names().len() {
            let everywhere = t.iter().all(|&s| k.label_mask(s) >> a & 1 == 1);
            assert_eq!(label >> a & 1 == 1, everywhere);
        }
    }
}
