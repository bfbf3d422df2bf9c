//! End-to-end acceptance: one test per headline criterion, so `cargo test
//! --test acceptance` prints one pass/fail line for each. Everything is
//! recomputed here against independent oracles rather than trusting the
//! unit suites.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hs_eval::{
    check_ct, check_lin, check_st, eval_interval, eval_interval_limit, eval_st, EvalContext,
    Semantics, Verdict, VerdictValue, Witness,
};
use kripke_model::{enumerate_lassos, enumerate_traces, fig1, k1, k2, kn, mn, vending, Kripke};
use logic_core::{
    expand_derived,
    parse::{parse_hs, parse_point},
    HsFormula, PointFormula, Polarity, Rel,
};
use pointwise_eval::{check_ltl, eval_fo, eval_ltl, lact_member_hs};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use translate::{
    closure_formula, closure_substitute, eliminate_initial_past, hs_ct_to_hybrid, hs_to_fo,
    is_well_formed, ltl_to_ab, ClosureKind, LetterDef, LetterTheory,
};

fn hs(s: &str) -> HsFormula {
    expand_derived(&parse_hs(s).expect("formula should parse"))
}

fn ctx(k: &Kripke, sem: Semantics, bound: usize) -> EvalContext<'_> {
    EvalContext::new(k, sem, bound)
}

fn within(start: Instant, limit: Duration, what: &str) {
    let took = start.elapsed();
    assert!(took <= limit, "{what} took {took:?}, over the {limit:?} budget");
}

// ------------------------------------------------------------ generators

fn gen_hs(rng: &mut StdRng, size: usize, atoms: &[&str], rels: &[Rel]) -> HsFormula {
    use HsFormula as H;
    if size <= 1 {
        let i = rng.gen_range(0..atoms.len() + 1);
        return if i == 0 { H::True } else { H::atom(atoms[i - 1]) };
    }
    let binary_ok = size >= 3;
    match rng.gen_range(0..if binary_ok { 6 } else { 3 }) {
        0 => H::not(gen_hs(rng, size - 1, atoms, rels)),
        1 | 2 => {
            let r = rels[rng.gen_range(0..rels.len())];
            let a = gen_hs(rng, size - 1, atoms, rels);
            if rng.gen_bool(0.5) {
                H::ex(r, a)
            } else {
                H::univ(r, a)
            }
        }
        _ => {
            let left = rng.gen_range(1..size - 1);
            let a = gen_hs(rng, left, atoms, rels);
            let b = gen_hs(rng, size - 1 - left, atoms, rels);
            match rng.gen_range(0..3) {
                0 => H::and(a, b),
                1 => H::or(a, b),
                _ => H::implies(a, b),
            }
        }
    }
}

fn gen_ltl(rng: &mut StdRng, size: usize, atoms: &[&str]) -> PointFormula {
    use PointFormula as P;
    if size <= 1 {
        let i = rng.gen_range(0..atoms.len() + 1);
        return if i == 0 { P::True } else { P::atom(atoms[i - 1]) };
    }
    let binary_ok = size >= 3;
    match rng.gen_range(0..if binary_ok { 8 } else { 4 }) {
        0 => P::not(gen_ltl(rng, size - 1, atoms)),
        1 => P::next(gen_ltl(rng, size - 1, atoms)),
        2 => P::ev(gen_ltl(rng, size - 1, atoms)),
        3 => P::alw(gen_ltl(rng, size - 1, atoms)),
        _ => {
            let left = rng.gen_range(1..size - 1);
            let a = gen_ltl(rng, left, atoms);
            let b = gen_ltl(rng, size - 1 - left, atoms);
            match rng.gen_range(0..4) {
                0 => P::and(a, b),
                1 => P::or(a, b),
                2 => P::implies(a, b),
                _ => P::until(a, b),
            }
        }
    }
}

fn gen_past(rng: &mut StdRng, size: usize, atoms: &[&str]) -> PointFormula {
    use PointFormula as P;
    if size <= 1 {
        let i = rng.gen_range(0..atoms.len() + 1);
        return if i == 0 { P::True } else { P::atom(atoms[i - 1]) };
    }
    let binary_ok = size >= 3;
    match rng.gen_range(0..if binary_ok { 8 } else { 4 }) {
        0 => P::not(gen_past(rng, size - 1, atoms)),
        1 => P::prev(gen_past(rng, size - 1, atoms)),
        2 => P::ev_past(gen_past(rng, size - 1, atoms)),
        3 => P::alw_past(gen_past(rng, size - 1, atoms)),
        _ => {
            let left = rng.gen_range(1..size - 1);
            let a = gen_past(rng, left, atoms);
            let b = gen_past(rng, size - 1 - left, atoms);
            match rng.gen_range(0..4) {
                0 => P::and(a, b),
                1 => P::or(a, b),
                2 => P::implies(a, b),
                _ => P::since(a, b),
            }
        }
    }
}

/// All formulas of size ≤ max over the given relations (both polarities,
/// negation, binary connectives).
fn all_hs(max: usize, atoms: &[&str], rels: &[Rel]) -> Vec<HsFormula> {
    use HsFormula as H;
    let mut by_size: Vec<Vec<H>> = vec![Vec::new()];
    for size in 1..=max {
        let mut layer = Vec::new();
        if size == 1 {
            layer.push(H::True);
            for &a in atoms {
                layer.push(H::atom(a));
            }
        } else {
            for sub in &by_size[size - 1] {
                layer.push(H::not(sub.clone()));
                for &r in rels {
                    layer.push(H::ex(r, sub.clone()));
                    layer.push(H::univ(r, sub.clone()));
                }
            }
            for left in 1..size - 1 {
                for a in &by_size[left] {
                    for b in &by_size[size - 1 - left] {
                        layer.push(H::and(a.clone(), b.clone()));
                        layer.push(H::or(a.clone(), b.clone()));
                        layer.push(H::implies(a.clone(), b.clone()));
                    }
                }
            }
        }
        by_size.push(layer);
    }
    by_size.into_iter().flatten().collect()
}

fn words<'a>(sigma: &[&'a str], max_len: usize) -> Vec<Vec<&'a str>> {
    let mut out: Vec<Vec<&str>> = Vec::new();
    let mut layer: Vec<Vec<&str>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &c in sigma {
                let mut w2 = w.clone();
                w2.push(c);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

// --------------------------------------------------------- criterion 1

fn run_hs(k: &Kripke, sem: Semantics, bound: usize, f: &HsFormula) -> Verdict {
    let c = ctx(k, sem, bound);
    match sem {
        Semantics::St => check_st(&c, f),
        Semantics::Ct => check_ct(&c, f),
        Semantics::Lin => check_lin(&c, f),
    }
}

#[test]
fn criterion_01_vending_verdict_table() {
    use Semantics::*;
    use VerdictValue::*;
    let start = Instant::now();
    let k = vending();
    // scaled to length 7 so the bounded universe stays enumerable
    let scaled =
        "(p_operative & len7) -> ((<B><E> p_hotdog) & (<B><E> p_water) & (<B><E> p_candy))";
    let table: &[(&str, &[(Semantics, usize, VerdictValue)])] = &[
        (scaled, &[(St, 7, Fails), (Ct, 7, Fails), (Lin, 7, Fails)]),
        (
            "(<E> p_$=0.50) -> !<A>(len2 & <E>(p_hotdog | p_candy))",
            &[(St, 8, HoldsInBound), (Ct, 8, HoldsInBound), (Lin, 8, HoldsInBound)],
        ),
        (
            "(<E> p_maint_end) -> <A><E> p_operative",
            &[(St, 8, HoldsInBound), (Ct, 8, HoldsInBound), (Lin, 8, Fails)],
        ),
        (
            "([A]<A><E> p_maint) -> [A]<A><E> p_operative",
            &[(St, 8, HoldsInBound), (Ct, 8, HoldsInBound), (Lin, 8, Fails)],
        ),
        (
            "(<E> p_water) -> <E>(p_water & <Abar>(len2 & <B> p_$=2) & <Abar>(len2 & <B> p_$=1) & <Abar>(len2 & <B> p_$=0.50))",
            &[(St, 6, HoldsInBound), (Ct, 6, Fails), (Lin, 8, Fails)],
        ),
    ];
    for (src, cells) in table {
        let f = hs(src);
        for &(sem, bound, expected) in *cells {
            let v = run_hs(&k, sem, bound, &f);
            assert_eq!(v.value, expected, "{src} under {} at {bound}", sem.name());
        }
    }
    // the scaled property fails with a counterexample trace everywhere
    let f1 = hs(scaled);
    assert!(matches!(
        run_hs(&k, St, 7, &f1).witness,
        Some(Witness::Trace(_))
    ));
    // the maintenance property's linear witness loops inside {s8, s9}
    let maint = hs("(<E> p_maint_end) -> <A><E> p_operative");
    match run_hs(&k, Lin, 8, &maint).witness {
        Some(Witness::LassoInterval(pi, _)) => {
            let names = k.trace_names(&pi.looping);
            assert!(
                !names.is_empty() && names.iter().all(|s| s == "s8" || s == "s9"),
                "witness loop {names:?} leaves the maintenance cycle"
            );
        }
        other => panic!("expected a lasso-interval witness, got {other:?}"),
    }
    within(start, Duration::from_secs(60), "vending table");
}

// --------------------------------------------------------- criterion 2

#[test]
fn criterion_02_two_structure_separation() {
    let start = Instant::now();
    let r = expressiveness_suite::distinguishing_report();
    assert_eq!(r.st_k1.value, VerdictValue::HoldsInBound);
    assert_eq!(r.st_k2.value, VerdictValue::Fails);
    let k = k2();
    match &r.st_k2.witness {
        Some(Witness::Trace(t)) => assert_eq!(k.trace_names(t), vec!["s0'", "s1'"]),
        other => panic!("expected a trace witness, got {other:?}"),
    }
    assert_eq!(r.ct_k1.value, r.ct_k2.value, "tree semantics must not separate");
    within(start, Duration::from_secs(10), "separation report");
}

// --------------------------------------------------------- criterion 3

#[test]
fn criterion_03_chain_family_contrast() {
    let start = Instant::now();
    let f = parse_point("F p").expect("parses");
    for n in 1..=3usize {
        let bound = 2 * n + 4;
        let vk = check_ltl(&kn(n), &f, bound);
        assert_eq!(vk.value, VerdictValue::Fails, "F p on the s0-rooted chain, n={n}");
        match &vk.witness {
            Some(Witness::Lasso(l)) => {
                assert!(
                    kn(n).trace_names(&l.looping).iter().all(|s| s == "s0"),
                    "n={n}: witness loop should idle at s0"
                );
            }
            other => panic!("expected a lasso witness, got {other:?}"),
        }
        let vm = check_ltl(&mn(n), &f, bound);
        assert_eq!(vm.value, VerdictValue::HoldsInBound, "F p on the s1-rooted chain, n={n}");
        let r = expressiveness_suite::agreement_check(n, n.min(3), 2 * n + 6);
        assert!(r.ok(), "{r}");
    }
    within(start, Duration::from_secs(300), "chain family");
}

// --------------------------------------------------------- criterion 4

#[test]
fn criterion_04_ltl_to_ab_oracle() {
    let k = fig1();
    let lassos = enumerate_lassos(&k, 5);
    let mut rng = StdRng::seed_from_u64(0xAB01);
    for _ in 0..100 {
        let f = gen_ltl(&mut rng, 6, &["p", "q"]);
        let t = ltl_to_ab(&f).expect("pure LTL");
        for pi in &lassos {
            for i in 0..=5usize {
                assert_eq!(
                    eval_ltl(&k, pi, i, &f),
                    eval_interval_limit(&k, pi, i, i, &t),
                    "formula {f:?} at {i} on {pi:?}"
                );
            }
        }
    }
}

// --------------------------------------------------------- criterion 5

#[test]
fn criterion_05_hs_to_fo_oracle() {
    let k = fig1();
    let lassos = enumerate_lassos(&k, 5);
    let rels = [Rel::B, Rel::BBar, Rel::E, Rel::EBar];
    let mut rng = StdRng::seed_from_u64(0xF001);
    let horizon = 12;
    for _ in 0..100 {
        let f = gen_hs(&mut rng, 4, &["p", "q"], &rels);
        let t = hs_to_fo(&f);
        for pi in &lassos {
            for i in 0..=5usize {
                for j in i..=5usize {
                    let mut assign = BTreeMap::new();
                    assign.insert("x".to_string(), i);
                    assign.insert("y".to_string(), j);
                    assert_eq!(
                        eval_interval(&k, pi, i, j, &f, horizon),
                        eval_fo(&k, pi, &assign, &t.open, horizon),
                        "formula {f:?} at [{i},{j}] on {pi:?}"
                    );
                }
            }
        }
    }
}

// --------------------------------------------------------- criterion 6

fn in_l(u: &[&str], f: &HsFormula) -> bool {
    !u.is_empty() && lact_member_hs(u, f)
}

fn split_oracle(kind: ClosureKind, w: &[&str], f: &HsFormula, b: &str) -> bool {
    match kind {
        ClosureKind::BL => w.len() >= 2 && w[0] == b && !w[1..].contains(&b) && in_l(&w[1..], f),
        ClosureKind::SigmaBL => match w.iter().rposition(|&c| c == b) {
            Some(i) => i + 1 < w.len() && in_l(&w[i + 1..], f),
            None => false,
        },
        ClosureKind::SigmaBLEps => {
            split_oracle(ClosureKind::SigmaBL, w, f, b) || w.last() == Some(&b)
        }
        ClosureKind::LB => {
            w.len() >= 2
                && *w.last().unwrap() == b
                && !w[..w.len() - 1].contains(&b)
                && in_l(&w[..w.len() - 1], f)
        }
        ClosureKind::LBSigma => match w.iter().position(|&c| c == b) {
            Some(i) => i > 0 && in_l(&w[..i], f),
            None => false,
        },
        ClosureKind::LEpsBSigma => {
            split_oracle(ClosureKind::LBSigma, w, f, b) || w.first() == Some(&b)
        }
        ClosureKind::BLB => {
            w.len() >= 3
                && w[0] == b
                && w[w.len() - 1] == b
                && !w[1..w.len() - 1].contains(&b)
                && in_l(&w[1..w.len() - 1], f)
        }
    }
}

#[test]
fn criterion_06_closure_language_identities() {
    let ws = words(&["a", "b", "c"], 6);
    let mut fs = all_hs(3, &["a", "c"], &[Rel::B, Rel::E]);
    let mut rng = StdRng::seed_from_u64(0xC105);
    fs.extend((0..50).map(|_| gen_hs(&mut rng, 5, &["a", "c"], &[Rel::B, Rel::E])));
    for f in &fs {
        for kind in ClosureKind::ALL {
            let cl = closure_formula(f, kind, "b").expect("marker is fresh");
            for w in &ws {
                assert_eq!(
                    lact_member_hs(w, &cl),
                    split_oracle(kind, w, f, "b"),
                    "{kind:?} of {f:?} on {w:?}"
                );
            }
        }
    }
}

// --------------------------------------------------------- criterion 7

#[test]
fn criterion_07_letter_substitution() {
    let theory = LetterTheory {
        marker: "b".to_string(),
        letters: vec![
            LetterDef {
                name: "d1".to_string(),
                formula: parse_hs("a").unwrap(),
                accepts_empty: false,
            },
            LetterDef {
                name: "d2".to_string(),
                formula: parse_hs("! a").unwrap(),
                accepts_empty: false,
            },
        ],
    };
    theory.validate_disjoint(&["a", "c"], 8).unwrap();
    let decode = |u: &[&str]| -> Option<&str> {
        let owners: Vec<&str> = theory
            .letters
            .iter()
            .filter(|l| {
                if u.is_empty() {
                    l.accepts_empty
                } else {
                    lact_member_hs(u, &l.formula)
                }
            })
            .map(|l| l.name.as_str())
            .collect();
        match owners[..] {
            [d] => Some(d),
            _ => None,
        }
    };
    // Γ*·b·h⁻¹(L(φ))·Γ*, read directly off the word
    let oracle = |w: &[&str], phi: &HsFormula| -> bool {
        let bpos: Vec<usize> = (0..w.len()).filter(|&i| w[i] == "b").collect();
        if bpos.len() < 2 {
            return false;
        }
        let mut dword: Vec<&str> = Vec::new();
        for k in 0..bpos.len() - 1 {
            match decode(&w[bpos[k] + 1..bpos[k + 1]]) {
                Some(d) => dword.push(d),
                None => return false,
            }
        }
        lact_member_hs(&dword, phi)
    };
    let ws = words(&["a", "c", "b"], 8);
    for s in ["d1", "! d1", "d1 & d2", "<B> (d1 & d1)", "<E> (d2 & d2)"] {
        let phi = parse_hs(s).unwrap();
        let compiled = closure_substitute(&phi, &theory).unwrap();
        for w in &ws {
            assert_eq!(lact_member_hs(w, &compiled), oracle(w, &phi), "{s} on {w:?}");
        }
    }
}

// --------------------------------------------------------- criterion 8

#[test]
fn criterion_08_tree_to_hybrid_oracle() {
    let structures = [fig1(), k1(), k2()];
    let bound = 5;
    for f in all_hs(3, &["p"], &[Rel::B, Rel::BBar, Rel::E, Rel::EBar]) {
        let t = hs_ct_to_hybrid(&f, true).expect("core fragment translates");
        assert!(is_well_formed(&t), "translation of {f:?}");
        for k in &structures {
            let lhs = check_ct(&ctx(k, Semantics::Ct, bound), &f);
            let rhs = pointwise_eval::check_hybrid_finitary(k, &t, bound);
            assert_eq!(lhs.value, rhs.value, "formula {f:?}");
        }
    }
}

// --------------------------------------------------------- criterion 9

#[test]
fn criterion_09_initial_past_elimination() {
    let k = fig1();
    let lassos = enumerate_lassos(&k, 4);
    let mut rng = StdRng::seed_from_u64(0x9413);
    for _ in 0..200 {
        let f = gen_past(&mut rng, 5, &["p", "q"]);
        let g = eliminate_initial_past(&f);
        assert!(g.is_past_free(), "residual past in {g:?}");
        for pi in &lassos {
            assert_eq!(
                eval_ltl(&k, pi, 0, &f),
                eval_ltl(&k, pi, 0, &g),
                "formula {f:?} on {pi:?}"
            );
        }
    }
}

// --------------------------------------------------------- criterion 10

#[test]
fn criterion_10_invariant_suites() {
    let k = fig1();
    // homogeneity: an atom holds on a trace iff it labels every state
    let p_bit = k.atom_index("p").unwrap();
    let c4 = ctx(&k, Semantics::St, 4);
    for t in enumerate_traces(&k, 4, false) {
        let expected = t.iter().all(|&s| k.label_mask(s) >> p_bit & 1 == 1);
        assert_eq!(eval_st(&c4, &t, &HsFormula::atom("p")), expected, "{t:?}");
    }
    // modal duality: [X]f ≡ ¬⟨X⟩¬f under the state-based semantics
    let body = hs("p | <B> q");
    for rel in Rel::ALL {
        if rel == Rel::G {
            continue;
        }
        let boxed = HsFormula::Modal(rel, Polarity::Univ, Box::new(body.clone()));
        let dual = HsFormula::not(HsFormula::ex(rel, HsFormula::not(body.clone())));
        for t in enumerate_traces(&k, 3, false) {
            assert_eq!(eval_st(&c4, &t, &boxed), eval_st(&c4, &t, &dual), "{rel:?} at {t:?}");
        }
    }
    // expand_derived preserves truth on the derived modalities
    let mut rng = StdRng::seed_from_u64(0x1014);
    for _ in 0..40 {
        let f = gen_hs(&mut rng, 4, &["p", "q"], &[Rel::A, Rel::ABar, Rel::L, Rel::D, Rel::O]);
        let g = expand_derived(&f);
        for t in enumerate_traces(&k, 3, false) {
            assert_eq!(eval_st(&c4, &t, &f), eval_st(&c4, &t, &g), "{f:?} at {t:?}");
        }
    }
    // witness soundness: failed verdicts re-evaluate to false
    for _ in 0..40 {
        let f = expand_derived(&gen_hs(&mut rng, 4, &["p", "q"], &Rel::ALL));
        let v = check_st(&c4, &f);
        match &v.witness {
            Some(Witness::Trace(t)) => assert!(!eval_st(&c4, t, &f), "{f:?}"),
            _ => assert!(v.passes()),
        }
    }
    // R(h) is an equivalence on the chain family's traces
    let kk = kn(2);
    let traces = enumerate_traces(&kk, 5, false);
    for h in 1..=2usize {
        for a in &traces {
            assert!(expressiveness_suite::h_compatible(2, a, a, h));
            for b in &traces {
                let ab = expressiveness_suite::h_compatible(2, a, b, h);
                assert_eq!(ab, expressiveness_suite::h_compatible(2, b, a, h));
                for c in &traces {
                    if ab && expressiveness_suite::h_compatible(2, b, c, h) {
                        assert!(expressiveness_suite::h_compatible(2, a, c, h));
                    }
                }
            }
        }
    }
    // compatibility-lemma replay at both chain sizes
    let r2 = expressiveness_suite::verify_compatibility_lemma(2, 2, 8);
    assert!(r2.ok(), "{r2}");
    let r3 = expressiveness_suite::verify_compatibility_lemma(3, 3, 10);
    assert!(r3.ok(), "{r3}");
    // the ABE fragment cannot see branching past: st and ct coincide
    for _ in 0..30 {
        let f = gen_hs(&mut rng, 4, &["p", "q"], &[Rel::A, Rel::B, Rel::E]);
        let f = expand_derived(&f);
        let st = check_st(&ctx(&k, Semantics::St, 4), &f);
        let ct = check_ct(&ctx(&k, Semantics::Ct, 4), &f);
        assert_eq!(st.value, ct.value, "{f:?}");
    }
    // the BE fragment sees only the interval itself: lin agrees too
    for _ in 0..30 {
        let f = gen_hs(&mut rng, 4, &["p", "q"], &[Rel::B, Rel::E]);
        let st = check_st(&ctx(&k, Semantics::St, 5), &f);
        let ct = check_ct(&ctx(&k, Semantics::Ct, 5), &f);
        assert_eq!(st.value, ct.value, "{f:?}");
        let lin = check_lin(&ctx(&k, Semantics::Lin, 5), &f);
        if st.value == VerdictValue::Fails {
            assert_eq!(lin.value, VerdictValue::Fails, "{f:?}");
        }
        if lin.value == VerdictValue::Fails {
            let st6 = check_st(&ctx(&k, Semantics::St, 6), &f);
            assert_eq!(st6.value, VerdictValue::Fails, "{f:?}");
        }
    }
    // the balanced-agreement grid stays clean
    let r = expressiveness_suite::agreement_check(2, 2, 8);
    assert!(r.ok(), "{r}");
}
