//! Built-in example structures.

use crate::{Kripke, KripkeError};

/// Two-state structure: s0 labeled {p}, s1 labeled {q}, edges
/// s0→s1, s1→s0, s1→s1, initial s0.
pub fn fig1() -> Kripke {
    Kripke::new(
        &["p", "q"],
        &[("s0", &["p"]), ("s1", &["q"])],
        &[("s0", "s1"), ("s1", "s0"), ("s1", "s1")],
        "s0",
    )
    .expect("valid")
}

/// Vending machine: coins in, drink/snack out, optional maintenance loop.
pub fn vending() -> Kripke {
    let lab = |a: &'static str| -> Vec<&'static str> { vec![a, "p_operative"] };
    let s0 = lab("p_$=0");
    let s1 = lab("p_$=1");
    let s2 = lab("p_$=2");
    let s3 = lab("p_$=0.50");
    let s4 = lab("p_candy");
    let s5 = lab("p_hotdog");
    let s6 = lab("p_water");
    let s7 = lab("p_change");
    Kripke::new(
        &[
            "p_$=0",
            "p_$=1",
            "p_$=2",
            "p_$=0.50",
            "p_candy",
            "p_hotdog",
            "p_water",
            "p_change",
            "p_maint",
            "p_maint_end",
            "p_operative",
        ],
        &[
            ("s0", &s0),
            ("s1", &s1),
            ("s2", &s2),
            ("s3", &s3),
            ("s4", &s4),
            ("s5", &s5),
            ("s6", &s6),
            ("s7", &s7),
            ("s8", &["p_maint"]),
            ("s9", &["p_maint_end"]),
        ],
        &[
            ("s0", "s1"),
            ("s0", "s2"),
            ("s0", "s3"),
            ("s1", "s4"),
            ("s1", "s6"),
            ("s2", "s4"),
            ("s2", "s5"),
            ("s2", "s6"),
            ("s3", "s6"),
            ("s4", "s7"),
            ("s5", "s7"),
            ("s6", "s7"),
            ("s7", "s0"),
            ("s7", "s8"),
            ("s8", "s9"),
            ("s9", "s8"),
            ("s9", "s0"),
        ],
        "s0",
    )
    .expect("valid")
}

/// Separation example: s0 (∅) → s1 ({p}, self-loop).
pub fn k1() -> Kripke {
    Kripke::new(
        &["p"],
        &[("s0'", &[]), ("s1'", &["p"])],
        &[("s0'", "s1'"), ("s1'", "s1'")],
        "s0'",
    )
    .expect("valid")
}

/// Separation example: s0' (∅) → s1' ({p}) → s2' ({p}, self-loop).
pub fn k2() -> Kripke {
    Kripke::new(
        &["p"],
        &[("s0'", &[]), ("s1'", &["p"]), ("s2'", &["p"])],
        &[("s0'", "s1'"), ("s1'", "s2'"), ("s2'", "s2'")],
        "s0'",
    )
    .expect("valid")
}

/// Chain family: s0 (self-loop) → s1 → … → s_{2n} → t (self-loop, {p}).
pub fn kn(n: usize) -> Kripke {
    assert!(n >= 1, "n must be >= 1");
    kn_family(n, 0)
}

/// Same as [`kn`] but with initial state s1.
pub fn mn(n: usize) -> Kripke {
    assert!(n >= 1, "n must be >= 1");
    kn_family(n, 1)
}

fn kn_family(n: usize, initial_idx: usize) -> Kripke {
    let names: Vec<String> = (0..=2 * n).map(|i| format!("s{i}")).collect();
    let mut states: Vec<(&str, &[&str])> =
        names.iter().map(|s| (s.as_str(), &[] as &[&str])).collect();
    states.push(("t", &["p"]));
    let mut edges: Vec<(&str, &str)> = vec![("s0", "s0"), ("t", "t")];
    for i in 0..2 * n {
        edges.push((&names[i], &names[i + 1]));
    }
    edges.push((&names[2 * n], "t"));
    Kripke::new(&["p"], &states, &edges, &names[initial_idx]).expect("valid")
}

/// Looks up a built-in by name; `kn(2)` / `mn(3)` carry the parameter.
pub fn builtin(name: &str) -> Result<Kripke, KripkeError> {
    let parse_n = |inner: &str| -> Option<usize> { inner.parse().ok().filter(|&n| n >= 1) };
    match name {
        "fig1" => Ok(fig1()),
        "vending" => Ok(vending()),
        "k1" => Ok(k1()),
        "k2" => Ok(k2()),
        _ => {
            if let Some(rest) = name.strip_prefix("kn(").and_then(|r| r.strip_suffix(')')) {
                if let Some(n) = parse_n(rest) {
                    return Ok(kn(n));
                }
            }
            if let Some(rest) = name.strip_prefix("mn(").and_then(|r| r.strip_suffix(')')) {
                if let Some(n) = parse_n(rest) {
                    return Ok(mn(n));
                }
            }
            Err(KripkeError::UnknownState(format!("unknown builtin `{name}`")))
        }
    }
}
