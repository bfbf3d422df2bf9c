//! Action languages of finite-word formulas over an alphabet of letters.
//!
//! Two dialects share the entry point: prefix/suffix formulas (HS with
//! only ⟨B⟩/⟨E⟩), whose letter `a` denotes a⁺ and whose languages live in
//! Σ⁺, and finite-word LTL, where a letter holds at a position iff it is
//! the letter at that position.

use logic_core::{Formula, HsFormula, PointFormula, Polarity, Rel};

/// Word membership in L_act; the dialect follows the formula family.
pub fn lact_member(w: &[&str], f: &Formula) -> bool {
    match f {
        Formula::Hs(h) => lact_member_hs(w, h),
        Formula::Point(p) => lact_member_ltl(w, p),
        Formula::Fo(_) => panic!("first-order formulas have no action language"),
    }
}

/// Membership in the action language of a prefix/suffix formula. The
/// empty word belongs to no language (they are all within Σ⁺).
pub fn lact_member_hs(w: &[&str], f: &HsFormula) -> bool {
    if w.is_empty() {
        return false;
    }
    match f {
        HsFormula::True => true,
        HsFormula::Atom(a) => w.iter().all(|x| *x == a),
        HsFormula::Not(g) => !lact_member_hs(w, g),
        HsFormula::And(g, h) => lact_member_hs(w, g) && lact_member_hs(w, h),
        HsFormula::Or(g, h) => lact_member_hs(w, g) || lact_member_hs(w, h),
        HsFormula::Implies(g, h) => !lact_member_hs(w, g) || lact_member_hs(w, h),
        HsFormula::Modal(Rel::B, Polarity::Ex, g) => {
            (1..w.len()).any(|n| lact_member_hs(&w[..n], g))
        }
        HsFormula::Modal(Rel::B, Polarity::Univ, g) => {
            (1..w.len()).all(|n| lact_member_hs(&w[..n], g))
        }
        HsFormula::Modal(Rel::E, Polarity::Ex, g) => {
            (1..w.len()).any(|n| lact_member_hs(&w[n..], g))
        }
        HsFormula::Modal(Rel::E, Polarity::Univ, g) => {
            (1..w.len()).all(|n| lact_member_hs(&w[n..], g))
        }
        HsFormula::Modal(r, ..) => panic!("action languages cover only <B>/<E>, not {r:?}"),
    }
}

/// Finite-word LTL membership: w ⊨ f at position 0 (false for ε).
pub fn lact_member_ltl(w: &[&str], f: &PointFormula) -> bool {
    !w.is_empty() && at(w, 0, f)
}

fn at(w: &[&str], i: usize, f: &PointFormula) -> bool {
    use PointFormula::*;
    match f {
        True => true,
        Atom(a) => w[i] == a,
        Not(g) => !at(w, i, g),
        And(g, h) => at(w, i, g) && at(w, i, h),
        Or(g, h) => at(w, i, g) || at(w, i, h),
        Implies(g, h) => !at(w, i, g) || at(w, i, h),
        Next(g) => i + 1 < w.len() && at(w, i + 1, g),
        Until(g, h) => {
            for j in i..w.len() {
                if at(w, j, h) {
                    return true;
                }
                if !at(w, j, g) {
                    return false;
                }
            }
            false
        }
        Ev(g) => (i..w.len()).any(|j| at(w, j, g)),
        Alw(g) => (i..w.len()).all(|j| at(w, j, g)),
        Prev(g) => i > 0 && at(w, i - 1, g),
        Since(g, h) => {
            for j in (0..=i).rev() {
                if at(w, j, h) {
                    return true;
                }
                if !at(w, j, g) {
                    return false;
                }
            }
            false
        }
        EvPast(g) => (0..=i).any(|j| at(w, j, g)),
        AlwPast(g) => (0..=i).all(|j| at(w, j, g)),
        Var(_) | Bind(..) | Exists(_) | Forall(_) | ExistsF(_) | ForallF(_) => {
            panic!("finite-word LTL has no hybrid machinery or path quantifiers")
        }
    }
}

/// All words over `sigma` of length 1 ..= max_len in the language, in
/// length-lex order (letter order as given in `sigma`).
pub fn lact_enumerate(f: &Formula, sigma: &[&str], max_len: usize) -> Vec<Vec<String>> {
    let mut out = Vec::new();
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
        for w in &next {
            if lact_member(w, f) {
                out.push(w.iter().map(|s| s.to_string()).collect());
            }
        }
        layer = next;
    }
    out
}
