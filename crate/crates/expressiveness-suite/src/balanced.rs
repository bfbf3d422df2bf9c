//! Enumeration of balanced formulas: prefix modalities only take bodies
//! that split into two conjuncts of equal size, so a size-h formula can
//! be traded down the compatibility indices h, ⌊h/2⌋, h−1.

use logic_core::{HsFormula, Polarity, Rel};
use std::collections::BTreeSet;

#[derive(Debug, Clone)]
pub struct BalancedFormulaSpec {
    pub atoms: Vec<String>,
    /// Subset of {B, Bbar, E, Ebar}.
    pub relations: Vec<Rel>,
    pub max_size: usize,
}

/// All balanced formulas of size 1..=max_size, deduplicated, grouped by
/// increasing size. Every ⟨B⟩/⟨B̄⟩ body anywhere in the formula is a
/// conjunction of two equal-size balanced halves; ⟨E⟩/⟨Ē⟩ bodies and the
/// boolean connectives are unrestricted.
pub fn enumerate_balanced(spec: &BalancedFormulaSpec) -> Vec<HsFormula> {
    assert!(
        spec.relations.iter().all(|r| r.is_core()),
        "balanced enumeration covers B, Bbar, E, Ebar only"
    );
    let pols = [Polarity::Ex, Polarity::Univ];
    // by_size[s] holds the balanced formulas of size exactly s
    let mut by_size: Vec<Vec<HsFormula>> = vec![Vec::new()];
    for s in 1..=spec.max_size {
        let mut layer = BTreeSet::new();
        if s == 1 {
            layer.insert(HsFormula::True);
            for a in &spec.atoms {
                layer.insert(HsFormula::atom(a.clone()));
            }
        } else {
            for body in &by_size[s - 1] {
                // ¬⊤ collapses to the size-1 symbol ⊥, so it is not size s
                if *body != HsFormula::True {
                    layer.insert(HsFormula::not(body.clone()));
                }
                for &r in &spec.relations {
                    if matches!(r, Rel::E | Rel::EBar) {
                        for pol in pols {
                            layer.insert(HsFormula::Modal(r, pol, Box::new(body.clone())));
                        }
                    }
                }
            }
            if s >= 4 && s % 2 == 0 {
                let m = (s - 2) / 2;
                for t1 in &by_size[m] {
                    for t2 in &by_size[m] {
                        let body = HsFormula::and(t1.clone(), t2.clone());
                        for &r in &spec.relations {
                            if matches!(r, Rel::B | Rel::BBar) {
                                for pol in pols {
                                    layer.insert(HsFormula::Modal(
                                        r,
                                        pol,
                                        Box::new(body.clone()),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            for left_size in 1..=s.saturating_sub(2) {
                let right_size = s - 1 - left_size;
                for a in &by_size[left_size] {
                    for b in &by_size[right_size] {
                        layer.insert(HsFormula::and(a.clone(), b.clone()));
                        layer.insert(HsFormula::or(a.clone(), b.clone()));
                        layer.insert(HsFormula::implies(a.clone(), b.clone()));
                    }
                }
            }
        }
        by_size.push(layer.into_iter().collect());
    }
    by_size.into_iter().flatten().collect()
}
