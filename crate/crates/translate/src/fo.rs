//! HS over interval structures into first-order logic over positions.
//!
//! `h(ψ, x, y)` defines the semantics of ψ on the interval [x, y] of a
//! labeled linear order; the sentence form closes it off by asserting that
//! x is the minimum and quantifying over every right endpoint.

use logic_core::{expand_derived, FoFormula, HsFormula, Polarity, Rel};

/// The open translation (free variables `x`, `y`) and its sentence form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoTranslation {
    pub open: FoFormula,
    pub sentence: FoFormula,
}

/// Translates an HS formula (any relations; derived modalities are
/// expanded first) into first-order logic over positions. Bound variables
/// are drawn from a deterministic counter z0, z1, ….
pub fn hs_to_fo(f: &HsFormula) -> FoTranslation {
    let core = expand_derived(f);
    let mut counter = 0usize;
    let open = h(&core, "x", "y", &mut counter);
    let z = fresh(&mut counter);
    // ∃x((∀z. z ≥ x) ∧ ∀y. h(ψ, x, y))
    let minimal = FoFormula::forall(z.clone(), FoFormula::le("x", z));
    let sentence = FoFormula::exists(
        "x",
        FoFormula::and(minimal, FoFormula::forall("y", open.clone())),
    );
    FoTranslation { open, sentence }
}

fn fresh(counter: &mut usize) -> String {
    let z = format!("z{counter}");
    *counter += 1;
    z
}

fn h(f: &HsFormula, x: &str, y: &str, c: &mut usize) -> FoFormula {
    match f {
        HsFormula::True => FoFormula::True,
        // homogeneity: p holds on [x, y] iff p holds at every position in it
        HsFormula::Atom(p) => {
            let z = fresh(c);
            FoFormula::forall(
                z.clone(),
                FoFormula::implies(
                    FoFormula::and(FoFormula::le(x, &z), FoFormula::le(&z, y)),
                    FoFormula::pred(p, z.clone()),
                ),
            )
        }
        HsFormula::Not(a) => FoFormula::not(h(a, x, y, c)),
        HsFormula::And(a, b) => FoFormula::and(h(a, x, y, c), h(b, x, y, c)),
        HsFormula::Or(a, b) => FoFormula::or(h(a, x, y, c), h(b, x, y, c)),
        HsFormula::Implies(a, b) => FoFormula::implies(h(a, x, y, c), h(b, x, y, c)),
        HsFormula::Modal(r, Polarity::Ex, a) => {
            let z = fresh(c);
            let body = match r {
                // proper prefixes: [x, z] with x ≤ z < y
                Rel::B => FoFormula::and(
                    FoFormula::and(FoFormula::le(x, &z), FoFormula::lt(&z, y)),
                    h(a, x, &z, c),
                ),
                // proper suffixes: [z, y] with x < z ≤ y
                Rel::E => FoFormula::and(
                    FoFormula::and(FoFormula::lt(x, &z), FoFormula::le(&z, y)),
                    h(a, &z, y, c),
                ),
                // right extensions: [x, z] with z > y
                Rel::BBar => FoFormula::and(FoFormula::lt(y, &z), h(a, x, &z, c)),
                // left extensions: [z, y] with z < x
                Rel::EBar => FoFormula::and(FoFormula::lt(&z, x), h(a, &z, y, c)),
                _ => unreachable!("expand_derived leaves only core relations"),
            };
            FoFormula::Exists(z.clone(), Box::new(body))
        }
        HsFormula::Modal(r, Polarity::Univ, a) => {
            // [X]φ = ¬⟨X⟩¬φ
            let ex = HsFormula::ex(*r, HsFormula::not((**a).clone()));
            FoFormula::not(h(&ex, x, y, c))
        }
    }
}
