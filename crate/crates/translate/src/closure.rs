//! Marker constructions on action languages of prefix/suffix formulas.
//!
//! Given a BE formula f over Γ and a fresh marker letter b, the closure
//! kinds build BE formulas over Σ = Γ ∪ {b} defining the languages
//! obtained by gluing b onto L = L_act(f):
//! bL, Σ*bL, Σ*b(L+ε), Lb, LbΣ*, (L+ε)bΣ*, and bLb.
//!
//! On top of the single-letter closures, a letter theory maps each letter
//! d of an abstract alphabet Δ to a block language over Γ, and
//! `closure_substitute` compiles a BE formula over Δ into a BE formula
//! over Σ defining Γ*·b·h⁻¹(L_act(φ))·Γ*, where h⁻¹ decodes maximal runs
//! of b-delimited blocks.

use crate::TranslateError;
use logic_core::{build_length, expand_derived, HsFormula, Polarity, Rel};
use pointwise_eval::lact_member_hs;

/// The seven marker languages built from L = L_act(f) and the marker b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureKind {
    /// b·L
    BL,
    /// Σ*·b·L
    SigmaBL,
    /// Σ*·b·(L + ε)
    SigmaBLEps,
    /// L·b
    LB,
    /// L·b·Σ*
    LBSigma,
    /// (L + ε)·b·Σ*
    LEpsBSigma,
    /// b·L·b
    BLB,
}

impl ClosureKind {
    pub const ALL: [ClosureKind; 7] = [
        ClosureKind::BL,
        ClosureKind::SigmaBL,
        ClosureKind::SigmaBLEps,
        ClosureKind::LB,
        ClosureKind::LBSigma,
        ClosureKind::LEpsBSigma,
        ClosureKind::BLB,
    ];
}

fn len(n: usize) -> HsFormula {
    build_length(n).expect("n >= 1")
}

/// Rewrites implications and universal modalities away and checks that
/// only ⟨B⟩/⟨E⟩ remain.
fn normalize_be(f: &HsFormula) -> Result<HsFormula, TranslateError> {
    use HsFormula as H;
    Ok(match f {
        H::True => H::True,
        H::Atom(a) => H::Atom(a.clone()),
        H::Not(a) => H::not(normalize_be(a)?),
        H::And(a, b) => H::and(normalize_be(a)?, normalize_be(b)?),
        H::Or(a, b) => H::or(normalize_be(a)?, normalize_be(b)?),
        H::Implies(a, b) => H::or(H::not(normalize_be(a)?), normalize_be(b)?),
        H::Modal(r @ (Rel::B | Rel::E), Polarity::Ex, a) => H::ex(*r, normalize_be(a)?),
        H::Modal(r @ (Rel::B | Rel::E), Polarity::Univ, a) => {
            H::not(H::ex(*r, H::not(normalize_be(a)?)))
        }
        H::Modal(r, _, _) => return Err(TranslateError::NotBe(r.name().to_string())),
    })
}

/// Eq.-(1)-style marking: on words b·u with u b-free, the result holds
/// iff u satisfies the original formula. On b-free words it collapses to
/// the original formula.
fn mark_prefix(f: &HsFormula, b: &str) -> HsFormula {
    use HsFormula as H;
    let bb = || H::atom(b);
    match f {
        H::True => H::True,
        H::Atom(a) => H::or(
            H::atom(a.clone()),
            H::and(
                H::ex(Rel::B, bb()),
                H::and(H::ex(Rel::E, H::atom(a.clone())), H::univ(Rel::E, H::atom(a.clone()))),
            ),
        ),
        H::Not(a) => H::not(mark_prefix(a, b)),
        H::And(a, c) => H::and(mark_prefix(a, b), mark_prefix(c, b)),
        H::Or(a, c) => H::or(mark_prefix(a, b), mark_prefix(c, b)),
        H::Modal(Rel::B, Polarity::Ex, a) => {
            let m = mark_prefix(a, b);
            H::or(
                H::and(H::ex(Rel::B, m.clone()), H::not(H::ex(Rel::B, bb()))),
                H::ex(Rel::B, H::and(m, H::ex(Rel::B, bb()))),
            )
        }
        H::Modal(Rel::E, Polarity::Ex, a) => {
            let m = mark_prefix(a, b);
            H::or(
                H::and(H::ex(Rel::E, m.clone()), H::not(H::ex(Rel::B, bb()))),
                H::and(H::ex(Rel::B, bb()), H::ex(Rel::E, H::ex(Rel::E, m))),
            )
        }
        _ => unreachable!("normalize_be leaves only existential B/E"),
    }
}

/// Eq.-(2)-style marking, the mirror image at the right end: on words u·b
/// the result holds iff u satisfies the original formula. The marker
/// letter itself may occur in the input and is carried through unchanged.
fn mark_suffix(f: &HsFormula, b: &str) -> HsFormula {
    use HsFormula as H;
    let bb = || H::atom(b);
    match f {
        H::True => H::True,
        H::Atom(a) if a == b => bb(),
        H::Atom(a) => H::or(
            H::atom(a.clone()),
            H::and(
                H::ex(Rel::E, bb()),
                H::and(H::ex(Rel::B, H::atom(a.clone())), H::univ(Rel::B, H::atom(a.clone()))),
            ),
        ),
        H::Not(a) => H::not(mark_suffix(a, b)),
        H::And(a, c) => H::and(mark_suffix(a, b), mark_suffix(c, b)),
        H::Or(a, c) => H::or(mark_suffix(a, b), mark_suffix(c, b)),
        H::Modal(Rel::B, Polarity::Ex, a) => {
            let m = mark_suffix(a, b);
            H::or(
                H::and(H::ex(Rel::B, m.clone()), H::not(H::ex(Rel::E, bb()))),
                H::and(H::ex(Rel::E, bb()), H::ex(Rel::B, H::ex(Rel::B, m))),
            )
        }
        H::Modal(Rel::E, Polarity::Ex, a) => {
            let m = mark_suffix(a, b);
            H::or(
                H::and(H::ex(Rel::E, m.clone()), H::not(H::ex(Rel::E, bb()))),
                H::ex(Rel::E, H::and(m, H::ex(Rel::E, bb()))),
            )
        }
        _ => unreachable!("normalize_be leaves only existential B/E"),
    }
}

/// b at the front, nowhere else, and at least one more letter.
fn guard_bl(b: &str) -> HsFormula {
    use HsFormula as H;
    let bb = || H::atom(b);
    H::and(
        H::and(H::not(len(1)), H::ex(Rel::B, bb())),
        H::univ(Rel::E, H::and(H::not(bb()), H::univ(Rel::B, H::not(bb())))),
    )
}

/// b at the back, nowhere else, and at least one more letter.
fn guard_lb(b: &str) -> HsFormula {
    use HsFormula as H;
    let bb = || H::atom(b);
    H::and(
        H::and(H::not(len(1)), H::ex(Rel::E, bb())),
        H::univ(Rel::B, H::and(H::not(bb()), H::univ(Rel::E, H::not(bb())))),
    )
}

/// b at both ends, none strictly inside, and a nonempty interior.
fn guard_blb(b: &str) -> HsFormula {
    use HsFormula as H;
    let bb = || H::atom(b);
    H::and(
        H::and(
            H::and(H::not(len(1)), H::not(len(2))),
            H::and(H::ex(Rel::B, bb()), H::ex(Rel::E, bb())),
        ),
        H::univ(Rel::E, H::univ(Rel::B, H::not(bb()))),
    )
}

/// Builds the BE formula over Γ ∪ {b} defining the chosen closure of
/// L_act(f). The marker must not occur in f, which must be a BE formula.
pub fn closure_formula(
    f: &HsFormula,
    kind: ClosureKind,
    b: &str,
) -> Result<HsFormula, TranslateError> {
    use HsFormula as H;
    if f.atoms().iter().any(|a| a == b) {
        return Err(TranslateError::MarkerInFormula(b.to_string()));
    }
    let g = normalize_be(f)?;
    let phi_bl = || H::and(guard_bl(b), mark_prefix(&g, b));
    let phi_lb = || H::and(guard_lb(b), mark_suffix(&g, b));
    let sigma_bl = || H::or(phi_bl(), H::ex(Rel::E, phi_bl()));
    let lb_sigma = || H::or(phi_lb(), H::ex(Rel::B, phi_lb()));
    Ok(match kind {
        ClosureKind::BL => phi_bl(),
        ClosureKind::SigmaBL => sigma_bl(),
        // Σ*b is b ∨ ⟨E⟩b; adding it covers the ε block
        ClosureKind::SigmaBLEps => {
            H::or(sigma_bl(), H::or(H::atom(b), H::ex(Rel::E, H::atom(b))))
        }
        ClosureKind::LB => phi_lb(),
        ClosureKind::LBSigma => lb_sigma(),
        ClosureKind::LEpsBSigma => {
            H::or(lb_sigma(), H::or(H::atom(b), H::ex(Rel::B, H::atom(b))))
        }
        ClosureKind::BLB => {
            let inner = normalize_be(&phi_bl())?;
            H::and(guard_blb(b), mark_suffix(&inner, b))
        }
    })
}

/// One letter of an abstract alphabet Δ: its block language over Γ as a
/// BE formula (within Γ⁺) plus a flag admitting the empty block.
#[derive(Debug, Clone)]
pub struct LetterDef {
    pub name: String,
    pub formula: HsFormula,
    pub accepts_empty: bool,
}

/// Mapping from Δ letters to block languages, glued with a marker letter.
/// The encoded languages b·L̂_d·b must be pairwise disjoint; check with
/// `validate_disjoint` before substituting.
#[derive(Debug, Clone)]
pub struct LetterTheory {
    pub marker: String,
    pub letters: Vec<LetterDef>,
}

impl LetterTheory {
    /// ψ_b: the BE formula defining bΓ*b (both ends marked, clean interior).
    pub fn psi_b(&self) -> HsFormula {
        use HsFormula as H;
        let bb = || H::atom(&self.marker);
        H::and(
            H::and(
                H::not(len(1)),
                H::and(H::ex(Rel::B, bb()), H::ex(Rel::E, bb())),
            ),
            H::univ(Rel::E, H::univ(Rel::B, H::not(bb()))),
        )
    }

    /// θ̂_d: the BE formula defining the marked block language b·L̂_d·b.
    pub fn hat(&self, name: &str) -> Result<HsFormula, TranslateError> {
        let def = self
            .letters
            .iter()
            .find(|l| l.name == name)
            .ok_or_else(|| TranslateError::MissingLetter(name.to_string()))?;
        let closed = closure_formula(&def.formula, ClosureKind::BLB, &self.marker)?;
        Ok(if def.accepts_empty {
            // the empty block is encoded by the two-letter word bb
            HsFormula::or(closed, HsFormula::and(HsFormula::atom(&self.marker), len(2)))
        } else {
            closed
        })
    }

    /// ⋁_d θ̂_d over every letter of the theory.
    fn any_hat(&self) -> Result<HsFormula, TranslateError> {
        let hats = self
            .letters
            .iter()
            .map(|l| self.hat(&l.name))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HsFormula::disj(hats))
    }

    /// Checks that no block over `gamma` of length ≤ max_len belongs to
    /// two letters' languages (including the empty block).
    pub fn validate_disjoint(&self, gamma: &[&str], max_len: usize) -> Result<(), TranslateError> {
        let mut blocks: Vec<Vec<&str>> = vec![vec![]];
        let mut layer: Vec<Vec<&str>> = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for &c in gamma {
                    let mut w2 = w.clone();
                    w2.push(c);
                    next.push(w2);
                }
            }
            blocks.extend(next.iter().cloned());
            layer = next;
        }
        for u in &blocks {
            let owners: Vec<&str> = self
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
            if owners.len() > 1 {
                return Err(TranslateError::OverlappingLetters {
                    word: u.join(""),
                    d1: owners[0].to_string(),
                    d2: owners[1].to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Compiles a BE formula over Δ into a BE formula over Γ ∪ {b} defining
/// Γ*·b·h⁻¹(L_act(φ))·Γ*: words carrying a run of at least two markers
/// whose b-delimited blocks decode, block by block, to a Δ-word in
/// L_act(φ). The result is fully expanded to the B/E core.
pub fn closure_substitute(
    f: &HsFormula,
    theory: &LetterTheory,
) -> Result<HsFormula, TranslateError> {
    let g = normalize_be(f)?;
    let out = subst(&g, theory)?;
    Ok(expand_derived(&out))
}

fn subst(f: &HsFormula, theory: &LetterTheory) -> Result<HsFormula, TranslateError> {
    use HsFormula as H;
    let psi = theory.psi_b();
    // every b-delimited block decodes to some letter of the theory
    let decoded = H::univ(Rel::G, H::implies(psi.clone(), theory.any_hat()?));
    let some_block = H::ex(Rel::G, psi.clone());
    Ok(match f {
        H::Atom(d) => H::and(
            some_block,
            H::univ(Rel::G, H::implies(psi.clone(), theory.hat(d)?)),
        ),
        H::True => H::and(some_block, decoded),
        H::Not(a) => H::and(H::and(some_block, decoded), H::not(subst(a, theory)?)),
        H::And(a, b) => H::and(subst(a, theory)?, subst(b, theory)?),
        H::Or(a, b) => H::or(subst(a, theory)?, subst(b, theory)?),
        H::Modal(Rel::B, Polarity::Ex, a) => {
            let bb = H::atom(&theory.marker);
            let xi = H::and(
                H::ex(Rel::E, bb.clone()),
                H::ex(Rel::B, H::and(subst(a, theory)?, H::ex(Rel::E, bb))),
            );
            H::and(decoded, H::or(xi.clone(), H::ex(Rel::B, xi)))
        }
        H::Modal(Rel::E, Polarity::Ex, a) => {
            let bb = H::atom(&theory.marker);
            let xi = H::and(
                H::ex(Rel::B, bb.clone()),
                H::ex(Rel::E, H::and(subst(a, theory)?, H::ex(Rel::B, bb))),
            );
            H::and(decoded, H::or(xi.clone(), H::ex(Rel::E, xi)))
        }
        _ => unreachable!("normalize_be leaves only existential B/E"),
    })
}
