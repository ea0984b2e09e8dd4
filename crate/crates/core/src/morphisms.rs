//! Change-of-basis isomorphisms into the contracted ⋆ algebra, and the
//! operator identities relating the three `U^{⊗k}` actions.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, Carrier};
use crate::combinatorics::{factorial, set_partitions, subsets};
use crate::diagrams::{enumerate_pistar_with, partial_coarser_leq, subblocks_leq, SetPartition};
use crate::error::Result;
use crate::exact_linalg::{ExactMatrix, Rational};
use crate::limits::Limits;
use crate::semigroups::{bullet_multiply, multiply_pistar};
use crate::tensor_actions::{
    action_matrix_u, match_set_hat, match_set_partial, ActionSpace, SpaceKind, Variant,
};
use crate::HatElement;

/// Largest `k` for which homomorphism checks run over all pairs.
pub const EXHAUSTIVE_PAIRS_MAX_K: usize = 2;
/// Number of random pairs drawn above [`EXHAUSTIVE_PAIRS_MAX_K`].
pub const SAMPLED_PAIRS: usize = 10_000;
pub const SAMPLE_SEED: u64 = 0x5eed_d1a1;

/// All `β` with `α ≤ β` in the natural order of `PI*_k` (merge blocks of
/// `α`, dropping any number of them), paired with the Möbius value `μ(β, α)`.
///
/// Such `β` correspond to partitions of `{blocks of α} ∪ {∗}`: the part
/// holding `∗` collects the dropped blocks.
pub fn partial_coarsenings(alpha: &SetPartition) -> Vec<(SetPartition, Rational)> {
    let m = alpha.block_count();
    let labels: Vec<usize> = (0..=m).collect();
    let mut out = Vec::new();
    for parts in set_partitions(&labels) {
        let mut blocks = Vec::new();
        let mut mu: i128 = 1;
        for part in &parts {
            let sign = |c: usize| if c.is_multiple_of(2) { 1 } else { -1 };
            if part.contains(&m) {
                let d = part.len() - 1;
                mu *= sign(d) * factorial(d) as i128;
            } else {
                let c = part.len();
                mu *= sign(c - 1) * factorial(c - 1) as i128;
                blocks.push(
                    part.iter()
                        .flat_map(|&b| alpha.blocks()[b].iter().copied())
                        .collect::<Vec<_>>(),
                );
            }
        }
        out.push((
            SetPartition::from_blocks_unchecked(alpha.k(), blocks),
            Rational::from_integer(mu.into()),
        ));
    }
    out
}

/// `φ(α) = Σ_{α ≤ β} β` in the contracted ⋆ algebra.
pub fn phi(alpha: &SetPartition) -> AlgebraElement {
    let mut out = AlgebraElement::zero(Carrier::Hat, alpha.k());
    for (beta, _) in partial_coarsenings(alpha) {
        out.add_term(beta, Rational::one());
    }
    out
}

/// `φ` extended linearly to an element of `C[PI*_k]`.
pub fn phi_linear(x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(Carrier::Hat, x.k());
    for (alpha, c) in x.terms() {
        for (beta, _) in partial_coarsenings(alpha) {
            out.add_term(beta, c.clone());
        }
    }
    out
}

/// `φ⁻¹(α)` by back substitution in the order ideal above `α`.
pub fn phi_inverse(alpha: &SetPartition) -> Result<AlgebraElement> {
    phi_inverse_with(alpha, &Limits::default())
}

pub fn phi_inverse_with(alpha: &SetPartition, limits: &Limits) -> Result<AlgebraElement> {
    let mut above: Vec<SetPartition> = enumerate_pistar_with(alpha.k(), limits)?
        .into_iter()
        .filter(|beta| partial_coarser_leq(alpha, beta))
        .collect();
    // Smaller elements in the order have fewer points, or as many points and
    // fewer blocks; solve from the top of the ideal downwards.
    let weight = |p: &SetPartition| (p.domain().len(), p.block_count());
    above.sort_by_key(|p| std::cmp::Reverse(weight(p)));
    let mut coeffs: Vec<Rational> = Vec::with_capacity(above.len());
    for (i, beta) in above.iter().enumerate() {
        // Σ_{γ ≤ β} c_γ = [β = α]
        let mut c = if beta == alpha {
            Rational::one()
        } else {
            Rational::zero()
        };
        for (gamma, cg) in above[..i].iter().zip(&coeffs) {
            if partial_coarser_leq(gamma, beta) {
                c -= cg;
            }
        }
        coeffs.push(c);
    }
    let mut out = AlgebraElement::zero(Carrier::Pistar, alpha.k());
    for (beta, c) in above.into_iter().zip(coeffs) {
        out.add_term(beta, c);
    }
    Ok(out)
}

/// `φ⁻¹(α) = Σ_{α ≤ β} μ(β, α) β` in closed form.
pub fn phi_inverse_mobius(alpha: &SetPartition) -> AlgebraElement {
    let mut out = AlgebraElement::zero(Carrier::Pistar, alpha.k());
    for (beta, mu) in partial_coarsenings(alpha) {
        out.add_term(beta, mu);
    }
    out
}

/// `ψ(α) = Σ_{β ⊢ α} β`, the sum over sub-collections of blocks.
pub fn psi(alpha: &SetPartition) -> AlgebraElement {
    let mut out = AlgebraElement::zero(Carrier::Hat, alpha.k());
    for blocks in subsets(alpha.blocks()) {
        out.add_term(
            SetPartition::from_blocks_unchecked(alpha.k(), blocks),
            Rational::one(),
        );
    }
    out
}

pub fn psi_linear(x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(Carrier::Hat, x.k());
    for (alpha, c) in x.terms() {
        out = out.add(&psi(alpha).scale(c)).expect("same carrier and k");
    }
    out
}

/// `ψ⁻¹(α) = Σ_{β ⊢ α} (-1)^{#α - #β} β`, an element of the • algebra.
pub fn psi_inverse(alpha: &SetPartition) -> AlgebraElement {
    let mut out = AlgebraElement::zero(Carrier::Tilde, alpha.k());
    for blocks in subsets(alpha.blocks()) {
        let sign = if (alpha.block_count() - blocks.len()).is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        out.add_term(SetPartition::from_blocks_unchecked(alpha.k(), blocks), sign);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MorphismKind {
    Phi,
    Psi,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartCheck {
    pub name: String,
    pub checked: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismReport {
    pub map: MorphismKind,
    pub n: usize,
    pub k: usize,
    /// `(α, i)` pairs or `α` values covered by the operator identities.
    pub pairs_checked: usize,
    pub homomorphism_pairs: usize,
    pub homomorphism_ok: bool,
    pub inverse_ok: bool,
    pub parts: Vec<PartCheck>,
}

impl MorphismReport {
    pub fn holds(&self) -> bool {
        self.homomorphism_ok && self.inverse_ok && self.parts.iter().all(|p| p.holds)
    }
}

/// Pairs used by the homomorphism checks: all of them for small `k`,
/// otherwise a seeded sample.
pub fn homomorphism_pairs(
    elements: &[SetPartition],
    k: usize,
) -> Vec<(SetPartition, SetPartition)> {
    if k <= EXHAUSTIVE_PAIRS_MAX_K {
        let mut out = Vec::with_capacity(elements.len() * elements.len());
        for a in elements {
            for b in elements {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ k as u64);
        (0..SAMPLED_PAIRS)
            .map(|_| {
                let a = elements.choose(&mut rng).expect("non-empty");
                let b = elements.choose(&mut rng).expect("non-empty");
                (a.clone(), b.clone())
            })
            .collect()
    }
}

/// `φ(αβ) = φ(α) ⋆ φ(β)` for every pair.
pub fn phi_is_multiplicative(pairs: &[(SetPartition, SetPartition)]) -> Result<bool> {
    for (a, b) in pairs {
        let lhs = phi(&multiply_pistar(a, b)?);
        if lhs != phi(a).mul(&phi(b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ψ(α • β) = ψ(α) ⋆ ψ(β)` for every pair.
pub fn psi_is_multiplicative(pairs: &[(SetPartition, SetPartition)]) -> Result<bool> {
    for (a, b) in pairs {
        let lhs = psi(&bullet_multiply(a, b)?);
        if lhs != psi(a).mul(&psi(b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn combination_matrix(
    x: &AlgebraElement,
    space: &ActionSpace,
    variant: Variant,
) -> Result<ExactMatrix> {
    let d = space.dimension();
    let mut out = ExactMatrix::zeros(d, d);
    for (p, c) in x.terms() {
        out = out.add(&action_matrix_u(p, space, variant)?.scale(c))?;
    }
    Ok(out)
}

/// The identities between the plain and hat actions on `U^{⊗k}`, together
/// with the isomorphism checks for `φ`.
///
/// * `i`: if `α` kills `v_i`, so does every `β ≥ α` under the hat rule.
/// * `ii`: otherwise exactly one `β ≥ α` sends `v_i` somewhere under the hat
///   rule, and to the same place.
/// * `iii`: `hat(α) = Σ_β c_β plain(β)` where `φ⁻¹(α) = Σ_β c_β β`.
pub fn verify_prop3(n: usize, k: usize) -> Result<MorphismReport> {
    verify_prop3_with(n, k, &Limits::default())
}

pub fn verify_prop3_with(n: usize, k: usize, limits: &Limits) -> Result<MorphismReport> {
    let space = ActionSpace::new_with(SpaceKind::U, n, k, limits)?;
    let elements = enumerate_pistar_with(k, limits)?;

    let (mut checked_i, mut ok_i) = (0, true);
    let (mut checked_ii, mut ok_ii) = (0, true);
    for alpha in &elements {
        let above: Vec<HatElement> = partial_coarsenings(alpha)
            .into_iter()
            .map(|(beta, _)| HatElement::Diagram(beta))
            .collect();
        for i in space.indices() {
            let hits: Vec<_> = above.iter().filter_map(|b| match_set_hat(b, &i)).collect();
            match match_set_partial(alpha, &i) {
                None => {
                    checked_i += 1;
                    ok_i &= hits.is_empty();
                }
                Some(target) => {
                    checked_ii += 1;
                    ok_ii &= hits.len() == 1 && hits[0] == target;
                }
            }
        }
    }

    let mut ok_iii = true;
    let mut inverse_ok = true;
    for alpha in &elements {
        let inverse = phi_inverse_with(alpha, limits)?;
        inverse_ok &= inverse == phi_inverse_mobius(alpha);
        inverse_ok &= phi_linear(&inverse) == AlgebraElement::basis(Carrier::Hat, alpha.clone());
        let hat = action_matrix_u(alpha, &space, Variant::Hat)?;
        ok_iii &= hat == combination_matrix(&inverse, &space, Variant::Plain)?;
    }

    let pairs = homomorphism_pairs(&elements, k);
    let homomorphism_ok = phi_is_multiplicative(&pairs)?;
    Ok(MorphismReport {
        map: MorphismKind::Phi,
        n,
        k,
        pairs_checked: checked_i + checked_ii,
        homomorphism_pairs: pairs.len(),
        homomorphism_ok,
        inverse_ok,
        parts: vec![
            PartCheck {
                name: "i".into(),
                checked: checked_i,
                holds: ok_i,
            },
            PartCheck {
                name: "ii".into(),
                checked: checked_ii,
                holds: ok_ii,
            },
            PartCheck {
                name: "iii".into(),
                checked: elements.len(),
                holds: ok_iii,
            },
        ],
    })
}

/// `tilde(α) = Σ_{β ⊢ α} hat(β)` on `U^{⊗k}`, with the isomorphism checks
/// for `ψ`.
pub fn verify_prop4(n: usize, k: usize) -> Result<MorphismReport> {
    verify_prop4_with(n, k, &Limits::default())
}

pub fn verify_prop4_with(n: usize, k: usize, limits: &Limits) -> Result<MorphismReport> {
    let space = ActionSpace::new_with(SpaceKind::U, n, k, limits)?;
    let elements = enumerate_pistar_with(k, limits)?;

    let mut ok = true;
    let mut inverse_ok = true;
    for alpha in &elements {
        let tilde = action_matrix_u(alpha, &space, Variant::Tilde)?;
        let mut sum = ExactMatrix::zeros(space.dimension(), space.dimension());
        for beta in elements.iter().filter(|b| subblocks_leq(b, alpha)) {
            sum = sum.add(&action_matrix_u(beta, &space, Variant::Hat)?)?;
        }
        ok &= tilde == sum;
        ok &= tilde == combination_matrix(&psi(alpha), &space, Variant::Hat)?;

        let inverse = psi_inverse(alpha);
        inverse_ok &= psi_linear(&inverse) == AlgebraElement::basis(Carrier::Hat, alpha.clone());
    }

    let pairs = homomorphism_pairs(&elements, k);
    let homomorphism_ok = psi_is_multiplicative(&pairs)?;
    Ok(MorphismReport {
        map: MorphismKind::Psi,
        n,
        k,
        pairs_checked: elements.len(),
        homomorphism_pairs: pairs.len(),
        homomorphism_ok,
        inverse_ok,
        parts: vec![PartCheck {
            name: "tilde".into(),
            checked: elements.len(),
            holds: ok,
        }],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::coarser_leq;
    use crate::notation::parse_partition;

    fn p(text: &str, k: usize) -> SetPartition {
        parse_partition(text, k).unwrap()
    }

    #[test]
    fn coarsenings_of_a_two_block_element() {
        let alpha = p("{1,1'}|{2,2'}", 2);
        let above = partial_coarsenings(&alpha);
        let names: Vec<String> = above.iter().map(|(b, _)| b.to_string()).collect();
        assert_eq!(above.len(), 5);
        for want in ["{}", "{1,1'}", "{2,2'}", "{1,1'}|{2,2'}", "{1,2,1',2'}"] {
            assert!(names.contains(&want.to_string()), "{want}");
        }
        for (beta, _) in &above {
            assert!(partial_coarser_leq(&alpha, beta));
        }
    }

    #[test]
    fn mobius_values() {
        let alpha = p("{1,1'}|{2,2'}", 2);
        let mu = |text: &str| {
            partial_coarsenings(&alpha)
                .into_iter()
                .find(|(b, _)| b.to_string() == text)
                .unwrap()
                .1
        };
        let int = |v: i64| Rational::from_integer(v.into());
        assert_eq!(mu("{1,1'}|{2,2'}"), int(1));
        assert_eq!(mu("{1,1'}"), int(-1));
        assert_eq!(mu("{1,2,1',2'}"), int(-1));
        assert_eq!(mu("{}"), int(2));
    }

    #[test]
    fn phi_round_trips() {
        for k in 1..=2 {
            for alpha in crate::diagrams::enumerate_pistar(k).unwrap() {
                let back = phi_linear(&phi_inverse(&alpha).unwrap());
                assert_eq!(back, AlgebraElement::basis(Carrier::Hat, alpha.clone()));
                assert_eq!(phi_inverse(&alpha).unwrap(), phi_inverse_mobius(&alpha));
            }
        }
    }

    #[test]
    fn psi_round_trips() {
        for alpha in crate::diagrams::enumerate_pistar(2).unwrap() {
            assert_eq!(
                psi_linear(&psi_inverse(&alpha)),
                AlgebraElement::basis(Carrier::Hat, alpha.clone())
            );
        }
    }

    #[test]
    fn empty_partition_maps_to_itself() {
        let e = SetPartition::empty(2);
        assert_eq!(phi(&e), AlgebraElement::basis(Carrier::Hat, e.clone()));
        assert_eq!(psi(&e), AlgebraElement::basis(Carrier::Hat, e));
    }

    #[test]
    fn prop3_small() {
        for (n, k) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let r = verify_prop3(n, k).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn prop4_small() {
        for (n, k) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let r = verify_prop4(n, k).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }

    // Summing over same-domain coarsenings only misses the elements that
    // drop blocks, whose hat action covers the indices where a block value
    // is 0.
    #[test]
    fn same_domain_sum_is_not_the_plain_action() {
        let space = ActionSpace::new(SpaceKind::U, 1, 1).unwrap();
        let alpha = p("{1,1'}", 1);
        let same_domain: Vec<SetPartition> = crate::diagrams::enumerate_pistar(1)
            .unwrap()
            .into_iter()
            .filter(|b| coarser_leq(&alpha, b))
            .collect();
        let mut sum = ExactMatrix::zeros(2, 2);
        for b in &same_domain {
            sum = sum
                .add(&action_matrix_u(b, &space, Variant::Hat).unwrap())
                .unwrap();
        }
        let plain = action_matrix_u(&alpha, &space, Variant::Plain).unwrap();
        assert_ne!(sum, plain);
        let full = combination_matrix(&phi(&alpha), &space, Variant::Hat).unwrap();
        assert_eq!(full, plain);
    }
}
