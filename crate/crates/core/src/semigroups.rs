//! Products in `IS_n`, the composition semigroup `C_k`, `I*_k`, `PI*_k`, and
//! the two deformed products ⋆ (on `PI*_k ∪ {0}`) and • (on `PI*_k`).
//!
//! Diagram products stack `alpha` on top of `beta`: the bottom row of `alpha`
//! is glued to the top row of `beta`. The result keeps the top row of
//! `alpha` and the bottom row of `beta`.

use serde::{Deserialize, Serialize};

use crate::diagrams::{
    is_dual_element, is_partial_dual_element, BoundaryPoint, HatElement, PartialInjection,
    SetPartition,
};
use crate::error::{Error, Result};

/// Product in the composition semigroup together with the number of deleted
/// middle-only components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionResult {
    pub diagram: SetPartition,
    pub garbage_count: usize,
}

/// `alpha ∘ beta`: apply `beta` first.
pub fn compose_partial_injection(
    alpha: &PartialInjection,
    beta: &PartialInjection,
) -> Result<PartialInjection> {
    if alpha.n() != beta.n() {
        return Err(Error::SizeMismatch {
            left: alpha.n(),
            right: beta.n(),
        });
    }
    let images = (1..=beta.n())
        .map(|d| beta.apply(d).and_then(|m| alpha.apply(m)))
        .collect();
    Ok(PartialInjection::from_images_unchecked(images))
}

/// The idempotent `ε_A`: identity on `A`, undefined elsewhere.
pub fn epsilon(n: usize, subset: &[usize]) -> Result<PartialInjection> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let mut images = vec![None; n];
    for &a in subset {
        if a == 0 || a > n {
            return Err(Error::TargetOutOfRange { target: a, n });
        }
        images[a - 1] = Some(a);
    }
    Ok(PartialInjection::from_images_unchecked(images))
}

/// Monoid generators of `IS_n`: the transposition `(1 2)`, the cycle
/// `(1 2 … n)` and `ε_{N∖{n}}`, deduplicated. For `n = 1` the identity and
/// the zero.
pub fn is_generators(n: usize) -> Result<Vec<PartialInjection>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if n == 1 {
        return Ok(vec![PartialInjection::identity(1), epsilon(1, &[])?]);
    }
    let mut transposition: Vec<Option<usize>> = (1..=n).map(Some).collect();
    transposition.swap(0, 1);
    let cycle = (1..=n).map(|d| Some(d % n + 1)).collect();
    let below: Vec<usize> = (1..n).collect();
    let mut gens = vec![
        PartialInjection::from_images_unchecked(transposition),
        PartialInjection::from_images_unchecked(cycle),
        epsilon(n, &below)?,
    ];
    gens.dedup();
    Ok(gens)
}

/// Union-find over the `3k` points of a stacked pair of diagrams.
struct Components {
    parent: Vec<usize>,
}

impl Components {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Tier layout: `0..k` top of alpha, `k..2k` the glued middle row, `2k..3k`
/// bottom of beta.
struct Stack {
    k: usize,
    components: Components,
}

impl Stack {
    fn new(alpha: &SetPartition, beta: &SetPartition) -> Self {
        let k = alpha.k();
        let mut components = Components::new(3 * k);
        for (part, offset) in [(alpha, 0), (beta, k)] {
            for block in part.blocks() {
                let first = offset + block[0].ordinal(k);
                for p in &block[1..] {
                    components.union(first, offset + p.ordinal(k));
                }
            }
        }
        Self { k, components }
    }

    fn point(&self, node: usize) -> Option<BoundaryPoint> {
        let k = self.k;
        match node / k {
            0 => Some(BoundaryPoint::top(node + 1)),
            1 => None,
            _ => Some(BoundaryPoint::bottom(node - 2 * k + 1)),
        }
    }

    /// Components as `(root, outer points)`, in order of their smallest node.
    fn groups(&mut self) -> Vec<(usize, Vec<BoundaryPoint>)> {
        let mut groups: Vec<(usize, Vec<BoundaryPoint>)> = Vec::new();
        for node in 0..3 * self.k {
            let root = self.components.find(node);
            let slot = match groups.iter().position(|(r, _)| *r == root) {
                Some(i) => i,
                None => {
                    groups.push((root, Vec::new()));
                    groups.len() - 1
                }
            };
            if let Some(p) = self.point(node) {
                groups[slot].1.push(p);
            }
        }
        groups
    }
}

fn check_same_k(alpha: &SetPartition, beta: &SetPartition) -> Result<()> {
    if alpha.k() != beta.k() {
        return Err(Error::SizeMismatch {
            left: alpha.k(),
            right: beta.k(),
        });
    }
    Ok(())
}

/// Product in `C_k`. Undefined points of either factor are treated as
/// singleton blocks.
pub fn multiply_composition(
    alpha: &SetPartition,
    beta: &SetPartition,
) -> Result<CompositionResult> {
    check_same_k(alpha, beta)?;
    let (alpha, beta) = (alpha.completed(), beta.completed());
    let mut stack = Stack::new(&alpha, &beta);
    let mut blocks = Vec::new();
    let mut garbage_count = 0;
    for (_, points) in stack.groups() {
        if points.is_empty() {
            garbage_count += 1;
        } else {
            blocks.push(points);
        }
    }
    Ok(CompositionResult {
        diagram: SetPartition::from_blocks_unchecked(alpha.k(), blocks),
        garbage_count,
    })
}

fn require(p: &SetPartition, ok: bool, family: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::WrongFamily {
            element: p.to_string(),
            family,
        })
    }
}

/// Product in `I*_k`.
pub fn multiply_istar(alpha: &SetPartition, beta: &SetPartition) -> Result<SetPartition> {
    require(alpha, is_dual_element(alpha), "I*_k")?;
    require(beta, is_dual_element(beta), "I*_k")?;
    let product = multiply_composition(alpha, beta)?;
    debug_assert_eq!(product.garbage_count, 0);
    Ok(product.diagram)
}

/// Product in `PI*_k`: glue as in `C_k` after completing both factors with
/// singletons; a component survives iff none of the blocks it is built from
/// is one of those singletons. Points of broken components become undefined.
pub fn multiply_pistar(alpha: &SetPartition, beta: &SetPartition) -> Result<SetPartition> {
    require(alpha, is_partial_dual_element(alpha), "PI*_k")?;
    require(beta, is_partial_dual_element(beta), "PI*_k")?;
    check_same_k(alpha, beta)?;
    Ok(pistar_product(alpha, beta))
}

fn pistar_product(alpha: &SetPartition, beta: &SetPartition) -> SetPartition {
    let k = alpha.k();
    let mut stack = Stack::new(alpha, beta);
    // Nodes that carry a completion singleton of alpha (top and middle rows)
    // or of beta (middle and bottom rows).
    let mut broken = vec![false; 3 * k];
    for (ord, slot) in alpha.block_lookup().iter().enumerate() {
        if slot.is_none() {
            broken[ord] = true;
        }
    }
    for (ord, slot) in beta.block_lookup().iter().enumerate() {
        if slot.is_none() {
            broken[k + ord] = true;
        }
    }
    let mut root_broken = vec![false; 3 * k];
    for node in 0..3 * k {
        if broken[node] {
            let root = stack.components.find(node);
            root_broken[root] = true;
        }
    }
    let blocks = stack
        .groups()
        .into_iter()
        .filter(|(root, points)| !root_broken[*root] && !points.is_empty())
        .map(|(_, points)| points)
        .collect();
    SetPartition::from_blocks_unchecked(k, blocks)
}

/// The literal overlap condition: whenever a block `A` of `alpha` and a block
/// `B` of `beta` meet in the middle row, `A ∩ K' = (B ∩ K)'`.
pub fn overlap_condition(alpha: &SetPartition, beta: &SetPartition) -> bool {
    let beta_lookup = beta.block_lookup();
    alpha.blocks().iter().all(|a| {
        let lower = SetPartition::bottom_part(a);
        lower.iter().all(|&i| match beta_lookup[i - 1] {
            None => true,
            Some(b) => SetPartition::top_part(&beta.blocks()[b]) == lower,
        })
    })
}

/// The bottom parts of `alpha`'s blocks and the top parts of `beta`'s blocks
/// form the same partition of the same subset of `{1..k}`.
pub fn middle_rows_match(alpha: &SetPartition, beta: &SetPartition) -> bool {
    let mut lower: Vec<Vec<usize>> = alpha
        .blocks()
        .iter()
        .map(|a| SetPartition::bottom_part(a))
        .collect();
    let mut upper: Vec<Vec<usize>> = beta
        .blocks()
        .iter()
        .map(|b| SetPartition::top_part(b))
        .collect();
    lower.sort_unstable();
    upper.sort_unstable();
    lower == upper
}

/// The ⋆ product: `alpha · beta` when the middle rows match exactly,
/// otherwise `0`.
///
/// Exact matching is the overlap condition together with equality of the
/// middle-row domains; without the domain part the hat action would not be
/// multiplicative (`{1,1'} ⋆ {2,2'}` must vanish).
pub fn star_multiply(a: &HatElement, b: &HatElement) -> Result<HatElement> {
    let (alpha, beta) = match (a, b) {
        (HatElement::Diagram(x), HatElement::Diagram(y)) => (x, y),
        _ => return Ok(HatElement::Zero),
    };
    check_same_k(alpha, beta)?;
    if middle_rows_match(alpha, beta) {
        Ok(HatElement::Diagram(pistar_product(alpha, beta)))
    } else {
        Ok(HatElement::Zero)
    }
}

/// The • product: blocks `(A ∩ K) ∪ (B ∩ K')` over all pairs of blocks with
/// `A ∩ K' = (B ∩ K)'`.
pub fn bullet_multiply(alpha: &SetPartition, beta: &SetPartition) -> Result<SetPartition> {
    require(alpha, is_partial_dual_element(alpha), "PI*_k")?;
    require(beta, is_partial_dual_element(beta), "PI*_k")?;
    check_same_k(alpha, beta)?;
    let mut blocks = Vec::new();
    for a in alpha.blocks() {
        let lower = SetPartition::bottom_part(a);
        if let Some(b) = beta
            .blocks()
            .iter()
            .find(|b| SetPartition::top_part(b) == lower)
        {
            blocks.push(
                a.iter()
                    .filter(|p| p.is_top())
                    .chain(b.iter().filter(|p| !p.is_top()))
                    .copied()
                    .collect(),
            );
        }
    }
    Ok(SetPartition::from_blocks_unchecked(alpha.k(), blocks))
}
