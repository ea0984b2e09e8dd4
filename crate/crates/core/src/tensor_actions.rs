//! Actions on the tensor powers `V^{⊗k}` (basis indices in `{1..n}^k`) and
//! `U^{⊗k}` (indices in `{0..n}^k`, where `0` is the trivial summand).
//!
//! Matrices follow the column convention: the column of `v_i` holds the image
//! of `v_i`. `IS_n` acts on the left, so its matrices multiply in order
//! (`M(α∘β) = M(α)·M(β)`). The diagram semigroups act on the right: in `α·β`
//! the output row of `α` feeds the input row of `β`, hence
//! `M(α·β) = M(β)·M(α)`.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::diagrams::{HatElement, PartialInjection, SetPartition};
use crate::error::{Error, Result};
use crate::exact_linalg::{ExactMatrix, Rational};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceKind {
    V,
    U,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::V => "V",
            SpaceKind::U => "U",
        })
    }
}

/// Which rule a `PI*_k` element acts by on `U^{⊗k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plain,
    Hat,
    Tilde,
}

/// A basis index `(i_1, …, i_k)` of a tensor power.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TensorIndex(pub Vec<usize>);

impl TensorIndex {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, e) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// `V^{⊗k}` or `U^{⊗k}` for `V = C^n`. Basis ordinals are mixed-radix with
/// `i_1` most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ActionSpace {
    pub kind: SpaceKind,
    pub n: usize,
    pub k: usize,
    dimension: usize,
}

impl ActionSpace {
    pub fn new(kind: SpaceKind, n: usize, k: usize) -> Result<Self> {
        Self::new_with(kind, n, k, &Limits::default())
    }

    pub fn new_with(kind: SpaceKind, n: usize, k: usize, limits: &Limits) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::ZeroSize);
        }
        let base = Self::radix_of(kind, n);
        let dimension = (0..k)
            .try_fold(1usize, |acc, _| acc.checked_mul(base))
            .unwrap_or(usize::MAX);
        Limits::check("tensor space dimension", dimension, limits.max_dimension)?;
        Ok(Self {
            kind,
            n,
            k,
            dimension,
        })
    }

    fn radix_of(kind: SpaceKind, n: usize) -> usize {
        match kind {
            SpaceKind::V => n,
            SpaceKind::U => n + 1,
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    fn lowest(&self) -> usize {
        match self.kind {
            SpaceKind::V => 1,
            SpaceKind::U => 0,
        }
    }

    pub fn contains(&self, index: &TensorIndex) -> bool {
        index.0.len() == self.k && index.0.iter().all(|&e| e >= self.lowest() && e <= self.n)
    }

    pub fn ordinal(&self, index: &TensorIndex) -> usize {
        let base = Self::radix_of(self.kind, self.n);
        index
            .0
            .iter()
            .fold(0, |acc, &e| acc * base + (e - self.lowest()))
    }

    pub fn index(&self, mut ordinal: usize) -> TensorIndex {
        let base = Self::radix_of(self.kind, self.n);
        let mut entries = vec![0; self.k];
        for slot in entries.iter_mut().rev() {
            *slot = ordinal % base + self.lowest();
            ordinal /= base;
        }
        TensorIndex(entries)
    }

    pub fn indices(&self) -> impl Iterator<Item = TensorIndex> + '_ {
        (0..self.dimension).map(|o| self.index(o))
    }
}

/// Common value of `i` on the top points of a block; `Err(())` on a clash,
/// `Ok(None)` when the block has no top point.
fn top_value(
    block: &[crate::BoundaryPoint],
    i: &[usize],
) -> std::result::Result<Option<usize>, ()> {
    let mut value = None;
    for p in block.iter().filter(|p| p.is_top()) {
        let v = i[p.index - 1];
        match value {
            None => value = Some(v),
            Some(w) if w != v => return Err(()),
            _ => {}
        }
    }
    Ok(value)
}

/// `M(α, i)` for an element of the composition semigroup acting on `V^{⊗k}`.
/// Undefined points of `alpha` count as singleton blocks; a block without
/// top points leaves its bottom value free in `1..=n`.
pub fn match_set_c(alpha: &SetPartition, i: &TensorIndex, n: usize) -> Vec<TensorIndex> {
    let alpha = alpha.completed();
    let k = alpha.k();
    let mut partial = vec![0usize; k];
    let mut free: Vec<Vec<usize>> = Vec::new();
    for block in alpha.blocks() {
        let bottoms = SetPartition::bottom_part(block);
        match top_value(block, &i.0) {
            Err(()) => return Vec::new(),
            Ok(Some(v)) => {
                for b in bottoms {
                    partial[b - 1] = v;
                }
            }
            Ok(None) => free.push(bottoms),
        }
    }
    let mut out = vec![partial];
    for positions in free {
        out = out
            .into_iter()
            .flat_map(|l| {
                let positions = positions.clone();
                (1..=n).map(move |v| {
                    let mut l = l.clone();
                    for &b in &positions {
                        l[b - 1] = v;
                    }
                    l
                })
            })
            .collect();
    }
    out.into_iter().map(TensorIndex).collect()
}

/// Block values on `U^{⊗k}` shared by the three `PI*_k` rules: top values
/// agree within each block and every undefined top position carries `0`.
fn partial_block_values(alpha: &SetPartition, i: &TensorIndex) -> Option<Vec<usize>> {
    let lookup = alpha.block_lookup();
    if (0..alpha.k()).any(|t| lookup[t].is_none() && i.0[t] != 0) {
        return None;
    }
    alpha
        .blocks()
        .iter()
        .map(|b| top_value(b, &i.0).ok().flatten())
        .collect()
}

fn spread(alpha: &SetPartition, values: &[usize]) -> TensorIndex {
    let mut l = vec![0; alpha.k()];
    for (block, &v) in alpha.blocks().iter().zip(values) {
        for b in SetPartition::bottom_part(block) {
            l[b - 1] = v;
        }
    }
    TensorIndex(l)
}

fn distinct_nonzero(values: &[usize]) -> bool {
    let mut seen: Vec<usize> = values.iter().copied().filter(|&v| v != 0).collect();
    let len = seen.len();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == len
}

/// `M(α, i)` for `α ∈ PI*_k` on `U^{⊗k}`; at most one index.
pub fn match_set_partial(alpha: &SetPartition, i: &TensorIndex) -> Option<TensorIndex> {
    partial_block_values(alpha, i).map(|values| spread(alpha, &values))
}

/// `M̂(a, i)`: block values non-zero and pairwise distinct; empty for `0`.
pub fn match_set_hat(a: &HatElement, i: &TensorIndex) -> Option<TensorIndex> {
    let alpha = a.as_diagram()?;
    let values = partial_block_values(alpha, i)?;
    (values.iter().all(|&v| v != 0) && distinct_nonzero(&values)).then(|| spread(alpha, &values))
}

/// `M̃(α, i)`: block values may be `0`, non-zero ones pairwise distinct.
pub fn match_set_tilde(alpha: &SetPartition, i: &TensorIndex) -> Option<TensorIndex> {
    let values = partial_block_values(alpha, i)?;
    distinct_nonzero(&values).then(|| spread(alpha, &values))
}

fn require_kind(space: &ActionSpace, kind: SpaceKind) -> Result<()> {
    if space.kind != kind {
        return Err(Error::Shape(format!(
            "expected the {kind} tensor space, got {}",
            space.kind
        )));
    }
    Ok(())
}

fn require_k(alpha: &SetPartition, space: &ActionSpace) -> Result<()> {
    if alpha.k() != space.k {
        return Err(Error::SizeMismatch {
            left: alpha.k(),
            right: space.k,
        });
    }
    Ok(())
}

fn build<F>(space: &ActionSpace, mut image: F) -> ExactMatrix
where
    F: FnMut(&TensorIndex) -> Vec<TensorIndex>,
{
    let d = space.dimension();
    let entries = space.indices().enumerate().flat_map(|(col, i)| {
        image(&i)
            .into_iter()
            .map(move |l| (l, col))
            .collect::<Vec<_>>()
    });
    let entries: Vec<((usize, usize), Rational)> = entries
        .map(|(l, col)| ((space.ordinal(&l), col), Rational::one()))
        .collect();
    ExactMatrix::from_entries(d, d, entries).expect("indices in range")
}

/// The operator of a composition-semigroup element on `V^{⊗k}`.
pub fn action_matrix_v(alpha: &SetPartition, space: &ActionSpace) -> Result<ExactMatrix> {
    require_kind(space, SpaceKind::V)?;
    require_k(alpha, space)?;
    Ok(build(space, |i| match_set_c(alpha, i, space.n)))
}

/// Diagonal action of a partial injection on either tensor space; on `U`
/// the entry `0` is fixed by every element.
pub fn rook_action_matrix(pi: &PartialInjection, space: &ActionSpace) -> Result<ExactMatrix> {
    if pi.n() != space.n {
        return Err(Error::SizeMismatch {
            left: pi.n(),
            right: space.n,
        });
    }
    Ok(build(space, |i| {
        i.0.iter()
            .map(|&e| if e == 0 { Some(0) } else { pi.apply(e) })
            .collect::<Option<Vec<usize>>>()
            .map(TensorIndex)
            .into_iter()
            .collect()
    }))
}

/// The operator of a `PI*_k` element on `U^{⊗k}` under the given rule.
pub fn action_matrix_u(
    alpha: &SetPartition,
    space: &ActionSpace,
    variant: Variant,
) -> Result<ExactMatrix> {
    require_kind(space, SpaceKind::U)?;
    require_k(alpha, space)?;
    if !crate::diagrams::is_partial_dual_element(alpha) {
        return Err(Error::WrongFamily {
            element: alpha.to_string(),
            family: "PI*_k",
        });
    }
    let hat = HatElement::Diagram(alpha.clone());
    Ok(build(space, |i| {
        match variant {
            Variant::Plain => match_set_partial(alpha, i),
            Variant::Hat => match_set_hat(&hat, i),
            Variant::Tilde => match_set_tilde(alpha, i),
        }
        .into_iter()
        .collect()
    }))
}

/// The ⋆-rule operator of an element of `PI*_k ∪ {0}`; `0` acts as zero.
pub fn hat_action_matrix(a: &HatElement, space: &ActionSpace) -> Result<ExactMatrix> {
    match a {
        HatElement::Zero => {
            require_kind(space, SpaceKind::U)?;
            Ok(ExactMatrix::zeros(space.dimension(), space.dimension()))
        }
        HatElement::Diagram(alpha) => action_matrix_u(alpha, space, Variant::Hat),
    }
}
