//! Checks of the two Schur-Weyl dualities: `IS_n` against `I*_k` on
//! `V^{⊗k}`, and `IS_n` against `PI*_k` on `U^{⊗k}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{enumerate_is_with, enumerate_istar_with, enumerate_pistar_with};
use crate::error::Result;
use crate::exact_linalg::{all_in_span, commutant_basis_with, span_dimension, ExactMatrix};
use crate::limits::Limits;
use crate::semigroups::is_generators;
use crate::tensor_actions::{
    action_matrix_u, action_matrix_v, rook_action_matrix, ActionSpace, SpaceKind, Variant,
};
use crate::PartialInjection;

/// Largest tensor dimension at which the grid runs the commutant solves;
/// bigger cells are checked for commutation and faithfulness only.
pub const CENTRALIZER_MAX_DIMENSION: usize = 27;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemigroupRepresentation {
    IsOnV,
    IstarOnV,
    IsOnU,
    PistarOnU,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraRepresentation {
    /// `C[IS_n]` modulo `ε_∅`, which acts as zero on `V^{⊗k}`.
    ContractedIsOnV,
    IstarOnV,
    IsOnU,
    PistarOnU,
}

impl fmt::Display for SemigroupRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::IsOnV => "is_on_V",
            Self::IstarOnV => "istar_on_V",
            Self::IsOnU => "is_on_U",
            Self::PistarOnU => "pistar_on_U",
        })
    }
}

impl fmt::Display for AlgebraRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ContractedIsOnV => "contracted_is_on_V",
            Self::IstarOnV => "istar_on_V",
            Self::IsOnU => "is_on_U",
            Self::PistarOnU => "pistar_on_U",
        })
    }
}

/// Both centralizer comparisons of one cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerDims {
    pub commutant_of_left: usize,
    pub span_of_right: usize,
    pub right_in_commutant: bool,
    pub commutant_in_right: bool,
    pub commutant_of_right: usize,
    pub span_of_left: usize,
    pub left_in_commutant: bool,
    pub commutant_in_left: bool,
}

impl CentralizerDims {
    pub fn holds(&self) -> bool {
        self.commutant_of_left == self.span_of_right
            && self.right_in_commutant
            && self.commutant_in_right
            && self.commutant_of_right == self.span_of_left
            && self.left_in_commutant
            && self.commutant_in_left
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predictions {
    pub commute_ok: bool,
    pub centralizer_equal: bool,
    pub semigroup_faithful_left: bool,
    pub semigroup_faithful_right: bool,
    pub algebra_faithful_left: bool,
    pub algebra_faithful_right: bool,
}

impl Predictions {
    pub fn for_cell(n: usize, k: usize, space: SpaceKind) -> Self {
        let (semigroup_faithful_right, algebra_faithful_left) = match space {
            SpaceKind::V => (n >= 2 || k == 1, k >= n),
            SpaceKind::U => (true, k >= n),
        };
        Self {
            commute_ok: true,
            centralizer_equal: true,
            semigroup_faithful_left: true,
            semigroup_faithful_right,
            algebra_faithful_left,
            algebra_faithful_right: k <= n,
        }
    }
}

/// Outcome of one `(n, k, space)` cell. `centralizer_dims` is absent when
/// the commutant solve was skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub n: usize,
    pub k: usize,
    pub space: SpaceKind,
    pub dimension: usize,
    pub commute_ok: bool,
    pub centralizer_dims: Option<CentralizerDims>,
    pub semigroup_faithful_left: bool,
    pub semigroup_faithful_right: bool,
    pub algebra_faithful_left: bool,
    pub algebra_faithful_right: bool,
    pub predictions: Predictions,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Images of both sides of one cell, built once and shared by the checks.
struct Cell {
    space: ActionSpace,
    left_generators: Vec<ExactMatrix>,
    /// `(is ε_∅, image)` for every element of `IS_n`.
    left: Vec<(bool, ExactMatrix)>,
    right: Vec<ExactMatrix>,
    limits: Limits,
}

impl Cell {
    fn new(n: usize, k: usize, kind: SpaceKind, limits: &Limits) -> Result<Self> {
        let space = ActionSpace::new_with(kind, n, k, limits)?;
        let mut left_generators = vec![rook_action_matrix(&PartialInjection::identity(n), &space)?];
        for g in is_generators(n)? {
            left_generators.push(rook_action_matrix(&g, &space)?);
        }
        let left = enumerate_is_with(n, limits)?
            .iter()
            .map(|x| Ok((x.is_zero(), rook_action_matrix(x, &space)?)))
            .collect::<Result<Vec<_>>>()?;
        let right = match kind {
            SpaceKind::V => enumerate_istar_with(k, limits)?
                .iter()
                .map(|a| action_matrix_v(a, &space))
                .collect::<Result<Vec<_>>>()?,
            SpaceKind::U => enumerate_pistar_with(k, limits)?
                .iter()
                .map(|a| action_matrix_u(a, &space, Variant::Plain))
                .collect::<Result<Vec<_>>>()?,
        };
        Ok(Self {
            space,
            left_generators,
            left,
            right,
            limits: *limits,
        })
    }

    fn left_images(&self) -> Vec<ExactMatrix> {
        self.left.iter().map(|(_, m)| m.clone()).collect()
    }

    fn commute(&self) -> Result<bool> {
        for g in &self.left_generators {
            for r in &self.right {
                if !g.commutes_with(r)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn centralizer(&self) -> Result<CentralizerDims> {
        let d = self.space.dimension();
        let left_images = self.left_images();

        let commutant_left = commutant_basis_with(&self.left_generators, d, &self.limits)?;
        let commutant_right = commutant_basis_with(&self.right, d, &self.limits)?;
        Ok(CentralizerDims {
            commutant_of_left: commutant_left.len(),
            span_of_right: span_dimension(&self.right)?,
            right_in_commutant: all_in_span(&self.right, &commutant_left)?,
            commutant_in_right: all_in_span(&commutant_left, &self.right)?,
            commutant_of_right: commutant_right.len(),
            span_of_left: span_dimension(&left_images)?,
            left_in_commutant: all_in_span(&left_images, &commutant_right)?,
            commutant_in_left: all_in_span(&commutant_right, &left_images)?,
        })
    }

    fn semigroup_faithful_left(&self) -> bool {
        distinct(self.left.iter().map(|(_, m)| m))
    }

    fn semigroup_faithful_right(&self) -> bool {
        distinct(self.right.iter())
    }

    fn algebra_faithful_left(&self) -> Result<bool> {
        let basis: Vec<ExactMatrix> = match self.space.kind {
            SpaceKind::V => self
                .left
                .iter()
                .filter(|(zero, _)| !zero)
                .map(|(_, m)| m.clone())
                .collect(),
            SpaceKind::U => self.left_images(),
        };
        Ok(span_dimension(&basis)? == basis.len())
    }

    fn algebra_faithful_right(&self) -> Result<bool> {
        Ok(span_dimension(&self.right)? == self.right.len())
    }
}

fn distinct<'a>(mats: impl Iterator<Item = &'a ExactMatrix>) -> bool {
    let mut seen = BTreeSet::new();
    mats.into_iter().all(|m| seen.insert(m))
}

/// Every `IS_n` generator commutes with the image of every element of `I*_k`
/// (on `V`) or `PI*_k` (on `U`).
pub fn verify_commutation(n: usize, k: usize, space: SpaceKind) -> Result<bool> {
    verify_commutation_with(n, k, space, &Limits::default())
}

pub fn verify_commutation_with(
    n: usize,
    k: usize,
    space: SpaceKind,
    limits: &Limits,
) -> Result<bool> {
    Cell::new(n, k, space, limits)?.commute()
}

/// Commutant of `IS_n` against the span of the right images, and the
/// mirrored comparison.
pub fn verify_centralizer(n: usize, k: usize, space: SpaceKind) -> Result<CentralizerDims> {
    verify_centralizer_with(n, k, space, &Limits::default())
}

pub fn verify_centralizer_with(
    n: usize,
    k: usize,
    space: SpaceKind,
    limits: &Limits,
) -> Result<CentralizerDims> {
    Cell::new(n, k, space, limits)?.centralizer()
}

/// Whether distinct elements act by distinct operators.
pub fn verify_semigroup_faithfulness(
    n: usize,
    k: usize,
    which: SemigroupRepresentation,
) -> Result<bool> {
    verify_semigroup_faithfulness_with(n, k, which, &Limits::default())
}

pub fn verify_semigroup_faithfulness_with(
    n: usize,
    k: usize,
    which: SemigroupRepresentation,
    limits: &Limits,
) -> Result<bool> {
    use SemigroupRepresentation::*;
    let space = match which {
        IsOnV | IstarOnV => SpaceKind::V,
        IsOnU | PistarOnU => SpaceKind::U,
    };
    let cell = Cell::new(n, k, space, limits)?;
    Ok(match which {
        IsOnV | IsOnU => cell.semigroup_faithful_left(),
        IstarOnV | PistarOnU => cell.semigroup_faithful_right(),
    })
}

/// Whether the images of the algebra's basis are linearly independent.
pub fn verify_algebra_faithfulness(
    n: usize,
    k: usize,
    which: AlgebraRepresentation,
) -> Result<bool> {
    verify_algebra_faithfulness_with(n, k, which, &Limits::default())
}

pub fn verify_algebra_faithfulness_with(
    n: usize,
    k: usize,
    which: AlgebraRepresentation,
    limits: &Limits,
) -> Result<bool> {
    use AlgebraRepresentation::*;
    let space = match which {
        ContractedIsOnV | IstarOnV => SpaceKind::V,
        IsOnU | PistarOnU => SpaceKind::U,
    };
    let cell = Cell::new(n, k, space, limits)?;
    match which {
        ContractedIsOnV | IsOnU => cell.algebra_faithful_left(),
        IstarOnV | PistarOnU => cell.algebra_faithful_right(),
    }
}

/// Runs every check of one cell and compares against the predictions.
pub fn run_report(
    n: usize,
    k: usize,
    space: SpaceKind,
    with_centralizer: bool,
    limits: &Limits,
) -> Result<DualityReport> {
    let cell = Cell::new(n, k, space, limits)?;
    let predictions = Predictions::for_cell(n, k, space);
    let commute_ok = cell.commute()?;
    let centralizer_dims = if with_centralizer {
        Some(cell.centralizer()?)
    } else {
        None
    };
    let semigroup_faithful_left = cell.semigroup_faithful_left();
    let semigroup_faithful_right = cell.semigroup_faithful_right();
    let algebra_faithful_left = cell.algebra_faithful_left()?;
    let algebra_faithful_right = cell.algebra_faithful_right()?;
    let matches = commute_ok == predictions.commute_ok
        && centralizer_dims
            .as_ref()
            .is_none_or(|c| c.holds() == predictions.centralizer_equal)
        && semigroup_faithful_left == predictions.semigroup_faithful_left
        && semigroup_faithful_right == predictions.semigroup_faithful_right
        && algebra_faithful_left == predictions.algebra_faithful_left
        && algebra_faithful_right == predictions.algebra_faithful_right;
    Ok(DualityReport {
        n,
        k,
        space,
        dimension: cell.space.dimension(),
        commute_ok,
        centralizer_dims,
        semigroup_faithful_left,
        semigroup_faithful_right,
        algebra_faithful_left,
        algebra_faithful_right,
        predictions,
        matches,
    })
}

/// Reports for both spaces at `(n, k)`, with the commutant solves whenever
/// the dimension allows.
pub fn run_full_report(n: usize, k: usize) -> Result<Vec<DualityReport>> {
    run_full_report_with(n, k, &Limits::default())
}

pub fn run_full_report_with(n: usize, k: usize, limits: &Limits) -> Result<Vec<DualityReport>> {
    [SpaceKind::V, SpaceKind::U]
        .into_iter()
        .map(|space| {
            let d = ActionSpace::new_with(space, n, k, limits)?.dimension();
            run_report(n, k, space, d <= CENTRALIZER_MAX_DIMENSION, limits)
        })
        .collect()
}

/// One cell of a verification grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub n: usize,
    pub k: usize,
    pub space: SpaceKind,
    pub centralizer: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `IS_n` and `I*_k` on `V^{⊗k}`.
    V,
    /// `IS_n` and `PI*_k` on `U^{⊗k}`.
    U,
}

impl Theorem {
    pub fn space(self) -> SpaceKind {
        match self {
            Theorem::V => SpaceKind::V,
            Theorem::U => SpaceKind::U,
        }
    }
}

/// The default grid: a full square plus a few larger cells, the commutant
/// solve wherever the dimension is at most [`CENTRALIZER_MAX_DIMENSION`].
pub fn default_grid(theorem: Theorem) -> Vec<GridCell> {
    let (square, extra): (usize, &[(usize, usize)]) = match theorem {
        Theorem::V => (3, &[(4, 2), (2, 4), (4, 4)]),
        Theorem::U => (2, &[(3, 2), (2, 3)]),
    };
    let space = theorem.space();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for n in 1..=square {
        for k in 1..=square {
            pairs.push((n, k));
        }
    }
    pairs.extend_from_slice(extra);
    pairs
        .into_iter()
        .map(|(n, k)| GridCell {
            n,
            k,
            space,
            centralizer: dimension(space, n, k) <= CENTRALIZER_MAX_DIMENSION,
        })
        .collect()
}

/// All cells with `n ≤ max_n`, `k ≤ max_k`.
pub fn square_grid(theorem: Theorem, max_n: usize, max_k: usize) -> Vec<GridCell> {
    let space = theorem.space();
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 1..=max_k {
            out.push(GridCell {
                n,
                k,
                space,
                centralizer: dimension(space, n, k) <= CENTRALIZER_MAX_DIMENSION,
            });
        }
    }
    out
}

fn dimension(space: SpaceKind, n: usize, k: usize) -> usize {
    let base = match space {
        SpaceKind::V => n,
        SpaceKind::U => n + 1,
    };
    base.saturating_pow(k as u32)
}

pub fn run_grid(cells: &[GridCell], limits: &Limits) -> Result<Vec<DualityReport>> {
    cells
        .iter()
        .map(|c| run_report(c.n, c.k, c.space, c.centralizer, limits))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutation_examples() {
        assert!(verify_commutation(3, 2, SpaceKind::V).unwrap());
        assert!(verify_commutation(2, 2, SpaceKind::U).unwrap());
        assert!(verify_commutation(1, 1, SpaceKind::V).unwrap());
        assert!(verify_commutation(1, 1, SpaceKind::U).unwrap());
    }

    #[test]
    fn centralizer_examples() {
        let c = verify_centralizer(3, 2, SpaceKind::V).unwrap();
        assert_eq!((c.commutant_of_left, c.span_of_right), (3, 3));
        assert!(c.holds());
        let c = verify_centralizer(2, 2, SpaceKind::U).unwrap();
        assert_eq!((c.commutant_of_left, c.span_of_right), (12, 12));
        assert!(c.holds());
        let c = verify_centralizer(1, 1, SpaceKind::V).unwrap();
        assert_eq!((c.commutant_of_left, c.span_of_right), (1, 1));
        assert!(c.holds());
    }

    #[test]
    fn semigroup_faithfulness_examples() {
        use SemigroupRepresentation::*;
        assert!(!verify_semigroup_faithfulness(1, 2, IstarOnV).unwrap());
        assert!(verify_semigroup_faithfulness(2, 3, IstarOnV).unwrap());
        assert!(verify_semigroup_faithfulness(2, 1, IsOnV).unwrap());
    }

    #[test]
    fn algebra_faithfulness_examples() {
        use AlgebraRepresentation::*;
        assert!(!verify_algebra_faithfulness(2, 1, ContractedIsOnV).unwrap());
        assert!(verify_algebra_faithfulness(2, 2, ContractedIsOnV).unwrap());
        assert!(!verify_algebra_faithfulness(2, 3, IstarOnV).unwrap());
        assert!(verify_algebra_faithfulness(2, 2, PistarOnU).unwrap());
    }

    #[test]
    fn full_reports_match() {
        for (n, k) in [(2, 2), (1, 2), (3, 2)] {
            for r in run_full_report(n, k).unwrap() {
                assert!(r.matches, "{r:?}");
            }
        }
        let v = &run_full_report(1, 2).unwrap()[0];
        assert!(!v.semigroup_faithful_right);
    }

    #[test]
    fn guards_apply() {
        let tight = Limits {
            max_dimension: 8,
            ..Limits::default()
        };
        assert!(run_report(3, 2, SpaceKind::V, false, &tight).is_err());
    }
}
