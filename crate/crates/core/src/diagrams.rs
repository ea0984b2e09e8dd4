//! Diagram elements: partial injections, partitions of the boundary points
//! `{1..k, 1'..k'}`, and the zero-extended carrier of the hat product.
//!
//! Every [`SetPartition`] is kept in canonical form, so structural equality,
//! ordering and hashing agree with equality of the underlying partitions.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{permutations, set_partitions, subsets};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Unprimed,
    Primed,
}

/// One of the `2k` boundary points. Orders unprimed points before primed ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub side: Side,
    /// 1-based.
    pub index: usize,
}

impl BoundaryPoint {
    pub const fn top(index: usize) -> Self {
        Self {
            side: Side::Unprimed,
            index,
        }
    }

    pub const fn bottom(index: usize) -> Self {
        Self {
            side: Side::Primed,
            index,
        }
    }

    /// The priming map `'`, an involution swapping the two sides.
    pub fn primed(self) -> Self {
        Self {
            side: match self.side {
                Side::Unprimed => Side::Primed,
                Side::Primed => Side::Unprimed,
            },
            index: self.index,
        }
    }

    pub fn is_top(self) -> bool {
        self.side == Side::Unprimed
    }

    /// Position in `0..2k`: unprimed `i` at `i - 1`, primed `i` at `k + i - 1`.
    pub fn ordinal(self, k: usize) -> usize {
        match self.side {
            Side::Unprimed => self.index - 1,
            Side::Primed => k + self.index - 1,
        }
    }

    pub fn from_ordinal(ordinal: usize, k: usize) -> Self {
        if ordinal < k {
            Self::top(ordinal + 1)
        } else {
            Self::bottom(ordinal - k + 1)
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Unprimed => write!(f, "{}", self.index),
            Side::Primed => write!(f, "{}'", self.index),
        }
    }
}

/// All `2k` boundary points in canonical order.
pub fn boundary_points(k: usize) -> Vec<BoundaryPoint> {
    (1..=k)
        .map(BoundaryPoint::top)
        .chain((1..=k).map(BoundaryPoint::bottom))
        .collect()
}

/// An element of the symmetric inverse semigroup `IS_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PartialInjection {
    /// `images[d - 1]` is the image of `d`, 1-based.
    images: Vec<Option<usize>>,
}

impl PartialInjection {
    pub fn new(images: Vec<Option<usize>>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let mut seen = vec![false; n + 1];
        for &target in images.iter().flatten() {
            if target == 0 || target > n {
                return Err(Error::TargetOutOfRange { target, n });
            }
            if std::mem::replace(&mut seen[target], true) {
                return Err(Error::NotInjective(target));
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<Option<usize>>) -> Self {
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).map(Some).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, d: usize) -> Option<usize> {
        self.images.get(d.wrapping_sub(1)).copied().flatten()
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.iter().flatten().count()
    }

    pub fn domain(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&d| self.apply(d).is_some())
            .collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.images.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (d, image) in self.images.iter().enumerate() {
            if d > 0 {
                f.write_str(",")?;
            }
            match image {
                Some(t) => write!(f, "{t}")?,
                None => f.write_str("-")?,
            }
        }
        f.write_str("]")
    }
}

/// A partition of a subset of the boundary points of `K ∪ K'`.
///
/// Points outside every block are undefined; when the partition is viewed as
/// an element of the composition semigroup they become singleton blocks (see
/// [`SetPartition::completed`]).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SetPartition {
    k: usize,
    blocks: Vec<Vec<BoundaryPoint>>,
}

impl SetPartition {
    /// Builds the canonical partition from blocks given in any order.
    pub fn new<B, P>(k: usize, blocks: B) -> Result<Self>
    where
        B: IntoIterator<Item = P>,
        P: IntoIterator<Item = BoundaryPoint>,
    {
        if k == 0 {
            return Err(Error::ZeroSize);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for block in blocks {
            let mut block: Vec<BoundaryPoint> = block.into_iter().collect();
            if block.is_empty() {
                return Err(Error::EmptyBlock);
            }
            for &p in &block {
                if p.index == 0 || p.index > k {
                    return Err(Error::PointOutOfRange {
                        point: p.to_string(),
                        k,
                    });
                }
                if !seen.insert(p) {
                    return Err(Error::DuplicatePoint(p.to_string()));
                }
            }
            block.sort_unstable();
            out.push(block);
        }
        out.sort_unstable_by_key(|b| b[0]);
        Ok(Self { k, blocks: out })
    }

    /// Caller guarantees the blocks are valid; they are still sorted.
    pub(crate) fn from_blocks_unchecked(k: usize, mut blocks: Vec<Vec<BoundaryPoint>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Self { k, blocks }
    }

    pub fn empty(k: usize) -> Self {
        Self {
            k,
            blocks: Vec::new(),
        }
    }

    /// `{1,1'}|{2,2'}|...|{k,k'}`.
    pub fn identity(k: usize) -> Self {
        Self {
            k,
            blocks: (1..=k)
                .map(|i| vec![BoundaryPoint::top(i), BoundaryPoint::bottom(i)])
                .collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<BoundaryPoint>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The underlying point set, sorted.
    pub fn domain(&self) -> Vec<BoundaryPoint> {
        let mut pts: Vec<BoundaryPoint> = self.blocks.iter().flatten().copied().collect();
        pts.sort_unstable();
        pts
    }

    /// For every ordinal in `0..2k`, the index of the block holding it.
    pub fn block_lookup(&self) -> Vec<Option<usize>> {
        let mut lookup = vec![None; 2 * self.k];
        for (b, block) in self.blocks.iter().enumerate() {
            for p in block {
                lookup[p.ordinal(self.k)] = Some(b);
            }
        }
        lookup
    }

    pub fn is_total(&self) -> bool {
        self.blocks.iter().map(Vec::len).sum::<usize>() == 2 * self.k
    }

    /// The composition-semigroup embedding: undefined points become singletons.
    pub fn completed(&self) -> SetPartition {
        let lookup = self.block_lookup();
        let mut blocks = self.blocks.clone();
        for (ord, slot) in lookup.iter().enumerate() {
            if slot.is_none() {
                blocks.push(vec![BoundaryPoint::from_ordinal(ord, self.k)]);
            }
        }
        Self::from_blocks_unchecked(self.k, blocks)
    }

    /// Points of the block on the top row, as indices.
    pub(crate) fn top_part(block: &[BoundaryPoint]) -> Vec<usize> {
        block
            .iter()
            .filter(|p| p.is_top())
            .map(|p| p.index)
            .collect()
    }

    /// Points of the block on the bottom row, as indices.
    pub(crate) fn bottom_part(block: &[BoundaryPoint]) -> Vec<usize> {
        block
            .iter()
            .filter(|p| !p.is_top())
            .map(|p| p.index)
            .collect()
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("{}");
        }
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (i, p) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// An element of `PI*_k ∪ {0}`, the carrier of the hat product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HatElement {
    Zero,
    Diagram(SetPartition),
}

impl HatElement {
    pub fn diagram(p: SetPartition) -> Result<Self> {
        if is_partial_dual_element(&p) {
            Ok(Self::Diagram(p))
        } else {
            Err(Error::WrongFamily {
                element: p.to_string(),
                family: "PI*_k",
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Zero)
    }

    pub fn as_diagram(&self) -> Option<&SetPartition> {
        match self {
            Self::Zero => None,
            Self::Diagram(p) => Some(p),
        }
    }
}

impl fmt::Display for HatElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => f.write_str("0"),
            Self::Diagram(p) => p.fmt(f),
        }
    }
}

fn meets_both_sides(block: &[BoundaryPoint]) -> bool {
    block.iter().any(|p| p.is_top()) && block.iter().any(|p| !p.is_top())
}

/// Membership in `I*_k`: every point covered, every block meets both rows.
pub fn is_dual_element(p: &SetPartition) -> bool {
    p.is_total() && p.blocks.iter().all(|b| meets_both_sides(b))
}

/// Membership in `PI*_k`: every block meets both rows; coverage not required.
pub fn is_partial_dual_element(p: &SetPartition) -> bool {
    p.blocks.iter().all(|b| meets_both_sides(b))
}

/// `alpha ⪯ beta`: both have the same point set and every block of `beta`
/// is a union of blocks of `alpha`.
pub fn coarser_leq(alpha: &SetPartition, beta: &SetPartition) -> bool {
    alpha.k == beta.k && alpha.domain() == beta.domain() && blocks_refine(alpha, beta)
}

/// Every block of `beta` is a union of blocks of `alpha`, where `beta` may
/// leave whole blocks of `alpha` out. This is the natural partial order of
/// the inverse semigroup `PI*_k` (restriction followed by merging), and the
/// order the hat-basis isomorphism sums over.
pub fn partial_coarser_leq(alpha: &SetPartition, beta: &SetPartition) -> bool {
    if alpha.k != beta.k {
        return false;
    }
    let alpha_lookup = alpha.block_lookup();
    if beta
        .blocks
        .iter()
        .flatten()
        .any(|p| alpha_lookup[p.ordinal(alpha.k)].is_none())
    {
        return false;
    }
    let beta_lookup = beta.block_lookup();
    alpha.blocks.iter().all(|block| {
        let first = beta_lookup[block[0].ordinal(beta.k)];
        block
            .iter()
            .all(|p| beta_lookup[p.ordinal(beta.k)] == first)
    })
}

/// Each block of `alpha` lies inside one block of `beta` (points of `alpha`
/// must all be covered by `beta`).
fn blocks_refine(alpha: &SetPartition, beta: &SetPartition) -> bool {
    let beta_lookup = beta.block_lookup();
    alpha.blocks.iter().all(|block| {
        let first = beta_lookup[block[0].ordinal(beta.k)];
        first.is_some()
            && block
                .iter()
                .all(|p| beta_lookup[p.ordinal(beta.k)] == first)
    })
}

/// `beta ⊢ alpha`: every block of `beta` is a block of `alpha`.
pub fn subblocks_leq(beta: &SetPartition, alpha: &SetPartition) -> bool {
    beta.k == alpha.k
        && beta.blocks.iter().all(|b| {
            alpha
                .blocks
                .binary_search_by_key(&b[0], |a| a[0])
                .is_ok_and(|i| alpha.blocks[i] == *b)
        })
}

/// Whether the composition-semigroup embedding of `p` has at most `j` blocks.
pub fn block_count_at_most(p: &SetPartition, j: usize) -> bool {
    let undefined = 2 * p.k - p.blocks.iter().map(Vec::len).sum::<usize>();
    p.blocks.len() + undefined <= j
}

pub fn enumerate_is(n: usize) -> Result<Vec<PartialInjection>> {
    enumerate_is_with(n, &Limits::default())
}

/// Every partial injection of `{1..n}`, sorted.
pub fn enumerate_is_with(n: usize, limits: &Limits) -> Result<Vec<PartialInjection>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    Limits::check("n for IS_n", n, limits.max_is_n)?;
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn go(
        n: usize,
        images: &mut Vec<Option<usize>>,
        used: &mut [bool],
        out: &mut Vec<PartialInjection>,
    ) {
        if images.len() == n {
            out.push(PartialInjection::from_images_unchecked(images.clone()));
            return;
        }
        images.push(None);
        go(n, images, used, out);
        images.pop();
        for t in 1..=n {
            if !used[t] {
                used[t] = true;
                images.push(Some(t));
                go(n, images, used, out);
                images.pop();
                used[t] = false;
            }
        }
    }
    go(n, &mut images, &mut used, &mut out);
    out.sort();
    Ok(out)
}

pub fn enumerate_istar(k: usize) -> Result<Vec<SetPartition>> {
    enumerate_istar_with(k, &Limits::default())
}

/// Every element of `I*_k`: a partition of the top row and one of the bottom
/// row into the same number of blocks, glued along a bijection.
pub fn enumerate_istar_with(k: usize, limits: &Limits) -> Result<Vec<SetPartition>> {
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    Limits::check("k for I*_k", k, limits.max_istar_k)?;
    let tops: Vec<usize> = (1..=k).collect();
    let mut out = glue_partitions(k, &tops, &tops);
    out.sort();
    Ok(out)
}

pub fn enumerate_pistar(k: usize) -> Result<Vec<SetPartition>> {
    enumerate_pistar_with(k, &Limits::default())
}

/// Every element of `PI*_k`, the empty partition included.
pub fn enumerate_pistar_with(k: usize, limits: &Limits) -> Result<Vec<SetPartition>> {
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    Limits::check("k for PI*_k", k, limits.max_pistar_k)?;
    let all: Vec<usize> = (1..=k).collect();
    let subs = subsets(&all);
    let mut out = Vec::new();
    for top in &subs {
        for bottom in &subs {
            if top.is_empty() != bottom.is_empty() {
                continue;
            }
            out.extend(glue_partitions(k, top, bottom));
        }
    }
    out.sort();
    Ok(out)
}

pub fn enumerate_composition(k: usize) -> Result<Vec<SetPartition>> {
    enumerate_composition_with(k, &Limits::default())
}

/// Every partition of the `2k` boundary points, the elements of `C_k`.
/// Shares the `PI*_k` size guard.
pub fn enumerate_composition_with(k: usize, limits: &Limits) -> Result<Vec<SetPartition>> {
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    Limits::check("k for C_k", k, limits.max_pistar_k)?;
    let mut out: Vec<SetPartition> = set_partitions(&boundary_points(k))
        .into_iter()
        .map(|blocks| SetPartition::from_blocks_unchecked(k, blocks))
        .collect();
    out.sort();
    Ok(out)
}

/// Partitions of `top ∪ bottom'` whose blocks each meet both rows.
fn glue_partitions(k: usize, top: &[usize], bottom: &[usize]) -> Vec<SetPartition> {
    if top.is_empty() {
        return vec![SetPartition::empty(k)];
    }
    let top_parts = set_partitions(top);
    let bottom_parts = set_partitions(bottom);
    let mut out = Vec::new();
    for tp in &top_parts {
        for bp in bottom_parts.iter().filter(|bp| bp.len() == tp.len()) {
            for perm in permutations(tp.len()) {
                let blocks = tp
                    .iter()
                    .zip(&perm)
                    .map(|(t, &j)| {
                        t.iter()
                            .map(|&i| BoundaryPoint::top(i))
                            .chain(bp[j].iter().map(|&i| BoundaryPoint::bottom(i)))
                            .collect()
                    })
                    .collect();
                out.push(SetPartition::from_blocks_unchecked(k, blocks));
            }
        }
    }
    out
}

/// Expected `|IS_n| = Σ_r C(n,r)² r!`.
pub fn is_order(n: usize) -> u128 {
    use crate::combinatorics::{binomial, factorial};
    (0..=n).map(|r| binomial(n, r).pow(2) * factorial(r)).sum()
}

/// Expected `|I*_k| = Σ_m S(k,m)² m!`.
pub fn istar_order(k: usize) -> u128 {
    use crate::combinatorics::{factorial, stirling2};
    (1..=k).map(|m| stirling2(k, m).pow(2) * factorial(m)).sum()
}

/// Expected `|PI*_k|`, summing over the top and bottom domain sizes.
pub fn pistar_order(k: usize) -> u128 {
    use crate::combinatorics::{binomial, factorial, stirling2};
    let mut total = 0;
    for a in 0..=k {
        for b in 0..=k {
            for m in 0..=a.min(b) {
                total += binomial(k, a)
                    * binomial(k, b)
                    * stirling2(a, m)
                    * stirling2(b, m)
                    * factorial(m);
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_partition;

    fn p(text: &str, k: usize) -> SetPartition {
        parse_partition(text, k).unwrap()
    }

    fn top(i: usize) -> BoundaryPoint {
        BoundaryPoint::top(i)
    }

    fn bot(i: usize) -> BoundaryPoint {
        BoundaryPoint::bottom(i)
    }

    #[test]
    fn canonical_block_order() {
        let a = SetPartition::new(2, vec![vec![bot(1), top(1)], vec![top(2), bot(2)]]).unwrap();
        assert_eq!(a.blocks(), &[vec![top(1), bot(1)], vec![top(2), bot(2)]]);
        let b = SetPartition::new(2, vec![vec![top(2), bot(1)], vec![top(1), bot(2)]]).unwrap();
        assert_eq!(b.to_string(), "{1,2'}|{2,1'}");
        let e = SetPartition::new(2, Vec::<Vec<BoundaryPoint>>::new()).unwrap();
        assert!(e.is_empty());
        assert_eq!(e.to_string(), "{}");
    }

    #[test]
    fn canonicalize_rejects_bad_input() {
        assert_eq!(
            SetPartition::new(2, vec![vec![top(3)]]),
            Err(Error::PointOutOfRange {
                point: "3".into(),
                k: 2
            })
        );
        assert_eq!(
            SetPartition::new(2, vec![vec![top(1)], vec![top(1), bot(1)]]),
            Err(Error::DuplicatePoint("1".into()))
        );
        assert_eq!(
            SetPartition::new(2, vec![vec![top(1)], vec![]]),
            Err(Error::EmptyBlock)
        );
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let a = p("{2',3}|{1',1,2}|{3'}", 3);
        let again = SetPartition::new(3, a.blocks().to_vec()).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn family_predicates() {
        assert!(is_dual_element(&p("{1,1'}|{2,2'}", 2)));
        assert!(!is_dual_element(&p("{1,2}|{1',2'}", 2)));
        assert!(!is_dual_element(&p("{1,1'}", 2)));
        assert!(is_partial_dual_element(&p("{1,1'}", 2)));
        assert!(is_partial_dual_element(&SetPartition::empty(2)));
        assert!(!is_partial_dual_element(&p("{1,2}", 2)));
    }

    #[test]
    fn coarser_examples() {
        let id = SetPartition::identity(2);
        let full = p("{1,2,1',2'}", 2);
        assert!(coarser_leq(&id, &full));
        assert!(coarser_leq(&id, &id));
        assert!(!coarser_leq(&p("{1,1'}", 2), &full));
        assert!(!coarser_leq(&full, &id));
    }

    #[test]
    fn partial_coarser_allows_dropping_blocks() {
        let id = SetPartition::identity(2);
        assert!(partial_coarser_leq(&id, &p("{1,1'}", 2)));
        assert!(partial_coarser_leq(&id, &SetPartition::empty(2)));
        assert!(partial_coarser_leq(&id, &p("{1,2,1',2'}", 2)));
        assert!(!partial_coarser_leq(&p("{1,1'}", 2), &p("{1,2,1',2'}", 2)));
        assert!(!partial_coarser_leq(&p("{1,2,1',2'}", 2), &p("{1,1'}", 2)));
    }

    #[test]
    fn subblock_examples() {
        let id = SetPartition::identity(2);
        assert!(subblocks_leq(&p("{1,1'}", 2), &id));
        assert!(subblocks_leq(&SetPartition::empty(2), &id));
        assert!(!subblocks_leq(&p("{1,2,1',2'}", 2), &id));
    }

    #[test]
    fn block_count_examples() {
        assert!(block_count_at_most(&p("{1,2,1',2'}", 2), 1));
        assert!(!block_count_at_most(&SetPartition::identity(2), 1));
        assert!(block_count_at_most(&p("{1,1'}", 2), 3));
        assert!(!block_count_at_most(&p("{1,1'}", 2), 2));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_is(1).unwrap().len(), 2);
        assert_eq!(enumerate_is(2).unwrap().len(), 7);
        assert_eq!(enumerate_is(3).unwrap().len(), 34);
        assert_eq!(enumerate_istar(1).unwrap().len(), 1);
        assert_eq!(enumerate_istar(2).unwrap().len(), 3);
        assert_eq!(enumerate_istar(3).unwrap().len(), 25);
        assert_eq!(enumerate_pistar(1).unwrap().len(), 2);
        assert_eq!(enumerate_pistar(2).unwrap().len(), 12);
        for n in 1..=5 {
            assert_eq!(enumerate_is(n).unwrap().len() as u128, is_order(n));
        }
        for k in 1..=4 {
            assert_eq!(enumerate_istar(k).unwrap().len() as u128, istar_order(k));
            assert_eq!(enumerate_pistar(k).unwrap().len() as u128, pistar_order(k));
        }
        let bell = [1, 2, 15, 203, 4140];
        for k in 1..=4 {
            assert_eq!(enumerate_composition(k).unwrap().len(), bell[k]);
        }
    }

    #[test]
    fn enumeration_guards() {
        assert!(matches!(enumerate_is(7), Err(Error::Guard { .. })));
        assert!(matches!(enumerate_istar(6), Err(Error::Guard { .. })));
        assert!(matches!(enumerate_pistar(5), Err(Error::Guard { .. })));
        assert_eq!(enumerate_is(0), Err(Error::ZeroSize));
    }

    #[test]
    fn completion_adds_singletons() {
        let c = p("{1,1'}", 2).completed();
        assert_eq!(c.to_string(), "{1,1'}|{2}|{2'}");
        assert!(c.is_total());
    }
}
