//! Exact sparse linear algebra over the rationals.
//!
//! Elimination runs on integer rows: every incoming row is scaled to a
//! primitive integer vector, and each elimination step is the fraction-free
//! update `r ← (a/g)·r − (b/g)·p` followed by division by the row content.
//! Rationals only reappear when a null-space basis is read off.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::Limits;

pub type Rational = BigRational;

/// A sparse matrix with exact rational entries. No zero is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for i in 0..d {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Rational)>,
    {
        let mut m = Self::zeros(rows, cols);
        for ((r, c), v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::Shape(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            m.add_to(r, c, v);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_to(&mut self, r: usize, c: usize, v: Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((r, c)).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (&(r, m), v) in &self.entries {
            for &(c, w) in &by_row[m] {
                out.add_to(r, c, v * w);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, factor: &Rational) -> ExactMatrix {
        if factor.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(&k, v)| (k, v * factor)).collect(),
        }
    }

    /// `self · other == other · self`.
    pub fn commutes_with(&self, other: &ExactMatrix) -> Result<bool> {
        Ok(self.mul(other)? == other.mul(self)?)
    }

    /// Row-major flattening: entry `(r, c)` becomes coordinate `r * cols + c`.
    pub fn vectorize(&self) -> Vec<(usize, Rational)> {
        self.entries
            .iter()
            .map(|(&(r, c), v)| (r * self.cols + c, v.clone()))
            .collect()
    }

    fn check_same_shape(&self, other: &ExactMatrix) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Whether every entry is 0 or 1 and every column has at most one entry.
    pub fn is_partial_permutation_column(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.entries
            .iter()
            .all(|(&(_, c), v)| v.is_one() && seen.insert(c))
    }
}

impl fmt::Display for ExactMatrix {
    /// Coordinate list: a `rows cols nnz` header, then one `row col value` per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.rows, self.cols, self.entries.len())?;
        for (&(r, c), v) in &self.entries {
            writeln!(f, "{r} {c} {v}")?;
        }
        Ok(())
    }
}

type IntRow = Vec<(usize, BigInt)>;

/// Scales a rational sparse vector to a primitive integer vector with a
/// positive leading entry. Returns `None` for the zero vector.
fn to_primitive(vector: &[(usize, Rational)]) -> Option<IntRow> {
    let mut items: Vec<&(usize, Rational)> = vector.iter().filter(|(_, v)| !v.is_zero()).collect();
    if items.is_empty() {
        return None;
    }
    items.sort_by_key(|(c, _)| *c);
    let lcm = items
        .iter()
        .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    let row: IntRow = items
        .into_iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    Some(make_primitive(row))
}

fn make_primitive(mut row: IntRow) -> IntRow {
    let content = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    let negate = row.first().is_some_and(|(_, v)| v.is_negative());
    if !content.is_one() || negate {
        let divisor = if negate { -content } else { content };
        for (_, v) in &mut row {
            *v = &*v / &divisor;
        }
    }
    row
}

/// `(a/g)·row − (b/g)·pivot`, where `b` is the entry of `row` and `a` the
/// entry of `pivot` at the pivot column.
fn eliminate(row: &IntRow, pivot: &IntRow, col: usize) -> IntRow {
    let a = &pivot[0].1;
    let b = &row
        .iter()
        .find(|(c, _)| *c == col)
        .expect("entry at pivot column")
        .1;
    let g = a.gcd(b);
    let (row_factor, pivot_factor) = (a / &g, b / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push((row[i].0, &row[i].1 * &row_factor));
            i += 1;
        } else if take_pivot {
            out.push((pivot[j].0, -(&pivot[j].1 * &pivot_factor)));
            j += 1;
        } else {
            let v = &row[i].1 * &row_factor - &pivot[j].1 * &pivot_factor;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    if out.is_empty() {
        out
    } else {
        make_primitive(out)
    }
}

/// Incrementally built row-echelon form; each stored row is primitive with
/// a positive leading entry, keyed by its leading column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    ncols: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: IntRow) -> IntRow {
        let mut from = 0;
        loop {
            let hit = row
                .iter()
                .map(|(c, _)| *c)
                .filter(|&c| c >= from)
                .find(|c| self.pivots.contains_key(c));
            match hit {
                None => return row,
                Some(col) => {
                    row = eliminate(&row, &self.pivots[&col], col);
                    from = col + 1;
                }
            }
        }
    }

    /// Adds a vector; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, vector: &[(usize, Rational)]) -> bool {
        match to_primitive(vector) {
            None => false,
            Some(row) => self.insert_int(row),
        }
    }

    fn insert_int(&mut self, row: IntRow) -> bool {
        let row = self.reduce(row);
        if row.is_empty() {
            return false;
        }
        let row = make_primitive(row);
        self.pivots.insert(row[0].0, row);
        true
    }

    pub fn contains(&self, vector: &[(usize, Rational)]) -> bool {
        match to_primitive(vector) {
            None => true,
            Some(row) => self.reduce(row).is_empty(),
        }
    }

    /// A basis of `{x : row · x = 0 for every stored row}`, one vector per
    /// free column, normalised to 1 at that column.
    pub fn null_space(&self) -> Vec<Vec<(usize, Rational)>> {
        // Back-substitute into reduced row-echelon form.
        let mut reduced: BTreeMap<usize, IntRow> = BTreeMap::new();
        for (&lead, row) in self.pivots.iter().rev() {
            let mut row = row.clone();
            let mut from = lead + 1;
            loop {
                let hit = row
                    .iter()
                    .map(|(c, _)| *c)
                    .filter(|&c| c >= from)
                    .find(|c| reduced.contains_key(c));
                match hit {
                    None => break,
                    Some(col) => {
                        row = eliminate(&row, &reduced[&col], col);
                        from = col + 1;
                    }
                }
            }
            reduced.insert(lead, row);
        }
        let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&lead, row) in &reduced {
            let a = &row[0].1;
            for (c, v) in &row[1..] {
                by_free
                    .entry(*c)
                    .or_default()
                    .push((lead, Rational::new(-v.clone(), a.clone())));
            }
        }
        (0..self.ncols)
            .filter(|c| !reduced.contains_key(c))
            .map(|free| {
                let mut v = by_free.remove(&free).unwrap_or_default();
                v.push((free, Rational::one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

/// Exact rank over the rationals.
pub fn rank(m: &ExactMatrix) -> usize {
    let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); m.rows];
    for (&(r, c), v) in &m.entries {
        rows[r].push((c, v.clone()));
    }
    let mut ech = Echelon::new(m.cols);
    for row in rows {
        ech.insert(&row);
    }
    ech.rank()
}

fn uniform_shape(mats: &[ExactMatrix]) -> Result<Option<(usize, usize)>> {
    let Some(first) = mats.first() else {
        return Ok(None);
    };
    for m in mats {
        first.check_same_shape(m)?;
    }
    Ok(Some((first.rows, first.cols)))
}

/// Dimension of the linear span of the matrices, viewed as vectors.
pub fn span_dimension(mats: &[ExactMatrix]) -> Result<usize> {
    Ok(span_echelon(mats)?.map_or(0, |e| e.rank()))
}

fn span_echelon(mats: &[ExactMatrix]) -> Result<Option<Echelon>> {
    let Some((r, c)) = uniform_shape(mats)? else {
        return Ok(None);
    };
    let mut ech = Echelon::new(r * c);
    for m in mats {
        ech.insert(&m.vectorize());
    }
    Ok(Some(ech))
}

/// Whether `target` lies in the span of `basis`.
pub fn in_span(target: &ExactMatrix, basis: &[ExactMatrix]) -> Result<bool> {
    match span_echelon(basis)? {
        None => Ok(target.is_zero()),
        Some(ech) => {
            target.check_same_shape(&basis[0])?;
            Ok(ech.contains(&target.vectorize()))
        }
    }
}

/// Membership of each target in the span of `basis`, sharing one elimination.
pub fn all_in_span(targets: &[ExactMatrix], basis: &[ExactMatrix]) -> Result<bool> {
    match span_echelon(basis)? {
        None => Ok(targets.iter().all(ExactMatrix::is_zero)),
        Some(ech) => {
            for t in targets {
                t.check_same_shape(&basis[0])?;
                if !ech.contains(&t.vectorize()) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

pub fn commutant_basis(generators: &[ExactMatrix], d: usize) -> Result<Vec<ExactMatrix>> {
    commutant_basis_with(generators, d, &Limits::default())
}

/// Basis of `{X : X·G = G·X for every generator G}`, read off the null space
/// of the stacked Sylvester system in the `d²` entries of `X`.
pub fn commutant_basis_with(
    generators: &[ExactMatrix],
    d: usize,
    limits: &Limits,
) -> Result<Vec<ExactMatrix>> {
    Limits::check("commutant unknowns d^2", d * d, limits.max_unknowns)?;
    for g in generators {
        if (g.rows, g.cols) != (d, d) {
            return Err(Error::Shape(format!(
                "generator is {}x{}, expected {d}x{d}",
                g.rows, g.cols
            )));
        }
    }
    let var = |r: usize, c: usize| r * d + c;
    let mut equations: BTreeSet<IntRow> = BTreeSet::new();
    for g in generators {
        let mut col_entries: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); d];
        let mut row_entries: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); d];
        for (&(r, c), v) in &g.entries {
            col_entries[c].push((r, v));
            row_entries[r].push((c, v));
        }
        for i in 0..d {
            for j in 0..d {
                // (XG)_{ij} - (GX)_{ij}
                let mut terms: BTreeMap<usize, Rational> = BTreeMap::new();
                for &(m, v) in &col_entries[j] {
                    *terms.entry(var(i, m)).or_insert_with(Rational::zero) += v;
                }
                for &(m, v) in &row_entries[i] {
                    *terms.entry(var(m, j)).or_insert_with(Rational::zero) -= v;
                }
                let terms: Vec<(usize, Rational)> = terms.into_iter().collect();
                if let Some(row) = to_primitive(&terms) {
                    equations.insert(row);
                }
            }
        }
    }
    let mut ech = Echelon::new(d * d);
    for row in equations {
        ech.insert_int(row);
    }
    ech.null_space()
        .into_iter()
        .map(|v| ExactMatrix::from_entries(d, d, v.into_iter().map(|(u, x)| ((u / d, u % d), x))))
        .collect()
}
