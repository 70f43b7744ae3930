//! Exact integer linear algebra over lattices.
//!
//! Everything here runs on arbitrary-precision integers: Smith normal form
//! with explicit unimodular transforms, cokernels presented as finite abelian
//! groups with projection maps, primitivization, saturated spans, and lattice
//! indices. These are the primitives the polyhedral and group-theoretic
//! layers are built on.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ratio;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("zero vector has no direction")]
    ZeroVector,
    #[error("not a lattice of full rank in span")]
    DependentVectors,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A point of a lattice `Z^d`, stored as exact integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntVector {
    entries: Vec<BigInt>,
}

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        IntVector {
            entries: vec![BigInt::zero(); dim],
        }
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector {
            entries: entries.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Standard basis vector `e_i` in `Z^dim`.
    pub fn standard_basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &BigInt {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> IntVector {
        IntVector::new(self.entries.iter().map(|a| a * c).collect())
    }

    /// Greatest common divisor of the entries (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for e in &self.entries {
            g = g.gcd(e);
        }
        g
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.entries
            .iter()
            .map(|e| BigRational::from_integer(e.clone()))
            .collect()
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "]")
    }
}

/// A dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<IntVector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.dim());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.dim(), c, "ragged rows");
            for j in 0..c {
                m.set(i, j, row.get(j).clone());
            }
        }
        m
    }

    pub fn from_cols(dim: usize, cols: &[IntVector]) -> Self {
        let mut m = Self::zeros(dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.dim(), dim, "ragged columns");
            for i in 0..dim {
                m.set(i, j, col.get(i).clone());
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| IntVector::from_i64(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector::new((0..self.cols).map(|j| self.at(i, j).clone()).collect())
    }

    pub fn col(&self, j: usize) -> IntVector {
        IntVector::new((0..self.rows).map(|i| self.at(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<IntVector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.at(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.at(i, k) * other.at(k, j);
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &IntVector) -> IntVector {
        assert_eq!(self.cols, v.dim(), "shape mismatch in matrix-vector product");
        IntVector::new(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| self.at(i, j) * v.get(j))
                        .sum::<BigInt>()
                })
                .collect(),
        )
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i == j || self.at(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.at(i, i).clone())
            .collect()
    }

    /// Product of the Smith diagonal, i.e. the absolute determinant for a
    /// square matrix (zero when singular).
    pub fn abs_det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return BigInt::one();
        }
        let snf = smith_normal_form(self);
        let mut p = BigInt::one();
        for d in snf.s.diagonal() {
            p *= d;
        }
        p
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.abs_det().is_one()
    }

    /// Inverse of a unimodular integer matrix; `None` when the matrix is not
    /// square or not invertible over the integers.
    pub fn inverse_unimodular(&self) -> Option<IntMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let rat: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(self.at(i, j).clone()))
                    .collect()
            })
            .collect();
        let inv = ratio::invert(&rat)?;
        let mut out = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if !inv[i][j].is_integer() {
                    return None;
                }
                out.set(i, j, inv[i][j].to_integer());
            }
        }
        Some(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Smith decomposition `U * A * V = S` with `U`, `V` unimodular and `S`
/// diagonal, nonnegative, each entry dividing the next nonzero one.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.s.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let x = m.at(a, j).clone();
        let y = m.at(b, j).clone();
        m.set(a, j, y);
        m.set(b, j, x);
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m.at(i, a).clone();
        let y = m.at(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

/// row[a] -= q * row[b]
fn row_sub(m: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for j in 0..m.cols() {
        let delta = q * m.at(b, j);
        let v = m.at(a, j) - delta;
        m.set(a, j, v);
    }
}

/// col[a] -= q * col[b]
fn col_sub(m: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for i in 0..m.rows() {
        let delta = q * m.at(i, b);
        let v = m.at(i, a) - delta;
        m.set(i, a, v);
    }
}

/// col[a] += col[b]
fn col_add(m: &mut IntMatrix, a: usize, b: usize) {
    for i in 0..m.rows() {
        let v = m.at(i, a) + m.at(i, b);
        m.set(i, a, v);
    }
}

fn negate_row(m: &mut IntMatrix, a: usize) {
    for j in 0..m.cols() {
        let v = -m.at(a, j);
        m.set(a, j, v);
    }
}

/// Computes the Smith normal form of any integer matrix, tracking the
/// unimodular transforms so quotient projections stay constructive.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let rows = a.rows();
    let cols = a.cols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let mut t = 0;
    while t < rows && t < cols {
        // Pick the nonzero entry of smallest magnitude in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !s.at(i, j).is_zero() {
                    match pivot {
                        Some((pi, pj)) if s.at(pi, pj).abs() <= s.at(i, j).abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break; // trailing block is zero
        };
        swap_rows(&mut s, t, pi);
        swap_rows(&mut u, t, pi);
        swap_cols(&mut s, t, pj);
        swap_cols(&mut v, t, pj);

        loop {
            // Clear the pivot column by Euclidean steps.
            let mut dirty = false;
            for i in t + 1..rows {
                if !s.at(i, t).is_zero() {
                    let q = s.at(i, t) / s.at(t, t);
                    row_sub(&mut s, i, t, &q);
                    row_sub(&mut u, i, t, &q);
                    if !s.at(i, t).is_zero() {
                        swap_rows(&mut s, i, t);
                        swap_rows(&mut u, i, t);
                        dirty = true;
                    }
                }
            }
            // Clear the pivot row.
            for j in t + 1..cols {
                if !s.at(t, j).is_zero() {
                    let q = s.at(t, j) / s.at(t, t);
                    col_sub(&mut s, j, t, &q);
                    col_sub(&mut v, j, t, &q);
                    if !s.at(t, j).is_zero() {
                        swap_cols(&mut s, j, t);
                        swap_cols(&mut v, j, t);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            if (t + 1..rows).any(|i| !s.at(i, t).is_zero())
                || (t + 1..cols).any(|j| !s.at(t, j).is_zero())
            {
                continue;
            }
            // Enforce that the pivot divides the whole trailing block, so the
            // diagonal comes out in divisibility order.
            let mut bad: Option<usize> = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !s.at(i, j).mod_floor(s.at(t, t)).is_zero() {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => {
                    // Fold the offending row into the pivot row and repeat.
                    for j in 0..cols {
                        let w = s.at(t, j) + s.at(i, j);
                        s.set(t, j, w);
                    }
                    for j in 0..rows {
                        let w = u.at(t, j) + u.at(i, j);
                        u.set(t, j, w);
                    }
                }
                None => break,
            }
        }

        if s.at(t, t).is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }

    SmithDecomposition { u, s, v }
}

/// Row-style Hermite normal form of the lattice spanned by the rows.
///
/// The result is the unique echelon basis with positive pivots and entries
/// above each pivot reduced into `[0, pivot)`; zero rows are dropped.
pub fn row_hermite_basis(rows: Vec<IntVector>) -> Vec<IntVector> {
    if rows.is_empty() {
        return rows;
    }
    let mut m = IntMatrix::from_rows(rows);
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut pivot_row = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        // Euclidean reduction within this column, below pivot_row.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..nrows {
                if !m.at(i, col).is_zero() {
                    match best {
                        Some(b) if m.at(b, col).abs() <= m.at(i, col).abs() => {}
                        _ => best = Some(i),
                    }
                }
            }
            let Some(b) = best else { break };
            swap_rows(&mut m, pivot_row, b);
            let mut reduced = true;
            for i in pivot_row + 1..nrows {
                if !m.at(i, col).is_zero() {
                    let q = m.at(i, col) / m.at(pivot_row, col);
                    row_sub(&mut m, i, pivot_row, &q);
                    if !m.at(i, col).is_zero() {
                        reduced = false;
                    }
                }
            }
            if reduced {
                break;
            }
        }
        if m.at(pivot_row, col).is_zero() {
            continue;
        }
        if m.at(pivot_row, col).is_negative() {
            negate_row(&mut m, pivot_row);
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    // Reduce entries above each pivot into the canonical range.
    for &(r, c) in &pivots {
        for i in 0..r {
            if !m.at(i, c).is_zero() {
                let q = m.at(i, c).div_floor(m.at(r, c));
                row_sub(&mut m, i, r, &q);
            }
        }
    }
    (0..pivot_row).map(|i| m.row(i)).collect()
}

/// An element of a finitely generated abelian group, free coordinates first,
/// then torsion residues in their canonical ranges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl GroupElement {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|x| x.is_zero()) && self.torsion.iter().all(|x| x.is_zero())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .free
            .iter()
            .chain(self.torsion.iter())
            .map(|x| x.to_string())
            .collect();
        match parts.len() {
            0 => write!(f, "0"),
            1 => write!(f, "{}", parts[0]),
            _ => write!(f, "({})", parts.join(", ")),
        }
    }
}

/// A finitely generated abelian group `Z^free_rank + Z/w_1 + ... + Z/w_k`
/// with `w_1 | w_2 | ... | w_k`, together with the projection from the
/// ambient lattice it was presented on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAbGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
    projection: IntMatrix,
}

impl FinAbGroup {
    pub fn trivial(ambient: usize) -> Self {
        FinAbGroup {
            free_rank: 0,
            invariant_factors: Vec::new(),
            projection: IntMatrix::zeros(0, ambient),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    /// Projection from ambient coordinates to free coordinates followed by
    /// torsion residues (row order matches `free_rank` then factors).
    pub fn projection(&self) -> &IntMatrix {
        &self.projection
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order; `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut p = BigInt::one();
        for w in &self.invariant_factors {
            p *= w;
        }
        Some(p)
    }

    /// Abstract isomorphism type comparison.
    pub fn same_type(&self, other: &FinAbGroup) -> bool {
        self.free_rank == other.free_rank && self.invariant_factors == other.invariant_factors
    }

    /// Image of an ambient lattice point in the quotient.
    pub fn project(&self, v: &IntVector) -> GroupElement {
        assert_eq!(v.dim(), self.projection.cols(), "ambient dimension mismatch");
        let raw = self.projection.mul_vec(v);
        let free = raw.entries()[..self.free_rank].to_vec();
        let torsion = raw.entries()[self.free_rank..]
            .iter()
            .zip(&self.invariant_factors)
            .map(|(x, w)| x.mod_floor(w))
            .collect();
        GroupElement { free, torsion }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for w in &self.invariant_factors {
            parts.push(format!("Z/{}", w));
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        let order = match self.order() {
            Some(n) => n.to_string(),
            None => "infinite".to_string(),
        };
        write!(f, "{} (order {})", parts.join(" x "), order)
    }
}

/// Largest torsion order for which the projection gauge is normalized by
/// scanning the unit group. Larger factors keep the raw (still
/// deterministic) Smith transform rows.
const UNIT_NORMAL_BOUND: u32 = 4096;

/// Quotient of `Z^rows(a)` by the column span of `a`, with a constructive
/// projection onto free coordinates and torsion residues.
pub fn cokernel(a: &IntMatrix) -> FinAbGroup {
    let ambient = a.rows();
    let snf = smith_normal_form(a);
    let diag = snf.s.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();

    let mut torsion: Vec<(BigInt, IntVector)> = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        if !d.is_zero() && !d.is_one() {
            let row = snf.u.row(i);
            torsion.push((d.clone(), canonical_torsion_row(row, d)));
        }
    }
    // Rows belonging to equal factors may be listed in any order; sort them
    // so the presentation is canonical.
    torsion.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));

    let mut free_rows: Vec<IntVector> = Vec::new();
    for i in rank..ambient {
        let mut row = snf.u.row(i);
        if let Some(first) = row.entries().iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                row = row.scale(&BigInt::from(-1));
            }
        }
        free_rows.push(row);
    }

    let free_rank = free_rows.len();
    let factors: Vec<BigInt> = torsion.iter().map(|(w, _)| w.clone()).collect();
    let mut rows = free_rows;
    rows.extend(torsion.into_iter().map(|(_, r)| r));
    let projection = if rows.is_empty() {
        IntMatrix::zeros(0, ambient)
    } else {
        IntMatrix::from_rows(rows)
    };
    FinAbGroup {
        free_rank,
        invariant_factors: factors,
        projection,
    }
}

/// Reduces a torsion projection row mod `w` and rescales it by the unit of
/// `Z/w` that makes it lexicographically least. Unit scaling is a group
/// automorphism, so this only fixes a gauge.
fn canonical_torsion_row(row: IntVector, w: &BigInt) -> IntVector {
    let reduced: Vec<BigInt> = row.entries().iter().map(|x| x.mod_floor(w)).collect();
    let small = match u32::try_from(w) {
        Ok(n) if n <= UNIT_NORMAL_BOUND => n,
        _ => return IntVector::new(reduced),
    };
    let mut best = reduced.clone();
    for u in 2..small {
        let unit = BigInt::from(u);
        if !unit.gcd(w).is_one() {
            continue;
        }
        let cand: Vec<BigInt> = reduced.iter().map(|x| (x * &unit).mod_floor(w)).collect();
        if cand < best {
            best = cand;
        }
    }
    IntVector::new(best)
}

/// Divides a nonzero vector by the gcd of its entries.
pub fn primitive_vector(v: &IntVector) -> Result<IntVector, LatticeError> {
    if v.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let g = v.content();
    Ok(IntVector::new(v.entries().iter().map(|e| e / &g).collect()))
}

/// Canonical basis of the saturation `Z^d ∩ span_Q(vectors)`.
pub fn saturate_span(vectors: &[IntVector], rank: usize) -> Vec<IntVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    for v in vectors {
        assert_eq!(v.dim(), rank, "vector outside the ambient lattice");
    }
    let a = IntMatrix::from_cols(rank, vectors);
    let snf = smith_normal_form(&a);
    let r = snf.rank();
    let u_inv = snf
        .u
        .inverse_unimodular()
        .expect("Smith transform is unimodular");
    let cols: Vec<IntVector> = (0..r).map(|j| u_inv.col(j)).collect();
    row_hermite_basis(cols)
}

/// Index of the subgroup generated by `vectors` inside the saturation of
/// their span; equals the absolute determinant for a square system.
pub fn lattice_index(vectors: &[IntVector]) -> Result<BigInt, LatticeError> {
    if vectors.is_empty() {
        return Ok(BigInt::one());
    }
    let rank = vectors[0].dim();
    let basis = saturate_span(vectors, rank);
    if basis.len() != vectors.len() {
        return Err(LatticeError::DependentVectors);
    }
    let coords: Vec<IntVector> = vectors
        .iter()
        .map(|v| {
            in_basis_coordinates(&basis, v)
                .expect("lattice point of the span has integral coordinates in the saturation")
        })
        .collect();
    let c = IntMatrix::from_cols(basis.len(), &coords);
    let det = c.abs_det();
    if det.is_zero() {
        return Err(LatticeError::DependentVectors);
    }
    Ok(det)
}

/// Integral coordinates of `v` in the given independent basis, when they
/// exist.
pub fn in_basis_coordinates(basis: &[IntVector], v: &IntVector) -> Option<IntVector> {
    if basis.is_empty() {
        return if v.is_zero() {
            Some(IntVector::zeros(0))
        } else {
            None
        };
    }
    let dim = basis[0].dim();
    let a: Vec<Vec<BigRational>> = (0..dim)
        .map(|i| {
            basis
                .iter()
                .map(|b| BigRational::from_integer(b.get(i).clone()))
                .collect()
        })
        .collect();
    let b: Vec<BigRational> = v.to_rational();
    let sol = ratio::solve(&a, &b)?;
    let mut out = Vec::with_capacity(sol.len());
    for x in sol {
        if !x.is_integer() {
            return None;
        }
        out.push(x.to_integer());
    }
    Some(IntVector::new(out))
}
