//! Exact linear algebra over the rationals.
//!
//! Everything here is dense and exact. Ambient dimensions in this crate stay
//! well below a few hundred, so row reduction on `BigRational` entries is
//! more than fast enough and avoids any question of numerical rank.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// The rational `num/den`. Panics when `den == 0`.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a scalar as `p` or `p/q`.
pub fn fmt_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ragged rows: row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
}

/// Dense row-major matrix of scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(fmt_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from row vectors, all of which must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinAlgError::Ragged { row: i, len: row.len(), expected: cols });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(cols, rows).expect("rows of equal length")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        if v.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.rows, found: v.len() });
        }
        let mut out = vec![Scalar::zero(); self.cols];
        for (r, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let b = self.get(r, c);
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Canonical reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> Rref {
        let mut rows = self.row_vecs();
        let pivots = reduce_rows(&mut rows, self.cols);
        rows.truncate(pivots.len());
        let matrix = Matrix::from_rows(self.cols, rows).expect("reduced rows keep their width");
        Rref { matrix, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit(n, r));
                row
            })
            .collect();
        let pivots = reduce_rows(&mut rows, 2 * n);
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let inv = rows.into_iter().map(|row| row[n..].to_vec()).collect();
        Some(Matrix::from_rows(n, inv).expect("square"))
    }

    /// Right null space `{ v : M v = 0 }`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, pivots } = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(r, free).clone();
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis).expect("kernel vectors have ambient length")
    }
}

/// Result of [`Matrix::rref`]: the nonzero rows and their pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Gauss-Jordan elimination in place. Returns the pivot columns; the first
/// `pivots.len()` rows hold the canonical RREF afterwards.
fn reduce_rows(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        if !inv.is_one() {
            for x in rows[next].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// A linear subspace of `Q^ambient`, stored by its canonical RREF basis.
///
/// Equality of two `Subspace` values is equality of sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let m = Matrix::from_rows(ambient, vectors)?;
        let Rref { matrix, pivots } = m.rref();
        Ok(Subspace { ambient, basis: matrix, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Reduces `v` against the canonical basis. The remainder is zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        if v.len() != self.ambient {
            return Err(LinAlgError::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinAlgError> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        // canonical basis has identity columns at the pivots
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        self.check(other)?;
        for r in 0..other.dim() {
            if !self.contains(other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        let Rref { matrix, pivots } = stacked.rref();
        Ok(Subspace { ambient: self.ambient, basis: matrix, pivots })
    }

    /// Intersection, from the kernel of `[A^T | -B^T]`: a kernel vector
    /// `(s, t)` gives `sum s_i a_i = sum t_j b_j`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check(other)?;
        let (da, db) = (self.dim(), other.dim());
        let mut system = Matrix::zeros(self.ambient, da + db);
        for c in 0..self.ambient {
            for i in 0..da {
                system.set(c, i, self.basis.get(i, c).clone());
            }
            for j in 0..db {
                system.set(c, da + j, -other.basis.get(j, c).clone());
            }
        }
        let ker = system.kernel();
        let vectors = ker
            .basis_vecs()
            .into_iter()
            .map(|k| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (i, s) in k[..da].iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                        *x += s * b;
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, vectors)
    }

    /// Greedy extension: walks `candidates` in order and keeps each one that
    /// is independent of this subspace plus the candidates already kept.
    /// Returns the indices of the kept candidates.
    pub fn greedy_extension(&self, candidates: &[Vec<Scalar>]) -> Result<Vec<usize>, LinAlgError> {
        let mut acc = self.clone();
        let mut kept = Vec::new();
        for (i, c) in candidates.iter().enumerate() {
            if !acc.contains(c)? {
                acc = acc.sum(&Subspace::span(self.ambient, vec![c.clone()])?)?;
                kept.push(i);
            }
        }
        Ok(kept)
    }

    /// Standard basis indices completing this subspace to the whole space,
    /// lowest index first.
    pub fn standard_complement(&self) -> Vec<usize> {
        let units: Vec<Vec<Scalar>> = (0..self.ambient).map(|i| unit(self.ambient, i)).collect();
        self.greedy_extension(&units).expect("unit vectors have ambient length")
    }
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Normalises a nonzero vector up to scaling: the first nonzero entry becomes
/// positive and an integer vector is divided by the gcd of its entries.
pub fn projective_normal(v: &[Scalar]) -> Vec<Scalar> {
    let Some(lead) = v.iter().find(|x| !x.is_zero()) else {
        return v.to_vec();
    };
    let sign = if lead.is_negative() { -Scalar::one() } else { Scalar::one() };
    let mut lcm_den = BigInt::one();
    for x in v {
        lcm_den = num_integer::lcm(lcm_den, x.denom().clone());
    }
    let scaled: Vec<BigInt> =
        v.iter().map(|x| (x * Scalar::from_integer(lcm_den.clone())).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |g, x| num_integer::gcd(g, x.clone()));
    scaled.into_iter().map(|x| Scalar::from_integer(x / &g) * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn proportional_rows_have_rank_one() {
        let r = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.matrix, q(&[&[1, 2]]));
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = Matrix::identity(3);
        let r = id.rref();
        assert_eq!(r.rank(), 3);
        assert_eq!(r.matrix, id);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        assert_eq!(Matrix::zeros(2, 3).kernel(), Subspace::full(3));
        assert!(Matrix::identity(2).kernel().is_zero());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = q(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 0]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 4 - m.rank());
        for v in k.basis_vecs() {
            assert!(is_zero_vec(&m.transpose().apply_row(&v).unwrap()));
        }
    }

    #[test]
    fn sum_and_intersection_of_coordinate_planes() {
        let e = |i| Subspace::span(3, vec![unit(3, i)]).unwrap();
        assert_eq!(e(0).sum(&e(1)).unwrap().dim(), 2);
        let a = e(0).sum(&e(1)).unwrap();
        let b = e(1).sum(&e(2)).unwrap();
        assert_eq!(a.intersection(&b).unwrap(), e(1));
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(LinAlgError::DimensionMismatch { .. })));
        assert!(a.intersection(&b).is_err());
        assert!(a.contains(&[int(1)]).is_err());
    }

    #[test]
    fn standard_complement_is_lowest_index_first() {
        // span{e0 + e1}: e0 is independent, e1 is then redundant
        let s = Subspace::span(3, vec![vec![int(1), int(1), int(0)]]).unwrap();
        assert_eq!(s.standard_complement(), vec![0, 2]);
        assert_eq!(Subspace::zero(2).standard_complement(), vec![0, 1]);
        assert!(Subspace::full(2).standard_complement().is_empty());
    }

    #[test]
    fn coordinates_in_canonical_basis() {
        let s = Subspace::span(3, vec![vec![int(1), int(0), int(2)], vec![int(0), int(1), int(1)]])
            .unwrap();
        let v = vec![int(3), int(-1), int(5)];
        assert_eq!(s.coordinates(&v).unwrap(), Some(vec![int(3), int(-1)]));
        assert_eq!(s.coordinates(&[int(0), int(0), int(1)]).unwrap(), None);
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1, 0], &[0, 1, 0], &[1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::zeros(0, 0).inverse(), Some(Matrix::zeros(0, 0)));
    }

    #[test]
    fn projective_normal_form() {
        let v = vec![int(0), ratio(-1, 2), int(3)];
        assert_eq!(projective_normal(&v), vec![int(0), int(1), int(-6)]);
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec((-3i64..=3, 1i64..=3), rows * cols).prop_map(move |xs| {
            let data: Vec<Vec<Scalar>> = xs
                .chunks(cols)
                .map(|c| c.iter().map(|&(n, d)| ratio(n, d)).collect())
                .collect();
            Matrix::from_rows(cols, data).unwrap()
        })
    }

    fn subspace_in(n: usize) -> impl Strategy<Value = Subspace> {
        (0usize..=n).prop_flat_map(move |k| {
            small_matrix(k, n).prop_map(move |m| Subspace::span(n, m.row_vecs()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| small_matrix(r, c))) {
            let once = m.rref().matrix;
            prop_assert_eq!(once.rref().matrix, once);
        }

        #[test]
        fn rank_equals_transpose_rank(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| small_matrix(r, c))) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| small_matrix(r, c))) {
            prop_assert_eq!(m.kernel().dim() + m.rank(), m.cols());
        }

        #[test]
        fn modular_law(a in subspace_in(4), b in subspace_in(4)) {
            let s = a.sum(&b).unwrap();
            let i = a.intersection(&b).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(a.contains_subspace(&i).unwrap());
            prop_assert!(b.contains_subspace(&i).unwrap());
            prop_assert!(s.contains_subspace(&a).unwrap());
        }
    }
}
