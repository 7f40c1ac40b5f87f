//! Exact dense linear algebra.
//!
//! Two elimination engines live here. `Mat<F>` works over any exact field
//! (rationals, Gaussian rationals) with plain Gauss–Jordan reduction and is
//! used for kernels, solves and echelon bases. Rank and determinant queries
//! over ℚ additionally go through fraction-free (Bareiss) elimination on a
//! denominator-cleared integer matrix, which keeps intermediate entries as
//! minors of the input instead of letting fractions swell.

use crate::rational::Rational;
use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact field scalar. Blanket-implemented; `Rational` and
/// `GaussianRational` both qualify.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// Dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<F> {
    nrows: usize,
    ncols: usize,
    data: Vec<F>,
}

/// Result of Gauss–Jordan reduction.
pub struct Rref<F> {
    pub reduced: Mat<F>,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> Mat<F> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Mat {
            nrows,
            ncols,
            data: vec![F::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
        }
        Mat {
            nrows,
            ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: Vec<Vec<F>>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.ncols..(i + 1) * self.ncols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.nrows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        (0..self.nrows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Mat<F> {
        let mut m = Mat::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn matmul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let mut out: Mat<F> = Mat::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.ncols, v.len(), "dimension mismatch");
        (0..self.nrows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.ncols {
                    acc = acc + self.get(i, j).clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &F) -> Mat<F> {
        let mut m = self.clone();
        for v in &mut m.data {
            *v = v.clone() * c.clone();
        }
        m
    }

    pub fn add_mat(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut m = self.clone();
        for (a, b) in m.data.iter_mut().zip(&other.data) {
            *a = a.clone() + b.clone();
        }
        m
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Reduced row-echelon form with unit pivots.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r >= m.nrows {
                break;
            }
            let Some(p) = (r..m.nrows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.ncols {
                    m.data.swap(p * m.ncols + j, r * m.ncols + j);
                }
            }
            let inv = F::one() / m.get(r, c).clone();
            for j in c..m.ncols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.nrows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c).clone();
                    for j in c..m.ncols {
                        let v = m.get(i, j).clone() - f.clone() * m.get(r, j).clone();
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel, one vector per free column, with the free
    /// coordinate set to 1. Deterministic order (ascending free column).
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let Rref { reduced, pivots } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.ncols];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![F::zero(); self.ncols];
            vec[free] = F::one();
            for (c, slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    vec[c] = F::zero() - reduced.get(*row, free).clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Particular solution of `self * x = b` with all free variables set to
    /// zero; `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.nrows, "dimension mismatch");
        let mut aug = Mat::zeros(self.nrows, self.ncols + 1);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.ncols, b[i].clone());
        }
        let Rref { reduced, pivots } = aug.rref();
        if pivots.contains(&self.ncols) {
            return None;
        }
        let mut x = vec![F::zero(); self.ncols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = reduced.get(row, self.ncols).clone();
        }
        Some(x)
    }

    /// Basis of the column space: the columns holding a pivot.
    pub fn column_space_basis(&self) -> Vec<Vec<F>> {
        let pivots = self.rref().pivots;
        pivots.into_iter().map(|c| self.col(c)).collect()
    }
}

/// Echelon basis of the row span: nonzero rows of the RREF. Canonical, so
/// two spans are equal iff their echelon bases are equal.
pub fn row_span_basis<F: Scalar>(rows: Vec<Vec<F>>) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_rows(rows);
    let Rref { reduced, pivots } = m.rref();
    (0..pivots.len()).map(|i| reduced.row(i)).collect()
}

fn clear_denominators(m: &Mat<Rational>) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut rows = Vec::with_capacity(m.nrows());
    let mut scales = Vec::with_capacity(m.nrows());
    for i in 0..m.nrows() {
        let mut lcm = BigInt::one();
        for j in 0..m.ncols() {
            lcm = lcm.lcm(m.get(i, j).denom());
        }
        let row: Vec<BigInt> = (0..m.ncols())
            .map(|j| {
                let r = m.get(i, j);
                r.numer() * (&lcm / r.denom())
            })
            .collect();
        rows.push(row);
        scales.push(lcm);
    }
    (rows, scales)
}

/// Fraction-free elimination on an integer matrix. Returns (rank, det-like
/// value of the leading square part, sign from row swaps). Entries stay
/// bounded by minors of the input (Bareiss pivoting with exact division).
fn bareiss(mut m: Vec<Vec<BigInt>>) -> (usize, BigInt, i32) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut last_pivot = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if p != row {
            m.swap(p, row);
            sign = -sign;
        }
        for i in row + 1..nrows {
            for j in col + 1..ncols {
                let t = &m[row][col] * &m[i][j] - &m[i][col] * &m[row][j];
                let (q, r) = t.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss exact division failed");
                m[i][j] = q;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        last_pivot = prev.clone();
        rank += 1;
        row += 1;
    }
    (rank, last_pivot, sign)
}

/// Exact rank via fraction-free elimination.
pub fn rank_bareiss(m: &Mat<Rational>) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    let (rows, _) = clear_denominators(m);
    bareiss(rows).0
}

/// Exact determinant of a square matrix via fraction-free elimination.
/// The empty 0×0 matrix has determinant 1.
pub fn det_bareiss(m: &Mat<Rational>) -> Rational {
    assert_eq!(m.nrows(), m.ncols(), "determinant of non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return Rational::one();
    }
    let (rows, scales) = clear_denominators(m);
    let (rank, pivot, sign) = bareiss(rows);
    if rank < n {
        return Rational::zero();
    }
    let mut denom = BigInt::one();
    for s in scales {
        denom *= s;
    }
    let mut det = Rational::new(pivot, denom);
    if sign < 0 {
        det = -det;
    }
    det
}

/// The `n` leading principal minors `det(m[..k][..k])`, `k = 1..=n`.
pub fn leading_principal_minors(m: &Mat<Rational>) -> Vec<Rational> {
    assert_eq!(m.nrows(), m.ncols());
    (1..=m.nrows())
        .map(|k| {
            let sub = Mat::from_rows(
                (0..k)
                    .map(|i| (0..k).map(|j| m.get(i, j).clone()).collect())
                    .collect(),
            );
            det_bareiss(&sub)
        })
        .collect()
}

/// All leading principal minors strictly positive (Sylvester criterion).
/// Returns `Err((k, minor))` with the first offending 1-based index.
pub fn positive_definite(m: &Mat<Rational>) -> Result<(), (usize, Rational)> {
    for (k, minor) in leading_principal_minors(m).into_iter().enumerate() {
        if !minor.is_positive() {
            return Err((k + 1, minor));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_rank_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(rank_bareiss(&a), 2);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        for k in &ker {
            assert!(a.apply(k).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);

        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[rat_int(1), rat_int(3)]).is_none());
    }

    #[test]
    fn determinant_matches_cofactor_oracle() {
        let a = m(&[&[2, 1, 0], &[1, 3, -1], &[0, -1, 4]]);
        // cofactor expansion by hand: 2*(12-1) - 1*(4-0) + 0 = 18
        assert_eq!(det_bareiss(&a), rat_int(18));
        assert_eq!(det_bareiss(&Mat::<Rational>::identity(0)), rat_int(1));
        let sing = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(det_bareiss(&sing), rat_int(0));
    }

    #[test]
    fn determinant_with_fractions() {
        let a = Mat::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ]);
        assert_eq!(det_bareiss(&a), rat(1, 10) - rat(1, 12));
    }

    #[test]
    fn sylvester_detects_first_bad_minor() {
        let pd = m(&[&[2, -1], &[-1, 2]]);
        assert!(positive_definite(&pd).is_ok());
        let not_pd = m(&[&[1, 2], &[2, 1]]);
        assert_eq!(not_pd.rank(), 2);
        let (k, minor) = positive_definite(&not_pd).unwrap_err();
        assert_eq!(k, 2);
        assert_eq!(minor, rat_int(-3));
    }

    #[test]
    fn row_span_is_canonical() {
        let b1 = row_span_basis(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(6)],
        ]);
        let b2 = row_span_basis(vec![vec![rat_int(-2), rat_int(-4)]]);
        assert_eq!(b1, b2);
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_ranks_agree(
            entries in proptest::collection::vec(-6i64..=6, 9)
        ) {
            let a = Mat::from_rows(
                entries.chunks(3).map(|c| c.iter().map(|&v| rat_int(v)).collect()).collect()
            );
            let r1 = a.rref().reduced;
            let r2 = r1.rref().reduced;
            prop_assert_eq!(&r1, &r2);
            prop_assert_eq!(a.rank(), rank_bareiss(&a));
            // rank-nullity
            prop_assert_eq!(a.rank() + a.kernel_basis().len(), 3);
        }

        #[test]
        fn bareiss_det_agrees_with_field_elimination(
            entries in proptest::collection::vec(-5i64..=5, 16)
        ) {
            let a = Mat::from_rows(
                entries.chunks(4).map(|c| c.iter().map(|&v| rat_int(v)).collect()).collect()
            );
            // independent route: triangularize over the field, multiply pivots
            let mut w = a.clone();
            let n = 4;
            let mut det = rat_int(1);
            'outer: for c in 0..n {
                let Some(p) = (c..n).find(|&i| !w.get(i, c).is_zero()) else {
                    det = rat_int(0);
                    break 'outer;
                };
                if p != c {
                    for j in 0..n {
                        let tmp = w.get(p, j).clone();
                        w.set(p, j, w.get(c, j).clone());
                        w.set(c, j, tmp);
                    }
                    det = -det;
                }
                det *= w.get(c, c).clone();
                for i in (c + 1)..n {
                    let f = w.get(i, c).clone() / w.get(c, c).clone();
                    for j in c..n {
                        let v = w.get(i, j).clone() - f.clone() * w.get(c, j).clone();
                        w.set(i, j, v);
                    }
                }
            }
            prop_assert_eq!(det_bareiss(&a), det);
        }
    }
}
