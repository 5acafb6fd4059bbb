//! Dense exact matrices and the linear algebra the basis theorems run on:
//! rank, span membership with certified answers, and exact solves.
//!
//! Elimination uses the first nonzero entry of each column as pivot; with
//! exact arithmetic there is no stability concern, so no magnitude heuristics.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::traits::Zero;
use thiserror::Error;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A rows x cols matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Build from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::DimensionMismatch(
                "rows have unequal lengths".into(),
            ));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(values: &[F]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    /// Row-major flattening; the coordinate vector used by span computations.
    pub fn flatten(&self) -> Vec<F> {
        self.entries.clone()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, k: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.clone() * k.clone()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square(), "matrix power requires a square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pivot) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = m[(rank, col)].try_inv().expect("pivot is nonzero");
            for r in rank + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * inv.clone();
                for c in col..m.cols {
                    let sub = m[(rank, c)].clone() * factor.clone();
                    m[(r, c)] = m[(r, c)].clone() - sub;
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.entries[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.entries[r * self.cols + c]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                acc = acc + self[(r, k)].clone() * rhs[(k, c)].clone();
            }
            acc
        })
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + rhs[(r, c)].clone()
        })
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() - rhs[(r, c)].clone()
        })
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.entries[r * self.cols + c].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// ---- Span computations on coordinate vectors ----

/// Rank of a set of coordinate vectors.
pub fn rank_of_vectors<F: Field>(vectors: &[Vec<F>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec())
        .expect("vectors share one dimension")
        .rank()
}

/// Express `target` in the span of `generators`, exactly.
///
/// Returns coefficients `c` with `sum c_k * generators_k == target` when the
/// target lies in the span, and `None` otherwise (certified by the rank of the
/// augmented system staying strictly larger).
pub fn solve_in_span<F: Field>(
    generators: &[Vec<F>],
    target: &[F],
) -> Result<Option<Vec<F>>, MatrixError> {
    let dim = target.len();
    if generators.iter().any(|g| g.len() != dim) {
        return Err(MatrixError::DimensionMismatch(format!(
            "generators must have dimension {dim}"
        )));
    }
    let ngen = generators.len();
    // Columns are the generators, last column the target.
    let mut m = Matrix::from_fn(dim, ngen + 1, |r, c| {
        if c < ngen {
            generators[c][r].clone()
        } else {
            target[r].clone()
        }
    });

    // Gauss-Jordan, recording the pivot column of each pivot row.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prow = 0;
    for col in 0..ngen {
        let Some(pivot) = (prow..dim).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(prow, pivot);
        let inv = m[(prow, col)].try_inv().expect("pivot is nonzero");
        for c in col..=ngen {
            m[(prow, c)] = m[(prow, c)].clone() * inv.clone();
        }
        for r in 0..dim {
            if r != prow && !m[(r, col)].is_zero() {
                let factor = m[(r, col)].clone();
                for c in col..=ngen {
                    let sub = m[(prow, c)].clone() * factor.clone();
                    m[(r, c)] = m[(r, c)].clone() - sub;
                }
            }
        }
        pivot_cols.push(col);
        prow += 1;
        if prow == dim {
            break;
        }
    }

    // Inconsistent iff some row is zero on all generator columns but not on
    // the target column.
    for r in prow..dim {
        if !m[(r, ngen)].is_zero() {
            return Ok(None);
        }
    }
    let mut coeffs = vec![F::zero(); ngen];
    for (row, &col) in pivot_cols.iter().enumerate() {
        coeffs[col] = m[(row, ngen)].clone();
    }
    Ok(Some(coeffs))
}

/// True iff `target` lies in the span of `generators`.
pub fn in_span<F: Field>(generators: &[Vec<F>], target: &[F]) -> Result<bool, MatrixError> {
    Ok(solve_in_span(generators, target)?.is_some())
}

/// Incremental rank tracker: vectors are absorbed one at a time into a
/// row-echelon pool, so span growth is detected without recomputing ranks
/// from scratch.
#[derive(Debug, Clone)]
pub struct SpanSieve<F> {
    dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> SpanSieve<F> {
    pub fn new(dim: usize) -> Self {
        SpanSieve {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the pool; keep it if independent. Returns true
    /// when the rank grew.
    pub fn absorb(&mut self, mut v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in p..self.dim {
                    let sub = row[c].clone() * factor.clone();
                    v[c] = v[c].clone() - sub;
                }
            }
        }
        let Some(pivot) = (0..self.dim).find(|&c| !v[c].is_zero()) else {
            return false;
        };
        let inv = v[pivot].try_inv().expect("pivot is nonzero");
        for c in pivot..self.dim {
            v[c] = v[c].clone() * inv.clone();
        }
        self.rows.push(v);
        self.pivots.push(pivot);
        true
    }

    /// True iff `v` already lies in the absorbed span.
    pub fn contains(&self, v: &[F]) -> bool {
        let mut probe = self.clone();
        !probe.absorb(v.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| rat(x, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::<Rat>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Rat>::zeros(2, 5).rank(), 0);
        // Vandermonde rows on nodes 0, 1, 2: determinant (1-0)(2-0)(2-1) != 0.
        let v = m(vec![vec![1, 1, 1], vec![0, 1, 2], vec![0, 1, 4]]);
        assert_eq!(v.rank(), 3);
    }

    #[test]
    fn rank_rectangular_and_dependent() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.transpose().rank(), 2);
    }

    #[test]
    fn product_and_power() {
        let a = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.pow(2), Matrix::identity(2));
        let b = &a * &m(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(b, m(vec![vec![3, 4], vec![1, 2]]));
    }

    #[test]
    fn solve_in_span_examples() {
        let g = vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1)],
        ];
        let c = solve_in_span(&g, &[rat(3, 1), rat(4, 1)]).unwrap().unwrap();
        assert_eq!(c, vec![rat(3, 1), rat(4, 1)]);

        let g = vec![vec![rat(1, 1), rat(1, 1)]];
        assert_eq!(solve_in_span(&g, &[rat(1, 1), rat(2, 1)]).unwrap(), None);

        let g = vec![
            vec![rat(1, 1), rat(1, 1)],
            vec![rat(1, 1), rat(2, 1)],
        ];
        let c = solve_in_span(&g, &[rat(0, 1), rat(1, 1)]).unwrap().unwrap();
        assert_eq!(c, vec![rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn solve_reports_dimension_mismatch() {
        let g = vec![vec![rat(1, 1)]];
        assert!(solve_in_span(&g, &[rat(1, 1), rat(0, 1)]).is_err());
    }

    #[test]
    fn sieve_tracks_rank_incrementally() {
        let mut sieve = SpanSieve::new(3);
        assert!(sieve.absorb(vec![rat(1, 1), rat(2, 1), rat(0, 1)]));
        assert!(sieve.absorb(vec![rat(0, 1), rat(1, 1), rat(1, 1)]));
        // dependent on the first two
        assert!(!sieve.absorb(vec![rat(1, 1), rat(3, 1), rat(1, 1)]));
        assert_eq!(sieve.rank(), 2);
        assert!(sieve.contains(&[rat(2, 1), rat(4, 1), rat(0, 1)]));
        assert!(!sieve.contains(&[rat(0, 1), rat(0, 1), rat(1, 1)]));
        assert!(sieve.absorb(vec![rat(0, 1), rat(0, 1), rat(5, 1)]));
        assert_eq!(sieve.rank(), 3);
    }

    #[test]
    fn none_is_certified_by_rank_growth() {
        let g = vec![
            vec![rat(1, 1), rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ];
        let target = vec![rat(1, 1), rat(0, 1), rat(1, 1)];
        assert_eq!(solve_in_span(&g, &target).unwrap(), None);
        let mut all = g.clone();
        all.push(target);
        assert_eq!(rank_of_vectors(&g) + 1, rank_of_vectors(&all));
    }
}
