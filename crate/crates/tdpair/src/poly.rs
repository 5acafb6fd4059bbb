//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored lowest degree first; the representation is
//! canonical (empty vector for zero, nonzero trailing coefficient otherwise).
//! Degrees in this crate stay tiny, so no sparse or FFT machinery.

use num::traits::Zero;
use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("duplicate interpolation node at positions {0} and {1}")]
    DuplicateNode(usize, usize),
}

/// Polynomial with coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![F::one()],
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monic linear polynomial x - a.
    pub fn x_minus(a: &F) -> Self {
        Poly {
            coeffs: vec![-a.clone(), F::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Substitute a square matrix for the indeterminate.
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        assert!(m.is_square());
        let mut acc = Matrix::zeros(m.rows(), m.cols());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::diagonal(&vec![c.clone(); m.rows()]);
        }
        acc
    }
}

/// The unique polynomial of degree below the node count that passes through
/// all `(x, y)` nodes, built from the Lagrange product form.
pub fn lagrange_interpolant<F: Field>(nodes: &[(F, F)]) -> Result<Poly<F>, PolyError> {
    for (a, (x1, _)) in nodes.iter().enumerate() {
        for (b, (x2, _)) in nodes.iter().enumerate().skip(a + 1) {
            if x1 == x2 {
                return Err(PolyError::DuplicateNode(a, b));
            }
        }
    }
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in nodes.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::constant(yi.clone());
        for (j, (xj, _)) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = xi.clone() - xj.clone();
            let inv = denom.try_inv().expect("nodes are pairwise distinct");
            basis = basis.mul(&Poly::x_minus(xj).scale(&inv));
        }
        acc = acc.add(&basis);
    }
    Ok(acc)
}

impl<F: Field> std::fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 if c.is_one() => "x".to_string(),
                1 => format!("({c})*x"),
                _ if c.is_one() => format!("x^{k}"),
                _ => format!("({c})*x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};

    fn ri(n: i64) -> Rat {
        rat(n, 1)
    }

    #[test]
    fn interpolation_examples() {
        // nodes (0,1),(1,0) -> 1 - x
        let p = lagrange_interpolant(&[(ri(0), ri(1)), (ri(1), ri(0))]).unwrap();
        assert_eq!(p.coeffs(), &[ri(1), ri(-1)]);

        // nodes (0,0),(1,1),(2,4) -> x^2
        let p = lagrange_interpolant(&[(ri(0), ri(0)), (ri(1), ri(1)), (ri(2), ri(4))]).unwrap();
        assert_eq!(p.coeffs(), &[ri(0), ri(0), ri(1)]);
        for x in -3..4 {
            assert_eq!(p.eval(&ri(x)), ri(x * x));
        }

        // a single node gives a constant
        let p = lagrange_interpolant(&[(ri(5), ri(1))]).unwrap();
        assert_eq!(p, Poly::one());
    }

    #[test]
    fn duplicate_nodes_are_rejected() {
        let err = lagrange_interpolant(&[(ri(1), ri(0)), (ri(1), ri(2))]);
        assert_eq!(err, Err(PolyError::DuplicateNode(0, 1)));
    }

    #[test]
    fn delta_interpolants_vanish_at_other_nodes() {
        // The characteristic property behind spectral idempotents: through the
        // nodes (theta_j, delta_ij) the interpolant is 1 at theta_i and 0
        // elsewhere.
        let thetas: Vec<Rat> = (0..5).map(|k| rat(2 * k - 3, 2)).collect();
        for i in 0..thetas.len() {
            let nodes: Vec<(Rat, Rat)> = thetas
                .iter()
                .enumerate()
                .map(|(j, t)| (t.clone(), if i == j { ri(1) } else { ri(0) }))
                .collect();
            let p = lagrange_interpolant(&nodes).unwrap();
            assert!(p.degree().unwrap() < thetas.len());
            for (k, t) in thetas.iter().enumerate() {
                assert_eq!(p.eval(t), if i == k { ri(1) } else { ri(0) });
            }
        }
    }

    #[test]
    fn matrix_substitution_matches_scalar_eval_on_diagonals() {
        let p = Poly::from_coeffs(vec![ri(2), ri(-1), ri(1)]); // 2 - x + x^2
        let m = Matrix::diagonal(&[ri(1), ri(3)]);
        let pm = p.eval_matrix(&m);
        assert_eq!(pm[(0, 0)], p.eval(&ri(1)));
        assert_eq!(pm[(1, 1)], p.eval(&ri(3)));
        assert_eq!(pm[(0, 1)], ri(0));
    }

    #[test]
    fn arithmetic_keeps_canonical_form() {
        let p = Poly::from_coeffs(vec![ri(1), ri(2)]);
        let q = Poly::from_coeffs(vec![ri(1), ri(-2)]);
        assert_eq!(p.add(&q).coeffs(), &[ri(2)]);
        assert_eq!(p.sub(&p), Poly::zero());
        assert_eq!(p.mul(&Poly::zero()), Poly::zero());
        assert_eq!(p.mul(&q).coeffs(), &[ri(1), ri(0), ri(-4)]);
    }
}
