//! Exact-arithmetic models of zigzag-word combinatorics, the block structure
//! of the tensor spaces they act on, and concrete Leonard-pair matrix models,
//! culminating in machine checks of the binomial shape bound for tridiagonal
//! pairs.
//!
//! Everything is computed over an exact field (arbitrary-precision rationals
//! by default, a prime field as a fast mode); there is no floating point.
//!
//! Module map:
//! - [`scalar`], [`matrix`], [`poly`]: exact fields, dense exact linear
//!   algebra (rank, certified span membership), Lagrange interpolation.
//! - [`sequences`]: eigenvalue sequences with the distinctness and constant
//!   three-term ratio conditions, and the standard families (linear,
//!   geometric, q-Racah).
//! - [`words`]: alternating words in the idempotent generators, the zigzag
//!   condition and its sign characterization, peak indices, lifting words and
//!   the subset bijection behind the binomial count.
//! - [`tensor`]: the rank-3 and rank-4 block models, cell classification
//!   (zigzag / positive / negative), weights, censuses, spanning sets and the
//!   basis theorems, plus table rendering.
//! - [`reduction`]: boundary interpolation polynomials, the rewriting
//!   identities, and the weight-induction reduction with verifiable
//!   certificates.
//! - [`models`]: concrete Leonard-pair matrices over the exact field, the
//!   tridiagonal-system axiom checker, word images, span-equality checks and
//!   the shape bound.

pub mod matrix;
pub mod models;
pub mod poly;
pub mod reduction;
pub mod scalar;
pub mod sequences;
pub mod tensor;
pub mod words;

pub use matrix::{in_span, rank_of_vectors, solve_in_span, Matrix};
pub use poly::{lagrange_interpolant, Poly};
pub use scalar::{Field, Fp, Rat};

/// The default exact scalar: arbitrary-precision rationals.
pub type Q = Rat;

/// Binomial coefficient as an exact machine integer (plenty for desk scale).
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomials() {
        assert_eq!(binomial(3, 2), 3);
        assert_eq!(binomial(10, 4), 210);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(4, 7), 0);
        assert_eq!(binomial(30, 15), 155_117_520);
    }
}
