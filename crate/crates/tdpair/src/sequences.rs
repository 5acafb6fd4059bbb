//! Eigenvalue sequences and the pairs of them that parametrize everything
//! downstream.
//!
//! A sequence theta_0..theta_d is admissible when its entries are pairwise
//! distinct and, for d >= 3, the ratio
//! `(theta_{i-2} - theta_{i+1}) / (theta_{i-1} - theta_i)` takes one common
//! value for all 2 <= i <= d-1. A pair of sequences must in addition share
//! that common ratio. Three standard families are provided:
//!
//! - linear:     theta_i = offset + slope * i          (ratio 3)
//! - geometric:  theta_i = offset + scale * q^i        (ratio (1+q+q^2)/q)
//! - q-Racah:    theta_i = alpha + beta q^i + gamma q^{-i}  (same ratio)

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("the common ratio needs diameter at least 3, got {0}")]
    DiameterTooSmall(usize),
    #[error("the three-term ratio is not constant (first differs at i = {0})")]
    RatioNotConstant(usize),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("subset has {got} elements, expected {expected}")]
    BadSubsetSize { got: usize, expected: usize },
    #[error("sequence is invalid: {0}")]
    Invalid(String),
}

/// The eigenvalue sequence theta_0..theta_d of one diagonalizable generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSeq<F> {
    values: Vec<F>,
}

/// A validation report; empty vectors mean the sequence is admissible.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct SeqReport {
    /// Index pairs (i, j) with equal values.
    pub duplicate_pairs: Vec<(usize, usize)>,
    /// Interior indices i where the three-term ratio deviates from the one at i = 2.
    pub ratio_violations: Vec<usize>,
}

impl SeqReport {
    pub fn is_valid(&self) -> bool {
        self.duplicate_pairs.is_empty() && self.ratio_violations.is_empty()
    }
}

impl<F: Field> EigenSeq<F> {
    /// Wrap d+1 scalars; the slice must be nonempty.
    pub fn new(values: Vec<F>) -> Self {
        assert!(!values.is_empty(), "a sequence has at least one value");
        EigenSeq { values }
    }

    pub fn d(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &F {
        &self.values[i]
    }

    pub fn reversed(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        EigenSeq { values }
    }

    /// Check distinctness and the constant-ratio condition, reporting every
    /// violation with its offending indices.
    pub fn validate(&self) -> SeqReport {
        let mut report = SeqReport::default();
        for i in 0..self.values.len() {
            for j in i + 1..self.values.len() {
                if self.values[i] == self.values[j] {
                    report.duplicate_pairs.push((i, j));
                }
            }
        }
        if report.duplicate_pairs.is_empty() {
            if let Some(ratios) = self.three_term_ratios() {
                for (offset, r) in ratios.iter().enumerate().skip(1) {
                    if *r != ratios[0] {
                        report.ratio_violations.push(offset + 2);
                    }
                }
            }
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// The ratios (theta_{i-2} - theta_{i+1}) / (theta_{i-1} - theta_i) for
    /// i = 2..=d-1, or `None` when d < 3 (no constraint). Requires
    /// consecutive values distinct.
    fn three_term_ratios(&self) -> Option<Vec<F>> {
        let d = self.d();
        if d < 3 {
            return None;
        }
        let mut out = Vec::with_capacity(d - 2);
        for i in 2..d {
            let num = self.values[i - 2].clone() - self.values[i + 1].clone();
            let den = self.values[i - 1].clone() - self.values[i].clone();
            out.push(num.try_div(&den).expect("consecutive values are distinct"));
        }
        Some(out)
    }

    /// The common value of the three-term ratio (d >= 3).
    pub fn common_ratio(&self) -> Result<F, SequenceError> {
        let d = self.d();
        if d < 3 {
            return Err(SequenceError::DiameterTooSmall(d));
        }
        let report = self.validate();
        if !report.duplicate_pairs.is_empty() {
            return Err(SequenceError::Invalid(format!(
                "duplicate values at {:?}",
                report.duplicate_pairs[0]
            )));
        }
        if let Some(&i) = report.ratio_violations.first() {
            return Err(SequenceError::RatioNotConstant(i));
        }
        Ok(self.three_term_ratios().expect("d >= 3").remove(0))
    }

    /// Check that swapping an (n+1)-subset of the coordinate rows for the
    /// power rows (theta_i^k), k = 0..=n, still gives an invertible matrix.
    ///
    /// For an admissible sequence this holds for every subset: the minor that
    /// survives the unit rows is a Vandermonde determinant on distinct nodes.
    pub fn verify_replacement_basis(
        &self,
        subset: &[usize],
        n: usize,
    ) -> Result<bool, SequenceError> {
        if subset.len() != n + 1 {
            return Err(SequenceError::BadSubsetSize {
                got: subset.len(),
                expected: n + 1,
            });
        }
        let d = self.d();
        let mut rows: Vec<Vec<F>> = Vec::with_capacity(d + 1);
        for i in 0..=d {
            if subset.contains(&i) {
                continue;
            }
            let mut unit = vec![F::zero(); d + 1];
            unit[i] = F::one();
            rows.push(unit);
        }
        for k in 0..=n {
            rows.push(self.values.iter().map(|t| t.pow_usize(k)).collect());
        }
        if rows.len() != d + 1 {
            // Subset had repeats or out-of-range entries; the replacement is
            // not a (d+1)-row system.
            return Ok(false);
        }
        let m = Matrix::from_rows(rows).expect("rows share length d+1");
        Ok(m.rank() == d + 1)
    }
}

/// A primal/dual pair of sequences of equal diameter and equal common ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePair<F> {
    primal: EigenSeq<F>,
    dual: EigenSeq<F>,
}

impl<F: Field> SequencePair<F> {
    pub fn new(primal: EigenSeq<F>, dual: EigenSeq<F>) -> Result<Self, SequenceError> {
        if primal.d() != dual.d() {
            return Err(SequenceError::Invalid(format!(
                "diameters differ: {} vs {}",
                primal.d(),
                dual.d()
            )));
        }
        for (name, seq) in [("primal", &primal), ("dual", &dual)] {
            let report = seq.validate();
            if !report.is_valid() {
                return Err(SequenceError::Invalid(format!(
                    "{name} sequence fails validation: {report:?}"
                )));
            }
        }
        if primal.d() >= 3 {
            let rp = primal.common_ratio()?;
            let rd = dual.common_ratio()?;
            if rp != rd {
                return Err(SequenceError::Invalid(format!(
                    "common ratios differ: {rp} vs {rd}"
                )));
            }
        }
        Ok(SequencePair { primal, dual })
    }

    pub fn d(&self) -> usize {
        self.primal.d()
    }

    pub fn primal(&self) -> &EigenSeq<F> {
        &self.primal
    }

    pub fn dual(&self) -> &EigenSeq<F> {
        &self.dual
    }

    pub fn theta(&self, i: usize) -> &F {
        self.primal.value(i)
    }

    pub fn theta_star(&self, i: usize) -> &F {
        self.dual.value(i)
    }

    /// Convenience pair: primal 0..d, dual d..0.
    pub fn linear_pair(d: usize) -> Self {
        let primal = Family::Linear {
            offset: F::zero(),
            slope: F::one(),
        }
        .sequence(d)
        .expect("the unit linear family is nondegenerate");
        let dual = primal.reversed();
        SequencePair::new(primal, dual).expect("reversal preserves admissibility")
    }

    /// Convenience pair: both sequences geometric with the given ratio.
    pub fn geometric_pair(d: usize, q: F) -> Result<Self, SequenceError> {
        let seq = Family::Geometric {
            offset: F::zero(),
            scale: F::one(),
            q,
        }
        .sequence(d)?;
        SequencePair::new(seq.clone(), seq.reversed())
    }
}

/// The standard parametrized families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family<F> {
    Linear { offset: F, slope: F },
    Geometric { offset: F, scale: F, q: F },
    QRacah { alpha: F, beta: F, gamma: F, q: F },
}

impl<F: Field> Family<F> {
    /// Produce the sequence of diameter d, rejecting parameter choices that
    /// break distinctness. Degeneracy is detected by explicit pairwise
    /// comparison of the produced values, not symbolically.
    pub fn sequence(&self, d: usize) -> Result<EigenSeq<F>, SequenceError> {
        let values: Vec<F> = match self {
            Family::Linear { offset, slope } => (0..=d)
                .map(|i| offset.clone() + slope.clone() * F::from_i64(i as i64))
                .collect(),
            Family::Geometric { offset, scale, q } => {
                if q.is_zero() {
                    return Err(SequenceError::DegenerateParameters("q = 0".into()));
                }
                (0..=d)
                    .map(|i| offset.clone() + scale.clone() * q.pow_usize(i))
                    .collect()
            }
            Family::QRacah {
                alpha,
                beta,
                gamma,
                q,
            } => {
                let q_inv = q
                    .try_inv()
                    .map_err(|_| SequenceError::DegenerateParameters("q = 0".into()))?;
                (0..=d)
                    .map(|i| {
                        alpha.clone()
                            + beta.clone() * q.pow_usize(i)
                            + gamma.clone() * q_inv.pow_usize(i)
                    })
                    .collect()
            }
        };
        let seq = EigenSeq::new(values);
        let report = seq.validate();
        if !report.is_valid() {
            return Err(SequenceError::DegenerateParameters(format!(
                "produced sequence fails validation: {report:?}"
            )));
        }
        Ok(seq)
    }
}

// ---- JSON ----

/// Wire form of a sequence: `{"d": 3, "values": ["0", "1/2", ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeqJson {
    pub d: usize,
    pub values: Vec<String>,
}

impl<F: Field> EigenSeq<F> {
    pub fn to_json(&self) -> SeqJson {
        SeqJson {
            d: self.d(),
            values: self.values.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(json: &SeqJson) -> Result<Self, SequenceError> {
        if json.values.len() != json.d + 1 {
            return Err(SequenceError::Invalid(format!(
                "expected {} values, got {}",
                json.d + 1,
                json.values.len()
            )));
        }
        let values = json
            .values
            .iter()
            .map(|s| F::parse(s))
            .collect::<Result<Vec<F>, _>>()
            .map_err(|e| SequenceError::Invalid(e.to_string()))?;
        Ok(EigenSeq::new(values))
    }
}
