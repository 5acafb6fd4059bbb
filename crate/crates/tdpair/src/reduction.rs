//! Rewriting nonzigzag cells into zigzag combinations plus block spanning
//! vectors, with exact, independently checkable certificates.
//!
//! For a positive cell (i, j) the *boundary polynomial* interpolates 1 at the
//! dual node of column j and 0 at the dual nodes of the other positive
//! columns of row i; its degree is |i - t| - 1. Substituting the dual
//! generator for the indeterminate turns it into a row vector inside the
//! block spanning set, and subtracting the zigzag/negative leftovers of the
//! row yields an exact identity for the unit cell. Negative cells have the
//! mirror identity along their column. Because a positive cell outweighs
//! every negative cell of its row (and vice versa along columns), recursively
//! expanding the leftovers strictly decreases the weight, so the rewriting
//! terminates; [`reduce_cell`] packages the result as a
//! [`ReductionCertificate`] whose reconstruction is exact by construction and
//! re-verified by [`ReductionCertificate::verify`].
//!
//! Short words reduce accordingly: length-3 words by a direct exact solve in
//! the (d+1)-dimensional rank-3 block, length-4 words through the cell
//! certificate. Pushing either through any concrete model yields matrix
//! identities, which the model layer exercises.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::matrix::solve_in_span;
use crate::poly::Poly;
use crate::scalar::Field;
use crate::sequences::{EigenSeq, SequencePair};
use crate::tensor::{
    classify_cell, classify_cell3, r3_spanning_set, r_spanning_set, weight, Block, Cell,
    CellClass, RLabel, TensorElement, TensorElement3,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("cell is {got:?} but the {want:?} identity was requested")]
    WrongClass { want: CellClass, got: CellClass },
    #[error("zigzag cells need no expansion")]
    ZigzagInput,
}

/// Which of the two rewriting identities applies: `Plus` along the row of a
/// positive cell, `Minus` along the column of a negative cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// The interpolation polynomial attached to a nonzigzag cell.
///
/// `Plus` (positive cell): product over the other positive columns k of row i
/// of (x - theta*_k)/(theta*_j - theta*_k); degree |i - t| - 1, value 1 at
/// theta*_j and 0 at the other positive dual nodes of the row.
/// `Minus` (negative cell): the mirror product over the other negative rows
/// of column j, on the primal nodes; degree |j - s| - 1.
pub fn boundary_polynomial<F: Field>(
    d: usize,
    cell: &Cell,
    pair: &SequencePair<F>,
    sign: Sign,
) -> Result<Poly<F>, ReductionError> {
    let class = classify_cell(cell);
    let want = match sign {
        Sign::Plus => CellClass::Positive,
        Sign::Minus => CellClass::Negative,
    };
    if class != want {
        return Err(ReductionError::WrongClass { want, got: class });
    }
    let mut poly = Poly::one();
    match sign {
        Sign::Plus => {
            let anchor = pair.theta_star(cell.j);
            for k in 0..=d {
                if k == cell.j
                    || classify_cell(&Cell::new(cell.block, cell.i, k)) != CellClass::Positive
                {
                    continue;
                }
                let node = pair.theta_star(k);
                let denom = anchor.clone() - node.clone();
                let inv = denom.try_inv().expect("dual eigenvalues are distinct");
                poly = poly.mul(&Poly::x_minus(node).scale(&inv));
            }
        }
        Sign::Minus => {
            let anchor = pair.theta(cell.i);
            for k in 0..=d {
                if k == cell.i
                    || classify_cell(&Cell::new(cell.block, k, cell.j)) != CellClass::Negative
                {
                    continue;
                }
                let node = pair.theta(k);
                let denom = anchor.clone() - node.clone();
                let inv = denom.try_inv().expect("eigenvalues are distinct");
                poly = poly.mul(&Poly::x_minus(node).scale(&inv));
            }
        }
    }
    Ok(poly)
}

/// One application of the rewriting identity to a nonzigzag cell:
///
/// unit(cell) = (head over spanning vectors) - sum of tail unit cells.
///
/// The head is the boundary polynomial applied to the appropriate generator,
/// expanded over the spanning labels of the block; every tail cell lies in
/// the same row (Plus) or column (Minus) and is zigzag or of the opposite
/// class, with strictly smaller weight when nonzigzag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion<F> {
    pub cell: Cell,
    pub sign: Sign,
    pub poly: Poly<F>,
    pub head: Vec<(RLabel, F)>,
    pub tail: Vec<((usize, usize), F)>,
}

pub fn expand_identity<F: Field>(
    d: usize,
    cell: &Cell,
    pair: &SequencePair<F>,
) -> Result<Expansion<F>, ReductionError> {
    let class = classify_cell(cell);
    let sign = match class {
        CellClass::Zigzag => return Err(ReductionError::ZigzagInput),
        CellClass::Positive => Sign::Plus,
        CellClass::Negative => Sign::Minus,
    };
    let poly = boundary_polynomial(d, cell, pair, sign)?;
    let mut head = Vec::new();
    for (k, coeff) in poly.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let label = match sign {
            Sign::Plus => RLabel::Right { i: cell.i, k },
            Sign::Minus => RLabel::Left { j: cell.j, k },
        };
        head.push((label, coeff.clone()));
    }
    let mut tail = Vec::new();
    match sign {
        Sign::Plus => {
            // Remaining columns of row i: zigzag or negative cells, with the
            // polynomial evaluated at their dual node.
            for h in 0..=d {
                let other = Cell::new(cell.block, cell.i, h);
                if classify_cell(&other) == CellClass::Positive {
                    continue;
                }
                let value = poly.eval(pair.theta_star(h));
                if !value.is_zero() {
                    tail.push(((cell.i, h), value));
                }
            }
        }
        Sign::Minus => {
            for h in 0..=d {
                let other = Cell::new(cell.block, h, cell.j);
                if classify_cell(&other) == CellClass::Negative {
                    continue;
                }
                let value = poly.eval(pair.theta(h));
                if !value.is_zero() {
                    tail.push(((h, cell.j), value));
                }
            }
        }
    }
    Ok(Expansion {
        cell: *cell,
        sign,
        poly,
        head,
        tail,
    })
}

impl<F: Field> Expansion<F> {
    /// Exact equality of both sides of the identity, as block vectors.
    pub fn verify(&self, d: usize, pair: &SequencePair<F>) -> bool {
        let mut rhs = TensorElement::zero(self.cell.block);
        // head: the polynomial spread along the row or column
        for m in 0..=d {
            let (key, value) = match self.sign {
                Sign::Plus => ((self.cell.i, m), self.poly.eval(pair.theta_star(m))),
                Sign::Minus => ((m, self.cell.j), self.poly.eval(pair.theta(m))),
            };
            let mut term = TensorElement::zero(self.cell.block);
            term.set(key.0, key.1, value);
            rhs.add_scaled(&term, &F::one());
        }
        for ((i, j), coeff) in &self.tail {
            let unit = TensorElement::unit(self.cell.block, *i, *j);
            rhs.add_scaled(&unit, &(-coeff.clone()));
        }
        rhs == TensorElement::unit(self.cell.block, self.cell.i, self.cell.j)
    }
}

// ---- Weight-induction reduction ----

/// One expansion step of a reduction, recorded for audit: the cell, its
/// weight, and the identity used. Every nonzigzag cell in the expansion's
/// tail has weight strictly below `weight`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub cell: (usize, usize),
    pub weight: usize,
    pub sign: Sign,
}

/// An exact decomposition `unit(input) = zigzag_part + r_part . spanning`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate<F> {
    pub d: usize,
    pub block: Block,
    pub input: (usize, usize),
    /// Supported on zigzag cells only.
    pub zigzag_part: TensorElement<F>,
    /// Dense coefficients over the spanning set in its canonical order.
    pub r_part: Vec<F>,
    pub steps: Vec<ReductionStep>,
}

/// Position of a spanning label in the canonical spanning-set order.
fn label_index(d: usize, block: Block, label: RLabel) -> usize {
    let right_total: usize = (0..=d).map(|i| i.abs_diff(block.t)).sum();
    match label {
        RLabel::Right { i, k } => (0..i).map(|x| x.abs_diff(block.t)).sum::<usize>() + k,
        RLabel::Left { j, k } => {
            right_total + (0..j).map(|x| block.s.abs_diff(x)).sum::<usize>() + k
        }
    }
}

/// Express a unit cell as a zigzag combination plus a spanning-set
/// combination by weight induction, memoizing cells shared between branches.
pub fn reduce_cell<F: Field>(
    d: usize,
    block: Block,
    (i, j): (usize, usize),
    pair: &SequencePair<F>,
) -> ReductionCertificate<F> {
    let r_len: usize = (0..=d)
        .map(|x| x.abs_diff(block.t) + block.s.abs_diff(x))
        .sum();
    let mut memo: BTreeMap<(usize, usize), (TensorElement<F>, Vec<F>)> = BTreeMap::new();
    let mut steps = Vec::new();
    let (zigzag_part, r_part) = reduce_rec(d, block, (i, j), pair, r_len, &mut memo, &mut steps);
    ReductionCertificate {
        d,
        block,
        input: (i, j),
        zigzag_part,
        r_part,
        steps,
    }
}

fn reduce_rec<F: Field>(
    d: usize,
    block: Block,
    cell: (usize, usize),
    pair: &SequencePair<F>,
    r_len: usize,
    memo: &mut BTreeMap<(usize, usize), (TensorElement<F>, Vec<F>)>,
    steps: &mut Vec<ReductionStep>,
) -> (TensorElement<F>, Vec<F>) {
    if let Some(hit) = memo.get(&cell) {
        return hit.clone();
    }
    let c = Cell::new(block, cell.0, cell.1);
    if classify_cell(&c) == CellClass::Zigzag {
        let res = (
            TensorElement::unit(block, cell.0, cell.1),
            vec![F::zero(); r_len],
        );
        memo.insert(cell, res.clone());
        return res;
    }
    let w = weight(d, &c).expect("cell is nonzigzag");
    let expansion = expand_identity(d, &c, pair).expect("cell is nonzigzag");
    steps.push(ReductionStep {
        cell,
        weight: w,
        sign: expansion.sign,
    });

    let mut zz = TensorElement::zero(block);
    let mut rv = vec![F::zero(); r_len];
    for (label, coeff) in &expansion.head {
        let idx = label_index(d, block, *label);
        rv[idx] = rv[idx].clone() + coeff.clone();
    }
    for ((hi, hj), coeff) in &expansion.tail {
        let sub = Cell::new(block, *hi, *hj);
        debug_assert!(
            classify_cell(&sub) == CellClass::Zigzag || weight(d, &sub).unwrap() < w,
            "tail weight must drop"
        );
        let (sub_zz, sub_rv) = reduce_rec(d, block, (*hi, *hj), pair, r_len, memo, steps);
        let neg = -coeff.clone();
        zz.add_scaled(&sub_zz, &neg);
        for (slot, v) in rv.iter_mut().zip(sub_rv.iter()) {
            *slot = slot.clone() + v.clone() * neg.clone();
        }
    }
    memo.insert(cell, (zz.clone(), rv.clone()));
    (zz, rv)
}

impl<F: Field> ReductionCertificate<F> {
    /// Exact reconstruction: unit(input) equals the zigzag part plus the
    /// spanning combination, and the zigzag part touches only zigzag cells.
    pub fn verify(&self, pair: &SequencePair<F>) -> bool {
        if self
            .zigzag_part
            .coords
            .keys()
            .any(|&(i, j)| classify_cell(&Cell::new(self.block, i, j)) != CellClass::Zigzag)
        {
            return false;
        }
        let spanning = r_spanning_set(self.d, self.block, pair);
        if spanning.len() != self.r_part.len() {
            return false;
        }
        let mut acc = self.zigzag_part.clone();
        for ((_, el), coeff) in spanning.iter().zip(self.r_part.iter()) {
            acc.add_scaled(el, coeff);
        }
        acc == TensorElement::unit(self.block, self.input.0, self.input.1)
    }

    /// Strict weight descent along the recursion: every recorded expansion
    /// only feeds cells of smaller weight back into the reduction.
    pub fn weights_strictly_decrease(&self, pair: &SequencePair<F>) -> bool {
        self.steps.iter().all(|step| {
            let c = Cell::new(self.block, step.cell.0, step.cell.1);
            match expand_identity(self.d, &c, pair) {
                Ok(exp) => exp.tail.iter().all(|((i, j), _)| {
                    let sub = Cell::new(self.block, *i, *j);
                    classify_cell(&sub) == CellClass::Zigzag
                        || weight(self.d, &sub).unwrap() < step.weight
                }),
                Err(_) => false,
            }
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let zigzag: Vec<serde_json::Value> = self
            .zigzag_part
            .coords
            .iter()
            .map(|(&(i, j), v)| serde_json::json!({"i": i, "j": j, "coeff": v.to_string()}))
            .collect();
        let r: Vec<serde_json::Value> = self
            .r_part
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| serde_json::json!({"index": k, "coeff": v.to_string()}))
            .collect();
        serde_json::json!({
            "d": self.d,
            "s": self.block.s,
            "t": self.block.t,
            "input": {"i": self.input.0, "j": self.input.1},
            "zigzag_part": zigzag,
            "r_part": r,
            "steps": self.steps,
        })
    }
}

// ---- Word reductions ----

/// A length-3 word expressed as a zigzag combination modulo the rank-3
/// spanning vectors: unit(i) = sum zigzag_coeffs + sum r_coeffs . powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word3Reduction<F> {
    pub s: usize,
    pub i: usize,
    pub t: usize,
    pub zigzag_coeffs: BTreeMap<usize, F>,
    pub r_coeffs: Vec<F>,
}

/// Reduce by one exact solve in the (d+1)-dimensional block; a solution
/// always exists because the zigzag cells and power vectors form a basis.
pub fn reduce_word3<F: Field>(
    d: usize,
    s: usize,
    i: usize,
    t: usize,
    seq: &EigenSeq<F>,
) -> Word3Reduction<F> {
    let zigzag_rows: Vec<usize> = (0..=d).filter(|&h| classify_cell3(s, h, t)).collect();
    let powers = r3_spanning_set(d, s, t, seq);
    let mut generators: Vec<Vec<F>> = zigzag_rows
        .iter()
        .map(|&h| TensorElement3::<F>::unit(s, t, h).dense(d))
        .collect();
    generators.extend(powers.iter().map(|p| p.dense(d)));
    let target = TensorElement3::<F>::unit(s, t, i).dense(d);
    let coeffs = solve_in_span(&generators, &target)
        .expect("vectors share dimension d+1")
        .expect("zigzag cells plus powers form a basis");
    let mut zigzag_coeffs = BTreeMap::new();
    for (h, c) in zigzag_rows.iter().zip(coeffs.iter()) {
        if !c.is_zero() {
            zigzag_coeffs.insert(*h, c.clone());
        }
    }
    Word3Reduction {
        s,
        i,
        t,
        zigzag_coeffs,
        r_coeffs: coeffs[zigzag_rows.len()..].to_vec(),
    }
}

impl<F: Field> Word3Reduction<F> {
    /// Exact reconstruction of the unit cell from the two parts.
    pub fn verify(&self, d: usize, seq: &EigenSeq<F>) -> bool {
        let mut acc = vec![F::zero(); d + 1];
        for (&h, c) in &self.zigzag_coeffs {
            acc[h] = acc[h].clone() + c.clone();
        }
        for (power, c) in r3_spanning_set(d, self.s, self.t, seq)
            .iter()
            .zip(self.r_coeffs.iter())
        {
            for (slot, v) in acc.iter_mut().zip(power.dense(d)) {
                *slot = slot.clone() + v * c.clone();
            }
        }
        let target = TensorElement3::<F>::unit(self.s, self.t, self.i).dense(d);
        acc == target
    }
}

/// A length-4 word expressed as a zigzag combination: the word-level reading
/// of the cell certificate (the spanning part dies in any model).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word4Reduction<F> {
    pub s: usize,
    pub i: usize,
    pub j: usize,
    pub t: usize,
    pub zigzag_coeffs: BTreeMap<(usize, usize), F>,
    pub certificate: ReductionCertificate<F>,
}

pub fn reduce_word4<F: Field>(
    d: usize,
    s: usize,
    i: usize,
    j: usize,
    t: usize,
    pair: &SequencePair<F>,
) -> Word4Reduction<F> {
    let certificate = reduce_cell(d, Block::new(s, t), (i, j), pair);
    Word4Reduction {
        s,
        i,
        j,
        t,
        zigzag_coeffs: certificate.zigzag_part.coords.clone(),
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, Rat};
    use crate::sequences::Family;
    use num::traits::Zero;
    use rand::{Rng, SeedableRng};

    fn linear_pair(d: usize) -> SequencePair<Rat> {
        SequencePair::linear_pair(d)
    }

    #[test]
    fn boundary_polynomial_degrees_and_nodes() {
        let pair = linear_pair(9);
        let block = Block::new(3, 6);
        // positive cell (0,0): five other positive columns in row 0
        let cell = Cell::new(block, 0, 0);
        let f = boundary_polynomial(9, &cell, &pair, Sign::Plus).unwrap();
        assert_eq!(f.degree(), Some(5));
        assert_eq!(f.eval(pair.theta_star(0)), rat(1, 1));
        for k in 1..=5 {
            assert_eq!(f.eval(pair.theta_star(k)), rat(0, 1), "node {k}");
        }
        // negative cell (1,0): column 0 has negatives at rows 1..=3
        let cell = Cell::new(block, 1, 0);
        let f = boundary_polynomial(9, &cell, &pair, Sign::Minus).unwrap();
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.eval(pair.theta(1)), rat(1, 1));
        for k in [2usize, 3] {
            assert_eq!(f.eval(pair.theta(k)), rat(0, 1));
        }
        // a positive cell alone in its row gives the constant 1
        let cell = Cell::new(block, 5, 3);
        let f = boundary_polynomial(9, &cell, &pair, Sign::Plus).unwrap();
        assert_eq!(f, Poly::one());
    }

    #[test]
    fn boundary_polynomial_class_mismatch() {
        let pair = linear_pair(9);
        let cell = Cell::new(Block::new(3, 6), 0, 0); // positive
        assert_eq!(
            boundary_polynomial(9, &cell, &pair, Sign::Minus),
            Err(ReductionError::WrongClass {
                want: CellClass::Negative,
                got: CellClass::Positive
            })
        );
    }

    #[test]
    fn degrees_match_sign_counts_everywhere() {
        for d in [4usize, 7] {
            let pair = linear_pair(d);
            for block in Block::all(d) {
                for i in 0..=d {
                    for j in 0..=d {
                        let cell = Cell::new(block, i, j);
                        match classify_cell(&cell) {
                            CellClass::Positive => {
                                let f =
                                    boundary_polynomial(d, &cell, &pair, Sign::Plus).unwrap();
                                let expected = i.abs_diff(block.t).checked_sub(1);
                                assert_eq!(f.degree(), expected, "plus at {cell:?}");
                            }
                            CellClass::Negative => {
                                let f =
                                    boundary_polynomial(d, &cell, &pair, Sign::Minus).unwrap();
                                let expected = j.abs_diff(block.s).checked_sub(1);
                                assert_eq!(f.degree(), expected, "minus at {cell:?}");
                            }
                            CellClass::Zigzag => {}
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_identity_hand_example() {
        // block (3,6) at d = 9, cell (0,0): tail ranges over the zigzag
        // columns 6..=9 of row 0, no negatives there
        let pair = linear_pair(9);
        let cell = Cell::new(Block::new(3, 6), 0, 0);
        let exp = expand_identity(9, &cell, &pair).unwrap();
        assert_eq!(exp.sign, Sign::Plus);
        let tail_cols: Vec<usize> = exp.tail.iter().map(|((_, h), _)| *h).collect();
        assert!(tail_cols.iter().all(|h| (6..=9).contains(h)));
        assert!(exp.verify(9, &pair));
    }

    #[test]
    fn expansion_rejects_zigzag_cells() {
        let pair = linear_pair(9);
        let cell = Cell::new(Block::new(3, 6), 0, 6);
        assert_eq!(
            expand_identity(9, &cell, &pair),
            Err(ReductionError::ZigzagInput)
        );
    }

    #[test]
    fn expansion_reconstructs_on_random_cells() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 100 {
            let d = rng.gen_range(1..=6);
            let pair = linear_pair(d);
            let block = Block::new(rng.gen_range(0..=d), rng.gen_range(0..=d));
            let cell = Cell::new(block, rng.gen_range(0..=d), rng.gen_range(0..=d));
            if classify_cell(&cell) == CellClass::Zigzag {
                continue;
            }
            let exp = expand_identity(d, &cell, &pair).unwrap();
            assert!(exp.verify(d, &pair), "identity fails at d={d} {cell:?}");
            checked += 1;
        }
    }

    #[test]
    fn reduce_zigzag_cell_is_trivial() {
        let pair = linear_pair(9);
        let cert = reduce_cell(9, Block::new(3, 6), (0, 6), &pair);
        assert!(cert.steps.is_empty());
        assert_eq!(
            cert.zigzag_part,
            TensorElement::unit(Block::new(3, 6), 0, 6)
        );
        assert!(cert.r_part.iter().all(|c| c.is_zero()));
        assert!(cert.verify(&pair));
    }

    #[test]
    fn reduce_positive_corner_terminates_with_descending_weights() {
        let pair = linear_pair(9);
        let block = Block::new(3, 6);
        let cert = reduce_cell(9, block, (9, 9), &pair);
        assert_eq!(weight(9, &Cell::new(block, 9, 9)), Ok(6));
        assert!(!cert.steps.is_empty());
        assert_eq!(cert.steps[0].weight, 6);
        assert!(cert.verify(&pair));
        assert!(cert.weights_strictly_decrease(&pair));
    }

    #[test]
    fn reduce_all_cells_small_diameters() {
        for d in 0..=3usize {
            let pair = linear_pair(d);
            for block in Block::all(d) {
                for i in 0..=d {
                    for j in 0..=d {
                        let cert = reduce_cell(d, block, (i, j), &pair);
                        assert!(
                            cert.verify(&pair),
                            "reconstruction at d={d} {block:?} ({i},{j})"
                        );
                        assert!(cert.weights_strictly_decrease(&pair));
                    }
                }
            }
        }
    }

    #[test]
    fn zigzag_parts_span_a_complement() {
        // the zigzag parts of all unit-cell reductions express every cell
        // through zigzag cells modulo the spanning set, so together with the
        // spanning set they regenerate the whole block
        use crate::matrix::rank_of_vectors;
        let d = 3;
        let pair = linear_pair(d);
        for block in Block::all(d) {
            let mut vectors: Vec<Vec<Rat>> = r_spanning_set(d, block, &pair)
                .iter()
                .map(|(_, el)| el.dense(d))
                .collect();
            for i in 0..=d {
                for j in 0..=d {
                    let cert = reduce_cell(d, block, (i, j), &pair);
                    if !cert.zigzag_part.is_zero() {
                        vectors.push(cert.zigzag_part.dense(d));
                    }
                }
            }
            assert_eq!(rank_of_vectors(&vectors), (d + 1) * (d + 1));
        }
    }

    #[test]
    fn word3_reduction_hand_example() {
        // d = 2, (s,i,t) = (0,1,2): i = 1 sits between 0 and 2
        let seq = Family::Linear {
            offset: rat(0, 1),
            slope: rat(1, 1),
        }
        .sequence(2)
        .unwrap();
        let red = reduce_word3(2, 0, 1, 2, &seq);
        assert!(red.verify(2, &seq));
        // the only zigzag cell is i = 2 and both power vectors take part
        assert!(red.zigzag_coeffs.keys().all(|&h| h == 2));
        assert_eq!(red.r_coeffs.len(), 2);
        assert_eq!(red.r_coeffs[1], rat(1, 1));
        assert_eq!(red.zigzag_coeffs.get(&2), Some(&rat(-2, 1)));

        // zigzag input reduces to itself
        let red = reduce_word3(2, 0, 2, 2, &seq);
        assert_eq!(red.zigzag_coeffs.get(&2), Some(&rat(1, 1)));
        assert_eq!(red.zigzag_coeffs.len(), 1);
        assert!(red.r_coeffs.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn word3_reduction_sweep() {
        for d in 0..=4usize {
            let seq = Family::Linear {
                offset: rat(0, 1),
                slope: rat(1, 1),
            }
            .sequence(d)
            .unwrap();
            for s in 0..=d {
                for i in 0..=d {
                    for t in 0..=d {
                        let red = reduce_word3(d, s, i, t, &seq);
                        assert!(red.verify(d, &seq), "d={d} ({s},{i},{t})");
                        for &h in red.zigzag_coeffs.keys() {
                            assert!(classify_cell3(s, h, t));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn word4_reduction_wraps_the_certificate() {
        let pair = linear_pair(9);
        let red = reduce_word4(9, 3, 3, 7, 6, &pair);
        assert!(red.certificate.verify(&pair));
        assert!(!red.zigzag_coeffs.is_empty());
        for &(i, j) in red.zigzag_coeffs.keys() {
            assert!(classify_cell(&Cell::new(Block::new(3, 6), i, j)) == CellClass::Zigzag);
        }
    }

    #[test]
    fn certificate_json_shape() {
        let pair = linear_pair(3);
        let cert = reduce_cell(3, Block::new(1, 2), (1, 1), &pair);
        let json = cert.to_json();
        assert_eq!(json["d"], 3);
        assert!(json["zigzag_part"].is_array());
        assert!(json["steps"].is_array());
    }
}
