//! Exact coordinate models of the blocks of the rank-3 and rank-4 tensor
//! spaces, their cell combinatorics, and the basis theorems.
//!
//! A rank-4 block is indexed by (s, t) and has the (d+1)^2 unit cells (i, j).
//! Each cell is exactly one of:
//!
//! - *zigzag*: i is not between (s, j), j is not between (i, t), and at least
//!   one of i, j is not between (s, t);
//! - *positive* / *negative*: the two classes of nonzigzag cells, split by a
//!   case table; positive cells carry even weights, negative cells odd ones.
//!
//! The block also carries two families of spanning vectors (powers of the
//! dual generator spread along a row, powers of the primal generator spread
//! along a column); together with the zigzag unit cells they form a basis of
//! the block, which [`verify_block_basis4`] checks by exact rank computation.
//! Counting lemmas (zigzag census, per-row/per-column sign counts, spanning
//! set sizes) all have closed forms that [`block_census`] confronts with
//! brute enumeration. [`render_table`] reproduces the z / sign / weight grid
//! pictures for any block.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::matrix::rank_of_vectors;
use crate::scalar::Field;
use crate::sequences::{EigenSeq, SequencePair};
use crate::words::is_between;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("zigzag cells carry no weight")]
    ZigzagCellHasNoWeight,
    #[error("block index ({s},{t}) exceeds diameter {d}")]
    BlockOutOfRange { s: usize, t: usize, d: usize },
}

/// A block of the rank-4 space, indexed by the outer starred/nonstarred pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Block {
    pub s: usize,
    pub t: usize,
}

impl Block {
    pub fn new(s: usize, t: usize) -> Self {
        Block { s, t }
    }

    /// All (d+1)^2 blocks in row-major order.
    pub fn all(d: usize) -> impl Iterator<Item = Block> {
        (0..=d).flat_map(move |s| (0..=d).map(move |t| Block { s, t }))
    }
}

/// A unit cell of a rank-4 block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Cell {
    pub block: Block,
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub fn new(block: Block, i: usize, j: usize) -> Self {
        Cell { block, i, j }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CellClass {
    Zigzag,
    Positive,
    Negative,
}

// ---- Classification ----

/// Betweenness form of the zigzag condition for rank-4 cells.
pub fn is_zigzag_cell(c: &Cell) -> bool {
    let (s, t) = (c.block.s as i64, c.block.t as i64);
    let (i, j) = (c.i as i64, c.j as i64);
    !is_between(s, i, j)
        && !is_between(i, j, t)
        && (!is_between(s, i, t) || !is_between(s, j, t))
}

/// Case-table form of the zigzag condition; agrees with [`is_zigzag_cell`]
/// on every cell (checked exhaustively in the tests).
pub fn is_zigzag_cell_table(d: usize, c: &Cell) -> bool {
    let (s, t) = (c.block.s as i64, c.block.t as i64);
    let (i, j) = (c.i as i64, c.j as i64);
    let d = d as i64;
    if s < t {
        (i < s && t <= j && j <= d)
            || (s < i && i < t && 0 <= j && j < s)
            || (t <= i && i <= d && j <= t)
    } else if s == t {
        (i < s && s <= j && j <= d) || (i == s && j == s) || (s < i && i <= d && j <= s)
    } else {
        (i <= t && t <= j && j <= d)
            || (t < i && i < s && s < j && j <= d)
            || (s < i && i <= d && j <= t)
    }
}

/// Zigzag condition for rank-3 cells: i is not between (s, t).
pub fn classify_cell3(s: usize, i: usize, t: usize) -> bool {
    !is_between(s as i64, i as i64, t as i64)
}

/// The positive case table. Positive cells are always nonzigzag; the rows
/// are mutually exclusive (checked exhaustively in the tests).
fn positive_rows(c: &Cell) -> Vec<usize> {
    let (s, t) = (c.block.s as i64, c.block.t as i64);
    let (i, j) = (c.i as i64, c.j as i64);
    let rows: &[bool] = if s < t {
        &[
            i < s && i <= j && j < t,
            s <= i && i < t && s <= j && j < s + t - i,
            t < j && j <= i,
        ]
    } else if s == t {
        &[i <= j && j < s, s < j && j <= i]
    } else {
        &[
            i <= j && j < t,
            t < i && i <= s && s + t - i < j && j <= s,
            s < i && t < j && j <= i,
        ]
    };
    rows.iter()
        .enumerate()
        .filter_map(|(k, &hit)| hit.then_some(k))
        .collect()
}

pub fn is_positive_cell(c: &Cell) -> bool {
    !positive_rows(c).is_empty()
}

/// Classify a cell as zigzag, positive, or negative (the three are mutually
/// exclusive and exhaustive).
pub fn classify_cell(c: &Cell) -> CellClass {
    if is_zigzag_cell(c) {
        CellClass::Zigzag
    } else if is_positive_cell(c) {
        CellClass::Positive
    } else {
        CellClass::Negative
    }
}

// ---- Weights ----

/// All weights assigned to a cell by the matching rows of the weight case
/// table, with the matching row id. A nonzigzag cell must be matched by at
/// least one row, and any overlapping rows must agree; both facts are
/// verified by enumeration rather than assumed.
pub fn weight_rows(d: usize, c: &Cell) -> Vec<(usize, usize)> {
    let (s, t) = (c.block.s as i64, c.block.t as i64);
    let (i, j) = (c.i as i64, c.j as i64);
    let d = d as i64;
    // (condition, weight) rows; the first half carry even weights for the
    // positive cells, the rest odd weights for the negative cells.
    let rows: Vec<(bool, i64)> = if s < t {
        vec![
            (i < s && i <= j && j < t, 2 * i),
            (
                s <= i && i < t && s <= j && j < s + t - i,
                2 * (d - t + i + 1),
            ),
            (t < j && j <= i, 2 * (d - i + s)),
            (j < i && i <= s, 2 * j + 1),
            (
                s < j && j <= t && s + t - j <= i && i < t,
                2 * (d - j + s) + 1,
            ),
            (t < j && s <= i && i < j, 2 * (d - j + s) + 1),
        ]
    } else if s == t {
        vec![
            (i <= j && j < s, 2 * i),
            (s < j && j <= i, 2 * (d - i + s)),
            (j < i && i <= s, 2 * j + 1),
            (s <= i && i < j, 2 * (d - j + s) + 1),
        ]
    } else {
        vec![
            (i <= j && j < t, 2 * i),
            (
                t < i && i <= s && s + t - i < j && j <= s,
                2 * (d - i + t + 1),
            ),
            (s < i && t < j && j <= i, 2 * (d - i + t)),
            (j < t && j < i && i <= s, 2 * j + 1),
            (
                t <= j && j < s && t < i && i <= s + t - j,
                2 * (d - s + j) + 1,
            ),
            (s <= i && i < j, 2 * (d - j + t) + 1),
        ]
    };
    rows.into_iter()
        .enumerate()
        .filter_map(|(k, (hit, w))| hit.then_some((k, w as usize)))
        .collect()
}

/// The weight of a nonzigzag cell.
pub fn weight(d: usize, c: &Cell) -> Result<usize, TensorError> {
    if is_zigzag_cell(c) {
        return Err(TensorError::ZigzagCellHasNoWeight);
    }
    let rows = weight_rows(d, c);
    let (_, w) = *rows
        .first()
        .expect("every nonzigzag cell is matched by a weight row");
    debug_assert!(rows.iter().all(|&(_, v)| v == w));
    Ok(w)
}

// ---- Censuses and closed forms ----

/// Brute-force counts over one block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCensus {
    pub block: Block,
    pub zigzag: usize,
    pub positive: usize,
    pub negative: usize,
    /// Positive cells in row i.
    pub per_row_positive: Vec<usize>,
    /// Negative cells in column j.
    pub per_col_negative: Vec<usize>,
    /// Spanning vectors attached to rows (powers of the dual generator).
    pub r_right: usize,
    /// Spanning vectors attached to columns (powers of the primal generator).
    pub r_left: usize,
}

pub fn block_census(d: usize, block: Block) -> BlockCensus {
    let mut census = BlockCensus {
        block,
        zigzag: 0,
        positive: 0,
        negative: 0,
        per_row_positive: vec![0; d + 1],
        per_col_negative: vec![0; d + 1],
        r_right: 0,
        r_left: 0,
    };
    for i in 0..=d {
        for j in 0..=d {
            match classify_cell(&Cell::new(block, i, j)) {
                CellClass::Zigzag => census.zigzag += 1,
                CellClass::Positive => {
                    census.positive += 1;
                    census.per_row_positive[i] += 1;
                }
                CellClass::Negative => {
                    census.negative += 1;
                    census.per_col_negative[j] += 1;
                }
            }
        }
    }
    census.r_right = (0..=d).map(|i| i.abs_diff(block.t)).sum();
    census.r_left = (0..=d).map(|j| j.abs_diff(block.s)).sum();
    census
}

/// Closed form for the zigzag count: d + 1 + s(d-s) + t(d-t).
pub fn zigzag_closed_form(d: usize, block: Block) -> usize {
    d + 1 + block.s * (d - block.s) + block.t * (d - block.t)
}

/// Closed form for the row-attached spanning count: d(d+1)/2 - t(d-t).
pub fn r_right_closed_form(d: usize, t: usize) -> usize {
    d * (d + 1) / 2 - t * (d - t)
}

/// Closed form for the column-attached spanning count: d(d+1)/2 - s(d-s).
pub fn r_left_closed_form(d: usize, s: usize) -> usize {
    d * (d + 1) / 2 - s * (d - s)
}

/// Closed form for the block spanning-set size: d(d+1) - (s+t)d + s^2 + t^2.
pub fn block_r_dimension(d: usize, block: Block) -> usize {
    d * (d + 1) + block.s * block.s + block.t * block.t - (block.s + block.t) * d
}

// ---- Sparse block vectors ----

/// A sparse exact vector over the unit-cell basis of a rank-4 block.
/// Stored coefficients are always nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement<F> {
    pub block: Block,
    pub coords: BTreeMap<(usize, usize), F>,
}

impl<F: Field> TensorElement<F> {
    pub fn zero(block: Block) -> Self {
        TensorElement {
            block,
            coords: BTreeMap::new(),
        }
    }

    pub fn unit(block: Block, i: usize, j: usize) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert((i, j), F::one());
        TensorElement { block, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> F {
        self.coords.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    /// Add `scale * other` into `self`, dropping cancelled coefficients.
    pub fn add_scaled(&mut self, other: &Self, scale: &F) {
        assert_eq!(self.block, other.block, "blocks must match");
        for (key, v) in &other.coords {
            let delta = v.clone() * scale.clone();
            let updated = match self.coords.get(key) {
                Some(cur) => cur.clone() + delta,
                None => delta,
            };
            if updated.is_zero() {
                self.coords.remove(key);
            } else {
                self.coords.insert(*key, updated);
            }
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        if value.is_zero() {
            self.coords.remove(&(i, j));
        } else {
            self.coords.insert((i, j), value);
        }
    }

    /// Dense row-major coordinates of length (d+1)^2.
    pub fn dense(&self, d: usize) -> Vec<F> {
        let mut out = vec![F::zero(); (d + 1) * (d + 1)];
        for (&(i, j), v) in &self.coords {
            out[i * (d + 1) + j] = v.clone();
        }
        out
    }
}

/// A sparse exact vector over the unit-cell basis of a rank-3 block
/// (cells are indexed by i alone).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement3<F> {
    pub s: usize,
    pub t: usize,
    pub coords: BTreeMap<usize, F>,
}

impl<F: Field> TensorElement3<F> {
    pub fn unit(s: usize, t: usize, i: usize) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(i, F::one());
        TensorElement3 { s, t, coords }
    }

    pub fn dense(&self, d: usize) -> Vec<F> {
        let mut out = vec![F::zero(); d + 1];
        for (&i, v) in &self.coords {
            out[i] = v.clone();
        }
        out
    }
}

// ---- Spanning sets ----

/// Label of one spanning vector of a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RLabel {
    /// Powers of the dual generator spread along row i: coords (i, j) = (theta*_j)^k.
    Right { i: usize, k: usize },
    /// Powers of the primal generator spread along column j: coords (i, j) = (theta_i)^k.
    Left { j: usize, k: usize },
}

/// The spanning set of the block subspace: for every row i the vectors with
/// k < |i - t|, then for every column j the vectors with k < |s - j|, in that
/// order. The counts match the closed forms of [`r_right_closed_form`] and
/// [`r_left_closed_form`].
pub fn r_spanning_set<F: Field>(
    d: usize,
    block: Block,
    pair: &SequencePair<F>,
) -> Vec<(RLabel, TensorElement<F>)> {
    assert_eq!(pair.d(), d);
    let mut out = Vec::new();
    for i in 0..=d {
        for k in 0..i.abs_diff(block.t) {
            let mut el = TensorElement::zero(block);
            for j in 0..=d {
                el.set(i, j, pair.theta_star(j).pow_usize(k));
            }
            out.push((RLabel::Right { i, k }, el));
        }
    }
    for j in 0..=d {
        for k in 0..block.s.abs_diff(j) {
            let mut el = TensorElement::zero(block);
            for i in 0..=d {
                el.set(i, j, pair.theta(i).pow_usize(k));
            }
            out.push((RLabel::Left { j, k }, el));
        }
    }
    out
}

/// The |s - t| power vectors of a rank-3 block: coords i = (theta_i)^k.
pub fn r3_spanning_set<F: Field>(
    d: usize,
    s: usize,
    t: usize,
    seq: &EigenSeq<F>,
) -> Vec<TensorElement3<F>> {
    assert_eq!(seq.d(), d);
    (0..s.abs_diff(t))
        .map(|k| {
            let mut coords = BTreeMap::new();
            for i in 0..=d {
                let v = seq.value(i).pow_usize(k);
                if !v.is_zero() {
                    coords.insert(i, v);
                }
            }
            TensorElement3 { s, t, coords }
        })
        .collect()
}

// ---- Basis verification ----

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport4 {
    pub block: Block,
    pub r_count: usize,
    pub rank_r: usize,
    pub zigzag_count: usize,
    pub rank_union: usize,
    /// d(d+1) - (s+t)d + s^2 + t^2, which the spanning rank must equal.
    pub expected_r_dimension: usize,
    pub is_basis: bool,
}

/// Check that the spanning vectors are independent and that together with
/// the zigzag unit cells they fill the whole (d+1)^2-dimensional block.
pub fn verify_block_basis4<F: Field>(
    d: usize,
    block: Block,
    pair: &SequencePair<F>,
) -> BasisReport4 {
    let spanning = r_spanning_set(d, block, pair);
    let mut vectors: Vec<Vec<F>> = spanning.iter().map(|(_, el)| el.dense(d)).collect();
    let r_count = vectors.len();
    let rank_r = rank_of_vectors(&vectors);

    let mut zigzag_count = 0;
    for i in 0..=d {
        for j in 0..=d {
            if is_zigzag_cell(&Cell::new(block, i, j)) {
                zigzag_count += 1;
                vectors.push(TensorElement::<F>::unit(block, i, j).dense(d));
            }
        }
    }
    let rank_union = rank_of_vectors(&vectors);
    let expected_r_dimension = block_r_dimension(d, block);
    let full = (d + 1) * (d + 1);
    BasisReport4 {
        block,
        r_count,
        rank_r,
        zigzag_count,
        rank_union,
        expected_r_dimension,
        is_basis: rank_r == r_count && rank_union == full && r_count == expected_r_dimension,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport3 {
    pub s: usize,
    pub t: usize,
    pub power_count: usize,
    pub zigzag_count: usize,
    pub rank_union: usize,
    pub is_basis: bool,
}

/// Rank-3 analogue: the |s - t| power vectors plus the zigzag unit cells
/// must have full rank d + 1.
pub fn verify_block_basis3<F: Field>(
    d: usize,
    s: usize,
    t: usize,
    seq: &EigenSeq<F>,
) -> BasisReport3 {
    let mut vectors: Vec<Vec<F>> = r3_spanning_set(d, s, t, seq)
        .iter()
        .map(|el| el.dense(d))
        .collect();
    let power_count = vectors.len();
    let mut zigzag_count = 0;
    for i in 0..=d {
        if classify_cell3(s, i, t) {
            zigzag_count += 1;
            vectors.push(TensorElement3::<F>::unit(s, t, i).dense(d));
        }
    }
    let rank_union = rank_of_vectors(&vectors);
    BasisReport3 {
        s,
        t,
        power_count,
        zigzag_count,
        rank_union,
        is_basis: power_count + zigzag_count == d + 1 && rank_union == d + 1,
    }
}

// ---- Global dimension bookkeeping ----

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceDims {
    pub d: usize,
    /// 2d(d+1)^2(d+2)/3
    pub dim_r4: usize,
    /// (d+1)^2 (d^2 + 2d + 3)/3
    pub codim_r4: usize,
    /// d(d+1)(d+2)/3
    pub dim_r3: usize,
    pub codim_r3: usize,
    pub per_block: Vec<(Block, usize)>,
}

/// Closed-form dimensions together with their brute per-block recomputation.
/// The two always agree, and dim + codim recovers the ambient dimension.
pub fn space_dimensions(d: usize) -> SpaceDims {
    let per_block: Vec<(Block, usize)> = Block::all(d)
        .map(|b| (b, r_right_closed_form(d, b.t) + r_left_closed_form(d, b.s)))
        .collect();
    let dim_r4 = 2 * d * (d + 1) * (d + 1) * (d + 2) / 3;
    let codim_r4 = (d + 1) * (d + 1) * (d * d + 2 * d + 3) / 3;
    let dim_r3: usize = (0..=d)
        .flat_map(|s| (0..=d).map(move |t| s.abs_diff(t)))
        .sum();
    let full3 = (d + 1) * (d + 1) * (d + 1);
    SpaceDims {
        d,
        dim_r4,
        codim_r4,
        dim_r3,
        codim_r3: full3 - dim_r3,
        per_block,
    }
}

// ---- Rendering ----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Zigzag,
    Sign,
    Weight,
}

/// The semantic cell contents of a table: "z", "+", "-", a weight, or blank.
pub fn table_cells(d: usize, block: Block, kind: TableKind) -> Vec<Vec<String>> {
    (0..=d)
        .map(|i| {
            (0..=d)
                .map(|j| {
                    let cell = Cell::new(block, i, j);
                    match (kind, classify_cell(&cell)) {
                        (TableKind::Zigzag, CellClass::Zigzag) => "z".to_string(),
                        (TableKind::Zigzag, _) => String::new(),
                        (TableKind::Sign, CellClass::Zigzag) => "z".to_string(),
                        (TableKind::Sign, CellClass::Positive) => "+".to_string(),
                        (TableKind::Sign, CellClass::Negative) => "-".to_string(),
                        (TableKind::Weight, CellClass::Zigzag) => "z".to_string(),
                        (TableKind::Weight, _) => {
                            weight(d, &cell).expect("cell is nonzigzag").to_string()
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// Sign-table margins: positives per row, negatives per column.
pub fn sign_margins(d: usize, block: Block) -> (Vec<usize>, Vec<usize>) {
    let census = block_census(d, block);
    (census.per_row_positive, census.per_col_negative)
}

/// Render a table as aligned text, sign tables with their count margins.
pub fn render_table(d: usize, block: Block, kind: TableKind) -> String {
    let cells = table_cells(d, block, kind);
    let mut grid: Vec<Vec<String>> = Vec::new();

    let mut header: Vec<String> = vec!["i\\j".to_string()];
    header.extend((0..=d).map(|j| j.to_string()));
    if kind == TableKind::Sign {
        header.push("#+".to_string());
    }
    grid.push(header);

    let (row_plus, col_minus) = if kind == TableKind::Sign {
        sign_margins(d, block)
    } else {
        (Vec::new(), Vec::new())
    };
    for (i, row) in cells.iter().enumerate() {
        let mut line = vec![i.to_string()];
        line.extend(row.iter().map(|c| {
            if c.is_empty() {
                ".".to_string()
            } else {
                c.clone()
            }
        }));
        if kind == TableKind::Sign {
            line.push(row_plus[i].to_string());
        }
        grid.push(line);
    }
    if kind == TableKind::Sign {
        let mut line = vec!["#-".to_string()];
        line.extend(col_minus.iter().map(ToString::to_string));
        line.push(String::new());
        grid.push(line);
    }

    let widths: Vec<usize> = (0..grid[0].len())
        .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{:>width$}", cell, width = widths[c]))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// CSV rows `i,j,class,weight` for one block (weight blank on zigzag cells).
pub fn csv_export(d: usize, block: Block) -> String {
    let mut out = String::from("i,j,class,weight\n");
    for i in 0..=d {
        for j in 0..=d {
            let cell = Cell::new(block, i, j);
            let (class, w) = match classify_cell(&cell) {
                CellClass::Zigzag => ("z", String::new()),
                CellClass::Positive => ("+", weight(d, &cell).unwrap().to_string()),
                CellClass::Negative => ("-", weight(d, &cell).unwrap().to_string()),
            };
            out.push_str(&format!("{i},{j},{class},{w}\n"));
        }
    }
    out
}
