//! Dense exact linear algebra over F2 with bit-packed rows.
//!
//! Every matrix in this crate is small (at most a few hundred rows), so a
//! single flat `Vec<u64>` in row-major order with word-parallel XOR
//! elimination covers all needs. No sparse storage, no other fields.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

const BITS: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("dimension mismatch: left is {lr}x{lc}, right is {rr}x{rc}")]
    DimensionMismatch { lr: usize, lc: usize, rr: usize, rc: usize },
    #[error("row {row} has length {len}, expected {cols}")]
    BadRowLiteral { row: usize, len: usize, cols: usize },
    #[error("invalid character {ch:?} in matrix literal")]
    BadChar { ch: char },
}

/// Dense matrix over F2. Bit `(i, j)` is the entry in row `i`, column `j`.
///
/// Padding bits beyond `cols` in each row word are kept zero, so whole-word
/// comparisons and XORs are valid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    /// Zero matrix. A 0x0 matrix is valid (identity of the empty direct sum).
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(BITS);
        BitMatrix { rows, cols, words_per_row, data: vec![0; rows * words_per_row] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Parses rows given as strings of '0'/'1', e.g. `["01", "11"]`.
    pub fn from_rows(rows: &[&str]) -> Result<Self, Gf2Error> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zero(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Gf2Error::BadRowLiteral { row: i, len: r.len(), cols });
            }
            for (j, ch) in r.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    ch => return Err(Gf2Error::BadChar { ch }),
                }
            }
        }
        Ok(m)
    }

    /// Builds from a closure giving entry `(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        let w = self.data[i * self.words_per_row + j / BITS];
        (w >> (j % BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.words_per_row + j / BITS];
        if v {
            *w |= 1 << (j % BITS);
        } else {
            *w &= !(1 << (j % BITS));
        }
    }

    fn row_xor_into(&mut self, target: usize, source: usize) {
        let (t, s) = (target * self.words_per_row, source * self.words_per_row);
        for k in 0..self.words_per_row {
            let w = self.data[s + k];
            self.data[t + k] ^= w;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words_per_row {
            self.data.swap(a * self.words_per_row + k, b * self.words_per_row + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    /// Entrywise sum (XOR).
    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Gf2Error::DimensionMismatch {
                lr: self.rows,
                lc: self.cols,
                rr: other.rows,
                rc: other.cols,
            });
        }
        let mut out = self.clone();
        for (w, o) in out.data.iter_mut().zip(&other.data) {
            *w ^= o;
        }
        Ok(out)
    }

    /// Matrix product over F2 (XOR-accumulated AND).
    pub fn matmul(&self, rhs: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.cols != rhs.rows {
            return Err(Gf2Error::DimensionMismatch {
                lr: self.rows,
                lc: self.cols,
                rr: rhs.rows,
                rc: rhs.cols,
            });
        }
        let mut out = BitMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let t = i * out.words_per_row;
                    let s = k * rhs.words_per_row;
                    for w in 0..out.words_per_row {
                        out.data[t + w] ^= rhs.data[s + w];
                    }
                }
            }
        }
        out.rows = self.rows;
        Ok(out)
    }

    /// `self * rhs`, panicking on shape mismatch. Convenience for internal
    /// call sites where shapes are known by construction.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        self.matmul(rhs).expect("shape mismatch")
    }

    pub fn pow(&self, mut e: usize) -> BitMatrix {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc = BitMatrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Row rank via Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c)) else { continue };
            m.swap_rows(r, piv);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.row_xor_into(i, r);
                }
            }
            r += 1;
            if r == m.rows {
                break;
            }
        }
        r
    }

    /// Basis of the right kernel `{v : Mv = 0}`, one basis vector per row of
    /// the returned matrix. The basis has `cols - rank` rows.
    pub fn kernel_basis(&self) -> BitMatrix {
        let mut m = self.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c)) else { continue };
            m.swap_rows(r, piv);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.row_xor_into(i, r);
                }
            }
            pivots.push((r, c));
            r += 1;
            if r == m.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> = (0..m.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = BitMatrix::zero(free_cols.len(), self.cols);
        for (k, &f) in free_cols.iter().enumerate() {
            basis.set(k, f, true);
            for &(row, c) in &pivots {
                if m.get(row, f) {
                    basis.set(k, c, true);
                }
            }
        }
        basis
    }

    /// Reduced row-echelon basis of the row space, zero rows dropped.
    pub fn echelon_rows(&self) -> BitMatrix {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c)) else { continue };
            m.swap_rows(r, piv);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.row_xor_into(i, r);
                }
            }
            r += 1;
            if r == m.rows {
                break;
            }
        }
        BitMatrix::from_fn(r, self.cols, |i, j| m.get(i, j))
    }

    /// Block-diagonal assembly; the empty list yields the 0x0 matrix.
    pub fn direct_sum(blocks: &[BitMatrix]) -> BitMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = BitMatrix::zero(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    if b.get(i, j) {
                        out.set(ro + i, co + j, true);
                    }
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Inverse of a square invertible matrix; `None` when singular.
    pub fn inverse(&self) -> Option<BitMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = BitMatrix::identity(n);
        let mut r = 0;
        for c in 0..n {
            let Some(piv) = (r..n).find(|&i| m.get(i, c)) else { return None };
            m.swap_rows(r, piv);
            inv.swap_rows(r, piv);
            for i in 0..n {
                if i != r && m.get(i, c) {
                    m.row_xor_into(i, r);
                    inv.row_xor_into(i, r);
                }
            }
            r += 1;
        }
        Some(inv)
    }

    /// Deterministic-under-seed uniform random matrix.
    pub fn random(rows: usize, cols: usize, seed: u64) -> BitMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(rows, cols, &mut rng)
    }

    pub fn random_with(rows: usize, cols: usize, rng: &mut impl Rng) -> BitMatrix {
        let mut m = Self::zero(rows, cols);
        for w in m.data.iter_mut() {
            *w = rng.gen();
        }
        // clear padding bits so whole-word equality stays valid
        if cols % BITS != 0 && m.words_per_row > 0 {
            let mask = (1u64 << (cols % BITS)) - 1;
            for i in 0..rows {
                m.data[i * m.words_per_row + m.words_per_row - 1] &= mask;
            }
        }
        m
    }

    /// Invertible n x n matrix by rejection sampling, deterministic under
    /// `seed`.
    pub fn random_invertible(n: usize, seed: u64) -> BitMatrix {
        assert!(n >= 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let m = Self::random_with(n, n, &mut rng);
            if m.rank() == n {
                return m;
            }
        }
    }

    /// Rows rendered as '0'/'1' strings, the inverse of [`BitMatrix::from_rows`].
    pub fn to_row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect())
            .collect()
    }

    /// Treats row `i` of `other` as a vector and computes `self * v^T` as a
    /// single-row matrix. Used for kernel-membership checks in tests.
    pub fn apply_to_row(&self, other: &BitMatrix, i: usize) -> BitMatrix {
        let v = BitMatrix::from_fn(self.cols, 1, |r, _| other.get(i, r));
        self.mul(&v)
    }

    /// Rows of `self` and `other` stacked vertically.
    pub fn vstack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        BitMatrix::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j)
            } else {
                other.get(i - self.rows, j)
            }
        })
    }

    /// Solves `x * basis = v` for a row vector `v` (given as row `i` of
    /// `from`), i.e. expresses `v` in the row space of `basis`.
    /// Returns `None` when `v` is outside the row space.
    pub fn row_coords_in(basis: &BitMatrix, from: &BitMatrix, i: usize) -> Option<Vec<bool>> {
        // Eliminate [basis | I], then reduce v by the same operations.
        let k = basis.rows;
        let mut aug = BitMatrix::from_fn(k, basis.cols + k, |r, c| {
            if c < basis.cols {
                basis.get(r, c)
            } else {
                c - basis.cols == r
            }
        });
        let mut v = BitMatrix::from_fn(1, basis.cols + k, |_, c| c < basis.cols && from.get(i, c));
        let mut r = 0;
        for c in 0..basis.cols {
            let Some(piv) = (r..k).find(|&x| aug.get(x, c)) else { continue };
            aug.swap_rows(r, piv);
            for x in 0..k {
                if x != r && aug.get(x, c) {
                    aug.row_xor_into(x, r);
                }
            }
            if v.get(0, c) {
                for cc in 0..aug.cols() {
                    let b = v.get(0, cc) ^ aug.get(r, cc);
                    v.set(0, cc, b);
                }
            }
            r += 1;
            if r == k {
                break;
            }
        }
        if (0..basis.cols).any(|c| v.get(0, c)) {
            return None;
        }
        Some((0..k).map(|c| v.get(0, basis.cols + c)).collect())
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for s in self.to_row_strings() {
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, s) in self.to_row_strings().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
