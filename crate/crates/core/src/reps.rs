//! F2 representations of the binary dihedral group of order 12.
//!
//! A representation is stored as the pair of matrices `A = rho(a)`,
//! `B = rho(b)`. Six indecomposables exist over F2: the four pullbacks
//! `V1..V4` of the cyclic-group indecomposables along the quotient by the
//! normal subgroup of order 3, the two-dimensional irreducible `D`, and a
//! faithful four-dimensional module `U4`. [`GammaRep::classify`] extracts
//! the Krull–Schmidt multiplicities of any representation from rank
//! profiles, without constructing explicit isomorphisms.

use crate::gamma::GammaElement;
use crate::gf2::BitMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("matrices must be square and of equal size, got {a_rows}x{a_cols} and {b_rows}x{b_cols}")]
    BadShape { a_rows: usize, a_cols: usize, b_rows: usize, b_cols: usize },
    #[error("relation {relation} fails")]
    RelationViolated { relation: &'static str },
    #[error("matrix {which} is not invertible")]
    NotInvertible { which: &'static str },
    #[error("internal inconsistency in classification: {0}")]
    Inconsistent(String),
    #[error("cannot parse {0:?} as a sum of indecomposables")]
    ParseSum(String),
    #[error("bad representation input: {0}")]
    BadInput(String),
}

/// A representation, stored as `A = rho(a)` and `B = rho(b)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaRep {
    dim: usize,
    a: BitMatrix,
    b: BitMatrix,
}

/// Trichotomy for the obstruction endomorphism `(I + A^2 + A^4) B`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum M0Class {
    Zero,
    Identity,
    Other,
}

/// The six indecomposable representations.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Indecomposable {
    V1,
    V2,
    V3,
    V4,
    D,
    U4,
}

impl Indecomposable {
    pub const ALL: [Indecomposable; 6] = [
        Indecomposable::V1,
        Indecomposable::V2,
        Indecomposable::V3,
        Indecomposable::V4,
        Indecomposable::D,
        Indecomposable::U4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Indecomposable::V1 => "V1",
            Indecomposable::V2 => "V2",
            Indecomposable::V3 => "V3",
            Indecomposable::V4 => "V4",
            Indecomposable::D => "D",
            Indecomposable::U4 => "U4",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Indecomposable::V1 => 1,
            Indecomposable::V2 => 2,
            Indecomposable::V3 => 3,
            Indecomposable::V4 => 4,
            Indecomposable::D => 2,
            Indecomposable::U4 => 4,
        }
    }

    pub fn parse(s: &str) -> Option<Indecomposable> {
        match s.trim().to_ascii_uppercase().as_str() {
            "V1" => Some(Indecomposable::V1),
            "V2" => Some(Indecomposable::V2),
            "V3" => Some(Indecomposable::V3),
            "V4" => Some(Indecomposable::V4),
            "D" => Some(Indecomposable::D),
            "U4" => Some(Indecomposable::U4),
            _ => None,
        }
    }
}

/// Named composite representations used in the computations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Composite {
    /// The eight-dimensional module on which `b` cyclically permutes four
    /// two-dimensional blocks; decomposes as two copies of `U4`.
    U8,
    /// The left regular representation on the group algebra.
    Regular,
    /// The conjugation action `g . e_h = e_{g h g^{-1}}` on the group
    /// algebra.
    Conjugation,
}

/// Krull–Schmidt multiplicities
/// `V1^k1 + V2^k2 + V3^k3 + V4^k4 + D^m + U4^n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Multiplicities {
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
    pub k4: usize,
    pub m: usize,
    pub n: usize,
}

impl Multiplicities {
    pub fn new(k1: usize, k2: usize, k3: usize, k4: usize, m: usize, n: usize) -> Self {
        Multiplicities { k1, k2, k3, k4, m, n }
    }

    pub fn dim(&self) -> usize {
        self.k1 + 2 * self.k2 + 3 * self.k3 + 4 * self.k4 + 2 * self.m + 4 * self.n
    }

    pub fn total(&self) -> usize {
        self.k1 + self.k2 + self.k3 + self.k4 + self.m + self.n
    }

    pub fn k(&self, i: usize) -> usize {
        match i {
            1 => self.k1,
            2 => self.k2,
            3 => self.k3,
            4 => self.k4,
            _ => panic!("k index out of range"),
        }
    }

    pub fn pieces(&self) -> Vec<(Indecomposable, usize)> {
        [
            (Indecomposable::V1, self.k1),
            (Indecomposable::V2, self.k2),
            (Indecomposable::V3, self.k3),
            (Indecomposable::V4, self.k4),
            (Indecomposable::D, self.m),
            (Indecomposable::U4, self.n),
        ]
        .into_iter()
        .filter(|&(_, k)| k > 0)
        .collect()
    }

    /// Parses the symbolic sum syntax, e.g. `"V1*2+D+U4"`.
    pub fn parse(s: &str) -> Result<Multiplicities, RepError> {
        let mut out = Multiplicities::default();
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(out);
        }
        for term in t.split('+') {
            let term = term.trim();
            let (name, count) = match term.split_once('*') {
                Some((n, c)) => {
                    (n, c.trim().parse::<usize>().map_err(|_| RepError::ParseSum(s.into()))?)
                }
                None => (term, 1),
            };
            let piece =
                Indecomposable::parse(name).ok_or_else(|| RepError::ParseSum(s.into()))?;
            match piece {
                Indecomposable::V1 => out.k1 += count,
                Indecomposable::V2 => out.k2 += count,
                Indecomposable::V3 => out.k3 += count,
                Indecomposable::V4 => out.k4 += count,
                Indecomposable::D => out.m += count,
                Indecomposable::U4 => out.n += count,
            }
        }
        Ok(out)
    }

    /// Deterministic random multiplicities with `1..=max_total` summands.
    pub fn random(seed: u64, max_total: usize) -> Multiplicities {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let total = rng.gen_range(1..=max_total.max(1));
        let mut out = Multiplicities::default();
        for _ in 0..total {
            match rng.gen_range(0..6) {
                0 => out.k1 += 1,
                1 => out.k2 += 1,
                2 => out.k3 += 1,
                3 => out.k4 += 1,
                4 => out.m += 1,
                _ => out.n += 1,
            }
        }
        out
    }
}

impl fmt::Display for Multiplicities {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = self.pieces();
        if pieces.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, k) in pieces {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{}", p.name())?;
            } else {
                write!(f, "{}*{}", p.name(), k)?;
            }
        }
        Ok(())
    }
}

/// On-disk representation input: either explicit matrices or a symbolic sum.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum RepInput {
    Explicit { dim: usize, a: Vec<String>, b: Vec<String> },
    Sum { sum: BTreeMap<String, usize> },
}

impl RepInput {
    pub fn build(&self) -> Result<GammaRep, RepError> {
        match self {
            RepInput::Explicit { dim, a, b } => {
                let ra: Vec<&str> = a.iter().map(|s| s.as_str()).collect();
                let rb: Vec<&str> = b.iter().map(|s| s.as_str()).collect();
                let ma = BitMatrix::from_rows(&ra).map_err(|e| RepError::BadInput(e.to_string()))?;
                let mb = BitMatrix::from_rows(&rb).map_err(|e| RepError::BadInput(e.to_string()))?;
                if ma.rows() != *dim {
                    return Err(RepError::BadInput(format!(
                        "declared dim {dim} but matrix a has {} rows",
                        ma.rows()
                    )));
                }
                GammaRep::new(ma, mb)
            }
            RepInput::Sum { sum } => {
                let mut mults = Multiplicities::default();
                for (name, &count) in sum {
                    match Indecomposable::parse(name) {
                        Some(Indecomposable::V1) => mults.k1 += count,
                        Some(Indecomposable::V2) => mults.k2 += count,
                        Some(Indecomposable::V3) => mults.k3 += count,
                        Some(Indecomposable::V4) => mults.k4 += count,
                        Some(Indecomposable::D) => mults.m += count,
                        Some(Indecomposable::U4) => mults.n += count,
                        None => return Err(RepError::BadInput(format!("unknown summand {name:?}"))),
                    }
                }
                Ok(build_from(&mults))
            }
        }
    }
}

impl GammaRep {
    /// Validates the defining relations `A^6 = I`, `B^2 = A^3`,
    /// `A B A = B` and wraps the matrices.
    pub fn new(a: BitMatrix, b: BitMatrix) -> Result<GammaRep, RepError> {
        if a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() {
            return Err(RepError::BadShape {
                a_rows: a.rows(),
                a_cols: a.cols(),
                b_rows: b.rows(),
                b_cols: b.cols(),
            });
        }
        let dim = a.rows();
        if a.inverse().is_none() {
            return Err(RepError::NotInvertible { which: "a" });
        }
        if b.inverse().is_none() {
            return Err(RepError::NotInvertible { which: "b" });
        }
        if !a.pow(6).is_identity() {
            return Err(RepError::RelationViolated { relation: "a^6 = e" });
        }
        if b.pow(2) != a.pow(3) {
            return Err(RepError::RelationViolated { relation: "b^2 = a^3" });
        }
        if a.mul(&b).mul(&a) != b {
            return Err(RepError::RelationViolated { relation: "ab = ba^{-1}" });
        }
        Ok(GammaRep { dim, a, b })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn a(&self) -> &BitMatrix {
        &self.a
    }

    pub fn b(&self) -> &BitMatrix {
        &self.b
    }

    /// The image `rho(a^i b^j)`.
    pub fn rho(&self, g: GammaElement) -> BitMatrix {
        let (i, j) = g.exponents();
        let mut m = self.a.pow(i as usize);
        if j == 1 {
            m = m.mul(&self.b);
        }
        m
    }

    /// Obstruction endomorphism `(I + A^2 + A^4) B` at the basepoint.
    pub fn m0(&self) -> BitMatrix {
        let a2 = self.a.pow(2);
        let a4 = self.a.pow(4);
        BitMatrix::identity(self.dim).add(&a2).unwrap().add(&a4).unwrap().mul(&self.b)
    }

    /// Exact trichotomy on [`GammaRep::m0`].
    pub fn m0_class(&self) -> M0Class {
        let m0 = self.m0();
        if m0.is_zero() {
            M0Class::Zero
        } else if m0.is_identity() {
            M0Class::Identity
        } else {
            M0Class::Other
        }
    }

    /// Splits the module into the part fixed by the order-3 normal subgroup
    /// and its complement: bases of `ker(C + I)` and `ker(I + C + C^2)` for
    /// `C = A^2`, returned as rows.
    pub fn c3_split(&self) -> (BitMatrix, BitMatrix) {
        let c = self.a.pow(2);
        let i = BitMatrix::identity(self.dim);
        let fixed = c.add(&i).unwrap().kernel_basis();
        let moving = i.add(&c).unwrap().add(&c.pow(2)).unwrap().kernel_basis();
        debug_assert_eq!(fixed.rows() + moving.rows(), self.dim);
        (fixed, moving)
    }

    /// Krull–Schmidt multiplicities via rank profiles.
    ///
    /// On the fixed part of the order-3 subgroup the module is a module over
    /// the cyclic group of order 4 via `b`, and the Jordan partition of
    /// `B + I` gives `k1..k4`. On the moving part only `D` and `U4` occur;
    /// restricted to `<b>` they contribute nilpotent blocks of sizes 2 and 4,
    /// so `n = rank((B+I)^2)/2` and `m` follows from the dimension. The
    /// cross-checks turn any violation of these facts into an error instead
    /// of a wrong answer.
    pub fn classify(&self) -> Result<Multiplicities, RepError> {
        let (fixed, moving) = self.c3_split();
        if fixed.rows() + moving.rows() != self.dim {
            return Err(RepError::Inconsistent(format!(
                "c3 split dims {} + {} != {}",
                fixed.rows(),
                moving.rows(),
                self.dim
            )));
        }
        let i = BitMatrix::identity(self.dim);
        let nb = self.b.add(&i).unwrap();

        // fixed part: Jordan partition of B + I restricted
        let nb_fixed = restrict_to_row_basis(&nb, &fixed).ok_or_else(|| {
            RepError::Inconsistent("fixed part not preserved by b".to_string())
        })?;
        let mut r = [0usize; 6];
        r[0] = fixed.rows();
        for j in 1..=4 {
            r[j] = nb_fixed.pow(j).rank();
        }
        if r[4] != 0 {
            return Err(RepError::Inconsistent("(B+I)^4 nonzero on fixed part".to_string()));
        }
        let mut k = [0usize; 5];
        for idx in 1..=4 {
            let val = r[idx - 1] as i64 - 2 * r[idx] as i64 + r[idx + 1] as i64;
            if val < 0 {
                return Err(RepError::Inconsistent(format!("negative multiplicity k{idx}")));
            }
            k[idx] = val as usize;
        }
        if k[1] + 2 * k[2] + 3 * k[3] + 4 * k[4] != fixed.rows() {
            return Err(RepError::Inconsistent("fixed-part dimension mismatch".to_string()));
        }

        // moving part: D and U4 only
        let nb_moving = restrict_to_row_basis(&nb, &moving).ok_or_else(|| {
            RepError::Inconsistent("moving part not preserved by b".to_string())
        })?;
        let w = moving.rows();
        let r2 = nb_moving.pow(2).rank();
        if r2 % 2 != 0 {
            return Err(RepError::Inconsistent("odd rank((B+I)^2) on moving part".to_string()));
        }
        let n = r2 / 2;
        if w < 4 * n || (w - 4 * n) % 2 != 0 {
            return Err(RepError::Inconsistent("moving-part dimension mismatch".to_string()));
        }
        let m = (w - 4 * n) / 2;
        if nb_moving.rank() != m + 3 * n {
            return Err(RepError::Inconsistent(format!(
                "rank((B+I)|_W) = {} but m + 3n = {}",
                nb_moving.rank(),
                m + 3 * n
            )));
        }
        if nb_moving.pow(3).rank() != n {
            return Err(RepError::Inconsistent("rank((B+I)^3|_W) != n".to_string()));
        }
        let mults = Multiplicities::new(k[1], k[2], k[3], k[4], m, n);
        if mults.dim() != self.dim {
            return Err(RepError::Inconsistent("total dimension mismatch".to_string()));
        }
        Ok(mults)
    }

    /// Echelonized basis of the span of the twelve images `rho(g)` inside
    /// the flattened endomorphism space, one basis vector per row.
    pub fn monodromy_basis(&self) -> BitMatrix {
        let mut stack = BitMatrix::zero(0, self.dim * self.dim);
        for g in GammaElement::all() {
            stack = stack.vstack(&flatten(&self.rho(g)));
        }
        stack.echelon_rows()
    }
}

/// Builds the indecomposable representation with the given name.
pub fn indecomposable(name: Indecomposable) -> GammaRep {
    let rep = match name {
        Indecomposable::V1 => {
            GammaRep::new(BitMatrix::identity(1), BitMatrix::identity(1))
        }
        Indecomposable::V2 | Indecomposable::V3 | Indecomposable::V4 => {
            // pullback of F2[b]/(b+1)^i along the order-4 quotient: a acts as b^2
            let d = name.dim();
            let b = BitMatrix::from_fn(d, d, |i, j| i == j || j == i + 1);
            GammaRep::new(b.pow(2), b)
        }
        Indecomposable::D => GammaRep::new(
            BitMatrix::from_rows(&["01", "11"]).unwrap(),
            BitMatrix::from_rows(&["01", "10"]).unwrap(),
        ),
        Indecomposable::U4 => {
            // basis {1, c, x, cx}; c is the cyclic action on each pair,
            // b fixes 1, swaps c and c^2, and sends x to 1 + cx;
            // a is recovered as b^2 c^2 since a^3 = b^2 and a^2 = c.
            let b = BitMatrix::from_rows(&["1111", "0101", "0001", "0010"]).unwrap();
            let c = BitMatrix::from_rows(&["0100", "1100", "0001", "0011"]).unwrap();
            GammaRep::new(b.pow(2).mul(&c.pow(2)), b)
        }
    };
    rep.expect("built-in representation satisfies the relations")
}

/// Builds one of the named composite representations.
pub fn named_composite(name: Composite) -> GammaRep {
    let rep = match name {
        Composite::U8 => {
            // four pairs (x^i, c x^i); b sends the i-th pair into the
            // (i+1)-st by [[1,1],[0,1]]; c acts as [[0,1],[1,1]] on each pair
            let c = BitMatrix::direct_sum(&vec![
                BitMatrix::from_rows(&["01", "11"]).unwrap();
                4
            ]);
            let mut b = BitMatrix::zero(8, 8);
            for blk in 0..4 {
                let t = 2 * ((blk + 1) % 4);
                let s = 2 * blk;
                b.set(t, s, true);
                b.set(t, s + 1, true);
                b.set(t + 1, s + 1, true);
            }
            GammaRep::new(b.pow(2).mul(&c.pow(2)), b)
        }
        Composite::Regular => {
            let perm = |g: GammaElement| {
                BitMatrix::from_fn(12, 12, |i, j| {
                    g.multiply(GammaElement::from_index(j)).index() == i
                })
            };
            GammaRep::new(perm(GammaElement::A), perm(GammaElement::B))
        }
        Composite::Conjugation => {
            let perm = |g: GammaElement| {
                BitMatrix::from_fn(12, 12, |i, j| {
                    g.multiply(GammaElement::from_index(j)).multiply(g.inverse()).index() == i
                })
            };
            GammaRep::new(perm(GammaElement::A), perm(GammaElement::B))
        }
    };
    rep.expect("built-in representation satisfies the relations")
}

/// Block-diagonal direct sum; the empty list gives the zero-dimensional
/// representation.
pub fn direct_sum_rep(reps: &[GammaRep]) -> GammaRep {
    let a = BitMatrix::direct_sum(&reps.iter().map(|r| r.a.clone()).collect::<Vec<_>>());
    let b = BitMatrix::direct_sum(&reps.iter().map(|r| r.b.clone()).collect::<Vec<_>>());
    GammaRep { dim: a.rows(), a, b }
}

/// Basis change `A -> P A P^{-1}`, `B -> P B P^{-1}`.
pub fn conjugate_rep(rep: &GammaRep, p: &BitMatrix) -> Result<GammaRep, RepError> {
    if p.rows() != rep.dim || p.cols() != rep.dim {
        return Err(RepError::BadShape {
            a_rows: p.rows(),
            a_cols: p.cols(),
            b_rows: rep.dim,
            b_cols: rep.dim,
        });
    }
    let pinv = p.inverse().ok_or(RepError::NotInvertible { which: "p" })?;
    Ok(GammaRep {
        dim: rep.dim,
        a: p.mul(&rep.a).mul(&pinv),
        b: p.mul(&rep.b).mul(&pinv),
    })
}

/// Builds the direct sum prescribed by the multiplicities.
pub fn build_from(mults: &Multiplicities) -> GammaRep {
    let mut parts = Vec::new();
    for (piece, count) in mults.pieces() {
        for _ in 0..count {
            parts.push(indecomposable(piece));
        }
    }
    direct_sum_rep(&parts)
}

/// Enumerates every valid pair `(A, B)` of the given dimension (1 to 3) by
/// brute force, filtering on `B^4 = I` first.
pub fn enumerate_valid_reps(dim: usize) -> Vec<GammaRep> {
    assert!((1..=3).contains(&dim), "enumeration is desk-scale only up to dim 3");
    let n2 = dim * dim;
    let all: Vec<BitMatrix> = (0u32..1 << n2)
        .map(|bits| BitMatrix::from_fn(dim, dim, |i, j| bits >> (i * dim + j) & 1 == 1))
        .collect();
    let bs: Vec<&BitMatrix> = all.iter().filter(|b| b.pow(4).is_identity()).collect();
    let mut out = Vec::new();
    for b in bs {
        for a in &all {
            if let Ok(rep) = GammaRep::new(a.clone(), b.clone()) {
                out.push(rep);
            }
        }
    }
    out
}

/// Flattens a matrix to a single row, column-major: entry `(p, q)` goes to
/// position `q * rows + p`.
pub fn flatten(m: &BitMatrix) -> BitMatrix {
    let (r, c) = (m.rows(), m.cols());
    BitMatrix::from_fn(1, r * c, |_, k| m.get(k % r, k / r))
}

/// Inverse of [`flatten`] for an `r1 x r0` matrix.
pub fn unflatten(v: &BitMatrix, row: usize, r1: usize, r0: usize) -> BitMatrix {
    BitMatrix::from_fn(r1, r0, |p, q| v.get(row, q * r1 + p))
}

/// Expresses the action of `op` (acting on column vectors) in the row basis
/// `basis`; returns `None` when the row space is not invariant. Entry
/// `(i, j)` of the result is the coefficient of basis row `i` in
/// `op * basis_j`.
pub fn restrict_to_row_basis(op: &BitMatrix, basis: &BitMatrix) -> Option<BitMatrix> {
    let k = basis.rows();
    let mut out = BitMatrix::zero(k, k);
    for j in 0..k {
        let img = op.apply_to_row(basis, j); // column vector
        let img_row = img.transpose();
        let coords = BitMatrix::row_coords_in(basis, &img_row, 0)?;
        for (i, &c) in coords.iter().enumerate() {
            if c {
                out.set(i, j, true);
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_rep_examples() {
        assert!(GammaRep::new(BitMatrix::identity(1), BitMatrix::identity(1)).is_ok());
        let d = indecomposable(Indecomposable::D);
        assert_eq!(d.a(), &BitMatrix::from_rows(&["01", "11"]).unwrap());
        assert_eq!(d.b(), &BitMatrix::from_rows(&["01", "10"]).unwrap());
        // V2 with a = I
        let v2 = GammaRep::new(
            BitMatrix::identity(2),
            BitMatrix::from_rows(&["11", "01"]).unwrap(),
        );
        assert!(v2.is_ok());
        assert_eq!(indecomposable(Indecomposable::V2), v2.unwrap());
    }

    #[test]
    fn make_rep_names_failing_relation() {
        // b^2 = I != a^3 when a has order 6... use a = permutation of order 6? dim 2 has none;
        // instead: a = I, b with b^2 != I
        let a = BitMatrix::identity(3);
        let b = BitMatrix::from_rows(&["110", "011", "001"]).unwrap();
        let err = GammaRep::new(a, b).unwrap_err();
        assert_eq!(err, RepError::RelationViolated { relation: "b^2 = a^3" });
    }

    #[test]
    fn indecomposables_have_expected_dims() {
        for piece in Indecomposable::ALL {
            let rep = indecomposable(piece);
            assert_eq!(rep.dim(), piece.dim(), "{piece:?}");
        }
    }

    #[test]
    fn u4_restricted_to_b_is_free() {
        // rank profile of (B+I)^j must be 3, 2, 1, 0
        let u4 = indecomposable(Indecomposable::U4);
        let nb = u4.b().add(&BitMatrix::identity(4)).unwrap();
        let profile: Vec<usize> = (1..=4).map(|j| nb.pow(j).rank()).collect();
        assert_eq!(profile, vec![3, 2, 1, 0]);
    }

    #[test]
    fn regular_rep_is_permutation() {
        let reg = named_composite(Composite::Regular);
        assert_eq!(reg.dim(), 12);
        assert!(reg.a().pow(6).is_identity());
        for g in GammaElement::all() {
            let m = reg.rho(g);
            // permutation matrix: single 1 per row and column
            for i in 0..12 {
                assert_eq!((0..12).filter(|&j| m.get(i, j)).count(), 1);
                assert_eq!((0..12).filter(|&j| m.get(j, i)).count(), 1);
            }
        }
    }

    #[test]
    fn rho_is_homomorphism_for_u4() {
        let rep = indecomposable(Indecomposable::U4);
        for x in GammaElement::all() {
            for y in GammaElement::all() {
                assert_eq!(rep.rho(x.multiply(y)), rep.rho(x).mul(&rep.rho(y)));
            }
        }
    }

    #[test]
    fn m0_examples() {
        assert!(indecomposable(Indecomposable::V1).m0().is_identity());
        assert!(indecomposable(Indecomposable::D).m0().is_zero());
        let v2 = indecomposable(Indecomposable::V2);
        assert_eq!(v2.m0(), *v2.b());
    }

    #[test]
    fn m0_class_trichotomy() {
        assert_eq!(indecomposable(Indecomposable::D).m0_class(), M0Class::Zero);
        let v1v1 = build_from(&Multiplicities::parse("V1*2").unwrap());
        assert_eq!(v1v1.m0_class(), M0Class::Identity);
        assert_eq!(indecomposable(Indecomposable::V3).m0_class(), M0Class::Other);
    }

    #[test]
    fn m0_is_conjugation_invariant() {
        for piece in Indecomposable::ALL {
            let rep = indecomposable(piece);
            let m0 = rep.m0();
            for g in GammaElement::all() {
                let r = rep.rho(g);
                let conj = r.inverse().unwrap().mul(&m0).mul(&r);
                assert_eq!(conj, m0, "{piece:?} at {g}");
            }
        }
    }

    #[test]
    fn c3_split_examples() {
        let (f, w) = indecomposable(Indecomposable::V4).c3_split();
        assert_eq!((f.rows(), w.rows()), (4, 0));
        let (f, w) = indecomposable(Indecomposable::D).c3_split();
        assert_eq!((f.rows(), w.rows()), (0, 2));
        let rep = direct_sum_rep(&[
            indecomposable(Indecomposable::V2),
            indecomposable(Indecomposable::U4),
        ]);
        let (f, w) = rep.c3_split();
        assert_eq!((f.rows(), w.rows()), (2, 4));
    }

    #[test]
    fn classify_indecomposables() {
        let expected = [
            (Indecomposable::V1, Multiplicities::new(1, 0, 0, 0, 0, 0)),
            (Indecomposable::V2, Multiplicities::new(0, 1, 0, 0, 0, 0)),
            (Indecomposable::V3, Multiplicities::new(0, 0, 1, 0, 0, 0)),
            (Indecomposable::V4, Multiplicities::new(0, 0, 0, 1, 0, 0)),
            (Indecomposable::D, Multiplicities::new(0, 0, 0, 0, 1, 0)),
            (Indecomposable::U4, Multiplicities::new(0, 0, 0, 0, 0, 1)),
        ];
        for (piece, want) in expected {
            assert_eq!(indecomposable(piece).classify().unwrap(), want, "{piece:?}");
        }
    }

    #[test]
    fn classify_regular_and_u8() {
        let reg = named_composite(Composite::Regular).classify().unwrap();
        assert_eq!(reg, Multiplicities::new(0, 0, 0, 1, 0, 2));
        let u8m = named_composite(Composite::U8).classify().unwrap();
        assert_eq!(u8m, Multiplicities::new(0, 0, 0, 0, 0, 2));
    }

    #[test]
    fn classify_is_basis_invariant() {
        let rep = direct_sum_rep(&[
            indecomposable(Indecomposable::V2),
            indecomposable(Indecomposable::D),
        ]);
        for seed in 0..10u64 {
            let p = BitMatrix::random_invertible(rep.dim(), seed);
            let conj = conjugate_rep(&rep, &p).unwrap();
            assert_eq!(conj.classify().unwrap(), Multiplicities::new(0, 1, 0, 0, 1, 0));
        }
    }

    #[test]
    fn classify_fuzz_mixed_sum() {
        let rep = direct_sum_rep(&[
            indecomposable(Indecomposable::V1),
            indecomposable(Indecomposable::V3),
            indecomposable(Indecomposable::D),
            indecomposable(Indecomposable::U4),
        ]);
        let p = BitMatrix::random_invertible(rep.dim(), 99);
        let conj = conjugate_rep(&rep, &p).unwrap();
        assert_eq!(conj.classify().unwrap(), Multiplicities::new(1, 0, 1, 0, 1, 1));
    }

    #[test]
    fn monodromy_dimensions() {
        assert_eq!(indecomposable(Indecomposable::V1).monodromy_basis().rows(), 1);
        assert_eq!(indecomposable(Indecomposable::D).monodromy_basis().rows(), 4);
        assert_eq!(named_composite(Composite::Regular).monodromy_basis().rows(), 12);
    }

    #[test]
    fn sum_syntax_round_trip() {
        let m = Multiplicities::parse("V1*2+D+U4").unwrap();
        assert_eq!(m, Multiplicities::new(2, 0, 0, 0, 1, 1));
        assert_eq!(Multiplicities::parse(&m.to_string()).unwrap(), m);
        assert_eq!(build_from(&m).dim(), m.dim());
        assert!(Multiplicities::parse("V9").is_err());
    }

    #[test]
    fn rep_input_json() {
        let explicit: RepInput = serde_json::from_str(
            r#"{"dim": 2, "a": ["01","11"], "b": ["01","10"]}"#,
        )
        .unwrap();
        assert_eq!(explicit.build().unwrap(), indecomposable(Indecomposable::D));
        let sum: RepInput = serde_json::from_str(r#"{"sum": {"D": 1, "V2": 1}}"#).unwrap();
        let rep = sum.build().unwrap();
        assert_eq!(rep.classify().unwrap(), Multiplicities::new(0, 1, 0, 0, 1, 0));
    }

    #[test]
    fn exhaustive_low_dimensions() {
        // every valid pair in dims 1-3 classifies into {V1, V2, V3, D}
        for dim in 1..=3 {
            for rep in enumerate_valid_reps(dim) {
                let m = rep.classify().unwrap();
                assert_eq!(m.k4, 0);
                assert_eq!(m.n, 0);
                assert_eq!(m.dim(), dim);
                // reconstruction has matching rank profiles
                let rebuilt = build_from(&m);
                let i = BitMatrix::identity(dim);
                let nb = rep.b().add(&i).unwrap();
                let nb2 = rebuilt.b().add(&i).unwrap();
                for j in 1..=4 {
                    assert_eq!(nb.pow(j).rank(), nb2.pow(j).rank());
                }
                let nc = rep.a().pow(2).add(&i).unwrap();
                let nc2 = rebuilt.a().pow(2).add(&i).unwrap();
                assert_eq!(nc.rank(), nc2.rank());
            }
        }
    }
}
