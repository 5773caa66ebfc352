//! Assembly of the pearl-complex differentials for the Chiang Lagrangian.
//!
//! The Z/2-graded complex has eight generators: the even ones are the
//! minimum and the three index-2 critical points (in the order
//! `[m', x_1, x_2, x_3]`), the odd ones the three index-1 points and the
//! maximum (`[x'_1, x'_2, x'_3, m]`). Each generator carries a copy of
//! `Hom(E0, E1)` of the two local systems at that point, flattened
//! column-major. Every differential term has the form
//! `alpha -> rho_1(g) alpha rho_0(h)` for a pair of group elements read off
//! the transport table: gradient flowlines contribute conjugation terms
//! `(g^{-1}, g)`, disc boundary halves contribute their two transports.

use crate::gamma::GammaElement;
use crate::gf2::BitMatrix;
use crate::reps::GammaRep;
use crate::table::transport;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PearlError {
    #[error("monodromy restriction needs E0 == E1 (same matrices)")]
    MonodromyNeedsEqualReps,
    #[error("subcomplex closure violated at {selector:?}, target block {block}")]
    ClosureViolation { selector: Selector, block: usize },
    #[error("differential does not square to zero on an unobstructed restriction")]
    DSquaredNonzero,
}

/// Which subcomplex to compute in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Selector {
    Full,
    Central,
    Monodromy,
}

/// Floer cohomology outcome: either the complex is obstructed (the
/// invariant is set to zero by convention, but the marker is kept
/// distinct), or the pair of Z/2-graded ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FloerOutcome {
    Obstructed,
    Ranks(usize, usize),
}

/// The pearl complex of a pair of local systems.
#[derive(Clone, Debug)]
pub struct PearlComplex {
    e0: GammaRep,
    e1: GammaRep,
    d0: BitMatrix,
    d1: BitMatrix,
}

struct Term {
    tgt: usize,
    src: usize,
    left: GammaElement,
    right: GammaElement,
}

fn conj(tgt: usize, src: usize, g: GammaElement) -> Term {
    Term { tgt, src, left: g.inverse(), right: g }
}

fn disc(tgt: usize, src: usize, gamma1: GammaElement, gamma0: GammaElement) -> Term {
    Term { tgt, src, left: gamma1, right: gamma0 }
}

/// Morse terms of the map from the minimum to the index-1 blocks.
fn morse_min_terms() -> Vec<Term> {
    let mut t = Vec::new();
    for i in 0..3 {
        t.push(conj(i, 0, GammaElement::IDENTITY));
        t.push(conj(i, 0, transport(&format!("gamma~'_{}", i + 1))));
    }
    t
}

/// Morse terms from the index-1 blocks to the index-2 blocks (the twelve
/// middle flowlines; flowline `delta_ij` runs from `x_i` to `x'_j`).
fn morse_mid_terms() -> Vec<Term> {
    let mut t = Vec::new();
    for (name, i, j) in [
        ("delta_11", 0, 0),
        ("delta_21", 1, 0),
        ("delta_31", 2, 0),
        ("delta~_31", 2, 0),
        ("delta_12", 0, 1),
        ("delta~_12", 0, 1),
        ("delta_22", 1, 1),
        ("delta_32", 2, 1),
        ("delta_13", 0, 2),
        ("delta_23", 1, 2),
        ("delta~_23", 1, 2),
        ("delta_33", 2, 2),
    ] {
        t.push(conj(i, j, transport(name)));
    }
    t
}

/// Morse terms from the index-2 blocks to the maximum.
fn morse_max_terms() -> Vec<Term> {
    let mut t = Vec::new();
    for j in 0..3 {
        t.push(conj(0, j, GammaElement::IDENTITY));
        t.push(conj(0, j, transport(&format!("gamma~_{}", j + 1))));
    }
    t
}

/// Maslov-2 trajectory terms from the index-2 blocks to the index-1 blocks.
fn disc_mid_terms() -> Vec<Term> {
    let mut t = Vec::new();
    for i in 0..3usize {
        for j in [i, (i + 1) % 3] {
            for fb in ["F", "B"] {
                let name = format!("{}_{}{}", fb, i + 1, j + 1);
                t.push(disc(
                    i,
                    j,
                    transport(&format!("{name}.gamma1")),
                    transport(&format!("{name}.gamma0")),
                ));
            }
        }
    }
    t
}

/// Maslov-2 terms from the index-1 blocks to the minimum: the i-th disc
/// boundary through the minimum descends via the identification flowline on
/// one side and the other flowline on the other.
fn disc_min_terms() -> Vec<Term> {
    let e = GammaElement::IDENTITY;
    vec![
        disc(0, 0, transport("gamma~'_1"), e),
        disc(0, 1, e, transport("gamma~'_2").inverse()),
        disc(0, 2, transport("gamma~'_3"), e),
    ]
}

/// Maslov-2 terms from the maximum to the index-2 blocks.
fn disc_max_terms() -> Vec<Term> {
    let e = GammaElement::IDENTITY;
    vec![
        disc(0, 0, e, transport("gamma~_1").inverse()),
        disc(1, 0, transport("gamma~_2"), e),
        disc(2, 0, e, transport("gamma~_3").inverse()),
    ]
}

/// Maslov-4 terms from the maximum to the minimum.
fn disc_maslov4_terms() -> Vec<Term> {
    vec![
        disc(0, 0, transport("w1.gamma1"), transport("w1.gamma0")),
        disc(0, 0, transport("w-1.gamma1"), transport("w-1.gamma0")),
    ]
}

/// Accumulates the matrix of `alpha -> L alpha R` on the flattened
/// `Hom(E0, E1)` block, XORed into the `(tgt, src)` block of `out`.
fn accumulate_term(
    out: &mut BitMatrix,
    tgt: usize,
    src: usize,
    left: &BitMatrix,
    right: &BitMatrix,
    r0: usize,
    r1: usize,
) {
    let blk = r0 * r1;
    for q in 0..r0 {
        for p in 0..r1 {
            // the image of the matrix unit E_pq is the outer product
            // (column p of L) x (row q of R)
            let src_index = src * blk + q * r1 + p;
            for qq in 0..r0 {
                if !right.get(q, qq) {
                    continue;
                }
                for pp in 0..r1 {
                    if left.get(pp, p) {
                        let tgt_index = tgt * blk + qq * r1 + pp;
                        let cur = out.get(tgt_index, src_index);
                        out.set(tgt_index, src_index, !cur);
                    }
                }
            }
        }
    }
}

fn assemble(
    terms: &[Term],
    e0: &GammaRep,
    e1: &GammaRep,
    tgt_blocks: usize,
    src_blocks: usize,
) -> BitMatrix {
    let (r0, r1) = (e0.dim(), e1.dim());
    let blk = r0 * r1;
    let mut out = BitMatrix::zero(tgt_blocks * blk, src_blocks * blk);
    for t in terms {
        let left = e1.rho(t.left);
        let right = e0.rho(t.right);
        accumulate_term(&mut out, t.tgt, t.src, &left, &right, r0, r1);
    }
    out
}

/// Builds the two differentials of the pearl complex of the pair
/// `(E0, E1)`. Left factors act through `E1`, right factors through `E0`.
pub fn build_differentials(e0: &GammaRep, e1: &GammaRep) -> PearlComplex {
    let mut d0_terms = Vec::new();
    // even blocks [m', x_1, x_2, x_3] -> odd blocks [x'_1, x'_2, x'_3, m]
    for t in morse_min_terms() {
        d0_terms.push(Term { tgt: t.tgt, src: 0, ..t });
    }
    for t in disc_mid_terms() {
        d0_terms.push(Term { tgt: t.tgt, src: 1 + t.src, ..t });
    }
    for t in morse_max_terms() {
        d0_terms.push(Term { tgt: 3, src: 1 + t.src, ..t });
    }
    let mut d1_terms = Vec::new();
    // odd blocks -> even blocks
    for t in disc_min_terms() {
        d1_terms.push(Term { tgt: 0, src: t.src, ..t });
    }
    for t in disc_maslov4_terms() {
        d1_terms.push(Term { tgt: 0, src: 3, ..t });
    }
    for t in morse_mid_terms() {
        d1_terms.push(Term { tgt: 1 + t.tgt, src: t.src, ..t });
    }
    for t in disc_max_terms() {
        d1_terms.push(Term { tgt: 1 + t.tgt, src: 3, ..t });
    }
    let d0 = assemble(&d0_terms, e0, e1, 4, 4);
    let d1 = assemble(&d1_terms, e0, e1, 4, 4);
    PearlComplex { e0: e0.clone(), e1: e1.clone(), d0, d1 }
}

/// The linear map `T(alpha) = alpha m0(E0) + m0(E1) alpha` on the flattened
/// `Hom` block; the pair is unobstructed exactly when `T = 0`.
pub fn obstruction_operator(e0: &GammaRep, e1: &GammaRep) -> BitMatrix {
    let (r0, r1) = (e0.dim(), e1.dim());
    let m00 = e0.m0();
    let m01 = e1.m0();
    let i0 = BitMatrix::identity(r0);
    let i1 = BitMatrix::identity(r1);
    let mut out = BitMatrix::zero(r0 * r1, r0 * r1);
    accumulate_term_raw(&mut out, &i1, &m00, r0, r1);
    accumulate_term_raw(&mut out, &m01, &i0, r0, r1);
    out
}

fn accumulate_term_raw(out: &mut BitMatrix, left: &BitMatrix, right: &BitMatrix, r0: usize, r1: usize) {
    accumulate_term(out, 0, 0, left, right, r0, r1);
}

impl PearlComplex {
    pub fn e0(&self) -> &GammaRep {
        &self.e0
    }

    pub fn e1(&self) -> &GammaRep {
        &self.e1
    }

    pub fn d0(&self) -> &BitMatrix {
        &self.d0
    }

    pub fn d1(&self) -> &BitMatrix {
        &self.d1
    }

    fn block_dim(&self) -> usize {
        self.e0.dim() * self.e1.dim()
    }

    /// Basis (rows) of the central subspace of one `Hom` block: the kernel
    /// of the obstruction operator. The obstruction sections are parallel —
    /// conjugation-invariance is asserted here, not assumed — so a single
    /// kernel serves at all eight generators.
    pub fn central_basis(&self) -> BitMatrix {
        for rep in [&self.e0, &self.e1] {
            let m0 = rep.m0();
            for g in GammaElement::all() {
                let r = rep.rho(g);
                assert_eq!(
                    r.inverse().unwrap().mul(&m0).mul(&r),
                    m0,
                    "obstruction section is not parallel"
                );
            }
        }
        obstruction_operator(&self.e0, &self.e1).kernel_basis()
    }

    fn selector_basis(&self, sel: Selector) -> Result<BitMatrix, PearlError> {
        match sel {
            Selector::Full => Ok(BitMatrix::identity(self.block_dim())),
            Selector::Central => Ok(self.central_basis()),
            Selector::Monodromy => {
                if self.e0 != self.e1 {
                    return Err(PearlError::MonodromyNeedsEqualReps);
                }
                Ok(self.e0.monodromy_basis())
            }
        }
    }

    /// Expresses both differentials in coordinates of the selected
    /// subspace at every generator, verifying closure first.
    pub fn restrict(&self, sel: Selector) -> Result<(BitMatrix, BitMatrix, usize), PearlError> {
        let basis = self.selector_basis(sel)?;
        let d0 = restrict_blocks(&self.d0, &basis, 4, 4, self.block_dim())
            .map_err(|block| PearlError::ClosureViolation { selector: sel, block })?;
        let d1 = restrict_blocks(&self.d1, &basis, 4, 4, self.block_dim())
            .map_err(|block| PearlError::ClosureViolation { selector: sel, block })?;
        Ok((d0, d1, basis.rows()))
    }

    /// Z/2-graded Floer cohomology ranks over the selected subcomplex, or
    /// the obstruction marker for the full complex of an obstructed pair.
    pub fn floer_ranks(&self, sel: Selector) -> Result<FloerOutcome, PearlError> {
        if sel == Selector::Full && !obstruction_operator(&self.e0, &self.e1).is_zero() {
            return Ok(FloerOutcome::Obstructed);
        }
        let (d0, d1, s) = self.restrict(sel)?;
        if !d1.mul(&d0).is_zero() || !d0.mul(&d1).is_zero() {
            return Err(PearlError::DSquaredNonzero);
        }
        let (r0, r1) = (d0.rank(), d1.rank());
        let total = 4 * s;
        Ok(FloerOutcome::Ranks(total - r0 - r1, total - r0 - r1))
    }

    /// Per-block comparison of both compositions of the differentials with
    /// the block-diagonal anticommutator with the obstruction sections.
    pub fn verify_d_squared(&self) -> DSquaredReport {
        let t = obstruction_operator(&self.e0, &self.e1);
        let blk = self.block_dim();
        let even = self.d1.mul(&self.d0);
        let odd = self.d0.mul(&self.d1);
        let check = |m: &BitMatrix| -> ([bool; 4], bool) {
            let mut diag = [true; 4];
            let mut off = true;
            for bi in 0..4 {
                for bj in 0..4 {
                    let mut equal = true;
                    for p in 0..blk {
                        for q in 0..blk {
                            let want = if bi == bj { t.get(p, q) } else { false };
                            if m.get(bi * blk + p, bj * blk + q) != want {
                                equal = false;
                            }
                        }
                    }
                    if bi == bj {
                        diag[bi] = equal;
                    } else {
                        off &= equal;
                    }
                }
            }
            (diag, off)
        };
        let (even_diag, even_off) = check(&even);
        let (odd_diag, odd_off) = check(&odd);
        DSquaredReport { even_diag, odd_diag, even_offdiag_zero: even_off, odd_offdiag_zero: odd_off }
    }

    /// Both differentials expressed in the reference basis: within each
    /// block the matrix units are reordered row-major.
    pub fn emit_paper_basis(&self) -> (BitMatrix, BitMatrix) {
        let (r0, r1) = (self.e0.dim(), self.e1.dim());
        let blk = r0 * r1;
        let n = 4 * blk;
        let perm = BitMatrix::from_fn(n, n, |internal, paper| {
            let (b, rem) = (paper / blk, paper % blk);
            let (p, q) = (rem / r0, rem % r0);
            internal == b * blk + q * r1 + p
        });
        let pt = perm.transpose();
        (pt.mul(&self.d0).mul(&perm), pt.mul(&self.d1).mul(&perm))
    }
}

/// Report of [`PearlComplex::verify_d_squared`].
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DSquaredReport {
    pub even_diag: [bool; 4],
    pub odd_diag: [bool; 4],
    pub even_offdiag_zero: bool,
    pub odd_offdiag_zero: bool,
}

impl DSquaredReport {
    pub fn all_match(&self) -> bool {
        self.even_diag.iter().all(|&b| b)
            && self.odd_diag.iter().all(|&b| b)
            && self.even_offdiag_zero
            && self.odd_offdiag_zero
    }
}

/// Restricts a block matrix to the row space of `basis` applied at every
/// block; `Err(block)` reports the first target block where closure fails.
fn restrict_blocks(
    d: &BitMatrix,
    basis: &BitMatrix,
    tgt_blocks: usize,
    src_blocks: usize,
    blk: usize,
) -> Result<BitMatrix, usize> {
    let s = basis.rows();
    let mut out = BitMatrix::zero(tgt_blocks * s, src_blocks * s);
    for b in 0..src_blocks {
        for t in 0..s {
            // embed basis row t at source block b as a column vector
            let col = BitMatrix::from_fn(d.cols(), 1, |r, _| {
                r / blk == b && basis.get(t, r % blk)
            });
            let img = d.mul(&col);
            for c in 0..tgt_blocks {
                let part = BitMatrix::from_fn(1, blk, |_, k| img.get(c * blk + k, 0));
                let coords = BitMatrix::row_coords_in(basis, &part, 0).ok_or(c)?;
                for (i, &on) in coords.iter().enumerate() {
                    if on {
                        out.set(c * s + i, b * s + t, true);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Z-graded cohomology of the gradient-only complex
/// `Hom(m') -> ⊕ Hom(x'_i) -> ⊕ Hom(x_i) -> Hom(m)` with blocks restricted
/// per the coefficient selector.
pub fn morse_ranks(
    e0: &GammaRep,
    e1: &GammaRep,
    sel: Selector,
) -> Result<[usize; 4], PearlError> {
    let cx = build_differentials(e0, e1);
    let basis = cx.selector_basis(sel)?;
    let blk = cx.block_dim();
    let m0 = assemble(&morse_min_terms(), e0, e1, 3, 1);
    let m1 = assemble(&morse_mid_terms(), e0, e1, 3, 3);
    let m2 = assemble(&morse_max_terms(), e0, e1, 1, 3);
    let m0 = restrict_blocks(&m0, &basis, 3, 1, blk)
        .map_err(|block| PearlError::ClosureViolation { selector: sel, block })?;
    let m1 = restrict_blocks(&m1, &basis, 3, 3, blk)
        .map_err(|block| PearlError::ClosureViolation { selector: sel, block })?;
    let m2 = restrict_blocks(&m2, &basis, 1, 3, blk)
        .map_err(|block| PearlError::ClosureViolation { selector: sel, block })?;
    let s = basis.rows();
    let (r0, r1, r2) = (m0.rank(), m1.rank(), m2.rank());
    Ok([s - r0, 3 * s - r0 - r1, 3 * s - r1 - r2, s - r2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{
        build_from, conjugate_rep, direct_sum_rep, indecomposable, named_composite, Composite,
        Indecomposable, Multiplicities,
    };
    use crate::table::{printed_d0, printed_d1};

    fn rep(name: Indecomposable) -> GammaRep {
        indecomposable(name)
    }

    #[test]
    fn w_d_matrices_are_bit_exact() {
        let d = rep(Indecomposable::D);
        let cx = build_differentials(&d, &d);
        let (p0, p1) = cx.emit_paper_basis();
        assert_eq!(p0, printed_d0());
        assert_eq!(p1, printed_d1());
    }

    #[test]
    fn w_d_ranks_and_floer() {
        let d = rep(Indecomposable::D);
        let cx = build_differentials(&d, &d);
        assert_eq!(cx.d0().rank(), 6);
        assert_eq!(cx.d1().rank(), 8);
        assert_eq!(cx.floer_ranks(Selector::Full).unwrap(), FloerOutcome::Ranks(2, 2));
        assert!(d.m0().is_zero());
    }

    #[test]
    fn trivial_system_vanishes_in_characteristic_two() {
        let v1 = rep(Indecomposable::V1);
        let cx = build_differentials(&v1, &v1);
        assert_eq!(cx.floer_ranks(Selector::Full).unwrap(), FloerOutcome::Ranks(0, 0));
    }

    #[test]
    fn v1_paper_basis_is_internal_basis() {
        let v1 = rep(Indecomposable::V1);
        let cx = build_differentials(&v1, &v1);
        let (p0, p1) = cx.emit_paper_basis();
        assert_eq!(&p0, cx.d0());
        assert_eq!(&p1, cx.d1());
        // the Maslov-4 entry A + A^5 dies over F2 on the trivial system
        assert!(!p1.get(0, 3));
    }

    #[test]
    fn doubled_d_matches_permuted_block_sum() {
        // build D ⊕ D directly, and as four Hom-blocks of the rank-2 case
        let d = rep(Indecomposable::D);
        let dd = direct_sum_rep(&[d.clone(), d.clone()]);
        let cx = build_differentials(&dd, &dd);
        let small = build_differentials(&d, &d);
        // Hom(D⊕D, D⊕D) = four copies of Hom(D, D); the flattened index
        // (q*4+p) with p = 2P+p', q = 2Q+q' maps to copy (P, Q) position
        // (q'*2+p')
        let blk = 16;
        let copy_of = |k: usize| {
            let (q, p) = (k / 4, k % 4);
            ((p / 2, q / 2), (q % 2) * 2 + (p % 2))
        };
        for (big, sm) in [(cx.d0(), small.d0()), (cx.d1(), small.d1())] {
            for tb in 0..4usize {
                for sb in 0..4usize {
                    for ti in 0..blk {
                        for si in 0..blk {
                            let (tc, tk) = copy_of(ti);
                            let (sc, sk) = copy_of(si);
                            let want = if tc == sc {
                                sm.get(tb * 4 + tk, sb * 4 + sk)
                            } else {
                                false
                            };
                            assert_eq!(big.get(tb * blk + ti, sb * blk + si), want);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn obstruction_operator_examples() {
        let d = rep(Indecomposable::D);
        let v1 = rep(Indecomposable::V1);
        assert!(obstruction_operator(&d, &d).is_zero());
        assert!(obstruction_operator(&v1, &v1).is_zero());
        // m0(V1) = Id, m0(D) = 0: T(alpha) = alpha, the identity on Hom
        assert!(obstruction_operator(&v1, &d).is_identity());
    }

    #[test]
    fn central_basis_examples() {
        let d = rep(Indecomposable::D);
        assert_eq!(build_differentials(&d, &d).central_basis().rows(), 4);
        let v2 = rep(Indecomposable::V2);
        assert_eq!(build_differentials(&v2, &v2).central_basis().rows(), 2);
        let v1 = rep(Indecomposable::V1);
        assert_eq!(build_differentials(&v1, &v1).central_basis().rows(), 1);
    }

    #[test]
    fn full_restriction_is_identity_change() {
        let d = rep(Indecomposable::D);
        let cx = build_differentials(&d, &d);
        let (r0, r1, s) = cx.restrict(Selector::Full).unwrap();
        assert_eq!(s, 4);
        assert_eq!(&r0, cx.d0());
        assert_eq!(&r1, cx.d1());
    }

    #[test]
    fn monodromy_equals_full_for_d() {
        let d = rep(Indecomposable::D);
        let cx = build_differentials(&d, &d);
        assert_eq!(
            cx.floer_ranks(Selector::Monodromy).unwrap(),
            cx.floer_ranks(Selector::Full).unwrap()
        );
    }

    #[test]
    fn monodromy_needs_equal_reps() {
        let cx = build_differentials(&rep(Indecomposable::D), &rep(Indecomposable::V2));
        assert_eq!(
            cx.floer_ranks(Selector::Monodromy).unwrap_err(),
            PearlError::MonodromyNeedsEqualReps
        );
    }

    #[test]
    fn obstructed_marker_for_v2() {
        let v2 = rep(Indecomposable::V2);
        let cx = build_differentials(&v2, &v2);
        assert_eq!(cx.floer_ranks(Selector::Full).unwrap(), FloerOutcome::Obstructed);
        // the central subcomplex is still defined and vanishes
        assert_eq!(cx.floer_ranks(Selector::Central).unwrap(), FloerOutcome::Ranks(0, 0));
    }

    #[test]
    fn regular_monodromy_floer() {
        let reg = named_composite(Composite::Regular);
        let cx = build_differentials(&reg, &reg);
        assert_eq!(cx.floer_ranks(Selector::Monodromy).unwrap(), FloerOutcome::Ranks(4, 4));
    }

    #[test]
    fn morse_ranks_of_trivial_system_are_betti_numbers() {
        let v1 = rep(Indecomposable::V1);
        let h = morse_ranks(&v1, &v1, Selector::Full).unwrap();
        assert_eq!(h, [1, 1, 1, 1]);
        assert_eq!(h[0], h[3]);
        assert_eq!(h[1], h[2]);
    }

    #[test]
    fn regular_monodromy_morse() {
        let reg = named_composite(Composite::Regular);
        assert_eq!(morse_ranks(&reg, &reg, Selector::Monodromy).unwrap(), [6, 6, 6, 6]);
    }

    #[test]
    fn morse_end_splits_over_the_c3_decomposition() {
        let mixed = build_from(&Multiplicities::new(0, 1, 0, 0, 1, 1));
        let k = build_from(&Multiplicities::new(0, 1, 0, 0, 0, 0));
        let m = build_from(&Multiplicities::new(0, 0, 0, 0, 1, 1));
        let total = morse_ranks(&mixed, &mixed, Selector::Full).unwrap();
        let hk = morse_ranks(&k, &k, Selector::Full).unwrap();
        let hm = morse_ranks(&m, &m, Selector::Full).unwrap();
        for i in 0..4 {
            assert_eq!(total[i], hk[i] + hm[i]);
        }
    }

    #[test]
    fn d_squared_reports() {
        for name in [Indecomposable::D, Indecomposable::V1, Indecomposable::V2] {
            let r = rep(name);
            let cx = build_differentials(&r, &r);
            assert!(cx.verify_d_squared().all_match(), "{name:?}");
        }
        // for V2 the common value is the nonzero anticommutator block
        let v2 = rep(Indecomposable::V2);
        let cx = build_differentials(&v2, &v2);
        assert!(!cx.d1().mul(cx.d0()).is_zero());
    }

    #[test]
    fn central_additivity_on_a_pair() {
        // central ranks of X ⊕ Y split over the four Hom-pairs
        let x = rep(Indecomposable::V2);
        let y = rep(Indecomposable::D);
        let sum = direct_sum_rep(&[x.clone(), y.clone()]);
        let whole = match build_differentials(&sum, &sum).floer_ranks(Selector::Central).unwrap()
        {
            FloerOutcome::Ranks(a, b) => (a, b),
            o => panic!("{o:?}"),
        };
        let mut acc = (0, 0);
        for e0 in [&x, &y] {
            for e1 in [&x, &y] {
                match build_differentials(e0, e1).floer_ranks(Selector::Central).unwrap() {
                    FloerOutcome::Ranks(a, b) => {
                        acc.0 += a;
                        acc.1 += b;
                    }
                    o => panic!("{o:?}"),
                }
            }
        }
        assert_eq!(whole, acc);
    }

    #[test]
    fn monodromy_is_multiplicity_blind() {
        let e = rep(Indecomposable::D);
        let w = rep(Indecomposable::U4);
        let base = direct_sum_rep(&[e.clone(), w.clone()]);
        let base_ranks =
            build_differentials(&base, &base).floer_ranks(Selector::Monodromy).unwrap();
        for (p, q) in [(2, 1), (1, 3), (2, 2)] {
            let mut parts = Vec::new();
            for _ in 0..p {
                parts.push(e.clone());
            }
            for _ in 0..q {
                parts.push(w.clone());
            }
            let big = direct_sum_rep(&parts);
            assert_eq!(
                build_differentials(&big, &big).floer_ranks(Selector::Monodromy).unwrap(),
                base_ranks
            );
        }
    }

    #[test]
    fn ranks_are_basis_change_invariant() {
        let r = build_from(&Multiplicities::new(1, 0, 0, 0, 1, 0));
        let base_floer = build_differentials(&r, &r).floer_ranks(Selector::Central).unwrap();
        let base_morse = morse_ranks(&r, &r, Selector::Monodromy).unwrap();
        for seed in 0..5 {
            let p = BitMatrix::random_invertible(r.dim(), seed);
            let c = conjugate_rep(&r, &p).unwrap();
            assert_eq!(
                build_differentials(&c, &c).floer_ranks(Selector::Central).unwrap(),
                base_floer
            );
            assert_eq!(morse_ranks(&c, &c, Selector::Monodromy).unwrap(), base_morse);
        }
    }

    #[test]
    fn grading_consistency() {
        for mult in [
            Multiplicities::new(0, 0, 0, 0, 1, 0),
            Multiplicities::new(1, 1, 0, 0, 0, 1),
        ] {
            let r = build_from(&mult);
            let cx = build_differentials(&r, &r);
            for sel in [Selector::Full, Selector::Central, Selector::Monodromy] {
                match cx.floer_ranks(sel).unwrap() {
                    FloerOutcome::Ranks(a, b) => assert_eq!(a, b),
                    FloerOutcome::Obstructed => {}
                }
            }
        }
    }

    #[test]
    fn flatten_round_trip() {
        let m = BitMatrix::from_rows(&["011", "101"]).unwrap();
        let v = crate::reps::flatten(&m);
        assert_eq!(crate::reps::unflatten(&v, 0, 2, 3), m);
    }
}
