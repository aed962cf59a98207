//! Polarizations: validation, orthogonal complements, endomorphism algebras
//! and the complete-reducibility splitting.

mod decompose;
pub mod factor;

use std::fmt;

pub use decompose::{decompose, minimal_polynomial, Decomposition, Summand, SAMPLES_PER_LEVEL};
pub use factor::{factor_poly, Factor, Factorization};

use crate::error::{Error, Result};
use crate::exactfield::{FieldElem, Sign};
use crate::hodge::{split_subspace, HodgeStructure};
use crate::linalg::{KMatrix, QMatrix, QSubspace, Subspace};
use crate::tori::complex_structure_from_hodge;

/// First failing condition found by [`validate_polarization`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolarizationViolation {
    Shape { rows: usize, cols: usize, rank: usize },
    /// `Q[j][i] ≠ (−1)^n Q[i][j]`.
    Symmetry { i: usize, j: usize },
    /// `Q(u_a, v_b) ≠ 0` for basis vectors of two non-conjugate pieces.
    Orthogonality { first: (i32, i32), second: (i32, i32), a: usize, b: usize, value: FieldElem },
    /// The `minor`-th leading principal minor (1-based) of the Hermitian
    /// Gram matrix on `V^{p,q}` is not positive.
    Positivity { p: i32, q: i32, minor: usize, value: FieldElem },
}

impl PolarizationViolation {
    /// `0` for a shape mismatch, else the number of the failed condition.
    pub fn condition(&self) -> u8 {
        match self {
            PolarizationViolation::Shape { .. } => 0,
            PolarizationViolation::Symmetry { .. } => 1,
            PolarizationViolation::Orthogonality { .. } => 2,
            PolarizationViolation::Positivity { .. } => 3,
        }
    }
}

impl fmt::Display for PolarizationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolarizationViolation::Shape { rows, cols, rank } => {
                write!(f, "form is {rows}x{cols} but the rank is {rank}")
            }
            PolarizationViolation::Symmetry { i, j } => {
                write!(f, "condition 1 (symmetry) fails at entries ({i},{j}) and ({j},{i})")
            }
            PolarizationViolation::Orthogonality { first, second, a, b, value } => write!(
                f,
                "condition 2 (orthogonality) fails: Q(u{a}, v{b}) = {value} for u in V^{:?}, v in V^{:?}",
                first, second
            ),
            PolarizationViolation::Positivity { p, q, minor, value } => write!(
                f,
                "condition 3 (positivity) fails on V^({p},{q}): leading minor {minor} is {value}"
            ),
        }
    }
}

fn i_power(k: i32, m: u64) -> FieldElem {
    match k.rem_euclid(4) {
        0 => FieldElem::one(m),
        1 => FieldElem::i(m),
        2 => FieldElem::from_int(m, -1),
        _ => -FieldElem::i(m),
    }
}

/// First leading principal minor (1-based index and value) of a Hermitian
/// matrix that is not positive; `None` means positive definite.
pub fn first_nonpositive_minor(gram: &KMatrix) -> Option<(usize, FieldElem)> {
    gram.leading_minors()
        .into_iter()
        .enumerate()
        .find(|(_, d)| d.sign_real() != Ok(Sign::Positive))
        .map(|(k, d)| (k + 1, d))
}

pub fn is_positive_definite(gram: &KMatrix) -> bool {
    gram.is_square() && first_nonpositive_minor(gram).is_none()
}

pub fn is_negative_definite(gram: &KMatrix) -> bool {
    is_positive_definite(&gram.neg())
}

/// `i^{p−q} · Q(u_a, conj u_b)` on the basis of `V^{p,q}`.
pub fn hermitian_gram(h: &HodgeStructure, q: &QMatrix, p: i32, qq: i32) -> KMatrix {
    let m = h.m();
    let qk = q.to_k(m);
    let b = h.piece_basis(p, qq);
    let c = i_power(p - qq, m);
    b.transpose().mul(&qk).mul(&b.conj()).scale(&c)
}

pub fn validate_polarization(h: &HodgeStructure, q: &QMatrix) -> std::result::Result<(), PolarizationViolation> {
    let r = h.rank();
    if q.rows() != r || q.cols() != r {
        return Err(PolarizationViolation::Shape { rows: q.rows(), cols: q.cols(), rank: r });
    }
    let odd = h.weight() % 2 == 1;
    for i in 0..r {
        for j in i..r {
            let expected = if odd { -q.get(i, j).clone() } else { q.get(i, j).clone() };
            if *q.get(j, i) != expected {
                return Err(PolarizationViolation::Symmetry { i, j });
            }
        }
    }
    let qk = q.to_k(h.m());
    let idx = h.indices();
    for (x, &(p1, q1)) in idx.iter().enumerate() {
        for &(p2, q2) in &idx[x..] {
            if (p2, q2) == (q1, p1) {
                continue;
            }
            let u = h.piece_basis(p1, q1);
            let v = h.piece_basis(p2, q2);
            let block = u.transpose().mul(&qk).mul(&v);
            for a in 0..block.rows() {
                for b in 0..block.cols() {
                    if !block.get(a, b).is_zero() {
                        return Err(PolarizationViolation::Orthogonality {
                            first: (p1, q1),
                            second: (p2, q2),
                            a,
                            b,
                            value: block.get(a, b).clone(),
                        });
                    }
                }
            }
        }
    }
    for (p, qq) in idx {
        if h.hodge_number(p, qq) == 0 {
            continue;
        }
        let gram = hermitian_gram(h, q, p, qq);
        if let Some((minor, value)) = first_nonpositive_minor(&gram) {
            return Err(PolarizationViolation::Positivity { p, q: qq, minor, value });
        }
    }
    Ok(())
}

pub fn is_polarization(h: &HodgeStructure, q: &QMatrix) -> bool {
    validate_polarization(h, q).is_ok()
}

/// `W^⊥ = {v : Q(w, v) = 0 for all w ∈ W}` for a sub-Hodge structure `W`.
pub fn orthogonal_complement(h: &HodgeStructure, q: &QMatrix, w: &QSubspace) -> Result<QSubspace> {
    split_subspace(h, w)?;
    let rows = w.basis().transpose().mul(q);
    let perp = Subspace::kernel(&rows);
    if !w.intersect(&perp)?.is_zero() {
        return Err(Error::Domain("subspace is degenerate for the form".into()));
    }
    Ok(perp)
}

/// ℚ-basis of the rational matrices preserving every `V^{p,q}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndAlgebra {
    pub basis: Vec<QMatrix>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, t: &QMatrix) -> bool {
        let flat = |a: &QMatrix| a.entries().to_vec();
        let n = t.rows() * t.cols();
        Subspace::span_vectors(&self.basis.iter().map(flat).collect::<Vec<_>>(), n, ())
            .contains_vector(&flat(t))
    }

    /// Rational combination `Σ c_k · basis_k`.
    pub fn combination(&self, coeffs: &[crate::exactfield::Rational]) -> QMatrix {
        let first = &self.basis[0];
        let zero = QMatrix::zeros(first.rows(), first.cols(), ());
        self.basis
            .iter()
            .zip(coeffs)
            .fold(zero, |acc, (b, c)| acc.add(&b.scale(c)))
    }
}

pub fn endomorphism_algebra(h: &HodgeStructure) -> Result<EndAlgebra> {
    Ok(EndAlgebra { basis: crate::hodge::hodge_morphisms(h, h)? })
}

/// Weight-1 Hermitian data `h = g + i·Q` with `g(x, y) = Q(Ix, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hermitian {
    pub g: KMatrix,
    pub q: QMatrix,
}

pub fn hermitian_from_polarization_wt1(h: &HodgeStructure, q: &QMatrix) -> Result<Hermitian> {
    h.require_weight(1)?;
    validate_polarization(h, q).map_err(Error::InvalidPolarization)?;
    let op = complex_structure_from_hodge(h)?;
    let g = op.transpose().mul(&q.to_k(h.m()));
    Ok(Hermitian { g, q: q.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Rational};
    use crate::fixtures;
    use crate::linalg::Matrix;

    fn diag(d: &[i64]) -> QMatrix {
        Matrix::from_fn(d.len(), d.len(), (), |i, j| if i == j { rat(d[i]) } else { rat(0) })
    }

    #[test]
    fn fixtures_are_polarized() {
        assert_eq!(validate_polarization(&fixtures::fix_e(), &fixtures::q_e()), Ok(()));
        assert_eq!(validate_polarization(&fixtures::fix_h4(), &fixtures::q4()), Ok(()));
        assert_eq!(validate_polarization(&fixtures::fix_hc(), &fixtures::q4()), Ok(()));
        assert_eq!(validate_polarization(&fixtures::fix_h8(), &fixtures::q8()), Ok(()));
    }

    #[test]
    fn gram_on_fix_e_is_two() {
        let g = hermitian_gram(&fixtures::fix_e(), &fixtures::q_e(), 1, 0);
        assert_eq!(*g.get(0, 0), FieldElem::from_int(1, 2));
    }

    #[test]
    fn identity_form_on_h4_fails_positivity_on_20() {
        let err = validate_polarization(&fixtures::fix_h4(), &diag(&[1, 1, 1, 1])).unwrap_err();
        assert_eq!(err.condition(), 3);
        assert!(matches!(err, PolarizationViolation::Positivity { p: 2, q: 0, minor: 1, .. }));
    }

    #[test]
    fn single_sign_flips() {
        let h = fixtures::fix_h4();
        let base = [-1, -1, 1, 1];
        let expected = [2, 2, 3, 3];
        for k in 0..4 {
            let mut d = base;
            d[k] = -d[k];
            let err = validate_polarization(&h, &diag(&d)).unwrap_err();
            assert_eq!(err.condition(), expected[k], "flip {k}: {err}");
        }
    }

    #[test]
    fn antisymmetry_is_required_in_odd_weight() {
        let err = validate_polarization(&fixtures::fix_e(), &diag(&[1, 1])).unwrap_err();
        assert_eq!(err, PolarizationViolation::Symmetry { i: 0, j: 0 });
    }

    #[test]
    fn complement_of_first_factor() {
        let h = fixtures::fix_h8();
        let first: Vec<Vec<Rational>> =
            (0..4).map(|k| (0..8).map(|j| rat(i64::from(j == k))).collect()).collect();
        let w = Subspace::span_vectors(&first, 8, ());
        let perp = orthogonal_complement(&h, &fixtures::q8(), &w).unwrap();
        let second: Vec<Vec<Rational>> =
            (4..8).map(|k| (0..8).map(|j| rat(i64::from(j == k))).collect()).collect();
        assert_eq!(perp, Subspace::span_vectors(&second, 8, ()));
        let zero = Subspace::zero(8, ());
        assert!(orthogonal_complement(&h, &fixtures::q8(), &zero).unwrap().is_full());
    }

    #[test]
    fn end_algebra_dimensions() {
        let e = endomorphism_algebra(&fixtures::fix_e()).unwrap();
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&QMatrix::identity(2, ())));
        let a = endomorphism_algebra(&fixtures::fix_h4()).unwrap().dim();
        let b = endomorphism_algebra(&fixtures::fix_hc()).unwrap().dim();
        assert_eq!(endomorphism_algebra(&fixtures::fix_h8()).unwrap().dim(), a + b);
    }

    #[test]
    fn weight_one_metric() {
        let herm = hermitian_from_polarization_wt1(&fixtures::fix_e(), &fixtures::q_e()).unwrap();
        assert_eq!(herm.g, KMatrix::identity(2, 1));
    }
}
