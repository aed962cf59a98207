//! Operations specific to the coefficient field K = ℚ(i, √m): conjugation,
//! rational points by restriction of scalars, and the real model of ℂ^N.

use num_traits::Zero;

use super::{LinalgError, Matrix, Subspace};
use crate::exactfield::{FieldElem, FieldError, Rational};

pub type KMatrix = Matrix<FieldElem>;
pub type QMatrix = Matrix<Rational>;
pub type KSubspace = Subspace<FieldElem>;
pub type QSubspace = Subspace<Rational>;

impl Matrix<Rational> {
    /// The same matrix with entries viewed in K.
    pub fn to_k(&self, m: u64) -> KMatrix {
        self.map(m, |q| FieldElem::from_rational(m, q.clone()))
    }
}

impl Matrix<FieldElem> {
    pub fn conj(&self) -> Self {
        self.map(self.ctx(), FieldElem::conj)
    }

    /// Entrywise real part.
    pub fn re(&self) -> Self {
        self.map(self.ctx(), FieldElem::re)
    }

    /// Entrywise imaginary part (real-valued).
    pub fn im(&self) -> Self {
        self.map(self.ctx(), FieldElem::im)
    }

    /// True when all entries lie in ℚ(√m).
    pub fn is_real(&self) -> bool {
        self.entries().iter().all(FieldElem::is_real)
    }

    pub fn to_rational(&self) -> Option<QMatrix> {
        if !self.entries().iter().all(FieldElem::is_rational) {
            return None;
        }
        Some(self.map((), |x| x.rational_part().clone()))
    }

    /// Moves every entry to the field with parameter `m`.
    pub fn with_m(&self, m: u64) -> Result<Self, FieldError> {
        if m == self.ctx() {
            return Ok(self.clone());
        }
        let rows = self
            .to_rows()
            .into_iter()
            .map(|r| r.iter().map(|x| x.with_m(m)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_rows(rows, self.cols(), m).expect("shape preserved"))
    }

    pub fn in_gaussian_rationals(&self) -> bool {
        self.entries().iter().all(FieldElem::in_gaussian_rationals)
    }
}

impl Subspace<FieldElem> {
    pub fn conj(&self) -> Self {
        Subspace::span(&self.basis().conj())
    }

    /// First basis column whose conjugate falls outside the subspace.
    pub fn conj_instability_witness(&self) -> Option<usize> {
        let c = self.basis().conj();
        (0..c.cols()).find(|&j| !self.contains_vector(&c.column(j)))
    }

    pub fn is_conj_stable(&self) -> bool {
        self.conj_instability_witness().is_none()
    }

    /// `S ⊗ K` for a rational subspace.
    pub fn from_rational(s: &QSubspace, m: u64) -> Self {
        Subspace::span(&s.basis().to_k(m))
    }
}

/// Rational solutions `x ∈ ℚ^n` of `A·x = 0` for a K-matrix `A`.
///
/// Each K-linear condition expands into four rational conditions through the
/// coordinates `(a0, a1, a2, a3)` of the basis `{1, s, i, i·s}`.
pub fn rational_kernel(a: &KMatrix) -> QSubspace {
    let n = a.cols();
    let (reduced, pivots) = a.rref();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for r in 0..pivots.len() {
        for c in 0..4 {
            let row: Vec<Rational> = reduced.row(r).iter().map(|x| x.coeffs()[c].clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(n, ());
    }
    let system = Matrix::from_rows(rows, n, ()).expect("rows have uniform length");
    Subspace::kernel(&system)
}

/// `S ∩ ℚ^n`: the largest rational subspace contained in `S`.
pub fn rational_points(s: &KSubspace) -> QSubspace {
    if s.is_full() {
        return Subspace::full(s.ambient_dim(), ());
    }
    rational_kernel(&s.annihilator())
}

/// A basis of conjugation-fixed vectors (entries in ℚ(√m)) of a
/// conjugation-stable subspace.
///
/// The reduced echelon basis of a conjugation-stable subspace is itself fixed
/// by conjugation, since conjugating it yields the reduced echelon basis of
/// the same subspace.
pub fn conj_fixed_points(s: &KSubspace) -> Result<KSubspace, LinalgError> {
    if let Some(j) = s.conj_instability_witness() {
        return Err(LinalgError::NotConjugationStable(j));
    }
    debug_assert!(s.basis().is_real());
    Ok(s.clone())
}

/// Real model of a vector of ℂ^N: `(Re z_1, …, Re z_N, Im z_1, …, Im z_N)`.
pub fn realify_vector(v: &[FieldElem]) -> Vec<FieldElem> {
    v.iter().map(FieldElem::re).chain(v.iter().map(FieldElem::im)).collect()
}

/// Inverse of [`realify_vector`]: `z_k = w_k + i·w_{N+k}`.
pub fn complexify_real_vector(w: &[FieldElem]) -> Vec<FieldElem> {
    assert!(w.len() % 2 == 0, "real model has even dimension");
    let n = w.len() / 2;
    let m = w.first().map_or(1, FieldElem::m);
    let i = FieldElem::i(m);
    (0..n).map(|k| &w[k] + &(&i * &w[n + k])).collect()
}

/// Real `2N × 2M` matrix of a complex-linear map `ℂ^M → ℂ^N`.
pub fn realify_matrix(a: &KMatrix) -> KMatrix {
    let re = a.re();
    let im = a.im();
    re.hstack(&im.neg()).vstack(&im.hstack(&re))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn k(m: u64, a: [i64; 4]) -> FieldElem {
        FieldElem::from_ints(m, a)
    }

    #[test]
    fn line_through_one_and_sqrt2_has_no_rational_points() {
        let s = Subspace::span_vectors(&[vec![k(2, [1, 0, 0, 0]), k(2, [0, 1, 0, 0])]], 2, 2);
        assert!(rational_points(&s).is_zero());
    }

    #[test]
    fn conjugate_pair_span_is_everything() {
        let v = vec![k(1, [1, 0, 0, 0]), k(1, [0, 0, 1, 0])];
        let w = vec![k(1, [1, 0, 0, 0]), k(1, [0, 0, -1, 0])];
        let s = Subspace::span_vectors(&[v, w], 2, 1);
        assert!(rational_points(&s).is_full());
    }

    #[test]
    fn rational_subspace_is_its_own_rational_points() {
        let z = FieldElem::zero(3);
        let o = FieldElem::one(3);
        let s = Subspace::span_vectors(
            &[
                vec![z.clone(), z.clone(), o.clone(), z.clone()],
                vec![z.clone(), z.clone(), z.clone(), o.clone()],
            ],
            4,
            3,
        );
        let q = rational_points(&s);
        let expected = Subspace::span_vectors(
            &[
                vec![rat(0), rat(0), rat(1), rat(0)],
                vec![rat(0), rat(0), rat(0), rat(1)],
            ],
            4,
            (),
        );
        assert_eq!(q, expected);
    }

    #[test]
    fn fixed_points_of_conjugate_pair() {
        let v = vec![k(1, [1, 0, 0, 0]), k(1, [0, 0, 1, 0])];
        let s = Subspace::span_vectors(&[v.clone(), v.iter().map(FieldElem::conj).collect()], 2, 1);
        let fixed = conj_fixed_points(&s).unwrap();
        assert!(fixed.basis().is_real());
        assert_eq!(fixed.dim(), 2);
        let lone = Subspace::span_vectors(&[v], 2, 1);
        assert_eq!(conj_fixed_points(&lone), Err(LinalgError::NotConjugationStable(0)));
    }

    #[test]
    fn realify_roundtrip() {
        let v = vec![k(2, [1, 1, 2, 0]), k(2, [0, 0, -1, 3])];
        let w = realify_vector(&v);
        assert!(w.iter().all(FieldElem::is_real));
        assert_eq!(complexify_real_vector(&w), v);
    }

    #[test]
    fn realified_map_commutes_with_realify() {
        let a = Matrix::from_rows(
            vec![vec![k(2, [1, 0, 1, 0]), k(2, [0, 1, 0, 0])], vec![k(2, [0, 0, 0, 1]), k(2, [2, 0, 0, 0])]],
            2,
            2,
        )
        .unwrap();
        let v = vec![k(2, [1, 0, -1, 1]), k(2, [3, 1, 0, 0])];
        assert_eq!(realify_matrix(&a).mul_vec(&realify_vector(&v)), realify_vector(&a.mul_vec(&v)));
    }
}
