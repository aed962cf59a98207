//! Linear CR, co-CR and bi-CR structures on real vector spaces.
//!
//! A real vector space is `ℝ^n` presented over ℚ(√m): a real subspace is a
//! [`KSubspace`] whose canonical basis has real entries. Its
//! complexification is the same subspace read over K. Complex spaces `ℂ^N`
//! enter through their real model `ℝ^{2N}` (see [`realify_matrix`]).

use crate::error::{Error, Result};
use crate::exactfield::FieldElem;
use crate::hodge::{HodgeStructure, Piece};
use crate::linalg::{realify_matrix, KMatrix, KSubspace, Matrix, Subspace};

/// Multiplication by `i` on the real model of `ℂ^n`.
pub fn complex_structure(n: usize, m: u64) -> KMatrix {
    realify_matrix(&KMatrix::identity(n, m).scale(&FieldElem::i(m)))
}

fn check_real(s: &KSubspace, what: &str) -> Result<()> {
    if s.basis().is_real() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} is not a real subspace")))
    }
}

/// Operator `+i` on `a`, `−i` on `conj a`, written on the real points of
/// `a ⊕ conj a` in their canonical basis.
fn operator_from_eigenspace(a: &KSubspace, real: &KSubspace) -> KMatrix {
    let m = a.ctx();
    let ab = a.basis();
    let split = ab.hstack(&ab.conj());
    let i = FieldElem::i(m);
    let d = real.dim();
    let images: Vec<Vec<FieldElem>> = real
        .basis_vectors()
        .iter()
        .map(|v| {
            let c = split.solve(v).expect("vector lies in a ⊕ conj a");
            let (c1, c2) = c.split_at(ab.cols());
            let u = ab.mul_vec(c1);
            let w = ab.conj().mul_vec(c2);
            let iv: Vec<FieldElem> = u.iter().zip(&w).map(|(x, y)| &i * &(x - y)).collect();
            real.coordinates(&iv).expect("operator preserves the real points")
        })
        .collect();
    Matrix::from_columns(&images, d, m)
}

/// A real subspace `H ⊆ ℝ^n` with a complex structure `I`, stored in the
/// canonical basis of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CRSpace {
    n: usize,
    h: KSubspace,
    op: KMatrix,
}

impl CRSpace {
    pub fn new(h: KSubspace, op: KMatrix) -> Result<Self> {
        check_real(&h, "distinguished subspace")?;
        let d = h.dim();
        if op.rows() != d || op.cols() != d || !op.is_real() {
            return Err(Error::Shape("operator must be a real square matrix on H".into()));
        }
        let minus_one = KMatrix::identity(d, h.ctx()).neg();
        if op.mul(&op) != minus_one {
            return Err(Error::Domain("operator does not square to -1".into()));
        }
        Ok(CRSpace { n: h.ambient_dim(), h, op })
    }

    /// Builds `(H, I)` from `H^{1,0}`.
    pub fn from_h10(h10: &KSubspace) -> Result<Self> {
        if !h10.intersect(&h10.conj())?.is_zero() {
            return Err(Error::Domain("H10 meets its conjugate".into()));
        }
        let h = h10.sum(&h10.conj())?;
        let op = operator_from_eigenspace(h10, &h);
        Ok(CRSpace { n: h10.ambient_dim(), h, op })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn distinguished(&self) -> &KSubspace {
        &self.h
    }

    pub fn operator(&self) -> &KMatrix {
        &self.op
    }

    /// `I·v` for `v ∈ H`.
    pub fn apply(&self, v: &[FieldElem]) -> Option<Vec<FieldElem>> {
        let c = self.h.coordinates(v)?;
        Some(self.h.basis().mul_vec(&self.op.mul_vec(&c)))
    }

    /// The `+i`-eigenspace `{h − i·I h}` of `I` on `H ⊗ ℂ`.
    pub fn h10(&self) -> KSubspace {
        let m = self.h.ctx();
        if self.h.is_zero() {
            return Subspace::zero(self.n, m);
        }
        let b = self.h.basis();
        let ib = b.mul(&self.op);
        Subspace::span(&b.sub(&ib.scale(&FieldElem::i(m))))
    }
}

/// A real subspace `F ⊆ ℝ^n` with a complex structure on `ℝ^n / F`, written
/// in the quotient coordinates of [`Subspace::quotient_map`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoCRSpace {
    n: usize,
    f: KSubspace,
    op: KMatrix,
}

fn lift(s: &KSubspace, y: &[FieldElem]) -> Vec<FieldElem> {
    let mut v = vec![FieldElem::zero(s.ctx()); s.ambient_dim()];
    for (k, &c) in s.complement_coordinates().iter().enumerate() {
        v[c] = y[k].clone();
    }
    v
}

impl CoCRSpace {
    pub fn new(f: KSubspace, op: KMatrix) -> Result<Self> {
        check_real(&f, "distinguished subspace")?;
        let d = f.ambient_dim() - f.dim();
        if op.rows() != d || op.cols() != d || !op.is_real() {
            return Err(Error::Shape("operator must be a real square matrix on U/F".into()));
        }
        if op.mul(&op) != KMatrix::identity(d, f.ctx()).neg() {
            return Err(Error::Domain("operator does not square to -1".into()));
        }
        Ok(CoCRSpace { n: f.ambient_dim(), f, op })
    }

    pub fn from_f10(f10: &KSubspace) -> Result<Self> {
        if !f10.sum(&f10.conj())?.is_full() {
            return Err(Error::Domain("F10 and its conjugate do not span".into()));
        }
        let f = f10.intersect(&f10.conj())?;
        let q = f.quotient_map();
        let a = f10.image(&q);
        let full = Subspace::full(q.rows(), f.ctx());
        let op = operator_from_eigenspace(&a, &full);
        Ok(CoCRSpace { n: f10.ambient_dim(), f, op })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn distinguished(&self) -> &KSubspace {
        &self.f
    }

    pub fn operator(&self) -> &KMatrix {
        &self.op
    }

    /// Preimage of `(U/F)^{1,0}` in `U ⊗ ℂ`.
    pub fn f10(&self) -> KSubspace {
        let m = self.f.ctx();
        let d = self.op.rows();
        let i = FieldElem::i(m);
        let mut gens = self.f.basis_vectors();
        for k in 0..d {
            let mut e = vec![FieldElem::zero(m); d];
            e[k] = FieldElem::one(m);
            let je = self.op.column(k);
            let y: Vec<FieldElem> = e.iter().zip(&je).map(|(a, b)| a - &(&i * b)).collect();
            gens.push(lift(&self.f, &y));
        }
        Subspace::span_vectors(&gens, self.n, m)
    }
}

/// A bi-CR structure on `ℝ^n`, given by `H^{1,0} ⊆ F^{1,0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiCR {
    h10: KSubspace,
    f10: KSubspace,
}

impl BiCR {
    pub fn new(h10: KSubspace, f10: KSubspace) -> Result<Self> {
        let n = h10.ambient_dim();
        let fail = |msg: &str| Err(Error::Domain(format!("not a bi-CR structure: {msg}")));
        if !h10.intersect(&h10.conj())?.is_zero() {
            return fail("H10 meets its conjugate");
        }
        if !f10.sum(&f10.conj())?.is_full() {
            return fail("F10 and its conjugate do not span");
        }
        if !f10.contains(&h10)? {
            return fail("H10 is not contained in F10");
        }
        if !f10.intersect(&h10.conj())?.is_zero() {
            return fail("F10 meets the conjugate of H10");
        }
        if h10.dim() + f10.dim() != n {
            return fail("H and F do not add up to the whole space");
        }
        Ok(BiCR { h10, f10 })
    }

    pub fn ambient_dim(&self) -> usize {
        self.h10.ambient_dim()
    }

    pub fn h10(&self) -> &KSubspace {
        &self.h10
    }

    pub fn f10(&self) -> &KSubspace {
        &self.f10
    }

    /// Real points of `H^{1,0} ⊕ conj H^{1,0}`.
    pub fn h_real(&self) -> KSubspace {
        self.h10.sum(&self.h10.conj()).expect("same ambient")
    }

    /// Real points of `F^{1,0} ∩ conj F^{1,0}`.
    pub fn f_real(&self) -> KSubspace {
        self.f10.intersect(&self.f10.conj()).expect("same ambient")
    }

    pub fn cr(&self) -> CRSpace {
        CRSpace::from_h10(&self.h10).expect("checked on construction")
    }

    pub fn cocr(&self) -> CoCRSpace {
        CoCRSpace::from_f10(&self.f10).expect("checked on construction")
    }

    /// `I` on `H` extended by zero on `F`, as an `n × n` real matrix.
    pub fn operator_on_h(&self) -> KMatrix {
        let h = self.h_real();
        let f = self.f_real();
        let cr = self.cr();
        let m = h.ctx();
        let b = h.basis().hstack(f.basis());
        let ih = h.basis().mul(cr.operator());
        let img = ih.hstack(&KMatrix::zeros(self.ambient_dim(), f.dim(), m));
        img.mul(&b.inverse().expect("H ⊕ F is the whole space"))
    }
}

pub fn bicr_from_hodge(h: &HodgeStructure) -> Result<BiCR> {
    h.require_weight(2)?;
    let v20 = h.subspace(2, 0);
    let f10 = v20.sum(&h.subspace(1, 1))?;
    BiCR::new(v20, f10)
}

pub fn hodge_from_bicr(b: &BiCR) -> Result<HodgeStructure> {
    let n = b.ambient_dim();
    let m = b.h10.ctx();
    let pieces = vec![
        Piece { p: 2, q: 0, basis: b.h10.basis().clone() },
        Piece { p: 1, q: 1, basis: b.f_real().basis().clone() },
        Piece { p: 0, q: 2, basis: b.h10.conj().basis().clone() },
    ];
    HodgeStructure::new(2, n, m, pieces)
}

/// `H = V ∩ iV` inside the real model of `ℂ^N`, with `I` the restriction of
/// multiplication by `i`.
pub fn induced_cr(v: &KSubspace) -> Result<CRSpace> {
    check_real(v, "V")?;
    let n2 = v.ambient_dim();
    if n2 % 2 != 0 {
        return Err(Error::Shape("real model of a complex space has even dimension".into()));
    }
    let j = complex_structure(n2 / 2, v.ctx());
    let h = v.intersect(&v.image(&j))?;
    let cols: Vec<Vec<FieldElem>> = h
        .basis_vectors()
        .iter()
        .map(|b| h.coordinates(&j.mul_vec(b)).expect("H is J-stable"))
        .collect();
    let op = Matrix::from_columns(&cols, h.dim(), v.ctx());
    CRSpace::new(h, op)
}

/// Co-CR structure on `W/V` with `F` the image of `iV`.
pub fn induced_cocr(v: &KSubspace) -> Result<CoCRSpace> {
    check_real(v, "V")?;
    let n2 = v.ambient_dim();
    if n2 % 2 != 0 {
        return Err(Error::Shape("real model of a complex space has even dimension".into()));
    }
    let m = v.ctx();
    let j = complex_structure(n2 / 2, m);
    let q = v.quotient_map();
    let f = v.image(&j).image(&q);
    let q2 = f.quotient_map();
    let d = q2.rows();
    let cols: Vec<Vec<FieldElem>> = (0..d)
        .map(|k| {
            let mut y = vec![FieldElem::zero(m); d];
            y[k] = FieldElem::one(m);
            let w = lift(v, &lift(&f, &y));
            q2.mul_vec(&q.mul_vec(&j.mul_vec(&w)))
        })
        .collect();
    CoCRSpace::new(f, Matrix::from_columns(&cols, d, m))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrLinearity {
    pub linear: bool,
    pub witness: Option<Vec<FieldElem>>,
}

/// Whether a real-linear map `f` sends `H_X` into `H_Y` complex-linearly.
pub fn cr_linear_check(f: &KMatrix, x: &CRSpace, y: &CRSpace) -> Result<CrLinearity> {
    if f.cols() != x.n || f.rows() != y.n {
        return Err(Error::Shape(format!(
            "map is {}x{}, spaces have dimensions {} and {}",
            f.rows(),
            f.cols(),
            x.n,
            y.n
        )));
    }
    for b in x.h.basis_vectors() {
        let fb = f.mul_vec(&b);
        let ok = match y.apply(&fb) {
            Some(ifb) => f.mul_vec(&x.apply(&b).expect("basis vector of H")) == ifb,
            None => false,
        };
        if !ok {
            return Ok(CrLinearity { linear: false, witness: Some(b) });
        }
    }
    Ok(CrLinearity { linear: true, witness: None })
}

/// Induced CR structure on `γ(V_ℝ)` against `γ` of the `H`-part, for a
/// weight-2 structure.
pub fn induced_cr_image_check(h: &HodgeStructure) -> Result<bool> {
    let emb = crate::tori::canonical_embedding(h)?;
    let gamma = emb.realified();
    let image = Subspace::span(&gamma);
    let cr = induced_cr(&image)?;
    let abel = crate::tori::abel_torus(h)?;
    let h_part = abel.h_part().image(&gamma);
    if *cr.distinguished() != h_part {
        return Ok(false);
    }
    let source = abel.bicr().cr();
    for b in source.distinguished().basis_vectors() {
        let lhs = gamma.mul_vec(&source.apply(&b).expect("basis vector of H"));
        let rhs = cr.apply(&gamma.mul_vec(&b)).expect("image lies in H");
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn k(m: u64, a: [i64; 4]) -> FieldElem {
        FieldElem::from_ints(m, a)
    }

    fn real_span(vs: &[Vec<FieldElem>], n: usize, m: u64) -> KSubspace {
        Subspace::span_vectors(vs, n, m)
    }

    #[test]
    fn whole_space_is_complex() {
        let v = Subspace::full(4, 1);
        let cr = induced_cr(&v).unwrap();
        assert!(cr.distinguished().is_full());
    }

    #[test]
    fn real_line_is_totally_real() {
        let v = real_span(&[vec![k(1, [1, 0, 0, 0]), k(1, [0, 0, 0, 0])]], 2, 1);
        assert!(induced_cr(&v).unwrap().distinguished().is_zero());
        let cocr = induced_cocr(&v).unwrap();
        assert_eq!(cocr.ambient_dim(), 1);
        assert!(cocr.distinguished().is_full());
    }

    #[test]
    fn p3_span() {
        let p = fixtures::fix_p3();
        let v = p.real_span();
        assert_eq!(v.dim(), 3);
        assert_eq!(induced_cr(&v).unwrap().distinguished().dim(), 2);
        let cocr = induced_cocr(&v).unwrap();
        assert_eq!(cocr.ambient_dim(), 1);
        assert!(cocr.distinguished().is_full());
    }

    #[test]
    fn zero_subspace_cocr_is_ambient_structure() {
        let v = Subspace::zero(4, 2);
        let cocr = induced_cocr(&v).unwrap();
        assert!(cocr.distinguished().is_zero());
        assert_eq!(*cocr.operator(), complex_structure(2, 2));
    }

    #[test]
    fn dictionary_on_the_plane() {
        let j = complex_structure(1, 1);
        let cr = CRSpace::new(Subspace::full(2, 1), j).unwrap();
        let expected = real_span(&[vec![k(1, [1, 0, 0, 0]), k(1, [0, 0, -1, 0])]], 2, 1);
        assert_eq!(cr.h10(), expected);
        assert_eq!(CRSpace::from_h10(&cr.h10()).unwrap(), cr);
    }

    #[test]
    fn conjugation_is_not_cr_linear() {
        let j = complex_structure(1, 1);
        let cr = CRSpace::new(Subspace::full(2, 1), j).unwrap();
        let conj = KMatrix::from_rows(
            vec![vec![k(1, [1, 0, 0, 0]), k(1, [0, 0, 0, 0])], vec![k(1, [0, 0, 0, 0]), k(1, [-1, 0, 0, 0])]],
            2,
            1,
        )
        .unwrap();
        let res = cr_linear_check(&conj, &cr, &cr).unwrap();
        assert!(!res.linear);
        assert_eq!(res.witness, Some(vec![k(1, [1, 0, 0, 0]), k(1, [0, 0, 0, 0])]));
        let id = KMatrix::identity(2, 1);
        assert!(cr_linear_check(&id, &cr, &cr).unwrap().linear);
    }

    #[test]
    fn bicr_of_h4() {
        let b = bicr_from_hodge(&fixtures::fix_h4()).unwrap();
        assert_eq!(b.h10().dim(), 1);
        assert_eq!(b.f10().dim(), 3);
        assert!(hodge_from_bicr(&b).unwrap().same_splitting(&fixtures::fix_h4()));
        let b = bicr_from_hodge(&fixtures::fix_hc()).unwrap();
        assert_eq!(b.f10().dim(), 3);
        assert!(hodge_from_bicr(&b).unwrap().same_splitting(&fixtures::fix_hc()));
    }

    #[test]
    fn image_check_on_fixtures() {
        assert!(induced_cr_image_check(&fixtures::fix_h4()).unwrap());
        assert!(induced_cr_image_check(&fixtures::fix_hc()).unwrap());
    }
}
