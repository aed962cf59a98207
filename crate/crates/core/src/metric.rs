//! CR Hermitian metrics, geodesic actions on flat tori, Hermitian
//! extensions to the Jacobi ambient and the recovery of weight-2 structures
//! from abelian Cousin groups.

use num_bigint::BigInt;

use crate::crgeom::{bicr_from_hodge, complex_structure, induced_cr, BiCR};
use crate::error::{Error, Result};
use crate::exactfield::{FieldElem, Rational};
use crate::hodge::{is_cousin, HodgeStructure, Piece};
use crate::linalg::{KMatrix, KSubspace, Matrix, QMatrix, Subspace};
use crate::polarization::{is_negative_definite, is_positive_definite, validate_polarization};
use crate::tori::{abel_torus, character_space, jacobi_group_with, Half, PeriodData};

/// A bi-CR structure on `ℝ^n` with a pseudo-metric `g`: negative definite
/// and `I`-invariant on `H`, positive definite on `F`, `H ⊥ F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CRHermitian {
    bicr: BiCR,
    g: KMatrix,
}

impl CRHermitian {
    pub fn new(bicr: BiCR, g: KMatrix) -> Result<Self> {
        let n = bicr.ambient_dim();
        if g.rows() != n || g.cols() != n {
            return Err(Error::Shape(format!("metric is {}x{}, space has dimension {n}", g.rows(), g.cols())));
        }
        let fail = |msg: &str| Err(Error::Domain(format!("not a CR Hermitian structure: {msg}")));
        if !g.is_real() || !g.is_symmetric() {
            return fail("g is not real symmetric");
        }
        let hb = bicr.h_real().basis().clone();
        let fb = bicr.f_real().basis().clone();
        let gh = hb.transpose().mul(&g).mul(&hb);
        if hb.cols() > 0 && !is_negative_definite(&gh) {
            return fail("g is not negative definite on H");
        }
        let ihb = bicr.operator_on_h().mul(&hb);
        if ihb.transpose().mul(&g).mul(&ihb) != gh {
            return fail("g is not I-invariant on H");
        }
        if fb.cols() > 0 && !is_positive_definite(&fb.transpose().mul(&g).mul(&fb)) {
            return fail("g is not positive definite on F");
        }
        if !hb.transpose().mul(&g).mul(&fb).is_zero() {
            return fail("H and F are not g-orthogonal");
        }
        Ok(CRHermitian { bicr, g })
    }

    pub fn bicr(&self) -> &BiCR {
        &self.bicr
    }

    pub fn g(&self) -> &KMatrix {
        &self.g
    }
}

pub fn cr_hermitian_from_polarization(h: &HodgeStructure, q: &QMatrix) -> Result<CRHermitian> {
    h.require_weight(2)?;
    validate_polarization(h, q).map_err(Error::InvalidPolarization)?;
    CRHermitian::new(bicr_from_hodge(h)?, q.to_k(h.m()))
}

/// `g(v, v)`: the action of the closed geodesic `t ↦ t·v`, `t ∈ [0, 1]`.
pub fn geodesic_action(g: &KMatrix, v: &[BigInt]) -> FieldElem {
    let m = g.ctx();
    let vk: Vec<FieldElem> = v
        .iter()
        .map(|x| FieldElem::from_rational(m, Rational::from_integer(x.clone())))
        .collect();
    g.bilinear(&vk, &vk)
}

/// A lattice vector with irrational action, if any. Rationality on `e_j`
/// and `e_j + e_k` decides it for all of `ℤ^r`.
pub fn irrational_action_witness(g: &KMatrix) -> Option<Vec<BigInt>> {
    let r = g.rows();
    let unit = |ks: &[usize]| -> Vec<BigInt> {
        (0..r).map(|i| BigInt::from(u8::from(ks.contains(&i)))).collect()
    };
    let mut probes: Vec<Vec<BigInt>> = (0..r).map(|j| unit(&[j])).collect();
    for j in 0..r {
        for k in j + 1..r {
            probes.push(unit(&[j, k]));
        }
    }
    probes.into_iter().find(|v| !geodesic_action(g, v).is_rational())
}

pub fn is_polarized_metric(g: &KMatrix) -> bool {
    irrational_action_witness(g).is_none()
}

/// Hermitian form `h(z, w) = zᵀ·(re + i·im)·w̄` on `ℂ^N`, with `re` real
/// symmetric and `im` real antisymmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianForm {
    pub re: KMatrix,
    pub im: KMatrix,
}

impl HermitianForm {
    pub fn new(re: KMatrix, im: KMatrix) -> Result<Self> {
        let n = re.rows();
        if !re.is_square() || im.rows() != n || im.cols() != n {
            return Err(Error::Shape("Hermitian form needs two square matrices of one size".into()));
        }
        if !re.is_real() || !im.is_real() || !re.is_symmetric() || im.transpose() != im.neg() {
            return Err(Error::Domain("real part must be symmetric and imaginary part antisymmetric".into()));
        }
        Ok(HermitianForm { re, im })
    }

    /// Reads `Re h` on the real model `ℝ^{2N}`; `g` must be `J`-invariant.
    pub fn from_real_metric(g: &KMatrix) -> Result<Self> {
        let n2 = g.rows();
        let n = n2 / 2;
        let top: Vec<usize> = (0..n).collect();
        let bottom: Vec<usize> = (n..n2).collect();
        let re = g.select_rows(&top).select_columns(&top);
        let im = g.select_rows(&top).select_columns(&bottom);
        let form = HermitianForm::new(re, im)?;
        if form.real_metric() != *g {
            return Err(Error::Domain("metric is not invariant under multiplication by i".into()));
        }
        Ok(form)
    }

    pub fn dim(&self) -> usize {
        self.re.rows()
    }

    pub fn complex(&self) -> KMatrix {
        let i = FieldElem::i(self.re.ctx());
        self.re.add(&self.im.scale(&i))
    }

    /// `Re h` on `ℝ^{2N}` in the coordinates `(Re z, Im z)`.
    pub fn real_metric(&self) -> KMatrix {
        self.re.hstack(&self.im).vstack(&self.im.neg().hstack(&self.re))
    }

    pub fn is_positive_definite(&self) -> bool {
        is_positive_definite(&self.complex())
    }
}

/// The metric induced on the real span of `frame`, written in the
/// coordinates given by the columns of `frame`: `−Re h` on `H = V ∩ iV` and
/// `Re h` on the `Re h`-orthogonal complement of `H` in `V`.
pub fn induced_cr_hermitian_on(h: &HermitianForm, frame: &KMatrix) -> Result<CRHermitian> {
    let gt = h.real_metric();
    if frame.rows() != gt.rows() {
        return Err(Error::Shape(format!(
            "frame lives in dimension {}, form in dimension {}",
            frame.rows(),
            gt.rows()
        )));
    }
    let d = frame.cols();
    if frame.rank() != d {
        return Err(Error::Domain("frame columns are not linearly independent".into()));
    }
    let m = frame.ctx();
    let v = Subspace::span(frame);
    let cr = induced_cr(&v)?;
    let hb = cr.distinguished().basis().clone();
    let coords = |vecs: &KMatrix| -> KMatrix {
        let cols: Vec<Vec<FieldElem>> =
            vecs.columns().iter().map(|x| frame.solve(x).expect("vector lies in V")).collect();
        Matrix::from_columns(&cols, d, m)
    };
    let c_h = coords(&hb);
    let c_f = hb.transpose().mul(&gt).mul(frame).kernel_basis();
    let fb = frame.mul(&c_f);
    let block = hb
        .transpose()
        .mul(&gt)
        .mul(&hb)
        .neg()
        .block_diagonal(&fb.transpose().mul(&gt).mul(&fb));
    let tinv = c_h.hstack(&c_f).inverse().expect("H and its complement span V");
    let g = tinv.transpose().mul(&block).mul(&tinv);
    let shifted = cr.operator().sub(&KMatrix::identity(hb.cols(), m).scale(&FieldElem::i(m)));
    let h10: KSubspace = Subspace::span(&c_h.mul(&shifted.kernel_basis()));
    let f10 = h10.sum(&Subspace::span(&c_f))?;
    CRHermitian::new(BiCR::new(h10, f10)?, g)
}

/// [`induced_cr_hermitian_on`] in the canonical basis of a real subspace.
pub fn induced_cr_hermitian(h: &HermitianForm, v: &KSubspace) -> Result<CRHermitian> {
    induced_cr_hermitian_on(h, v.basis())
}

/// Periods of `⊕_{p ≥ q} V^{p,q} / π(ℤ^r)` with a Hermitian form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianExtension {
    pub periods: PeriodData,
    pub h: HermitianForm,
}

impl HermitianExtension {
    /// Metric induced on the maximal compact subgroup, in lattice
    /// coordinates.
    pub fn induced(&self) -> Result<CRHermitian> {
        induced_cr_hermitian_on(&self.h, &self.periods.realified())
    }
}

/// Extends `g = Q` from `γ(ℝ^r)` to the ambient: `−g` on `γ(H)`, `g` on
/// `γ(F)` and on `iγ(F)`, the three blocks mutually orthogonal.
pub fn hermitian_extension(h: &HodgeStructure, q: &QMatrix) -> Result<HermitianExtension> {
    let cr = cr_hermitian_from_polarization(h, q)?;
    let periods = jacobi_group_with(h, Half::Upper)?;
    let abel = abel_torus(h)?;
    let gamma = periods.realified();
    let n = periods.ambient_dim();
    let j = complex_structure(n, h.m());
    let bh = abel.h_part().basis();
    let bf = abel.f_part().basis();
    let g = cr.g();
    let gh = bh.transpose().mul(g).mul(bh);
    let gf = bf.transpose().mul(g).mul(bf);
    let c = gamma.mul(bh).hstack(&gamma.mul(bf)).hstack(&j.mul(&gamma).mul(bf));
    let cinv = c.inverse().ok_or_else(|| Error::Domain("γ(H), γ(F) and iγ(F) do not span".into()))?;
    let block = gh.neg().block_diagonal(&gf).block_diagonal(&gf);
    let gt = cinv.transpose().mul(&block).mul(&cinv);
    let ext = HermitianExtension { periods, h: HermitianForm::from_real_metric(&gt)? };
    if ext.induced()?.g() != g {
        return Err(Error::Domain("induced metric differs from the polarization".into()));
    }
    Ok(ext)
}

/// A Cousin group with a positive definite Hermitian form whose induced
/// metric on the maximal compact subgroup has rational actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianCousinData {
    periods: PeriodData,
    h: HermitianForm,
    induced: CRHermitian,
}

impl AbelianCousinData {
    pub fn try_new(periods: PeriodData, h: HermitianForm) -> Result<Self> {
        if h.dim() != periods.ambient_dim() {
            return Err(Error::Shape(format!(
                "form has dimension {}, periods live in dimension {}",
                h.dim(),
                periods.ambient_dim()
            )));
        }
        if !h.is_positive_definite() {
            return Err(Error::Domain("Hermitian form is not positive definite".into()));
        }
        let chars = character_space(&periods).dim();
        if chars > 0 {
            return Err(Error::Domain(format!("not a Cousin group: character space has dimension {chars}")));
        }
        let induced = induced_cr_hermitian_on(&h, &periods.realified())?;
        if let Some(v) = irrational_action_witness(induced.g()) {
            let v: Vec<String> = v.iter().map(ToString::to_string).collect();
            return Err(Error::Domain(format!("lattice vector ({}) has irrational action", v.join(", "))));
        }
        Ok(AbelianCousinData { periods, h, induced })
    }

    pub fn periods(&self) -> &PeriodData {
        &self.periods
    }

    pub fn hermitian(&self) -> &HermitianForm {
        &self.h
    }

    pub fn induced(&self) -> &CRHermitian {
        &self.induced
    }
}

impl TryFrom<HermitianExtension> for AbelianCousinData {
    type Error = Error;

    fn try_from(ext: HermitianExtension) -> Result<Self> {
        AbelianCousinData::try_new(ext.periods, ext.h)
    }
}

/// `V^{2,0} = H^{1,0}` and `V^{1,1} = F ⊗ ℂ` of the induced bi-CR structure
/// on the lattice, polarized by the induced metric.
pub fn reconstruct(a: &AbelianCousinData) -> Result<(HodgeStructure, QMatrix)> {
    let cr = a.induced();
    let q = cr
        .g()
        .to_rational()
        .ok_or_else(|| Error::Domain("induced metric is not rational on the lattice".into()))?;
    let h10 = cr.bicr().h10();
    let pieces = vec![
        Piece { p: 2, q: 0, basis: h10.basis().clone() },
        Piece { p: 1, q: 1, basis: cr.bicr().f_real().basis().clone() },
        Piece { p: 0, q: 2, basis: h10.conj().basis().clone() },
    ];
    let h = HodgeStructure::new(2, a.periods.rank(), a.periods.m(), pieces)?;
    validate_polarization(&h, &q).map_err(Error::InvalidPolarization)?;
    if !is_cousin(&h) {
        return Err(Error::Domain("recovered structure is not Cousin".into()));
    }
    Ok((h, q))
}
