//! Groups `ℂ^N / Λ` given by period data, and the constructions that
//! produce them from Hodge structures.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::crgeom::{complex_structure, cr_linear_check, induced_cr, BiCR, CRSpace, CrLinearity};
use crate::error::{Error, Result};
use crate::exactfield::{is_squarefree, rat, FieldElem, FieldError, Rational};
use crate::hodge::{hodge_morphisms, is_morphism, HodgeStructure, Piece};
use crate::linalg::{
    conj_fixed_points, integer_kernel, lattice_normal_form, primitive_integer_matrix,
    to_rational_matrix, IntMatrix, KMatrix, KSubspace, Matrix, NormalFormKind, QMatrix, QSubspace,
    Subspace,
};

/// `ℂ^N` modulo the ℤ-span of `r` generators that are linearly independent
/// over ℝ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodData {
    ambient_dim: usize,
    m: u64,
    generators: Vec<Vec<FieldElem>>,
}

impl PeriodData {
    pub fn new(ambient_dim: usize, m: u64, generators: Vec<Vec<FieldElem>>) -> Result<Self> {
        if !is_squarefree(m) {
            return Err(FieldError::BadParameter(m).into());
        }
        let generators = generators
            .into_iter()
            .enumerate()
            .map(|(j, g)| {
                if g.len() != ambient_dim {
                    return Err(Error::Shape(format!(
                        "generator {j} has {} coordinates, ambient dimension is {ambient_dim}",
                        g.len()
                    )));
                }
                g.iter().map(|x| Ok(x.with_m(m)?)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let p = PeriodData { ambient_dim, m, generators };
        let rank = p.real_rank();
        if rank < p.rank() {
            return Err(Error::DependentGenerators { rank, count: p.rank() });
        }
        Ok(p)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn generators(&self) -> &[Vec<FieldElem>] {
        &self.generators
    }

    /// Number of lattice generators.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// `N × r` matrix whose columns are the generators.
    pub fn generator_matrix(&self) -> KMatrix {
        Matrix::from_columns(&self.generators, self.ambient_dim, self.m)
    }

    /// The generators in the real model `ℝ^{2N}`, as columns.
    pub fn realified(&self) -> KMatrix {
        let g = self.generator_matrix();
        g.re().vstack(&g.im())
    }

    /// ℝ-span of the lattice inside the real model.
    pub fn real_span(&self) -> KSubspace {
        Subspace::span(&self.realified())
    }

    pub fn real_rank(&self) -> usize {
        self.realified().rank()
    }

    /// ℂ-span of the lattice.
    pub fn complex_span(&self) -> KSubspace {
        Subspace::span(&self.generator_matrix())
    }

    pub fn is_compact(&self) -> bool {
        self.rank() == 2 * self.ambient_dim
    }
}

/// Which half of the Hodge decomposition carries a Jacobi-type quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Half {
    /// `⊕_{p ≤ q} V^{p,q}`
    Lower,
    /// `⊕_{p ≥ q} V^{p,q}`
    Upper,
}

impl Half {
    fn contains(self, p: i32, q: i32) -> bool {
        match self {
            Half::Lower => p <= q,
            Half::Upper => p >= q,
        }
    }
}

/// The lattice projected to the chosen half, in the coordinates of the
/// concatenated piece bases.
pub fn jacobi_group_with(h: &HodgeStructure, half: Half) -> Result<PeriodData> {
    h.validate().map_err(Error::InvalidStructure)?;
    let rows = h.coordinate_rows(|p, q| half.contains(p, q));
    PeriodData::new(rows.rows(), h.m(), rows.columns())
}

/// `⊕_{p ≤ q} V^{p,q} / π(ℤ^r)`.
pub fn jacobi_group(h: &HodgeStructure) -> Result<PeriodData> {
    jacobi_group_with(h, Half::Lower)
}

/// `V^{1,0} / π(ℤ^r)` for a weight-1 structure.
pub fn weight1_torus(h: &HodgeStructure) -> Result<PeriodData> {
    h.require_weight(1)?;
    jacobi_group_with(h, Half::Upper)
}

/// Weight-1 structure of a compact torus: `V^{0,1}` is the kernel of the
/// period map extended ℂ-linearly to `ℂ^r`.
pub fn torus_to_hodge(p: &PeriodData) -> Result<HodgeStructure> {
    if !p.is_compact() {
        return Err(Error::Domain(format!(
            "{} generators in complex dimension {} do not form a compact torus",
            p.rank(),
            p.ambient_dim
        )));
    }
    let pi = p.generator_matrix();
    let v01 = Subspace::kernel(&pi);
    let v10 = v01.conj();
    HodgeStructure::new(
        1,
        p.rank(),
        p.m,
        vec![
            Piece { p: 1, q: 0, basis: v10.basis().clone() },
            Piece { p: 0, q: 1, basis: v01.basis().clone() },
        ],
    )
}

/// `I = i` on `V^{1,0}`, `−i` on `V^{0,1}`.
pub fn complex_structure_from_hodge(h: &HodgeStructure) -> Result<KMatrix> {
    h.require_weight(1)?;
    h.validate().map_err(Error::InvalidStructure)?;
    let i = FieldElem::i(h.m());
    let p10 = h.projection(|p, _| p == 1);
    let p01 = h.projection(|p, _| p == 0);
    Ok(p10.sub(&p01).scale(&i))
}

pub fn hodge_from_complex_structure(op: &KMatrix) -> Result<HodgeStructure> {
    if !op.is_square() || !op.is_real() {
        return Err(Error::Shape("complex structure must be a real square matrix".into()));
    }
    let r = op.rows();
    let m = op.ctx();
    if op.mul(op) != KMatrix::identity(r, m).neg() {
        return Err(Error::Domain("matrix does not square to -1".into()));
    }
    let shifted = op.sub(&KMatrix::identity(r, m).scale(&FieldElem::i(m)));
    let v10 = Subspace::kernel(&shifted);
    HodgeStructure::new(
        1,
        r,
        m,
        vec![
            Piece { p: 1, q: 0, basis: v10.basis().clone() },
            Piece { p: 0, q: 1, basis: v10.conj().basis().clone() },
        ],
    )
}

/// K-linear functionals taking rational values on every generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterSpace {
    /// Each functional as its coefficient vector on `K^N`.
    pub functionals: Vec<Vec<FieldElem>>,
    /// `values[f][j] = f(g_j)`.
    pub values: QMatrix,
}

impl CharacterSpace {
    pub fn dim(&self) -> usize {
        self.functionals.len()
    }
}

/// ℚ-basis of K and the coordinates of K that must vanish on rational
/// elements.
fn field_basis(m: u64) -> (Vec<FieldElem>, Vec<usize>) {
    if m == 1 {
        (vec![FieldElem::one(1), FieldElem::i(1)], vec![2])
    } else {
        (
            vec![
                FieldElem::one(m),
                FieldElem::sqrt_m(m),
                FieldElem::i(m),
                &FieldElem::i(m) * &FieldElem::sqrt_m(m),
            ],
            vec![1, 2, 3],
        )
    }
}

pub fn character_space(p: &PeriodData) -> CharacterSpace {
    let (basis, irrational) = field_basis(p.m);
    let deg = basis.len();
    let n = p.ambient_dim;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in &p.generators {
        for &d in &irrational {
            let row: Vec<Rational> = (0..n)
                .flat_map(|k| basis.iter().map(move |b| (k, b)))
                .map(|(k, b)| (b * &g[k]).coeffs()[d].clone())
                .collect();
            rows.push(row);
        }
    }
    let sol: QSubspace = if rows.is_empty() {
        Subspace::full(n * deg, ())
    } else {
        Subspace::kernel(&Matrix::from_rows(rows, n * deg, ()).expect("uniform rows"))
    };
    let functionals: Vec<Vec<FieldElem>> = sol
        .basis_vectors()
        .iter()
        .map(|x| {
            (0..n)
                .map(|k| {
                    (0..deg).fold(FieldElem::zero(p.m), |acc, c| {
                        &acc + &basis[c].scale(&x[k * deg + c])
                    })
                })
                .collect()
        })
        .collect();
    let values = Matrix::from_fn(functionals.len(), p.rank(), (), |f, j| {
        let v = functionals[f]
            .iter()
            .zip(&p.generators[j])
            .fold(FieldElem::zero(p.m), |acc, (a, b)| &acc + &(a * b));
        debug_assert!(v.is_rational());
        v.rational_part().clone()
    });
    CharacterSpace { functionals, values }
}

pub fn is_cousin_group(p: &PeriodData) -> bool {
    character_space(p).dim() == 0
}

/// `G ≅ C × ℂ^n × (ℂ^*)^t` with `C` Cousin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kopfermann {
    pub linear_dim: usize,
    pub torus_rank: usize,
    pub cousin_part: PeriodData,
}

pub fn kopfermann(p: &PeriodData) -> Result<Kopfermann> {
    let span = p.complex_span();
    let linear_dim = p.ambient_dim - span.dim();
    let chars = character_space(p);
    let torus_rank = chars.values.rank();
    let sub = if chars.dim() == 0 {
        IntMatrix::identity(p.rank(), ())
    } else {
        integer_kernel(&primitive_rows(&chars.values))
    };
    let pi = p.generator_matrix();
    let gens: Vec<Vec<FieldElem>> = (0..sub.cols())
        .map(|c| {
            let x: Vec<FieldElem> = sub
                .column(c)
                .iter()
                .map(|v| FieldElem::from_rational(p.m, Rational::from_integer(v.clone())))
                .collect();
            pi.mul_vec(&x)
        })
        .collect();
    let w = Subspace::span_vectors(&gens, p.ambient_dim, p.m);
    let cousin_part = if w.is_full() {
        PeriodData::new(p.ambient_dim, p.m, gens)?
    } else {
        let coords = gens
            .iter()
            .map(|g| w.coordinates(g).expect("generator lies in its span"))
            .collect();
        PeriodData::new(w.dim(), p.m, coords)?
    };
    Ok(Kopfermann { linear_dim, torus_rank, cousin_part })
}

fn primitive_rows(q: &QMatrix) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = (0..q.rows())
        .map(|i| {
            let row = q.select_rows(&[i]);
            if row.is_zero() {
                vec![BigInt::zero(); q.cols()]
            } else {
                primitive_integer_matrix(&row).row(0).to_vec()
            }
        })
        .collect();
    Matrix::from_rows(rows, q.cols(), ()).expect("uniform rows")
}

/// Real span of the lattice with its induced CR structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalCompact {
    pub real_span: KSubspace,
    pub cr: CRSpace,
}

impl MaximalCompact {
    pub fn real_dim(&self) -> usize {
        self.real_span.dim()
    }
}

pub fn maximal_compact(p: &PeriodData) -> Result<MaximalCompact> {
    let real_span = p.real_span();
    let cr = induced_cr(&real_span)?;
    Ok(MaximalCompact { real_span, cr })
}

/// The real torus `ℝ^r / ℤ^r` of a weight-2 structure with its bi-CR
/// structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelTorus {
    bicr: BiCR,
    h_part: KSubspace,
    f_part: KSubspace,
}

impl AbelTorus {
    pub fn bicr(&self) -> &BiCR {
        &self.bicr
    }

    /// Real points of `V^{2,0} ⊕ V^{0,2}`.
    pub fn h_part(&self) -> &KSubspace {
        &self.h_part
    }

    /// Real points of `V^{1,1}`.
    pub fn f_part(&self) -> &KSubspace {
        &self.f_part
    }

    /// `I` on the `H`-part extended by zero on the `F`-part.
    pub fn operator(&self) -> KMatrix {
        self.bicr.operator_on_h()
    }
}

pub fn abel_torus(h: &HodgeStructure) -> Result<AbelTorus> {
    h.require_weight(2)?;
    h.validate().map_err(Error::InvalidStructure)?;
    let bicr = crate::crgeom::bicr_from_hodge(h)?;
    let h_part = conj_fixed_points(&h.subspace(2, 0).sum(&h.subspace(0, 2))?)?;
    let f_part = conj_fixed_points(&h.subspace(1, 1))?;
    Ok(AbelTorus { bicr, h_part, f_part })
}

/// `γ : ℝ^r → V^{2,0} ⊕ V^{1,1}`, in the coordinates of the piece bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalEmbedding {
    pub gamma: KMatrix,
    /// Coordinates of the projection of `ℤ^r` onto `V^{2,0} ⊕ V^{1,1}`.
    pub projection: KMatrix,
}

impl CanonicalEmbedding {
    pub fn matches_projection(&self) -> bool {
        self.gamma == self.projection
    }

    /// `γ` as a real-linear map `ℝ^r → ℝ^{2N}`.
    pub fn realified(&self) -> KMatrix {
        self.gamma.re().vstack(&self.gamma.im())
    }
}

/// `γ = ϖ ⊕ ι`: the `(2,0)`-component on the `H`-part and the inclusion on
/// the `F`-part.
pub fn canonical_embedding(h: &HodgeStructure) -> Result<CanonicalEmbedding> {
    let abel = abel_torus(h)?;
    let r = h.rank();
    let hb = abel.h_part.basis();
    let fb = abel.f_part.basis();
    let split = hb.hstack(fb).inverse().expect("H ⊕ F = V");
    let to20 = h.coordinate_rows(|p, _| p == 2);
    let to11 = h.coordinate_rows(|p, _| p == 1);
    let hidx: Vec<usize> = (0..hb.cols()).collect();
    let fidx: Vec<usize> = (hb.cols()..r).collect();
    let x_h = hb.mul(&split.select_rows(&hidx));
    let x_f = fb.mul(&split.select_rows(&fidx));
    let gamma = to20.mul(&x_h).vstack(&to11.mul(&x_f));
    let projection = h.coordinate_rows(|p, q| p >= q);
    Ok(CanonicalEmbedding { gamma, projection })
}

/// CR-linearity of `γ` from the Abel torus to `V^{2,0} ⊕ V^{1,1}`.
pub fn embedding_cr_linearity(h: &HodgeStructure) -> Result<CrLinearity> {
    let emb = canonical_embedding(h)?;
    let abel = abel_torus(h)?;
    let n = emb.gamma.rows();
    let target = CRSpace::new(Subspace::full(2 * n, h.m()), complex_structure(n, h.m()))?;
    cr_linear_check(&emb.realified(), &abel.bicr.cr(), &target)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsogenyVerdict {
    Isogenous,
    NotIsogenous,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsogenyReport {
    pub verdict: IsogenyVerdict,
    pub hom_dim: usize,
    /// Integral morphism `ℤ^{r1} → ℤ^{r2}` realizing the isogeny.
    pub witness: Option<IntMatrix>,
    pub kernel_order: Option<BigInt>,
    pub smith_divisors: Vec<BigInt>,
    pub seed: u64,
}

const ISOGENY_TRIALS: usize = 64;

fn combine(basis: &[QMatrix], coeffs: &[i64]) -> QMatrix {
    basis
        .iter()
        .zip(coeffs)
        .fold(Matrix::zeros(basis[0].rows(), basis[0].cols(), ()), |acc, (b, &c)| {
            acc.add(&b.scale(&rat(c)))
        })
}

/// Search for an invertible Hodge morphism `h1 → h2`.
pub fn isogeny_check(h1: &HodgeStructure, h2: &HodgeStructure, seed: u64) -> Result<IsogenyReport> {
    if h1.weight() != h2.weight() {
        return Err(Error::WeightMismatch(h1.weight(), h2.weight()));
    }
    let hom = hodge_morphisms(h1, h2)?;
    let mut report = IsogenyReport {
        verdict: IsogenyVerdict::NotIsogenous,
        hom_dim: hom.len(),
        witness: None,
        kernel_order: None,
        smith_divisors: Vec::new(),
        seed,
    };
    if h1.rank() != h2.rank() || hom.is_empty() {
        return Ok(report);
    }
    let r = h1.rank();
    let mut candidates: Vec<QMatrix> = Vec::new();
    let id = QMatrix::identity(r, ());
    if is_morphism(h1, h2, &id)? {
        candidates.push(id);
    }
    candidates.extend(hom.iter().cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISOGENY_TRIALS {
        let coeffs: Vec<i64> = (0..hom.len()).map(|_| rng.random_range(-3..=3)).collect();
        candidates.push(combine(&hom, &coeffs));
    }
    let mut best = best_invertible(&candidates);
    if best.is_none() {
        if hom.len() > 3 {
            report.verdict = IsogenyVerdict::Inconclusive;
            return Ok(report);
        }
        // det(Σ t_k M_k) has degree at most r in each t_k, so it vanishes on
        // the grid {0..r}^k only if it vanishes identically.
        let k = hom.len();
        let mut grid = Vec::new();
        let mut idx = vec![0i64; k];
        loop {
            grid.push(combine(&hom, &idx));
            let mut pos = 0;
            while pos < k {
                idx[pos] += 1;
                if idx[pos] <= r as i64 {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
        best = best_invertible(&grid);
    }
    if let Some((mat, det)) = best {
        let nf = lattice_normal_form(&mat, NormalFormKind::Smith);
        report.verdict = IsogenyVerdict::Isogenous;
        report.smith_divisors = nf.divisors();
        report.kernel_order = Some(det);
        report.witness = Some(mat);
    }
    Ok(report)
}

fn best_invertible(candidates: &[QMatrix]) -> Option<(IntMatrix, BigInt)> {
    let mut best: Option<(IntMatrix, BigInt)> = None;
    for c in candidates {
        if c.is_zero() {
            continue;
        }
        let int = primitive_integer_matrix(c);
        let det = to_rational_matrix(&int).determinant();
        if det.is_zero() {
            continue;
        }
        let det = det.to_integer().abs();
        if best.as_ref().is_none_or(|(_, d)| det < *d) {
            best = Some((int, det));
        }
        if best.as_ref().is_some_and(|(_, d)| d.is_one()) {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat_frac;
    use crate::fixtures;
    use crate::hodge::{choose_lattice, extend_scalars, weight0_quotient_space};

    fn k(m: u64, a: [i64; 4]) -> FieldElem {
        FieldElem::from_ints(m, a)
    }

    #[test]
    fn weight1_torus_of_e() {
        let t = weight1_torus(&fixtures::fix_e()).unwrap();
        assert_eq!(t.ambient_dim(), 1);
        let half = FieldElem::from_rational(1, rat_frac(1, 2));
        let minus_half_i = &FieldElem::i(1) * &FieldElem::from_rational(1, rat_frac(-1, 2));
        assert_eq!(t.generators(), &[vec![half], vec![minus_half_i]]);
        let j = jacobi_group(&fixtures::fix_e()).unwrap();
        let conj: Vec<Vec<FieldElem>> =
            t.generators().iter().map(|g| g.iter().map(FieldElem::conj).collect()).collect();
        assert_eq!(j.generators(), conj.as_slice());
        assert!(torus_to_hodge(&t).unwrap().same_splitting(&fixtures::fix_e()));
    }

    #[test]
    fn complex_structure_of_e() {
        let op = complex_structure_from_hodge(&fixtures::fix_e()).unwrap();
        let expected = KMatrix::from_rows(
            vec![vec![k(1, [0, 0, 0, 0]), k(1, [1, 0, 0, 0])], vec![k(1, [-1, 0, 0, 0]), k(1, [0, 0, 0, 0])]],
            2,
            1,
        )
        .unwrap();
        assert_eq!(op, expected);
        assert!(hodge_from_complex_structure(&op).unwrap().same_splitting(&fixtures::fix_e()));
        let conj = hodge_from_complex_structure(&op.neg()).unwrap();
        assert!(conj.same_splitting(&fixtures::fix_e().conjugate()));
        assert!(hodge_from_complex_structure(&KMatrix::identity(2, 1)).is_err());
    }

    #[test]
    fn jacobi_groups_of_fixtures() {
        let w2 = jacobi_group(&fixtures::fix_w2()).unwrap();
        assert_eq!(w2.ambient_dim(), 2);
        assert_eq!(character_space(&w2).dim(), 2);
        let kw = kopfermann(&w2).unwrap();
        assert_eq!((kw.linear_dim, kw.torus_rank, kw.cousin_part.rank()), (0, 2, 0));
        let hc = jacobi_group(&fixtures::fix_hc()).unwrap();
        assert_eq!((hc.ambient_dim(), hc.rank(), hc.real_rank()), (3, 4, 4));
        assert_eq!(character_space(&jacobi_group(&fixtures::fix_e()).unwrap()).dim(), 0);
    }

    #[test]
    fn p3_invariants() {
        let p = fixtures::fix_p3();
        assert_eq!(character_space(&p).dim(), 0);
        let kp = kopfermann(&p).unwrap();
        assert_eq!((kp.linear_dim, kp.torus_rank), (0, 0));
        assert_eq!(kp.cousin_part, p);
        assert_eq!(maximal_compact(&p).unwrap().real_dim(), 3);
    }

    #[test]
    fn plain_complex_line() {
        let p = PeriodData::new(1, 1, vec![]).unwrap();
        let kp = kopfermann(&p).unwrap();
        assert_eq!((kp.linear_dim, kp.torus_rank, kp.cousin_part.rank()), (1, 0, 0));
    }

    #[test]
    fn dependent_generators_rejected() {
        let err = PeriodData::new(1, 2, vec![vec![k(2, [1, 0, 0, 0])], vec![k(2, [0, 1, 0, 0])]]);
        assert!(matches!(err, Err(Error::DependentGenerators { rank: 1, count: 2 })));
    }

    #[test]
    fn characters_match_weight0_quotients() {
        for h in [fixtures::fix_h4(), fixtures::fix_hc(), fixtures::fix_w2(), fixtures::fix_e(), fixtures::fix_h8()] {
            let c = character_space(&jacobi_group(&h).unwrap()).dim();
            assert_eq!(c, weight0_quotient_space(&h).dim());
        }
    }

    #[test]
    fn abel_torus_parts() {
        let a = abel_torus(&fixtures::fix_h4()).unwrap();
        let e = |i: usize| {
            let mut v = vec![k(1, [0, 0, 0, 0]); 4];
            v[i] = k(1, [1, 0, 0, 0]);
            v
        };
        assert_eq!(*a.h_part(), Subspace::span_vectors(&[e(0), e(1)], 4, 1));
        assert_eq!(*a.f_part(), Subspace::span_vectors(&[e(2), e(3)], 4, 1));
        let hc = abel_torus(&fixtures::fix_hc()).unwrap();
        assert_eq!(*hc.f_part(), fixtures::fix_hc().subspace(1, 1));
        assert_eq!(hc.h_part().dim(), 2);
    }

    #[test]
    fn gamma_agrees_with_projection() {
        for h in [fixtures::fix_h4(), fixtures::fix_hc()] {
            assert!(canonical_embedding(&h).unwrap().matches_projection());
            assert!(embedding_cr_linearity(&h).unwrap().linear);
        }
    }

    #[test]
    fn maximal_compact_of_jacobi_group() {
        let h = fixtures::fix_h4();
        let p = jacobi_group_with(&h, Half::Upper).unwrap();
        let mc = maximal_compact(&p).unwrap();
        assert_eq!(mc.real_dim(), 4);
        let emb = canonical_embedding(&h).unwrap();
        assert_eq!(mc.real_span, Subspace::span(&emb.realified()));
    }

    #[test]
    fn isogenies() {
        let e = fixtures::fix_e();
        let b = QMatrix::from_rows(vec![vec![rat(3), rat(0)], vec![rat(0), rat(1)]], 2, ()).unwrap();
        let e3 = choose_lattice(&extend_scalars(&e), &b).unwrap();
        let rep = isogeny_check(&e, &e3, 0).unwrap();
        assert_eq!(rep.verdict, IsogenyVerdict::Isogenous);
        assert_eq!(rep.kernel_order, Some(BigInt::from(3)));
        let rep = isogeny_check(&e, &e, 0).unwrap();
        assert_eq!(rep.kernel_order, Some(BigInt::one()));
        let rep = isogeny_check(&fixtures::fix_h4(), &fixtures::fix_hc(), 0).unwrap();
        assert_eq!(rep.verdict, IsogenyVerdict::NotIsogenous);
    }
}
