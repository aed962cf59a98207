//! Integral Hodge structures with K-defined pieces.
//!
//! The lattice is always the standard `ℤ^r`; a piece `V^{p,q}` is the
//! K-span of the columns of an `r × h^{p,q}` matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{is_squarefree, FieldElem, FieldError};
use crate::linalg::{
    integer_kernel, rational_kernel, saturated_lattice, IntMatrix, KMatrix, KSubspace, Matrix,
    QMatrix, QSubspace, Subspace,
};

#[derive(Clone, PartialEq, Eq)]
pub struct Piece {
    pub p: i32,
    pub q: i32,
    pub basis: KMatrix,
}

impl fmt::Debug for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V^({},{}) = span {:?}", self.p, self.q, self.basis)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct HodgeStructure {
    weight: u32,
    rank: usize,
    m: u64,
    pieces: Vec<Piece>,
}

impl fmt::Debug for HodgeStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HodgeStructure")
            .field("weight", &self.weight)
            .field("rank", &self.rank)
            .field("m", &self.m)
            .field("pieces", &self.pieces)
            .finish()
    }
}

/// First violated axiom found by [`HodgeStructure::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Index { p: i32, q: i32, reason: String },
    Conjugation { p: i32, q: i32, witness: Vec<FieldElem> },
    Splitting { dimension: usize, rank: usize, witness: Option<Vec<FieldElem>> },
}

impl Violation {
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::Index { .. } => "index",
            Violation::Conjugation { .. } => "conjugation",
            Violation::Splitting { .. } => "splitting",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Index { p, q, reason } => write!(f, "piece ({p},{q}): {reason}"),
            Violation::Conjugation { p, q, witness } => write!(
                f,
                "conjugate of a vector of V^({p},{q}) is not in V^({q},{p}): {witness:?}"
            ),
            Violation::Splitting { dimension, rank, witness } => match witness {
                Some(w) => write!(f, "piece bases are linearly dependent: relation {w:?}"),
                None => write!(f, "piece dimensions sum to {dimension}, rank is {rank}"),
            },
        }
    }
}

/// The field parameter of a computation involving data over `a` and `b`.
pub fn common_m(a: u64, b: u64) -> Result<u64> {
    match (a, b) {
        _ if a == b => Ok(a),
        (1, _) => Ok(b),
        (_, 1) => Ok(a),
        _ => Err(FieldError::MismatchedField(a, b).into()),
    }
}

impl HodgeStructure {
    /// Assembles a structure without checking the Hodge axioms; only shapes
    /// and field parameters are checked. Pieces are sorted by decreasing `p`.
    pub fn from_parts(weight: u32, rank: usize, m: u64, pieces: Vec<Piece>) -> Result<Self> {
        if !is_squarefree(m) {
            return Err(FieldError::BadParameter(m).into());
        }
        let mut out = Vec::with_capacity(pieces.len());
        for piece in pieces {
            if piece.basis.rows() != rank {
                return Err(Error::Shape(format!(
                    "basis of piece ({},{}) has {} rows, rank is {rank}",
                    piece.p,
                    piece.q,
                    piece.basis.rows()
                )));
            }
            let basis = piece.basis.with_m(m)?;
            out.push(Piece { basis, ..piece });
        }
        out.sort_by_key(|pc| (std::cmp::Reverse(pc.p), pc.q));
        Ok(HodgeStructure {
            weight,
            rank,
            m,
            pieces: out,
        })
    }

    /// Assembles and validates.
    pub fn new(weight: u32, rank: usize, m: u64, pieces: Vec<Piece>) -> Result<Self> {
        let h = Self::from_parts(weight, rank, m, pieces)?;
        h.validate().map_err(Error::InvalidStructure)?;
        Ok(h)
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// All admissible indices `(p, q)`, `p` decreasing.
    pub fn indices(&self) -> Vec<(i32, i32)> {
        let n = self.weight as i32;
        (0..=n).rev().map(|p| (p, n - p)).collect()
    }

    pub fn piece_basis(&self, p: i32, q: i32) -> KMatrix {
        self.pieces
            .iter()
            .find(|pc| pc.p == p && pc.q == q)
            .map(|pc| pc.basis.clone())
            .unwrap_or_else(|| Matrix::zeros(self.rank, 0, self.m))
    }

    pub fn subspace(&self, p: i32, q: i32) -> KSubspace {
        Subspace::span(&self.piece_basis(p, q))
    }

    pub fn hodge_number(&self, p: i32, q: i32) -> usize {
        self.subspace(p, q).dim()
    }

    pub fn hodge_numbers(&self) -> Vec<((i32, i32), usize)> {
        self.indices()
            .into_iter()
            .map(|(p, q)| ((p, q), self.hodge_number(p, q)))
            .collect()
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.weight as i32;
        for (k, pc) in self.pieces.iter().enumerate() {
            let reason = if pc.p < 0 || pc.q < 0 {
                Some("negative index".to_string())
            } else if pc.p + pc.q != n {
                Some(format!("p + q = {} differs from the weight {n}", pc.p + pc.q))
            } else if self.pieces[..k].iter().any(|o| o.p == pc.p && o.q == pc.q) {
                Some("index appears twice".to_string())
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(Violation::Index { p: pc.p, q: pc.q, reason });
            }
        }
        for pc in &self.pieces {
            let target = self.subspace(pc.q, pc.p);
            let c = pc.basis.conj();
            for j in 0..c.cols() {
                let v = c.column(j);
                if !target.contains_vector(&v) {
                    return Err(Violation::Conjugation {
                        p: pc.p,
                        q: pc.q,
                        witness: pc.basis.column(j),
                    });
                }
            }
        }
        let b = self.raw_basis_matrix();
        if b.cols() != self.rank {
            return Err(Violation::Splitting {
                dimension: b.cols(),
                rank: self.rank,
                witness: None,
            });
        }
        let k = b.kernel_basis();
        if k.cols() > 0 {
            return Err(Violation::Splitting {
                dimension: b.cols(),
                rank: self.rank,
                witness: Some(k.column(0)),
            });
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    fn raw_basis_matrix(&self) -> KMatrix {
        self.pieces
            .iter()
            .fold(Matrix::zeros(self.rank, 0, self.m), |acc, pc| acc.hstack(&pc.basis))
    }

    /// Concatenated piece bases in decreasing `p`; invertible for a valid
    /// structure.
    pub fn basis_matrix(&self) -> KMatrix {
        self.raw_basis_matrix()
    }

    /// `(p, q, first column, width)` of every piece inside [`Self::basis_matrix`].
    pub fn piece_blocks(&self) -> Vec<(i32, i32, usize, usize)> {
        let mut start = 0;
        self.pieces
            .iter()
            .map(|pc| {
                let w = pc.basis.cols();
                let out = (pc.p, pc.q, start, w);
                start += w;
                out
            })
            .collect()
    }

    /// Rows of the inverse basis matrix belonging to the selected pieces:
    /// the coordinate map onto their sum, along the others.
    pub fn coordinate_rows(&self, mut select: impl FnMut(i32, i32) -> bool) -> KMatrix {
        let inv = self
            .basis_matrix()
            .inverse()
            .expect("valid structure has an invertible basis matrix");
        let idx: Vec<usize> = self
            .piece_blocks()
            .into_iter()
            .filter(|&(p, q, _, _)| select(p, q))
            .flat_map(|(_, _, s, w)| s..s + w)
            .collect();
        inv.select_rows(&idx)
    }

    /// Selected columns of the basis matrix, matching [`Self::coordinate_rows`].
    pub fn basis_columns(&self, mut select: impl FnMut(i32, i32) -> bool) -> KMatrix {
        let idx: Vec<usize> = self
            .piece_blocks()
            .into_iter()
            .filter(|&(p, q, _, _)| select(p, q))
            .flat_map(|(_, _, s, w)| s..s + w)
            .collect();
        self.basis_matrix().select_columns(&idx)
    }

    /// Projection of `K^r` onto the sum of the selected pieces.
    pub fn projection(&self, mut select: impl FnMut(i32, i32) -> bool) -> KMatrix {
        let b = self.basis_columns(&mut select);
        let c = self.coordinate_rows(&mut select);
        b.mul(&c)
    }

    /// Same structure with every piece basis replaced by its canonical
    /// column-echelon basis and every admissible index present.
    pub fn canonical(&self) -> Self {
        let pieces = self
            .indices()
            .into_iter()
            .map(|(p, q)| Piece {
                p,
                q,
                basis: self.subspace(p, q).basis().clone(),
            })
            .collect();
        HodgeStructure {
            weight: self.weight,
            rank: self.rank,
            m: self.m,
            pieces,
        }
    }

    /// True when both structures have identical weight, rank and pieces as
    /// subspaces.
    pub fn same_splitting(&self, other: &Self) -> bool {
        if self.weight != other.weight || self.rank != other.rank {
            return false;
        }
        let Ok(m) = common_m(self.m, other.m) else {
            return false;
        };
        let (Ok(a), Ok(b)) = (self.with_m(m), other.with_m(m)) else {
            return false;
        };
        a.indices()
            .into_iter()
            .all(|(p, q)| a.subspace(p, q) == b.subspace(p, q))
    }

    pub fn with_m(&self, m: u64) -> Result<Self> {
        if m == self.m {
            return Ok(self.clone());
        }
        let pieces = self
            .pieces
            .iter()
            .map(|pc| {
                Ok(Piece {
                    p: pc.p,
                    q: pc.q,
                    basis: pc.basis.with_m(m)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HodgeStructure {
            weight: self.weight,
            rank: self.rank,
            m,
            pieces,
        })
    }

    /// Image under a K-linear automorphism `a` of `K^r`, with canonical bases.
    pub fn transform(&self, a: &KMatrix) -> Self {
        let pieces = self
            .indices()
            .into_iter()
            .map(|(p, q)| Piece {
                p,
                q,
                basis: self.subspace(p, q).image(a).basis().clone(),
            })
            .collect();
        HodgeStructure {
            weight: self.weight,
            rank: a.rows(),
            m: self.m,
            pieces,
        }
    }

    /// Structure with the conjugate splitting `V^{p,q} ↦ V^{q,p}`.
    pub fn conjugate(&self) -> Self {
        let pieces = self
            .pieces
            .iter()
            .map(|pc| Piece {
                p: pc.q,
                q: pc.p,
                basis: pc.basis.clone(),
            })
            .collect();
        Self::from_parts(self.weight, self.rank, self.m, pieces).expect("shapes unchanged")
    }

    pub(crate) fn require_weight(&self, expected: u32) -> Result<()> {
        if self.weight != expected {
            return Err(Error::WrongWeight {
                expected,
                found: self.weight,
            });
        }
        Ok(())
    }
}

/// A ℚ-Hodge structure: the same splitting with the lattice forgotten.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalHodgeStructure {
    inner: HodgeStructure,
}

impl RationalHodgeStructure {
    pub fn splitting(&self) -> &HodgeStructure {
        &self.inner
    }

    pub fn rank(&self) -> usize {
        self.inner.rank
    }
}

pub fn extend_scalars(h: &HodgeStructure) -> RationalHodgeStructure {
    RationalHodgeStructure { inner: h.clone() }
}

/// Makes the columns of `basis` the standard lattice `ℤ^r`.
pub fn choose_lattice(h: &RationalHodgeStructure, basis: &QMatrix) -> Result<HodgeStructure> {
    let h = &h.inner;
    if basis.rows() != h.rank || !basis.is_square() {
        return Err(Error::Shape(format!(
            "lattice basis is {}x{}, rank is {}",
            basis.rows(),
            basis.cols(),
            h.rank
        )));
    }
    let inv = basis.inverse().ok_or(crate::linalg::LinalgError::Singular)?;
    Ok(h.transform(&inv.to_k(h.m)))
}

fn morphism_conditions(h1: &HodgeStructure, h2: &HodgeStructure) -> Result<KMatrix> {
    if h1.weight != h2.weight {
        return Err(Error::WeightMismatch(h1.weight, h2.weight));
    }
    let m = common_m(h1.m, h2.m)?;
    let (h1, h2) = (h1.with_m(m)?, h2.with_m(m)?);
    let (r1, r2) = (h1.rank, h2.rank);
    let mut rows: Vec<Vec<FieldElem>> = Vec::new();
    for (p, q) in h1.indices() {
        let b = h1.subspace(p, q);
        if b.is_zero() {
            continue;
        }
        let a = h2.subspace(p, q).annihilator();
        let b = b.basis();
        // (A · M · B)[x][y] = Σ_{k,l} A[x][k] · B[l][y] · M[k][l]
        for x in 0..a.rows() {
            for y in 0..b.cols() {
                let mut row = vec![FieldElem::zero(m); r2 * r1];
                for k in 0..r2 {
                    let akx = a.get(x, k);
                    if akx.is_zero() {
                        continue;
                    }
                    for l in 0..r1 {
                        row[k * r1 + l] = akx * b.get(l, y);
                    }
                }
                rows.push(row);
            }
        }
    }
    Ok(Matrix::from_rows(rows, r2 * r1, m)?)
}

/// ℚ-basis of the rational `r2 × r1` matrices mapping each `V1^{p,q}` into
/// `V2^{p,q}`.
pub fn hodge_morphisms(h1: &HodgeStructure, h2: &HodgeStructure) -> Result<Vec<QMatrix>> {
    let cond = morphism_conditions(h1, h2)?;
    let (r1, r2) = (h1.rank, h2.rank);
    let sol = rational_kernel(&cond);
    Ok(sol
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_fn(r2, r1, (), |i, j| v[i * r1 + j].clone()))
        .collect())
}

pub fn is_morphism(h1: &HodgeStructure, h2: &HodgeStructure, mat: &QMatrix) -> Result<bool> {
    if mat.rows() != h2.rank || mat.cols() != h1.rank {
        return Err(Error::Shape("morphism matrix has the wrong shape".into()));
    }
    let m = common_m(h1.m, h2.m)?;
    let mk = mat.to_k(m);
    for (p, q) in h1.indices() {
        let src = h1.with_m(m)?.subspace(p, q);
        let dst = h2.with_m(m)?.subspace(p, q);
        if !dst.contains(&src.image(&mk))? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn direct_sum(h1: &HodgeStructure, h2: &HodgeStructure) -> Result<HodgeStructure> {
    if h1.weight != h2.weight {
        return Err(Error::WeightMismatch(h1.weight, h2.weight));
    }
    let m = common_m(h1.m, h2.m)?;
    let (a, b) = (h1.with_m(m)?, h2.with_m(m)?);
    let pieces = a
        .indices()
        .into_iter()
        .map(|(p, q)| Piece {
            p,
            q,
            basis: a.piece_basis(p, q).block_diagonal(&b.piece_basis(p, q)),
        })
        .collect();
    HodgeStructure::from_parts(a.weight, a.rank + b.rank, m, pieces)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubQuotientKind {
    Sub,
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubQuotient {
    pub structure: HodgeStructure,
    /// For a sub: the `r × d` inclusion of the saturated sublattice (Hermite
    /// form columns). For a quotient: the `(r − d) × r` integral projection.
    pub lattice: IntMatrix,
}

/// `W_K ∩ V^{p,q}` for every index, or the first index where `W` fails to
/// split.
pub fn split_subspace(h: &HodgeStructure, w: &QSubspace) -> Result<Vec<((i32, i32), KSubspace)>> {
    if w.ambient_dim() != h.rank {
        return Err(Error::Shape(format!(
            "subspace lives in dimension {}, rank is {}",
            w.ambient_dim(),
            h.rank
        )));
    }
    let wk = KSubspace::from_rational(w, h.m);
    let mut out = Vec::new();
    for (p, q) in h.indices() {
        let proj = h.projection(|a, b| (a, b) == (p, q));
        let projected = wk.image(&proj);
        let inter = wk.intersect(&h.subspace(p, q))?;
        if projected.dim() != inter.dim() {
            return Err(Error::NotSubStructure {
                p,
                q,
                projected: projected.dim(),
                intersected: inter.dim(),
            });
        }
        out.push(((p, q), inter));
    }
    Ok(out)
}

pub fn is_sub_structure(h: &HodgeStructure, w: &QSubspace) -> bool {
    split_subspace(h, w).is_ok()
}

pub fn sub_quotient(h: &HodgeStructure, w: &QSubspace, kind: SubQuotientKind) -> Result<SubQuotient> {
    let parts = split_subspace(h, w)?;
    let lat = saturated_lattice(w);
    match kind {
        SubQuotientKind::Sub => {
            let lk = lat.map((), |x| crate::exactfield::Rational::from_integer(x.clone())).to_k(h.m);
            let d = lat.cols();
            let pieces = parts
                .into_iter()
                .map(|((p, q), inter)| {
                    let cols: Vec<Vec<FieldElem>> = inter
                        .basis_vectors()
                        .iter()
                        .map(|v| lk.solve(v).expect("vector lies in the sublattice span"))
                        .collect();
                    let basis = Subspace::span(&Matrix::from_columns(&cols, d, h.m)).basis().clone();
                    Piece { p, q, basis }
                })
                .collect();
            Ok(SubQuotient {
                structure: HodgeStructure::from_parts(h.weight, d, h.m, pieces)?,
                lattice: lat,
            })
        }
        SubQuotientKind::Quotient => {
            let proj = integer_kernel(&lat.transpose()).transpose();
            let pk = proj.map((), |x| crate::exactfield::Rational::from_integer(x.clone())).to_k(h.m);
            let pieces = h
                .indices()
                .into_iter()
                .map(|(p, q)| Piece {
                    p,
                    q,
                    basis: h.subspace(p, q).image(&pk).basis().clone(),
                })
                .collect();
            Ok(SubQuotient {
                structure: HodgeStructure::from_parts(h.weight, proj.rows(), h.m, pieces)?,
                lattice: proj,
            })
        }
    }
}

/// Rational functionals vanishing on every `V^{p,q}` with `p ≠ q`, as the
/// columns of a ℚ-subspace of `(ℚ^r)*`.
pub fn weight0_quotient_space(h: &HodgeStructure) -> QSubspace {
    let rows = h
        .pieces
        .iter()
        .filter(|pc| pc.p != pc.q)
        .fold(Matrix::zeros(0, h.rank, h.m), |acc: KMatrix, pc| {
            acc.vstack(&pc.basis.transpose())
        });
    rational_kernel(&rows)
}

pub fn is_cousin(h: &HodgeStructure) -> bool {
    weight0_quotient_space(h).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;
    use crate::fixtures;

    fn qsub(vs: &[&[i64]], n: usize) -> QSubspace {
        let vs: Vec<Vec<_>> = vs.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
        Subspace::span_vectors(&vs, n, ())
    }

    #[test]
    fn fixtures_validate() {
        for h in [fixtures::fix_e(), fixtures::fix_h4(), fixtures::fix_hc(), fixtures::fix_w2(), fixtures::fix_h8()] {
            assert_eq!(h.validate(), Ok(()));
        }
    }

    #[test]
    fn swapped_piece_reports_conjugation() {
        let h = fixtures::fix_h4();
        let v20 = h.piece_basis(2, 0);
        let pieces = vec![
            Piece { p: 2, q: 0, basis: v20.clone() },
            Piece { p: 1, q: 1, basis: h.piece_basis(1, 1) },
            Piece { p: 0, q: 2, basis: v20 },
        ];
        let bad = HodgeStructure::from_parts(2, 4, 1, pieces).unwrap();
        match bad.validate() {
            Err(Violation::Conjugation { p: 2, q: 0, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_index_is_reported_first() {
        let h = fixtures::fix_e();
        let pieces = vec![
            Piece { p: 2, q: -1, basis: h.piece_basis(1, 0) },
            Piece { p: 0, q: 1, basis: h.piece_basis(0, 1) },
        ];
        let bad = HodgeStructure::from_parts(1, 2, 1, pieces).unwrap();
        assert_eq!(bad.validate().unwrap_err().axiom(), "index");
    }

    #[test]
    fn dependent_pieces_violate_splitting() {
        let h = fixtures::fix_h4();
        let pieces = vec![
            Piece { p: 2, q: 0, basis: h.piece_basis(2, 0) },
            Piece { p: 1, q: 1, basis: h.piece_basis(1, 1).select_columns(&[0]) },
            Piece { p: 0, q: 2, basis: h.piece_basis(0, 2) },
        ];
        let bad = HodgeStructure::from_parts(2, 4, 1, pieces).unwrap();
        assert_eq!(bad.validate().unwrap_err().axiom(), "splitting");
    }

    #[test]
    fn endomorphisms_of_fix_e() {
        let h = fixtures::fix_e();
        let ends = hodge_morphisms(&h, &h).unwrap();
        assert_eq!(ends.len(), 2);
        let j = QMatrix::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]], 2, ()).unwrap();
        assert!(is_morphism(&h, &h, &j).unwrap());
        assert!(is_morphism(&h, &h, &QMatrix::identity(2, ())).unwrap());
    }

    #[test]
    fn no_morphisms_between_h4_and_hc() {
        assert!(hodge_morphisms(&fixtures::fix_h4(), &fixtures::fix_hc()).unwrap().is_empty());
    }

    #[test]
    fn weight0_quotients() {
        let w = weight0_quotient_space(&fixtures::fix_h4());
        assert_eq!(w, qsub(&[&[0, 0, 1, 0], &[0, 0, 0, 1]], 4));
        assert!(weight0_quotient_space(&fixtures::fix_hc()).is_zero());
        assert!(weight0_quotient_space(&fixtures::fix_e()).is_zero());
        assert!(!is_cousin(&fixtures::fix_w2()));
        assert!(is_cousin(&fixtures::fix_hc()));
    }

    #[test]
    fn choose_lattice_doubles_period() {
        let h = fixtures::fix_e();
        let b = QMatrix::from_rows(vec![vec![rat(2), rat(0)], vec![rat(0), rat(1)]], 2, ()).unwrap();
        let g = choose_lattice(&extend_scalars(&h), &b).unwrap();
        let expected = Subspace::span_vectors(
            &[vec![FieldElem::one(1), FieldElem::from_ints(1, [0, 0, 2, 0])]],
            2,
            1,
        );
        assert_eq!(g.subspace(1, 0), expected);
        assert!(g.is_valid());
    }

    #[test]
    fn e1_is_not_a_sub_structure_of_h4() {
        let err = sub_quotient(&fixtures::fix_h4(), &qsub(&[&[1, 0, 0, 0]], 4), SubQuotientKind::Sub)
            .unwrap_err();
        assert!(matches!(err, Error::NotSubStructure { p: 2, q: 0, .. }));
    }

    #[test]
    fn factors_of_h8() {
        let h8 = fixtures::fix_h8();
        let w = qsub(&[&[1, 0, 0, 0, 0, 0, 0, 0], &[0, 1, 0, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0, 0, 0]], 8);
        let sub = sub_quotient(&h8, &w, SubQuotientKind::Sub).unwrap();
        assert!(sub.structure.same_splitting(&fixtures::fix_h4()));
        let quo = sub_quotient(&h8, &w, SubQuotientKind::Quotient).unwrap();
        assert!(quo.structure.same_splitting(&fixtures::fix_hc()));
    }

    #[test]
    fn direct_sum_with_zero() {
        let h = fixtures::fix_hc();
        let zero = HodgeStructure::new(2, 0, 2, vec![]).unwrap();
        assert!(direct_sum(&h, &zero).unwrap().same_splitting(&h));
        assert!(direct_sum(&fixtures::fix_h4(), &h).unwrap().same_splitting(&fixtures::fix_h8()));
    }
}
