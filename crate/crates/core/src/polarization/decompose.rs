use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factor::{factor_poly, QPoly};
use super::{endomorphism_algebra, orthogonal_complement, validate_polarization, EndAlgebra};
use crate::error::{Error, Result};
use crate::exactfield::{rat, Rational};
use crate::hodge::{sub_quotient, HodgeStructure, SubQuotientKind};
use crate::linalg::{saturated_lattice, to_rational_matrix, IntMatrix, Matrix, QMatrix, QSubspace, Subspace};

/// Random algebra elements tried per node after the basis elements.
pub const SAMPLES_PER_LEVEL: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    /// `r × d` Hermite basis of the saturated sublattice.
    pub lattice: IntMatrix,
    pub structure: HodgeStructure,
    /// Restriction of the form to `lattice`.
    pub polarization: QMatrix,
    /// No sampled endomorphism split this summand further.
    pub split_exhausted: bool,
    pub end_dim: usize,
    /// The endomorphism algebra is a field, so the summand is simple.
    pub certified_simple: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub seed: u64,
}

/// Monic minimal polynomial of a square rational matrix, constant term first.
pub fn minimal_polynomial(t: &QMatrix) -> QPoly {
    let n = t.rows();
    let id = QMatrix::identity(n, ());
    let mut powers: Vec<Vec<Rational>> = vec![id.entries().to_vec()];
    let mut cur = id;
    loop {
        cur = cur.mul(t);
        let target = cur.entries().to_vec();
        let k = powers.len();
        let a = Matrix::from_columns(&powers, n * n, ());
        if let Some(c) = a.solve(&target) {
            let mut out: QPoly = c.into_iter().map(|x| -x).collect();
            out.resize(k, rat(0));
            out.push(rat(1));
            return out;
        }
        powers.push(target);
    }
}

fn eval_poly(coeffs: &[BigInt], t: &QMatrix) -> QMatrix {
    let n = t.rows();
    coeffs.iter().rev().fold(QMatrix::zeros(n, n, ()), |acc, c| {
        acc.mul(t).add(&QMatrix::identity(n, ()).scale(&Rational::from_integer(c.clone())))
    })
}

fn power(a: &QMatrix, e: usize) -> QMatrix {
    (0..e).fold(QMatrix::identity(a.rows(), ()), |acc, _| acc.mul(a))
}

struct Probe {
    split: Option<QSubspace>,
    certified_simple: bool,
    end_dim: usize,
}

fn candidates(end: &EndAlgebra, seed: u64) -> Vec<QMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = end.basis.clone();
    for _ in 0..SAMPLES_PER_LEVEL {
        let coeffs: Vec<Rational> = (0..end.dim()).map(|_| rat(rng.random_range(-3..=3))).collect();
        out.push(end.combination(&coeffs));
    }
    out
}

fn probe(h: &HodgeStructure, seed: u64) -> Result<Probe> {
    let end = endomorphism_algebra(h)?;
    let r = h.rank();
    let mut certified = end.dim() == 1;
    if end.dim() <= 1 {
        return Ok(Probe { split: None, certified_simple: certified, end_dim: end.dim() });
    }
    for t in candidates(&end, seed) {
        let fac = factor_poly(&minimal_polynomial(&t))?;
        let first = &fac.factors[0];
        let kernel = if fac.factors.len() >= 2 {
            Subspace::kernel(&power(&eval_poly(&first.poly, &t), first.multiplicity))
        } else if first.multiplicity > 1 {
            Subspace::kernel(&eval_poly(&first.poly, &t))
        } else {
            if first.poly.len() - 1 == end.dim() {
                certified = true;
            }
            continue;
        };
        if kernel.dim() > 0 && kernel.dim() < r {
            return Ok(Probe { split: Some(kernel), certified_simple: false, end_dim: end.dim() });
        }
    }
    Ok(Probe { split: None, certified_simple: certified, end_dim: end.dim() })
}

struct Node {
    structure: HodgeStructure,
    lattice: IntMatrix,
    form: QMatrix,
}

fn node(h: &HodgeStructure, q: &QMatrix, u: &QSubspace) -> Result<Node> {
    let sub = sub_quotient(h, u, SubQuotientKind::Sub)?;
    let l = to_rational_matrix(&sub.lattice);
    let form = l.transpose().mul(q).mul(&l);
    Ok(Node { structure: sub.structure, lattice: sub.lattice, form })
}

/// Splits a polarized structure into pairwise orthogonal sub-structures by
/// factoring minimal polynomials of sampled endomorphisms.
pub fn decompose(h: &HodgeStructure, q: &QMatrix, seed: u64) -> Result<Decomposition> {
    validate_polarization(h, q).map_err(Error::InvalidPolarization)?;
    let mut summands = Vec::new();
    let mut stack = vec![Subspace::full(h.rank(), ())];
    while let Some(u) = stack.pop() {
        let n = node(h, q, &u)?;
        let pr = probe(&n.structure, seed)?;
        match pr.split {
            Some(w) => {
                let perp = orthogonal_complement(&n.structure, &n.form, &w)?;
                let l = to_rational_matrix(&n.lattice);
                // Push the complement first so the kernel is handled first.
                stack.push(perp.image(&l));
                stack.push(w.image(&l));
            }
            None => summands.push(Summand {
                lattice: saturated_lattice(&u),
                structure: n.structure,
                polarization: n.form,
                split_exhausted: true,
                end_dim: pr.end_dim,
                certified_simple: pr.certified_simple,
            }),
        }
    }
    Ok(Decomposition { summands, seed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hodge::direct_sum;

    #[test]
    fn minimal_polynomials() {
        let j = QMatrix::from_rows(vec![vec![rat(0), rat(-1)], vec![rat(1), rat(0)]], 2, ()).unwrap();
        assert_eq!(minimal_polynomial(&j), vec![rat(1), rat(0), rat(1)]);
        assert_eq!(minimal_polynomial(&QMatrix::identity(3, ()).scale(&rat(2))), vec![rat(-2), rat(1)]);
    }

    #[test]
    fn fix_e_is_simple() {
        let d = decompose(&fixtures::fix_e(), &fixtures::q_e(), 0).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert!(d.summands[0].certified_simple);
    }

    #[test]
    fn summands_are_orthogonal_and_span() {
        let h = direct_sum(&fixtures::fix_h4(), &fixtures::fix_h4()).unwrap();
        let q = fixtures::q8();
        let d = decompose(&h, &q, 0).unwrap();
        assert!(d.summands.len() >= 2);
        let all = d
            .summands
            .iter()
            .fold(QMatrix::zeros(8, 0, ()), |acc, s| acc.hstack(&to_rational_matrix(&s.lattice)));
        assert_eq!(all.rank(), 8);
        for (a, s) in d.summands.iter().enumerate() {
            for t in &d.summands[a + 1..] {
                let x = to_rational_matrix(&s.lattice);
                let y = to_rational_matrix(&t.lattice);
                assert!(x.transpose().mul(&q).mul(&y).is_zero());
            }
            assert_eq!(validate_polarization(&s.structure, &s.polarization), Ok(()));
        }
    }
}
