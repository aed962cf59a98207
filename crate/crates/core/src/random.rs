//! Seeded generators of valid and polarized Hodge structures.

use rand::Rng;

use crate::exactfield::{rat, FieldElem};
use crate::hodge::{HodgeStructure, Piece};
use crate::linalg::{KMatrix, Matrix, QMatrix};

fn small<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    rng.random_range(-bound..=bound)
}

pub fn random_elem<R: Rng + ?Sized>(rng: &mut R, m: u64) -> FieldElem {
    let s = if m == 1 { 0 } else { 1 };
    FieldElem::from_ints(m, [small(rng, 2), s * small(rng, 2), small(rng, 2), s * small(rng, 2)])
}

pub fn random_real_elem<R: Rng + ?Sized>(rng: &mut R, m: u64) -> FieldElem {
    let s = if m == 1 { 0 } else { 1 };
    FieldElem::from_ints(m, [small(rng, 2), s * small(rng, 2), 0, 0])
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, m: u64, real: bool) -> KMatrix {
    Matrix::from_fn(rows, cols, m, |_, _| {
        if real {
            random_real_elem(rng, m)
        } else {
            random_elem(rng, m)
        }
    })
}

/// Random Hodge numbers `h^{n−k,k}` (indexed by `k`) summing to `rank`;
/// `None` when the weight is odd and the rank is odd.
pub fn random_hodge_numbers<R: Rng + ?Sized>(rng: &mut R, weight: u32, rank: usize) -> Option<Vec<usize>> {
    let n = weight as usize;
    let mut numbers = vec![0; n + 1];
    let upper = n.div_ceil(2);
    if n % 2 == 1 && rank % 2 == 1 {
        return None;
    }
    let mut budget = if n % 2 == 1 { rank / 2 } else { rank / 2 - rng.random_range(0..=rank / 2) };
    if n % 2 == 0 {
        numbers[n / 2] = rank - 2 * budget;
    }
    if upper == 0 {
        numbers[0] = rank;
        return Some(numbers);
    }
    while budget > 0 {
        let k = rng.random_range(0..upper);
        numbers[k] += 1;
        numbers[n - k] += 1;
        budget -= 1;
    }
    Some(numbers)
}

/// Random valid structure with the given Hodge numbers `h^{n−k,k}`.
pub fn random_structure_with<R: Rng + ?Sized>(rng: &mut R, weight: u32, m: u64, numbers: &[usize]) -> HodgeStructure {
    let n = weight as usize;
    assert_eq!(numbers.len(), n + 1, "one Hodge number per index");
    assert!((0..=n).all(|k| numbers[k] == numbers[n - k]), "Hodge numbers must be symmetric");
    let rank: usize = numbers.iter().sum();
    loop {
        let mut pieces = Vec::new();
        for k in 0..=n {
            let (p, q) = ((n - k) as i32, k as i32);
            let basis = if 2 * k < n {
                random_matrix(rng, rank, numbers[k], m, false)
            } else if 2 * k == n {
                random_matrix(rng, rank, numbers[k], m, true)
            } else {
                pieces
                    .iter()
                    .find(|pc: &&Piece| (pc.p, pc.q) == (q, p))
                    .expect("upper piece built first")
                    .basis
                    .conj()
            };
            pieces.push(Piece { p, q, basis });
        }
        if let Ok(h) = HodgeStructure::new(weight, rank, m, pieces) {
            return h;
        }
    }
}

pub fn random_structure<R: Rng + ?Sized>(rng: &mut R, weight: u32, rank: usize, m: u64) -> Option<HodgeStructure> {
    let numbers = random_hodge_numbers(rng, weight, rank)?;
    Some(random_structure_with(rng, weight, m, &numbers))
}

fn unit(r: usize, k: usize, m: u64) -> Vec<FieldElem> {
    (0..r).map(|j| FieldElem::from_int(m, i64::from(j == k))).collect()
}

fn diag(d: &[i64]) -> QMatrix {
    Matrix::from_fn(d.len(), d.len(), (), |i, j| if i == j { rat(d[i]) } else { rat(0) })
}

/// Random invertible integer matrix with determinant `±1`.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, r: usize, steps: usize) -> QMatrix {
    let mut a = QMatrix::identity(r, ());
    if r < 2 {
        return a;
    }
    for _ in 0..steps {
        let i = rng.random_range(0..r);
        let j = (i + rng.random_range(1..r)) % r;
        let c = rat(small(rng, 2));
        let mut e = QMatrix::identity(r, ());
        e.set(i, j, c);
        a = e.mul(&a);
    }
    a
}

/// Moves `(h, q)` by a `q`-isometry `t` over ℚ(√m) and then by a
/// unimodular change of lattice `a`.
fn move_polarized(h: HodgeStructure, q: &QMatrix, t: &KMatrix, a: &QMatrix) -> (HodgeStructure, QMatrix) {
    let h = h.transform(t).transform(&a.to_k(h.m()));
    let ainv = a.inverse().expect("unimodular");
    (h, ainv.transpose().mul(q).mul(&ainv))
}

/// Random polarized weight-2 structure with the given `h^{2,0}` and
/// `h^{1,1}`, obtained from a standard model by `Q`-reflections over ℚ(√m).
pub fn random_polarized_weight2<R: Rng + ?Sized>(rng: &mut R, h20: usize, h11: usize, m: u64) -> (HodgeStructure, QMatrix) {
    let r = 2 * h20 + h11;
    let signs: Vec<i64> = (0..r).map(|k| if k < 2 * h20 { -1 } else { 1 }).collect();
    let q = diag(&signs);
    let i = FieldElem::i(m);
    let v20: Vec<Vec<FieldElem>> = (0..h20)
        .map(|k| {
            let (a, b) = (unit(r, 2 * k, m), unit(r, 2 * k + 1, m));
            a.iter().zip(&b).map(|(x, y)| x + &(&i * y)).collect()
        })
        .collect();
    let v11: Vec<Vec<FieldElem>> = (2 * h20..r).map(|k| unit(r, k, m)).collect();
    let b20 = Matrix::from_columns(&v20, r, m);
    let pieces = vec![
        Piece { p: 2, q: 0, basis: b20.clone() },
        Piece { p: 1, q: 1, basis: Matrix::from_columns(&v11, r, m) },
        Piece { p: 0, q: 2, basis: b20.conj() },
    ];
    let h = HodgeStructure::new(2, r, m, pieces).expect("standard model is valid");
    let qk = q.to_k(m);
    let mut t = KMatrix::identity(r, m);
    let mut done = 0;
    while done < 3 {
        let v = random_matrix(rng, r, 1, m, true);
        let norm = v.transpose().mul(&qk).mul(&v).get(0, 0).clone();
        if norm.is_zero() {
            continue;
        }
        let two = FieldElem::from_int(m, 2);
        let coef = two.try_div(&norm).expect("nonzero");
        let refl = KMatrix::identity(r, m).sub(&v.mul(&v.transpose()).mul(&qk).scale(&coef));
        t = refl.mul(&t);
        done += 1;
    }
    let a = random_unimodular(rng, r, 2 * r);
    move_polarized(h, &q, &t, &a)
}

/// Random polarized weight-1 structure of rank `2g`, obtained from the
/// standard symplectic model by symplectic transvections over ℚ(√m).
pub fn random_polarized_weight1<R: Rng + ?Sized>(rng: &mut R, g: usize, m: u64) -> (HodgeStructure, QMatrix) {
    let r = 2 * g;
    let q = Matrix::from_fn(r, r, (), |a, b| {
        if b == a + g {
            rat(1)
        } else if a == b + g {
            rat(-1)
        } else {
            rat(0)
        }
    });
    let i = FieldElem::i(m);
    let v10: Vec<Vec<FieldElem>> = (0..g)
        .map(|k| {
            let (a, b) = (unit(r, k, m), unit(r, g + k, m));
            a.iter().zip(&b).map(|(x, y)| x + &(&i * y)).collect()
        })
        .collect();
    let b10 = Matrix::from_columns(&v10, r, m);
    let h = HodgeStructure::new(
        1,
        r,
        m,
        vec![Piece { p: 1, q: 0, basis: b10.clone() }, Piece { p: 0, q: 1, basis: b10.conj() }],
    )
    .expect("standard model is valid");
    let qk = q.to_k(m);
    let mut t = KMatrix::identity(r, m);
    for _ in 0..3 {
        let v = random_matrix(rng, r, 1, m, true);
        let c = random_real_elem(rng, m);
        let tv = KMatrix::identity(r, m).add(&v.mul(&v.transpose()).mul(&qk).scale(&c));
        t = tv.mul(&t);
    }
    let a = random_unimodular(rng, r, 2 * r);
    move_polarized(h, &q, &t, &a)
}
