//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use hodge_cousin::exactfield::{rat, FieldElem, Rational};
use hodge_cousin::hodge::HodgeStructure;
use hodge_cousin::linalg::{KMatrix, KSubspace, Matrix, QMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn det_leibniz(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return i128::from(a[0][0]);
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                a[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * i128::from(a[0][j]) * det_leibniz(&minor)
        })
        .sum()
}

// ---- polynomials over ℚ, constant term first ----

fn trim(mut f: Vec<Rational>) -> Vec<Rational> {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![rat(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo `b` over ℚ.
fn poly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    let mut r = trim(a.to_vec());
    while r.len() > db {
        let c = r.last().unwrap() / b.last().unwrap();
        let shift = r.len() - 1 - db;
        for i in 0..=db {
            r[shift + i] -= &c * &b[i];
        }
        r = trim(r);
    }
    r
}

fn poly_div(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = b.len() - 1;
    let mut r = trim(a.to_vec());
    let mut q = vec![rat(0); r.len() - db];
    while r.len() > db {
        let c = r.last().unwrap() / b.last().unwrap();
        let shift = r.len() - 1 - db;
        for i in 0..=db {
            r[shift + i] -= &c * &b[i];
        }
        q[shift] = c;
        r = trim(r);
    }
    q
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).flat_map(|d| [d, -d]).collect()
}

/// A nonconstant proper factor of an integer polynomial of degree ≤ 4, by
/// exhaustive search over candidate factors of degree 1 and 2.
fn find_factor(f: &[i64]) -> Option<Vec<i64>> {
    let d = f.len() - 1;
    if d < 2 {
        return None;
    }
    let fq: Vec<Rational> = f.iter().map(|&c| rat(c)).collect();
    let lc = f[d];
    if f[0] == 0 {
        return Some(vec![0, 1]);
    }
    for a in divisors(lc).into_iter().filter(|a| *a > 0) {
        for b in divisors(f[0]) {
            let g = vec![rat(b), rat(a)];
            if poly_rem(&fq, &g).is_empty() {
                return Some(vec![b, a]);
            }
        }
    }
    if d >= 4 {
        let bound: i64 = 16 * (f.iter().map(|c| c * c).sum::<i64>() as f64).sqrt().ceil() as i64 + 1;
        for a in divisors(lc).into_iter().filter(|a| *a > 0) {
            for c in divisors(f[0]) {
                for b in -bound..=bound {
                    let g = vec![rat(c), rat(b), rat(a)];
                    if poly_rem(&fq, &g).is_empty() {
                        return Some(vec![c, b, a]);
                    }
                }
            }
        }
    }
    None
}

/// Irreducible factors (primitive, positive leading coefficient) of an
/// integer polynomial of degree ≤ 4, with repetition, sorted.
pub fn kronecker_factors(f: &[i64]) -> Vec<Vec<i64>> {
    let mut pending = vec![f.to_vec()];
    let mut out = Vec::new();
    while let Some(g) = pending.pop() {
        if g.len() <= 1 {
            continue;
        }
        match find_factor(&g) {
            None => out.push(primitive(&g)),
            Some(h) => {
                let gq: Vec<Rational> = g.iter().map(|&c| rat(c)).collect();
                let hq: Vec<Rational> = h.iter().map(|&c| rat(c)).collect();
                let q = poly_div(&gq, &hq);
                let den = q.iter().fold(BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denom().clone()));
                let q: Vec<i64> = q
                    .iter()
                    .map(|c| i64::try_from((c * Rational::from_integer(den.clone())).to_integer()).unwrap())
                    .collect();
                pending.push(h);
                pending.push(q);
            }
        }
    }
    out.sort();
    out
}

pub fn primitive(f: &[i64]) -> Vec<i64> {
    let g = f.iter().fold(0i64, |acc, &c| num_integer::gcd(acc, c));
    let sign = if f.last().copied().unwrap_or(0) < 0 { -1 } else { 1 };
    f.iter().map(|c| sign * c / g).collect()
}

// ---- Hermitian positivity ----

/// `h(v, v) = vᵀ·G·v̄` over a grid of Gaussian-integer vectors; `false`
/// as soon as a nonzero vector with non-positive value is found.
pub fn positive_on_grid(g: &KMatrix, re: i64, im: i64) -> bool {
    let n = g.rows();
    let m = g.ctx();
    let values: Vec<FieldElem> = (-re..=re)
        .flat_map(|a| (-im..=im).map(move |b| (a, b)))
        .map(|(a, b)| FieldElem::from_ints(m, [a, 0, b, 0]))
        .collect();
    let mut idx = vec![0usize; n];
    loop {
        let v: Vec<FieldElem> = idx.iter().map(|&k| values[k].clone()).collect();
        if v.iter().any(|x| !x.is_zero()) {
            let vbar: Vec<FieldElem> = v.iter().map(FieldElem::conj).collect();
            let h = g.bilinear(&v, &vbar);
            if h.sign_real() != Ok(hodge_cousin::exactfield::Sign::Positive) {
                return false;
            }
        }
        let mut k = 0;
        loop {
            if k == n {
                return true;
            }
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

// ---- lattice enumeration ----

/// All integer vectors in `[-b, b]^n`.
pub fn integer_box(n: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-b..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn rank_of(vectors: &[Vec<i64>], n: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
    let k = rows.len();
    QMatrix::from_rows(rows, n, ()).map(|a| a.rank()).unwrap_or(k)
}

/// Dimension spanned by integer functionals in `[-b, b]^r` vanishing on
/// every piece `V^{p,q}` with `p ≠ q`.
pub fn weight0_functionals_bruteforce(h: &HodgeStructure, b: i64) -> usize {
    let r = h.rank();
    let m = h.m();
    let cols: Vec<Vec<FieldElem>> =
        h.pieces().iter().filter(|pc| pc.p != pc.q).flat_map(|pc| pc.basis.columns()).collect();
    let found: Vec<Vec<i64>> = integer_box(r, b)
        .into_iter()
        .filter(|f| f.iter().any(|x| *x != 0))
        .filter(|f| {
            cols.iter().all(|c| {
                c.iter().zip(f).fold(FieldElem::zero(m), |acc, (x, &y)| &acc + &x.scale(&rat(y))).is_zero()
            })
        })
        .collect();
    rank_of(&found, r)
}

/// Dimension spanned by integer vectors in `[-b, b]^n` lying in `s`.
pub fn rational_points_bruteforce(s: &KSubspace, b: i64) -> usize {
    let n = s.ambient_dim();
    let m = s.ctx();
    let found: Vec<Vec<i64>> = integer_box(n, b)
        .into_iter()
        .filter(|v| v.iter().any(|x| *x != 0))
        .filter(|v| {
            let vk: Vec<FieldElem> = v.iter().map(|&x| FieldElem::from_int(m, x)).collect();
            s.contains_vector(&vk)
        })
        .collect();
    rank_of(&found, n)
}

pub fn q_of(q: &QMatrix, v: &[BigInt]) -> Rational {
    let vq: Vec<Rational> = v.iter().map(|x| Rational::from_integer(x.clone())).collect();
    q.bilinear(&vq, &vq)
}

pub fn abs_big(x: &BigInt) -> BigInt {
    x.abs()
}

pub fn kmatrix_from_ints(m: u64, rows: &[Vec<[i64; 4]>]) -> KMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows(
        rows.iter().map(|r| r.iter().map(|&a| FieldElem::from_ints(m, a)).collect()).collect(),
        cols,
        m,
    )
    .unwrap()
}
