//! Factorization of univariate polynomials over ℚ.
//!
//! Square-free decomposition, then for each square-free part: reduction to
//! a monic integer polynomial, Berlekamp factorization modulo a small prime,
//! Hensel lifting and recombination of the lifted factors.
//!
//! Polynomials are coefficient vectors, constant term first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactfield::Rational;

pub const MAX_DEGREE: usize = 16;

pub type QPoly = Vec<Rational>;
pub type ZPoly = Vec<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    /// Primitive integer polynomial with positive leading coefficient.
    pub poly: ZPoly,
    pub multiplicity: usize,
}

/// `f = unit · Π poly_k^{multiplicity_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn expand(&self) -> QPoly {
        let mut out: QPoly = vec![self.unit.clone()];
        for f in &self.factors {
            let q = to_q(&f.poly);
            for _ in 0..f.multiplicity {
                out = qmul(&out, &q);
            }
        }
        out
    }
}

fn trim<T: Zero>(mut f: Vec<T>) -> Vec<T> {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

pub fn degree<T: Zero>(f: &[T]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

pub fn to_q(f: &[BigInt]) -> QPoly {
    f.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

fn qmul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qsub(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn qderiv(a: &[Rational]) -> QPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn qdivrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        for i in 0..=db {
            r[dr - db + i] -= &c * &b[i];
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn qmonic(a: &[Rational]) -> QPoly {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let l = a[d].clone();
            a[..=d].iter().map(|c| c / &l).collect()
        }
    }
}

fn qgcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&b).is_some() {
        let r = qdivrem(&a, &b).1;
        a = b;
        b = r;
    }
    qmonic(&a)
}

/// Positive rational multiple of `f` with coprime integer coefficients.
fn primitive_part(f: &[Rational]) -> ZPoly {
    let l = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = f
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    zprimitive(&ints)
}

fn zprimitive(f: &[BigInt]) -> ZPoly {
    let f = trim(f.to_vec());
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return f;
    }
    let sign = if f.last().is_some_and(|c| c.is_negative()) { -g } else { g };
    f.iter().map(|c| c / &sign).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact quotient `a / b` over ℤ for monic `b`, if `b` divides `a`.
fn zdiv_monic(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = degree(b)?;
    debug_assert!(b[db].is_one());
    let mut r = trim(a.to_vec());
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            return None;
        }
        let c = r[dr].clone();
        for i in 0..=db {
            r[dr - db + i] -= &c * &b[i];
        }
        q[dr - db] = c;
        r = trim(r);
    }
    Some(trim(q))
}

/// Square-free decomposition (Yun): monic `a_i` with `f ~ Π a_i^i`.
fn squarefree_parts(f: &[Rational]) -> Vec<(QPoly, usize)> {
    let f = qmonic(f);
    let d = qderiv(&f);
    let a0 = qgcd(&f, &d);
    let mut b = qdivrem(&f, &a0).0;
    let c = qdivrem(&d, &a0).0;
    let mut dd = qsub(&c, &qderiv(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&b).is_some_and(|k| k > 0) {
        let a = qgcd(&b, &dd);
        let nb = qdivrem(&b, &a).0;
        let c = qdivrem(&dd, &a).0;
        dd = qsub(&c, &qderiv(&nb));
        if degree(&a).is_some_and(|k| k > 0) {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    out
}

pub fn factor_poly(f: &[Rational]) -> Result<Factorization> {
    let Some(d) = degree(f) else {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    };
    if d > MAX_DEGREE {
        return Err(Error::DegreeTooLarge(d, MAX_DEGREE));
    }
    let mut factors = Vec::new();
    for (part, mult) in squarefree_parts(f) {
        for g in factor_squarefree(&primitive_part(&part)) {
            factors.push(Factor { poly: g, multiplicity: mult });
        }
    }
    factors.sort_by(|a, b| {
        (a.poly.len(), &a.poly, a.multiplicity).cmp(&(b.poly.len(), &b.poly, b.multiplicity))
    });
    let mut fac = Factorization { unit: Rational::one(), factors };
    let expanded = fac.expand();
    fac.unit = &f[d] / &expanded[degree(&expanded).expect("nonzero")];
    Ok(fac)
}

/// Irreducible factors of a primitive square-free integer polynomial.
fn factor_squarefree(g: &[BigInt]) -> Vec<ZPoly> {
    let d = degree(g).expect("nonconstant");
    if d == 1 {
        return vec![g.to_vec()];
    }
    let lc = g[d].clone();
    // G(x) = lc^{d-1} g(x / lc) is monic with integer coefficients.
    let mut big: ZPoly = (0..d).map(|k| &g[k] * lc.pow((d - 1 - k) as u32)).collect();
    big.push(BigInt::one());
    let monic_factors = factor_monic(&big);
    let mut out: Vec<ZPoly> = monic_factors
        .into_iter()
        .map(|h| {
            let scaled: ZPoly = h.iter().enumerate().map(|(k, c)| c * lc.pow(k as u32)).collect();
            zprimitive(&scaled)
        })
        .collect();
    out.sort();
    out
}

const PRIMES: [u64; 25] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101,
];

fn factor_monic(f: &[BigInt]) -> Vec<ZPoly> {
    let d = degree(f).expect("nonconstant");
    if d == 1 {
        return vec![f.to_vec()];
    }
    let p = PRIMES
        .iter()
        .copied()
        .find(|&p| {
            let fp = reduce(f, p);
            let g = pgcd(&fp, &pderiv(&fp, p), p);
            degree(&g) == Some(0)
        })
        .expect("a square-free integer polynomial stays square-free modulo some small prime");
    let modular = berlekamp(&reduce(f, p), p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }
    // Mignotte: every monic factor has coefficients bounded by 2^d · ‖f‖₂.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << d) * (norm2.sqrt() + BigInt::one());
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = multi_lift(f, &modular, p, k);
    recombine(f, lifted, &modulus)
}

fn symmetric(c: &BigInt, modulus: &BigInt) -> BigInt {
    let r = c.mod_floor(modulus);
    if &r * 2 > *modulus {
        r - modulus
    } else {
        r
    }
}

fn recombine(f: &[BigInt], mut pool: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut hit = None;
        for subset in subsets(pool.len(), size) {
            let prod = subset.iter().fold(vec![BigInt::one()], |acc, &i| {
                zmul(&acc, &pool[i]).iter().map(|c| c.mod_floor(modulus)).collect()
            });
            let cand: ZPoly = trim(prod.iter().map(|c| symmetric(c, modulus)).collect());
            if let Some(q) = zdiv_monic(&rest, &cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                rest = q;
                pool = pool
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => size += 1,
        }
    }
    if degree(&rest).is_some_and(|k| k > 0) {
        found.push(rest);
    }
    found
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

// ---- arithmetic in F_p[x], coefficients as u64 < p ----

type PPoly = Vec<u64>;

fn reduce(f: &[BigInt], p: u64) -> PPoly {
    let pb = BigInt::from(p);
    trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                u64::try_from(r).expect("residue fits")
            })
            .collect(),
    )
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn psub(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn padd(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn pdivrem(a: &[u64], b: &[u64], p: u64) -> (PPoly, PPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let inv = inv_mod(b[db], p);
    let mut r = trim(a.to_vec());
    let mut q = vec![0u64; r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr] * inv % p;
        for i in 0..=db {
            r[dr - db + i] = (r[dr - db + i] + p * p - c * b[i] % p) % p;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

fn pmonic(a: &[u64], p: u64) -> PPoly {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = inv_mod(a[d], p);
            a[..=d].iter().map(|c| c * inv % p).collect()
        }
    }
}

fn pgcd(a: &[u64], b: &[u64], p: u64) -> PPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&b).is_some() {
        let r = pdivrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    pmonic(&a, p)
}

fn pderiv(a: &[u64], p: u64) -> PPoly {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
}

/// `(s, t)` with `s·a + t·b = 1` for coprime `a`, `b`.
fn pbezout(a: &[u64], b: &[u64], p: u64) -> (PPoly, PPoly) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while degree(&r1).is_some() {
        let (q, r) = pdivrem(&r0, &r1, p);
        let s = psub(&s0, &pmul(&q, &s1, p), p);
        let t = psub(&t0, &pmul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let d = degree(&r0).expect("nonzero gcd");
    assert_eq!(d, 0, "polynomials are not coprime");
    let inv = inv_mod(r0[0], p);
    let scale = |v: &[u64]| trim(v.iter().map(|c| c * inv % p).collect::<Vec<_>>());
    (scale(&s0), scale(&t0))
}

/// Monic irreducible factors of a monic square-free polynomial over F_p.
fn berlekamp(f: &[u64], p: u64) -> Vec<PPoly> {
    let n = degree(f).expect("nonconstant");
    // Row i of Q holds x^{ip} mod f.
    let xp = {
        let mut base = vec![0, 1];
        let mut acc = vec![1u64];
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = pdivrem(&pmul(&acc, &base, p), f, p).1;
            }
            base = pdivrem(&pmul(&base, &base, p), f, p).1;
            e >>= 1;
        }
        acc
    };
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = pdivrem(&pmul(&cur, &xp, p), f, p).1;
    }
    // Kernel of (Q - I)^T.
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|j| (0..n).map(|i| (rows[i][j] + p - u64::from(i == j)) % p).collect())
        .collect();
    let basis = nullspace_mod(&mut a, p);
    let k = basis.len();
    let mut factors = vec![f.to_vec()];
    for v in &basis {
        if factors.len() == k {
            break;
        }
        let v = trim(v.clone());
        if degree(&v).is_none_or(|d| d == 0) {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if degree(&u) == Some(1) {
                next.push(u);
                continue;
            }
            let mut pending = vec![u];
            let mut done = Vec::new();
            for s in 0..p {
                let shifted = psub(&v, &[s], p);
                let mut still = Vec::new();
                for w in pending {
                    let g = pgcd(&w, &shifted, p);
                    let dg = degree(&g).unwrap_or(0);
                    if dg > 0 && Some(dg) < degree(&w) {
                        still.push(g.clone());
                        still.push(pmonic(&pdivrem(&w, &g, p).0, p));
                    } else {
                        still.push(w);
                    }
                }
                pending = still;
            }
            done.extend(pending);
            next.extend(done);
        }
        factors = next;
    }
    factors.iter().map(|g| pmonic(g, p)).collect()
}

fn nullspace_mod(a: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p * p - f * a[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][free]) % p;
            }
            v
        })
        .collect()
}

// ---- Hensel lifting ----

fn zmod(f: &[BigInt], m: &BigInt) -> ZPoly {
    trim(f.iter().map(|c| c.mod_floor(m)).collect())
}

fn to_z(f: &[u64]) -> ZPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f ≡ g·h (mod p)` (all monic) to a factorization modulo `p^k`.
fn hensel_pair(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (s, t) = pbezout(g, h, p);
    let pb = BigInt::from(p);
    let mut gz = to_z(g);
    let mut hz = to_z(h);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff: ZPoly = {
            let gh = zmul(&gz, &hz);
            let n = f.len().max(gh.len());
            (0..n)
                .map(|i| {
                    f.get(i).cloned().unwrap_or_else(BigInt::zero)
                        - gh.get(i).cloned().unwrap_or_else(BigInt::zero)
                })
                .collect()
        };
        let e: ZPoly = diff.iter().map(|c| c.div_floor(&pj)).collect();
        let ep = reduce(&e, p);
        let (q, r) = pdivrem(&pmul(&t, &ep, p), g, p);
        let dg = r;
        let dh = padd(&pmul(&s, &ep, p), &pmul(&q, h, p), p);
        let next = &pj * &pb;
        gz = zmod(&add_scaled(&gz, &to_z(&dg), &pj), &next);
        hz = zmod(&add_scaled(&hz, &to_z(&dh), &pj), &next);
        pj = next;
    }
    (gz, hz)
}

fn add_scaled(a: &[BigInt], b: &[BigInt], c: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigInt::zero)
                + c * b.get(i).cloned().unwrap_or_else(BigInt::zero)
        })
        .collect()
}

fn multi_lift(f: &[BigInt], modular: &[PPoly], p: u64, k: u32) -> Vec<ZPoly> {
    let modulus = BigInt::from(p).pow(k);
    if modular.len() == 1 {
        return vec![zmod(f, &modulus)];
    }
    let g = &modular[0];
    let h = modular[1..]
        .iter()
        .fold(vec![1u64], |acc, x| pmul(&acc, x, p));
    let (gz, hz) = hensel_pair(f, g, &h, p, k);
    let mut out = vec![gz];
    out.extend(multi_lift(&hz, &modular[1..], p, k));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::rat;

    fn q(coeffs: &[i64]) -> QPoly {
        coeffs.iter().map(|&c| rat(c)).collect()
    }

    fn z(coeffs: &[i64]) -> ZPoly {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn x2_plus_1_is_irreducible() {
        let f = factor_poly(&q(&[1, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![Factor { poly: z(&[1, 0, 1]), multiplicity: 1 }]);
    }

    #[test]
    fn x2_minus_x() {
        let f = factor_poly(&q(&[0, -1, 1])).unwrap();
        let polys: Vec<ZPoly> = f.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(polys, vec![z(&[-1, 1]), z(&[0, 1])]);
    }

    #[test]
    fn x4_minus_4() {
        let f = factor_poly(&q(&[-4, 0, 0, 0, 1])).unwrap();
        let polys: Vec<ZPoly> = f.factors.iter().map(|f| f.poly.clone()).collect();
        assert_eq!(polys, vec![z(&[-2, 0, 1]), z(&[2, 0, 1])]);
        assert_eq!(f.expand(), q(&[-4, 0, 0, 0, 1]));
    }

    #[test]
    fn repeated_and_non_monic() {
        // 4 (x - 1/2)^2 (x^2 + 1) (3x + 2)
        let base = qmul(&qmul(&q(&[-1, 2]), &q(&[-1, 2])), &qmul(&q(&[1, 0, 1]), &q(&[2, 3])));
        let f = factor_poly(&base).unwrap();
        assert_eq!(f.expand(), base);
        assert_eq!(f.factors.len(), 3);
        assert!(f.factors.iter().any(|x| x.poly == z(&[-1, 2]) && x.multiplicity == 2));
    }

    #[test]
    fn swinnerton_dyer_like_needs_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over ℚ but splits modulo every prime.
        let f = factor_poly(&q(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(f.factors.len(), 1);
    }

    #[test]
    fn cyclotomic_product() {
        // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
        let f = factor_poly(&q(&[-1, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        let degs: Vec<usize> = f.factors.iter().map(|f| degree(&f.poly).unwrap()).collect();
        assert_eq!(degs, vec![1, 1, 2, 4]);
    }

    #[test]
    fn degree_bound() {
        let mut big = vec![rat(0); 18];
        big[17] = rat(1);
        assert!(matches!(factor_poly(&big), Err(Error::DegreeTooLarge(17, 16))));
    }
}
