//! Hermite and Smith normal forms of integer matrices with unimodular
//! transforms, and saturated sublattices of ℤ^n.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Matrix, QMatrix, QSubspace};
use crate::exactfield::Rational;

pub type IntMatrix = Matrix<BigInt>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalFormKind {
    Hermite,
    Smith,
}

/// A normal form `left · A · right` (with `right` the identity for Hermite).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub kind: NormalFormKind,
    pub form: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl NormalForm {
    /// Diagonal entries of a Smith form (the elementary divisors, padded
    /// with zeros for rank-deficient inputs).
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = self.form.rows().min(self.form.cols());
        (0..n).map(|i| self.form.get(i, i).clone()).collect()
    }
}

pub fn lattice_normal_form(a: &IntMatrix, kind: NormalFormKind) -> NormalForm {
    match kind {
        NormalFormKind::Hermite => {
            let (form, left) = hermite_normal_form(a);
            NormalForm {
                kind,
                form,
                left,
                right: IntMatrix::identity(a.cols(), ()),
            }
        }
        NormalFormKind::Smith => {
            let (form, left, right) = smith_normal_form(a);
            NormalForm {
                kind,
                form,
                left,
                right,
            }
        }
    }
}

fn swap_rows(a: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols() {
        let x = a.get(i, c).clone();
        let y = a.get(j, c).clone();
        a.set(i, c, y);
        a.set(j, c, x);
    }
}

fn swap_cols(a: &mut IntMatrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in 0..a.rows() {
        let x = a.get(r, i).clone();
        let y = a.get(r, j).clone();
        a.set(r, i, y);
        a.set(r, j, x);
    }
}

/// row_i -= q · row_j
fn row_sub(a: &mut IntMatrix, i: usize, j: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for c in 0..a.cols() {
        let v = a.get(i, c) - q * a.get(j, c);
        a.set(i, c, v);
    }
}

/// col_i -= q · col_j
fn col_sub(a: &mut IntMatrix, i: usize, j: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for r in 0..a.rows() {
        let v = a.get(r, i) - q * a.get(r, j);
        a.set(r, i, v);
    }
}

fn negate_row(a: &mut IntMatrix, i: usize) {
    for c in 0..a.cols() {
        let v = -a.get(i, c);
        a.set(i, c, v);
    }
}

/// Row-style Hermite normal form `H = U·A`: echelon with positive pivots and
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows(), ());
    let mut r = 0;
    for c in 0..h.cols() {
        if r == h.rows() {
            break;
        }
        loop {
            let best = (r..h.rows())
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&i, &j| h.get(i, c).abs().cmp(&h.get(j, c).abs()));
            let Some(p) = best else { break };
            swap_rows(&mut h, r, p);
            swap_rows(&mut u, r, p);
            let mut done = true;
            for i in r + 1..h.rows() {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                row_sub(&mut h, i, r, &q);
                row_sub(&mut u, i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            row_sub(&mut h, i, r, &q);
            row_sub(&mut u, i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form `D = U·A·V` with `d_1 | d_2 | …` and nonnegative
/// diagonal.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows(), ());
    let mut v = IntMatrix::identity(a.cols(), ());
    let n = a.rows().min(a.cols());
    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows() {
                for j in t..d.cols() {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return finish_smith(d, u, v);
            };
            swap_rows(&mut d, t, bi);
            swap_rows(&mut u, t, bi);
            swap_cols(&mut d, t, bj);
            swap_cols(&mut v, t, bj);

            let mut clean = true;
            for i in t + 1..d.rows() {
                let q = d.get(i, t).div_floor(d.get(t, t));
                row_sub(&mut d, i, t, &q);
                row_sub(&mut u, i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..d.cols() {
                let q = d.get(t, j).div_floor(d.get(t, t));
                col_sub(&mut d, j, t, &q);
                col_sub(&mut v, j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let piv = d.get(t, t).clone();
            let bad = (t + 1..d.rows()).find(|&i| {
                (t + 1..d.cols()).any(|j| !d.get(i, j).is_multiple_of(&piv))
            });
            match bad {
                Some(i) => {
                    // row_t += row_i
                    let minus_one = -BigInt::one();
                    row_sub(&mut d, t, i, &minus_one);
                    row_sub(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    finish_smith(d, u, v)
}

fn finish_smith(mut d: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let n = d.rows().min(d.cols());
    for t in 0..n {
        if d.get(t, t).is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    (d, u, v)
}

/// ℤ-basis (as columns, in Hermite form) of `{x ∈ ℤ^n : A·x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let n = a.cols();
    if a.rows() == 0 {
        return IntMatrix::identity(n, ());
    }
    let (h, u) = hermite_normal_form(&a.transpose());
    let zero_rows: Vec<usize> = (0..h.rows())
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .collect();
    if zero_rows.is_empty() {
        return IntMatrix::zeros(n, 0, ());
    }
    let basis_rows = u.select_rows(&zero_rows);
    hermite_normal_form(&basis_rows).0.transpose()
}

/// Scales each row of a rational matrix by the lcm of its denominators.
pub(crate) fn clear_row_denominators(q: &QMatrix) -> IntMatrix {
    let rows = q
        .to_rows()
        .into_iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows, q.cols(), ()).expect("shape preserved")
}

/// The unique positive multiple of a nonzero rational matrix that is an
/// integer matrix with coprime entries (up to the sign of the first nonzero
/// entry, which is made positive).
pub fn primitive_integer_matrix(q: &QMatrix) -> IntMatrix {
    let l = q
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled = q.map((), |x| (x * Rational::from_integer(l.clone())).to_integer());
    let g = scaled.entries().iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return scaled;
    }
    let sign = scaled
        .entries()
        .iter()
        .find(|x| !x.is_zero())
        .map_or(BigInt::one(), |x| if x.is_negative() { -BigInt::one() } else { BigInt::one() });
    scaled.map((), |x| x / &g * &sign)
}

pub fn to_rational_matrix(a: &IntMatrix) -> QMatrix {
    a.map((), |x| Rational::from_integer(x.clone()))
}

/// ℤ-basis of the saturated lattice `W ∩ ℤ^n`, as columns in Hermite form.
pub fn saturated_lattice(w: &QSubspace) -> IntMatrix {
    let n = w.ambient_dim();
    if w.is_full() {
        return IntMatrix::identity(n, ());
    }
    if w.is_zero() {
        return IntMatrix::zeros(n, 0, ());
    }
    integer_kernel(&clear_row_denominators(&w.annihilator()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
            cols,
            (),
        )
        .unwrap()
    }

    fn int_det(a: &IntMatrix) -> BigInt {
        a.map((), |x| Rational::from_integer(x.clone())).determinant().to_integer()
    }

    #[test]
    fn smith_of_diag_2_3() {
        let a = im(&[&[2, 0], &[0, 3]]);
        let nf = lattice_normal_form(&a, NormalFormKind::Smith);
        assert_eq!(nf.form, im(&[&[1, 0], &[0, 6]]));
        assert_eq!(nf.left.mul(&a).mul(&nf.right), nf.form);
        assert!(int_det(&nf.left).abs().is_one());
        assert!(int_det(&nf.right).abs().is_one());
    }

    #[test]
    fn identity_normal_forms() {
        let id = IntMatrix::identity(3, ());
        assert_eq!(smith_normal_form(&id).0, id);
        assert_eq!(hermite_normal_form(&id).0, id);
    }

    #[test]
    fn hermite_shape() {
        let a = im(&[&[4, 6, 2], &[2, 3, 1], &[1, 0, 5]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a), h);
        assert!(int_det(&u).abs().is_one());
        assert_eq!(h, im(&[&[1, 0, 5], &[0, 3, -9], &[0, 0, 0]]));
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // x + 2y = 0 over ℤ has kernel ℤ·(-2, 1) (or (2,-1)), not 2ℤ·(..)
        let a = im(&[&[1, 2]]);
        let k = integer_kernel(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        let g = k.column(0).iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        assert!(g.is_one());
    }
}
