//! Exact arithmetic in ℚ and in the biquadratic field K = ℚ(i, √m).
//!
//! A [`FieldElem`] stores four rational coordinates with respect to the
//! fixed ℚ-basis `{1, s, i, i·s}` where `s = √m`. The parameter `m` is a
//! squarefree positive integer carried by every element; binary operations
//! between elements with different `m` are rejected. For `m = 1` the field
//! degenerates to ℚ(i) and the `s`, `i·s` coordinates are kept at zero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field parameter mismatch: m = {0} vs m = {1}")]
    MismatchedField(u64, u64),
    #[error("field parameter m = {0} is not a squarefree positive integer")]
    BadParameter(u64),
    #[error("element {0} has a nonzero imaginary part")]
    NotReal(String),
    #[error("element {0} does not lie in the subfield required by m = {1}")]
    NotInSubfield(String, u64),
}

/// Returns true when `m` is a squarefree positive integer.
pub fn is_squarefree(m: u64) -> bool {
    if m == 0 {
        return false;
    }
    let mut n = m;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return false;
            }
        }
        d += 1;
    }
    true
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

/// Exact sign of a real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_rational(q: &Rational) -> Sign {
        match q.cmp(&Rational::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// An element `a0 + a1·s + a2·i + a3·i·s` of ℚ(i, √m).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    m: u64,
    coeffs: [Rational; 4],
}

impl FieldElem {
    /// Builds an element, folding the `s` coordinates into the rational ones
    /// when `m = 1`.
    pub fn new(m: u64, coeffs: [Rational; 4]) -> Result<Self, FieldError> {
        if !is_squarefree(m) {
            return Err(FieldError::BadParameter(m));
        }
        Ok(Self::new_unchecked(m, coeffs))
    }

    pub(crate) fn new_unchecked(m: u64, coeffs: [Rational; 4]) -> Self {
        let [a0, a1, a2, a3] = coeffs;
        if m == 1 {
            FieldElem {
                m,
                coeffs: [a0 + a1, Rational::zero(), a2 + a3, Rational::zero()],
            }
        } else {
            FieldElem {
                m,
                coeffs: [a0, a1, a2, a3],
            }
        }
    }

    pub fn zero(m: u64) -> Self {
        FieldElem {
            m,
            coeffs: [
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
                Rational::zero(),
            ],
        }
    }

    pub fn one(m: u64) -> Self {
        Self::from_rational(m, Rational::one())
    }

    pub fn from_rational(m: u64, q: Rational) -> Self {
        FieldElem {
            m,
            coeffs: [q, Rational::zero(), Rational::zero(), Rational::zero()],
        }
    }

    pub fn from_int(m: u64, n: i64) -> Self {
        Self::from_rational(m, rat(n))
    }

    /// The imaginary unit `i`.
    pub fn i(m: u64) -> Self {
        Self::new_unchecked(m, [rat(0), rat(0), rat(1), rat(0)])
    }

    /// The square root `s = √m`.
    pub fn sqrt_m(m: u64) -> Self {
        Self::new_unchecked(m, [rat(0), rat(1), rat(0), rat(0)])
    }

    /// Element `re + i·im` with `re = a0 + a1·s`, `im = a2 + a3·s`, built
    /// from small integers. Handy in tests and fixtures.
    pub fn from_ints(m: u64, a: [i64; 4]) -> Self {
        Self::new_unchecked(m, [rat(a[0]), rat(a[1]), rat(a[2]), rat(a[3])])
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in ℚ(√m), i.e. is fixed by conjugation.
    pub fn is_real(&self) -> bool {
        self.coeffs[2].is_zero() && self.coeffs[3].is_zero()
    }

    /// True when the element lies in ℚ.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True when the element lies in ℚ(i), hence in every field of the family.
    pub fn in_gaussian_rationals(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[3].is_zero()
    }

    pub fn rational_part(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Re-tags the element with another field parameter. Only elements of
    /// ℚ(i) can move between fields.
    pub fn with_m(&self, m: u64) -> Result<Self, FieldError> {
        if m == self.m {
            return Ok(self.clone());
        }
        if !is_squarefree(m) {
            return Err(FieldError::BadParameter(m));
        }
        if !self.in_gaussian_rationals() {
            return Err(FieldError::NotInSubfield(self.to_string(), m));
        }
        Ok(FieldElem {
            m,
            coeffs: self.coeffs.clone(),
        })
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.m != other.m {
            Err(FieldError::MismatchedField(self.m, other.m))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let inv = other.inv()?;
        Ok(self.mul_unchecked(&inv))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        FieldElem {
            m: self.m,
            coeffs: [
                &self.coeffs[0] + &other.coeffs[0],
                &self.coeffs[1] + &other.coeffs[1],
                &self.coeffs[2] + &other.coeffs[2],
                &self.coeffs[3] + &other.coeffs[3],
            ],
        }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        FieldElem {
            m: self.m,
            coeffs: [
                &self.coeffs[0] - &other.coeffs[0],
                &self.coeffs[1] - &other.coeffs[1],
                &self.coeffs[2] - &other.coeffs[2],
                &self.coeffs[3] - &other.coeffs[3],
            ],
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let m = rat(self.m as i64);
        let [a0, a1, a2, a3] = &self.coeffs;
        let [b0, b1, b2, b3] = &other.coeffs;
        // x = u + i v, y = u' + i v' with u, v, u', v' in ℚ(√m).
        let (uu0, uu1) = qmul(a0, a1, b0, b1, &m);
        let (vv0, vv1) = qmul(a2, a3, b2, b3, &m);
        let (uv0, uv1) = qmul(a0, a1, b2, b3, &m);
        let (vu0, vu1) = qmul(a2, a3, b0, b1, &m);
        FieldElem {
            m: self.m,
            coeffs: [uu0 - vv0, uu1 - vv1, uv0 + vu0, uv1 + vu1],
        }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let m = rat(self.m as i64);
        // x · conj(x) = u² + v² is a nonzero element of the real field ℚ(√m).
        let [a0, a1, a2, a3] = &self.coeffs;
        let (n0, n1) = {
            let (p0, p1) = qmul(a0, a1, a0, a1, &m);
            let (q0, q1) = qmul(a2, a3, a2, a3, &m);
            (p0 + q0, p1 + q1)
        };
        // (n0 + n1 s)^{-1} = (n0 - n1 s) / (n0² - m n1²)
        let d = &n0 * &n0 - &m * &n1 * &n1;
        let r0 = &n0 / &d;
        let r1 = -(&n1 / &d);
        let c = self.conj();
        let scale = FieldElem {
            m: self.m,
            coeffs: [r0, r1, Rational::zero(), Rational::zero()],
        };
        Ok(c.mul_unchecked(&scale))
    }

    /// Complex conjugation: `s` is real, `i` changes sign.
    pub fn conj(&self) -> Self {
        FieldElem {
            m: self.m,
            coeffs: [
                self.coeffs[0].clone(),
                self.coeffs[1].clone(),
                -&self.coeffs[2],
                -&self.coeffs[3],
            ],
        }
    }

    /// Real part `a0 + a1·s`.
    pub fn re(&self) -> Self {
        FieldElem {
            m: self.m,
            coeffs: [
                self.coeffs[0].clone(),
                self.coeffs[1].clone(),
                Rational::zero(),
                Rational::zero(),
            ],
        }
    }

    /// Imaginary part `a2 + a3·s`, as a real element.
    pub fn im(&self) -> Self {
        FieldElem {
            m: self.m,
            coeffs: [
                self.coeffs[2].clone(),
                self.coeffs[3].clone(),
                Rational::zero(),
                Rational::zero(),
            ],
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElem {
            m: self.m,
            coeffs: [
                &self.coeffs[0] * q,
                &self.coeffs[1] * q,
                &self.coeffs[2] * q,
                &self.coeffs[3] * q,
            ],
        }
    }

    /// Exact sign of a real element `a0 + a1·√m`.
    pub fn sign_real(&self) -> Result<Sign, FieldError> {
        if !self.is_real() {
            return Err(FieldError::NotReal(self.to_string()));
        }
        let s0 = Sign::of_rational(&self.coeffs[0]);
        let s1 = Sign::of_rational(&self.coeffs[1]);
        Ok(match (s0, s1) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (a, b) if a == b => a,
            (a, _) => {
                let lhs = &self.coeffs[0] * &self.coeffs[0];
                let rhs = &self.coeffs[1] * &self.coeffs[1] * rat(self.m as i64);
                match lhs.cmp(&rhs) {
                    Ordering::Greater => a,
                    Ordering::Less => match a {
                        Sign::Positive => Sign::Negative,
                        _ => Sign::Positive,
                    },
                    Ordering::Equal => Sign::Zero,
                }
            }
        })
    }

    /// Matrix of multiplication by `self` on ℚ⁴ in the basis `{1, s, i, i·s}`.
    /// Column `k` holds the coordinates of `self · basis_k`.
    pub fn multiplication_matrix(&self) -> [[Rational; 4]; 4] {
        let basis = [
            FieldElem::from_ints(self.m, [1, 0, 0, 0]),
            FieldElem::new_unchecked(self.m, [rat(0), rat(1), rat(0), rat(0)]),
            FieldElem::from_ints(self.m, [0, 0, 1, 0]),
            FieldElem::new_unchecked(self.m, [rat(0), rat(0), rat(0), rat(1)]),
        ];
        let mut out: [[Rational; 4]; 4] = Default::default();
        for (k, b) in basis.iter().enumerate() {
            let p = self.mul_unchecked(b);
            for j in 0..4 {
                out[j][k] = p.coeffs[j].clone();
            }
        }
        out
    }
}

/// Multiplication in ℚ(√m): (a + b s)(c + d s).
fn qmul(a: &Rational, b: &Rational, c: &Rational, d: &Rational, m: &Rational) -> (Rational, Rational) {
    (a * c + m * b * d, a * d + b * c)
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "s", "i", "i·s"];
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            if name.is_empty() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}·{name}", format_rational(&mag))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operator impls assume matching field parameters; they panic otherwise.
// Code handling user input goes through the `try_*` methods.

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.try_add(rhs).expect("field parameter mismatch")
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.try_sub(rhs).expect("field parameter mismatch")
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.try_mul(rhs).expect("field parameter mismatch")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            m: self.m,
            coeffs: [
                -&self.coeffs[0],
                -&self.coeffs[1],
                -&self.coeffs[2],
                -&self.coeffs[3],
            ],
        }
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        &self + &rhs
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        &self - &rhs
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        &self * &rhs
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}
