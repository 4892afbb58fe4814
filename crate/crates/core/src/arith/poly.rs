use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Dyadic;
use crate::error::{Error, Result};

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree.
///
/// The zero polynomial is the empty coefficient vector; every other value has
/// a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BigIntPoly {
    coeffs: Vec<BigInt>,
}

impl BigIntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        BigIntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        BigIntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        BigIntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BigIntPoly::new(vec![c.into()])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        BigIntPoly::from_i64s(&[0, 1])
    }

    /// `x - r` for an integer `r`.
    pub fn linear_root(r: impl Into<BigInt>) -> Self {
        BigIntPoly::new(vec![-r.into(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Smallest `tau >= 1` with `|a_i| < 2^tau` for every coefficient.
    pub fn tau(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.bits())
            .max()
            .unwrap_or(0)
            .max(1)
    }

    pub fn derivative(&self) -> BigIntPoly {
        BigIntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact Horner evaluation at a dyadic point.
    pub fn eval(&self, x: &Dyadic) -> Dyadic {
        // With x = m / 2^d, accumulate 2^(d*deg) * f(x) in the integers.
        let (m, d) = x.to_scaled_integer();
        let Some(n) = self.degree() else {
            return Dyadic::zero();
        };
        let mut acc = self.coeffs[n].clone();
        for (i, c) in self.coeffs[..n].iter().enumerate().rev() {
            acc = acc * &m + (c << (d * (n - i) as u64));
        }
        Dyadic::new(acc, -((d * n as u64) as i64))
    }

    /// Sign of `f(x)`.
    pub fn sign_at(&self, x: &Dyadic) -> Sign {
        self.eval(x).sign()
    }

    /// Returns `(g, s)` with `g(x) = 2^s * f(a + w*x)` an integer polynomial,
    /// where `s = deg(f) * k` and `2^-k` is the finest denominator among `a`
    /// and `w`. The isolators only ever pass power-of-two widths.
    pub fn compose_affine(&self, a: &Dyadic, w: &Dyadic) -> (BigIntPoly, u64) {
        let Some(n) = self.degree() else {
            return (BigIntPoly::zero(), 0);
        };
        let k = (-a.exponent().min(w.exponent()).min(0)) as u64;
        // a + w*x = 2^-k * (A + W*x) with integers A, W.
        let shift = if a.is_zero() {
            BigInt::zero()
        } else {
            a.mantissa() << (a.exponent() + k as i64) as u64
        };
        let scale = w.mantissa() << (w.exponent() + k as i64) as u64;
        // h(y) = 2^(k*n) f(y / 2^k)
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c << (k * (n - i) as u64))
            .collect();
        let mut shifted = taylor_shift(&scaled, &shift);
        if let Some(lw) = scale.trailing_zeros().filter(|&tz| scale.bits() == tz + 1) {
            for (i, c) in shifted.iter_mut().enumerate() {
                *c <<= lw * i as u64;
            }
        } else {
            let mut power = BigInt::one();
            for c in shifted.iter_mut().skip(1) {
                power *= &scale;
                *c *= &power;
            }
        }
        (BigIntPoly::new(shifted), k * n as u64)
    }

    /// `f(x + 1)`.
    pub fn taylor_shift_1(&self) -> BigIntPoly {
        BigIntPoly::new(taylor_shift_1(&self.coeffs))
    }

    /// `x^n * f(1/x)` at the stored degree.
    pub fn reverse_coeffs(&self) -> BigIntPoly {
        BigIntPoly::new(reverse_coeffs(&self.coeffs))
    }

    pub fn scale(&self, c: &BigInt) -> BigIntPoly {
        BigIntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> BigIntPoly {
        if self.is_zero() {
            return BigIntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        BigIntPoly { coeffs }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `f / content(f)`, with the leading coefficient made positive.
    pub fn primitive_part(&self) -> BigIntPoly {
        if self.is_zero() {
            return BigIntPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        BigIntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Pseudo-remainder scaled by a positive factor only: returns
    /// `r = |lc(b)|^j * self - q * b` with `deg r < deg b`.
    ///
    /// Panics if `b` is zero.
    pub fn positive_pseudo_rem(&self, b: &BigIntPoly) -> BigIntPoly {
        let db = b.degree().expect("division by the zero polynomial");
        let lb = b.leading_coeff().unwrap();
        let (lb_abs, lb_neg) = (lb.abs(), lb.is_negative());
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let mut lr = r.coeffs[dr].clone();
            if lb_neg {
                lr = -lr;
            }
            r = &r.scale(&lb_abs) - &b.scale(&lr).shift_up(dr - db);
        }
        r
    }

    /// Exact quotient `self / b`, or `None` if `b` does not divide `self`
    /// in Z[x].
    pub fn div_exact(&self, b: &BigIntPoly) -> Option<BigIntPoly> {
        let db = b.degree()?;
        let lb = b.leading_coeff().unwrap();
        let mut r = self.clone();
        let Some(dr0) = r.degree() else {
            return Some(BigIntPoly::zero());
        };
        if dr0 < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr0 - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (t, rem) = r.coeffs[dr].div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &b.scale(&t).shift_up(dr - db);
            q[dr - db] = t;
        }
        Some(BigIntPoly::new(q))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &BigIntPoly) -> BigIntPoly {
        let (mut g, mut h) = (self.primitive_part(), other.primitive_part());
        if g.degree() < h.degree() {
            std::mem::swap(&mut g, &mut h);
        }
        while !h.is_zero() {
            let r = g.positive_pseudo_rem(&h);
            g = h;
            h = r.primitive_part();
        }
        g
    }

    pub fn is_square_free(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `f / gcd(f, f')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Result<BigIntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let q = self
            .div_exact(&g)
            .expect("gcd divides its argument over the integers");
        Ok(q.primitive_part())
    }
}

/// Reverses a coefficient sequence without trimming, i.e. `x^n * f(1/x)`
/// where `n + 1` is the sequence length.
pub fn reverse_coeffs(coeffs: &[BigInt]) -> Vec<BigInt> {
    coeffs.iter().rev().cloned().collect()
}

/// `f(x + 1)` on a raw coefficient sequence by the Pascal scheme.
pub fn taylor_shift_1(coeffs: &[BigInt]) -> Vec<BigInt> {
    let mut a = coeffs.to_vec();
    let n = a.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let next = a[j + 1].clone();
            a[j] += next;
        }
    }
    a
}

/// `f(x + c)` on a raw coefficient sequence, classical quadratic scheme.
pub fn taylor_shift(coeffs: &[BigInt], c: &BigInt) -> Vec<BigInt> {
    if c.is_zero() {
        return coeffs.to_vec();
    }
    if c.is_one() {
        return taylor_shift_1(coeffs);
    }
    let mut a = coeffs.to_vec();
    let n = a.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let next = &a[j + 1] * c;
            a[j] += next;
        }
    }
    a
}

impl<'a> Add<&'a BigIntPoly> for &'a BigIntPoly {
    type Output = BigIntPoly;
    fn add(self, rhs: &'a BigIntPoly) -> BigIntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        BigIntPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a BigIntPoly> for &'a BigIntPoly {
    type Output = BigIntPoly;
    fn sub(self, rhs: &'a BigIntPoly) -> BigIntPoly {
        self + &(-rhs)
    }
}

impl Neg for &BigIntPoly {
    type Output = BigIntPoly;
    fn neg(self) -> BigIntPoly {
        BigIntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a BigIntPoly> for &'a BigIntPoly {
    type Output = BigIntPoly;
    fn mul(self, rhs: &'a BigIntPoly) -> BigIntPoly {
        if self.is_zero() || rhs.is_zero() {
            return BigIntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BigIntPoly::new(out)
    }
}

impl fmt::Debug for BigIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigIntPoly({self})")
    }
}

/// Conventional notation, highest degree first: `x^3 - 6x^2 + 11x - 6`.
impl fmt::Display for BigIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
