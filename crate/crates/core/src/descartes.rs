//! Descartes' rule of signs on an interval.
//!
//! `var(f, (a, b))` counts sign changes in the coefficients of
//! `(x + 1)^n f((a x + b) / (x + 1))`. The Möbius map sends `(0, inf)` onto
//! `(a, b)`, so the count bounds the number of roots of `f` in the interval
//! from above and has the same parity.

use std::fmt;

use num_bigint::{BigInt, Sign};

use crate::arith::{reverse_coeffs, taylor_shift_1, BigIntPoly, OpenInterval};

/// Number of sign variations of a coefficient sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarCount(pub usize);

impl VarCount {
    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for VarCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl PartialEq<usize> for VarCount {
    fn eq(&self, other: &usize) -> bool {
        self.0 == *other
    }
}

/// Sign changes between consecutive nonzero entries.
pub fn sign_var_count(coeffs: &[BigInt]) -> VarCount {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in coeffs.iter().map(BigInt::sign) {
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    VarCount(count)
}

/// Coefficients of `f_I` up to a positive factor: `f(a + w x)` with the
/// denominator cleared, reversed at full length, then shifted by one.
pub fn transformed_coeffs(f: &BigIntPoly, interval: &OpenInterval) -> Vec<BigInt> {
    let (scaled, _) = f.compose_affine(interval.lower(), &interval.width());
    let mut coeffs = scaled.into_coeffs();
    // Pad to the stored degree so the reversal is exactly x^n f*(1/x).
    coeffs.resize(f.coeffs().len(), BigInt::default());
    taylor_shift_1(&reverse_coeffs(&coeffs))
}

/// The Descartes counting function `var(f, I)`.
///
/// Meaningful as a root bound only when `f` does not vanish at the endpoints;
/// callers test the endpoints first.
pub fn var(f: &BigIntPoly, interval: &OpenInterval) -> VarCount {
    sign_var_count(&transformed_coeffs(f, interval))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Dyadic;

    fn big(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn iv(a: i64, b: i64) -> OpenInterval {
        OpenInterval::new(Dyadic::from(a), Dyadic::from(b)).unwrap()
    }

    #[test]
    fn sign_var_examples() {
        assert_eq!(sign_var_count(&big(&[2, -3, 1])), 2);
        assert_eq!(sign_var_count(&big(&[1, 0, -1])), 1);
        assert_eq!(sign_var_count(&big(&[5])), 0);
        assert_eq!(sign_var_count(&[]), 0);
        assert_eq!(sign_var_count(&big(&[0, 0])), 0);
        assert_eq!(sign_var_count(&big(&[1, -1, 1, -1])), 3);
    }

    #[test]
    fn var_examples() {
        let f = BigIntPoly::from_i64s(&[-2, 0, 1]);
        // f_I = -2x^2 - 4x + 2 up to a positive factor
        let c = transformed_coeffs(&f, &iv(0, 2));
        assert_eq!(c, big(&[2, -4, -2]));
        assert_eq!(var(&f, &iv(0, 2)), 1);
        assert_eq!(var(&BigIntPoly::from_i64s(&[1, 0, 1]), &iv(-1, 1)), 0);
        assert_eq!(var(&BigIntPoly::x(), &iv(-1, 1)), 1);
        assert_eq!(var(&f, &iv(-2, 2)), 2);
    }

    #[test]
    fn scaling_invariance() {
        let f = BigIntPoly::from_i64s(&[-6, 11, -6, 1]);
        let g = f.scale(&BigInt::from(12345));
        for (a, b) in [(-32, 32), (0, 4), (1, 3), (0, 2)] {
            assert_eq!(var(&f, &iv(a, b)), var(&g, &iv(a, b)));
        }
    }

    #[test]
    fn endpoint_root_keeps_full_length() {
        // f = x (x - 3): root 0 sits on the lower endpoint of (0, 4)
        let f = BigIntPoly::from_i64s(&[0, -3, 1]);
        assert_eq!(transformed_coeffs(&f, &iv(0, 4)).len(), 3);
        assert_eq!(var(&f, &iv(0, 4)), 1);
    }
}
