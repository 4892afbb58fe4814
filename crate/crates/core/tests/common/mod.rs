//! Test-only oracles built on exact rationals. They share nothing with the
//! library's dyadic/Taylor-shift code paths.

#![allow(dead_code)]

use dsc2::{BigIntPoly, Dyadic, OpenInterval};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

pub fn to_rational(d: &Dyadic) -> BigRational {
    let e = d.exponent();
    if e >= 0 {
        BigRational::from_integer(d.mantissa() << e as u64)
    } else {
        BigRational::new(d.mantissa().clone(), BigInt::one() << e.unsigned_abs())
    }
}

/// Sum of a_i x^i with explicit powers.
pub fn eval_rational(f: &BigIntPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut pow = BigRational::one();
    for c in f.coeffs() {
        acc += BigRational::from_integer(c.clone()) * &pow;
        pow *= x;
    }
    acc
}

type RatPoly = Vec<BigRational>;

fn rp_mul(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn rp_pow(a: &RatPoly, k: usize) -> RatPoly {
    (0..k).fold(vec![BigRational::one()], |acc, _| rp_mul(&acc, a))
}

/// `(x+1)^n f((a x + b)/(x + 1)) = sum a_i (a x + b)^i (x + 1)^(n - i)`,
/// expanded directly over the rationals.
pub fn mobius_coeffs(f: &BigIntPoly, i: &OpenInterval) -> RatPoly {
    let n = f.degree().unwrap();
    let a = to_rational(i.lower());
    let b = to_rational(i.upper());
    let num = vec![b, a];
    let den = vec![BigRational::one(), BigRational::one()];
    let mut out = vec![BigRational::zero(); n + 1];
    for (k, c) in f.coeffs().iter().enumerate() {
        let term = rp_mul(&rp_pow(&num, k), &rp_pow(&den, n - k));
        for (j, t) in term.into_iter().enumerate() {
            out[j] += BigRational::from_integer(c.clone()) * t;
        }
    }
    out
}

pub fn rational_sign_changes(c: &[BigRational]) -> usize {
    let signs: Vec<bool> = c
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Roots of a product of linear factors, counted by brute force.
pub fn roots_inside(roots: &[i64], lo: &BigRational, hi: &BigRational) -> usize {
    roots
        .iter()
        .filter(|&&r| {
            let r = BigRational::from_integer(BigInt::from(r));
            lo < &r && &r < hi
        })
        .count()
}

pub fn product_of_roots(roots: &[i64]) -> BigIntPoly {
    roots.iter().fold(BigIntPoly::constant(1), |acc, &r| {
        &acc * &BigIntPoly::linear_root(r)
    })
}

pub fn poly_strategy(max_degree: usize, bits: u32) -> impl Strategy<Value = BigIntPoly> {
    let bound = 1i64 << bits;
    prop::collection::vec(-bound + 1..bound, 2..=max_degree + 1).prop_filter_map(
        "degree >= 1",
        |c| {
            let f = BigIntPoly::from_i64s(&c);
            (f.degree().unwrap_or(0) >= 1).then_some(f)
        },
    )
}

pub fn square_free_strategy(max_degree: usize, bits: u32) -> impl Strategy<Value = BigIntPoly> {
    poly_strategy(max_degree, bits).prop_filter("square-free", |f| f.is_square_free())
}

pub fn dyadic_strategy(
    max_mantissa: i64,
    min_exp: i64,
    max_exp: i64,
) -> impl Strategy<Value = Dyadic> {
    (-max_mantissa..=max_mantissa, min_exp..=max_exp).prop_map(|(m, e)| Dyadic::new(m, e))
}

/// Dyadic interval `(m/2^k, (m + len)/2^k)`.
pub fn interval_strategy() -> impl Strategy<Value = OpenInterval> {
    (-64i64..64, 1i64..64, 0i64..6).prop_map(|(m, len, k)| {
        OpenInterval::new(Dyadic::new(m, -k), Dyadic::new(m + len, -k)).unwrap()
    })
}
