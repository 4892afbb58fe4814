//! Test and benchmark polynomial families.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, RandBigInt};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::BigIntPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `x^n - 2 (a x - 1)^2` with `a = 2^(ceil(tau/2) - 1)`: two roots
    /// extremely close to `1/a`.
    Mignotte,
    /// `(x - 1)(x - 2)...(x - n)`.
    Wilkinson,
    /// Chebyshev polynomial of the first kind `T_n`.
    Chebyshev,
    /// Uniform coefficients in `(-2^tau, 2^tau)`, redrawn until square-free
    /// of exact degree `n`.
    Random,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Mignotte,
        Family::Wilkinson,
        Family::Chebyshev,
        Family::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Mignotte => "mignotte",
            Family::Wilkinson => "wilkinson",
            Family::Chebyshev => "chebyshev",
            Family::Random => "random",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family `{s}`")))
    }
}

/// Builds one member of a family. `tau` only affects `mignotte` and
/// `random`; `seed` only affects `random`.
pub fn generate_family(family: Family, n: usize, tau: u64, seed: u64) -> Result<BigIntPoly> {
    if n < 2 {
        return Err(Error::InvalidFamily(format!(
            "degree must be at least 2, got {n}"
        )));
    }
    if matches!(family, Family::Mignotte | Family::Random) && tau < 2 {
        return Err(Error::InvalidFamily(format!(
            "{family} needs tau >= 2, got {tau}"
        )));
    }
    match family {
        Family::Mignotte => mignotte(n, tau),
        Family::Wilkinson => Ok(wilkinson(n)),
        Family::Chebyshev => Ok(chebyshev(n)),
        Family::Random => Ok(random(n, tau, seed)),
    }
}

fn mignotte(n: usize, tau: u64) -> Result<BigIntPoly> {
    let a = BigInt::one() << (tau.div_ceil(2) - 1);
    let inner = BigIntPoly::new(vec![BigInt::from(-1), a]);
    let cluster = (&inner * &inner).scale(&BigInt::from(2));
    let f = &BigIntPoly::x().shift_up(n - 1) - &cluster;
    if !f.is_square_free() {
        return Err(Error::InvalidFamily(format!(
            "mignotte polynomial with n={n}, tau={tau} is not square-free"
        )));
    }
    Ok(f)
}

fn wilkinson(n: usize) -> BigIntPoly {
    (1..=n as i64).fold(BigIntPoly::constant(1), |acc, i| {
        &acc * &BigIntPoly::linear_root(i)
    })
}

fn chebyshev(n: usize) -> BigIntPoly {
    let two_x = BigIntPoly::from_i64s(&[0, 2]);
    let (mut prev, mut cur) = (BigIntPoly::constant(1), BigIntPoly::x());
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn random(n: usize, tau: u64, seed: u64) -> BigIntPoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = BigInt::one() << tau;
    let low = -&bound + 1;
    loop {
        let coeffs: Vec<BigInt> = (0..=n)
            .map(|_| rng.gen_bigint_range(&low, &bound))
            .collect();
        if coeffs[n].is_zero() {
            continue;
        }
        let f = BigIntPoly::new(coeffs);
        if f.is_square_free() {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            generate_family(Family::Wilkinson, 3, 0, 0).unwrap(),
            BigIntPoly::from_i64s(&[-6, 11, -6, 1])
        );
        assert_eq!(
            generate_family(Family::Chebyshev, 2, 0, 0).unwrap(),
            BigIntPoly::from_i64s(&[-1, 0, 2])
        );
        assert_eq!(
            generate_family(Family::Mignotte, 4, 6, 0).unwrap(),
            BigIntPoly::from_i64s(&[-2, 16, -32, 0, 1])
        );
    }

    #[test]
    fn chebyshev_recurrence() {
        // T_5 = 16x^5 - 20x^3 + 5x
        assert_eq!(chebyshev(5), BigIntPoly::from_i64s(&[0, 5, 0, -20, 0, 16]));
    }

    #[test]
    fn mignotte_coefficients_stay_below_bound() {
        for tau in [16u64, 32, 64, 128] {
            let f = generate_family(Family::Mignotte, 16, tau, 0).unwrap();
            assert_eq!(f.degree(), Some(16));
            assert!(f.tau() <= tau, "tau={tau} got {}", f.tau());
        }
    }

    #[test]
    fn random_is_reproducible_and_valid() {
        let f = generate_family(Family::Random, 8, 8, 7).unwrap();
        assert_eq!(f, generate_family(Family::Random, 8, 8, 7).unwrap());
        assert_ne!(f, generate_family(Family::Random, 8, 8, 8).unwrap());
        assert_eq!(f.degree(), Some(8));
        assert!(f.tau() <= 8);
        assert!(f.is_square_free());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_family(Family::Wilkinson, 1, 0, 0).is_err());
        assert!(generate_family(Family::Random, 4, 1, 0).is_err());
        assert!("hermite".parse::<Family>().is_err());
        assert_eq!("mignotte".parse::<Family>().unwrap(), Family::Mignotte);
    }
}
