use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{BigIntPoly, Dyadic, OpenInterval};
use crate::descartes::VarCount;

/// Which endpoint of the interval anchors the Newton step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Lower,
    Upper,
}

/// Newton-guided candidate window.
///
/// With `t` the chosen endpoint and `lambda = t - v f(t)/f'(t)`, the interval
/// is cut into `4N` equal pieces and `k` is the grid index
/// `floor(4N (lambda - a) / w)` clamped to `[2, 4N - 2]`. The returned window
/// `(a + (k-2) w/4N, a + (k+2) w/4N)` has width `w / N` and is centered on
/// grid point `k`. Returns `None` when `f'(t) = 0`.
pub fn newton_snap(
    f: &BigIntPoly,
    interval: &OpenInterval,
    v: VarCount,
    n_exp: u32,
    endpoint: Endpoint,
) -> Option<(BigInt, OpenInterval)> {
    let t = match endpoint {
        Endpoint::Lower => interval.lower(),
        Endpoint::Upper => interval.upper(),
    };
    let ft = f.eval(t);
    let dft = f.derivative().eval(t);
    snap_from_values(&ft, &dft, interval, v, 1i64 << n_exp, endpoint)
}

/// `log2_n` is `log2(N)`.
pub(crate) fn snap_from_values(
    ft: &Dyadic,
    dft: &Dyadic,
    interval: &OpenInterval,
    v: VarCount,
    log2_n: i64,
    endpoint: Endpoint,
) -> Option<(BigInt, OpenInterval)> {
    if dft.is_zero() {
        return None;
    }
    let w = interval.width();
    let log2_grid = log2_n + 2;
    let grid = BigInt::one() << log2_grid as u64;

    // 4N (lambda - t) / w = -v * 4N * f(t) / (f'(t) * w), floored exactly.
    let mut num = -(ft.mantissa() * BigInt::from(v.get()));
    let mut den = dft.mantissa() * w.mantissa();
    let shift = ft.exponent() + log2_grid - dft.exponent() - w.exponent();
    if shift >= 0 {
        num <<= shift as u64;
    } else {
        den <<= shift.unsigned_abs();
    }
    let offset = num.div_floor(&den);
    let raw = match endpoint {
        Endpoint::Lower => offset,
        // lambda - a = (b - a) + (lambda - b)
        Endpoint::Upper => &grid + offset,
    };
    let k = raw.clamp(BigInt::from(2), &grid - 2);

    let step_exp = w.exponent() - log2_grid;
    let step_mantissa = w.mantissa();
    let at = |i: BigInt| -> Dyadic {
        if i.is_zero() {
            interval.lower().clone()
        } else {
            interval.lower() + &Dyadic::new(i * step_mantissa, step_exp)
        }
    };
    let lo = at(&k - 2);
    let hi = at(&k + 2);
    Some((k, OpenInterval::new_unchecked(lo, hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: Dyadic, b: Dyadic) -> OpenInterval {
        OpenInterval::new(a, b).unwrap()
    }

    #[test]
    fn snaps_to_grid_point() {
        // f = 20x - 3 on (0, 1), v = 2: lambda = 0 - 2 * (-3) / 20 = 3/10
        let f = BigIntPoly::from_i64s(&[-3, 20]);
        let i = iv(Dyadic::zero(), Dyadic::one());
        let (k, cand) = newton_snap(&f, &i, VarCount(2), 1, Endpoint::Lower).unwrap();
        assert_eq!(k, BigInt::from(4));
        assert_eq!(cand, iv(Dyadic::new(2, -4), Dyadic::new(6, -4)));
    }

    #[test]
    fn clamps_left() {
        // f = x + 1 on (0, 1): lambda = -2 < a
        let f = BigIntPoly::from_i64s(&[1, 1]);
        let i = iv(Dyadic::zero(), Dyadic::one());
        let (k, cand) = newton_snap(&f, &i, VarCount(2), 1, Endpoint::Lower).unwrap();
        assert_eq!(k, BigInt::from(2));
        assert_eq!(cand, iv(Dyadic::zero(), Dyadic::new(1, -2)));
    }

    #[test]
    fn clamps_right() {
        // f = x - 5 anchored at b = 1: lambda = 1 + 2 * 4 = 9 > b
        let f = BigIntPoly::from_i64s(&[-5, 1]);
        let i = iv(Dyadic::zero(), Dyadic::one());
        let (k, cand) = newton_snap(&f, &i, VarCount(2), 1, Endpoint::Upper).unwrap();
        assert_eq!(k, BigInt::from(14));
        assert_eq!(cand, iv(Dyadic::new(3, -2), Dyadic::one()));
    }

    #[test]
    fn flat_derivative_has_no_candidate() {
        let f = BigIntPoly::from_i64s(&[-1, 0, 1]);
        let i = iv(Dyadic::zero(), Dyadic::from(4));
        assert!(newton_snap(&f, &i, VarCount(2), 1, Endpoint::Lower).is_none());
    }

    #[test]
    fn negative_offsets_floor_downwards() {
        // Upper anchor, lambda slightly left of b: f = x - 1 + eps style
        // f = 16x - 15 on (0, 1), t = b: lambda = 1 - 2/16 = 7/8; 16*7/8 = 14
        let f = BigIntPoly::from_i64s(&[-15, 16]);
        let i = iv(Dyadic::zero(), Dyadic::one());
        let (k, _) = newton_snap(&f, &i, VarCount(2), 1, Endpoint::Upper).unwrap();
        assert_eq!(k, BigInt::from(14));
        // 17x - 15: lambda = 1 - 4/17, 16 * 13/17 = 12.23..
        let f = BigIntPoly::from_i64s(&[-15, 17]);
        let (k, _) = newton_snap(&f, &i, VarCount(2), 1, Endpoint::Upper).unwrap();
        assert_eq!(k, BigInt::from(12));
    }
}
