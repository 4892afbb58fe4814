mod common;

use common::*;
use dsc2::arith::{reverse_coeffs, taylor_shift_1};
use dsc2::{BigIntPoly, Dyadic};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn eval_matches_rational_oracle(f in poly_strategy(8, 8), x in dyadic_strategy(1 << 12, -10, 4)) {
        prop_assert_eq!(to_rational(&f.eval(&x)), eval_rational(&f, &to_rational(&x)));
    }

    #[test]
    fn compose_affine_round_trip(
        f in poly_strategy(8, 8),
        a in dyadic_strategy(1 << 8, -8, 3),
        log_w in -8i64..4,
        t in dyadic_strategy(1 << 8, -8, 2),
    ) {
        let w = Dyadic::pow2(log_w);
        let (g, s) = f.compose_affine(&a, &w);
        let lhs = g.eval(&t).shl(-(s as i64));
        let rhs = f.eval(&(&a + &(&w * &t)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_back_by_one_is_identity(f in poly_strategy(10, 16)) {
        let shifted = f.taylor_shift_1();
        let (back, s) = shifted.compose_affine(&Dyadic::from(-1), &Dyadic::one());
        prop_assert_eq!(s, 0);
        prop_assert_eq!(back, f);
    }

    #[test]
    fn reverse_is_an_involution(c in prop::collection::vec(-1000i64..1000, 0..12)) {
        let c: Vec<BigInt> = c.into_iter().map(BigInt::from).collect();
        prop_assert_eq!(reverse_coeffs(&reverse_coeffs(&c)), c);
    }

    #[test]
    fn raw_shift_agrees_with_poly_shift(f in poly_strategy(10, 16)) {
        prop_assert_eq!(BigIntPoly::new(taylor_shift_1(f.coeffs())), f.taylor_shift_1());
    }

    #[test]
    fn square_free_part_is_square_free(
        f in poly_strategy(4, 4),
        g in poly_strategy(3, 4),
    ) {
        // f * g^2 forces repeated factors whenever g is non-constant
        let h = &f * &(&g * &g);
        let s = h.square_free_part().unwrap();
        let d = s.gcd(&s.derivative());
        prop_assert_eq!(d.degree(), Some(0));
        // every root of h is a root of s: s divides h
        prop_assert!(h.div_exact(&s).is_some());
        prop_assert!(s.leading_coeff().unwrap() > &BigInt::from(0));
    }
}

#[test]
fn square_free_of_known_factorization() {
    let f = product_of_roots(&[1, 1, 2]);
    assert_eq!(f, BigIntPoly::from_i64s(&[-2, 5, -4, 1]));
    assert_eq!(f.square_free_part().unwrap(), product_of_roots(&[1, 2]));
}
