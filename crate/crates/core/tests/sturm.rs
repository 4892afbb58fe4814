mod common;

use common::*;
use dsc2::{cauchy_interval, sturm_count, BigIntPoly, Dyadic, OpenInterval};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn counts_constructed_roots(
        roots in prop::collection::btree_set(-40i64..40, 1..8),
        lo in -50i64..50,
        len in 1i64..60,
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let f = product_of_roots(&roots);
        // half-integer endpoints never hit an integer root
        let i = OpenInterval::new(Dyadic::new(2 * lo + 1, -1), Dyadic::new(2 * (lo + len) + 1, -1)).unwrap();
        let expected = roots_inside(&roots, &to_rational(i.lower()), &to_rational(i.upper()));
        prop_assert_eq!(sturm_count(&f, &i).unwrap(), expected);
        prop_assert_eq!(sturm_count(&f, &cauchy_interval(&f).unwrap()).unwrap(), roots.len());
    }

    #[test]
    fn additive_under_splitting(f in square_free_strategy(10, 10), i in interval_strategy(), k in 1u32..16) {
        let m = i.lower() + &(&i.width() * &Dyadic::new(k, -4));
        prop_assume!([i.lower(), i.upper(), &m].iter().all(|x| !f.eval(x).is_zero()));
        let left = OpenInterval::new(i.lower().clone(), m.clone()).unwrap();
        let right = OpenInterval::new(m, i.upper().clone()).unwrap();
        prop_assert_eq!(
            sturm_count(&f, &left).unwrap() + sturm_count(&f, &right).unwrap(),
            sturm_count(&f, &i).unwrap()
        );
    }
}

#[test]
fn chebyshev_roots_all_real() {
    // T_n has n simple roots in (-1, 1)
    for n in 2..=16 {
        let f = dsc2::generate_family(dsc2::Family::Chebyshev, n, 0, 0).unwrap();
        let i = OpenInterval::new(Dyadic::from(-1), Dyadic::from(1)).unwrap();
        assert_eq!(sturm_count(&f, &i).unwrap(), n);
    }
}

#[test]
fn no_real_roots() {
    let f = BigIntPoly::from_i64s(&[1, 0, 0, 0, 1]);
    assert_eq!(sturm_count(&f, &cauchy_interval(&f).unwrap()).unwrap(), 0);
}
