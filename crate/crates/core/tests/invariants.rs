use high_order_core::combinatorics::{
    binom, count_t, partition_count, partition_count_bounded, partition_count_nondiv,
};
use high_order_core::order::{factorize, is_prime, Unlimited};
use high_order_core::{FieldParams, KummerParams, Nat};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn binomial_symmetry_and_pascal(n in 1u64..150, r in 0i64..150) {
        prop_assert_eq!(binom(n, r), binom(n, n as i64 - r));
        prop_assert_eq!(binom(n, r), binom(n - 1, r - 1) + binom(n - 1, r));
    }

    #[test]
    fn nondivisible_parts_match_bounded_multiplicity(n in 0usize..250, d in 2usize..30) {
        prop_assert_eq!(partition_count_bounded(n, d - 1), partition_count_nondiv(n, d).unwrap());
    }

    #[test]
    fn restricted_counts_never_exceed_all_partitions(n in 0usize..200, d in 1usize..10) {
        let all = partition_count(n);
        prop_assert!(partition_count_bounded(n, d) <= all);
        prop_assert!(partition_count_nondiv(n, d + 1).unwrap() <= all);
        prop_assert_eq!(partition_count_bounded(n, n.max(1)), all);
    }

    #[test]
    fn t_count_is_bounded_by_the_box(p in prop::sample::select(vec![5u64, 7, 11, 13]), k in 2usize..8, l in 1usize..8) {
        let t = count_t(p, k, l).unwrap();
        prop_assert!(t >= Nat::from(1u32));
        prop_assert!(t <= num_traits::pow(Nat::from(p), l));
        // Growing k only loosens the weight constraint relative to m = k l.
        prop_assert!(count_t(p, k + 1, l).unwrap() >= t);
    }

    #[test]
    fn factorization_round_trips(n in 1u64..u64::MAX) {
        let f = factorize(&Nat::from(n), &Unlimited).unwrap();
        prop_assert_eq!(f.value(), Nat::from(n));
        prop_assert!(f.primes().all(is_prime));
        let primes: Vec<&Nat> = f.primes().collect();
        prop_assert!(primes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn extension_elements_satisfy_lagrange(index in 1u64..(7u64.pow(6))) {
        let ext = KummerParams::search(FieldParams::new(7, 2, None).unwrap(), 3).unwrap();
        let x = ext.from_index(&Nat::from(index));
        prop_assert!(ext.is_one(&ext.pow(&x, ext.group_order())));
    }
}
