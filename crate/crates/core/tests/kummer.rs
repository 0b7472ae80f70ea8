use high_order_core::decomposition::decompose;
use high_order_core::kummer::{binomial_exists, find_m_related};
use high_order_core::order::{factorize, Unlimited};
use high_order_core::{ExtElement, FieldParams, FqElem, KummerParams, Nat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn extension(p: u64, n: usize, m: usize) -> KummerParams {
    KummerParams::search(FieldParams::new(p, n, None).unwrap(), m).unwrap()
}

fn random(ext: &KummerParams, rng: &mut ChaCha8Rng) -> ExtElement {
    let base = ext.base();
    let coeffs: Vec<FqElem> = (0..ext.m())
        .map(|_| {
            let c: Vec<u64> = (0..base.n()).map(|_| rng.gen_range(0..base.p())).collect();
            base.element(&c).unwrap()
        })
        .collect();
    ext.from_coeffs(&coeffs).unwrap()
}

/// Schoolbook product followed by long division by `x^m - a`.
fn mul_by_long_division(ext: &KummerParams, x: &ExtElement, y: &ExtElement) -> ExtElement {
    let f = ext.base();
    let m = ext.m();
    let (xs, ys) = (ext.coeffs(x), ext.coeffs(y));
    let mut prod = vec![f.zero(); 2 * m - 1];
    for (i, xi) in xs.iter().enumerate() {
        for (j, yj) in ys.iter().enumerate() {
            prod[i + j] = f.add(&prod[i + j], &f.mul(xi, yj));
        }
    }
    // Divide by x^m - a: the leading term c x^d is removed by subtracting
    // c x^(d-m) (x^m - a), which adds c a to the x^(d-m) coefficient.
    for d in (m..2 * m - 1).rev() {
        let c = std::mem::replace(&mut prod[d], f.zero());
        prod[d - m] = f.add(&prod[d - m], &f.mul(&c, ext.a()));
    }
    prod.truncate(m);
    ext.from_coeffs(&prod).unwrap()
}

#[test]
fn existence_criterion() {
    let f = |p, n| FieldParams::new(p, n, None).unwrap();
    assert!(binomial_exists(&f(5, 1), 8));
    assert!(!binomial_exists(&f(7, 1), 4));
    assert!(binomial_exists(&f(7, 2), 4));
    assert!(!binomial_exists(&f(5, 1), 3));
    assert!(binomial_exists(&f(7, 1), 9));
    assert!(binomial_exists(&f(11, 1), 25));
    assert!(!binomial_exists(&f(11, 1), 9));
    assert!(binomial_exists(&f(11, 1), 5));
    assert_eq!(find_m_related(&f(5, 1), 2), Some(f(5, 1).from_u64(2)));
    assert_eq!(find_m_related(&f(5, 1), 3), None);
}

#[test]
fn multiplication_matches_long_division() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (p, n, m) in [(5, 1, 2), (5, 1, 8), (7, 2, 6), (13, 1, 12), (5, 3, 4), (1_000_003, 1, 6), (65_521, 2, 3)] {
        let ext = extension(p, n, m);
        for _ in 0..200 {
            let (x, y) = (random(&ext, &mut rng), random(&ext, &mut rng));
            assert_eq!(ext.mul(&x, &y), mul_by_long_division(&ext, &x, &y), "p={p} n={n} m={m}");
        }
    }
}

#[test]
fn ring_laws_and_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (p, n, m) in [(7, 1, 3), (5, 2, 6), (11, 1, 10)] {
        let ext = extension(p, n, m);
        for _ in 0..100 {
            let (x, y, z) = (random(&ext, &mut rng), random(&ext, &mut rng), random(&ext, &mut rng));
            assert_eq!(ext.mul(&ext.mul(&x, &y), &z), ext.mul(&x, &ext.mul(&y, &z)));
            assert_eq!(ext.mul(&x, &ext.add(&y, &z)), ext.add(&ext.mul(&x, &y), &ext.mul(&x, &z)));
            assert_eq!(ext.sub(&ext.add(&x, &y), &y), x);
            if !ext.is_zero(&x) {
                assert!(ext.is_one(&ext.mul(&x, &ext.inv(&x).unwrap())));
            }
        }
    }
}

#[test]
fn pow_matches_repeated_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let ext = extension(7, 2, 4);
    for _ in 0..10 {
        let x = random(&ext, &mut rng);
        let mut naive = ext.one();
        for e in 0..300u32 {
            assert_eq!(ext.pow(&x, &Nat::from(e)), naive);
            naive = ext.mul(&naive, &x);
        }
    }
}

#[test]
fn frobenius_is_a_ring_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for (p, n, m) in [(5, 1, 8), (7, 2, 3), (13, 1, 6)] {
        let ext = extension(p, n, m);
        for _ in 0..100 {
            let (x, y) = (random(&ext, &mut rng), random(&ext, &mut rng));
            assert_eq!(ext.frobenius(&ext.mul(&x, &y)), ext.mul(&ext.frobenius(&x), &ext.frobenius(&y)));
            assert_eq!(ext.frobenius(&ext.add(&x, &y)), ext.add(&ext.frobenius(&x), &ext.frobenius(&y)));
        }
        // Frobenius fixes exactly the base field on these samples.
        let c = ext.from_base(&ext.base().from_u64(3));
        assert_eq!(ext.frobenius(&c), c);
        assert_ne!(ext.frobenius(&ext.theta()), ext.theta());
    }
}

#[test]
fn theta_powers_fold_through_a() {
    for (p, n, m) in [(5, 1, 8), (7, 2, 6), (13, 1, 12), (11, 2, 5)] {
        let ext = extension(p, n, m);
        let base = ext.base();
        let mut a_pow = base.one();
        for s in 0..=10usize {
            for t in 0..m {
                let lhs = ext.pow(&ext.theta(), &Nat::from(m * s + t));
                assert_eq!(lhs, ext.monomial(&a_pow, t), "p={p} m={m} s={s} t={t}");
            }
            a_pow = base.mul(&a_pow, ext.a());
        }
    }
}

#[test]
fn eta_generates_the_subfield_relation() {
    for (p, n, m) in [(5, 1, 8), (7, 1, 9), (13, 2, 12), (11, 1, 10)] {
        let ext = extension(p, n, m);
        let d = decompose(ext.base(), m).unwrap();
        let eta = ext.monomial(&ext.base().one(), d.l());
        assert_eq!(ext.pow(&eta, &Nat::from(d.k())), ext.from_base(ext.a()));
    }
}

#[test]
fn conjugate_identities() {
    for (p, n, m) in [(5, 1, 8), (7, 1, 9), (13, 1, 8), (5, 2, 12), (11, 2, 9), (13, 1, 9)] {
        let ext = extension(p, n, m);
        let d = decompose(ext.base(), m).unwrap();
        let q = ext.base().q().clone();
        for b_index in 1..4u64 {
            let b = ext.base().from_index(b_index);
            let x = ext.add(&ext.theta(), &ext.from_base(&b));
            for z in 0..d.l() {
                let expected = ext.pow(&x, &num_traits::pow(q.clone(), z));
                assert_eq!(ext.conjugate_formula(&d, &b, z).unwrap(), expected);
            }
            let eta_b = ext.add(&ext.monomial(&ext.base().one(), d.l()), &ext.from_base(&b));
            for (i, c) in ext.eta_conjugates(&d, &b).unwrap().iter().enumerate() {
                assert_eq!(*c, ext.pow(&eta_b, &num_traits::pow(q.clone(), i)));
            }
        }
        assert!(ext.eta_conjugates(&d, &ext.base().zero()).is_err());
        assert!(ext.conjugate_formula(&d, &ext.base().one(), d.l()).is_err());
    }
}

#[test]
fn eta_conjugate_leading_coefficients_are_distinct() {
    for (p, n, m) in [(5, 1, 8), (13, 1, 12), (7, 2, 8), (11, 1, 10)] {
        let ext = extension(p, n, m);
        let base = ext.base();
        let d = decompose(base, m).unwrap();
        let a_h = base.pow(ext.a(), d.h());
        let fact = factorize(&(base.q() - 1u32), &Unlimited).unwrap();
        assert_eq!(base.mult_order(&a_h, &fact).unwrap(), Nat::from(d.k()));
        let mut leads: Vec<FqElem> =
            (0..d.k()).map(|i| base.pow(&a_h, &Nat::from(i))).collect();
        leads.sort_by_key(|c| base.index(c));
        leads.dedup();
        assert_eq!(leads.len(), d.k());
    }
}

#[test]
fn canonical_form_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let ext = extension(7, 2, 6);
    for _ in 0..500 {
        let x = random(&ext, &mut rng);
        let idx = ext.index(&x);
        assert!(&idx < &(ext.group_order() + 1u32));
        assert_eq!(ext.from_index(&idx), x);
        assert_eq!(ext.from_coeffs(&ext.coeffs(&x)).unwrap(), x);
    }
    let small = extension(5, 1, 2);
    let all: Vec<ExtElement> = (0..25u32).map(|i| small.from_index(&Nat::from(i))).collect();
    for (i, x) in all.iter().enumerate() {
        for y in &all[i + 1..] {
            assert_ne!(x, y);
        }
    }
}

#[test]
fn construction_rejects_bad_input() {
    let base = FieldParams::prime_field(5).unwrap();
    assert!(KummerParams::new(base.clone(), 2, base.from_u64(1)).is_err());
    assert!(KummerParams::new(base.clone(), 2, base.zero()).is_err());
    assert!(KummerParams::new(base.clone(), 1, base.from_u64(2)).is_err());
    assert!(KummerParams::new(base.clone(), 2, base.from_u64(2)).is_ok());
    assert!(KummerParams::search(base, 3).is_none());
}
