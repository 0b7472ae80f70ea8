use high_order_core::combinatorics::{binom, count_t, d1_bound, s_cardinality};
use high_order_core::decomposition::decompose;
use high_order_core::highorder::{
    construct_best, construct_theorem1, construct_theorem2, enumerate_s, enumerate_t, product_p_eta,
    product_p_theta, verify_injectivity_s, verify_injectivity_t, ExponentVector, VectorKind, DEFAULT_VECTOR_CAP,
};
use high_order_core::{ElementKind, FieldParams, KummerParams, Nat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `|S(k, d_minus, d)|` for every `(d_minus, d)`, counted position by position:
/// `table[j][a][b]` = vectors with `j` negative entries of total size `a` and
/// positive entries summing to `b`.
fn s_counts_by_dp(k: usize) -> Vec<Vec<u128>> {
    let top = k - 1;
    let mut table = vec![vec![vec![0u128; top + 1]; top + 1]; k + 1];
    table[0][0][0] = 1;
    for _ in 0..k {
        let mut next = vec![vec![vec![0u128; top + 1]; top + 1]; k + 1];
        for j in 0..=k {
            for a in 0..=top {
                for b in 0..=top {
                    let ways = table[j][a][b];
                    if ways == 0 {
                        continue;
                    }
                    for v in 0..=top - b {
                        next[j][a][b + v] += ways;
                    }
                    if j < k {
                        for v in 1..=top - a {
                            next[j + 1][a + v][b] += ways;
                        }
                    }
                }
            }
        }
        table = next;
    }
    let mut out = vec![vec![0u128; k]; k];
    for dm in 0..k {
        for d in dm..k {
            out[dm][d] = (0..=d).flat_map(|a| (0..=top - d).map(move |b| (a, b))).map(|(a, b)| table[dm][a][b]).sum();
        }
    }
    out
}

#[test]
fn s_counts_agree_with_the_formula_and_d1() {
    for k in 2..=30usize {
        let counts = s_counts_by_dp(k);
        let mut best = (0u128, (0, 0));
        for dm in 0..k {
            for d in dm..k {
                let c = counts[dm][d];
                assert_eq!(Nat::from(c), s_cardinality(k, dm, d).unwrap(), "k={k} d-={dm} d={d}");
                if c > best.0 {
                    best = (c, (dm, d));
                }
            }
        }
        let (d1, arg) = d1_bound(k).unwrap();
        assert_eq!(d1, Nat::from(best.0), "k={k}");
        assert_eq!((arg.d_minus, arg.d), best.1, "k={k}");
    }
}

#[test]
fn s_enumeration_satisfies_its_constraints() {
    for k in 2..=7usize {
        for dm in 0..k {
            for d in dm..k {
                let vs = enumerate_s(k, dm, d, DEFAULT_VECTOR_CAP).unwrap();
                let mut sorted: Vec<Vec<i32>> = vs.iter().map(|v| v.entries.clone()).collect();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), vs.len());
                for v in &vs {
                    assert_eq!(v.kind, VectorKind::S);
                    assert_eq!(v.entries.len(), k);
                    assert_eq!(v.entries.iter().filter(|&&u| u < 0).count(), dm);
                    assert!(v.entries.iter().filter(|&&u| u < 0).map(|u| -u).sum::<i32>() <= d as i32);
                    assert!(v.entries.iter().filter(|&&u| u > 0).sum::<i32>() <= (k - 1 - d) as i32);
                }
                let formula = binom(k as u64, dm as i64)
                    * binom(d as u64, dm as i64)
                    * binom((2 * k - d - dm - 1) as u64, (k - d - 1) as i64);
                assert_eq!(Nat::from(vs.len()), formula);
            }
        }
    }
}

#[test]
fn t_enumeration_matches_count_and_brute_force() {
    for p in [5u64, 7, 11] {
        for k in 2..=6usize {
            for l in 1..=5usize {
                let m = k * l;
                let mut brute = 0u64;
                let mut digits = vec![0u64; l];
                loop {
                    let total: u64 = digits.iter().enumerate().map(|(i, &u)| (i * k + 1) as u64 * u).sum();
                    brute += (total < m as u64) as u64;
                    let mut pos = 0;
                    while pos < l && digits[pos] == p - 1 {
                        digits[pos] = 0;
                        pos += 1;
                    }
                    if pos == l {
                        break;
                    }
                    digits[pos] += 1;
                }
                let listed = enumerate_t(p, k, l, DEFAULT_VECTOR_CAP).unwrap();
                assert_eq!(Nat::from(brute), count_t(p, k, l).unwrap(), "p={p} k={k} l={l}");
                assert_eq!(listed.len() as u64, brute);
                assert!(listed.iter().all(|v| v.entries.iter().all(|&u| (0..p as i32).contains(&u))));
            }
        }
    }
}

fn setup(p: u64, n: usize, m: usize) -> (KummerParams, high_order_core::Decomposition) {
    let base = FieldParams::new(p, n, None).unwrap();
    let d = decompose(&base, m).unwrap();
    (KummerParams::search(base, m).unwrap(), d)
}

#[test]
fn theta_products_lie_in_the_cyclic_group_of_theta_plus_b() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (p, n, m) in [(5, 1, 8), (7, 1, 9), (13, 1, 8), (5, 2, 12), (11, 2, 9)] {
        let (ext, d) = setup(p, n, m);
        let q = ext.base().q().clone();
        // Slot i belongs to the conjugate (theta + b)^(q^z) with q^z = i k + 1 (mod m).
        let mut slot_power = vec![Nat::from(0u32); d.l()];
        for z in 0..d.l() {
            let qz = num_traits::pow(q.clone(), z);
            let r: usize = (&qz % m).try_into().unwrap();
            slot_power[(r - 1) / d.k()] = qz;
        }
        for b_index in [1u64, 2] {
            let b = ext.base().from_index(b_index);
            let x = ext.add(&ext.theta(), &ext.from_base(&b));
            for _ in 0..30 {
                let entries: Vec<i32> = (0..d.l()).map(|_| rng.gen_range(0..p as i32)).collect();
                let mut exponent = Nat::from(0u32);
                for (u, pw) in entries.iter().zip(&slot_power) {
                    exponent += pw * Nat::from(*u as u32);
                }
                let alpha = ExponentVector { entries, kind: VectorKind::T };
                let expected = ext.pow(&x, &(exponent % ext.group_order()));
                assert_eq!(product_p_theta(&ext, &d, &b, &alpha).unwrap(), expected);
            }
        }
    }
}

#[test]
fn eta_products_respect_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let (ext, d) = setup(13, 1, 12);
    let b = ext.base().one();
    let conj = ext.eta_conjugates(&d, &b).unwrap();
    for _ in 0..50 {
        let entries: Vec<i32> = (0..d.k()).map(|_| rng.gen_range(-3..4)).collect();
        let neg: Vec<i32> = entries.iter().map(|u| -u).collect();
        let x = product_p_eta(&ext, &conj, &ExponentVector { entries, kind: VectorKind::S }).unwrap();
        let y = product_p_eta(&ext, &conj, &ExponentVector { entries: neg, kind: VectorKind::S }).unwrap();
        assert!(ext.is_one(&ext.mul(&x, &y)));
    }
}

#[test]
fn injectivity_on_small_instances() {
    for (p, n, m) in [(5, 1, 8), (7, 1, 6), (13, 1, 4), (7, 2, 9), (11, 1, 5), (13, 2, 7)] {
        let (ext, d) = setup(p, n, m);
        for b_index in [1u64, 3] {
            let b = ext.base().from_index(b_index);
            let (_, arg) = d1_bound(d.k()).unwrap();
            assert!(verify_injectivity_s(&ext, &d, &b, arg.d_minus, arg.d, DEFAULT_VECTOR_CAP).unwrap());
            assert!(verify_injectivity_s(&ext, &d, &b, 0, 0, DEFAULT_VECTOR_CAP).unwrap());
            assert!(verify_injectivity_t(&ext, &d, &b, DEFAULT_VECTOR_CAP).unwrap());
        }
    }
}

#[test]
fn best_construction_takes_the_larger_bound() {
    for (p, n, m) in [(5, 1, 8), (7, 1, 9), (13, 1, 9), (5, 2, 12), (11, 2, 9)] {
        let (ext, d) = setup(p, n, m);
        let b = ext.base().one();
        let t1 = construct_theorem1(&ext, &d, &b).unwrap();
        let t2 = construct_theorem2(&ext, &d, &b).unwrap();
        let best = construct_best(&ext, &d, &b).unwrap();
        assert_eq!(best.selected.bound, t1.bound.clone().max(t2.bound.clone()));
        let expected_kind = if t1.bound >= t2.bound { ElementKind::EtaPlusB } else { ElementKind::ThetaPlusB };
        assert_eq!(best.selected.element_kind, expected_kind);
        assert!(!ext.is_zero(&best.selected.element));
    }
}
