use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::order::is_prime_u64;
use crate::{Error, Nat, Result};

/// Number of partitions of every `c` in `0..=c_max` (`p(0) = 1`).
pub fn partition_counts_upto(c_max: usize) -> Vec<Nat> {
    // Rolling over the largest admissible part.
    let mut ways = vec![Nat::zero(); c_max + 1];
    ways[0] = Nat::one();
    for part in 1..=c_max {
        for t in part..=c_max {
            let (lo, hi) = ways.split_at_mut(t);
            hi[0] += &lo[t - part];
        }
    }
    ways
}

pub fn partition_count(c: usize) -> Nat {
    partition_counts_upto(c).swap_remove(c)
}

/// Ways to reach each total in `0..=cap` choosing item `i` at most
/// `limit_i` times, for the `(weight, limit)` items given.
fn bounded_knapsack(items: impl IntoIterator<Item = (usize, usize)>, cap: usize) -> Vec<Nat> {
    let mut ways = vec![Nat::zero(); cap + 1];
    ways[0] = Nat::one();
    for (weight, limit) in items {
        debug_assert!(weight > 0);
        if weight > cap || limit == 0 {
            continue;
        }
        // next[t] = sum_{u=0}^{limit} ways[t - u*w], as a sliding window.
        let span = (limit + 1).saturating_mul(weight);
        let mut next = Vec::with_capacity(cap + 1);
        for t in 0..=cap {
            let mut v = ways[t].clone();
            if t >= weight {
                v += &next[t - weight];
            }
            if t >= span {
                v -= &ways[t - span];
            }
            next.push(v);
        }
        ways = next;
    }
    ways
}

/// Partition counts for `0..=c_max` where every part occurs at most `d` times.
pub fn partition_counts_bounded_upto(c_max: usize, d: usize) -> Vec<Nat> {
    bounded_knapsack((1..=c_max).map(|part| (part, d)), c_max)
}

/// Partitions of `c` in which each part appears no more than `d` times.
pub fn partition_count_bounded(c: usize, d: usize) -> Nat {
    partition_counts_bounded_upto(c, d).swap_remove(c)
}

/// Partition counts for `0..=c_max` with no part divisible by `d`.
pub fn partition_counts_nondiv_upto(c_max: usize, d: usize) -> Result<Vec<Nat>> {
    if d == 0 {
        return Err(Error::invalid("divisor d must be at least 1"));
    }
    let mut ways = vec![Nat::zero(); c_max + 1];
    ways[0] = Nat::one();
    for part in (1..=c_max).filter(|part| part % d != 0) {
        for t in part..=c_max {
            let (lo, hi) = ways.split_at_mut(t);
            hi[0] += &lo[t - part];
        }
    }
    Ok(ways)
}

/// Partitions of `c` with no part divisible by `d`.
pub fn partition_count_nondiv(c: usize, d: usize) -> Result<Nat> {
    Ok(partition_counts_nondiv_upto(c, d)?.swap_remove(c))
}

/// `|T|`: the number of vectors `(u_0, ..., u_{l-1})` with `0 <= u_i <= p - 1`
/// and `sum_i (i*k + 1) u_i < k*l`.
pub fn count_t(p: u64, k: usize, l: usize) -> Result<Nat> {
    if p < 5 || !is_prime_u64(p) {
        return Err(Error::invalid("p must be a prime >= 5"));
    }
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    if l < 1 {
        return Err(Error::invalid("l must be at least 1"));
    }
    let m = k
        .checked_mul(l)
        .ok_or_else(|| Error::invalid("k * l overflows"))?;
    let limit = usize::try_from(p - 1).unwrap_or(usize::MAX);
    let ways = bounded_knapsack((0..l).map(|i| (i * k + 1, limit)), m - 1);
    Ok(ways.iter().sum())
}
