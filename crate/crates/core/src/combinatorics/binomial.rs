use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{Error, Nat, Result};

/// Exact binomial coefficient `C(n, r)`; zero when `r < 0` or `r > n`.
pub fn binom(n: u64, r: i64) -> Nat {
    if r < 0 || r as u64 > n {
        return Nat::zero();
    }
    let r = (r as u64).min(n - r as u64);
    let mut acc = Nat::one();
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    for i in 1..=r {
        acc *= n - r + i;
        acc /= i;
    }
    acc
}

/// Pascal triangle rows `0..=max_n`, for evaluating many binomials at once.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<Nat>>,
}

impl BinomialTable {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<Nat>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = Vec::with_capacity(n + 1);
            row.push(Nat::one());
            for r in 1..n {
                let prev = &rows[n - 1];
                row.push(&prev[r - 1] + &prev[r]);
            }
            if n > 0 {
                row.push(Nat::one());
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `C(n, r)`, zero outside `0 <= r <= n`. Panics if `n` exceeds the table.
    pub fn get(&self, n: usize, r: i64) -> &Nat {
        static ZERO: Nat = Nat::ZERO;
        if r < 0 || r as usize > n {
            return &ZERO;
        }
        &self.rows[n][r as usize]
    }
}

/// A maximising `(d_minus, d)` pair for the `d1` product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgmaxPair {
    pub d_minus: usize,
    pub d: usize,
}

/// `C(k, d_minus) * C(d, d_minus) * C(2k - d - d_minus - 1, k - d - 1)`, the
/// number of exponent vectors of length `k` with exactly `d_minus` negative
/// entries whose absolute values sum to at most `d`, and whose nonnegative
/// entries sum to at most `k - 1 - d`.
pub fn s_cardinality(k: usize, d_minus: usize, d: usize) -> Result<Nat> {
    check_s_params(k, d_minus, d)?;
    let top = (2 * k - d - d_minus - 1) as u64;
    Ok(binom(k as u64, d_minus as i64) * binom(d as u64, d_minus as i64) * binom(top, (k - d - 1) as i64))
}

pub(crate) fn check_s_params(k: usize, d_minus: usize, d: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::invalid("k must be at least 2"));
    }
    if !(d_minus <= d && d < k) {
        return Err(Error::invalid("need 0 <= d_minus <= d < k"));
    }
    Ok(())
}

/// Exact `d1(k) = max_{0 <= d_minus <= d < k} C(k,d_minus) C(d,d_minus) C(2k-d-d_minus-1, k-d-1)`.
///
/// Ties go to the lexicographically smallest `(d_minus, d)`.
pub fn d1_bound(k: usize) -> Result<(Nat, ArgmaxPair)> {
    if k < 2 {
        return Err(Error::invalid("d1 is defined for k >= 2"));
    }
    let table = BinomialTable::new(2 * k - 1);
    let mut best = Nat::zero();
    let mut arg = ArgmaxPair { d_minus: 0, d: 0 };
    for d_minus in 0..k {
        let outer = table.get(k, d_minus as i64);
        for d in d_minus..k {
            let value = outer
                * table.get(d, d_minus as i64)
                * table.get(2 * k - d - d_minus - 1, (k - d - 1) as i64);
            if value > best {
                best = value;
                arg = ArgmaxPair { d_minus, d };
            }
        }
    }
    Ok((best, arg))
}
