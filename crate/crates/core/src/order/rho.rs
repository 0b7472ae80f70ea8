//! Pollard rho with Brent's cycle detection and batched gcds.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::primality::mul_mod;
use super::Budget;
use crate::{Error, Result};

const BATCH: u64 = 128;

pub(crate) fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// A nontrivial factor of the odd composite `n`. The walk is seeded from `n`.
pub(crate) fn brent_u64(n: u64, budget: &dyn Budget) -> Result<u64> {
    debug_assert!(n > 3 && n % 2 == 1);
    let seed = splitmix64(n);
    for attempt in 0u64.. {
        let c = 1 + splitmix64(seed.wrapping_add(attempt)) % (n - 1);
        let step = |y: u64| (mul_mod(y, y, n) + c) % n;
        let mut y = splitmix64(seed ^ attempt) % n;
        let (mut x, mut ys) = (y, y);
        let (mut g, mut r, mut q) = (1u64, 1u64, 1u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += BATCH;
            }
            r *= 2;
            if budget.exhausted() {
                return Err(Error::FactorizationTimeout);
            }
        }
        if g == n {
            loop {
                ys = step(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Ok(g);
        }
    }
    unreachable!()
}

fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a >= b {
        a - b
    } else {
        b - a
    }
}

/// Arbitrary-precision variant of [`brent_u64`].
pub(crate) fn brent_big(n: &BigUint, budget: &dyn Budget) -> Result<BigUint> {
    let low = n.iter_u64_digits().next().unwrap_or(0);
    let seed = splitmix64(low ^ n.bits());
    for attempt in 0u64.. {
        let c = BigUint::from(1 + splitmix64(seed.wrapping_add(attempt)) % (u64::MAX - 1)) % n;
        let step = |y: &BigUint| (y * y + &c) % n;
        let mut y = BigUint::from(splitmix64(seed ^ attempt)) % n;
        let (mut x, mut ys) = (y.clone(), y.clone());
        let mut g = BigUint::one();
        let mut q = BigUint::one();
        let mut r = 1u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = step(&y);
                    q = (q * abs_diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
            if budget.exhausted() {
                return Err(Error::FactorizationTimeout);
            }
        }
        if &g == n || g.is_zero() {
            loop {
                ys = step(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n && !g.is_zero() {
            return Ok(g);
        }
    }
    unreachable!()
}
