//! Exact multiplicative orders in `F_q*` and `F_{q^m}*`, backed by a complete
//! factorisation of the group order.

mod primality;
mod rho;

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub use primality::{is_prime, is_prime_u64};

use crate::kummer::{ExtElement, KummerParams};
use crate::{Error, Nat, Result};

/// Cooperative cancellation for long-running factorisations.
pub trait Budget {
    fn exhausted(&self) -> bool;
}

/// A budget that never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn exhausted(&self) -> bool {
        false
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorisation `prod p_i^e_i` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(Nat, u32)>,
}

impl Factorization {
    /// Builds a factorisation from `(prime, exponent)` pairs in any order,
    /// merging repeated primes and rejecting composite "primes".
    pub fn from_factors(pairs: impl IntoIterator<Item = (Nat, u32)>) -> Result<Self> {
        let mut factors: Vec<(Nat, u32)> = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        factors.sort();
        let mut merged: Vec<(Nat, u32)> = Vec::with_capacity(factors.len());
        for (p, e) in factors {
            match merged.last_mut() {
                Some((last, acc)) if *last == p => *acc += e,
                _ => {
                    if !is_prime(&p) {
                        return Err(Error::invalid("factor is not prime"));
                    }
                    merged.push((p, e));
                }
            }
        }
        Ok(Factorization { factors: merged })
    }

    pub fn factors(&self) -> &[(Nat, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &Nat> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factored value.
    pub fn value(&self) -> Nat {
        self.factors
            .iter()
            .fold(Nat::one(), |acc, (p, e)| acc * num_traits::pow(p.clone(), *e as usize))
    }

    fn merge(self, other: Factorization) -> Factorization {
        let pairs = self.factors.into_iter().chain(other.factors);
        // Both inputs already hold verified primes; only merging is needed.
        let mut all: Vec<(Nat, u32)> = pairs.collect();
        all.sort();
        let mut merged: Vec<(Nat, u32)> = Vec::with_capacity(all.len());
        for (p, e) in all {
            match merged.last_mut() {
                Some((last, acc)) if *last == p => *acc += e,
                _ => merged.push((p, e)),
            }
        }
        Factorization { factors: merged }
    }
}

fn push_prime(out: &mut Vec<(Nat, u32)>, p: Nat) {
    out.push((p, 1));
}

fn split_u64(n: u64, budget: &dyn Budget, out: &mut Vec<(Nat, u32)>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime_u64(n) {
        push_prime(out, Nat::from(n));
        return Ok(());
    }
    let d = rho::brent_u64(n, budget)?;
    split_u64(d, budget, out)?;
    split_u64(n / d, budget, out)
}

fn split_big(n: Nat, budget: &dyn Budget, out: &mut Vec<(Nat, u32)>) -> Result<()> {
    if let Some(small) = n.to_u64() {
        return split_u64(small, budget, out);
    }
    if is_prime(&n) {
        push_prime(out, n);
        return Ok(());
    }
    let d = rho::brent_big(&n, budget)?;
    let rest = &n / &d;
    split_big(d, budget, out)?;
    split_big(rest, budget, out)
}

/// Complete factorisation: trial division up to `10^6`, then Pollard-Brent
/// on the cofactor. Fails with [`Error::FactorizationTimeout`] when the budget
/// runs out.
pub fn factorize(n: &Nat, budget: &dyn Budget) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::invalid("cannot factor zero"));
    }
    if budget.exhausted() {
        return Err(Error::FactorizationTimeout);
    }
    let mut out = Vec::new();
    let mut rest = n.clone();
    for p in [2u64, 3] {
        while (&rest % p).is_zero() {
            rest /= p;
            push_prime(&mut out, Nat::from(p));
        }
    }
    // 6j +- 1 wheel
    let mut d = 5u64;
    let mut step = 2u64;
    let mut iterations = 0u32;
    while d <= TRIAL_LIMIT {
        if let Some(mut small) = rest.to_u64() {
            if d.saturating_mul(d) > small {
                break;
            }
            if small % d == 0 {
                while small % d == 0 {
                    small /= d;
                    push_prime(&mut out, Nat::from(d));
                }
                rest = Nat::from(small);
            }
        } else {
            while (&rest % d).is_zero() {
                rest /= d;
                push_prime(&mut out, Nat::from(d));
            }
        }
        d += step;
        step = 6 - step;
        iterations += 1;
        if iterations % 65_536 == 0 && budget.exhausted() {
            return Err(Error::FactorizationTimeout);
        }
    }
    if !rest.is_one() {
        split_big(rest, budget, &mut out)?;
    }
    Ok(Factorization::from_factors(out).expect("factors are prime"))
}

/// `Phi_d(q)` for every divisor `d` of `m`, as `(d, value)` pairs in increasing `d`.
pub fn cyclotomic_values(q: &Nat, m: u64) -> Vec<(u64, Nat)> {
    let divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
    let mut values: Vec<(u64, Nat)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut v = num_traits::pow(q.clone(), d as usize) - 1u32;
        for (e, phi) in &values {
            if d % e == 0 {
                v /= phi;
            }
        }
        values.push((d, v));
    }
    values
}

/// Factorisation of `q^m - 1`, splitting it first into the cyclotomic values
/// `Phi_d(q)`, `d | m`, which are much smaller than the full group order.
pub fn factor_group_order(q: &Nat, m: u64, budget: &dyn Budget) -> Result<Factorization> {
    if m == 0 {
        return Err(Error::invalid("m must be positive"));
    }
    if q <= &Nat::one() {
        return Err(Error::invalid("q must exceed 1"));
    }
    let mut acc = Factorization::default();
    for (_, phi) in cyclotomic_values(q, m) {
        acc = acc.merge(factorize(&phi, budget)?);
    }
    Ok(acc)
}

/// Reduces `group_order` to the exact order of an element, given a test
/// `is_identity(e)` for `x^e = 1` and the factorisation of `group_order`.
pub fn order_from_factorization(
    group_order: &Nat,
    fact: &Factorization,
    mut is_identity: impl FnMut(&Nat) -> bool,
) -> Nat {
    let mut e = group_order.clone();
    for (r, _) in fact.factors() {
        loop {
            let (quot, rem) = e.div_rem(r);
            if !rem.is_zero() || !is_identity(&quot) {
                break;
            }
            e = quot;
        }
    }
    e
}

/// Exact multiplicative order of a nonzero `x` in `F_{q^m}*`, where `fact` is
/// the factorisation of `q^m - 1`.
pub fn exact_order(field: &KummerParams, x: &ExtElement, fact: &Factorization) -> Result<Nat> {
    if field.is_zero(x) {
        return Err(Error::invalid("the zero element has no multiplicative order"));
    }
    let group_order = field.group_order();
    if &fact.value() != group_order {
        return Err(Error::invalid("factorization is not of q^m - 1"));
    }
    Ok(order_from_factorization(group_order, fact, |e| field.is_one(&field.pow(x, e))))
}
