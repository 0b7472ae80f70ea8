//! The split `m = k * l` with `l = ord_m(q)`, `k | q - 1`, and the coset
//! representatives `{i*k + 1 : 0 <= i < l}` of the subgroup `<q mod m>`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::field::FieldParams;
use crate::kummer::binomial_exists;
use crate::{Error, Nat, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    q: Nat,
    m: usize,
    k: usize,
    l: usize,
    h: Nat,
    coset_reps: Vec<usize>,
    binomial_exists: bool,
}

/// Smallest `l >= 1` with `q^l = 1 (mod m)`.
pub fn mult_order_mod(q: &Nat, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    if m == 1 {
        return Ok(1);
    }
    let r = (q % m).to_u64().expect("reduced below m");
    if r.gcd(&m) != 1 {
        return Err(Error::invalid("q and m are not coprime"));
    }
    let mut x = r;
    let mut l = 1;
    while x != 1 {
        x = (x as u128 * r as u128 % m as u128) as u64;
        l += 1;
    }
    Ok(l)
}

/// Computes and cross-checks the decomposition for `F_q` and degree `m`.
///
/// When no irreducible binomial of degree `m` exists the arithmetic is still
/// returned, with [`Decomposition::binomial_exists`] set to `false`.
pub fn decompose(base: &FieldParams, m: usize) -> Result<Decomposition> {
    if m < 2 {
        return Err(Error::invalid("m must be at least 2"));
    }
    let q = base.q().clone();
    let l = mult_order_mod(&q, m as u64)? as usize;
    if m % l != 0 {
        return Err(Error::DecompositionFailure(format!("ord_m(q) = {l} does not divide m = {m}")));
    }
    let k = m / l;
    if k <= 1 {
        return Err(Error::DecompositionFailure(format!("k = m / ord_m(q) = {k} must exceed 1")));
    }
    let q_minus_one = &q - 1u32;
    let (h, rem) = q_minus_one.div_rem(&Nat::from(k));
    if !rem.is_zero() {
        return Err(Error::DecompositionFailure(format!("k = {k} does not divide q - 1")));
    }

    let coset_reps: Vec<usize> = (0..l).map(|i| (i * k + 1) % m).collect();
    let reps: BTreeSet<usize> = coset_reps.iter().copied().collect();
    let q_mod = (&q % m).to_usize().expect("reduced below m");
    let mut powers = BTreeSet::new();
    let mut x = 1 % m;
    for _ in 0..l {
        powers.insert(x);
        x = x * q_mod % m;
    }
    if reps.len() != l || reps != powers {
        return Err(Error::DecompositionFailure(format!(
            "coset representatives {{i*k+1}} do not match the powers of q mod {m}"
        )));
    }

    Ok(Decomposition { binomial_exists: binomial_exists(base, m), q, m, k, l, h, coset_reps })
}

impl Decomposition {
    pub fn q(&self) -> &Nat {
        &self.q
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `h = (q - 1) / k`.
    pub fn h(&self) -> &Nat {
        &self.h
    }

    /// `(i*k + 1) mod m` for `i = 0..l`.
    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    /// `false` when no irreducible binomial of degree `m` exists over this `F_q`;
    /// such decompositions must not feed a construction.
    pub fn binomial_exists(&self) -> bool {
        self.binomial_exists
    }

    /// The unique `(i, j)` with `q^z = (i*k + 1) + j*m`, `0 <= i < l`.
    pub fn exponent_split(&self, z: usize) -> Result<(usize, Nat)> {
        if z >= self.l {
            return Err(Error::invalid(format!("z = {z} must be below l = {}", self.l)));
        }
        let qz = num_traits::pow(self.q.clone(), z);
        let r = (&qz % self.m).to_usize().expect("reduced below m");
        if r % self.k != 1 {
            return Err(Error::DecompositionFailure(format!("q^{z} mod m is not 1 mod k")));
        }
        let i = (r - 1) / self.k;
        let j = (qz - (i * self.k + 1)) / self.m;
        Ok((i, j))
    }
}
