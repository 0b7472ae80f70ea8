//! Dense polynomials over `F_q`, coefficients constant term first.

use alloc::vec;
use alloc::vec::Vec;

use super::{FieldParams, FqElem};
use crate::{Error, Nat, Result};

/// Drops trailing zero coefficients.
pub fn poly_trim(field: &FieldParams, mut a: Vec<FqElem>) -> Vec<FqElem> {
    while a.last().map_or(false, |c| field.is_zero(c)) {
        a.pop();
    }
    a
}

/// `a mod f` for monic `f` of degree at least 1.
pub fn poly_rem(field: &FieldParams, a: &[FqElem], f: &[FqElem]) -> Vec<FqElem> {
    let df = f.len() - 1;
    let mut r = a.to_vec();
    while r.len() > df {
        let lead = r.pop().expect("nonempty");
        if field.is_zero(&lead) {
            continue;
        }
        let base = r.len() - df;
        for (j, fj) in f[..df].iter().enumerate() {
            r[base + j] = field.sub(&r[base + j], &field.mul(&lead, fj));
        }
    }
    poly_trim(field, r)
}

fn poly_mul(field: &FieldParams, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    out
}

pub fn poly_mulmod(field: &FieldParams, a: &[FqElem], b: &[FqElem], f: &[FqElem]) -> Vec<FqElem> {
    poly_rem(field, &poly_mul(field, a, b), f)
}

pub fn poly_powmod(field: &FieldParams, a: &[FqElem], e: &Nat, f: &[FqElem]) -> Vec<FqElem> {
    let base = poly_rem(field, a, f);
    let mut acc = poly_rem(field, &[field.one()], f);
    for i in (0..e.bits()).rev() {
        acc = poly_mulmod(field, &acc, &acc, f);
        if e.bit(i) {
            acc = poly_mulmod(field, &acc, &base, f);
        }
    }
    acc
}

/// Monic gcd (empty for `gcd(0, 0)`).
pub fn poly_gcd(field: &FieldParams, a: &[FqElem], b: &[FqElem]) -> Vec<FqElem> {
    let mut a = poly_trim(field, a.to_vec());
    let mut b = poly_trim(field, b.to_vec());
    while !b.is_empty() {
        let lead_inv = field.inv(b.last().expect("nonempty")).expect("nonzero lead");
        let monic: Vec<FqElem> = b.iter().map(|c| field.mul(c, &lead_inv)).collect();
        let r = poly_rem(field, &a, &monic);
        a = monic;
        b = r;
    }
    if let Some(lead) = a.last() {
        let lead_inv = field.inv(lead).expect("nonzero lead");
        a = a.iter().map(|c| field.mul(c, &lead_inv)).collect();
    }
    a
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: a monic `f` of degree `d` is irreducible over `F_q` iff
/// `x^(q^d) = x (mod f)` and `gcd(x^(q^(d/r)) - x, f) = 1` for each prime `r | d`.
pub fn is_irreducible_poly(field: &FieldParams, f: &[FqElem]) -> Result<bool> {
    let f = poly_trim(field, f.to_vec());
    if f.len() < 2 {
        return Err(Error::invalid("polynomial must have degree at least 1"));
    }
    if !field.is_one(f.last().expect("nonempty")) {
        return Err(Error::invalid("polynomial must be monic"));
    }
    let d = f.len() - 1;
    if d == 1 {
        return Ok(true);
    }
    let x = poly_rem(field, &[field.zero(), field.one()], &f);
    // frob[i] = x^(q^i) mod f
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(x.clone());
    for i in 1..=d {
        let next = poly_powmod(field, &frob[i - 1], field.q(), &f);
        frob.push(next);
    }
    if frob[d] != x {
        return Ok(false);
    }
    for r in prime_divisors(d) {
        let h = &frob[d / r];
        let len = h.len().max(x.len());
        let diff: Vec<FqElem> = (0..len)
            .map(|i| {
                let a = h.get(i).cloned().unwrap_or_else(|| field.zero());
                let b = x.get(i).cloned().unwrap_or_else(|| field.zero());
                field.sub(&a, &b)
            })
            .collect();
        if poly_gcd(field, &diff, &f).len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
