//! Arithmetic in `F_p` and `F_q = F_p[y]/<g(y)>`.
//!
//! Elements are coefficient vectors of length `n` (constant term first) with
//! residues in `[0, p)`. Operations live on [`FieldParams`], so elements stay
//! plain data.

mod poly;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{ToPrimitive, Zero};

pub use poly::{is_irreducible_poly, poly_gcd, poly_mulmod, poly_powmod, poly_rem, poly_trim};

use crate::order::{is_prime_u64, order_from_factorization, Factorization};
use crate::{Error, Nat, Result};

/// Element of `F_q`: `n` residues mod `p`, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FqElem(pub(crate) Vec<u32>);

impl FqElem {
    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The base field `F_q`, `q = p^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldParams {
    p: u32,
    n: usize,
    /// Monic modulus of degree `n`, constant term first; empty for prime fields.
    modulus: Vec<u32>,
    q: Nat,
}

impl FieldParams {
    /// Validates `(p, n)` and the optional modulus. Without a modulus and with
    /// `n > 1`, the monic irreducible of degree `n` with the smallest index
    /// `sum c_i p^i` (constant term least significant) is used.
    pub fn new(p: u64, n: usize, modulus: Option<&[u64]>) -> Result<Self> {
        if p < 5 || !is_prime_u64(p) {
            return Err(Error::UnsupportedCharacteristic(p));
        }
        if p >= 1 << 31 {
            return Err(Error::invalid("p must be below 2^31"));
        }
        if n == 0 {
            return Err(Error::invalid("extension degree n must be at least 1"));
        }
        let prime = FieldParams::prime_field_unchecked(p as u32);
        if n == 1 {
            if let Some(g) = modulus {
                if g.len() != 2 || g[1] != 1 || g[0] >= p {
                    return Err(Error::InvalidModulus("expected a monic linear polynomial".into()));
                }
            }
            return Ok(prime);
        }
        let modulus = match modulus {
            Some(g) => {
                if g.len() != n + 1 || g[n] != 1 || g.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus("expected a monic polynomial of degree n with residues below p".into()));
                }
                let poly: Vec<FqElem> = g.iter().map(|&c| prime.from_u64(c)).collect();
                if !is_irreducible_poly(&prime, &poly)? {
                    return Err(Error::InvalidModulus("modulus is reducible over F_p".into()));
                }
                g.iter().map(|&c| c as u32).collect()
            }
            None => first_irreducible(&prime, n)?,
        };
        Ok(FieldParams { p: p as u32, n, modulus, q: num_traits::pow(Nat::from(p), n) })
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        FieldParams::new(p, 1, None)
    }

    fn prime_field_unchecked(p: u32) -> Self {
        FieldParams { p, n: 1, modulus: Vec::new(), q: Nat::from(p) }
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &Nat {
        &self.q
    }

    /// `q` as a machine integer, when it fits.
    pub fn q_u64(&self) -> Option<u64> {
        self.q.to_u64()
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem(vec![0; self.n])
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_u64(&self, v: u64) -> FqElem {
        let mut c = vec![0; self.n];
        c[0] = (v % self.p as u64) as u32;
        FqElem(c)
    }

    /// Element from up to `n` residues (constant term first).
    pub fn element(&self, coeffs: &[u64]) -> Result<FqElem> {
        if coeffs.len() > self.n {
            return Err(Error::invalid("too many coefficients for F_q"));
        }
        if coeffs.iter().any(|&c| c >= self.p as u64) {
            return Err(Error::invalid("coefficient not reduced mod p"));
        }
        let mut c = vec![0; self.n];
        for (dst, &src) in c.iter_mut().zip(coeffs) {
            *dst = src as u32;
        }
        Ok(FqElem(c))
    }

    /// The element whose base-`p` digits (constant term least significant) spell `index`.
    pub fn from_index(&self, mut index: u64) -> FqElem {
        let p = self.p as u64;
        let mut c = vec![0; self.n];
        for slot in c.iter_mut() {
            *slot = (index % p) as u32;
            index /= p;
        }
        FqElem(c)
    }

    pub fn index(&self, x: &FqElem) -> Nat {
        x.0.iter().rev().fold(Nat::zero(), |acc, &c| acc * self.p + c)
    }

    pub fn is_zero(&self, x: &FqElem) -> bool {
        x.0.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, x: &FqElem) -> bool {
        x.0[0] == 1 && x.0[1..].iter().all(|&c| c == 0)
    }

    /// `true` when `x` has the shape of an element of this field.
    pub fn contains(&self, x: &FqElem) -> bool {
        x.0.len() == self.n && x.0.iter().all(|&c| c < self.p)
    }

    pub fn add(&self, x: &FqElem, y: &FqElem) -> FqElem {
        let mut out = x.clone();
        self.add_assign_slice(&mut out.0, &y.0);
        out
    }

    pub fn sub(&self, x: &FqElem, y: &FqElem) -> FqElem {
        let p = self.p;
        FqElem(x.0.iter().zip(&y.0).map(|(&a, &b)| if a >= b { a - b } else { a + p - b }).collect())
    }

    pub fn neg(&self, x: &FqElem) -> FqElem {
        let p = self.p;
        FqElem(x.0.iter().map(|&a| if a == 0 { 0 } else { p - a }).collect())
    }

    pub fn mul(&self, x: &FqElem, y: &FqElem) -> FqElem {
        let mut out = vec![0; self.n];
        self.mul_slices(&x.0, &y.0, &mut out);
        FqElem(out)
    }

    pub fn inv(&self, x: &FqElem) -> Result<FqElem> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, &(&self.q - 2u32)))
    }

    /// `x^e` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, x: &FqElem, e: &Nat) -> FqElem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, x);
            }
        }
        acc
    }

    /// Exact multiplicative order of `x != 0`, given the factorisation of `q - 1`.
    pub fn mult_order(&self, x: &FqElem, fact: &Factorization) -> Result<Nat> {
        if self.is_zero(x) {
            return Err(Error::invalid("zero has no multiplicative order"));
        }
        let group_order = &self.q - 1u32;
        if fact.value() != group_order {
            return Err(Error::invalid("factorization is not of q - 1"));
        }
        Ok(order_from_factorization(&group_order, fact, |e| self.is_one(&self.pow(x, e))))
    }

    pub(crate) fn add_assign_slice(&self, acc: &mut [u32], y: &[u32]) {
        let p = self.p;
        for (a, &b) in acc.iter_mut().zip(y) {
            let s = *a + b;
            *a = if s >= p { s - p } else { s };
        }
    }

    /// `out = x * y` on raw coefficient slices of length `n`.
    pub(crate) fn mul_slices(&self, x: &[u32], y: &[u32], out: &mut [u32]) {
        let p = self.p as u64;
        if self.n == 1 {
            out[0] = (x[0] as u64 * y[0] as u64 % p) as u32;
            return;
        }
        let mut wide = [0u64; 64];
        let mut heap;
        let wide: &mut [u64] = if 2 * self.n - 1 <= wide.len() {
            &mut wide[..2 * self.n - 1]
        } else {
            heap = vec![0u64; 2 * self.n - 1];
            &mut heap
        };
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                wide[i + j] = (wide[i + j] + a as u64 * b as u64) % p;
            }
        }
        self.reduce_wide(wide, out);
    }

    /// Reduces a polynomial in `y` of degree `< 2n - 1` with coefficients
    /// already in `[0, p)` modulo the field modulus.
    pub(crate) fn reduce_wide(&self, wide: &mut [u64], out: &mut [u32]) {
        let p = self.p as u64;
        let n = self.n;
        if n > 1 {
            for top in (n..wide.len()).rev() {
                let c = wide[top] % p;
                if c == 0 {
                    continue;
                }
                wide[top] = 0;
                for (j, &g) in self.modulus[..n].iter().enumerate() {
                    let slot = &mut wide[top - n + j];
                    *slot = (*slot + c * (p - g as u64)) % p;
                }
            }
        }
        for (dst, &src) in out.iter_mut().zip(wide.iter()) {
            *dst = (src % p) as u32;
        }
    }
}

fn first_irreducible(prime: &FieldParams, n: usize) -> Result<Vec<u32>> {
    let p = prime.p as u64;
    let count = p
        .checked_pow(n as u32)
        .ok_or_else(|| Error::invalid("p^n too large for a modulus search"))?;
    for index in 0..count {
        let mut poly: Vec<FqElem> = (0..n).map(|i| prime.from_u64(index / p.pow(i as u32) % p)).collect();
        poly.push(prime.one());
        if is_irreducible_poly(prime, &poly)? {
            return Ok(poly.iter().map(|c| c.0[0]).collect());
        }
    }
    // Irreducible polynomials exist in every degree.
    unreachable!("no monic irreducible polynomial of degree {n} over F_{p}")
}
