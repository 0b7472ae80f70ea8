//! The Kummer extension `F_q(theta) = F_q[x]/<x^m - a>`.
//!
//! An [`ExtElement`] is the canonical remainder of degree `< m`, stored as a
//! flat vector of `m * n` residues: coefficient `t` of `theta` occupies the
//! slots `t*n .. (t+1)*n`. Two elements are equal exactly when these vectors
//! are equal, since distinct polynomials of degree `< m` lie in distinct cosets.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::decomposition::Decomposition;
use crate::field::{is_irreducible_poly, FieldParams, FqElem};
use crate::{Error, Nat, Result};

/// Element of `F_q(theta)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElement(pub(crate) Vec<u32>);

impl ExtElement {
    /// The flat residue vector (`m` blocks of `n`).
    pub fn raw(&self) -> &[u32] {
        &self.0
    }
}

/// Whether an irreducible binomial `x^m - a` exists over `F_q`: every prime
/// factor of `m` divides `q - 1`, and `q = 1 (mod 4)` when `4 | m`.
pub fn binomial_exists(base: &FieldParams, m: usize) -> bool {
    if m < 2 {
        return false;
    }
    let q_minus_one = base.q() - 1u32;
    let mut rest = m;
    let mut r = 2;
    while rest > 1 {
        if r * r > rest {
            r = rest;
        }
        if rest % r == 0 {
            if !(&q_minus_one % r).is_zero() {
                return false;
            }
            while rest % r == 0 {
                rest /= r;
            }
        }
        r += 1;
    }
    m % 4 != 0 || (base.q() % 4u32).to_u32() == Some(1)
}

fn binomial_poly(base: &FieldParams, m: usize, a: &FqElem) -> Vec<FqElem> {
    let mut f = vec![base.zero(); m + 1];
    f[0] = base.neg(a);
    f[m] = base.one();
    f
}

/// First `a != 0` (by index `sum c_i p^i`) with `x^m - a` irreducible, or `None`
/// when no irreducible binomial of degree `m` exists.
pub fn find_m_related(base: &FieldParams, m: usize) -> Option<FqElem> {
    if !binomial_exists(base, m) {
        return None;
    }
    let q = base.q_u64()?;
    (1..q).map(|i| base.from_index(i)).find(|a| {
        is_irreducible_poly(base, &binomial_poly(base, m, a)).unwrap_or(false)
    })
}

/// Parameters of `F_q(theta)`, with `theta^m = a` and `x^m - a` irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerParams {
    base: FieldParams,
    m: usize,
    a: FqElem,
    /// `q^m - 1`
    group_order: Nat,
    /// `(p-1)^2 * m * n` fits in a `u64`, so products can be accumulated unreduced.
    lazy_accumulate: bool,
}

impl KummerParams {
    /// Checks that `x^m - a` is irreducible over the base field.
    pub fn new(base: FieldParams, m: usize, a: FqElem) -> Result<Self> {
        if m < 2 {
            return Err(Error::invalid("m must be at least 2"));
        }
        if !base.contains(&a) || base.is_zero(&a) {
            return Err(Error::invalid("a must be a nonzero element of F_q"));
        }
        if !is_irreducible_poly(&base, &binomial_poly(&base, m, &a))? {
            return Err(Error::invalid("x^m - a is reducible over F_q"));
        }
        Ok(Self::new_unchecked(base, m, a))
    }

    fn new_unchecked(base: FieldParams, m: usize, a: FqElem) -> Self {
        let group_order = num_traits::pow(base.q().clone(), m) - 1u32;
        let pm1 = (base.p() - 1) as u128;
        let lazy_accumulate = pm1 * pm1 * (m * base.n()) as u128 <= u64::MAX as u128;
        KummerParams { base, m, a, group_order, lazy_accumulate }
    }

    /// The extension for the first `m`-related `a`, if any.
    pub fn search(base: FieldParams, m: usize) -> Option<Self> {
        let a = find_m_related(&base, m)?;
        Some(Self::new_unchecked(base, m, a))
    }

    pub fn base(&self) -> &FieldParams {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn a(&self) -> &FqElem {
        &self.a
    }

    /// `q^m - 1`, the order of `F_q(theta)*`.
    pub fn group_order(&self) -> &Nat {
        &self.group_order
    }

    fn n(&self) -> usize {
        self.base.n()
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement(vec![0; self.m * self.n()])
    }

    pub fn one(&self) -> ExtElement {
        self.from_base(&self.base.one())
    }

    pub fn from_base(&self, c: &FqElem) -> ExtElement {
        let mut out = self.zero();
        out.0[..self.n()].copy_from_slice(c.coeffs());
        out
    }

    /// `c * theta^e` for any `e >= 0`, reduced with `theta^m = a`.
    pub fn monomial(&self, c: &FqElem, e: usize) -> ExtElement {
        let (s, t) = e.div_rem(&self.m);
        let coeff = self.base.mul(c, &self.base.pow(&self.a, &Nat::from(s)));
        let mut out = self.zero();
        let n = self.n();
        out.0[t * n..(t + 1) * n].copy_from_slice(coeff.coeffs());
        out
    }

    pub fn theta(&self) -> ExtElement {
        self.monomial(&self.base.one(), 1)
    }

    /// Element from at most `m` coefficients (constant term first).
    pub fn from_coeffs(&self, coeffs: &[FqElem]) -> Result<ExtElement> {
        if coeffs.len() > self.m || !coeffs.iter().all(|c| self.base.contains(c)) {
            return Err(Error::invalid("coefficients do not describe an element of F_q(theta)"));
        }
        let mut out = self.zero();
        for (slot, c) in out.0.chunks_mut(self.n()).zip(coeffs) {
            slot.copy_from_slice(c.coeffs());
        }
        Ok(out)
    }

    pub fn coeff(&self, x: &ExtElement, t: usize) -> FqElem {
        let n = self.n();
        FqElem(x.0[t * n..(t + 1) * n].to_vec())
    }

    pub fn coeffs(&self, x: &ExtElement) -> Vec<FqElem> {
        x.0.chunks(self.n()).map(|c| FqElem(c.to_vec())).collect()
    }

    pub fn contains(&self, x: &ExtElement) -> bool {
        x.0.len() == self.m * self.n() && x.0.iter().all(|&c| (c as u64) < self.base.p())
    }

    pub fn is_zero(&self, x: &ExtElement) -> bool {
        x.0.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, x: &ExtElement) -> bool {
        x.0[0] == 1 && x.0[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &ExtElement, y: &ExtElement) -> ExtElement {
        let mut out = x.clone();
        self.base.add_assign_slice(&mut out.0, &y.0);
        out
    }

    pub fn sub(&self, x: &ExtElement, y: &ExtElement) -> ExtElement {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &ExtElement) -> ExtElement {
        let p = self.base.p() as u32;
        ExtElement(x.0.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect())
    }

    /// `c * x` for `c` in the base field.
    pub fn scale(&self, c: &FqElem, x: &ExtElement) -> ExtElement {
        let n = self.n();
        let mut out = self.zero();
        for (dst, src) in out.0.chunks_mut(n).zip(x.0.chunks(n)) {
            self.base.mul_slices(c.coeffs(), src, dst);
        }
        out
    }

    /// Product, folding `theta^(m+t)` into `a * theta^t`.
    pub fn mul(&self, x: &ExtElement, y: &ExtElement) -> ExtElement {
        debug_assert!(x.0.len() == self.m * self.n() && y.0.len() == x.0.len());
        if self.n() == 1 {
            return self.mul_over_prime(x, y);
        }
        let (m, n, p) = (self.m, self.n(), self.base.p());
        let width = 2 * n - 1;
        let mut acc = vec![0u64; (2 * m - 1) * width];
        for (i, xi) in x.0.chunks(n).enumerate() {
            if xi.iter().all(|&c| c == 0) {
                continue;
            }
            for (j, yj) in y.0.chunks(n).enumerate() {
                let block = &mut acc[(i + j) * width..(i + j + 1) * width];
                for (s, &a) in xi.iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (r, &b) in yj.iter().enumerate() {
                        let term = a as u64 * b as u64;
                        block[s + r] = if self.lazy_accumulate { block[s + r] + term } else { (block[s + r] + term) % p };
                    }
                }
            }
        }
        for v in acc.iter_mut() {
            *v %= p;
        }
        let mut out = vec![0u32; m * n];
        let mut blocks = acc.chunks_mut(width);
        for dst in out.chunks_mut(n) {
            self.base.reduce_wide(blocks.next().expect("2m - 1 blocks"), dst);
        }
        let mut high = vec![0u32; 2 * n];
        let (high, folded) = high.split_at_mut(n);
        for (t, src) in blocks.enumerate() {
            if src.iter().all(|&v| v == 0) {
                continue;
            }
            self.base.reduce_wide(src, high);
            self.base.mul_slices(self.a.coeffs(), high, folded);
            self.base.add_assign_slice(&mut out[t * n..(t + 1) * n], folded);
        }
        ExtElement(out)
    }

    fn mul_over_prime(&self, x: &ExtElement, y: &ExtElement) -> ExtElement {
        let (m, p) = (self.m, self.base.p());
        let mut acc = vec![0u64; 2 * m - 1];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (slot, &b) in acc[i..i + m].iter_mut().zip(&y.0) {
                let term = a as u64 * b as u64;
                *slot = if self.lazy_accumulate { *slot + term } else { (*slot + term) % p };
            }
        }
        let a = self.a.coeffs()[0] as u64;
        let (low, high) = acc.split_at(m);
        let mut out: Vec<u32> = low.iter().map(|&v| (v % p) as u32).collect();
        for (dst, &h) in out.iter_mut().zip(high) {
            *dst = ((*dst as u64 + a * (h % p)) % p) as u32;
        }
        ExtElement(out)
    }

    /// [`KummerParams::mul`] with shape validation of both operands.
    pub fn checked_mul(&self, x: &ExtElement, y: &ExtElement) -> Result<ExtElement> {
        if !self.contains(x) || !self.contains(y) {
            return Err(Error::invalid("operand does not belong to this extension"));
        }
        Ok(self.mul(x, y))
    }

    /// `x^e` by square-and-multiply (`0^0 = 1`).
    pub fn pow(&self, x: &ExtElement, e: &Nat) -> ExtElement {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, x);
            }
        }
        acc
    }

    pub fn inv(&self, x: &ExtElement) -> Result<ExtElement> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, &(&self.group_order - 1u32)))
    }

    /// The Frobenius map `x -> x^q`.
    pub fn frobenius(&self, x: &ExtElement) -> ExtElement {
        self.pow(x, self.base.q())
    }

    fn check_decomposition(&self, decomp: &Decomposition) -> Result<()> {
        if decomp.m() != self.m || decomp.q() != self.base.q() {
            return Err(Error::invalid("decomposition does not belong to this extension"));
        }
        Ok(())
    }

    /// `(theta + b)^(q^z)` computed as `a^j theta^(i*k+1) + b`, where
    /// `q^z = (i*k + 1) + j*m`. No large exponentiation in the extension.
    pub fn conjugate_formula(&self, decomp: &Decomposition, b: &FqElem, z: usize) -> Result<ExtElement> {
        self.check_decomposition(decomp)?;
        let (i, j) = decomp.exponent_split(z)?;
        let coeff = self.base.pow(&self.a, &j);
        let mut out = self.monomial(&coeff, i * decomp.k() + 1);
        let n = self.n();
        self.base.add_assign_slice(&mut out.0[..n], b.coeffs());
        Ok(out)
    }

    /// The conjugates `a^(h*i) eta + b`, `i = 0..k`, of `eta + b` with `eta = theta^l`.
    pub fn eta_conjugates(&self, decomp: &Decomposition, b: &FqElem) -> Result<Vec<ExtElement>> {
        self.check_decomposition(decomp)?;
        if !self.base.contains(b) || self.base.is_zero(b) {
            return Err(Error::invalid("b must be a nonzero element of F_q"));
        }
        let step = self.base.pow(&self.a, decomp.h());
        let mut coeff = self.base.one();
        let n = self.n();
        let mut out = Vec::with_capacity(decomp.k());
        for _ in 0..decomp.k() {
            let mut c = self.monomial(&coeff, decomp.l());
            self.base.add_assign_slice(&mut c.0[..n], b.coeffs());
            out.push(c);
            coeff = self.base.mul(&coeff, &step);
        }
        Ok(out)
    }

    /// Index of `x` as the integer with base-`q` digits given by its coefficients;
    /// a bijection onto `[0, q^m)`.
    pub fn index(&self, x: &ExtElement) -> Nat {
        x.0.iter().rev().fold(Nat::zero(), |acc, &c| acc * self.base.p() + c)
    }

    /// Inverse of [`KummerParams::index`] for indices below `q^m`.
    pub fn from_index(&self, index: &Nat) -> ExtElement {
        let p = Nat::from(self.base.p());
        let mut rest = index.clone();
        let mut out = self.zero();
        for slot in out.0.iter_mut() {
            let (quot, rem) = rest.div_rem(&p);
            *slot = rem.to_u32().expect("digit below p");
            rest = quot;
        }
        out
    }
}
