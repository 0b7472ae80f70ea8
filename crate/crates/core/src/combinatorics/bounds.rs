use core::fmt;

use num_traits::{FromPrimitive, ToPrimitive, Zero};

use crate::{Error, Nat, Result};

/// The exponent constant used in the Maróti-type bounds: `pi * sqrt(2/3)`
/// rounded down to 2.5.
pub const MAROTI_CONSTANT: f64 = 2.5;

const POPOVYCH_BASE: f64 = 5.7556;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundFormula {
    /// `(d0(d0-1)/(160 n0))^sqrt(d0) * exp(2.5 sqrt((1-1/d0) n0))`
    MarotiQ,
    /// `exp(2.5 sqrt(n0)) / (13 n0)`
    MarotiU,
    /// `5^sqrt(l/2)`
    FivePowSqrt,
    /// `5^cbrt(m/2)`
    FivePowCbrt,
    /// `2^cbrt(2m)`
    TwoPowCbrt,
    /// `5^k`
    FivePowK,
    /// `5.7556^k / (30 k^(3/2))`
    Popovych2015,
}

impl BoundFormula {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundFormula::MarotiQ => "maroti_q",
            BoundFormula::MarotiU => "maroti_u",
            BoundFormula::FivePowSqrt => "five_pow_sqrt",
            BoundFormula::FivePowCbrt => "five_pow_cbrt",
            BoundFormula::TwoPowCbrt => "two_pow_cbrt",
            BoundFormula::FivePowK => "five_pow_k",
            BoundFormula::Popovych2015 => "popovych2015",
        }
    }
}

impl fmt::Display for BoundFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A closed-form bound evaluated in double precision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealBound {
    pub value: f64,
    pub formula: BoundFormula,
}

/// A closed-form bound kept as its natural logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBound {
    pub ln_value: f64,
    pub formula: BoundFormula,
}

/// Lower bound on the number of partitions of `n0` with no part
/// divisible by `d0`. Only claimed for `d0 > 1` and `n0 >= d0^2`.
pub fn maroti_q_lower(n0: u64, d0: u64) -> Result<RealBound> {
    if d0 <= 1 {
        return Err(Error::invalid("maroti_q_lower needs d0 > 1"));
    }
    if n0 < d0.saturating_mul(d0) {
        return Err(Error::invalid("maroti_q_lower needs n0 >= d0^2"));
    }
    let (n, d) = (n0 as f64, d0 as f64);
    let base = d * (d - 1.0) / (160.0 * n);
    let value = libm::pow(base, libm::sqrt(d)) * libm::exp(MAROTI_CONSTANT * libm::sqrt((1.0 - 1.0 / d) * n));
    Ok(RealBound { value, formula: BoundFormula::MarotiQ })
}

/// Lower bound `exp(2.5 sqrt(n0)) / (13 n0)` on the partition count, for `n0 > 1`.
pub fn maroti_u_lower(n0: u64) -> Result<RealBound> {
    if n0 <= 1 {
        return Err(Error::invalid("maroti_u_lower needs n0 > 1"));
    }
    let n = n0 as f64;
    Ok(RealBound {
        value: libm::exp(MAROTI_CONSTANT * libm::sqrt(n)) / (13.0 * n),
        formula: BoundFormula::MarotiU,
    })
}

/// `ln f(tau)` for `f(tau) = tau^sqrt(2l/(tau-1))`.
pub fn tau_log_objective(tau: f64, l: f64) -> f64 {
    libm::sqrt(2.0 * l / (tau - 1.0)) * libm::log(tau)
}

/// The integer `tau` in `[2, p-1]` maximising `tau^sqrt(2l/(tau-1))`, with the
/// maximum value. Ties go to the smaller `tau`.
pub fn tau_best(p: u64, l: u64) -> Result<(u64, f64)> {
    if p < 5 {
        return Err(Error::invalid("tau_best needs p >= 5"));
    }
    if l < 2 {
        return Err(Error::invalid("tau_best needs l >= 2"));
    }
    // ln(tau)/sqrt(tau-1) decreases for every tau past its real maximiser
    // (about 4.92), so scanning a short prefix covers all of [2, p-1].
    let hi = (p - 1).min(64);
    let mut best = (2u64, tau_log_objective(2.0, l as f64));
    for tau in 3..=hi {
        let v = tau_log_objective(tau as f64, l as f64);
        if v > best.1 {
            best = (tau, v);
        }
    }
    Ok((best.0, libm::exp(best.1)))
}

/// Truncating conversion: the largest `f64` not exceeding `n` (saturating at `f64::MAX`).
pub fn nat_to_f64_floor(n: &Nat) -> f64 {
    let bits = n.bits();
    if bits <= 53 {
        return n.to_u64().map_or(0.0, |v| v as f64);
    }
    if bits > 1024 {
        return f64::MAX;
    }
    let shift = bits - 53;
    let mantissa = (n >> shift).to_u64().unwrap_or(0);
    libm::ldexp(mantissa as f64, shift as i32)
}

/// Natural logarithm of `n` (negative infinity for zero).
pub fn nat_ln(n: &Nat) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 64 {
        return libm::log(n.to_u64().unwrap_or(0) as f64);
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().unwrap_or(0) as f64;
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// `ceil(5^sqrt(l/2))`, exact when `l/2` is a perfect square.
pub fn five_pow_sqrt_half_ceil(l: u64) -> Nat {
    if l % 2 == 0 {
        let half = l / 2;
        let s = num_integer::Roots::sqrt(&half);
        if s * s == half {
            return num_traits::pow(Nat::from(5u32), s as usize);
        }
    }
    let v = libm::pow(5.0, libm::sqrt(l as f64 / 2.0));
    Nat::from_f64(libm::ceil(v)).unwrap_or_default()
}

/// `5.7556^k / (30 k^(3/2))`, the earlier lower bound on `d1`, stated for `k >= 8`.
pub fn popovych_lower(k: u64) -> Result<RealBound> {
    if k < 8 {
        return Err(Error::invalid("the bound is stated for k >= 8 only"));
    }
    let kf = k as f64;
    Ok(RealBound {
        value: libm::pow(POPOVYCH_BASE, kf) / (30.0 * libm::pow(kf, 1.5)),
        formula: BoundFormula::Popovych2015,
    })
}

pub fn five_pow_cbrt_half(m: u64) -> RealBound {
    RealBound {
        value: libm::pow(5.0, libm::cbrt(m as f64 / 2.0)),
        formula: BoundFormula::FivePowCbrt,
    }
}

pub fn two_pow_cbrt_double(m: u64) -> RealBound {
    RealBound {
        value: libm::pow(2.0, libm::cbrt(2.0 * m as f64)),
        formula: BoundFormula::TwoPowCbrt,
    }
}

/// Log-scale comparison of the closed-form bounds for one `m = k * l`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundComparison {
    pub m: u64,
    pub k: u64,
    pub l: u64,
    pub five_pow_cbrt: LogBound,
    pub two_pow_cbrt: LogBound,
    pub five_pow_sqrt: LogBound,
    pub five_pow_k: LogBound,
    /// Present only for `k >= 8`.
    pub popovych2015: Option<LogBound>,
    /// The largest of the bounds above.
    pub dominant: BoundFormula,
    /// `5^cbrt(m/2) > 2^cbrt(2m)`.
    pub new_exceeds_old: bool,
}

impl BoundComparison {
    pub fn all(&self) -> impl Iterator<Item = LogBound> + '_ {
        [self.five_pow_cbrt, self.two_pow_cbrt, self.five_pow_sqrt, self.five_pow_k]
            .into_iter()
            .chain(self.popovych2015)
    }
}

pub fn compare_bounds(m: u64, k: u64, l: u64) -> Result<BoundComparison> {
    if m == 0 || k == 0 || l == 0 {
        return Err(Error::invalid("m, k and l must be positive"));
    }
    if k.checked_mul(l) != Some(m) {
        return Err(Error::invalid("m must equal k * l"));
    }
    let ln5 = libm::log(5.0);
    let (mf, kf, lf) = (m as f64, k as f64, l as f64);
    let five_pow_cbrt = LogBound { ln_value: libm::cbrt(mf / 2.0) * ln5, formula: BoundFormula::FivePowCbrt };
    let two_pow_cbrt = LogBound {
        ln_value: libm::cbrt(2.0 * mf) * core::f64::consts::LN_2,
        formula: BoundFormula::TwoPowCbrt,
    };
    let five_pow_sqrt = LogBound { ln_value: libm::sqrt(lf / 2.0) * ln5, formula: BoundFormula::FivePowSqrt };
    let five_pow_k = LogBound { ln_value: kf * ln5, formula: BoundFormula::FivePowK };
    let popovych2015 = (k >= 8).then(|| LogBound {
        ln_value: kf * libm::log(POPOVYCH_BASE) - libm::log(30.0) - 1.5 * libm::log(kf),
        formula: BoundFormula::Popovych2015,
    });
    let mut cmp = BoundComparison {
        m,
        k,
        l,
        five_pow_cbrt,
        two_pow_cbrt,
        five_pow_sqrt,
        five_pow_k,
        popovych2015,
        dominant: BoundFormula::FivePowCbrt,
        new_exceeds_old: five_pow_cbrt.ln_value > two_pow_cbrt.ln_value,
    };
    let mut best = f64::NEG_INFINITY;
    let mut dominant = cmp.dominant;
    for b in cmp.all() {
        if b.ln_value > best {
            best = b.ln_value;
            dominant = b.formula;
        }
    }
    cmp.dominant = dominant;
    Ok(cmp)
}
