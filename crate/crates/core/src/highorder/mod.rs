//! The two explicit constructions and their combinatorial certificates.
//!
//! * `eta + b` with `eta = theta^l`: its `k` conjugates are the linear
//!   binomials `a^(h i) eta + b`, and products over the exponent set `S`
//!   are pairwise distinct, so the order is at least `d1(k)`.
//! * `theta + b`: its conjugates are `a^j theta^(i k + 1) + b`, and products
//!   over the set `T` are pairwise distinct, so the order is at least `|T|`.

mod walk;

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{
    count_t, d1_bound, maroti_q_lower, maroti_u_lower, nat_ln, popovych_lower, ArgmaxPair, BoundFormula, RealBound,
};
use crate::decomposition::Decomposition;
use crate::field::FqElem;
use crate::kummer::{ExtElement, KummerParams};
use crate::{Error, Nat, Result};

use walk::{walk_s, walk_t};

/// Default cap on the number of vectors produced by any enumeration.
pub const DEFAULT_VECTOR_CAP: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VectorKind {
    /// Length `k`, entries may be negative.
    S,
    /// Length `l`, entries in `[0, p-1]`.
    T,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    pub entries: Vec<i32>,
    pub kind: VectorKind,
}

/// All vectors of `S(k, d_minus, d)`, each exactly once.
pub fn enumerate_s(k: usize, d_minus: usize, d: usize, cap: usize) -> Result<Vec<ExponentVector>> {
    crate::combinatorics::binomial_check_s(k, d_minus, d)?;
    let mut out = Vec::new();
    walk_s(
        k,
        d_minus,
        d,
        cap,
        Vec::with_capacity(k),
        &mut |prefix: &Vec<i32>, _, v| {
            let mut next = prefix.clone();
            next.push(v);
            Ok(next)
        },
        &mut |entries| out.push(ExponentVector { entries, kind: VectorKind::S }),
    )?;
    Ok(out)
}

fn check_t_params(p: u64, k: usize, l: usize) -> Result<()> {
    if p < 5 || !crate::order::is_prime_u64(p) {
        return Err(Error::invalid("p must be a prime >= 5"));
    }
    if k < 2 || l < 1 {
        return Err(Error::invalid("need k >= 2 and l >= 1"));
    }
    Ok(())
}

/// All vectors of `T(p, k, l)`, each exactly once.
pub fn enumerate_t(p: u64, k: usize, l: usize, cap: usize) -> Result<Vec<ExponentVector>> {
    check_t_params(p, k, l)?;
    let mut out = Vec::new();
    walk_t(
        p,
        k,
        l,
        cap,
        Vec::with_capacity(l),
        &mut |prefix: &Vec<i32>, _, v| {
            let mut next = prefix.clone();
            next.push(v);
            Ok(next)
        },
        &mut |entries| out.push(ExponentVector { entries, kind: VectorKind::T }),
    )?;
    Ok(out)
}

/// `prod_i c_i^(u_i)` over the conjugates `c_i = a^(h i) eta + b`; negative
/// exponents go through field inversion.
pub fn product_p_eta(ext: &KummerParams, conjugates: &[ExtElement], alpha: &ExponentVector) -> Result<ExtElement> {
    if alpha.kind != VectorKind::S || alpha.entries.len() != conjugates.len() {
        return Err(Error::invalid("expected an S-vector with one entry per conjugate"));
    }
    let mut acc = ext.one();
    for (c, &u) in conjugates.iter().zip(&alpha.entries) {
        if u == 0 {
            continue;
        }
        let base = if u < 0 { ext.inv(c).map_err(|_| Error::DegenerateBinomial)? } else { c.clone() };
        acc = ext.mul(&acc, &ext.pow(&base, &Nat::from(u.unsigned_abs())));
    }
    Ok(acc)
}

/// The conjugates of `theta + b` indexed by coset slot: entry `i` is
/// `a^j theta^(i k + 1) + b`, the conjugate `(theta + b)^(q^z)` with
/// `q^z = i k + 1 (mod m)`.
pub fn theta_conjugates_by_slot(ext: &KummerParams, decomp: &Decomposition, b: &FqElem) -> Result<Vec<ExtElement>> {
    let mut slots: Vec<Option<ExtElement>> = vec![None; decomp.l()];
    for z in 0..decomp.l() {
        let (i, _) = decomp.exponent_split(z)?;
        slots[i] = Some(ext.conjugate_formula(decomp, b, z)?);
    }
    slots
        .into_iter()
        .map(|s| s.ok_or_else(|| Error::DecompositionFailure("coset slot without a conjugate".into())))
        .collect()
}

/// `prod_i (a^j theta^(i k + 1) + b)^(u_i)` for a T-vector `alpha`.
pub fn product_p_theta(ext: &KummerParams, decomp: &Decomposition, b: &FqElem, alpha: &ExponentVector) -> Result<ExtElement> {
    if alpha.kind != VectorKind::T || alpha.entries.len() != decomp.l() {
        return Err(Error::invalid("expected a T-vector of length l"));
    }
    if alpha.entries.iter().any(|&u| u < 0 || u as u64 >= ext.base().p()) {
        return Err(Error::invalid("T-vector entries must lie in [0, p-1]"));
    }
    let conjugates = theta_conjugates_by_slot(ext, decomp, b)?;
    let mut acc = ext.one();
    for (c, &u) in conjugates.iter().zip(&alpha.entries) {
        if u > 0 {
            acc = ext.mul(&acc, &ext.pow(c, &Nat::from(u as u32)));
        }
    }
    Ok(acc)
}

/// Sort key for an element: its index packed into a `u128` when `q^m` fits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum ElementKey {
    Packed(u128),
    Wide(Vec<u32>),
}

fn key_fn(ext: &KummerParams) -> impl Fn(ExtElement) -> ElementKey {
    let packed = ext.group_order().bits() <= 128;
    let p = ext.base().p() as u128;
    move |x| {
        if packed {
            ElementKey::Packed(x.raw().iter().rev().fold(0u128, |acc, &c| acc * p + c as u128))
        } else {
            ElementKey::Wide(x.0)
        }
    }
}

fn all_distinct(mut keys: Vec<ElementKey>) -> bool {
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

/// Powers `c^v` for `v` in `0..=max`.
fn power_table(ext: &KummerParams, c: &ExtElement, max: usize) -> Vec<ExtElement> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(ext.one());
    for v in 1..=max {
        out.push(ext.mul(&out[v - 1], c));
    }
    out
}

fn check_construction_inputs(ext: &KummerParams, decomp: &Decomposition, b: &FqElem) -> Result<()> {
    if decomp.m() != ext.m() || decomp.q() != ext.base().q() {
        return Err(Error::invalid("decomposition does not belong to this extension"));
    }
    if !decomp.binomial_exists() {
        return Err(Error::invalid("no irreducible binomial of this degree exists"));
    }
    if !ext.base().contains(b) || ext.base().is_zero(b) {
        return Err(Error::invalid("b must be a nonzero element of F_q"));
    }
    Ok(())
}

/// `true` iff the products over `S(k, d_minus, d)` are pairwise distinct.
pub fn verify_injectivity_s(
    ext: &KummerParams,
    decomp: &Decomposition,
    b: &FqElem,
    d_minus: usize,
    d: usize,
    cap: usize,
) -> Result<bool> {
    check_construction_inputs(ext, decomp, b)?;
    let k = decomp.k();
    crate::combinatorics::binomial_check_s(k, d_minus, d)?;
    let conjugates = ext.eta_conjugates(decomp, b)?;
    let positive: Vec<Vec<ExtElement>> = conjugates.iter().map(|c| power_table(ext, c, k - 1 - d)).collect();
    let negative: Vec<Vec<ExtElement>> = if d_minus == 0 {
        Vec::new()
    } else {
        conjugates
            .iter()
            .map(|c| ext.inv(c).map(|ci| power_table(ext, &ci, d)).map_err(|_| Error::DegenerateBinomial))
            .collect::<Result<_>>()?
    };
    let key = key_fn(ext);
    let mut keys = Vec::new();
    walk_s(
        k,
        d_minus,
        d,
        cap,
        ext.one(),
        &mut |acc: &ExtElement, pos, v| {
            Ok(match v {
                0 => acc.clone(),
                v if v > 0 => ext.mul(acc, &positive[pos][v as usize]),
                v => ext.mul(acc, &negative[pos][v.unsigned_abs() as usize]),
            })
        },
        &mut |x| keys.push(key(x)),
    )?;
    Ok(all_distinct(keys))
}

/// `true` iff the products over `T(p, k, l)` are pairwise distinct.
pub fn verify_injectivity_t(ext: &KummerParams, decomp: &Decomposition, b: &FqElem, cap: usize) -> Result<bool> {
    check_construction_inputs(ext, decomp, b)?;
    let (k, l, m) = (decomp.k(), decomp.l(), decomp.m());
    let p = ext.base().p();
    let max_digit = usize::try_from(p - 1).unwrap_or(usize::MAX);
    let conjugates = theta_conjugates_by_slot(ext, decomp, b)?;
    let tables: Vec<Vec<ExtElement>> = conjugates
        .iter()
        .enumerate()
        .map(|(i, c)| power_table(ext, c, max_digit.min((m - 1) / (i * k + 1))))
        .collect();
    let key = key_fn(ext);
    let mut keys = Vec::new();
    walk_t(
        p,
        k,
        l,
        cap,
        ext.one(),
        &mut |acc: &ExtElement, pos, v| Ok(if v == 0 { acc.clone() } else { ext.mul(acc, &tables[pos][v as usize]) }),
        &mut |x| keys.push(key(x)),
    )?;
    Ok(all_distinct(keys))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementKind {
    /// `theta^l + b`
    EtaPlusB,
    /// `theta + b`
    ThetaPlusB,
}

impl ElementKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ElementKind::EtaPlusB => "eta_plus_b",
            ElementKind::ThetaPlusB => "theta_plus_b",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    D1,
    D2,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::D1 => "d1",
            BoundKind::D2 => "d2",
        }
    }
}

/// An explicit element with a certified lower bound on its order.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionResult {
    pub element: ExtElement,
    pub element_kind: ElementKind,
    pub bound: Nat,
    pub bound_kind: BoundKind,
    pub b: FqElem,
    /// The maximising `(d_minus, d)` for `d1`.
    pub argmax: Option<ArgmaxPair>,
    /// Closed-form bounds whose hypotheses hold for this instance.
    pub closed_forms: Vec<RealBound>,
}

/// `theta^l + b` with order at least `d1(k)`.
pub fn construct_theorem1(ext: &KummerParams, decomp: &Decomposition, b: &FqElem) -> Result<ConstructionResult> {
    check_construction_inputs(ext, decomp, b)?;
    let k = decomp.k();
    let (bound, argmax) = d1_bound(k)?;
    let mut element = ext.monomial(&ext.base().one(), decomp.l());
    element = ext.add(&element, &ext.from_base(b));
    let mut closed_forms = Vec::new();
    let kf = k as f64;
    if k >= 70 {
        closed_forms.push(RealBound { value: libm::pow(5.0, kf), formula: BoundFormula::FivePowK });
    }
    closed_forms.extend(popovych_lower(k as u64).ok());
    Ok(ConstructionResult {
        element,
        element_kind: ElementKind::EtaPlusB,
        bound,
        bound_kind: BoundKind::D1,
        b: b.clone(),
        argmax: Some(argmax),
        closed_forms,
    })
}

/// Closed forms attached to `|T|`: `5^sqrt(l/2)` always; the partition bound
/// (i) when `l >= p^2 + 1`; bound (ii) when `3 <= l < p + 1`.
pub fn theorem2_closed_forms(p: u64, l: usize) -> Vec<RealBound> {
    let mut out = vec![RealBound {
        value: libm::pow(5.0, libm::sqrt(l as f64 / 2.0)),
        formula: BoundFormula::FivePowSqrt,
    }];
    let l = l as u64;
    if l > p.saturating_mul(p) {
        out.extend(maroti_q_lower(l - 1, p).ok());
    }
    if l < p + 1 {
        out.extend(maroti_u_lower(l.saturating_sub(1)).ok());
    }
    out
}

/// `theta + b` with order at least `|T|`.
pub fn construct_theorem2(ext: &KummerParams, decomp: &Decomposition, b: &FqElem) -> Result<ConstructionResult> {
    check_construction_inputs(ext, decomp, b)?;
    let p = ext.base().p();
    let bound = count_t(p, decomp.k(), decomp.l())?;
    let element = ext.add(&ext.theta(), &ext.from_base(b));
    Ok(ConstructionResult {
        element,
        element_kind: ElementKind::ThetaPlusB,
        bound,
        bound_kind: BoundKind::D2,
        b: b.clone(),
        argmax: None,
        closed_forms: theorem2_closed_forms(p, decomp.l()),
    })
}

/// Outcome of testing `bound >= 5^cbrt(m/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubeRootCheck {
    pub holds: bool,
    /// Decided with integer arithmetic (`m/2` a perfect cube).
    pub exact: bool,
    /// `ln(bound) - cbrt(m/2) ln 5`; zero when `exact`.
    pub ln_margin: f64,
}

/// Tests `bound >= 5^cbrt(m/2)`: exactly when `m/2` is a perfect cube,
/// otherwise on natural logarithms in double precision (the margin is reported).
pub fn exceeds_five_pow_cbrt_half(bound: &Nat, m: usize) -> CubeRootCheck {
    if m % 2 == 0 {
        let half = m / 2;
        let c = num_integer::Roots::cbrt(&half);
        if c * c * c == half {
            let target = num_traits::pow(Nat::from(5u32), c);
            return CubeRootCheck { holds: *bound >= target, exact: true, ln_margin: 0.0 };
        }
    }
    let margin = nat_ln(bound) - libm::cbrt(m as f64 / 2.0) * libm::log(5.0);
    CubeRootCheck { holds: margin >= 0.0, exact: false, ln_margin: margin }
}

/// Both constructions, the better one selected.
#[derive(Debug, Clone, PartialEq)]
pub struct BestConstruction {
    pub selected: ConstructionResult,
    pub alternative: ConstructionResult,
    /// Present when `k >= 70`.
    pub cube_root_check: Option<CubeRootCheck>,
}

/// Runs both constructions and keeps the larger exact bound; ties keep
/// `theta^l + b`, which lives in the degree-`k` subfield.
pub fn construct_best(ext: &KummerParams, decomp: &Decomposition, b: &FqElem) -> Result<BestConstruction> {
    let first = construct_theorem1(ext, decomp, b)?;
    let second = construct_theorem2(ext, decomp, b)?;
    let (selected, alternative) = if first.bound >= second.bound { (first, second) } else { (second, first) };
    let cube_root_check = (decomp.k() >= 70).then(|| exceeds_five_pow_cbrt_half(&selected.bound, ext.m()));
    Ok(BestConstruction { selected, alternative, cube_root_check })
}

/// `sum_i u_i q^(z_i) mod (q^m - 1)`, where slot `i` of a T-vector belongs to
/// the conjugate `(theta + b)^(q^(z_i))`.
pub fn theta_product_exponent(ext: &KummerParams, decomp: &Decomposition, alpha: &ExponentVector) -> Result<Nat> {
    let mut exps = vec![Nat::zero(); decomp.l()];
    for z in 0..decomp.l() {
        let (i, _) = decomp.exponent_split(z)?;
        exps[i] = num_traits::pow(ext.base().q().clone(), z);
    }
    let mut total = Nat::zero();
    for (e, &u) in exps.iter().zip(&alpha.entries) {
        total += e * u.to_u32().ok_or_else(|| Error::invalid("negative T entry"))?;
    }
    Ok(total % ext.group_order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::s_cardinality;
    use crate::decomposition::decompose;
    use crate::field::FieldParams;

    fn setup(p: u64, n: usize, m: usize) -> (KummerParams, Decomposition) {
        let base = FieldParams::new(p, n, None).unwrap();
        let d = decompose(&base, m).unwrap();
        (KummerParams::search(base, m).unwrap(), d)
    }

    #[test]
    fn s_enumeration_small() {
        let s = enumerate_s(2, 0, 0, 100).unwrap();
        let mut got: Vec<Vec<i32>> = s.into_iter().map(|v| v.entries).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        for k in 2..7 {
            let s = enumerate_s(k, 0, k - 1, 100).unwrap();
            assert_eq!(s.len(), 1);
            assert!(s[0].entries.iter().all(|&u| u == 0));
        }
        assert!(enumerate_s(3, 2, 1, 10).is_err());
        assert_eq!(enumerate_s(6, 0, 0, 10), Err(Error::EnumerationTooLarge { cap: 10 }));
    }

    #[test]
    fn s_enumeration_matches_formula() {
        for k in 2..=6 {
            for dm in 0..k {
                for d in dm..k {
                    let s = enumerate_s(k, dm, d, 1_000_000).unwrap();
                    assert_eq!(Nat::from(s.len()), s_cardinality(k, dm, d).unwrap());
                }
            }
        }
    }

    #[test]
    fn t_enumeration_small() {
        let t = enumerate_t(5, 2, 1, 100).unwrap();
        assert_eq!(t.iter().map(|v| v.entries.clone()).collect::<Vec<_>>(), vec![vec![0], vec![1]]);
        let t = enumerate_t(7, 3, 3, 100_000).unwrap();
        assert_eq!(Nat::from(t.len()), count_t(7, 3, 3).unwrap());
        assert!(t.iter().any(|v| v.entries.iter().all(|&u| u == 0)));
        assert!(enumerate_t(4, 2, 2, 100).is_err());
    }

    #[test]
    fn products_basic() {
        let (ext, d) = setup(5, 1, 8);
        let b = ext.base().one();
        let conj = ext.eta_conjugates(&d, &b).unwrap();
        let zero = ExponentVector { entries: vec![0; 4], kind: VectorKind::S };
        assert!(ext.is_one(&product_p_eta(&ext, &conj, &zero).unwrap()));
        let e0 = ExponentVector { entries: vec![1, 0, 0, 0], kind: VectorKind::S };
        assert_eq!(product_p_eta(&ext, &conj, &e0).unwrap(), conj[0]);
        let alpha = ExponentVector { entries: vec![2, -1, 0, 1], kind: VectorKind::S };
        let neg = ExponentVector { entries: vec![-2, 1, 0, -1], kind: VectorKind::S };
        let prod = ext.mul(&product_p_eta(&ext, &conj, &alpha).unwrap(), &product_p_eta(&ext, &conj, &neg).unwrap());
        assert!(ext.is_one(&prod));

        let t0 = ExponentVector { entries: vec![1, 0], kind: VectorKind::T };
        assert_eq!(product_p_theta(&ext, &d, &b, &t0).unwrap(), ext.add(&ext.theta(), &ext.one()));
        let bad = ExponentVector { entries: vec![5, 0], kind: VectorKind::T };
        assert!(product_p_theta(&ext, &d, &b, &bad).is_err());
    }

    #[test]
    fn injectivity_small() {
        let (ext, d) = setup(5, 1, 8);
        let b = ext.base().one();
        let (_, arg) = d1_bound(4).unwrap();
        assert!(verify_injectivity_s(&ext, &d, &b, arg.d_minus, arg.d, DEFAULT_VECTOR_CAP).unwrap());
        assert!(verify_injectivity_s(&ext, &d, &b, 0, 3, DEFAULT_VECTOR_CAP).unwrap());
        assert!(verify_injectivity_t(&ext, &d, &b, DEFAULT_VECTOR_CAP).unwrap());
        assert_eq!(verify_injectivity_t(&ext, &d, &b, 3), Err(Error::EnumerationTooLarge { cap: 3 }));
    }

    #[test]
    fn constructions() {
        let (ext, d) = setup(5, 1, 8);
        let b = ext.base().one();
        let t1 = construct_theorem1(&ext, &d, &b).unwrap();
        assert_eq!(t1.bound, d1_bound(4).unwrap().0);
        assert_eq!(t1.element, ext.add(&ext.monomial(&b, 2), &ext.one()));
        let t2 = construct_theorem2(&ext, &d, &b).unwrap();
        assert_eq!(t2.bound, count_t(5, 4, 2).unwrap());
        let best = construct_best(&ext, &d, &b).unwrap();
        assert_eq!(best.selected.bound, t1.bound.clone().max(t2.bound.clone()));
        assert!(best.cube_root_check.is_none());
        assert!(construct_theorem1(&ext, &d, &ext.base().zero()).is_err());

        let (ext, d) = setup(5, 1, 2);
        let t2 = construct_theorem2(&ext, &d, &ext.base().one()).unwrap();
        assert_eq!(t2.bound, Nat::from(2u32));
        let t1 = construct_theorem1(&ext, &d, &ext.base().one()).unwrap();
        assert_eq!(t1.element, ext.add(&ext.theta(), &ext.one()));
    }

    #[test]
    fn closed_form_selection() {
        let forms = |p, l| theorem2_closed_forms(p, l).iter().map(|f| f.formula).collect::<Vec<_>>();
        assert_eq!(forms(7, 1), vec![BoundFormula::FivePowSqrt]);
        assert_eq!(forms(7, 2), vec![BoundFormula::FivePowSqrt]);
        assert_eq!(forms(7, 3), vec![BoundFormula::FivePowSqrt, BoundFormula::MarotiU]);
        assert_eq!(forms(7, 8), vec![BoundFormula::FivePowSqrt]);
        assert_eq!(forms(5, 26), vec![BoundFormula::FivePowSqrt, BoundFormula::MarotiQ]);
    }

    #[test]
    fn cube_root_check() {
        // m = 2 * 27: 5^3 = 125
        assert_eq!(exceeds_five_pow_cbrt_half(&Nat::from(125u32), 54).holds, true);
        assert_eq!(exceeds_five_pow_cbrt_half(&Nat::from(124u32), 54).holds, false);
        assert!(exceeds_five_pow_cbrt_half(&Nat::from(124u32), 54).exact);
        let c = exceeds_five_pow_cbrt_half(&Nat::from(1000u32), 70);
        assert!(!c.exact && c.holds);
    }
}
