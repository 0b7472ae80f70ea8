//! Instance setup and the brute-force checks run by `construct --verify`,
//! the sweep and the acceptance suite.

use std::fmt;
use std::time::Duration;

use high_order_core::decomposition::decompose;
use high_order_core::highorder::{
    construct_best, verify_injectivity_s, verify_injectivity_t, BestConstruction, DEFAULT_VECTOR_CAP,
};
use high_order_core::kummer::binomial_exists;
use high_order_core::order::{exact_order, factor_group_order};
use high_order_core::{
    ConstructionResult, Decomposition, ElementKind, Error, ExtElement, Factorization, FieldParams, FqElem,
    KummerParams, Nat,
};
use serde::Serialize;

use crate::budget::{Deadline, DEFAULT_TIME_BUDGET};

/// What the user asked for; field elements are base-`p` coefficient lists,
/// constant term first.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InstanceSpec {
    pub p: u64,
    pub n: usize,
    pub m: usize,
    pub modulus: Option<Vec<u64>>,
    pub a: Option<Vec<u64>>,
    pub b: Option<Vec<u64>>,
}

impl InstanceSpec {
    pub fn new(p: u64, n: usize, m: usize) -> Self {
        InstanceSpec { p, n, m, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetupError {
    /// Malformed or unsupported input.
    Invalid(String),
    /// The input is fine but no construction applies.
    NoConstruction(String),
}

impl fmt::Display for SetupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetupError::Invalid(msg) => write!(f, "invalid input: {msg}"),
            SetupError::NoConstruction(msg) => write!(f, "no construction: {msg}"),
        }
    }
}

impl std::error::Error for SetupError {}

fn invalid(e: impl fmt::Display) -> SetupError {
    SetupError::Invalid(e.to_string())
}

/// A Kummer extension with its decomposition and the constant `b`.
#[derive(Debug, Clone)]
pub struct Instance {
    pub ext: KummerParams,
    pub decomp: Decomposition,
    pub b: FqElem,
}

impl Instance {
    pub fn new(spec: &InstanceSpec) -> Result<Self, SetupError> {
        if spec.m < 2 {
            return Err(invalid("m must be at least 2"));
        }
        let base = FieldParams::new(spec.p, spec.n, spec.modulus.as_deref()).map_err(invalid)?;
        if !binomial_exists(&base, spec.m) {
            return Err(SetupError::NoConstruction(format!(
                "no irreducible binomial of degree {} exists over F_{}",
                spec.m,
                base.q()
            )));
        }
        let b = match &spec.b {
            Some(coeffs) => base.element(coeffs).map_err(invalid)?,
            None => base.one(),
        };
        if base.is_zero(&b) {
            return Err(invalid("b must be nonzero"));
        }
        let ext = match &spec.a {
            Some(coeffs) => {
                let a = base.element(coeffs).map_err(invalid)?;
                KummerParams::new(base, spec.m, a).map_err(invalid)?
            }
            None => KummerParams::search(base, spec.m)
                .ok_or_else(|| SetupError::NoConstruction("no m-related element found".into()))?,
        };
        let decomp = decompose(ext.base(), spec.m).map_err(|e| SetupError::NoConstruction(e.to_string()))?;
        Ok(Instance { ext, decomp, b })
    }

    pub fn constructions(&self) -> Result<BestConstruction, Error> {
        construct_best(&self.ext, &self.decomp, &self.b)
    }
}

/// The construction of the given kind out of a [`BestConstruction`].
pub fn pick(best: &BestConstruction, kind: ElementKind) -> &ConstructionResult {
    if best.selected.element_kind == kind {
        &best.selected
    } else {
        &best.alternative
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, status: Status, detail: impl Into<String>) -> Self {
        Check { name, status, detail: detail.into() }
    }

    fn from_bool(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        Check::new(name, if ok { Status::Pass } else { Status::Fail }, detail)
    }
}

pub const ORDER_TIMEOUT: &str = "unverified(timeout)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderStatus {
    Exact(Nat),
    Timeout,
}

impl fmt::Display for OrderStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderStatus::Exact(n) => write!(f, "{n}"),
            OrderStatus::Timeout => f.write_str(ORDER_TIMEOUT),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Budget for factoring `q^m - 1`.
    pub time_budget: Duration,
    /// Injectivity checks are skipped when the witness set is larger.
    pub vector_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { time_budget: DEFAULT_TIME_BUDGET, vector_cap: DEFAULT_VECTOR_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub eta_order: OrderStatus,
    pub theta_order: OrderStatus,
    pub checks: Vec<Check>,
}

impl Verification {
    /// `Fail` if any check failed, else `Skipped` if any was skipped, else `Pass`.
    pub fn status(&self) -> Status {
        let has = |s| self.checks.iter().any(|c| c.status == s);
        if has(Status::Fail) {
            Status::Fail
        } else if has(Status::Skipped) {
            Status::Skipped
        } else {
            Status::Pass
        }
    }

    pub fn order_of(&self, kind: ElementKind) -> &OrderStatus {
        match kind {
            ElementKind::EtaPlusB => &self.eta_order,
            ElementKind::ThetaPlusB => &self.theta_order,
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `conjugate_formula(z) = (theta + b)^(q^z)` for every `z < l`.
pub fn check_theta_conjugates(inst: &Instance) -> Result<bool, Error> {
    let ext = &inst.ext;
    let x = ext.add(&ext.theta(), &ext.from_base(&inst.b));
    let q = ext.base().q();
    for z in 0..inst.decomp.l() {
        let formula = ext.conjugate_formula(&inst.decomp, &inst.b, z)?;
        if formula != ext.pow(&x, &num_traits::pow(q.clone(), z)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `eta_conjugates[i] = (eta + b)^(q^i)` for every `i < k`.
pub fn check_eta_conjugates(inst: &Instance) -> Result<bool, Error> {
    let ext = &inst.ext;
    let eta = ext.monomial(&ext.base().one(), inst.decomp.l());
    let x = ext.add(&eta, &ext.from_base(&inst.b));
    let conjugates = ext.eta_conjugates(&inst.decomp, &inst.b)?;
    let q = ext.base().q();
    let mut power: ExtElement = x;
    for c in &conjugates {
        if *c != power {
            return Ok(false);
        }
        power = ext.pow(&power, q);
    }
    Ok(true)
}

fn conjugate_check(name: &'static str, result: Result<bool, Error>) -> Check {
    match result {
        Ok(ok) => Check::from_bool(name, ok, if ok { "formula matches q-th powers" } else { "formula differs" }),
        Err(e) => Check::new(name, Status::Fail, e.to_string()),
    }
}

fn injectivity_check(name: &'static str, size: &Nat, cap: usize, run: impl FnOnce() -> Result<bool, Error>) -> Check {
    if *size > Nat::from(cap) {
        return Check::new(name, Status::Skipped, format!("{size} vectors exceed the cap of {cap}"));
    }
    match run() {
        Ok(true) => Check::new(name, Status::Pass, format!("{size} distinct products")),
        Ok(false) => Check::new(name, Status::Fail, "two witness vectors give the same product"),
        Err(Error::EnumerationTooLarge { cap }) => {
            Check::new(name, Status::Skipped, format!("enumeration exceeds the cap of {cap}"))
        }
        Err(e) => Check::new(name, Status::Fail, e.to_string()),
    }
}

fn order_check(
    name: &'static str,
    inst: &Instance,
    fact: Option<&Factorization>,
    c: &ConstructionResult,
) -> (OrderStatus, Check) {
    let Some(fact) = fact else {
        return (OrderStatus::Timeout, Check::new(name, Status::Skipped, "factorisation of q^m - 1 timed out"));
    };
    match exact_order(&inst.ext, &c.element, fact) {
        Ok(order) => {
            let ok = order >= c.bound;
            let detail = format!("order {order} {} bound {}", if ok { ">=" } else { "<" }, c.bound);
            (OrderStatus::Exact(order), Check::from_bool(name, ok, detail))
        }
        Err(e) => (OrderStatus::Timeout, Check::new(name, Status::Fail, e.to_string())),
    }
}

/// Factorises `q^m - 1` within the time budget.
pub fn group_order_factorization(inst: &Instance, budget: Duration) -> Option<Factorization> {
    factor_group_order(inst.ext.base().q(), inst.ext.m() as u64, &Deadline::after(budget)).ok()
}

/// Runs every check on one instance. Checks that exceed a cap or the time
/// budget are marked skipped rather than failed.
pub fn verify(inst: &Instance, best: &BestConstruction, opts: &VerifyOptions) -> Verification {
    verify_with(inst, best, opts, group_order_factorization(inst, opts.time_budget).as_ref())
}

/// As [`verify`], with the factorisation of `q^m - 1` supplied (`None` = timed out).
pub fn verify_with(
    inst: &Instance,
    best: &BestConstruction,
    opts: &VerifyOptions,
    fact: Option<&Factorization>,
) -> Verification {
    let eta = pick(best, ElementKind::EtaPlusB);
    let theta = pick(best, ElementKind::ThetaPlusB);
    let (ext, decomp, b) = (&inst.ext, &inst.decomp, &inst.b);
    let mut checks = vec![
        conjugate_check("conjugates_theta", check_theta_conjugates(inst)),
        conjugate_check("conjugates_eta", check_eta_conjugates(inst)),
    ];
    let argmax = eta.argmax.expect("the eta construction carries its argmax");
    checks.push(injectivity_check("injectivity_s", &eta.bound, opts.vector_cap, || {
        verify_injectivity_s(ext, decomp, b, argmax.d_minus, argmax.d, opts.vector_cap)
    }));
    checks.push(injectivity_check("injectivity_t", &theta.bound, opts.vector_cap, || {
        verify_injectivity_t(ext, decomp, b, opts.vector_cap)
    }));
    let (eta_order, check) = order_check("order_eta_plus_b_ge_d1", inst, fact, eta);
    checks.push(check);
    let (theta_order, check) = order_check("order_theta_plus_b_ge_d2", inst, fact, theta);
    checks.push(check);
    Verification { eta_order, theta_order, checks }
}
