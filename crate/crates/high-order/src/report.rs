//! The JSON report printed by `construct`. Field order is the key order of
//! the output; every exact integer is a decimal string. The schema lives in
//! `docs/schema.json`.

use high_order_core::highorder::{BestConstruction, CubeRootCheck};
use high_order_core::{ConstructionResult, ElementKind, RealBound};
use serde::Serialize;

use crate::verify::{pick, Check, Instance, Verification};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// The construction with the larger bound.
    #[default]
    Auto,
    /// `theta^l + b`
    T1,
    /// `theta + b`
    T2,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::T1 => "t1",
            Strategy::T2 => "t2",
        }
    }

    pub fn choose(self, best: &BestConstruction) -> &ConstructionResult {
        match self {
            Strategy::Auto => &best.selected,
            Strategy::T1 => pick(best, ElementKind::EtaPlusB),
            Strategy::T2 => pick(best, ElementKind::ThetaPlusB),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub instance: InstanceReport,
    pub bounds: BoundsReport,
    pub strategy: &'static str,
    pub element: ElementReport,
    /// `None` without `--verify`.
    pub exact_order: Option<String>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub p: u64,
    pub n: usize,
    pub m: usize,
    pub q: String,
    /// Coefficients of the monic modulus of `F_q` over `F_p`; empty when `n = 1`.
    pub modulus: Vec<u32>,
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    pub k: usize,
    pub l: usize,
    pub h: String,
    pub coset_reps: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArgmaxReport {
    pub d_minus: usize,
    pub d: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosedFormReport {
    /// `d1` or `d2`: the exact bound this closed form estimates.
    pub bounds: &'static str,
    pub formula: &'static str,
    /// `None` when the value overflows a double.
    pub value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubeRootReport {
    pub holds: bool,
    pub exact: bool,
    pub ln_margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub d1: String,
    pub d1_argmax: ArgmaxReport,
    pub d2: String,
    /// The larger of `d1` and `d2`, ties going to `d1`.
    pub selected: &'static str,
    pub closed_forms: Vec<ClosedFormReport>,
    /// Whether the selected bound reaches `5^cbrt(m/2)`; present when `k >= 70`.
    pub five_pow_cbrt_half: Option<CubeRootReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementReport {
    pub kind: &'static str,
    pub bound_kind: &'static str,
    pub bound: String,
    /// `m` coefficients in powers of `theta`, each a base-`p` list of length `n`.
    pub coeffs: Vec<Vec<u32>>,
}

fn closed_forms<'a>(source: &'static str, forms: &'a [RealBound]) -> impl Iterator<Item = ClosedFormReport> + 'a {
    forms.iter().map(move |f| ClosedFormReport {
        bounds: source,
        formula: f.formula.as_str(),
        value: f.value.is_finite().then_some(f.value),
    })
}

impl From<CubeRootCheck> for CubeRootReport {
    fn from(c: CubeRootCheck) -> Self {
        CubeRootReport { holds: c.holds, exact: c.exact, ln_margin: c.ln_margin }
    }
}

impl RunReport {
    pub fn new(inst: &Instance, best: &BestConstruction, strategy: Strategy, verification: Option<&Verification>) -> Self {
        let ext = &inst.ext;
        let base = ext.base();
        let d = &inst.decomp;
        let eta = pick(best, ElementKind::EtaPlusB);
        let theta = pick(best, ElementKind::ThetaPlusB);
        let argmax = eta.argmax.expect("the eta construction carries its argmax");
        let chosen = strategy.choose(best);
        RunReport {
            instance: InstanceReport {
                p: base.p(),
                n: base.n(),
                m: ext.m(),
                q: base.q().to_string(),
                modulus: base.modulus().to_vec(),
                a: ext.a().coeffs().to_vec(),
                b: inst.b.coeffs().to_vec(),
                k: d.k(),
                l: d.l(),
                h: d.h().to_string(),
                coset_reps: d.coset_reps().to_vec(),
            },
            bounds: BoundsReport {
                d1: eta.bound.to_string(),
                d1_argmax: ArgmaxReport { d_minus: argmax.d_minus, d: argmax.d },
                d2: theta.bound.to_string(),
                selected: best.selected.bound_kind.as_str(),
                closed_forms: closed_forms("d1", &eta.closed_forms)
                    .chain(closed_forms("d2", &theta.closed_forms))
                    .collect(),
                five_pow_cbrt_half: best.cube_root_check.map(Into::into),
            },
            strategy: strategy.as_str(),
            element: ElementReport {
                kind: chosen.element_kind.as_str(),
                bound_kind: chosen.bound_kind.as_str(),
                bound: chosen.bound.to_string(),
                coeffs: ext.coeffs(&chosen.element).into_iter().map(|c| c.coeffs().to_vec()).collect(),
            },
            exact_order: verification.map(|v| v.order_of(chosen.element_kind).to_string()),
            checks: verification.map(|v| v.checks.clone()).unwrap_or_default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialise")
    }

    /// True when a check failed.
    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == crate::verify::Status::Fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify, InstanceSpec, VerifyOptions};

    #[test]
    fn report_for_small_instance() {
        let inst = Instance::new(&InstanceSpec::new(5, 1, 2)).unwrap();
        let best = inst.constructions().unwrap();
        let r = RunReport::new(&inst, &best, Strategy::T2, None);
        assert_eq!(r.instance.a, vec![2]);
        assert_eq!(r.element.kind, "theta_plus_b");
        assert_eq!(r.element.coeffs, vec![vec![1], vec![1]]);
        assert_eq!(r.element.bound, "2");
        assert!(r.exact_order.is_none() && r.checks.is_empty());
        let json = r.to_json();
        let order: Vec<usize> = ["\"instance\"", "\"bounds\"", "\"strategy\"", "\"element\"", "\"exact_order\"", "\"checks\""]
            .iter()
            .map(|k| json.find(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn verified_report() {
        let inst = Instance::new(&InstanceSpec::new(5, 1, 8)).unwrap();
        let best = inst.constructions().unwrap();
        let v = verify(&inst, &best, &VerifyOptions::default());
        let r = RunReport::new(&inst, &best, Strategy::Auto, Some(&v));
        assert!(!r.has_failure());
        assert_eq!(r.checks.len(), 6);
        let order: high_order_core::Nat = r.exact_order.unwrap().parse().unwrap();
        assert!(order >= r.element.bound.parse().unwrap());
    }
}
