//! Wall-clock budgets for factorisation.

use std::time::{Duration, Instant};

use high_order_core::Budget;

pub const TIME_BUDGET_ENV: &str = "HIGH_ORDER_TIME_BUDGET_SECS";
pub const DEFAULT_TIME_BUDGET: Duration = Duration::from_secs(30);

/// Runs out once the deadline has passed.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    at: Instant,
}

impl Deadline {
    pub fn after(budget: Duration) -> Self {
        Deadline { at: Instant::now() + budget }
    }
}

impl Budget for Deadline {
    fn exhausted(&self) -> bool {
        Instant::now() >= self.at
    }
}

/// The per-factorisation budget: `HIGH_ORDER_TIME_BUDGET_SECS` (fractional
/// seconds allowed) when set, otherwise 30 s.
pub fn time_budget_from_env() -> Result<Duration, String> {
    match std::env::var(TIME_BUDGET_ENV) {
        Err(_) => Ok(DEFAULT_TIME_BUDGET),
        Ok(raw) => parse_time_budget(&raw),
    }
}

pub fn parse_time_budget(raw: &str) -> Result<Duration, String> {
    let secs: f64 = raw
        .trim()
        .parse()
        .map_err(|_| format!("{TIME_BUDGET_ENV} must be a number of seconds, got {raw:?}"))?;
    Duration::try_from_secs_f64(secs).map_err(|_| format!("{TIME_BUDGET_ENV} must be nonnegative and finite"))
}
