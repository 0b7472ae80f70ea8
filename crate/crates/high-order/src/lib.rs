//! Standard-library side of the project: the `high-order` command, JSON run
//! reports, CSV sweeps and wall-clock factorisation budgets, on top of
//! `high-order-core`.

pub mod budget;
pub mod cli;
pub mod report;
pub mod sweep;
pub mod verify;

pub use report::{RunReport, Strategy};
pub use verify::{Instance, InstanceSpec, SetupError, Verification, VerifyOptions};
