//! Exact combinatorics behind both lower bounds, plus the closed-form
//! analytic bounds they are compared against.

mod binomial;
mod bounds;
mod partitions;

pub use binomial::{binom, d1_bound, s_cardinality, ArgmaxPair, BinomialTable};
pub(crate) use binomial::check_s_params as binomial_check_s;
pub use bounds::{
    compare_bounds, five_pow_cbrt_half, five_pow_sqrt_half_ceil, maroti_q_lower, maroti_u_lower,
    nat_ln, nat_to_f64_floor, popovych_lower, tau_best, tau_log_objective, two_pow_cbrt_double, BoundComparison,
    BoundFormula, LogBound, RealBound, MAROTI_CONSTANT,
};
pub use partitions::{
    count_t, partition_count, partition_count_bounded, partition_count_nondiv,
    partition_counts_bounded_upto, partition_counts_nondiv_upto, partition_counts_upto,
};
