//! Explicit construction of high multiplicative order elements in Kummer
//! extensions `F_q[x]/<x^m - a>` with `q = p^n`, `p >= 5`.
//!
//! The crate is `no_std` (it needs `alloc`). Every count and order is an exact
//! arbitrary-precision integer ([`Nat`]); only the closed-form analytic bounds
//! are evaluated in `f64`.
//!
//! Module map:
//!
//! - [`combinatorics`]: binomials, the `d1` maximisation, partition counts,
//!   the `|T|` knapsack count, the `tau` objective and the closed-form bounds.
//! - [`field`]: arithmetic in `F_p` and `F_q = F_p[y]/<g(y)>`, polynomials over
//!   `F_q` and irreducibility testing.
//! - [`kummer`]: existence of irreducible binomials, search for `m`-related
//!   elements and arithmetic in `F_q(theta)`.
//! - [`decomposition`]: `m = k * l` with `l = ord_m(q)` and the coset
//!   representatives of `<q mod m>`.
//! - [`highorder`]: the two constructions, their witness sets and the
//!   injectivity checks.
//! - [`order`]: integer factorisation and exact multiplicative orders.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod combinatorics;
pub mod decomposition;
mod error;
pub mod field;
pub mod highorder;
pub mod kummer;
pub mod order;

pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every count, bound,
/// exponent and group order.
pub type Nat = num_bigint::BigUint;

pub use combinatorics::{ArgmaxPair, BoundFormula, RealBound};
pub use decomposition::Decomposition;
pub use field::{FieldParams, FqElem};
pub use highorder::{ConstructionResult, ElementKind, ExponentVector};
pub use kummer::{ExtElement, KummerParams};
pub use order::{Budget, Factorization, Unlimited};
