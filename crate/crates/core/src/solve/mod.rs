//! Exact rational and integer linear algebra.
//!
//! Nothing in here rounds: rationals are arbitrary-precision and always kept
//! in lowest terms, so every feasible point that comes back satisfies its
//! system exactly.

mod ilp;
mod kernel;
mod semipositive;
mod simplex;
mod system;

use thiserror::Error;

pub use ilp::solve_integer_feasibility;
pub use kernel::{integer_kernel_basis, rank};
pub use semipositive::{minimal_semipositive_solutions, minimal_support_solutions, Side};
pub use system::{Constraint, Feasibility, LinearSystem, Relation, VarId, Variable};

pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// Branch-and-bound needs a finite box around every variable.
    #[error("variable '{0}' has no finite bound; branch-and-bound cannot terminate")]
    UnboundedBox(String),
}
