//! Exact q-series arithmetic and mechanical verification of partition
//! congruences attached to the eta quotients
//! `phi_l(z) = eta(l^2 z)/eta(z)` and `g_l(z) = (eta(l z)/eta(z))^{24/gcd(24, l-1)}`
//! for primes `5 <= l <= 17`.
//!
//! The crate has two independent computational pillars:
//!
//! - [`qseries`]: truncated Laurent series over arbitrary-precision integers,
//!   eta-quotient expansion through the pentagonal number theorem, dilation
//!   `q -> q^t`, and the coefficient-extraction operator `U_p`;
//! - [`oracle`]: brute-force partition counters (plain dynamic programming and
//!   Andrews' lattice sum for colored Frobenius partitions) that share no code
//!   with the series kernel and act as ground truth against it.
//!
//! On top of the kernel sit the level-specific components:
//!
//! - [`modeq`]: the classical modular equations relating `phi_l(z)` and
//!   `g_l(l z)` for `l = 5, 7, 13`, Newton's identities producing the power
//!   sums `S_{r,l}` as Laurent polynomials in `g_l`, and the l-adic valuation
//!   checks on their coefficients;
//! - [`basis`]: expansion of modular functions in the triangular basis
//!   `{g_l^nu}`, the transformation matrix entries `C^lambda_{mu,nu}` of
//!   `f -> U_l(phi_l^lambda f)`, and the divisibility bits `theta_l(lambda, mu)`;
//! - [`sequence`]: the parameter sequences `lambda_r, mu_r, n_r, omega, A_r`
//!   and the rate constant `alpha_l` attached to a generalized partition
//!   family `(c, d)`;
//! - [`engine`]: the iterated `U_l` construction of the generating functions
//!   `L_r`, claim verification against the oracles, and the corollary suites
//!   (colored Frobenius, l-regular, l-core);
//! - [`tables`]: regeneration of the published `alpha` tables from the theta
//!   machinery and audits of the published parameter tables.
//!
//! Everything is exact: no floating point appears anywhere in the crate.

pub mod basis;
pub mod claims;
pub mod config;
pub mod engine;
pub mod eta;
pub mod gpoly;
pub mod modeq;
pub mod oracle;
pub mod qseries;
pub mod sequence;
pub mod tables;

mod error;

pub use error::{Error, Result};

pub use basis::{compute_c, expand_in_g_basis, theta, GBasisExpansion, GBasisOptions};
pub use claims::{ClaimReport, ClaimStatus, CongruenceClaim, Direction, Family};
pub use config::{OutputFormat, RunConfig};
pub use engine::{build_l, corollary_suite, oracle_product_form, verify_claim, SuiteReport};
pub use eta::{euler_product, EtaQuotient};
pub use gpoly::GPolynomial;
pub use modeq::{
    check_valuation_bounds, newton_s, verify_modular_equation, verify_s_identity, ModularEquation,
    SPolynomial,
};
pub use oracle::{
    core_table, frobenius_table, gp_table, partitions, regular_table, GeneralizedPartitionSpec,
};
pub use qseries::QSeries;
pub use sequence::{alpha, sequence_params, SequenceParams};
