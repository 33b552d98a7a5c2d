use std::fmt;

use num_bigint::BigInt;

/// Errors reported by the series kernel, the reduction machinery and the
/// verification drivers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An eta quotient whose prefactor exponent `sum(m*e)/24` is not an
    /// integer cannot be expanded as a series in integer powers of q.
    NonIntegralPrefactor { numerator: i64 },
    /// Series inversion (or a negative power) requires the leading
    /// coefficient to be a unit, i.e. +-1.
    NonUnitLeading,
    /// A formal identity failed at the given q-exponent.
    IdentityViolated {
        exponent: i64,
        lhs: BigInt,
        rhs: BigInt,
    },
    /// A valuation or support bound on `S_{r,l}` failed at term `g^power`.
    BoundViolated { r: i64, power: i64, detail: String },
    /// Greedy basis reduction exceeded its step cap.
    NonTerminating { steps: usize },
    /// Basis reduction left a nonzero coefficient it refuses to attribute
    /// to a basis element (input outside the span, or precision noise).
    NonzeroResidual { exponent: i64 },
    /// Lattice enumeration visited more points than the configured cap.
    CapExceeded { visited: u64, cap: u64 },
    /// `theta_l` (and hence `A_r`, `alpha_l`) is not available at this level.
    ThetaUnavailable { ell: u64 },
    /// The requested level is intentionally not supported by this operation.
    Unsupported { ell: u64 },
    /// A claim needs oracle values beyond the configured index cap.
    OracleRangeExceeded { needed: u64, cap: u64 },
    /// The constant term of a modular equation is not a signed monomial in g,
    /// so the reciprocal (negative-r) equation cannot be formed exactly.
    NonMonomialLowTerm,
    /// Malformed embedded or external data.
    Data(String),
    /// Invalid configuration or command-line usage.
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonIntegralPrefactor { numerator } => {
                write!(
                    f,
                    "eta-quotient prefactor exponent {numerator}/24 is not an integer"
                )
            }
            Error::NonUnitLeading => write!(f, "leading coefficient is not +-1"),
            Error::IdentityViolated { exponent, lhs, rhs } => {
                write!(f, "identity fails at q^{exponent}: lhs {lhs} != rhs {rhs}")
            }
            Error::BoundViolated { r, power, detail } => {
                write!(f, "bound violated at S_{{{r}}} term g^{power}: {detail}")
            }
            Error::NonTerminating { steps } => {
                write!(f, "basis reduction exceeded step cap ({steps} steps)")
            }
            Error::NonzeroResidual { exponent } => {
                write!(f, "nonzero residual at q^{exponent} after basis reduction")
            }
            Error::CapExceeded { visited, cap } => {
                write!(f, "lattice enumeration cap exceeded: {visited} > {cap}")
            }
            Error::ThetaUnavailable { ell } => {
                write!(f, "theta table not available for l = {ell}")
            }
            Error::Unsupported { ell } => write!(f, "operation not supported for l = {ell}"),
            Error::OracleRangeExceeded { needed, cap } => {
                write!(f, "oracle table of size {needed} exceeds cap {cap}")
            }
            Error::NonMonomialLowTerm => {
                write!(f, "constant term of the modular equation is not +-g^t")
            }
            Error::Data(msg) => write!(f, "data error: {msg}"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
