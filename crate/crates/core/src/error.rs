use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("determinant {re} + {im}i is not 1")]
    NotUnimodular { re: f64, im: f64 },
    #[error("matrix is singular")]
    Singular,
    #[error("unsupported branch: {0}")]
    UnsupportedBranch(&'static str),
    #[error("zero four-momentum has no canonical form")]
    ZeroMomentum,
    #[error("polarizer is a singular element with no group image")]
    SingularElement,
    #[error("beam has zero intensity")]
    ZeroBeam,
    #[error("Stokes direction is undefined for zero radius")]
    DegenerateDirection,
    #[error("{name} = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_finite(values: &[f64], what: &'static str) -> Result<()> {
    if values.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}
