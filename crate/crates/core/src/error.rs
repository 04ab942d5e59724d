use thiserror::Error;

use crate::algebra::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not contained in the larger subspace")]
    NotContained,

    #[error("{what} failed: {report}")]
    Axiom {
        what: &'static str,
        report: AxiomReport,
    },

    #[error("computation needs {needed} coordinates, above the cap of {cap}")]
    ResourceCap { needed: usize, cap: usize },

    #[error("cochain of degree {degree} is not alpha-equivariant")]
    NotEquivariant { degree: usize },

    #[error("cochain degree must be at least 1")]
    DegreeZero,

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn axiom(what: &'static str, report: AxiomReport) -> Self {
        Error::Axiom { what, report }
    }

    pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected, found })
        }
    }
}
