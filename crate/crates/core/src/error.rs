use thiserror::Error;

use crate::lattice::CurveId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("basis mismatch: expected ({expected_base}, {expected_exc}) coordinates, got ({got_base}, {got_exc})")]
    BasisMismatch {
        expected_base: usize,
        expected_exc: usize,
        got_base: usize,
        got_exc: usize,
    },
    #[error("unknown curve {0}")]
    UnknownCurve(CurveId),
    #[error("invalid blow-up: {0}")]
    InvalidBlowUp(String),
    #[error("invalid subscheme datum: {0}")]
    InvalidDatum(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("invalid multiplet: {0}")]
    InvalidMultiplet(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
