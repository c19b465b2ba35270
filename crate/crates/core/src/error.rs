use thiserror::Error;

use crate::instance::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("instance needs at least {required} regions, got {found}")]
    TooFewRegions { required: usize, found: usize },

    #[error("region {region} has no vertices")]
    EmptyRegion { region: usize },

    #[error("index {index} out of range for {len} regions")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{what} = {value} outside its domain [{lo}, {hi}]")]
    Domain {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("invalid instance: {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("malformed instance file at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("exact oracle refused: {selections} vertex selections exceed budget {budget}")]
    BudgetExceeded { selections: u64, budget: u64 },

    #[error("render supports d=2 only (instance has d={0})")]
    RenderDimension(usize),

    #[error("{0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
