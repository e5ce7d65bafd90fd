use alloc::string::String;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("nonpositive component {0} in index")]
    NonPositiveComponent(i64),
    #[error("component {0} exceeds the supported bound")]
    ComponentTooLarge(u64),
    #[error("invalid index component {0:?}")]
    InvalidComponent(String),
    #[error("slice bounds {start}..{end} out of range for depth {depth}")]
    SliceOutOfRange { start: usize, end: usize, depth: usize },
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("exp requires a zero constant term")]
    NonZeroConstantTerm,
    #[error("log requires constant term equal to one")]
    ConstantTermNotOne,
    #[error("index {0} is not admissible")]
    NotAdmissible(String),
    #[error("tolerance {requested:e} not reachable (best {achievable:e})")]
    ToleranceUnreachable { requested: f64, achievable: f64 },
    #[error("no sample value for variable {0}")]
    MissingSample(Var),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
