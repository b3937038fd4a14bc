use thiserror::Error;

use crate::criteria::CriterionId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier size mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("carrier of {n} nodes exceeds the cap of {cap}")]
    CarrierTooLarge { n: usize, cap: usize },

    #[error("node {node} out of range for carrier of {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("criterion {0} does not hold on this graph")]
    CriterionNotSatisfied(CriterionId),

    #[error("invalid lasso: {0}")]
    InvalidLasso(String),

    #[error(
        "lasso step {position} leaves {node} by {color} although an immortal A-successor exists"
    )]
    NotGreedy {
        position: usize,
        node: usize,
        color: crate::Color,
    },

    #[error("start node {0} is mortal")]
    MortalStart(usize),

    #[error("rewrite budget of {0} steps exhausted")]
    BudgetExhausted(usize),

    #[error("internal error: {0}")]
    Internal(String),
}
