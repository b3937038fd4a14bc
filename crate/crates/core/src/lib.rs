//! Finite relation algebra for checking when the union of three
//! well-founded relations is itself well-founded.
//!
//! Relations are dense bitset matrices generic over the row word
//! ([`RowWord`]); the aliases below fix the common widths.

pub mod chain;
pub mod criteria;
mod error;
pub mod fixtures;
mod graph;
mod relation;
pub mod search;
mod word;

pub use chain::{
    check_lasso, construct_greedy_chain, extract_monochrome, monochrome_cycle_oracle, replay_trace,
    validate_lasso, Extraction, ExtractionTrace, Lasso, Rewrite, RewriteKind, Step,
};
pub use criteria::{
    builtin_criteria, clique_guaranteed, clique_witness, evaluate_criterion, Criterion,
    CriterionId, CriterionReport, InclusionClause, RelExpr, Violation,
};
pub use error::{Error, Result};
pub use graph::{Color, GraphRecord, TriGraph};
pub use relation::Relation;
pub use word::{Ones, RowWord};

/// Up to 8 nodes; used by the enumeration scans.
pub type Relation8 = Relation<u8>;
pub type Relation16 = Relation<u16>;
pub type Relation32 = Relation<u32>;
/// Up to 64 nodes, the default carrier cap.
pub type Relation64 = Relation<u64>;

pub type TriGraph8 = TriGraph<u8>;
pub type TriGraph16 = TriGraph<u16>;
pub type TriGraph32 = TriGraph<u32>;
pub type TriGraph64 = TriGraph<u64>;

/// Default carrier cap for graphs read from files.
pub const MAX_NODES: usize = 64;
