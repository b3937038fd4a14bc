//! Well-foundedness criteria for `A ∪ B ∪ C`, stored as inclusion clauses
//! and checked by one generic evaluator.

mod builtin;
mod expr;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use builtin::builtin_criteria;
pub use expr::RelExpr;

use crate::error::{Error, Result};
use crate::graph::{Color, TriGraph};
use crate::word::RowWord;

/// Stable identifiers used on the command line and in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CriterionId {
    #[serde(rename = "RAMSEY")]
    Ramsey,
    #[serde(rename = "THREE_OF_NINE")]
    ThreeOfNine,
    #[serde(rename = "TRIPARTITE")]
    Tripartite,
    #[serde(rename = "JUMPING_AB")]
    JumpingAb,
    #[serde(rename = "JUMPING_V1")]
    JumpingV1,
    #[serde(rename = "JUMPING_V2")]
    JumpingV2,
    F1,
    F2,
    F3,
}

impl CriterionId {
    pub const ALL: [CriterionId; 9] = [
        CriterionId::Ramsey,
        CriterionId::ThreeOfNine,
        CriterionId::Tripartite,
        CriterionId::JumpingAb,
        CriterionId::JumpingV1,
        CriterionId::JumpingV2,
        CriterionId::F1,
        CriterionId::F2,
        CriterionId::F3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CriterionId::Ramsey => "RAMSEY",
            CriterionId::ThreeOfNine => "THREE_OF_NINE",
            CriterionId::Tripartite => "TRIPARTITE",
            CriterionId::JumpingAb => "JUMPING_AB",
            CriterionId::JumpingV1 => "JUMPING_V1",
            CriterionId::JumpingV2 => "JUMPING_V2",
            CriterionId::F1 => "F1",
            CriterionId::F2 => "F2",
            CriterionId::F3 => "F3",
        }
    }

    pub fn criterion(self) -> &'static Criterion {
        &builtin_criteria()[self as usize]
    }

    pub fn is_sound(self) -> bool {
        self.criterion().sound
    }

    /// The two-relation jumping criterion is only stated for `A ∪ B`.
    pub fn requires_empty_c(self) -> bool {
        self == CriterionId::JumpingAb
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CriterionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CriterionId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownCriterion(s.to_string()))
    }
}

/// `lhs ⊆ rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionClause {
    pub lhs: RelExpr,
    pub rhs: RelExpr,
}

impl InclusionClause {
    pub fn holds<W: RowWord>(&self, g: &TriGraph<W>) -> bool {
        self.lhs.eval(g).is_subset_unchecked(&self.rhs.eval(g))
    }
}

impl fmt::Display for InclusionClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub id: CriterionId,
    pub clauses: Vec<InclusionClause>,
    /// Whether the clauses, with well-founded colors, guarantee a
    /// well-founded union.
    pub sound: bool,
}

impl Criterion {
    /// Clause check without the empty-`C` requirement of `JUMPING_AB`.
    pub fn holds_on<W: RowWord>(&self, g: &TriGraph<W>) -> bool {
        self.clauses.iter().all(|c| c.holds(g))
    }
}

/// A pair left uncovered by one clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub clause: usize,
    pub pair: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: CriterionId,
    pub holds: bool,
    /// Sorted by clause, then pair.
    pub violations: Vec<Violation>,
    pub colors_wf: [bool; 3],
    pub union_wf: bool,
}

/// Check every clause of `id` on `g`, collecting all uncovered pairs.
pub fn evaluate_criterion<W: RowWord>(g: &TriGraph<W>, id: CriterionId) -> Result<CriterionReport> {
    if id.requires_empty_c() && !g.c().is_empty() {
        return Err(Error::Usage(format!(
            "{id} relates two colors only; C must be empty"
        )));
    }
    let mut violations = Vec::new();
    for (index, clause) in id.criterion().clauses.iter().enumerate() {
        let lhs = clause.lhs.eval(g);
        let rhs = clause.rhs.eval(g);
        violations.extend(
            lhs.pairs()
                .filter(|&(u, v)| !rhs.contains(u, v))
                .map(|pair| Violation {
                    clause: index,
                    pair,
                }),
        );
    }
    Ok(CriterionReport {
        criterion: id,
        holds: violations.is_empty(),
        violations,
        colors_wf: g.colors_well_founded(),
        union_wf: g.union_well_founded(),
    })
}

/// A monochrome self-loop `(color, x)`, the finite stand-in for an infinite
/// monochromatic clique. Colors are tried in `A, B, C` order, nodes ascending.
pub fn clique_witness<W: RowWord>(g: &TriGraph<W>) -> Option<(Color, usize)> {
    Color::ALL
        .into_iter()
        .find_map(|col| g.color(col).self_loop().map(|x| (col, x)))
}

/// Hypotheses under which [`clique_witness`] is guaranteed to succeed: every
/// color transitive, `THREE_OF_NINE` holding, and a cyclic union.
pub fn clique_guaranteed<W: RowWord>(g: &TriGraph<W>) -> bool {
    Color::ALL.into_iter().all(|c| g.color(c).is_transitive())
        && CriterionId::ThreeOfNine.criterion().holds_on(g)
        && !g.union_well_founded()
}
