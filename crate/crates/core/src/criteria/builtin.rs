//! The criterion table: every inclusion condition as data.

use std::sync::LazyLock;

use super::expr::RelExpr;
use super::{Criterion, CriterionId, InclusionClause};
use crate::graph::Color;

fn a() -> RelExpr {
    RelExpr::atom(Color::A)
}

fn b() -> RelExpr {
    RelExpr::atom(Color::B)
}

fn c() -> RelExpr {
    RelExpr::atom(Color::C)
}

fn or<const N: usize>(parts: [RelExpr; N]) -> RelExpr {
    RelExpr::union(parts)
}

fn then(l: RelExpr, r: RelExpr) -> RelExpr {
    RelExpr::compose(l, r)
}

fn star(e: RelExpr) -> RelExpr {
    RelExpr::star(e)
}

fn all3() -> RelExpr {
    or([a(), b(), c()])
}

fn clause(lhs: RelExpr, rhs: RelExpr) -> InclusionClause {
    InclusionClause { lhs, rhs }
}

// A(A|B|C)*
fn a_then_any() -> RelExpr {
    then(a(), star(all3()))
}

// (B|C)A <= A(A|B|C)* | B | C
fn bc_a_clause() -> InclusionClause {
    clause(then(or([b(), c()]), a()), or([a_then_any(), b(), c()]))
}

// BA <= A(A|B)* | B
fn jumping_ab_clause() -> InclusionClause {
    clause(then(b(), a()), or([then(a(), star(or([a(), b()]))), b()]))
}

fn build() -> Vec<Criterion> {
    use CriterionId::*;
    vec![
        Criterion {
            id: Ramsey,
            clauses: vec![clause(then(all3(), all3()), all3())],
            sound: true,
        },
        Criterion {
            id: ThreeOfNine,
            clauses: vec![clause(
                or([then(b(), a()), then(c(), a()), then(c(), b())]),
                all3(),
            )],
            sound: true,
        },
        Criterion {
            id: Tripartite,
            clauses: vec![
                bc_a_clause(),
                clause(
                    then(c(), b()),
                    or([a_then_any(), then(b(), star(b())), c()]),
                ),
            ],
            sound: true,
        },
        Criterion {
            id: JumpingAb,
            clauses: vec![jumping_ab_clause()],
            sound: true,
        },
        Criterion {
            id: JumpingV1,
            clauses: vec![
                jumping_ab_clause(),
                clause(
                    then(c(), or([a(), b()])),
                    or([then(or([a(), b()]), star(all3())), c()]),
                ),
            ],
            sound: true,
        },
        Criterion {
            id: JumpingV2,
            clauses: vec![
                clause(then(c(), b()), or([then(b(), star(or([b(), c()]))), c()])),
                bc_a_clause(),
            ],
            sound: true,
        },
        Criterion {
            id: F1,
            clauses: vec![
                clause(then(or([b(), c()]), a()), c()),
                clause(then(c(), b()), or([a(), then(b(), star(or([b(), c()])))])),
            ],
            sound: false,
        },
        Criterion {
            id: F2,
            clauses: vec![
                clause(then(or([b(), c()]), a()), c()),
                clause(then(c(), b()), then(b(), star(or([a(), b()])))),
            ],
            sound: false,
        },
        Criterion {
            id: F3,
            clauses: vec![
                clause(or([then(b(), a()), then(c(), b())]), c()),
                clause(then(c(), a()), then(b(), star(a()))),
            ],
            sound: false,
        },
    ]
}

static TABLE: LazyLock<Vec<Criterion>> = LazyLock::new(build);

/// All nine criteria, in [`CriterionId::ALL`] order.
pub fn builtin_criteria() -> &'static [Criterion] {
    &TABLE
}
