//! The three counterexample graphs, nodes numbered left to right with the
//! top node last.

use crate::graph::TriGraph;
use crate::word::RowWord;

/// Four nodes, only multicolored loops; satisfies `F1`.
pub fn multicolored_loops<W: RowWord>() -> TriGraph<W> {
    TriGraph::from_edges(4, &[(1, 3)], &[(0, 1), (3, 0), (2, 3)], &[(0, 3), (1, 2)])
        .expect("fixture fits any row word")
}

/// Three nodes with the double loop `0→1→2→0`, `0→2→0`; satisfies `F2`.
pub fn double_loop<W: RowWord>() -> TriGraph<W> {
    TriGraph::from_edges(3, &[(1, 2)], &[(0, 1), (2, 0)], &[(0, 2)])
        .expect("fixture fits any row word")
}

/// Three nodes; satisfies `F3`.
pub fn putative<W: RowWord>() -> TriGraph<W> {
    TriGraph::from_edges(3, &[(1, 2), (2, 0)], &[(0, 1)], &[(0, 2)])
        .expect("fixture fits any row word")
}

/// `(name, graph)` for each fixture, in `G1, G2, G3` order.
pub fn all<W: RowWord>() -> [(&'static str, TriGraph<W>); 3] {
    [
        ("G1", multicolored_loops()),
        ("G2", double_loop()),
        ("G3", putative()),
    ]
}
