//! Three-colored directed graphs: a carrier with relations `A`, `B`, `C`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::{check_cap, Relation};
use crate::word::RowWord;

/// Edge color, i.e. which of the three relations an edge belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    A,
    B,
    C,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::A, Color::B, Color::C];

    pub fn as_str(self) -> &'static str {
        match self {
            Color::A => "A",
            Color::B => "B",
            Color::C => "C",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Color::A),
            "B" => Ok(Color::B),
            "C" => Ok(Color::C),
            other => Err(Error::Usage(format!("unknown color `{other}`"))),
        }
    }
}

/// Carrier plus three relations. Colors may overlap; the union is derived.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TriGraph<W: RowWord = u64> {
    n: usize,
    colors: [Relation<W>; 3],
}

impl<W: RowWord> TriGraph<W> {
    pub fn empty(n: usize) -> Result<Self> {
        check_cap::<W>(n)?;
        Ok(Self {
            n,
            colors: [
                Relation::zeroed(n),
                Relation::zeroed(n),
                Relation::zeroed(n),
            ],
        })
    }

    pub fn new(a: Relation<W>, b: Relation<W>, c: Relation<W>) -> Result<Self> {
        let n = a.n();
        for other in [&b, &c] {
            if other.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: other.n(),
                });
            }
        }
        Ok(Self {
            n,
            colors: [a, b, c],
        })
    }

    /// Build from per-color edge lists.
    pub fn from_edges(
        n: usize,
        a: &[(usize, usize)],
        b: &[(usize, usize)],
        c: &[(usize, usize)],
    ) -> Result<Self> {
        Self::new(
            Relation::from_pairs(n, a.iter().copied())?,
            Relation::from_pairs(n, b.iter().copied())?,
            Relation::from_pairs(n, c.iter().copied())?,
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn color(&self, color: Color) -> &Relation<W> {
        &self.colors[color.index()]
    }

    #[inline]
    pub fn a(&self) -> &Relation<W> {
        &self.colors[0]
    }

    #[inline]
    pub fn b(&self) -> &Relation<W> {
        &self.colors[1]
    }

    #[inline]
    pub fn c(&self) -> &Relation<W> {
        &self.colors[2]
    }

    pub fn insert(&mut self, color: Color, u: usize, v: usize) -> Result<bool> {
        self.colors[color.index()].insert(u, v)
    }

    pub fn has_edge(&self, color: Color, u: usize, v: usize) -> bool {
        self.color(color).contains(u, v)
    }

    /// `A ∪ B ∪ C`.
    pub fn union(&self) -> Relation<W> {
        self.colors[0]
            .union_unchecked(&self.colors[1])
            .union_unchecked(&self.colors[2])
    }

    /// All colored edges ordered by color, then pair.
    pub fn edges(&self) -> impl Iterator<Item = (Color, usize, usize)> + '_ {
        Color::ALL
            .into_iter()
            .flat_map(move |col| self.color(col).pairs().map(move |(u, v)| (col, u, v)))
    }

    /// Well-foundedness of each color, in `A, B, C` order.
    pub fn colors_well_founded(&self) -> [bool; 3] {
        [
            self.colors[0].is_well_founded(),
            self.colors[1].is_well_founded(),
            self.colors[2].is_well_founded(),
        ]
    }

    pub fn union_well_founded(&self) -> bool {
        self.union().is_well_founded()
    }

    /// Bitmask of nodes with an infinite outgoing chain in the union.
    pub fn immortal_mask(&self) -> W {
        self.union().immortal_mask()
    }

    /// Nodes with an infinite outgoing chain in the union, ascending.
    pub fn immortal_nodes(&self) -> Vec<usize> {
        self.immortal_mask().ones().collect()
    }

    pub fn convert<V: RowWord>(&self) -> Result<TriGraph<V>> {
        TriGraph::new(
            self.colors[0].convert()?,
            self.colors[1].convert()?,
            self.colors[2].convert()?,
        )
    }
}

impl<W: RowWord> fmt::Debug for TriGraph<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TriGraph(n={}, A={}, B={}, C={})",
            self.n, self.colors[0], self.colors[1], self.colors[2]
        )
    }
}

/// Serializable edge-list form of a [`TriGraph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub nodes: usize,
    #[serde(rename = "A")]
    pub a: Vec<(usize, usize)>,
    #[serde(rename = "B")]
    pub b: Vec<(usize, usize)>,
    #[serde(rename = "C")]
    pub c: Vec<(usize, usize)>,
}

impl GraphRecord {
    pub fn to_graph<W: RowWord>(&self) -> Result<TriGraph<W>> {
        TriGraph::from_edges(self.nodes, &self.a, &self.b, &self.c)
    }
}

impl<W: RowWord> From<&TriGraph<W>> for GraphRecord {
    fn from(g: &TriGraph<W>) -> Self {
        GraphRecord {
            nodes: g.n(),
            a: g.a().pairs().collect(),
            b: g.b().pairs().collect(),
            c: g.c().pairs().collect(),
        }
    }
}
