use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::TriGraph;
use crate::relation::{check_cap, Relation};
use crate::word::RowWord;

/// Largest raw space, in bits, that a full exhaustive scan may cover.
/// `2^27` admits three nodes with self-loops.
pub const MAX_EXHAUSTIVE_BITS: u32 = 27;

/// Samples drawn from one generator stream.
pub const SAMPLE_CHUNK: u64 = 1 << 14;

/// Name of the sampling scheme, recorded in reports.
pub const GENERATOR: &str =
    "ChaCha8Rng: seed_from_u64(seed), stream = sample_index / 16384, draws A,B,C parts in order";

/// All colored graphs on `n` nodes, addressed by one bitmask per color.
///
/// Edge slots are the ordered pairs `(u, v)` in row-major order, skipping
/// the diagonal unless self-loops are enabled. A graph's canonical index is
/// `a | b << k | c << 2k` for `k` slots, so ascending order walks `C`
/// slowest and `A` fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpace {
    n: usize,
    self_loops: bool,
    c_empty: bool,
    slots: Vec<(usize, usize)>,
}

impl GraphSpace {
    pub fn new(n: usize, self_loops: bool) -> Result<Self> {
        let slots: Vec<_> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self_loops || u != v)
            .collect();
        if slots.len() > 63 {
            return Err(Error::Usage(format!(
                "{n} nodes have {} edge slots per color; at most 63 are supported",
                slots.len()
            )));
        }
        Ok(Self {
            n,
            self_loops,
            c_empty: false,
            slots,
        })
    }

    /// Restrict to graphs with no `C` edges.
    pub fn without_c(mut self) -> Self {
        self.c_empty = true;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn self_loops(&self) -> bool {
        self.self_loops
    }

    pub fn c_empty(&self) -> bool {
        self.c_empty
    }

    /// Edge slots per color.
    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    /// Number of free colors.
    pub fn colors(&self) -> u32 {
        if self.c_empty {
            2
        } else {
            3
        }
    }

    /// `log2` of the number of graphs.
    pub fn bits(&self) -> u32 {
        self.colors() * self.slots.len() as u32
    }

    /// Number of graphs, when it fits in 64 bits.
    pub fn graph_count(&self) -> Option<u64> {
        1u64.checked_shl(self.bits())
    }

    /// Number of distinct bitmasks for a single color.
    pub fn parts(&self) -> u64 {
        1u64 << self.slots.len()
    }

    pub fn relation<W: RowWord>(&self, part: u64) -> Relation<W> {
        let mut r = Relation::zeroed(self.n);
        for i in part.ones() {
            let (u, v) = self.slots[i];
            r.insert(u, v).expect("slot inside carrier");
        }
        r
    }

    pub fn graph<W: RowWord>(&self, parts: [u64; 3]) -> TriGraph<W> {
        TriGraph::new(
            self.relation(parts[0]),
            self.relation(parts[1]),
            self.relation(if self.c_empty { 0 } else { parts[2] }),
        )
        .expect("colors share the carrier")
    }

    /// Canonical index of a graph given by its color parts.
    pub fn index_of(&self, parts: [u64; 3]) -> u128 {
        let k = self.slots.len() as u32;
        parts[0] as u128 | (parts[1] as u128) << k | (parts[2] as u128) << (2 * k)
    }

    pub(crate) fn check_word<W: RowWord>(&self) -> Result<()> {
        check_cap::<W>(self.n)
    }

    pub(crate) fn check_exhaustive(&self) -> Result<()> {
        if self.bits() > MAX_EXHAUSTIVE_BITS {
            return Err(Error::Usage(format!(
                "exhaustive scan of 2^{} graphs exceeds the budget of 2^{MAX_EXHAUSTIVE_BITS}",
                self.bits()
            )));
        }
        Ok(())
    }

    /// Part values for one color, ascending, optionally only acyclic ones.
    pub(crate) fn part_list<W: RowWord>(&self, acyclic_only: bool) -> Vec<u64> {
        (0..self.parts())
            .filter(|&p| !acyclic_only || self.relation::<W>(p).is_well_founded())
            .collect()
    }

    /// Deterministic sample stream `chunk`.
    pub(crate) fn sample_chunk(&self, seed: u64, chunk: u64, count: u64) -> Vec<[u64; 3]> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(chunk);
        let mask = self.parts() - 1;
        (0..count)
            .map(|_| {
                let a = rng.next_u64() & mask;
                let b = rng.next_u64() & mask;
                let c = if self.c_empty {
                    0
                } else {
                    rng.next_u64() & mask
                };
                [a, b, c]
            })
            .collect()
    }
}

/// All graphs on `n` nodes without self-loops, in canonical order.
pub fn enumerate_graphs<W: RowWord>(n: usize) -> Result<impl Iterator<Item = TriGraph<W>>> {
    enumerate_graphs_with(n, false)
}

/// As [`enumerate_graphs`], optionally including self-loop slots.
pub fn enumerate_graphs_with<W: RowWord>(
    n: usize,
    self_loops: bool,
) -> Result<impl Iterator<Item = TriGraph<W>>> {
    let space = GraphSpace::new(n, self_loops)?;
    space.check_word::<W>()?;
    space.check_exhaustive()?;
    let parts = space.parts();
    Ok((0..parts).flat_map(move |c| {
        let space = space.clone();
        (0..parts).flat_map(move |b| {
            let space = space.clone();
            (0..parts).map(move |a| space.graph([a, b, c]))
        })
    }))
}
