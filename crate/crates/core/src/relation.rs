//! Dense boolean relations over a finite carrier `{0..n-1}`.

use std::collections::VecDeque;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::word::RowWord;

pub(crate) type Rows<W> = SmallVec<[W; 8]>;

/// A binary relation on `{0..n-1}`, one bitset row per node.
///
/// Bit `v` of row `u` is set iff `(u, v)` belongs to the relation. Rows never
/// carry bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation<W: RowWord = u64> {
    n: usize,
    rows: Rows<W>,
}

impl<W: RowWord> Relation<W> {
    /// Largest carrier representable with this row word.
    pub const CAP: usize = W::BITS;

    /// The empty relation on `n` nodes.
    pub fn empty(n: usize) -> Result<Self> {
        check_cap::<W>(n)?;
        Ok(Self::zeroed(n))
    }

    /// The identity relation on `n` nodes.
    pub fn identity(n: usize) -> Result<Self> {
        check_cap::<W>(n)?;
        Ok(Self::identity_unchecked(n))
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(n)?;
        for (u, v) in pairs {
            r.insert(u, v)?;
        }
        Ok(r)
    }

    /// Build from raw rows. Bits at or above `rows.len()` are rejected.
    pub fn from_rows(rows: &[W]) -> Result<Self> {
        let n = rows.len();
        check_cap::<W>(n)?;
        let mask = W::low_mask(n);
        if let Some(&row) = rows.iter().find(|&&row| row & !mask != W::zero()) {
            let node = (row & !mask).trailing_zeros() as usize;
            return Err(Error::NodeOutOfRange { node, n });
        }
        Ok(Self {
            n,
            rows: rows.iter().copied().collect(),
        })
    }

    pub(crate) fn zeroed(n: usize) -> Self {
        debug_assert!(n <= W::BITS);
        Self {
            n,
            rows: SmallVec::from_elem(W::zero(), n),
        }
    }

    pub(crate) fn identity_unchecked(n: usize) -> Self {
        Self {
            n,
            rows: (0..n).map(W::bit).collect(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, u: usize) -> W {
        self.rows[u]
    }

    #[inline]
    pub fn rows(&self) -> &[W] {
        &self.rows
    }

    #[inline]
    pub fn contains(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u].has(v)
    }

    /// Adds `(u, v)`; returns whether it was newly inserted.
    pub fn insert(&mut self, u: usize, v: usize) -> Result<bool> {
        for node in [u, v] {
            if node >= self.n {
                return Err(Error::NodeOutOfRange { node, n: self.n });
            }
        }
        let fresh = !self.rows[u].has(v);
        self.rows[u] = self.rows[u] | W::bit(v);
        Ok(fresh)
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == W::zero())
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| row.ones().map(move |v| (u, v)))
    }

    /// Successors of `u` in ascending order.
    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> {
        self.rows[u].ones()
    }

    /// Relational composition: `(x, z)` iff `x self y` and `y other z` for some `y`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_carrier(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_carrier(other)?;
        Ok(self.union_unchecked(other))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_carrier(other)?;
        Ok(Self {
            n: self.n,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(&a, &b)| a & b)
                .collect(),
        })
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_carrier(other)?;
        Ok(self.is_subset_unchecked(other))
    }

    /// Smallest transitive superset, made reflexive when `reflexive` is set.
    pub fn closure(&self, reflexive: bool) -> Self {
        let mut rows = self.rows.clone();
        for k in 0..self.n {
            let rk = rows[k];
            let bk = W::bit(k);
            for row in rows.iter_mut() {
                if *row & bk != W::zero() {
                    *row = *row | rk;
                }
            }
        }
        if reflexive {
            for (u, row) in rows.iter_mut().enumerate() {
                *row = *row | W::bit(u);
            }
        }
        Self { n: self.n, rows }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeroed(self.n);
        for (u, v) in self.pairs() {
            t.rows[v] = t.rows[v] | W::bit(u);
        }
        t
    }

    /// `self ; self ⊆ self`.
    pub fn is_transitive(&self) -> bool {
        self.compose_unchecked(self).is_subset_unchecked(self)
    }

    /// Least node related to itself, if any.
    pub fn self_loop(&self) -> Option<usize> {
        (0..self.n).find(|&u| self.rows[u].has(u))
    }

    /// Nodes from which an infinite forward path starts, i.e. nodes that can
    /// reach a cycle. Computed by repeatedly discarding nodes whose
    /// successors have all been discarded.
    pub fn immortal_mask(&self) -> W {
        let mut alive = W::low_mask(self.n);
        loop {
            let mut changed = false;
            for u in alive.ones() {
                if self.rows[u] & alive == W::zero() {
                    alive = alive & !W::bit(u);
                    changed = true;
                }
            }
            if !changed {
                return alive;
            }
        }
    }

    /// No infinite forward path exists. On a finite carrier this is
    /// acyclicity, with self-loops counting as cycles.
    pub fn is_well_founded(&self) -> bool {
        self.immortal_mask() == W::zero()
    }

    /// The least simple cycle under (length, node sequence) order, listed
    /// from its smallest node. `None` iff the relation is well-founded.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        if self.is_well_founded() {
            return None;
        }
        let preds = self.transpose();
        let mut best: Option<(usize, usize, Vec<Option<usize>>)> = None;
        for s in 0..self.n {
            let dist = distances_to(&preds, s);
            let girth = self
                .successors(s)
                .filter_map(|v| dist[v].map(|d| d + 1))
                .min();
            if let Some(len) = girth {
                if best.as_ref().is_none_or(|(l, _, _)| len < *l) {
                    best = Some((len, s, dist));
                }
            }
        }
        let (len, s, dist) = best?;
        let mut cycle = Vec::with_capacity(len);
        cycle.push(s);
        let mut u = s;
        for i in 1..len {
            let remaining = len - i;
            u = self
                .successors(u)
                .find(|&v| dist[v] == Some(remaining))
                .expect("shortest cycle continues");
            cycle.push(u);
        }
        Some(cycle)
    }

    /// Shortest path of at least one step from `from` to `to`, ties broken by
    /// lexicographically least node sequence. Returns the node sequence
    /// including both endpoints.
    pub fn shortest_path_plus(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        // BFS over the successors of `from`, expanding neighbours in ascending
        // order, yields lexicographically least shortest paths.
        let mut parent: Vec<Option<usize>> = vec![None; self.n];
        let mut seen = if from == to { W::zero() } else { W::bit(from) };
        let mut queue = VecDeque::new();
        for v in self.successors(from) {
            if v == to {
                return Some(vec![from, to]);
            }
            seen = seen | W::bit(v);
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            for v in self.successors(u) {
                if seen.has(v) {
                    continue;
                }
                if v == to {
                    let mut path = vec![to, u];
                    let mut w = u;
                    while let Some(p) = parent[w] {
                        path.push(p);
                        w = p;
                    }
                    path.push(from);
                    path.reverse();
                    return Some(path);
                }
                seen = seen | W::bit(v);
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
        None
    }

    /// Re-encode with another row word.
    pub fn convert<V: RowWord>(&self) -> Result<Relation<V>> {
        Relation::from_pairs(self.n, self.pairs())
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for row in out.rows.iter_mut() {
            *row = row.ones().fold(W::zero(), |acc, y| acc | other.rows[y]);
        }
        out
    }

    #[inline]
    pub(crate) fn union_unchecked(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, &b) in out.rows.iter_mut().zip(&other.rows) {
            *a = *a | b;
        }
        out
    }

    #[inline]
    pub(crate) fn is_subset_unchecked(&self, other: &Self) -> bool {
        self.rows
            .iter()
            .zip(&other.rows)
            .all(|(&a, &b)| a & !b == W::zero())
    }

    fn same_carrier(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }
}

pub(crate) fn check_cap<W: RowWord>(n: usize) -> Result<()> {
    if n > W::BITS {
        Err(Error::CarrierTooLarge { n, cap: W::BITS })
    } else {
        Ok(())
    }
}

/// `dist[v]` = length of the shortest path from `v` to `target`, from the
/// transposed relation.
fn distances_to<W: RowWord>(preds: &Relation<W>, target: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; preds.n];
    dist[target] = Some(0);
    let mut queue = VecDeque::from([target]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or_default();
        for v in preds.successors(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

impl<W: RowWord> fmt::Debug for Relation<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(n={}, {})", self.n, self)
    }
}

impl<W: RowWord> fmt::Display for Relation<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (u, v)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({u},{v})")?;
        }
        f.write_str("}")
    }
}
