//! Infinite chains as lassos, an immortality-preserving greedy walk, and
//! the rewriting that turns a multicolored cycle into a monochrome one.
//!
//! Extraction only touches the cycle of a lasso; the stem is a finite prefix
//! and plays no part in whether the infinite tail is monochrome.
//!
//! Rewrites act on the cycle as a cyclic word of steps:
//!
//! * `swallow-A`: a `B`/`C`-step followed by an `A`-step collapses into the
//!   single step covering it, justified by the clause bounding `(B|C)A`.
//! * `prefer-B-detour`: a `C`-step whose source has a `B+` path to some
//!   node on the cycle is replaced, along with the cycle segment it skips,
//!   by that path (`TRIPARTITE` only).
//! * `contract-CB`: a `C`-step followed by a `B`-step collapses into a
//!   single `C`-step.
//! * `erase-B`: a `C`-step followed by a `B`-step collapses into a single
//!   `A`- or `B`-step (`THREE_OF_NINE` only).

use serde::{Deserialize, Serialize};

use crate::criteria::CriterionId;
use crate::error::{Error, Result};
use crate::graph::{Color, TriGraph};
use crate::word::RowWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub from: usize,
    pub color: Color,
    pub to: usize,
}

impl Step {
    pub fn new(from: usize, color: Color, to: usize) -> Self {
        Step { from, color, to }
    }
}

/// An eventually periodic infinite path: `stem` once, then `cycle` forever.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lasso {
    pub stem: Vec<Step>,
    pub cycle: Vec<Step>,
}

impl Lasso {
    pub fn cycle(cycle: Vec<Step>) -> Self {
        Lasso {
            stem: Vec::new(),
            cycle,
        }
    }

    /// The common color of every cycle step, if there is one.
    pub fn cycle_color(&self) -> Option<Color> {
        monochrome(&self.cycle)
    }

    /// First `len` steps of the infinite path.
    pub fn unroll(&self, len: usize) -> Vec<Step> {
        self.stem
            .iter()
            .chain(self.cycle.iter().cycle())
            .take(len)
            .copied()
            .collect()
    }
}

/// What went wrong with a lasso, or `Ok` when it is a valid path in `g`.
pub fn check_lasso<W: RowWord>(g: &TriGraph<W>, l: &Lasso) -> std::result::Result<(), String> {
    if l.cycle.is_empty() {
        return Err("empty cycle".into());
    }
    for (i, s) in l.stem.iter().chain(&l.cycle).enumerate() {
        if !g.has_edge(s.color, s.from, s.to) {
            return Err(format!(
                "step {i} ({}, {}, {}) is not an edge of the graph",
                s.from, s.color, s.to
            ));
        }
    }
    for (i, w) in l.stem.windows(2).enumerate() {
        if w[0].to != w[1].from {
            return Err(format!("stem breaks after step {i}"));
        }
    }
    if let Some(last) = l.stem.last() {
        if last.to != l.cycle[0].from {
            return Err("stem does not end at the cycle start".into());
        }
    }
    let len = l.cycle.len();
    for i in 0..len {
        if l.cycle[i].to != l.cycle[(i + 1) % len].from {
            return Err(format!("cycle breaks after step {i}"));
        }
    }
    Ok(())
}

pub fn validate_lasso<W: RowWord>(g: &TriGraph<W>, l: &Lasso) -> bool {
    check_lasso(g, l).is_ok()
}

/// Walk from `start`, taking an `A`-step to an immortal node whenever one
/// exists and otherwise a `B`- or `C`-step to an immortal node. Ties go to
/// color order `A < B < C`, then the smallest node. The walk is memoryless,
/// so it closes into a cycle at the first repeated node.
pub fn construct_greedy_chain<W: RowWord>(g: &TriGraph<W>, start: usize) -> Result<Lasso> {
    let n = g.n();
    if start >= n {
        return Err(Error::NodeOutOfRange { node: start, n });
    }
    let immortal = g.immortal_mask();
    if !immortal.has(start) {
        return Err(Error::MortalStart(start));
    }
    let mut steps: Vec<Step> = Vec::new();
    let mut visited_at: Vec<Option<usize>> = vec![None; n];
    let mut x = start;
    loop {
        if let Some(i) = visited_at[x] {
            let cycle = steps.split_off(i);
            return Ok(Lasso { stem: steps, cycle });
        }
        visited_at[x] = Some(steps.len());
        let step = Color::ALL
            .into_iter()
            .find_map(|c| {
                (g.color(c).row(x) & immortal)
                    .ones()
                    .next()
                    .map(|y| Step::new(x, c, y))
            })
            .ok_or_else(|| {
                Error::Internal(format!("immortal node {x} has no immortal successor"))
            })?;
        steps.push(step);
        x = step.to;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RewriteKind {
    #[serde(rename = "swallow-A")]
    SwallowA,
    #[serde(rename = "prefer-B-detour")]
    PreferBDetour,
    #[serde(rename = "contract-CB")]
    ContractCb,
    #[serde(rename = "erase-B")]
    EraseB,
}

impl RewriteKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RewriteKind::SwallowA => "swallow-A",
            RewriteKind::PreferBDetour => "prefer-B-detour",
            RewriteKind::ContractCb => "contract-CB",
            RewriteKind::EraseB => "erase-B",
        }
    }
}

impl std::fmt::Display for RewriteKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One splice of the cycle: `removed` steps starting at `position`
/// (wrapping around) are replaced by `inserted`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rewrite {
    pub kind: RewriteKind,
    pub position: usize,
    pub removed: Vec<Step>,
    pub inserted: Vec<Step>,
    /// Endpoints of the replaced segment.
    pub cover: (usize, usize),
    /// Index of the criterion clause whose right-hand side contains `cover`.
    pub clause: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionTrace {
    pub criterion: CriterionId,
    pub rewrites: Vec<Rewrite>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub color: Color,
    pub lasso: Lasso,
    pub trace: ExtractionTrace,
}

/// Rewrite the cycle of `l` into a monochrome cycle, following the proof of
/// `THREE_OF_NINE` or `TRIPARTITE`.
///
/// For `TRIPARTITE` the cycle must be greedy: no `B`/`C`-step may leave a
/// node that has an immortal `A`-successor. Cycles produced by
/// [`construct_greedy_chain`] always are.
pub fn extract_monochrome<W: RowWord>(
    g: &TriGraph<W>,
    l: &Lasso,
    id: CriterionId,
) -> Result<Extraction> {
    if !matches!(id, CriterionId::ThreeOfNine | CriterionId::Tripartite) {
        return Err(Error::Usage(format!(
            "extraction is defined for THREE_OF_NINE and TRIPARTITE, not {id}"
        )));
    }
    check_lasso(g, l).map_err(Error::InvalidLasso)?;
    if !id.criterion().holds_on(g) {
        return Err(Error::CriterionNotSatisfied(id));
    }
    let mut rw = Rewriter {
        g,
        cycle: l.cycle.clone(),
        rewrites: Vec::new(),
        budget: rewrite_budget(l.cycle.len(), g.n()),
    };
    if rw.color().is_none() {
        match id {
            CriterionId::ThreeOfNine => rw.three_of_nine()?,
            _ => {
                require_greedy(g, &l.cycle)?;
                rw.tripartite()?;
            }
        }
    }
    let color = rw
        .color()
        .ok_or_else(|| Error::Internal("rewriting stopped on a multicolored cycle".into()))?;
    let lasso = anchor(l, rw.cycle)?;
    Ok(Extraction {
        color,
        lasso,
        trace: ExtractionTrace {
            criterion: id,
            rewrites: rw.rewrites,
        },
    })
}

/// Re-apply a trace to the input lasso.
pub fn replay_trace(input: &Lasso, trace: &ExtractionTrace) -> Result<Lasso> {
    let mut cycle = input.cycle.clone();
    for (k, r) in trace.rewrites.iter().enumerate() {
        let len = cycle.len();
        if r.position >= len || r.removed.len() > len || r.removed.is_empty() {
            return Err(Error::InvalidLasso(format!("rewrite {k} is out of range")));
        }
        let actual: Vec<Step> = (0..r.removed.len())
            .map(|j| cycle[(r.position + j) % len])
            .collect();
        if actual != r.removed {
            return Err(Error::InvalidLasso(format!(
                "rewrite {k} does not match the cycle"
            )));
        }
        cycle = splice(&cycle, r.position, r.removed.len(), &r.inserted);
    }
    anchor(input, cycle)
}

/// Some monochrome cycle found by searching each color on its own.
pub fn monochrome_cycle_oracle<W: RowWord>(g: &TriGraph<W>) -> Option<(Color, Vec<usize>)> {
    Color::ALL
        .into_iter()
        .find_map(|c| g.color(c).find_cycle().map(|cycle| (c, cycle)))
}

fn rewrite_budget(cycle_len: usize, n: usize) -> usize {
    let n = n.max(2);
    cycle_len * n * n
}

fn require_greedy<W: RowWord>(g: &TriGraph<W>, cycle: &[Step]) -> Result<()> {
    let immortal = g.immortal_mask();
    for (position, s) in cycle.iter().enumerate() {
        if s.color != Color::A && g.a().row(s.from) & immortal != W::zero() {
            return Err(Error::NotGreedy {
                position,
                node: s.from,
                color: s.color,
            });
        }
    }
    Ok(())
}

fn monochrome(steps: &[Step]) -> Option<Color> {
    let first = steps.first()?.color;
    steps.iter().all(|s| s.color == first).then_some(first)
}

/// Replace `removed` cyclic positions from `position` by `inserted`. When the
/// segment wraps, the result starts right after it.
fn splice(cycle: &[Step], position: usize, removed: usize, inserted: &[Step]) -> Vec<Step> {
    let len = cycle.len();
    let mut out = Vec::with_capacity(len - removed + inserted.len());
    if position + removed <= len {
        out.extend_from_slice(&cycle[..position]);
        out.extend_from_slice(inserted);
        out.extend_from_slice(&cycle[position + removed..]);
    } else {
        let wrapped = position + removed - len;
        out.extend_from_slice(&cycle[wrapped..position]);
        out.extend_from_slice(inserted);
    }
    out
}

/// Attach a rewritten cycle to the input's stem: follow the input cycle
/// from its start until reaching a node of the new cycle, and rotate the new
/// cycle to begin there.
fn anchor(input: &Lasso, cycle: Vec<Step>) -> Result<Lasso> {
    let mut stem = input.stem.clone();
    for s in &input.cycle {
        if let Some(p) = cycle.iter().position(|t| t.from == s.from) {
            let mut cycle = cycle;
            cycle.rotate_left(p);
            return Ok(Lasso { stem, cycle });
        }
        stem.push(*s);
    }
    Err(Error::Internal(
        "rewritten cycle shares no node with the input cycle".into(),
    ))
}

struct Rewriter<'g, W: RowWord> {
    g: &'g TriGraph<W>,
    cycle: Vec<Step>,
    rewrites: Vec<Rewrite>,
    budget: usize,
}

impl<W: RowWord> Rewriter<'_, W> {
    fn color(&self) -> Option<Color> {
        monochrome(&self.cycle)
    }

    /// First position `i` whose step and successor satisfy `pred`.
    fn find_pair(&self, pred: impl Fn(Color, Color) -> bool) -> Option<usize> {
        let len = self.cycle.len();
        if len < 2 {
            return None;
        }
        (0..len).find(|&i| pred(self.cycle[i].color, self.cycle[(i + 1) % len].color))
    }

    fn ends_of_pair(&self, i: usize) -> (usize, usize) {
        let len = self.cycle.len();
        (self.cycle[i].from, self.cycle[(i + 1) % len].to)
    }

    fn cover(&self, x: usize, z: usize, prefs: &[Color]) -> Option<Step> {
        prefs
            .iter()
            .find(|&&c| self.g.has_edge(c, x, z))
            .map(|&c| Step::new(x, c, z))
    }

    fn apply(
        &mut self,
        kind: RewriteKind,
        position: usize,
        removed: usize,
        inserted: Vec<Step>,
        clause: usize,
    ) -> Result<()> {
        if self.rewrites.len() >= self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let len = self.cycle.len();
        let removed_steps = (0..removed)
            .map(|j| self.cycle[(position + j) % len])
            .collect();
        let cover = (
            inserted.first().map_or(0, |s| s.from),
            inserted.last().map_or(0, |s| s.to),
        );
        self.cycle = splice(&self.cycle, position, removed, &inserted);
        self.rewrites.push(Rewrite {
            kind,
            position,
            removed: removed_steps,
            inserted,
            cover,
            clause,
        });
        Ok(())
    }

    // BA ∪ CA ∪ CB ⊆ A ∪ B ∪ C: every descending pair (a later color
    // followed by an earlier one) collapses to one step, so the cycle shrinks
    // until its colors no longer descend anywhere, i.e. until it is
    // monochrome.
    fn three_of_nine(&mut self) -> Result<()> {
        use Color::*;
        while self.color().is_none() {
            if let Some(i) = self.find_pair(|s, t| s != A && t == A) {
                let (x, z) = self.ends_of_pair(i);
                let step = self
                    .cover(x, z, &[B, C, A])
                    .ok_or_else(|| uncovered(x, z))?;
                self.apply(RewriteKind::SwallowA, i, 2, vec![step], 0)?;
            } else if let Some(i) = self.find_pair(|s, t| s == C && t == B) {
                let (x, z) = self.ends_of_pair(i);
                let step = self
                    .cover(x, z, &[C, B, A])
                    .ok_or_else(|| uncovered(x, z))?;
                let kind = if step.color == C {
                    RewriteKind::ContractCb
                } else {
                    RewriteKind::EraseB
                };
                self.apply(kind, i, 2, vec![step], 0)?;
            } else {
                return Err(Error::Internal(
                    "multicolored cycle without a descending pair".into(),
                ));
            }
        }
        Ok(())
    }

    // Greedy input: B/C-steps leave nodes with no immortal A-successor, so a
    // (B|C)A pair cannot be covered through A(A|B|C)* and collapses to a
    // B- or C-step from the same node. Once A is gone, C-steps with a B+
    // route to the cycle are rerouted; the remaining CB pairs can then only
    // be covered by C.
    fn tripartite(&mut self) -> Result<()> {
        use Color::*;
        while let Some(i) = self.find_pair(|s, t| s != A && t == A) {
            let (x, z) = self.ends_of_pair(i);
            let step = self.cover(x, z, &[B, C]).ok_or_else(|| uncovered(x, z))?;
            self.apply(RewriteKind::SwallowA, i, 2, vec![step], 0)?;
        }
        if self.color().is_some() {
            return Ok(());
        }
        while let Some((i, skipped, path)) = self.b_detour() {
            let steps = path.windows(2).map(|w| Step::new(w[0], B, w[1])).collect();
            self.apply(RewriteKind::PreferBDetour, i, skipped, steps, 1)?;
        }
        while let Some(i) = self.find_pair(|s, t| s == C && t == B) {
            let (x, z) = self.ends_of_pair(i);
            let step = self.cover(x, z, &[C]).ok_or_else(|| uncovered(x, z))?;
            self.apply(RewriteKind::ContractCb, i, 2, vec![step], 1)?;
        }
        Ok(())
    }

    /// First `C`-step with a `B+` route to a cycle node. Among targets, the
    /// one furthest along the cycle wins, a full lap (back to the step's own
    /// source) first of all. Returns the position, the number of steps the
    /// route skips, and the route's nodes.
    fn b_detour(&self) -> Option<(usize, usize, Vec<usize>)> {
        let len = self.cycle.len();
        (0..len)
            .filter(|&i| self.cycle[i].color == Color::C)
            .find_map(|i| {
                let x = self.cycle[i].from;
                (1..=len).rev().find_map(|d| {
                    let target = self.cycle[(i + d) % len].from;
                    self.g
                        .b()
                        .shortest_path_plus(x, target)
                        .map(|path| (i, d, path))
                })
            })
    }
}

fn uncovered(x: usize, z: usize) -> Error {
    Error::Internal(format!("no admissible covering step for ({x}, {z})"))
}
