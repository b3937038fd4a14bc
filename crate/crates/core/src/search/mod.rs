//! Exhaustive and sampled scans over small colored graphs: soundness of the
//! criteria, rediscovery of counterexamples, and criterion comparisons.
//!
//! Work is split into chunks that do not depend on the worker count (one
//! chunk per `C` part when exhaustive, one generator stream per chunk when
//! sampling), and chunk results are merged in chunk order, so reports are
//! identical for any number of workers.

mod space;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use space::{
    enumerate_graphs, enumerate_graphs_with, GraphSpace, GENERATOR, MAX_EXHAUSTIVE_BITS,
    SAMPLE_CHUNK,
};

use crate::chain::{check_lasso, construct_greedy_chain, extract_monochrome, replay_trace};
use crate::criteria::{clique_guaranteed, clique_witness, Criterion, CriterionId};
use crate::error::{Error, Result};
use crate::graph::{GraphRecord, TriGraph};
use crate::relation::Relation;
use crate::word::RowWord;

/// Exhaustive find-first searches stop early, so they may go beyond
/// [`MAX_EXHAUSTIVE_BITS`]; this caps the slots per color instead. Twelve
/// slots is four nodes, about 1.6e8 acyclic triples in the worst case.
pub const MAX_SEARCH_SLOTS: usize = 12;

/// Failures kept verbatim in an extraction scan report.
const MAX_LISTED_FAILURES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub nodes: usize,
    pub mode: ScanMode,
    /// Include diagonal slots in the graph space.
    pub self_loops: bool,
    /// Restrict comparisons to graphs whose colors are all well-founded.
    /// Soundness and counterexample scans always require it.
    pub require_colors_wf: bool,
    /// Worker threads; 0 picks the rayon default.
    pub workers: usize,
}

impl ScanConfig {
    pub fn exhaustive(nodes: usize) -> Self {
        ScanConfig {
            nodes,
            mode: ScanMode::Exhaustive,
            self_loops: false,
            require_colors_wf: false,
            workers: 0,
        }
    }

    pub fn sampled(nodes: usize, count: u64, seed: u64) -> Self {
        ScanConfig {
            mode: ScanMode::Sample { count, seed },
            ..Self::exhaustive(nodes)
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_self_loops(mut self, self_loops: bool) -> Self {
        self.self_loops = self_loops;
        self
    }

    pub fn with_colors_wf(mut self, require: bool) -> Self {
        self.require_colors_wf = require;
        self
    }

    fn validate(&self) -> Result<()> {
        if let ScanMode::Sample { count: 0, .. } = self.mode {
            return Err(Error::Usage("sample mode needs at least one sample".into()));
        }
        Ok(())
    }

    fn space_for<W: RowWord>(&self, ids: &[CriterionId]) -> Result<GraphSpace> {
        self.validate()?;
        let mut space = GraphSpace::new(self.nodes, self.self_loops)?;
        space.check_word::<W>()?;
        if ids.iter().any(|id| id.requires_empty_c()) {
            space = space.without_c();
        }
        Ok(space)
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanKind {
    Soundness,
    Counterexample,
    Compare,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonCounts {
    pub both: u64,
    pub left_only: u64,
    pub right_only: u64,
    pub neither: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub counts: ComparisonCounts,
    /// First graph, in scan order, where the left criterion holds and the right fails.
    pub left_only_witness: Option<GraphRecord>,
    pub right_only_witness: Option<GraphRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub scan: ScanKind,
    pub criteria: Vec<CriterionId>,
    pub nodes: usize,
    pub mode: ScanMode,
    pub self_loops: bool,
    pub generator: Option<String>,
    pub graphs_examined: u64,
    /// Graphs with well-founded colors, a cyclic union, and the criterion holding.
    pub counterexamples: Vec<GraphRecord>,
    pub comparison: Option<Comparison>,
    pub elapsed_ms: u64,
}

impl ScanReport {
    fn new(kind: ScanKind, criteria: Vec<CriterionId>, cfg: &ScanConfig) -> Self {
        ScanReport {
            scan: kind,
            criteria,
            nodes: cfg.nodes,
            mode: cfg.mode,
            self_loops: cfg.self_loops,
            generator: matches!(cfg.mode, ScanMode::Sample { .. }).then(|| GENERATOR.to_string()),
            graphs_examined: 0,
            counterexamples: Vec::new(),
            comparison: None,
            elapsed_ms: 0,
        }
    }

    /// Soundness scans expect no counterexample; counterexample searches
    /// expect one; comparisons have no expectation.
    pub fn expectation_met(&self) -> bool {
        match self.scan {
            ScanKind::Soundness => self.counterexamples.is_empty(),
            ScanKind::Counterexample => !self.counterexamples.is_empty(),
            ScanKind::Compare => true,
        }
    }
}

/// Well-founded colors, cyclic union, and `criterion` holding.
pub fn is_counterexample<W: RowWord>(g: &TriGraph<W>, criterion: &Criterion) -> bool {
    g.colors_well_founded().iter().all(|&wf| wf) && !g.union_well_founded() && criterion.holds_on(g)
}

/// Every graph in the configured space whose colors are well-founded, whose
/// union is cyclic, and on which the sound criterion `id` holds.
pub fn soundness_scan<W: RowWord>(cfg: &ScanConfig, id: CriterionId) -> Result<ScanReport> {
    if !id.is_sound() {
        return Err(Error::Usage(format!(
            "{id} is not a sound criterion; search for a counterexample instead"
        )));
    }
    let started = Instant::now();
    let space = cfg.space_for::<W>(&[id])?;
    let criterion = id.criterion();
    let (examined, chunks) =
        fold_space::<W, Vec<GraphRecord>, _>(cfg, &space, true, |found, g| {
            if !g.union_well_founded() && criterion.holds_on(g) {
                found.push(GraphRecord::from(g));
            }
        })?;
    let mut report = ScanReport::new(ScanKind::Soundness, vec![id], cfg);
    report.graphs_examined = examined;
    report.counterexamples = chunks.into_iter().flatten().collect();
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// First counterexample to `id` in search order, with the count of graphs
/// visited up to and including it.
///
/// Exhaustive mode walks carrier sizes `1..=nodes` in ascending order and,
/// within a size, canonical bitmask order. Sample mode draws at `nodes` only.
pub fn counterexample_search<W: RowWord>(cfg: &ScanConfig, id: CriterionId) -> Result<ScanReport> {
    let started = Instant::now();
    let criterion = id.criterion();
    let mut report = ScanReport::new(ScanKind::Counterexample, vec![id], cfg);
    match cfg.mode {
        ScanMode::Exhaustive => {
            let spaces = (1..=cfg.nodes)
                .map(|n| {
                    let space = ScanConfig { nodes: n, ..cfg.clone() }.space_for::<W>(&[id])?;
                    if space.slot_count() > MAX_SEARCH_SLOTS {
                        return Err(Error::Usage(format!(
                            "exhaustive search at {n} nodes exceeds {MAX_SEARCH_SLOTS} slots per color"
                        )));
                    }
                    Ok(space)
                })
                .collect::<Result<Vec<_>>>()?;
            let mut examined = 0u64;
            for space in &spaces {
                match first_in_canonical_order::<W>(space, criterion) {
                    Some((g, index)) => {
                        examined += index as u64 + 1;
                        report.counterexamples.push(GraphRecord::from(&g));
                        break;
                    }
                    None => examined += space.graph_count().unwrap_or(u64::MAX),
                }
            }
            report.graphs_examined = examined;
        }
        ScanMode::Sample { count, seed } => {
            let space = cfg.space_for::<W>(&[id])?;
            let mut examined = 0u64;
            'chunks: for chunk in 0..count.div_ceil(SAMPLE_CHUNK) {
                let len = SAMPLE_CHUNK.min(count - chunk * SAMPLE_CHUNK);
                for parts in space.sample_chunk(seed, chunk, len) {
                    examined += 1;
                    let g = space.graph::<W>(parts);
                    if is_counterexample(&g, criterion) {
                        report.counterexamples.push(GraphRecord::from(&g));
                        break 'chunks;
                    }
                }
            }
            report.graphs_examined = examined;
        }
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// The graph reported by [`counterexample_search`], if any.
pub fn find_counterexample<W: RowWord>(
    cfg: &ScanConfig,
    id: CriterionId,
) -> Result<Option<TriGraph<W>>> {
    counterexample_search::<W>(cfg, id)?
        .counterexamples
        .first()
        .map(|r| r.to_graph())
        .transpose()
}

fn first_in_canonical_order<W: RowWord>(
    space: &GraphSpace,
    criterion: &Criterion,
) -> Option<(TriGraph<W>, u128)> {
    let acyclic = space.part_list::<W>(true);
    let relations: Vec<Relation<W>> = acyclic.iter().map(|&p| space.relation(p)).collect();
    let c_range = if space.c_empty() {
        0..1
    } else {
        0..acyclic.len()
    };
    for ci in c_range {
        for (bi, b) in relations.iter().enumerate() {
            for (ai, a) in relations.iter().enumerate() {
                let c = if space.c_empty() {
                    Relation::zeroed(space.n())
                } else {
                    relations[ci].clone()
                };
                let g = TriGraph::new(a.clone(), b.clone(), c).expect("shared carrier");
                if !g.union_well_founded() && criterion.holds_on(&g) {
                    let c_part = if space.c_empty() { 0 } else { acyclic[ci] };
                    let index = space.index_of([acyclic[ai], acyclic[bi], c_part]);
                    return Some((g, index));
                }
            }
        }
    }
    None
}

/// Count how often each of `left`, `right` holds over the configured space
/// and keep the first one-sided witness in each direction.
pub fn compare_criteria<W: RowWord>(
    cfg: &ScanConfig,
    left: CriterionId,
    right: CriterionId,
) -> Result<ScanReport> {
    let started = Instant::now();
    let space = cfg.space_for::<W>(&[left, right])?;
    let (l, r) = (left.criterion(), right.criterion());
    let (examined, chunks) =
        fold_space::<W, Comparison, _>(cfg, &space, cfg.require_colors_wf, |acc, g| {
            match (l.holds_on(g), r.holds_on(g)) {
                (true, true) => acc.counts.both += 1,
                (false, false) => acc.counts.neither += 1,
                (true, false) => {
                    acc.counts.left_only += 1;
                    acc.left_only_witness
                        .get_or_insert_with(|| GraphRecord::from(g));
                }
                (false, true) => {
                    acc.counts.right_only += 1;
                    acc.right_only_witness
                        .get_or_insert_with(|| GraphRecord::from(g));
                }
            }
        })?;
    let mut merged = Comparison::default();
    for chunk in chunks {
        merged.counts.both += chunk.counts.both;
        merged.counts.left_only += chunk.counts.left_only;
        merged.counts.right_only += chunk.counts.right_only;
        merged.counts.neither += chunk.counts.neither;
        if merged.left_only_witness.is_none() {
            merged.left_only_witness = chunk.left_only_witness;
        }
        if merged.right_only_witness.is_none() {
            merged.right_only_witness = chunk.right_only_witness;
        }
    }
    // Graphs skipped by the well-foundedness filter hold neither side's
    // interest, so they are not counted.
    let mut report = ScanReport::new(ScanKind::Compare, vec![left, right], cfg);
    report.graphs_examined = examined;
    report.comparison = Some(merged);
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionFailure {
    pub graph: GraphRecord,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionScanReport {
    pub graphs_examined: u64,
    /// Graphs with a cyclic union on which the criterion holds.
    pub applicable: u64,
    /// Extractions whose output validated, named a cyclic color confirmed
    /// by the per-color oracle, and replayed exactly.
    pub confirmed: u64,
    pub budget_exhaustions: u64,
    pub failure_count: u64,
    pub failures: Vec<ExtractionFailure>,
}

/// Run greedy construction and monochrome extraction on every applicable
/// graph in the space and cross-check each result.
pub fn extraction_scan<W: RowWord>(
    cfg: &ScanConfig,
    id: CriterionId,
) -> Result<ExtractionScanReport> {
    if !matches!(id, CriterionId::ThreeOfNine | CriterionId::Tripartite) {
        return Err(Error::Usage(format!("no extraction procedure for {id}")));
    }
    let space = cfg.space_for::<W>(&[id])?;
    let (examined, chunks) =
        fold_space::<W, ExtractionScanReport, _>(cfg, &space, cfg.require_colors_wf, |acc, g| {
            let immortal = g.immortal_mask();
            if immortal == W::zero() {
                return;
            }
            // extract_monochrome checks the criterion itself; a graph where it
            // fails is simply out of scope
            let outcome = check_extraction(g, id, immortal.trailing_zeros() as usize);
            if let Err(Error::CriterionNotSatisfied(_)) = outcome {
                return;
            }
            acc.applicable += 1;
            match outcome {
                Ok(()) => acc.confirmed += 1,
                Err(e) => {
                    if matches!(e, Error::BudgetExhausted(_)) {
                        acc.budget_exhaustions += 1;
                    }
                    acc.failure_count += 1;
                    if acc.failures.len() < MAX_LISTED_FAILURES {
                        acc.failures.push(ExtractionFailure {
                            graph: GraphRecord::from(g),
                            reason: e.to_string(),
                        });
                    }
                }
            }
        })?;
    let mut report = ExtractionScanReport {
        graphs_examined: examined,
        ..Default::default()
    };
    for chunk in chunks {
        report.applicable += chunk.applicable;
        report.confirmed += chunk.confirmed;
        report.budget_exhaustions += chunk.budget_exhaustions;
        report.failure_count += chunk.failure_count;
        for f in chunk.failures {
            if report.failures.len() < MAX_LISTED_FAILURES {
                report.failures.push(f);
            }
        }
    }
    Ok(report)
}

fn check_extraction<W: RowWord>(g: &TriGraph<W>, id: CriterionId, start: usize) -> Result<()> {
    let input = construct_greedy_chain(g, start)?;
    let ex = extract_monochrome(g, &input, id)?;
    check_lasso(g, &ex.lasso).map_err(|e| Error::Internal(format!("output lasso: {e}")))?;
    if ex.lasso.cycle_color() != Some(ex.color) {
        return Err(Error::Internal("output cycle is not monochrome".into()));
    }
    // the per-color search behind monochrome_cycle_oracle, run on the
    // extracted color only
    if g.color(ex.color).find_cycle().is_none() {
        return Err(Error::Internal(format!(
            "oracle finds no cycle in color {}",
            ex.color
        )));
    }
    if replay_trace(&input, &ex.trace)? != ex.lasso {
        return Err(Error::Internal("trace replay diverged".into()));
    }
    Ok(())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueReport {
    pub nodes: usize,
    /// Number of transitive relations on the carrier (self-loops allowed).
    pub transitive_relations: u64,
    pub graphs_examined: u64,
    /// Graphs on which [`clique_guaranteed`] holds.
    pub applicable: u64,
    pub witnessed: u64,
    pub missing: Vec<GraphRecord>,
}

/// Check [`clique_witness`] on every graph whose three colors are transitive,
/// self-loops included.
pub fn clique_scan<W: RowWord>(nodes: usize, workers: usize) -> Result<CliqueReport> {
    let space = GraphSpace::new(nodes, true)?;
    space.check_word::<W>()?;
    if space.slot_count() > MAX_SEARCH_SLOTS {
        return Err(Error::Usage(format!(
            "transitive enumeration at {nodes} nodes exceeds {MAX_SEARCH_SLOTS} slots"
        )));
    }
    let transitive: Vec<Relation<W>> = (0..space.parts())
        .map(|p| space.relation::<W>(p))
        .filter(|r| r.is_transitive())
        .collect();
    let pool = ScanConfig::exhaustive(nodes).with_workers(workers).pool()?;
    let chunks: Vec<CliqueReport> = pool.install(|| {
        transitive
            .par_iter()
            .map(|c| {
                let mut acc = CliqueReport::default();
                for b in &transitive {
                    for a in &transitive {
                        acc.graphs_examined += 1;
                        let g =
                            TriGraph::new(a.clone(), b.clone(), c.clone()).expect("shared carrier");
                        if clique_guaranteed(&g) {
                            acc.applicable += 1;
                            match clique_witness(&g) {
                                Some((color, x)) if g.has_edge(color, x, x) => acc.witnessed += 1,
                                _ => acc.missing.push(GraphRecord::from(&g)),
                            }
                        }
                    }
                }
                acc
            })
            .collect()
    });
    let mut report = CliqueReport {
        nodes,
        transitive_relations: transitive.len() as u64,
        ..Default::default()
    };
    for chunk in chunks {
        report.graphs_examined += chunk.graphs_examined;
        report.applicable += chunk.applicable;
        report.witnessed += chunk.witnessed;
        report.missing.extend(chunk.missing);
    }
    Ok(report)
}

/// Fold `visit` over every graph of the space, one accumulator per chunk,
/// returned in chunk order together with the number of graphs accounted
/// for. With `acyclic_only`, graphs with a cyclic color are counted but not
/// visited.
fn fold_space<W, A, F>(
    cfg: &ScanConfig,
    space: &GraphSpace,
    acyclic_only: bool,
    visit: F,
) -> Result<(u64, Vec<A>)>
where
    W: RowWord,
    A: Default + Send,
    F: Fn(&mut A, &TriGraph<W>) + Sync,
{
    let pool = cfg.pool()?;
    match cfg.mode {
        ScanMode::Exhaustive => {
            space.check_exhaustive()?;
            let parts = space.part_list::<W>(acyclic_only);
            let relations: Vec<Relation<W>> = parts.iter().map(|&p| space.relation(p)).collect();
            let c_relations: Vec<Relation<W>> = if space.c_empty() {
                vec![Relation::zeroed(space.n())]
            } else {
                relations.clone()
            };
            let chunks = pool.install(|| {
                c_relations
                    .par_iter()
                    .map(|c| {
                        let mut acc = A::default();
                        for b in &relations {
                            for a in &relations {
                                let g = TriGraph::new(a.clone(), b.clone(), c.clone())
                                    .expect("shared carrier");
                                visit(&mut acc, &g);
                            }
                        }
                        acc
                    })
                    .collect()
            });
            let total = space.graph_count().expect("within exhaustive budget");
            Ok((total, chunks))
        }
        ScanMode::Sample { count, seed } => {
            let filter = AcyclicFilter::new::<W>(space, acyclic_only);
            let n_chunks = count.div_ceil(SAMPLE_CHUNK);
            let chunks = pool.install(|| {
                (0..n_chunks)
                    .into_par_iter()
                    .map(|chunk| {
                        let len = SAMPLE_CHUNK.min(count - chunk * SAMPLE_CHUNK);
                        let mut acc = A::default();
                        for parts in space.sample_chunk(seed, chunk, len) {
                            if !filter.admits::<W>(space, parts) {
                                continue;
                            }
                            visit(&mut acc, &space.graph(parts));
                        }
                        acc
                    })
                    .collect()
            });
            Ok((count, chunks))
        }
    }
}

/// Per-color well-foundedness test on part bitmasks, tabulated when the
/// part space is small.
enum AcyclicFilter {
    Off,
    Table(Vec<bool>),
    Direct,
}

impl AcyclicFilter {
    const TABLE_LIMIT: u64 = 1 << 16;

    fn new<W: RowWord>(space: &GraphSpace, on: bool) -> Self {
        if !on {
            AcyclicFilter::Off
        } else if space.parts() <= Self::TABLE_LIMIT {
            AcyclicFilter::Table(
                (0..space.parts())
                    .map(|p| space.relation::<W>(p).is_well_founded())
                    .collect(),
            )
        } else {
            AcyclicFilter::Direct
        }
    }

    fn admits<W: RowWord>(&self, space: &GraphSpace, parts: [u64; 3]) -> bool {
        match self {
            AcyclicFilter::Off => true,
            AcyclicFilter::Table(t) => parts.iter().all(|&p| t[p as usize]),
            AcyclicFilter::Direct => parts
                .iter()
                .all(|&p| space.relation::<W>(p).is_well_founded()),
        }
    }
}
