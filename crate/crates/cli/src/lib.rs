//! Front end for `wfu`: graph files, DOT export, JSON reports and the
//! subcommand dispatcher behind the binary.

pub mod dot;
pub mod graph_file;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;
use wfu_core::search::{
    compare_criteria, counterexample_search, soundness_scan, ScanConfig, ScanMode, ScanReport,
};
use wfu_core::{
    construct_greedy_chain, evaluate_criterion, extract_monochrome, CriterionId, CriterionReport,
    GraphRecord, Lasso, RowWord, Step, TriGraph,
};

pub use dot::render_dot;
pub use graph_file::{parse_graph, serialize_graph, ParseError, FIXTURES};
pub use report::{digest, Report, WitnessReport, SCHEMA_VERSION, TOOL_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] wfu_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "wfu",
    version,
    about = "Check well-foundedness criteria on three-colored graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a criterion on a graph file.
    Check {
        file: PathBuf,
        #[arg(long)]
        criterion: CriterionId,
        #[arg(long)]
        json: bool,
    },
    /// Report a union cycle, optionally rewritten into a monochrome one.
    Witness {
        file: PathBuf,
        /// THREE_OF_NINE or TRIPARTITE.
        #[arg(long)]
        criterion: Option<CriterionId>,
        #[arg(long)]
        json: bool,
    },
    /// Soundness scan for sound criteria, counterexample search otherwise.
    Scan {
        #[arg(long)]
        criterion: CriterionId,
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        json: bool,
    },
    /// Count where two criteria agree and find one-sided witnesses.
    Compare {
        #[arg(long)]
        left: CriterionId,
        #[arg(long)]
        right: CriterionId,
        #[command(flatten)]
        space: SpaceArgs,
        /// Only consider graphs whose three colors are well-founded.
        #[arg(long)]
        colors_wf: bool,
        #[arg(long)]
        json: bool,
    },
    /// Write the G1, G2, G3 graph files.
    Fixtures {
        #[arg(long)]
        dir: PathBuf,
    },
    /// Render a graph file as Graphviz DOT.
    Dot {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct SpaceArgs {
    #[arg(long)]
    nodes: usize,
    #[arg(long, conflicts_with = "samples", required_unless_present = "samples")]
    exhaustive: bool,
    #[arg(long, requires = "seed")]
    samples: Option<u64>,
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
    /// Include diagonal edge slots.
    #[arg(long)]
    self_loops: bool,
    /// Worker threads; 0 uses every core. Never changes the result.
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

impl SpaceArgs {
    fn config(&self) -> ScanConfig {
        let cfg = match self.samples {
            Some(count) => ScanConfig::sampled(self.nodes, count, self.seed.unwrap_or_default()),
            None => ScanConfig::exhaustive(self.nodes),
        };
        cfg.with_self_loops(self.self_loops)
            .with_workers(self.workers)
    }
}

/// Run one invocation. Returns the exit status: 0 for a positive verdict,
/// 1 for a negative one, 2 for usage and input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_ERROR;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "wfu: {e}");
            EXIT_ERROR
        }
    }
}

struct Output {
    code: i32,
    text: String,
}

impl Output {
    fn new(
        report: &Report,
        json: bool,
        summary: impl FnOnce(&mut String),
    ) -> Result<Self, CliError> {
        let text = if json {
            let mut s = serde_json::to_string_pretty(report)?;
            s.push('\n');
            s
        } else {
            let mut s = String::new();
            summary(&mut s);
            s
        };
        Ok(Output {
            code: report.exit_code,
            text,
        })
    }
}

fn dispatch(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Check {
            file,
            criterion,
            json,
        } => check(&file, criterion, json),
        Command::Witness {
            file,
            criterion,
            json,
        } => witness(&file, criterion, json),
        Command::Scan {
            criterion,
            space,
            json,
        } => scan(criterion, &space, json),
        Command::Compare {
            left,
            right,
            space,
            colors_wf,
            json,
        } => compare(left, right, &space, colors_wf, json),
        Command::Fixtures { dir } => fixtures(&dir),
        Command::Dot { file, out } => dot(&file, &out),
    }
}

fn read_graph(path: &Path) -> Result<(TriGraph, String), CliError> {
    let display = path.display().to_string();
    let bytes = std::fs::read(path).map_err(|source| CliError::Io {
        path: display.clone(),
        source,
    })?;
    let text = String::from_utf8_lossy(&bytes);
    let g = parse_graph(&text).map_err(|source| CliError::Parse {
        path: display,
        source,
    })?;
    Ok((g, digest(&bytes)))
}

/// Run `$body` with `$h` bound to `$g` at the narrowest row word that fits.
macro_rules! with_word {
    ($g:expr, |$h:ident| $body:expr) => {
        if $g.n() <= 8 {
            let $h = $g.convert::<u8>()?;
            $body
        } else {
            let $h = $g.clone();
            $body
        }
    };
}

fn check(path: &Path, id: CriterionId, json: bool) -> Result<Output, CliError> {
    let (g, input_digest) = read_graph(path)?;
    let result = with_word!(g, |h| evaluate_criterion(&h, id)?);
    let mut report = Report::new("check", input_digest);
    report.criteria = vec![id];
    report.exit_code = if result.holds { EXIT_OK } else { EXIT_NEGATIVE };
    report.check = Some(result.clone());
    Output::new(&report, json, |s| check_summary(s, path, &result))
}

fn check_summary(s: &mut String, path: &Path, r: &CriterionReport) {
    let yes = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(s, "{} on {}", r.criterion, path.display());
    let _ = writeln!(s, "holds: {}", r.holds);
    let _ = writeln!(
        s,
        "colors well-founded: A={} B={} C={}",
        yes(r.colors_wf[0]),
        yes(r.colors_wf[1]),
        yes(r.colors_wf[2])
    );
    let _ = writeln!(s, "union well-founded: {}", yes(r.union_wf));
    if r.violations.is_empty() {
        let _ = writeln!(s, "violations: none");
    }
    for v in &r.violations {
        let _ = writeln!(
            s,
            "violation: clause {} pair ({}, {})",
            v.clause, v.pair.0, v.pair.1
        );
    }
}

fn witness(path: &Path, id: Option<CriterionId>, json: bool) -> Result<Output, CliError> {
    let (g, input_digest) = read_graph(path)?;
    if let Some(id) = id {
        if !matches!(id, CriterionId::ThreeOfNine | CriterionId::Tripartite) {
            return Err(wfu_core::Error::Usage(format!(
                "witness extraction needs THREE_OF_NINE or TRIPARTITE, not {id}"
            ))
            .into());
        }
    }
    let w = with_word!(g, |h| witness_report(&h, id)?);
    let mut report = Report::new("witness", input_digest);
    report.criteria = id.into_iter().collect();
    let found = match id {
        Some(_) => w.extraction.is_some(),
        None => w.union_cycle.is_some(),
    };
    report.exit_code = if found { EXIT_OK } else { EXIT_NEGATIVE };
    report.witness = Some(w.clone());
    Output::new(&report, json, |s| witness_summary(s, &w))
}

fn witness_report<W: RowWord>(
    g: &TriGraph<W>,
    id: Option<CriterionId>,
) -> Result<WitnessReport, CliError> {
    let mut w = WitnessReport {
        union_cycle: g.union().find_cycle(),
        greedy: None,
        extraction: None,
        note: None,
    };
    let Some(id) = id else { return Ok(w) };
    let Some(start) = g.immortal_nodes().first().copied() else {
        w.note = Some("the union is well-founded; there is no infinite chain".into());
        return Ok(w);
    };
    let greedy = construct_greedy_chain(g, start)?;
    match extract_monochrome(g, &greedy, id) {
        Ok(ex) => w.extraction = Some(ex),
        Err(wfu_core::Error::CriterionNotSatisfied(_)) => {
            w.note = Some(format!(
                "{id} does not hold, so no monochrome chain is guaranteed"
            ));
        }
        Err(e) => return Err(e.into()),
    }
    w.greedy = Some(greedy);
    Ok(w)
}

fn fmt_steps(steps: &[Step]) -> String {
    if steps.is_empty() {
        return "(empty)".into();
    }
    steps
        .iter()
        .map(|s| format!("{} -{}-> {}", s.from, s.color, s.to))
        .collect::<Vec<_>>()
        .join(", ")
}

fn fmt_lasso(l: &Lasso) -> String {
    format!(
        "stem [{}] cycle [{}]",
        fmt_steps(&l.stem),
        fmt_steps(&l.cycle)
    )
}

fn witness_summary(s: &mut String, w: &WitnessReport) {
    match &w.union_cycle {
        Some(cycle) => {
            let nodes: Vec<String> = cycle
                .iter()
                .chain(cycle.first())
                .map(|x| x.to_string())
                .collect();
            let _ = writeln!(s, "union cycle: {}", nodes.join(" -> "));
        }
        None => {
            let _ = writeln!(s, "union well-founded: no cycle");
        }
    }
    if let Some(l) = &w.greedy {
        let _ = writeln!(s, "greedy chain: {}", fmt_lasso(l));
    }
    if let Some(ex) = &w.extraction {
        let _ = writeln!(s, "monochrome color: {}", ex.color);
        let _ = writeln!(s, "monochrome chain: {}", fmt_lasso(&ex.lasso));
        let _ = writeln!(s, "rewrites: {}", ex.trace.rewrites.len());
        for r in &ex.trace.rewrites {
            let _ = writeln!(
                s,
                "  {} at {}: [{}] => [{}]",
                r.kind,
                r.position,
                fmt_steps(&r.removed),
                fmt_steps(&r.inserted)
            );
        }
    }
    if let Some(note) = &w.note {
        let _ = writeln!(s, "note: {note}");
    }
}

/// Everything that determines a scan's result; its digest identifies the run.
#[derive(Serialize)]
struct ScanInput<'a> {
    command: &'a str,
    criteria: &'a [CriterionId],
    nodes: usize,
    mode: ScanMode,
    self_loops: bool,
    require_colors_wf: bool,
}

fn scan_report(command: &str, cfg: &ScanConfig, scan: ScanReport) -> Result<Report, CliError> {
    let input = ScanInput {
        command,
        criteria: &scan.criteria,
        nodes: cfg.nodes,
        mode: cfg.mode,
        self_loops: cfg.self_loops,
        require_colors_wf: cfg.require_colors_wf,
    };
    let mut report = Report::new(command, digest(&serde_json::to_vec(&input)?));
    report.criteria = scan.criteria.clone();
    if let ScanMode::Sample { seed, .. } = cfg.mode {
        report.seed = Some(seed);
    }
    report.scan = Some(scan);
    Ok(report)
}

fn scan(id: CriterionId, space: &SpaceArgs, json: bool) -> Result<Output, CliError> {
    let cfg = space.config();
    // enumeration spaces stop at 8 nodes, so the narrow word always fits
    let scan = if id.is_sound() {
        soundness_scan::<u8>(&cfg, id)?
    } else {
        counterexample_search::<u8>(&cfg, id)?
    };
    let mut report = scan_report("scan", &cfg, scan)?;
    let scan = report.scan.as_ref().expect("just set");
    report.exit_code = if scan.expectation_met() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    Output::new(&report, json, |s| {
        let scan = report.scan.as_ref().expect("just set");
        let what = if id.is_sound() {
            "soundness scan"
        } else {
            "counterexample search"
        };
        let _ = writeln!(s, "{what} for {id} at {} nodes", cfg.nodes);
        let _ = writeln!(s, "graphs examined: {}", scan.graphs_examined);
        let _ = writeln!(s, "counterexamples: {}", scan.counterexamples.len());
        for g in scan.counterexamples.iter().take(3) {
            let _ = writeln!(s, "  {}", fmt_record(g));
        }
        let verdict = if scan.expectation_met() {
            "as expected"
        } else {
            "UNEXPECTED"
        };
        let _ = writeln!(s, "verdict: {verdict}");
    })
}

fn compare(
    left: CriterionId,
    right: CriterionId,
    space: &SpaceArgs,
    colors_wf: bool,
    json: bool,
) -> Result<Output, CliError> {
    let cfg = space.config().with_colors_wf(colors_wf);
    let scan = compare_criteria::<u8>(&cfg, left, right)?;
    let report = scan_report("compare", &cfg, scan)?;
    Output::new(&report, json, |s| {
        let scan = report.scan.as_ref().expect("just set");
        let cmp = scan.comparison.as_ref().expect("comparison scan");
        let _ = writeln!(s, "{left} vs {right} at {} nodes", cfg.nodes);
        let _ = writeln!(s, "graphs examined: {}", scan.graphs_examined);
        let c = &cmp.counts;
        let _ = writeln!(
            s,
            "both: {}  {left} only: {}  {right} only: {}  neither: {}",
            c.both, c.left_only, c.right_only, c.neither
        );
        for (label, w) in [
            (left, &cmp.left_only_witness),
            (right, &cmp.right_only_witness),
        ] {
            match w {
                Some(g) => {
                    let _ = writeln!(s, "only {label}: {}", fmt_record(g));
                }
                None => {
                    let _ = writeln!(s, "only {label}: no witness in this space");
                }
            }
        }
    })
}

fn fmt_record(g: &GraphRecord) -> String {
    let edges = |es: &[(usize, usize)]| {
        es.iter()
            .map(|(u, v)| format!("({u},{v})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    format!(
        "nodes={} A={{{}}} B={{{}}} C={{{}}}",
        g.nodes,
        edges(&g.a),
        edges(&g.b),
        edges(&g.c)
    )
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn fixtures(dir: &Path) -> Result<Output, CliError> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let mut text = String::new();
    for (name, body) in FIXTURES {
        let path = dir.join(format!("{name}.txt"));
        write_file(&path, body)?;
        let _ = writeln!(text, "wrote {}", path.display());
    }
    Ok(Output {
        code: EXIT_OK,
        text,
    })
}

fn dot(path: &Path, out: &Path) -> Result<Output, CliError> {
    let (g, _) = read_graph(path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "trigraph".into());
    write_file(out, &render_dot(&g, &name))?;
    Ok(Output {
        code: EXIT_OK,
        text: format!("wrote {}\n", out.display()),
    })
}
