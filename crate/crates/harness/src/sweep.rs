//! Exhaustive sweep over small connected cubic graphs.

use std::collections::BTreeMap;
use std::io::{self, Write};

use brickforge_core::families::{self, enumerate_cubic};
use brickforge_core::{Error as GraphError, MultiGraph};
use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{analyze, Analysis, Options};
use crate::io::{emit_edge_list, emit_sparse6};
use crate::report::{to_line, ExtremalGraph, OrderSummary, Summary, Violation, SCHEMA_VERSION};

pub const MAX_SWEEP_ORDER: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub seed: u64,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("--max-n must be between 4 and {MAX_SWEEP_ORDER}, got {0}")]
    BadMaxN(usize),
    #[error("cannot start {0} workers: {1}")]
    Pool(usize, String),
    #[error("{0}")]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    /// One entry per enumerated graph, in enumeration order.
    pub graphs: Vec<(MultiGraph, Analysis)>,
    /// Violations that concern the sweep as a whole.
    pub global_violations: Vec<Violation>,
    pub summary: Summary,
}

/// The graphs attaining the lower bound at orders up to `max_n`: Möbius
/// ladders of order `4k` and prisms of order `4k + 2`, for `k >= 2`.
pub fn expected_equality(max_n: usize) -> Vec<ExtremalGraph> {
    (8..=max_n)
        .step_by(2)
        .map(|n| ExtremalGraph { order: n, family: if n % 4 == 0 { "moebius" } else { "prism" }.into() })
        .collect()
}

fn certificate(g: &MultiGraph, check: &str, detail: String) -> Violation {
    Violation {
        kind: "violation".into(),
        check: check.into(),
        order: g.order(),
        sparse6: emit_sparse6(g),
        edge_list: emit_edge_list(g),
        detail,
    }
}

pub fn run_sweep(cfg: SweepConfig) -> Result<SweepOutcome, SweepError> {
    if !(4..=MAX_SWEEP_ORDER).contains(&cfg.max_n) {
        return Err(SweepError::BadMaxN(cfg.max_n));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| SweepError::Pool(cfg.jobs, e.to_string()))?;
    let opts = Options::with_seed(cfg.seed);
    let mut graphs = Vec::new();
    for n in (4..=cfg.max_n).step_by(2) {
        graphs.extend(enumerate_cubic(n)?);
    }
    let analyses: Vec<Analysis> =
        pool.install(|| graphs.par_iter().map(|g| analyze(g, &opts)).collect::<Result<_, _>>())?;
    let graphs: Vec<(MultiGraph, Analysis)> = graphs.into_iter().zip(analyses).collect();

    let mut per_order: BTreeMap<usize, OrderSummary> = BTreeMap::new();
    let mut checks: BTreeMap<String, usize> = BTreeMap::new();
    let mut equality = Vec::new();
    let (mut targets, mut findings, mut violations) = (0, 0, 0);
    for (_, a) in &graphs {
        let r = &a.record;
        let row = per_order.entry(r.order).or_insert(OrderSummary {
            order: r.order,
            graphs: 0,
            matching_covered: 0,
            bricks: 0,
            targets: 0,
        });
        row.graphs += 1;
        row.matching_covered += r.matching_covered as usize;
        row.bricks += r.brick as usize;
        row.targets += a.target as usize;
        targets += a.target as usize;
        findings += a.findings;
        violations += a.violations.len();
        for (k, v) in &a.checks {
            *checks.entry(k.clone()).or_default() += v;
        }
        if r.equality == Some(true) && !r.exempt {
            equality.push(ExtremalGraph { order: r.order, family: r.family.clone().unwrap_or_default() });
        }
    }

    let expected = expected_equality(cfg.max_n);
    let mut global_violations = Vec::new();
    *checks.entry("equality_set".into()).or_default() += 1;
    if equality != expected {
        for e in equality.iter().filter(|e| !expected.contains(e)) {
            let (g, _) = graphs
                .iter()
                .find(|(_, a)| a.record.order == e.order && a.record.equality == Some(true))
                .expect("equality graph is in the sweep");
            global_violations.push(certificate(g, "equality_set", format!("unexpected extremal graph ({})", e.family)));
        }
        for e in expected.iter().filter(|e| !equality.contains(e)) {
            let g = if e.family == "prism" { families::prism(e.order) } else { families::moebius(e.order) }?;
            global_violations.push(certificate(&g, "equality_set", format!("{} of order {} does not attain the bound", e.family, e.order)));
        }
        if global_violations.is_empty() {
            let g = &graphs[0].0;
            global_violations.push(certificate(g, "equality_set", "extremal graphs repeat".into()));
        }
    }
    violations += global_violations.len();

    let summary = Summary {
        kind: "summary".into(),
        schema_version: SCHEMA_VERSION,
        max_n: cfg.max_n,
        seed: cfg.seed,
        graphs: graphs.len(),
        per_order: per_order.into_values().collect(),
        targets,
        equality,
        expected_equality: expected,
        checks,
        findings,
        violations,
        verified: violations == 0,
    };
    Ok(SweepOutcome { graphs, global_violations, summary })
}

/// JSON lines: each graph record followed by its violations, then the
/// sweep-level violations and the summary.
pub fn write_json(outcome: &SweepOutcome, out: &mut dyn Write) -> io::Result<()> {
    for (_, a) in &outcome.graphs {
        writeln!(out, "{}", to_line(&a.record))?;
        for v in &a.violations {
            writeln!(out, "{}", to_line(v))?;
        }
    }
    for v in &outcome.global_violations {
        writeln!(out, "{}", to_line(v))?;
    }
    writeln!(out, "{}", to_line(&outcome.summary))
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn write_pretty_header(out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "{:>3} {:<24} {:>5} {:>5} {:>5} {:>3} {:>3} {:>3} {:>3} {:>5} {:>5} {:<8}",
        "n", "sparse6", "brick", "e4ec", "nearb", "E1", "E2", "E3", "b", "bound", "equal", "family"
    )
}

pub fn write_pretty_row(out: &mut dyn Write, r: &crate::report::GraphRecord) -> io::Result<()> {
    writeln!(
        out,
        "{:>3} {:<24} {:>5} {:>5} {:>5} {:>3} {:>3} {:>3} {:>3} {:>5} {:>5} {:<8}",
        r.order,
        r.sparse6,
        r.brick,
        cell(r.essentially_4ec),
        cell(r.near_bipartite),
        cell(r.e1),
        cell(r.e2),
        cell(r.e3),
        cell(r.brick_number),
        cell(r.bound_satisfied),
        cell(r.equality),
        r.family.as_deref().unwrap_or("-"),
    )
}

pub fn write_pretty(outcome: &SweepOutcome, out: &mut dyn Write) -> io::Result<()> {
    write_pretty_header(out)?;
    for (_, a) in &outcome.graphs {
        write_pretty_row(out, &a.record)?;
        for v in &a.violations {
            writeln!(out, "    VIOLATION {}: {}", v.check, v.detail)?;
        }
    }
    for v in &outcome.global_violations {
        writeln!(out, "VIOLATION {}: {} ({})", v.check, v.detail, v.sparse6)?;
    }
    let s = &outcome.summary;
    writeln!(out)?;
    for row in &s.per_order {
        writeln!(
            out,
            "order {:>2}: {:>4} graphs, {:>4} matching covered, {:>4} bricks, {:>3} targets",
            row.order, row.graphs, row.matching_covered, row.bricks, row.targets
        )?;
    }
    let list = |v: &[ExtremalGraph]| v.iter().map(|e| format!("{}({})", e.family, e.order)).collect::<Vec<_>>().join(", ");
    writeln!(out, "equality: {}", list(&s.equality))?;
    writeln!(out, "expected: {}", list(&s.expected_equality))?;
    writeln!(out, "findings: {}, violations: {}, verified: {}", s.findings, s.violations, s.verified)
}
