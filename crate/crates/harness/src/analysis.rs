//! Per-graph record and property suites.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use brickforge_core::families;
use brickforge_core::{
    is_isomorphic, CutPolicy, Decomposition, EdgeLabel, EdgeRef, Error as GraphError, MultiGraph,
    Result as GraphResult, Shore,
};

use crate::io::{emit_edge_list, emit_sparse6};
use crate::report::{GraphRecord, Violation};

/// Number of seeded cut-selection policies compared against the default.
pub const POLICY_COUNT: u64 = 10;

#[derive(Debug, Clone)]
pub struct Options {
    /// Seeds for the randomized decomposition policies.
    pub seeds: Vec<u64>,
    /// Run the property suites, not just the record.
    pub suites: bool,
}

impl Options {
    pub fn with_seed(seed: u64) -> Self {
        Options { seeds: (0..POLICY_COUNT).map(|i| seed.wrapping_add(i)).collect(), suites: true }
    }

    pub fn record_only() -> Self {
        Options { seeds: Vec::new(), suites: false }
    }
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub record: GraphRecord,
    pub violations: Vec<Violation>,
    pub findings: usize,
    pub checks: BTreeMap<String, usize>,
    /// Essentially 4-edge-connected cubic near-bipartite brick.
    pub target: bool,
}

struct Ctx<'a> {
    g: &'a MultiGraph,
    violations: Vec<Violation>,
    checks: BTreeMap<String, usize>,
    findings: usize,
}

impl Ctx<'_> {
    fn count(&mut self, check: &str) {
        *self.checks.entry(check.to_string()).or_default() += 1;
    }

    /// Counts one instance of `check` and records a violation unless `ok`.
    fn expect(&mut self, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.count(check);
        if !ok {
            self.fail(check, detail());
        }
    }

    fn fail(&mut self, check: &str, detail: String) {
        self.violations.push(Violation {
            kind: "violation".into(),
            check: check.into(),
            order: self.g.order(),
            sparse6: emit_sparse6(self.g),
            edge_list: emit_edge_list(self.g),
            detail,
        });
    }
}

fn k4() -> &'static MultiGraph {
    static G: OnceLock<MultiGraph> = OnceLock::new();
    G.get_or_init(families::k4)
}

fn c6_bar() -> &'static MultiGraph {
    static G: OnceLock<MultiGraph> = OnceLock::new();
    G.get_or_init(families::c6_bar)
}

fn cubeplex() -> &'static MultiGraph {
    static G: OnceLock<MultiGraph> = OnceLock::new();
    G.get_or_init(families::cubeplex)
}

pub fn family_of(g: &MultiGraph) -> &'static str {
    let n = g.order();
    if n >= 4 && n % 2 == 0 {
        if families::prism(n).is_ok_and(|p| is_isomorphic(g, &p, true)) {
            return "prism";
        }
        if families::moebius(n).is_ok_and(|m| is_isomorphic(g, &m, true)) {
            return "moebius";
        }
    }
    "other"
}

/// The subgraph induced by `x`, relabelled to `0..|x|`.
fn induced(g: &MultiGraph, x: Shore) -> GraphResult<MultiGraph> {
    let members: Vec<usize> = x.vertices().collect();
    let at = |w: usize| members.iter().position(|&m| m == w).unwrap();
    MultiGraph::new(
        members.len(),
        g.induced_edges(x).into_iter().map(|e| {
            let (u, v) = g.ends(e);
            (at(u), at(v))
        }),
    )
}

/// Greedy multiset match of pieces up to multiplicity-ignoring isomorphism.
/// Isomorphism is an equivalence, so greedy matching is exact.
pub fn same_pieces(a: &Decomposition, b: &Decomposition) -> bool {
    if a.pieces.len() != b.pieces.len() {
        return false;
    }
    let mut taken = vec![false; b.pieces.len()];
    a.pieces.iter().all(|p| {
        let hit = (0..b.pieces.len()).find(|&j| {
            !taken[j] && b.pieces[j].kind == p.kind && is_isomorphic(&p.graph, &b.pieces[j].graph, false)
        });
        hit.map(|j| taken[j] = true).is_some()
    })
}

pub fn analyze(g: &MultiGraph, opts: &Options) -> GraphResult<Analysis> {
    let n = g.order();
    let cubic = g.is_cubic();
    let connected = g.is_connected();
    let bipartite = g.is_bipartite();
    let matching_covered = g.is_matching_covered()?;
    let brick = matching_covered && g.is_brick()?;
    let e4ec = if cubic && connected { Some(g.is_essentially_4ec_cubic()?) } else { None };
    let near_bipartite = if matching_covered && !bipartite { Some(g.is_near_bipartite()?.is_some()) } else { None };
    let brick_number = if matching_covered { Some(g.brick_number()?) } else { None };
    let classification = if brick { Some(g.classify_edges()?) } else { None };
    let doubletons = if brick { Some(g.removable_doubletons()?) } else { None };

    let target = brick && cubic && e4ec == Some(true) && near_bipartite == Some(true);
    let exempt = target && is_isomorphic(g, k4(), true);
    let (e1, e2, e3) = match &classification {
        Some(c) => (
            Some(c.doubleton_members().len()),
            Some(c.b_invariant().len()),
            Some(c.quasi_b_invariant().len()),
        ),
        None => (None, None, None),
    };
    let bound_satisfied = target.then(|| 2 * e2.unwrap() >= n);
    let equality = target.then(|| 2 * e2.unwrap() == n);
    let record = GraphRecord {
        kind: "graph".into(),
        order: n,
        edges: g.edge_count(),
        sparse6: emit_sparse6(g),
        cubic,
        matching_covered,
        brick,
        essentially_4ec: e4ec,
        near_bipartite,
        brick_number,
        doubletons: doubletons.as_ref().map(|d| d.len()),
        e1,
        e2,
        e3,
        bound_satisfied,
        equality,
        family: target.then(|| family_of(g).to_string()),
        exempt,
    };

    let mut ctx = Ctx { g, violations: Vec::new(), checks: BTreeMap::new(), findings: 0 };
    if opts.suites {
        matching_suites(&mut ctx, bipartite)?;
        if matching_covered {
            tight_cut_suites(&mut ctx, opts, bipartite, brick)?;
            if let Some(true) = near_bipartite {
                let b = brick_number.unwrap();
                ctx.expect("near_bipartite_one_brick", b == 1, || format!("near-bipartite with b = {b}"));
            }
        }
        if let (true, Some(ds)) = (brick, &doubletons) {
            brick_suites(&mut ctx, ds)?;
            if cubic {
                let bad = g.shared_vertex_doubleton_check()?;
                ctx.expect("shared_vertex_doubletons", bad.is_empty(), || format!("{bad:?}"));
            }
            if cubic && e4ec == Some(true) {
                let c = classification.as_ref().unwrap();
                e4ec_suites(&mut ctx, c, ds)?;
                if target {
                    target_suites(&mut ctx, c, exempt)?;
                }
            }
        }
    }
    Ok(Analysis { record, violations: ctx.violations, findings: ctx.findings, checks: ctx.checks, target })
}

fn matching_suites(ctx: &mut Ctx<'_>, bipartite: bool) -> GraphResult<()> {
    let g = ctx.g;
    if g.order() >= 4 && g.is_bicritical()? {
        ctx.expect("bicritical_not_bipartite", !bipartite, || "bicritical and bipartite".into());
    }
    if !bipartite || !g.has_perfect_matching()? {
        return Ok(());
    }
    // The graph and its one- and two-edge deletions that keep a perfect
    // matching; cubic bipartite graphs alone never exhibit a witness.
    let edges: Vec<EdgeRef> = g.live_edges().collect();
    let mut fixtures = vec![g.clone()];
    for (i, &e) in edges.iter().enumerate() {
        fixtures.push(g.delete_edges(&[e])?);
        for &f in &edges[i + 1..] {
            fixtures.push(g.delete_edges(&[e, f])?);
        }
    }
    for h in fixtures {
        if !h.has_perfect_matching()? {
            continue;
        }
        let bip = h.two_coloring().expect("subgraph of a bipartite graph");
        ctx.expect("balanced_bipartite", bip.is_balanced(), || "unbalanced bipartite graph with a perfect matching".into());
        let allowed = h.allowed_edges()?;
        for e in h.live_edges() {
            let witness = h.dm_witness(&bip, e)?;
            let agrees = witness.is_none() == allowed.contains(&e);
            ctx.expect("dm_cross_check", agrees, || format!("witness and catalog disagree on {e} after deletions {h:?}"));
            if let Some(w) = witness {
                ctx.expect("dm_witness", w.verify(&h, &bip) && w.edge == e, || format!("invalid witness {w:?}"));
            }
        }
        if h.is_matching_covered()? {
            bipartite_two_cuts(ctx, &h)?;
        }
    }
    Ok(())
}

fn bipartite_two_cuts(ctx: &mut Ctx<'_>, h: &MultiGraph) -> GraphResult<()> {
    for class in h.equivalence_classes()?.classes() {
        for (i, &e1) in class.iter().enumerate() {
            for &e2 in &class[i + 1..] {
                let sides = h.delete_edges(&[e1, e2])?.components();
                let ok = sides.len() == 2 && {
                    let mut cut = h.cut_edges(sides[0])?;
                    cut.sort_unstable();
                    let balanced = sides
                        .iter()
                        .map(|&s| induced(h, s).map(|p| p.two_coloring().is_some_and(|c| c.is_balanced())))
                        .collect::<GraphResult<Vec<bool>>>()?;
                    cut == [e1.min(e2), e1.max(e2)] && balanced.iter().all(|&b| b)
                };
                ctx.expect("bipartite_two_cut", ok, || format!("{e1}, {e2} in {h:?}"));
            }
        }
    }
    Ok(())
}

fn tight_cut_suites(ctx: &mut Ctx<'_>, opts: &Options, bipartite: bool, brick: bool) -> GraphResult<()> {
    let g = ctx.g;
    let cuts = g.nontrivial_tight_cuts()?;
    for x in &cuts {
        let ok = x.len() % 2 == 1 && g.is_separating_cut(*x)?;
        ctx.expect("tight_is_separating", ok, || format!("shore {:#b}", x.mask()));
    }
    let by_definition = !bipartite && cuts.is_empty();
    ctx.expect("brick_equivalence", brick == by_definition, || {
        format!("3-connected bicritical test says {brick}, definition says {by_definition}")
    });

    let base = g.tight_cut_decomposition(CutPolicy::LeastShore)?;
    for &seed in &opts.seeds {
        let d = g.tight_cut_decomposition(CutPolicy::Seeded(seed))?;
        let counts = d.bricks == base.bricks && d.petersen_bricks == base.petersen_bricks;
        ctx.expect("decomposition_uniqueness", counts, || {
            format!("seed {seed}: b = {}, p = {} against {}, {}", d.bricks, d.petersen_bricks, base.bricks, base.petersen_bricks)
        });
        if counts && !same_pieces(&base, &d) {
            ctx.findings += 1;
        }
    }
    Ok(())
}

fn brick_suites(ctx: &mut Ctx<'_>, doubletons: &[(EdgeRef, EdgeRef)]) -> GraphResult<()> {
    let g = ctx.g;
    let classes = g.equivalence_classes()?;
    for class in classes.classes() {
        let ok = class.len() <= 2 && (class.len() < 2 || g.delete_edges(class)?.is_bipartite());
        ctx.expect("brick_class_bound", ok, || format!("class {class:?}"));
    }
    for &(e, f) in doubletons {
        let ok = classes.class_of(e) == Some(&[e, f][..]);
        ctx.expect("doubleton_is_class", ok, || format!("doubleton {e}, {f}"));
    }
    let exclusive = |a: (EdgeRef, EdgeRef), b: (EdgeRef, EdgeRef)| g.mutually_exclusive(&[a.0, a.1], &[b.0, b.1]);
    for i in 0..doubletons.len() {
        for j in i + 1..doubletons.len() {
            if !exclusive(doubletons[i], doubletons[j])? {
                continue;
            }
            for k in j + 1..doubletons.len() {
                if exclusive(doubletons[i], doubletons[k])? && exclusive(doubletons[j], doubletons[k])? {
                    let simple = g.underlying_simple();
                    let ok = is_isomorphic(&simple, k4(), false) || is_isomorphic(&simple, c6_bar(), false);
                    ctx.expect("three_exclusive_doubletons", ok, || "three mutually exclusive doubletons".into());
                }
            }
        }
    }
    Ok(())
}

fn e4ec_suites(
    ctx: &mut Ctx<'_>,
    c: &brickforge_core::EdgeClassification,
    doubletons: &[(EdgeRef, EdgeRef)],
) -> GraphResult<()> {
    let g = ctx.g;
    let stray: Vec<EdgeRef> = c.unclassified();
    ctx.expect("trichotomy", stray.is_empty(), || format!("unclassified edges {stray:?}"));
    let total = c.doubleton_members().len() + c.b_invariant().len() + c.quasi_b_invariant().len();
    ctx.expect("edge_count_identity", 2 * total == 3 * g.order(), || format!("|E1|+|E2|+|E3| = {total}"));

    let s = doubletons.len();
    if s >= 2 {
        for mask in 1u32..(1 << s) {
            if mask.count_ones() < 2 {
                continue;
            }
            // All three doubletons of K4 leave four isolated vertices.
            if g.order() == 4 && mask.count_ones() == 3 {
                continue;
            }
            let chosen: Vec<_> = (0..s).filter(|&i| mask >> i & 1 == 1).map(|i| doubletons[i]).collect();
            match g.chain_decomposition(&chosen) {
                Ok(chain) => ctx.expect("chain_decomposition", chain.pieces.len() == chosen.len(), || {
                    format!("{} pieces for {chosen:?}", chain.pieces.len())
                }),
                Err(err) => {
                    ctx.count("chain_decomposition");
                    ctx.fail("chain_decomposition", format!("{err} for {chosen:?}"));
                }
            }
        }
    }
    Ok(())
}

fn target_suites(ctx: &mut Ctx<'_>, c: &brickforge_core::EdgeClassification, exempt: bool) -> GraphResult<()> {
    let g = ctx.g;
    let n = g.order();
    let is_cubeplex = is_isomorphic(g, cubeplex(), true);
    if c.has_adjacent_quasi_pair(g) {
        ctx.expect("cubeplex_uniqueness", is_cubeplex, || "adjacent quasi-b-invariant edges outside the Cubeplex".into());
    }
    if exempt {
        return Ok(());
    }
    let e2 = c.b_invariant().len();
    ctx.expect("lower_bound", 2 * e2 >= n, || format!("|E2| = {e2} < {}", n / 2));

    let inc = g.incidence();
    let label = |e: EdgeRef| c.label(e).expect("live edge");
    if !is_cubeplex {
        let crowded: Vec<usize> = (0..n)
            .filter(|&v| inc[v].iter().filter(|&&(e, _)| matches!(label(e), EdgeLabel::QuasiBInvariant { .. })).count() > 1)
            .collect();
        ctx.expect("quasi_edges_per_vertex", crowded.is_empty(), || format!("vertices {crowded:?}"));
    }
    // Only claimed with more than two doubletons; with exactly two it fails.
    if n >= 8 && c.doubleton_members().len() > 4 {
        for v in 0..n {
            let (in_e1, rest): (Vec<EdgeRef>, Vec<EdgeRef>) =
                inc[v].iter().map(|&(e, _)| e).partition(|&e| matches!(label(e), EdgeLabel::DoubletonMember { .. }));
            if in_e1.len() == 2 {
                let third = rest[0];
                let ok = matches!(label(third), EdgeLabel::BInvariant { .. });
                ctx.expect("third_edge_b_invariant", ok, || format!("vertex {v}, edge {third}"));
            }
        }
    }
    if 2 * e2 == n {
        let rest = g.delete_edges(&c.doubleton_members())?;
        let comps = rest.components();
        let ok = comps.iter().all(|&x| x.len() == 2 && rest.induced_edges(x).len() == 1);
        ctx.expect("equality_components_k2", ok, || format!("components {comps:?}"));
    }
    Ok(())
}

/// Graph-level errors surfaced by the CLI as precondition failures.
pub fn is_precondition(e: &GraphError) -> bool {
    matches!(
        e,
        GraphError::SizeLimit { .. }
            | GraphError::NotMatchingCovered
            | GraphError::NotBrick
            | GraphError::Disconnected
            | GraphError::NotCubic
    )
}
