//! Removable edges, mutual-dependence classes, removable doubletons and the
//! b-invariant classification of the edges of a brick.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{EdgeRef, MultiGraph, Shore};

/// Unordered edge pair, stored with the smaller index first.
pub type Doubleton = (EdgeRef, EdgeRef);

fn pair(e: EdgeRef, f: EdgeRef) -> Doubleton {
    (e.min(f), e.max(f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabel {
    /// Not removable; forms a removable doubleton with `partner`.
    DoubletonMember { partner: EdgeRef },
    /// Removable with `b(G - e) = b(G)`.
    BInvariant { brick_number: usize },
    /// Removable with `b(G) = 1` and `b(G - e) = 2`.
    QuasiBInvariant { brick_number: usize },
    /// Removable, but `b(G - e)` is neither 1 nor 2.
    RemovableOther { brick_number: usize },
    /// Not removable and in no removable doubleton.
    NonRemovableOther,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    labels: Vec<Option<EdgeLabel>>,
}

impl EdgeClassification {
    pub fn label(&self, e: EdgeRef) -> Option<EdgeLabel> {
        self.labels.get(e.0).copied().flatten()
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeRef, EdgeLabel)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(i, l)| l.map(|l| (EdgeRef(i), l)))
    }

    fn select(&self, keep: impl Fn(&EdgeLabel) -> bool) -> Vec<EdgeRef> {
        self.iter().filter(|(_, l)| keep(l)).map(|(e, _)| e).collect()
    }

    /// Edges in a removable doubleton.
    pub fn doubleton_members(&self) -> Vec<EdgeRef> {
        self.select(|l| matches!(l, EdgeLabel::DoubletonMember { .. }))
    }

    pub fn b_invariant(&self) -> Vec<EdgeRef> {
        self.select(|l| matches!(l, EdgeLabel::BInvariant { .. }))
    }

    pub fn quasi_b_invariant(&self) -> Vec<EdgeRef> {
        self.select(|l| matches!(l, EdgeLabel::QuasiBInvariant { .. }))
    }

    /// Edges outside the three classes of the trichotomy.
    pub fn unclassified(&self) -> Vec<EdgeRef> {
        self.select(|l| {
            matches!(l, EdgeLabel::NonRemovableOther | EdgeLabel::RemovableOther { .. })
        })
    }

    /// Some two quasi-b-invariant edges share an end.
    pub fn has_adjacent_quasi_pair(&self, g: &MultiGraph) -> bool {
        let quasi = self.quasi_b_invariant();
        quasi
            .iter()
            .enumerate()
            .any(|(i, &e)| quasi[i + 1..].iter().any(|&f| g.are_adjacent(e, f)))
    }
}

/// Partition of the live edges into mutual-dependence classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClasses {
    classes: Vec<Vec<EdgeRef>>,
}

impl EquivalenceClasses {
    /// Classes ordered by least edge, each sorted.
    pub fn classes(&self) -> &[Vec<EdgeRef>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, e: EdgeRef) -> Option<&[EdgeRef]> {
        self.classes.iter().find(|c| c.contains(&e)).map(|c| c.as_slice())
    }

    fn is_class(&self, edges: &[EdgeRef]) -> bool {
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        self.classes.contains(&sorted)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPiece {
    pub vertices: Shore,
    pub class_a: Vec<usize>,
    pub class_b: Vec<usize>,
}

/// Cyclic sequence of balanced bipartite pieces. `links[i]` is the
/// doubleton joining `pieces[i]` and `pieces[(i + 1) % s]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub pieces: Vec<ChainPiece>,
    pub links: Vec<Doubleton>,
}

impl ChainDecomposition {
    /// Checks the chain invariants against `g`. With `complete` set the
    /// links are taken to be all removable doubletons of `g`, and no piece
    /// may have exactly four vertices.
    pub fn validate(&self, g: &MultiGraph, complete: bool) -> Result<()> {
        let fail = |msg: String| Err(Error::ValidationFailed(msg));
        let s = self.pieces.len();
        if s != self.links.len() || s < 2 {
            return fail(format!("{} pieces for {} links", s, self.links.len()));
        }
        let mut covered = 0u64;
        for (i, piece) in self.pieces.iter().enumerate() {
            let x = piece.vertices;
            if covered & x.mask() != 0 {
                return fail(format!("piece {i} overlaps an earlier piece"));
            }
            covered |= x.mask();
            if piece.class_a.len() != piece.class_b.len() {
                return fail(format!("piece {i} is not balanced"));
            }
            let a = Shore::from_vertices(piece.class_a.iter().copied());
            let b = Shore::from_vertices(piece.class_b.iter().copied());
            if a.mask() | b.mask() != x.mask() || a.mask() & b.mask() != 0 {
                return fail(format!("piece {i} colour classes do not split it"));
            }
            let monochrome = g.induced_edges(a).len() + g.induced_edges(b).len();
            if monochrome != 0 {
                return fail(format!("piece {i} is not bipartite"));
            }
            if complete && x.len() == 4 {
                return fail(format!("piece {i} has four vertices"));
            }
        }
        if covered != Shore::from_vertices(0..g.order()).mask() {
            return fail("pieces do not cover the vertex set".into());
        }
        for j in 0..s {
            for k in j + 1..s {
                let mut expected: Vec<EdgeRef> = Vec::new();
                for (i, &(e, f)) in self.links.iter().enumerate() {
                    let ends = pair(EdgeRef(i), EdgeRef((i + 1) % s));
                    if ends == pair(EdgeRef(j), EdgeRef(k)) {
                        expected.extend([e, f]);
                    }
                }
                expected.sort_unstable();
                let mut actual =
                    g.edges_between(self.pieces[j].vertices, self.pieces[k].vertices);
                actual.sort_unstable();
                if actual != expected {
                    return fail(format!("edges between pieces {j} and {k} are {actual:?}"));
                }
            }
        }
        Ok(())
    }
}

/// A vertex where two doubletons meet without the expected partner
/// structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedVertexViolation {
    pub vertex: usize,
    pub first: Doubleton,
    pub second: Doubleton,
}

/// An odd cycle of a connected non-bipartite graph, as edges.
fn odd_cycle(g: &MultiGraph) -> Vec<EdgeRef> {
    let n = g.order();
    let inc = g.incidence();
    let mut depth = vec![usize::MAX; n];
    let mut parent: Vec<Option<(EdgeRef, usize)>> = vec![None; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(e, u) in &inc[v] {
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = Some((e, v));
                queue.push_back(u);
            } else if depth[u] % 2 == depth[v] % 2 {
                let mut cycle = vec![e];
                let (mut a, mut b) = (v, u);
                while a != b {
                    if depth[a] < depth[b] {
                        std::mem::swap(&mut a, &mut b);
                    }
                    let (pe, p) = parent[a].unwrap();
                    cycle.push(pe);
                    a = p;
                }
                return cycle;
            }
        }
    }
    Vec::new()
}

impl MultiGraph {
    /// `G - e` is matching covered.
    pub fn is_removable(&self, e: EdgeRef) -> Result<bool> {
        self.check_live(e)?;
        if !self.is_matching_covered()? {
            return Err(Error::NotMatchingCovered);
        }
        self.delete_edges(&[e])?.is_matching_covered()
    }

    pub fn equivalence_classes(&self) -> Result<EquivalenceClasses> {
        if !self.is_matching_covered()? {
            return Err(Error::NotMatchingCovered);
        }
        let cat = self.perfect_matchings()?;
        let mut groups: BTreeMap<&[u64], Vec<EdgeRef>> = BTreeMap::new();
        for e in self.live_edges() {
            groups.entry(cat.incidence_row(e)).or_default().push(e);
        }
        let mut classes: Vec<Vec<EdgeRef>> = groups.into_values().collect();
        classes.sort();
        Ok(EquivalenceClasses { classes })
    }

    /// Pairs of non-removable edges whose joint removal leaves the graph
    /// matching covered.
    pub fn removable_doubletons(&self) -> Result<Vec<Doubleton>> {
        if !self.is_matching_covered()? {
            return Err(Error::NotMatchingCovered);
        }
        let mut fixed = Vec::new();
        for e in self.live_edges() {
            if !self.delete_edges(&[e])?.is_matching_covered()? {
                fixed.push(e);
            }
        }
        let mut out = Vec::new();
        for (i, &e) in fixed.iter().enumerate() {
            for &f in &fixed[i + 1..] {
                if self.delete_edges(&[e, f])?.is_matching_covered()? {
                    out.push((e, f));
                }
            }
        }
        Ok(out)
    }

    /// No perfect matching meets both classes.
    pub fn mutually_exclusive(&self, first: &[EdgeRef], second: &[EdgeRef]) -> Result<bool> {
        let classes = self.equivalence_classes()?;
        if !classes.is_class(first) || !classes.is_class(second) {
            return Err(Error::NotAClass);
        }
        let (mut a, mut b) = (first.to_vec(), second.to_vec());
        a.sort_unstable();
        b.sort_unstable();
        if a == b {
            return Err(Error::NotAClass);
        }
        let cat = self.perfect_matchings()?;
        Ok(!cat
            .matchings()
            .iter()
            .any(|m| m.contains(&a[0]) && m.contains(&b[0])))
    }

    /// Least pair `{e, f}` with `G - {e, f}` bipartite and matching covered.
    ///
    /// Only pairs meeting one fixed odd cycle are tried. For cubic bricks a
    /// bipartite remainder is always matching covered, so that test is
    /// skipped there.
    pub fn is_near_bipartite(&self) -> Result<Option<Doubleton>> {
        if !self.is_matching_covered()? {
            return Err(Error::NotMatchingCovered);
        }
        if self.is_bipartite() {
            return Err(Error::Bipartite);
        }
        let cubic_brick = self.is_cubic() && self.is_brick()?;
        let candidates: BTreeSet<Doubleton> = odd_cycle(self)
            .into_iter()
            .flat_map(|e| {
                self.live_edges()
                    .filter(move |&f| f != e)
                    .map(move |f| pair(e, f))
            })
            .collect();
        for (e, f) in candidates {
            let rest = self.delete_edges(&[e, f])?;
            if rest.is_bipartite() && (cubic_brick || rest.is_matching_covered()?) {
                return Ok(Some((e, f)));
            }
        }
        Ok(None)
    }

    /// Labels every edge of a brick.
    pub fn classify_edges(&self) -> Result<EdgeClassification> {
        if !self.is_brick()? {
            return Err(Error::NotBrick);
        }
        let mut labels = vec![None; self.edge_slots()];
        for (e, f) in self.removable_doubletons()? {
            labels[e.0] = Some(EdgeLabel::DoubletonMember { partner: f });
            labels[f.0] = Some(EdgeLabel::DoubletonMember { partner: e });
        }
        for e in self.live_edges() {
            if labels[e.0].is_some() {
                continue;
            }
            let rest = self.delete_edges(&[e])?;
            labels[e.0] = Some(if rest.is_matching_covered()? {
                match rest.brick_number()? {
                    1 => EdgeLabel::BInvariant { brick_number: 1 },
                    2 => EdgeLabel::QuasiBInvariant { brick_number: 2 },
                    b => EdgeLabel::RemovableOther { brick_number: b },
                }
            } else {
                EdgeLabel::NonRemovableOther
            });
        }
        Ok(EdgeClassification { labels })
    }

    pub fn b_invariant_count(&self) -> Result<usize> {
        Ok(self.classify_edges()?.b_invariant().len())
    }

    /// Splits an essentially 4-edge-connected cubic brick along the given
    /// removable doubletons into a cycle of balanced bipartite pieces.
    pub fn chain_decomposition(&self, doubletons: &[Doubleton]) -> Result<ChainDecomposition> {
        let mut links: Vec<Doubleton> = doubletons.iter().map(|&(e, f)| pair(e, f)).collect();
        links.sort_unstable();
        links.dedup();
        let s = links.len();
        if s < 2 {
            return Err(Error::TooFewDoubletons(s));
        }
        if !self.is_cubic() {
            return Err(Error::NotCubic);
        }
        if !self.is_brick()? {
            return Err(Error::NotBrick);
        }
        if !self.is_essentially_4ec_cubic()? {
            return Err(Error::NotEssentially4EdgeConnected);
        }
        let all = self.removable_doubletons()?;
        if let Some(d) = links.iter().find(|d| !all.contains(d)) {
            return Err(Error::ValidationFailed(format!("{d:?} is not a removable doubleton")));
        }
        let cut: Vec<EdgeRef> = links.iter().flat_map(|&(e, f)| [e, f]).collect();
        let comps = self.delete_edges(&cut)?.components();
        if comps.len() != s {
            return Err(Error::ValidationFailed(format!(
                "{} components for {s} doubletons",
                comps.len()
            )));
        }
        let piece_of = |v: usize| comps.iter().position(|c| c.contains(v)).unwrap();
        // Pieces joined by each doubleton.
        let mut joins = Vec::with_capacity(s);
        for &(e, f) in &links {
            let ends = |x: EdgeRef| {
                let (u, v) = self.ends(x);
                let (p, q) = (piece_of(u), piece_of(v));
                (p.min(q), p.max(q))
            };
            let (pe, pf) = (ends(e), ends(f));
            if pe != pf || pe.0 == pe.1 {
                return Err(Error::ValidationFailed(format!(
                    "doubleton {e}, {f} does not join two pieces"
                )));
            }
            joins.push(pe);
        }

        let mut order = vec![0usize];
        let mut chain_links = Vec::with_capacity(s);
        let mut used = vec![false; s];
        let mut current = 0;
        for step in 0..s {
            let next = (0..s)
                .filter(|&i| !used[i] && (joins[i].0 == current || joins[i].1 == current))
                .map(|i| {
                    let other = if joins[i].0 == current { joins[i].1 } else { joins[i].0 };
                    (comps[other].vertices().next().unwrap(), i, other)
                })
                .min();
            let Some((_, link, other)) = next else {
                return Err(Error::ValidationFailed(format!("chain breaks at piece {current}")));
            };
            used[link] = true;
            chain_links.push(links[link]);
            if step + 1 < s {
                if order.contains(&other) {
                    return Err(Error::ValidationFailed("pieces do not form a cycle".into()));
                }
                order.push(other);
            } else if other != 0 {
                return Err(Error::ValidationFailed("chain does not close".into()));
            }
            current = other;
        }

        let pieces = order
            .iter()
            .map(|&p| {
                let x = comps[p];
                let members: Vec<usize> = x.vertices().collect();
                let inside = MultiGraph::new(
                    members.len(),
                    self.induced_edges(x).into_iter().map(|e| {
                        let (u, v) = self.ends(e);
                        let at = |w| members.iter().position(|&m| m == w).unwrap();
                        (at(u), at(v))
                    }),
                )?;
                let colouring = inside.two_coloring().ok_or_else(|| {
                    Error::ValidationFailed(format!("piece {p} is not bipartite"))
                })?;
                Ok(ChainPiece {
                    vertices: x,
                    class_a: colouring.class_a().into_iter().map(|i| members[i]).collect(),
                    class_b: colouring.class_b().into_iter().map(|i| members[i]).collect(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let chain = ChainDecomposition { pieces, links: chain_links };
        let mut everything = all.clone();
        everything.sort_unstable();
        chain.validate(self, links == everything)?;
        Ok(chain)
    }

    /// Where two edges from distinct doubletons meet at `v0`, their
    /// partners must share an end `u0` adjacent to `v0`. Returns every
    /// vertex where this fails.
    pub fn shared_vertex_doubleton_check(&self) -> Result<Vec<SharedVertexViolation>> {
        if !self.is_cubic() {
            return Err(Error::NotCubic);
        }
        if !self.is_brick()? {
            return Err(Error::NotBrick);
        }
        let doubletons = self.removable_doubletons()?;
        let mut violations = Vec::new();
        for v0 in 0..self.order() {
            let at: Vec<(Doubleton, EdgeRef)> = doubletons
                .iter()
                .flat_map(|&(e, f)| [((e, f), e, f), ((e, f), f, e)])
                .filter(|&(_, mine, _)| {
                    let (a, b) = self.ends(mine);
                    a == v0 || b == v0
                })
                .map(|(d, _, partner)| (d, partner))
                .collect();
            for i in 0..at.len() {
                for j in i + 1..at.len() {
                    let ((d1, p1), (d2, p2)) = (at[i], at[j]);
                    if d1 == d2 {
                        continue;
                    }
                    let (a, b) = self.ends(p1);
                    let (c, d) = self.ends(p2);
                    let common: Vec<usize> =
                        [a, b].into_iter().filter(|&w| w == c || w == d).collect();
                    let ok = common.iter().any(|&u0| self.has_edge_between(v0, u0));
                    if !ok {
                        violations.push(SharedVertexViolation { vertex: v0, first: d1, second: d2 });
                    }
                }
            }
        }
        Ok(violations)
    }
}
