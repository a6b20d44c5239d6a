//! Perfect matching catalogs and the predicates built on them.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{check_size, full_mask, Bipartition, EdgeRef, MultiGraph};

/// Every perfect matching of one graph, with a per-edge incidence index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmCatalog {
    matchings: Vec<Vec<EdgeRef>>,
    /// `incidence[e]` is a bitset over matching indices.
    incidence: Vec<Vec<u64>>,
}

impl PmCatalog {
    fn build(edge_slots: usize, mut matchings: Vec<Vec<EdgeRef>>) -> Self {
        for m in matchings.iter_mut() {
            m.sort_unstable();
        }
        matchings.sort();
        let words = matchings.len().div_ceil(64);
        let mut incidence = vec![vec![0u64; words]; edge_slots];
        for (i, m) in matchings.iter().enumerate() {
            for e in m {
                incidence[e.0][i / 64] |= 1 << (i % 64);
            }
        }
        PmCatalog { matchings, incidence }
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    /// Matchings as sorted edge lists, in lexicographic order.
    pub fn matchings(&self) -> &[Vec<EdgeRef>] {
        &self.matchings
    }

    pub fn contains(&self, matching: usize, e: EdgeRef) -> bool {
        self.incidence[e.0][matching / 64] >> (matching % 64) & 1 == 1
    }

    /// Bitset of the matchings that use `e`.
    pub fn incidence_row(&self, e: EdgeRef) -> &[u64] {
        &self.incidence[e.0]
    }

    pub fn count_with(&self, e: EdgeRef) -> usize {
        self.incidence[e.0].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn matchings_with(&self, e: EdgeRef) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.contains(i, e))
    }
}

/// Certificate that an edge of a bipartite graph lies in no perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmWitness {
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub edge: EdgeRef,
}

impl DmWitness {
    /// Checks the partition conditions: `(A1, A2)` splits `A`, `(B1, B2)`
    /// splits `B`, `|A1| = |B1|`, the edge joins `A2` to `B1`, and no edge
    /// joins `A1` to `B2`.
    pub fn verify(&self, g: &MultiGraph, bip: &Bipartition) -> bool {
        let sorted = |a: &[usize], b: &[usize]| {
            let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
            v.sort_unstable();
            v
        };
        if sorted(&self.a1, &self.a2) != bip.class_a() || sorted(&self.b1, &self.b2) != bip.class_b() {
            return false;
        }
        if self.a1.len() != self.b1.len() || !g.is_live(self.edge) {
            return false;
        }
        let mark = |vs: &[usize]| {
            let mut m = vec![false; g.order()];
            for &v in vs {
                m[v] = true;
            }
            m
        };
        let (in_a1, in_a2, in_b1, in_b2) = (mark(&self.a1), mark(&self.a2), mark(&self.b1), mark(&self.b2));
        let (u, v) = g.ends(self.edge);
        let offending = (in_a2[u] && in_b1[v]) || (in_a2[v] && in_b1[u]);
        let blocked = g.live_edges().all(|f| {
            let (x, y) = g.ends(f);
            !((in_a1[x] && in_b2[y]) || (in_a1[y] && in_b2[x]))
        });
        offending && blocked
    }
}

fn enumerate(
    inc: &[Vec<(EdgeRef, usize)>],
    uncovered: u64,
    current: &mut Vec<EdgeRef>,
    out: &mut Vec<Vec<EdgeRef>>,
) {
    if uncovered == 0 {
        out.push(current.clone());
        return;
    }
    let Some(v) = tightest_vertex(inc, uncovered) else {
        return;
    };
    for &(e, u) in &inc[v] {
        if uncovered >> u & 1 == 1 {
            current.push(e);
            enumerate(inc, uncovered & !(1 << v) & !(1 << u), current, out);
            current.pop();
        }
    }
}

fn find_one(inc: &[Vec<(EdgeRef, usize)>], uncovered: u64, current: &mut Vec<EdgeRef>) -> bool {
    if uncovered == 0 {
        return true;
    }
    let Some(v) = tightest_vertex(inc, uncovered) else {
        return false;
    };
    for &(e, u) in &inc[v] {
        if uncovered >> u & 1 == 1 {
            current.push(e);
            if find_one(inc, uncovered & !(1 << v) & !(1 << u), current) {
                return true;
            }
            current.pop();
        }
    }
    false
}

/// Uncovered vertex with the fewest usable edges; `None` when some vertex
/// has none left.
fn tightest_vertex(inc: &[Vec<(EdgeRef, usize)>], uncovered: u64) -> Option<usize> {
    let mut best = None;
    let mut best_count = usize::MAX;
    let mut m = uncovered;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let count = inc[v].iter().filter(|&&(_, u)| uncovered >> u & 1 == 1).count();
        if count == 0 {
            return None;
        }
        if count < best_count {
            best_count = count;
            best = Some(v);
        }
    }
    best
}

impl MultiGraph {
    /// The complete catalog of perfect matchings, computed once per graph
    /// value. Graphs of odd order get an empty catalog.
    pub fn perfect_matchings(&self) -> Result<Arc<PmCatalog>> {
        if let Some(c) = self.catalog.get() {
            return Ok(Arc::clone(c));
        }
        check_size(self.order())?;
        let mut found = Vec::new();
        if self.order() % 2 == 0 {
            let inc = self.incidence();
            enumerate(&inc, full_mask(self.order()), &mut Vec::new(), &mut found);
        }
        let catalog = Arc::new(PmCatalog::build(self.edge_slots(), found));
        Ok(Arc::clone(self.catalog.get_or_init(|| catalog)))
    }

    /// Some perfect matching of `G - removed`, if one exists.
    pub fn find_perfect_matching_avoiding(&self, removed: u64) -> Result<Option<Vec<EdgeRef>>> {
        check_size(self.order())?;
        let uncovered = full_mask(self.order()) & !removed;
        if uncovered.count_ones() % 2 == 1 {
            return Ok(None);
        }
        let inc = self.incidence();
        let mut current = Vec::new();
        Ok(find_one(&inc, uncovered, &mut current).then(|| {
            current.sort_unstable();
            current
        }))
    }

    pub fn has_perfect_matching(&self) -> Result<bool> {
        Ok(self.find_perfect_matching_avoiding(0)?.is_some())
    }

    /// Edges lying in at least one perfect matching.
    pub fn allowed_edges(&self) -> Result<Vec<EdgeRef>> {
        let cat = self.perfect_matchings()?;
        Ok(self.live_edges().filter(|&e| cat.count_with(e) > 0).collect())
    }

    /// Connected, at least one edge, and every edge in a perfect matching.
    pub fn is_matching_covered(&self) -> Result<bool> {
        if self.edge_count() == 0 || !self.is_connected() {
            return Ok(false);
        }
        Ok(self.allowed_edges()?.len() == self.edge_count())
    }

    /// `G - {x, y}` has a perfect matching for every pair of vertices.
    pub fn is_bicritical(&self) -> Result<bool> {
        let n = self.order();
        for x in 0..n {
            for y in x + 1..n {
                if self.find_perfect_matching_avoiding(1 << x | 1 << y)?.is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Dulmage–Mendelsohn certificate that `e` lies in no perfect matching,
    /// or `None` when it lies in one.
    ///
    /// Fixes one perfect matching `M` and collects the `B` vertices reachable
    /// from the `B` end of `e` by `M`-alternating paths. Their mates form
    /// `A1`; `N(A1)` stays inside that set, which gives the certificate.
    pub fn dm_witness(&self, bip: &Bipartition, e: EdgeRef) -> Result<Option<DmWitness>> {
        self.check_live(e)?;
        if !bip.is_valid_for(self) {
            return Err(Error::BadParameter("bipartition does not fit the graph".into()));
        }
        let m = self.find_perfect_matching_avoiding(0)?.ok_or(Error::NoPerfectMatching)?;
        let n = self.order();
        let mut mate = vec![usize::MAX; n];
        let mut mate_edge = vec![EdgeRef(usize::MAX); n];
        for &f in &m {
            let (u, v) = self.ends(f);
            mate[u] = v;
            mate[v] = u;
            mate_edge[u] = f;
            mate_edge[v] = f;
        }
        let (u, v) = self.ends(e);
        let (a, b) = if bip.is_in_a(u) { (u, v) } else { (v, u) };
        let inc = self.incidence();
        let mut reached = vec![false; n];
        reached[b] = true;
        let mut queue = VecDeque::from([b]);
        while let Some(y) = queue.pop_front() {
            let x = mate[y];
            for &(f, z) in &inc[x] {
                if f != mate_edge[x] && !reached[z] {
                    reached[z] = true;
                    queue.push_back(z);
                }
            }
        }
        if reached[mate[a]] {
            return Ok(None);
        }
        let b1: Vec<usize> = bip.class_b().into_iter().filter(|&y| reached[y]).collect();
        let b2: Vec<usize> = bip.class_b().into_iter().filter(|&y| !reached[y]).collect();
        let mut a1: Vec<usize> = b1.iter().map(|&y| mate[y]).collect();
        a1.sort_unstable();
        let a2: Vec<usize> = bip.class_a().into_iter().filter(|x| a1.binary_search(x).is_err()).collect();
        let witness = DmWitness { a1, a2, b1, b2, edge: e };
        if witness.verify(self, bip) {
            Ok(Some(witness))
        } else {
            Err(Error::ValidationFailed(format!("Dulmage-Mendelsohn witness for {e}")))
        }
    }
}
