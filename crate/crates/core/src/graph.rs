//! Loopless undirected multigraphs with stable edge identities.
//!
//! Vertex sets are `u64` bitmasks, so no graph may exceed [`MAX_ORDER`]
//! vertices. Routines that enumerate vertex subsets or perfect matchings
//! additionally refuse graphs above [`size_limit`].

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::matching::PmCatalog;

mod iso;

pub use iso::{invariant_key, is_isomorphic};
pub(crate) use iso::{matrices_isomorphic, matrix_invariant};

/// Width of the vertex bitmask.
pub const MAX_ORDER: usize = 64;
pub const DEFAULT_SIZE_LIMIT: usize = 24;
/// Overrides [`DEFAULT_SIZE_LIMIT`]. Values above [`MAX_ORDER`] are clamped.
pub const SIZE_LIMIT_ENV: &str = "BRICKFORGE_SIZE_LIMIT";

/// Largest order accepted by the exhaustive routines.
pub fn size_limit() -> usize {
    static LIMIT: OnceLock<usize> = OnceLock::new();
    *LIMIT.get_or_init(|| {
        std::env::var(SIZE_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .map(|l| l.min(MAX_ORDER))
            .unwrap_or(DEFAULT_SIZE_LIMIT)
    })
}

pub(crate) fn check_size(order: usize) -> Result<()> {
    let limit = size_limit();
    if order > limit {
        Err(Error::SizeLimit { order, limit })
    } else {
        Ok(())
    }
}

/// Index of an edge in its graph. Stays valid across deletions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef(pub usize);

impl EdgeRef {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A vertex subset `X`, the shore of the cut `∂(X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Shore(u64);

impl Shore {
    pub fn from_mask(mask: u64) -> Self {
        Shore(mask)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        Shore(vertices.into_iter().fold(0, |m, v| m | (1u64 << v)))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, order: usize) -> Shore {
        Shore(!self.0 & full_mask(order))
    }

    pub fn is_trivial(self, order: usize) -> bool {
        let k = self.len();
        k == 1 || k + 1 == order
    }

    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }
}

pub(crate) fn full_mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

/// A proper 2-colouring. Class `A` always contains the least vertex of each
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    in_b: Vec<bool>,
}

impl Bipartition {
    pub fn from_classes(order: usize, class_b: &[usize]) -> Self {
        let mut in_b = vec![false; order];
        for &v in class_b {
            in_b[v] = true;
        }
        Bipartition { in_b }
    }

    pub fn is_in_a(&self, v: usize) -> bool {
        !self.in_b[v]
    }

    pub fn is_in_b(&self, v: usize) -> bool {
        self.in_b[v]
    }

    pub fn class_a(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&v| !self.in_b[v]).collect()
    }

    pub fn class_b(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&v| self.in_b[v]).collect()
    }

    pub fn shore_a(&self) -> Shore {
        Shore::from_vertices(self.class_a())
    }

    pub fn shore_b(&self) -> Shore {
        Shore::from_vertices(self.class_b())
    }

    pub fn is_balanced(&self) -> bool {
        let b = self.in_b.iter().filter(|&&x| x).count();
        2 * b == self.in_b.len()
    }

    /// True iff every live edge of `g` crosses the two classes.
    pub fn is_valid_for(&self, g: &MultiGraph) -> bool {
        self.in_b.len() == g.order()
            && g.live_edges().all(|e| {
                let (u, v) = g.ends(e);
                self.in_b[u] != self.in_b[v]
            })
    }
}

/// Loopless undirected multigraph on vertices `0..order`.
///
/// Deleting edges yields a new graph whose dead slots are tombstoned, so an
/// [`EdgeRef`] means the same edge in every graph derived by deletion.
pub struct MultiGraph {
    order: usize,
    ends: Vec<(usize, usize)>,
    live: Vec<bool>,
    live_count: usize,
    pub(crate) catalog: OnceLock<Arc<PmCatalog>>,
}

impl Clone for MultiGraph {
    fn clone(&self) -> Self {
        MultiGraph {
            order: self.order,
            ends: self.ends.clone(),
            live: self.live.clone(),
            live_count: self.live_count,
            catalog: self.catalog.clone(),
        }
    }
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.ends == other.ends && self.live == other.live
    }
}

impl Eq for MultiGraph {}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.live_edges().map(|e| (e.0, self.ends[e.0])).collect();
        f.debug_struct("MultiGraph")
            .field("order", &self.order)
            .field("edges", &edges)
            .finish()
    }
}

impl MultiGraph {
    /// Validates and builds a multigraph. Parallel pairs are kept as
    /// distinct edges, in input order.
    pub fn new<I>(order: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        if order > MAX_ORDER {
            return Err(Error::SizeLimit { order, limit: MAX_ORDER });
        }
        let mut ends = Vec::new();
        for (index, (u, v)) in pairs.into_iter().enumerate() {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { index, vertex: u });
            }
            ends.push((u.min(v), u.max(v)));
        }
        let m = ends.len();
        Ok(MultiGraph {
            order,
            ends,
            live: vec![true; m],
            live_count: m,
            catalog: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edge slots, dead ones included.
    pub fn edge_slots(&self) -> usize {
        self.ends.len()
    }

    /// Number of live edges.
    pub fn edge_count(&self) -> usize {
        self.live_count
    }

    pub fn is_live(&self, e: EdgeRef) -> bool {
        self.live.get(e.0).copied().unwrap_or(false)
    }

    pub(crate) fn check_live(&self, e: EdgeRef) -> Result<()> {
        if self.is_live(e) {
            Ok(())
        } else {
            Err(Error::DeadEdge(e))
        }
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn ends(&self, e: EdgeRef) -> (usize, usize) {
        self.ends[e.0]
    }

    pub fn other_end(&self, e: EdgeRef, v: usize) -> usize {
        let (a, b) = self.ends[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn live_edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.ends.len())
            .filter(move |&i| self.live[i])
            .map(EdgeRef)
    }

    pub fn live_pairs(&self) -> Vec<(usize, usize)> {
        self.live_edges().map(|e| self.ends(e)).collect()
    }

    pub fn are_adjacent(&self, e: EdgeRef, f: EdgeRef) -> bool {
        let (a, b) = self.ends(e);
        let (c, d) = self.ends(f);
        e != f && (a == c || a == d || b == c || b == d)
    }

    pub fn has_edge_between(&self, u: usize, v: usize) -> bool {
        self.live_edges().any(|e| {
            let (a, b) = self.ends(e);
            (a, b) == (u.min(v), u.max(v))
        })
    }

    /// Per vertex, the live incident edges with their far endpoint.
    pub fn incidence(&self) -> Vec<Vec<(EdgeRef, usize)>> {
        let mut inc = vec![Vec::new(); self.order];
        for e in self.live_edges() {
            let (u, v) = self.ends(e);
            inc[u].push((e, v));
            inc[v].push((e, u));
        }
        inc
    }

    pub fn degree(&self, v: usize) -> usize {
        self.live_edges()
            .filter(|&e| {
                let (a, b) = self.ends(e);
                a == v || b == v
            })
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for e in self.live_edges() {
            let (u, v) = self.ends(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_cubic(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    /// True iff no two live edges join the same pair.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.live_edges().all(|e| seen.insert(self.ends(e)))
    }

    /// Edge multiplicities as a dense matrix.
    pub fn adjacency_counts(&self) -> Vec<Vec<u32>> {
        let mut a = vec![vec![0u32; self.order]; self.order];
        for e in self.live_edges() {
            let (u, v) = self.ends(e);
            a[u][v] += 1;
            a[v][u] += 1;
        }
        a
    }

    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        let mut nb = vec![0u64; self.order];
        for e in self.live_edges() {
            let (u, v) = self.ends(e);
            nb[u] |= 1 << v;
            nb[v] |= 1 << u;
        }
        nb
    }

    /// Copy with the given edges tombstoned.
    pub fn delete_edges(&self, edges: &[EdgeRef]) -> Result<MultiGraph> {
        let mut live = self.live.clone();
        let mut live_count = self.live_count;
        for &e in edges {
            if !live.get(e.0).copied().unwrap_or(false) {
                return Err(Error::DeadEdge(e));
            }
            live[e.0] = false;
            live_count -= 1;
        }
        Ok(MultiGraph {
            order: self.order,
            ends: self.ends.clone(),
            live,
            live_count,
            catalog: OnceLock::new(),
        })
    }

    /// Drops tombstones, renumbering the surviving edges in order.
    pub fn compact(&self) -> MultiGraph {
        MultiGraph::new(self.order, self.live_pairs()).expect("live edges are valid")
    }

    /// Same vertex set with parallel edges merged.
    pub fn underlying_simple(&self) -> MultiGraph {
        let mut pairs = self.live_pairs();
        pairs.sort_unstable();
        pairs.dedup();
        MultiGraph::new(self.order, pairs).expect("subset of valid edges")
    }

    fn check_shore(&self, x: Shore) -> Result<()> {
        if let Some(v) = x.vertices().find(|&v| v >= self.order) {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order });
        }
        if x.is_empty() {
            Err(Error::EmptyShore)
        } else if x.len() == self.order {
            Err(Error::FullShore)
        } else {
            Ok(())
        }
    }

    /// `∂(X)`: live edges with exactly one end in `X`.
    pub fn cut_edges(&self, x: Shore) -> Result<Vec<EdgeRef>> {
        self.check_shore(x)?;
        Ok(self.cut_edges_unchecked(x.mask()))
    }

    pub(crate) fn cut_edges_unchecked(&self, mask: u64) -> Vec<EdgeRef> {
        self.live_edges()
            .filter(|&e| {
                let (u, v) = self.ends(e);
                (mask >> u & 1) != (mask >> v & 1)
            })
            .collect()
    }

    /// `E(X, Y)` for disjoint vertex sets.
    pub fn edges_between(&self, x: Shore, y: Shore) -> Vec<EdgeRef> {
        self.live_edges()
            .filter(|&e| {
                let (u, v) = self.ends(e);
                (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u))
            })
            .collect()
    }

    /// Live edges with both ends in `X`.
    pub fn induced_edges(&self, x: Shore) -> Vec<EdgeRef> {
        self.edges_between(x, x)
            .into_iter()
            .filter(|&e| {
                let (u, v) = self.ends(e);
                x.contains(u) && x.contains(v)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_avoiding(0)
    }

    /// Connectivity of `G - removed`. An empty remainder counts as connected.
    pub(crate) fn is_connected_avoiding(&self, removed: u64) -> bool {
        let all = full_mask(self.order) & !removed;
        if all == 0 {
            return true;
        }
        let nb = self.neighbor_masks();
        let start = all.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = nb[v] & all & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == all
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<Shore> {
        let nb = self.neighbor_masks();
        let mut left = full_mask(self.order);
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = nb[v] & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
            left &= !seen;
            out.push(Shore(seen));
        }
        out
    }

    /// Calls `visit(mask, |X|, |∂(X)|)` on every nonempty proper shore that
    /// contains vertex 0, walking them in Gray-code order.
    fn for_each_cut<F: FnMut(u64, usize, usize)>(&self, mut visit: F) {
        let n = self.order;
        if n < 2 {
            return;
        }
        let counts = self.adjacency_counts();
        let nbrs: Vec<Vec<(usize, usize)>> = counts
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(u, &c)| (u, c as usize))
                    .collect()
            })
            .collect();
        let degree: Vec<usize> = nbrs.iter().map(|r| r.iter().map(|&(_, c)| c).sum()).collect();
        let full = full_mask(n);
        let mut mask = 1u64;
        let mut size = 1usize;
        let mut cut = degree[0];
        visit(mask, size, cut);
        for i in 1u64..(1u64 << (n - 1)) {
            let v = i.trailing_zeros() as usize + 1;
            let inside: usize = nbrs[v]
                .iter()
                .filter(|&&(u, _)| mask >> u & 1 == 1)
                .map(|&(_, c)| c)
                .sum();
            let outside = degree[v] - inside;
            if mask >> v & 1 == 1 {
                mask &= !(1 << v);
                size -= 1;
                cut = cut + inside - outside;
            } else {
                mask |= 1 << v;
                size += 1;
                cut = cut + outside - inside;
            }
            if mask != full {
                visit(mask, size, cut);
            }
        }
    }

    /// Minimum `|∂(X)|` over all nonempty proper shores.
    pub fn edge_connectivity(&self) -> Result<usize> {
        check_size(self.order)?;
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.order == 1 {
            return Ok(0);
        }
        let mut best = usize::MAX;
        self.for_each_cut(|_, _, cut| best = best.min(cut));
        Ok(best)
    }

    /// 2-edge-connected with every 3-cut trivial.
    pub fn is_essentially_4ec_cubic(&self) -> Result<bool> {
        if !self.is_cubic() {
            return Err(Error::NotCubic);
        }
        check_size(self.order)?;
        let n = self.order;
        let mut ok = true;
        self.for_each_cut(|_, size, cut| {
            if cut < 2 || (cut == 3 && size != 1 && size + 1 != n) {
                ok = false;
            }
        });
        Ok(ok)
    }

    /// Proper 2-colouring of a possibly disconnected graph.
    pub fn two_coloring(&self) -> Option<Bipartition> {
        let inc = self.incidence();
        let mut color: Vec<Option<bool>> = vec![None; self.order];
        for s in 0..self.order {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let cv = color[v].unwrap();
                for &(_, u) in &inc[v] {
                    match color[u] {
                        None => {
                            color[u] = Some(!cv);
                            stack.push(u);
                        }
                        Some(cu) if cu == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition {
            in_b: color.into_iter().map(|c| c.unwrap()).collect(),
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.two_coloring())
    }

    /// Shrinks `X` to a single vertex, which gets the highest index. The
    /// remaining vertices keep their relative order.
    pub fn contract_shore(&self, x: Shore) -> Result<MultiGraph> {
        self.contract_shore_with_origin(x).map(|(g, _)| g)
    }

    /// As [`contract_shore`](Self::contract_shore), also returning the
    /// originating edge of every edge of the contraction.
    pub fn contract_shore_with_origin(&self, x: Shore) -> Result<(MultiGraph, Vec<EdgeRef>)> {
        self.check_shore(x)?;
        let mut relabel = vec![0usize; self.order];
        let mut next = 0;
        for (v, slot) in relabel.iter_mut().enumerate() {
            if !x.contains(v) {
                *slot = next;
                next += 1;
            }
        }
        let shrunk = next;
        for v in x.vertices() {
            relabel[v] = shrunk;
        }
        let mut pairs = Vec::new();
        let mut origin = Vec::new();
        for e in self.live_edges() {
            let (u, v) = self.ends(e);
            if x.contains(u) && x.contains(v) {
                continue;
            }
            pairs.push((relabel[u], relabel[v]));
            origin.push(e);
        }
        Ok((MultiGraph::new(shrunk + 1, pairs)?, origin))
    }

    /// Standard vertex connectivity test: more than `k` vertices, and no set
    /// of fewer than `k` vertices disconnects the graph.
    pub fn vertex_connectivity_at_least(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.order <= k {
            return false;
        }
        fn search(g: &MultiGraph, from: usize, removed: u64, budget: usize) -> bool {
            if !g.is_connected_avoiding(removed) {
                return false;
            }
            if budget == 0 {
                return true;
            }
            (from..g.order).all(|v| search(g, v + 1, removed | 1 << v, budget - 1))
        }
        search(self, 0, 0, k - 1)
    }
}
