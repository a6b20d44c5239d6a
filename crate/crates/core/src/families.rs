//! Named graph families and an isomorph-free enumerator of small cubic
//! graphs.
//!
//! Ladders `H_k` are labelled with the top path on even vertices and the
//! bottom path on odd ones: `t_i = 2i`, `b_i = 2i + 1`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{matrices_isomorphic, matrix_invariant, MultiGraph};
#[cfg(test)]
use crate::graph::is_isomorphic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    K4,
    C6Bar,
    /// `H_k`, the path on `k` vertices times `K2`.
    Ladder(usize),
    /// Prism of the given (even) order.
    Prism(usize),
    /// Möbius ladder of the given (even) order.
    Moebius(usize),
    Petersen,
    Cubeplex,
}

impl FamilySpec {
    pub fn parse(name: &str, size: Option<usize>) -> Result<Self> {
        let need = |what: &str| {
            size.ok_or_else(|| Error::BadParameter(format!("{name} needs a {what}")))
        };
        let spec = match name.to_ascii_lowercase().as_str() {
            "k4" => FamilySpec::K4,
            "c6bar" => FamilySpec::C6Bar,
            "ladder" => FamilySpec::Ladder(need("length")?),
            "prism" => FamilySpec::Prism(need("order")?),
            "moebius" | "mobius" => FamilySpec::Moebius(need("order")?),
            "petersen" => FamilySpec::Petersen,
            "cubeplex" => FamilySpec::Cubeplex,
            other => return Err(Error::BadParameter(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Ladder(k) if k < 2 => {
                Err(Error::BadParameter(format!("ladder length {k} is below 2")))
            }
            FamilySpec::Prism(n) | FamilySpec::Moebius(n) if n < 4 || n % 2 == 1 => {
                Err(Error::BadParameter(format!("order {n} must be even and at least 4")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::K4 => write!(f, "k4"),
            FamilySpec::C6Bar => write!(f, "c6bar"),
            FamilySpec::Ladder(k) => write!(f, "ladder({k})"),
            FamilySpec::Prism(n) => write!(f, "prism({n})"),
            FamilySpec::Moebius(n) => write!(f, "moebius({n})"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Cubeplex => write!(f, "cubeplex"),
        }
    }
}

pub fn generate(spec: FamilySpec) -> Result<MultiGraph> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::K4 => k4(),
        FamilySpec::C6Bar => c6_bar(),
        FamilySpec::Ladder(k) => ladder(k)?,
        FamilySpec::Prism(n) => prism(n)?,
        FamilySpec::Moebius(n) => moebius(n)?,
        FamilySpec::Petersen => petersen(),
        FamilySpec::Cubeplex => cubeplex(),
    })
}

pub fn k4() -> MultiGraph {
    MultiGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Complement of the 6-cycle: two triangles joined by a perfect matching.
pub fn c6_bar() -> MultiGraph {
    let pairs = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v)));
    let non_cycle = pairs.filter(|&(u, v)| v - u != 1 && v - u != 5);
    MultiGraph::new(6, non_cycle).unwrap()
}

fn ladder_pairs(k: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(3 * k - 2);
    for i in 0..k {
        pairs.push((2 * i, 2 * i + 1));
        if i + 1 < k {
            pairs.push((2 * i, 2 * i + 2));
            pairs.push((2 * i + 1, 2 * i + 3));
        }
    }
    pairs
}

pub fn ladder(k: usize) -> Result<MultiGraph> {
    FamilySpec::Ladder(k).validate()?;
    MultiGraph::new(2 * k, ladder_pairs(k))
}

/// `H_k` closed by `t_0 t_{k-1}` and `b_0 b_{k-1}`. For odd `k` these two
/// edges join ends of equal colour, so the prism is non-bipartite.
pub fn prism(order: usize) -> Result<MultiGraph> {
    FamilySpec::Prism(order).validate()?;
    let k = order / 2;
    let mut pairs = ladder_pairs(k);
    pairs.push((0, 2 * (k - 1)));
    pairs.push((1, 2 * (k - 1) + 1));
    MultiGraph::new(order, pairs)
}

/// `H_k` closed by `t_0 b_{k-1}` and `b_0 t_{k-1}`. Non-bipartite for even
/// `k`.
pub fn moebius(order: usize) -> Result<MultiGraph> {
    FamilySpec::Moebius(order).validate()?;
    let k = order / 2;
    let mut pairs = ladder_pairs(k);
    pairs.push((0, 2 * (k - 1) + 1));
    pairs.push((1, 2 * (k - 1)));
    MultiGraph::new(order, pairs)
}

/// Kneser graph on the 2-subsets of a 5-set, subsets in lexicographic
/// order.
pub fn petersen() -> MultiGraph {
    let subsets: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut pairs = Vec::new();
    for (i, &(a, b)) in subsets.iter().enumerate() {
        for (j, &(c, d)) in subsets.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                pairs.push((i, j));
            }
        }
    }
    MultiGraph::new(10, pairs).unwrap()
}

/// The twelve-vertex Cubeplex: a cubic, essentially 4-edge-connected
/// near-bipartite brick with two adjacent quasi-b-invariant edges.
pub fn cubeplex() -> MultiGraph {
    MultiGraph::new(
        12,
        [
            (0, 2), (0, 4), (0, 6), (1, 3), (1, 5), (1, 6),
            (2, 8), (2, 10), (3, 7), (3, 8), (4, 5), (4, 11),
            (5, 9), (6, 7), (7, 10), (8, 9), (9, 11), (10, 11),
        ],
    )
    .unwrap()
}

/// All connected simple cubic graphs of order `n`, one per isomorphism
/// class, in a fixed order.
///
/// Generation runs over connected cubic multigraphs with loops allowed:
/// order `n + 2` comes from order `n` by subdividing two edges (possibly the
/// same edge twice) and joining the two new vertices, starting from the
/// theta and dumbbell graphs of order 2. Loops are needed on the way to
/// graphs with bridges. Only the last level is restricted to simple graphs.
/// Simple graphs suffice for the sweep: a parallel pair in a cubic graph sits
/// inside a 2-edge cut (or is the whole graph), so no cubic multigraph is
/// 3-connected, let alone a brick.
pub fn enumerate_cubic(n: usize) -> Result<Vec<MultiGraph>> {
    if n % 2 == 1 || !(4..=14).contains(&n) {
        return Err(Error::BadParameter(format!("cubic order {n} must be even in 4..=14")));
    }
    let theta = vec![(0, 1); 3];
    let dumbbell = vec![(0, 0), (0, 1), (1, 1)];
    let mut level = vec![theta, dumbbell];
    let mut order = 2;
    while order < n {
        level = grow(&level, order, order + 2 == n);
        order += 2;
    }
    Ok(level
        .into_iter()
        .map(|pairs| MultiGraph::new(n, pairs).expect("simple cubic graph"))
        .collect())
}

type EdgeList = Vec<(usize, usize)>;

/// Multiplicity matrix with each loop counted twice on the diagonal.
fn loop_matrix(order: usize, pairs: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let mut a = vec![vec![0u32; order]; order];
    for &(u, v) in pairs {
        a[u][v] += 1;
        a[v][u] += 1;
    }
    a
}

fn is_simple_list(pairs: &[(usize, usize)]) -> bool {
    pairs.iter().all(|&(u, v)| u != v) && pairs.windows(2).all(|w| w[0] != w[1])
}

fn grow(level: &[EdgeList], order: usize, simple_only: bool) -> Vec<EdgeList> {
    let mut out: Vec<EdgeList> = Vec::new();
    let mut mats: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    let (x, y) = (order, order + 1);
    for pairs in level {
        for i in 0..pairs.len() {
            for j in i..pairs.len() {
                let mut next: EdgeList = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &p)| p)
                    .collect();
                let (a, b) = pairs[i];
                if i == j {
                    next.extend([(a, x), (x, y), (y, b), (x, y)]);
                } else {
                    let (c, d) = pairs[j];
                    next.extend([(a, x), (x, b), (c, y), (y, d), (x, y)]);
                }
                for p in next.iter_mut() {
                    *p = (p.0.min(p.1), p.0.max(p.1));
                }
                next.sort_unstable();
                if simple_only && !is_simple_list(&next) {
                    continue;
                }
                let mat = loop_matrix(order + 2, &next);
                let bucket = buckets.entry(matrix_invariant(&mat)).or_default();
                if bucket.iter().any(|&k| matrices_isomorphic(&mats[k], &mat)) {
                    continue;
                }
                bucket.push(out.len());
                out.push(next);
                mats.push(mat);
            }
        }
    }
    out
}
