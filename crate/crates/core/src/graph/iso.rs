//! Isomorphism by backtracking over colour-refined vertex classes.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, VecDeque};
use std::hash::{Hash, Hasher};

use super::MultiGraph;

fn matrix(g: &MultiGraph, respect_multiplicity: bool) -> Vec<Vec<u32>> {
    let mut a = g.adjacency_counts();
    if !respect_multiplicity {
        for row in a.iter_mut() {
            for c in row.iter_mut() {
                *c = (*c).min(1);
            }
        }
    }
    a
}

/// Degree, triangle count and BFS distance profile of every vertex.
fn initial_signatures(a: &[Vec<u32>]) -> Vec<Vec<u64>> {
    let n = a.len();
    (0..n)
        .map(|v| {
            let degree: u32 = a[v].iter().sum();
            let mut triangles = 0u64;
            for x in 0..n {
                for y in x + 1..n {
                    if a[v][x] > 0 && a[v][y] > 0 && a[x][y] > 0 {
                        triangles += 1;
                    }
                }
            }
            let mut dist = vec![usize::MAX; n];
            dist[v] = 0;
            let mut queue = VecDeque::from([v]);
            let mut profile = vec![0u64; n];
            while let Some(x) = queue.pop_front() {
                profile[dist[x]] += 1;
                for y in 0..n {
                    if a[x][y] > 0 && dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            let mut sig = vec![degree as u64, triangles];
            sig.extend(profile);
            sig
        })
        .collect()
}

/// Stable colour refinement run jointly over several graphs, so that colour
/// ids are comparable between them.
fn refine_jointly(mats: &[&[Vec<u32>]]) -> Vec<Vec<usize>> {
    let sigs: Vec<Vec<Vec<u64>>> = mats.iter().map(|a| initial_signatures(a)).collect();
    let mut colors = relabel(&sigs);
    let total: usize = mats.iter().map(|a| a.len()).sum();
    let mut classes = count_classes(&colors);
    for _ in 0..total {
        let sigs: Vec<Vec<Vec<u64>>> = mats
            .iter()
            .zip(&colors)
            .map(|(a, col)| {
                (0..a.len())
                    .map(|v| {
                        let mut nb: Vec<(u64, u64)> = (0..a.len())
                            .filter(|&u| a[v][u] > 0)
                            .map(|u| (col[u] as u64, a[v][u] as u64))
                            .collect();
                        nb.sort_unstable();
                        let mut s = vec![col[v] as u64];
                        s.extend(nb.into_iter().flat_map(|(c, m)| [c, m]));
                        s
                    })
                    .collect()
            })
            .collect();
        colors = relabel(&sigs);
        let now = count_classes(&colors);
        if now == classes {
            break;
        }
        classes = now;
    }
    colors
}

fn relabel(sigs: &[Vec<Vec<u64>>]) -> Vec<Vec<usize>> {
    let mut ids = BTreeMap::new();
    for s in sigs.iter().flatten() {
        ids.entry(s.clone()).or_insert(0usize);
    }
    for (i, slot) in ids.values_mut().enumerate() {
        *slot = i;
    }
    sigs.iter()
        .map(|g| g.iter().map(|s| ids[s]).collect())
        .collect()
}

fn count_classes(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// True iff some vertex bijection carries the edge multiplicities of `g1`
/// onto those of `g2`. With `respect_multiplicity` off, only the underlying
/// simple graphs are compared.
pub fn is_isomorphic(g1: &MultiGraph, g2: &MultiGraph, respect_multiplicity: bool) -> bool {
    if g1.order() != g2.order() {
        return false;
    }
    let a1 = matrix(g1, respect_multiplicity);
    let a2 = matrix(g2, respect_multiplicity);
    matrices_isomorphic(&a1, &a2)
}

/// Isomorphism of two symmetric multiplicity matrices. Diagonal entries are
/// compared like any other, so loops may be encoded there.
pub(crate) fn matrices_isomorphic(a1: &[Vec<u32>], a2: &[Vec<u32>]) -> bool {
    let n = a1.len();
    if n != a2.len() {
        return false;
    }
    let sum = |a: &[Vec<u32>]| a.iter().flatten().map(|&c| c as u64).sum::<u64>();
    if sum(a1) != sum(a2) {
        return false;
    }
    let colors = refine_jointly(&[a1, a2]);
    let (c1, c2) = (&colors[0], &colors[1]);
    let mut h1 = c1.clone();
    let mut h2 = c2.clone();
    h1.sort_unstable();
    h2.sort_unstable();
    if h1 != h2 {
        return false;
    }

    let class_size = |c: usize| c1.iter().filter(|&&x| x == c).count();
    // Search order: start in the rarest class, then always take the vertex
    // with the most already-placed neighbours.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&u| a1[v][u] > 0).count();
                (linked, std::cmp::Reverse(class_size(c1[v])), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(0, &order, a1, a2, c1, c2, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    depth: usize,
    order: &[usize],
    a1: &[Vec<u32>],
    a2: &[Vec<u32>],
    c1: &[usize],
    c2: &[usize],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..a2.len() {
        if used[w] || c2[w] != c1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a1[v][u] == a2[w][image[u]]);
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if backtrack(depth + 1, order, a1, a2, c1, c2, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}

/// Isomorphism-invariant fingerprint. Equal graphs always agree; distinct
/// keys prove non-isomorphism.
pub fn invariant_key(g: &MultiGraph, respect_multiplicity: bool) -> u64 {
    matrix_invariant(&matrix(g, respect_multiplicity))
}

pub(crate) fn matrix_invariant(a: &[Vec<u32>]) -> u64 {
    let n = a.len();
    let hash = |x: &dyn Fn(&mut DefaultHasher)| {
        let mut h = DefaultHasher::new();
        x(&mut h);
        h.finish()
    };
    let mut labels: Vec<u64> = initial_signatures(a)
        .iter()
        .map(|s| hash(&|h| s.hash(h)))
        .collect();
    for _ in 0..n.min(6) {
        labels = (0..n)
            .map(|v| {
                let mut nb: Vec<(u64, u32)> = (0..n)
                    .filter(|&u| a[v][u] > 0)
                    .map(|u| (labels[u], a[v][u]))
                    .collect();
                nb.sort_unstable();
                hash(&|h| {
                    labels[v].hash(h);
                    nb.hash(h);
                })
            })
            .collect();
    }
    labels.sort_unstable();
    hash(&|h| {
        n.hash(h);
        labels.hash(h);
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn permuted(g: &MultiGraph, perm: &[usize]) -> MultiGraph {
        MultiGraph::new(
            g.order(),
            g.live_pairs().into_iter().map(|(u, v)| (perm[u], perm[v])),
        )
        .unwrap()
    }

    #[test]
    fn family_identities() {
        let k4 = families::k4();
        assert!(is_isomorphic(&families::prism(6).unwrap(), &families::c6_bar(), true));
        assert!(is_isomorphic(&families::moebius(4).unwrap(), &k4, true));
        assert!(!is_isomorphic(&families::petersen(), &families::prism(10).unwrap(), true));
        assert!(!is_isomorphic(&families::prism(8).unwrap(), &families::moebius(8).unwrap(), true));
    }

    #[test]
    fn multiplicity_flag() {
        let a = MultiGraph::new(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = MultiGraph::new(3, [(0, 1), (1, 2), (1, 2)]).unwrap();
        let c = MultiGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(is_isomorphic(&a, &b, true));
        assert!(!is_isomorphic(&a, &c, true));
        assert!(is_isomorphic(&a, &c, false));
    }

    #[test]
    fn relabelled_copies() {
        let p = families::petersen();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        let q = permuted(&p, &perm);
        assert!(is_isomorphic(&p, &q, true));
        assert_eq!(invariant_key(&p, true), invariant_key(&q, true));
    }
}
