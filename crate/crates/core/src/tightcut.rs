//! Tight and separating cuts, and the tight cut decomposition into bricks
//! and braces.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::{check_size, is_isomorphic, MultiGraph, Shore};
use crate::matching::PmCatalog;

/// How the decomposition picks among several nontrivial tight cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutPolicy {
    /// Numerically least shore mask.
    #[default]
    LeastShore,
    /// Uniformly random cut and orientation from a seeded generator.
    Seeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieceKind {
    Brick,
    Brace,
}

#[derive(Debug, Clone)]
pub struct Piece {
    pub graph: MultiGraph,
    pub kind: PieceKind,
}

/// Record of the cuts taken. `Split` holds the shore `X` in the graph being
/// split; `keep_shore` is `G/X̄` and `keep_complement` is `G/X`.
#[derive(Debug, Clone)]
pub enum CutTree {
    Leaf(usize),
    Split {
        shore: Shore,
        order: usize,
        keep_shore: Box<CutTree>,
        keep_complement: Box<CutTree>,
    },
}

impl CutTree {
    pub fn cut_count(&self) -> usize {
        match self {
            CutTree::Leaf(_) => 0,
            CutTree::Split { keep_shore, keep_complement, .. } => {
                1 + keep_shore.cut_count() + keep_complement.cut_count()
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub pieces: Vec<Piece>,
    pub tree: CutTree,
    /// Brick number `b(G)`.
    pub bricks: usize,
    /// Bricks whose underlying simple graph is the Petersen graph.
    pub petersen_bricks: usize,
}

impl Decomposition {
    pub fn braces(&self) -> usize {
        self.pieces.len() - self.bricks
    }
}

fn meets_once(g: &MultiGraph, cat: &PmCatalog, mask: u64) -> bool {
    cat.matchings().iter().all(|m| crossing(g, m, mask) == 1)
}

fn crossing(g: &MultiGraph, m: &[crate::graph::EdgeRef], mask: u64) -> usize {
    m.iter()
        .filter(|&&e| {
            let (u, v) = g.ends(e);
            (mask >> u & 1) != (mask >> v & 1)
        })
        .count()
}

fn is_petersen_like(g: &MultiGraph) -> bool {
    static PETERSEN: OnceLock<MultiGraph> = OnceLock::new();
    g.order() == 10 && is_isomorphic(g, PETERSEN.get_or_init(families::petersen), false)
}

impl MultiGraph {
    fn require_matching_covered(&self) -> Result<()> {
        if self.is_matching_covered()? {
            Ok(())
        } else {
            Err(Error::NotMatchingCovered)
        }
    }

    /// Every perfect matching meets `∂(X)` exactly once.
    pub fn is_tight_cut(&self, x: Shore) -> Result<bool> {
        self.cut_edges(x)?;
        self.require_matching_covered()?;
        Ok(meets_once(self, &*self.perfect_matchings()?, x.mask()))
    }

    /// Every edge lies in some perfect matching meeting `∂(X)` exactly once.
    pub fn is_separating_cut(&self, x: Shore) -> Result<bool> {
        self.cut_edges(x)?;
        self.require_matching_covered()?;
        let cat = self.perfect_matchings()?;
        let good: Vec<bool> = cat
            .matchings()
            .iter()
            .map(|m| crossing(self, m, x.mask()) == 1)
            .collect();
        Ok(self
            .live_edges()
            .all(|e| cat.matchings_with(e).any(|i| good[i])))
    }

    /// All nontrivial tight cuts, each given by its shore avoiding the
    /// highest vertex, in increasing mask order.
    pub fn nontrivial_tight_cuts(&self) -> Result<Vec<Shore>> {
        self.require_matching_covered()?;
        self.tight_cuts_unchecked(false)
    }

    /// The numerically least shore `X` with `|X|` odd, `2 ≤ |X| ≤ n - 2`
    /// and `∂(X)` tight.
    pub fn find_nontrivial_tight_cut(&self) -> Result<Option<Shore>> {
        self.require_matching_covered()?;
        Ok(self.tight_cuts_unchecked(true)?.into_iter().next())
    }

    /// Scans odd shores without the top vertex; every cut has exactly one
    /// such shore, and it is the smaller mask of the two.
    fn tight_cuts_unchecked(&self, first_only: bool) -> Result<Vec<Shore>> {
        let n = self.order();
        check_size(n)?;
        let mut out = Vec::new();
        if n < 6 || n % 2 == 1 {
            return Ok(out);
        }
        let cat = self.perfect_matchings()?;
        for mask in 0u64..1 << (n - 1) {
            let k = mask.count_ones() as usize;
            if k % 2 == 0 || k < 3 || k > n - 3 {
                continue;
            }
            if meets_once(self, &*cat, mask) {
                out.push(Shore::from_mask(mask));
                if first_only {
                    break;
                }
            }
        }
        Ok(out)
    }

    pub fn tight_cut_decomposition(&self, policy: CutPolicy) -> Result<Decomposition> {
        self.require_matching_covered()?;
        let mut rng = match policy {
            CutPolicy::LeastShore => None,
            CutPolicy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        };
        let mut pieces = Vec::new();
        let tree = decompose(self.clone(), &mut rng, &mut pieces)?;
        let bricks = pieces.iter().filter(|p| p.kind == PieceKind::Brick).count();
        let petersen_bricks = pieces
            .iter()
            .filter(|p| p.kind == PieceKind::Brick && is_petersen_like(&p.graph))
            .count();
        Ok(Decomposition { pieces, tree, bricks, petersen_bricks })
    }

    /// `b(G)`.
    pub fn brick_number(&self) -> Result<usize> {
        Ok(self.tight_cut_decomposition(CutPolicy::LeastShore)?.bricks)
    }

    /// `p(G)`.
    pub fn petersen_count(&self) -> Result<usize> {
        Ok(self.tight_cut_decomposition(CutPolicy::LeastShore)?.petersen_bricks)
    }

    /// 3-connected and bicritical.
    pub fn is_brick(&self) -> Result<bool> {
        Ok(self.vertex_connectivity_at_least(3) && self.is_bicritical()?)
    }

    /// Matching covered, non-bipartite, and free of nontrivial tight cuts.
    pub fn is_brick_by_definition(&self) -> Result<bool> {
        Ok(self.is_matching_covered()?
            && !self.is_bipartite()
            && self.tight_cuts_unchecked(true)?.is_empty())
    }

    /// Matching covered, bipartite, and free of nontrivial tight cuts.
    pub fn is_brace(&self) -> Result<bool> {
        Ok(self.is_matching_covered()?
            && self.is_bipartite()
            && self.tight_cuts_unchecked(true)?.is_empty())
    }
}

fn decompose(
    g: MultiGraph,
    rng: &mut Option<ChaCha8Rng>,
    pieces: &mut Vec<Piece>,
) -> Result<CutTree> {
    let chosen = match rng {
        None => g.tight_cuts_unchecked(true)?.into_iter().next(),
        Some(r) => {
            let all = g.tight_cuts_unchecked(false)?;
            all.choose(r).map(|&x| {
                if r.gen_bool(0.5) {
                    x.complement(g.order())
                } else {
                    x
                }
            })
        }
    };
    let Some(shore) = chosen else {
        let kind = if g.is_bipartite() { PieceKind::Brace } else { PieceKind::Brick };
        pieces.push(Piece { graph: g, kind });
        return Ok(CutTree::Leaf(pieces.len() - 1));
    };
    let order = g.order();
    let keep_shore = g.contract_shore(shore.complement(order))?;
    let keep_complement = g.contract_shore(shore)?;
    drop(g);
    Ok(CutTree::Split {
        shore,
        order,
        keep_shore: Box::new(decompose(keep_shore, rng, pieces)?),
        keep_complement: Box::new(decompose(keep_complement, rng, pieces)?),
    })
}
