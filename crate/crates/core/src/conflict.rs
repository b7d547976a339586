//! Compilation of an L(h,k) instance into explicit separation constraints.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{GraphPatch, Mode};

/// Two elements whose labels must differ by at least `min_sep`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeparationPair {
    pub a: usize,
    pub b: usize,
    pub min_sep: u32,
    /// Element distance that produced the constraint (1 or 2).
    pub distance: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ModelRepr {
    mode: Mode,
    h: u32,
    k: u32,
    elements: usize,
    pairs: Vec<SeparationPair>,
}

/// A compiled L(h,k) instance. Elements are `0..element_count()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModelRepr", into = "ModelRepr")]
pub struct ConflictModel {
    mode: Mode,
    h: u32,
    k: u32,
    elements: usize,
    pairs: Vec<SeparationPair>,
    adjacency: Vec<Vec<(usize, u32)>>,
}

impl TryFrom<ModelRepr> for ConflictModel {
    type Error = Error;

    fn try_from(r: ModelRepr) -> Result<Self> {
        ConflictModel::from_pairs(r.mode, r.h, r.k, r.elements, r.pairs)
    }
}

impl From<ConflictModel> for ModelRepr {
    fn from(m: ConflictModel) -> Self {
        ModelRepr { mode: m.mode, h: m.h, k: m.k, elements: m.elements, pairs: m.pairs }
    }
}

impl ConflictModel {
    /// Builds a model from explicit pairs. Pairs are canonicalized (`a < b`) and sorted.
    pub fn from_pairs(mode: Mode, h: u32, k: u32, elements: usize, pairs: Vec<SeparationPair>) -> Result<Self> {
        let mut canon: Vec<SeparationPair> = Vec::with_capacity(pairs.len());
        for p in pairs {
            if p.a == p.b {
                return Err(Error::Malformed(format!("pair ({}, {}) joins an element to itself", p.a, p.b)));
            }
            for x in [p.a, p.b] {
                if x >= elements {
                    return Err(Error::Lookup(x));
                }
            }
            canon.push(SeparationPair { a: p.a.min(p.b), b: p.a.max(p.b), ..p });
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| (w[0].a, w[0].b) == (w[1].a, w[1].b)) {
            return Err(Error::Malformed("duplicate separation pair".into()));
        }
        let mut adjacency = vec![Vec::new(); elements];
        for p in &canon {
            adjacency[p.a].push((p.b, p.min_sep));
            adjacency[p.b].push((p.a, p.min_sep));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(ConflictModel { mode, h, k, elements, pairs: canon, adjacency })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn element_count(&self) -> usize {
        self.elements
    }

    pub fn pairs(&self) -> &[SeparationPair] {
        &self.pairs
    }

    /// `(neighbor, min_sep)` for every constraint touching `e`, sorted by neighbor.
    pub fn neighbors(&self, e: usize) -> &[(usize, u32)] {
        &self.adjacency[e]
    }

    pub fn separation(&self, a: usize, b: usize) -> Option<u32> {
        self.adjacency[a].binary_search_by_key(&b, |&(n, _)| n).ok().map(|i| self.adjacency[a][i].1)
    }

    /// The model restricted to `keep`; element `i` of the result is `keep[i]`.
    pub fn restrict(&self, keep: &[usize]) -> Result<ConflictModel> {
        let mut pos = vec![usize::MAX; self.elements];
        for (i, &e) in keep.iter().enumerate() {
            if e >= self.elements {
                return Err(Error::Lookup(e));
            }
            pos[e] = i;
        }
        let pairs = self
            .pairs
            .iter()
            .filter(|p| pos[p.a] != usize::MAX && pos[p.b] != usize::MAX)
            .map(|p| SeparationPair { a: pos[p.a], b: pos[p.b], ..*p })
            .collect();
        ConflictModel::from_pairs(self.mode, self.h, self.k, keep.len(), pairs)
    }
}

/// One pair per element pair at distance 1 (separation `h`) or 2 (separation `k`);
/// a zero separation constrains nothing and gets no pair.
pub fn build_conflicts(patch: &GraphPatch, h: u32, k: u32, mode: Mode) -> ConflictModel {
    let graph = patch.element_graph(mode);
    let mut pairs = Vec::new();
    for a in 0..graph.len() {
        for (b, d) in graph.distances_from(a, 2).into_iter().enumerate() {
            match d {
                Some(1) if b > a && h > 0 => pairs.push(SeparationPair { a, b, min_sep: h, distance: 1 }),
                Some(2) if b > a && k > 0 => pairs.push(SeparationPair { a, b, min_sep: k, distance: 2 }),
                _ => {}
            }
        }
    }
    ConflictModel::from_pairs(mode, h, k, graph.len(), pairs).expect("pairs come from a valid patch")
}

/// Grows a clique greedily from `start`, always taking the candidate with the
/// most remaining candidate neighbors (ties to the lowest id).
fn greedy_clique(n: usize, adj: &[Vec<bool>], start: usize) -> Vec<usize> {
    let mut clique = vec![start];
    let mut cand: Vec<usize> = (0..n).filter(|&x| adj[start][x]).collect();
    while !cand.is_empty() {
        let best = *cand
            .iter()
            .max_by_key(|&&x| (cand.iter().filter(|&&y| adj[x][y]).count(), std::cmp::Reverse(x)))
            .expect("nonempty");
        clique.push(best);
        cand.retain(|&y| y != best && adj[best][y]);
    }
    clique
}

fn best_greedy_clique(n: usize, adj: &[Vec<bool>]) -> usize {
    (0..n).map(|s| greedy_clique(n, adj, s).len()).max().unwrap_or(0)
}

/// A lower bound on the minimum span from greedily found constraint cliques.
///
/// A set of `q` pairwise-constrained elements needs `q` distinct labels,
/// so at least `(q − 1)·min(h, k)`; a set of `q′` elements pairwise at
/// distance exactly 2 needs `k·(q′ − 1)`.
pub fn clique_lower_bound(model: &ConflictModel) -> u32 {
    let n = model.element_count();
    if n == 0 {
        return 0;
    }
    let mut any = vec![vec![false; n]; n];
    let mut dist2 = vec![vec![false; n]; n];
    for p in model.pairs() {
        if p.min_sep == 0 {
            continue;
        }
        any[p.a][p.b] = true;
        any[p.b][p.a] = true;
        if p.distance == 2 {
            dist2[p.a][p.b] = true;
            dist2[p.b][p.a] = true;
        }
    }
    let min_sep = model.h().min(model.k());
    let q = best_greedy_clique(n, &any) as u32;
    let q2 = best_greedy_clique(n, &dist2) as u32;
    (min_sep * (q - 1)).max(model.k() * (q2 - 1))
}
