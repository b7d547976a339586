//! Maximum sets of pairwise-compatible elements (maximum cliques of a small
//! compatibility graph), by branch and bound on 128-bit sets.

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 128;

/// A symmetric compatibility relation on at most 128 elements.
#[derive(Debug, Clone)]
pub struct Compat {
    adj: Vec<u128>,
}

impl Compat {
    pub fn new(n: usize, compatible: impl Fn(usize, usize) -> bool) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::Unsupported(format!("{n} elements exceed the {MAX_ELEMENTS}-element set width")));
        }
        let mut adj = vec![0u128; n];
        for a in 0..n {
            for b in a + 1..n {
                if compatible(a, b) {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        Ok(Compat { adj })
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// A largest pairwise-compatible subset of `candidates`, lowest ids preferred on ties.
    pub fn max_set(&self, candidates: &[usize]) -> Vec<usize> {
        let mut cand = 0u128;
        for &c in candidates {
            cand |= 1 << c;
        }
        let mut best = Vec::new();
        let mut cur = Vec::new();
        self.expand(cand, &mut cur, &mut best);
        best
    }

    fn expand(&self, mut cand: u128, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        while cand != 0 {
            if cur.len() + (cand.count_ones() as usize) <= best.len() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            cur.push(v);
            self.expand(cand & self.adj[v], cur, best);
            cur.pop();
        }
    }
}

/// Size of a largest pairwise-compatible subset by trying subsets of
/// increasing size. Exponential; used as a cross-check.
pub fn naive_max_set_size(candidates: &[usize], compatible: impl Fn(usize, usize) -> bool) -> usize {
    fn exists(cands: &[usize], size: usize, chosen: &mut Vec<usize>, ok: &dyn Fn(usize, usize) -> bool) -> bool {
        if chosen.len() == size {
            return true;
        }
        for (i, &c) in cands.iter().enumerate() {
            if chosen.iter().all(|&x| ok(x, c)) {
                chosen.push(c);
                if exists(&cands[i + 1..], size, chosen, ok) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut size = 0;
    while size < candidates.len() && exists(candidates, size + 1, &mut Vec::new(), &compatible) {
        size += 1;
    }
    size
}
