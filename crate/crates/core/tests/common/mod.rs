#![allow(dead_code)]

use std::collections::VecDeque;

use gridlabel::{generate_patch, GraphPatch, GridKind, Mode};
use rand::seq::SliceRandom;
use rand::Rng;

/// A random patch with at most `max_elements` elements in a random mode:
/// random vertices of a lattice ball (vertex mode) or random edges of it (edge mode).
pub fn random_instance(rng: &mut impl Rng, max_elements: usize) -> (GraphPatch, Mode) {
    let kind = *GridKind::ALL.choose(rng).unwrap();
    let ball = generate_patch(kind, 2, kind.origin()).unwrap();
    let count = rng.gen_range(1..=max_elements);
    if rng.gen_bool(0.5) {
        let coords: Vec<_> = ball.vertices().choose_multiple(rng, count.min(ball.vertex_count())).map(|v| v.coord).collect();
        (GraphPatch::induced(ball.kind(), coords).unwrap(), Mode::Vertex)
    } else {
        let ids: Vec<usize> = (0..ball.edge_count()).collect();
        let pairs: Vec<_> = ids.choose_multiple(rng, count.min(ball.edge_count())).map(|&e| ball.edge_coords(e)).collect();
        (GraphPatch::from_edge_coords(ball.kind(), &pairs).unwrap(), Mode::Edge)
    }
}

/// All-pairs element distances by breadth-first search on an adjacency
/// built here from the raw edge list.
pub fn element_distances(p: &GraphPatch, mode: Mode) -> Vec<Vec<Option<usize>>> {
    let n = p.element_count(mode);
    let mut adj = vec![Vec::new(); n];
    match mode {
        Mode::Vertex => {
            for e in p.edges() {
                adj[e.u].push(e.v);
                adj[e.v].push(e.u);
            }
        }
        Mode::Edge => {
            let es = p.edges();
            for a in 0..n {
                for b in a + 1..n {
                    if [es[a].u, es[a].v].iter().any(|x| *x == es[b].u || *x == es[b].v) {
                        adj[a].push(b);
                        adj[b].push(a);
                    }
                }
            }
        }
    }
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in &adj[x] {
                    if d[y].is_none() {
                        d[y] = Some(d[x].unwrap() + 1);
                        q.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

/// Required label gap between two elements for L(1,2).
pub fn gap(d: Option<usize>) -> u32 {
    match d {
        Some(1) => 1,
        Some(2) => 2,
        _ => 0,
    }
}

pub fn valid(dist: &[Vec<Option<usize>>], labels: &[u32]) -> bool {
    (0..labels.len()).all(|a| (a + 1..labels.len()).all(|b| labels[a].abs_diff(labels[b]) >= gap(dist[a][b])))
}

/// Minimum span by trying palettes in order and enumerating label vectors
/// element by element (a candidate is dropped as soon as a prefix clashes).
pub fn naive_min_span(dist: &[Vec<Option<usize>>]) -> u32 {
    fn extend(dist: &[Vec<Option<usize>>], s: u32, labels: &mut Vec<u32>) -> bool {
        let i = labels.len();
        if i == dist.len() {
            return true;
        }
        for l in 0..=s {
            if (0..i).all(|j| l.abs_diff(labels[j]) >= gap(dist[i][j])) {
                labels.push(l);
                if extend(dist, s, labels) {
                    return true;
                }
                labels.pop();
            }
        }
        false
    }
    (0..).find(|&s| extend(dist, s, &mut Vec::new())).unwrap()
}
