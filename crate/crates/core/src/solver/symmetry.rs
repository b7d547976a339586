//! Automorphisms of a conflict model: separation-preserving permutations.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::conflict::ConflictModel;

/// Joint color refinement of two models from initial colors, so that
/// classes are comparable across them.
/// An element's color with the sorted (separation, neighbor color) list.
type Signature = (usize, Vec<(u32, usize)>);

fn refine_pair(a: &ConflictModel, ca: &[usize], b: &ConflictModel, cb: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut colors = [ca.to_vec(), cb.to_vec()];
    let models = [a, b];
    loop {
        let before: BTreeSet<usize> = colors.iter().flatten().copied().collect();
        let sigs: Vec<Vec<Signature>> = (0..2)
            .map(|g| {
                (0..models[g].element_count())
                    .map(|e| {
                        let mut s: Vec<(u32, usize)> =
                            models[g].neighbors(e).iter().map(|&(x, sep)| (sep, colors[g][x])).collect();
                        s.sort_unstable();
                        (colors[g][e], s)
                    })
                    .collect()
            })
            .collect();
        let ids: BTreeMap<&Signature, usize> = sigs
            .iter()
            .flatten()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next = [0, 1].map(|g| sigs[g].iter().map(|s| ids[s]).collect::<Vec<_>>());
        let changed = ids.len() != before.len();
        colors = next;
        if !changed {
            let [x, y] = colors;
            return (x, y);
        }
    }
}

fn sep_of(model: &ConflictModel, x: usize, y: usize) -> u32 {
    model.separation(x, y).unwrap_or(0)
}

/// Order in which elements of `model` are mapped: breadth-first from `first`,
/// restarting at the lowest unseen element for other components.
fn mapping_order(model: &ConflictModel, first: usize) -> Vec<usize> {
    let n = model.element_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let starts = std::iter::once(first).chain(0..n);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in model.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

struct Matcher<'m> {
    a: &'m ConflictModel,
    b: &'m ConflictModel,
    ca: Vec<usize>,
    cb: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        for w in 0..self.b.element_count() {
            if self.used[w] || self.ca[v] != self.cb[w] {
                continue;
            }
            if self.order[..i].iter().any(|&u| sep_of(self.a, u, v) != sep_of(self.b, self.map[u], w)) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used[w] = false;
        }
        false
    }
}

fn search(
    a: &ConflictModel,
    ca: &[usize],
    b: &ConflictModel,
    cb: &[usize],
    fixed: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    let n = a.element_count();
    if n != b.element_count() || ca.len() != n || cb.len() != n || a.pairs().len() != b.pairs().len() {
        return None;
    }
    let (ca, cb) = refine_pair(a, ca, b, cb);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let first = fixed.map_or(0, |(x, _)| x);
    let order = mapping_order(a, first);
    let mut m = Matcher { a, b, ca, cb, order, map: vec![usize::MAX; n], used: vec![false; n] };
    match fixed {
        Some((x, y)) => {
            if m.ca[x] != m.cb[y] {
                return None;
            }
            m.map[x] = y;
            m.used[y] = true;
            m.extend(1).then_some(m.map)
        }
        None => m.extend(0).then_some(m.map),
    }
}

/// A separation-preserving bijection from `a` onto `b` that maps each element
/// to one of the same initial color, if one exists.
pub fn isomorphism(a: &ConflictModel, ca: &[usize], b: &ConflictModel, cb: &[usize]) -> Option<Vec<usize>> {
    search(a, ca, b, cb, None)
}

/// Searches for an automorphism mapping `from` to `to`.
pub fn automorphism_mapping(model: &ConflictModel, from: usize, to: usize) -> Option<Vec<usize>> {
    let plain = vec![0; model.element_count()];
    search(model, &plain, model, &plain, Some((from, to)))
}

/// The orbit of `e` under the automorphism group of the model, sorted.
pub fn orbit(model: &ConflictModel, e: usize) -> Vec<usize> {
    (0..model.element_count())
        .filter(|&o| o == e || automorphism_mapping(model, e, o).is_some())
        .collect()
}

/// Checks that `map` is a separation-preserving permutation.
pub fn is_automorphism(model: &ConflictModel, map: &[usize]) -> bool {
    let n = model.element_count();
    if map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    model.pairs().len() == model.pairs().iter().filter(|p| model.separation(map[p.a], map[p.b]) == Some(p.min_sep)).count()
}
