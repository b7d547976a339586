//! Sequential depth-first search with bitmask domains and forward checking.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use crate::conflict::ConflictModel;

const NONE: u8 = u8::MAX;
const CHECK_EVERY: u64 = 1024;

/// The model compiled for one palette size.
pub(crate) struct Compiled {
    pub n: usize,
    pub full: u64,
    /// Flattened `(neighbor, table)` lists; `offsets[e]..offsets[e + 1]`.
    nbrs: Vec<(u32, u32)>,
    offsets: Vec<usize>,
    /// `tables[t][l]` = labels forbidden next to label `l` under separation `t`'s value.
    tables: Vec<[u64; 64]>,
    degree: Vec<usize>,
    pub static_order: Vec<usize>,
    /// Pairwise-constrained element sets checked by counting: `(members, spaced)`,
    /// where `spaced` means every pair needs a gap of at least 2.
    cliques: Vec<(Vec<u32>, bool)>,
}

fn band(label: u32, sep: u32, full: u64) -> u64 {
    if sep == 0 {
        return 0;
    }
    let lo = label.saturating_sub(sep - 1);
    let hi = (label + sep - 1).min(63);
    let width = hi - lo + 1;
    let bits = if width >= 64 { u64::MAX } else { (1u64 << width) - 1 };
    (bits << lo) & full
}

impl Compiled {
    pub fn new(model: &ConflictModel, max_label: u32, pigeonhole: bool) -> Self {
        let n = model.element_count();
        let full = if max_label >= 63 { u64::MAX } else { (1u64 << (max_label + 1)) - 1 };
        let mut seps: Vec<u32> = model.pairs().iter().map(|p| p.min_sep).collect();
        seps.sort_unstable();
        seps.dedup();
        let tables: Vec<[u64; 64]> = seps
            .iter()
            .map(|&s| std::array::from_fn(|l| band(l as u32, s, full)))
            .collect();
        let mut nbrs = Vec::new();
        let mut offsets = vec![0];
        let mut degree = Vec::with_capacity(n);
        for e in 0..n {
            let list = model.neighbors(e);
            degree.push(list.iter().filter(|&&(_, s)| s > 0).count());
            for &(b, s) in list {
                if s > 0 {
                    let t = seps.binary_search(&s).expect("separation was collected") as u32;
                    nbrs.push((b as u32, t));
                }
            }
            offsets.push(nbrs.len());
        }
        let mut static_order: Vec<usize> = (0..n).collect();
        static_order.sort_by_key(|&e| (std::cmp::Reverse(degree[e]), e));
        let cliques = if pigeonhole { clique_cover(model) } else { Vec::new() };
        Compiled { n, full, nbrs, offsets, tables, degree, static_order, cliques }
    }

    fn neighbors(&self, e: usize) -> &[(u32, u32)] {
        &self.nbrs[self.offsets[e]..self.offsets[e + 1]]
    }

    pub fn degree(&self, e: usize) -> usize {
        self.degree[e]
    }
}

/// Greedy maximal cliques of the constraint graph (and of its gap-2 part),
/// one grown from every element, keeping those with at least 4 members.
fn clique_cover(model: &ConflictModel) -> Vec<(Vec<u32>, bool)> {
    let n = model.element_count();
    let mut out: Vec<(Vec<u32>, bool)> = Vec::new();
    for spaced in [false, true] {
        let linked = |a: usize, b: usize| model.separation(a, b).is_some_and(|s| if spaced { s >= 2 } else { s >= 1 });
        for start in 0..n {
            let mut clique = vec![start];
            let mut cand: Vec<usize> = (0..n).filter(|&x| x != start && linked(start, x)).collect();
            while !cand.is_empty() {
                let best = *cand
                    .iter()
                    .max_by_key(|&&x| (cand.iter().filter(|&&y| y != x && linked(x, y)).count(), std::cmp::Reverse(x)))
                    .expect("nonempty");
                clique.push(best);
                cand.retain(|&y| y != best && linked(best, y));
            }
            if clique.len() >= 4 {
                let mut c: Vec<u32> = clique.into_iter().map(|x| x as u32).collect();
                c.sort_unstable();
                if !out.iter().any(|(o, s)| *s == spaced && *o == c) {
                    out.push((c, spaced));
                }
            }
        }
    }
    out
}

/// Most labels of `d` that are pairwise at least 2 apart.
fn spaced_capacity(mut d: u64) -> u32 {
    let mut count = 0;
    while d != 0 {
        let l = d.trailing_zeros();
        count += 1;
        d &= !(3u64 << l);
    }
    count
}

/// Symmetry restrictions applied at the first branching decision.
#[derive(Clone, Default)]
pub(crate) struct RootRule {
    /// Highest label allowed on the root element, if restricted.
    pub max_root_label: Option<u32>,
    /// Elements that must not carry a label below the root's.
    pub orbit: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flow {
    Found,
    Exhausted,
    Stopped,
}

pub(crate) struct Search<'a> {
    c: &'a Compiled,
    most_constrained: bool,
    root: RootRule,
    domains: Vec<u64>,
    labels: Vec<u8>,
    trail: Vec<(u32, u64)>,
    pub nodes: u64,
    pub max_depth: usize,
    deadline: Option<Instant>,
    cancel: Option<&'a AtomicBool>,
    pub timed_out: bool,
    /// When set, nodes at this depth are recorded instead of expanded.
    split_depth: Option<usize>,
    pub frontier: Vec<Vec<(usize, u32)>>,
    path: Vec<(usize, u32)>,
}

impl<'a> Search<'a> {
    pub fn new(c: &'a Compiled, most_constrained: bool, root: RootRule) -> Self {
        Search {
            c,
            most_constrained,
            root,
            domains: vec![c.full; c.n],
            labels: vec![NONE; c.n],
            trail: Vec::new(),
            nodes: 0,
            max_depth: 0,
            deadline: None,
            cancel: None,
            timed_out: false,
            split_depth: None,
            frontier: Vec::new(),
            path: Vec::new(),
        }
    }

    pub fn with_limits(mut self, deadline: Option<Instant>, cancel: Option<&'a AtomicBool>) -> Self {
        self.deadline = deadline;
        self.cancel = cancel;
        self
    }

    pub fn with_split(mut self, depth: usize) -> Self {
        self.split_depth = Some(depth);
        self
    }

    pub fn labels(&self) -> Vec<u32> {
        self.labels.iter().map(|&l| u32::from(l)).collect()
    }

    /// Assigns `e = label` and prunes neighbor domains. Returns false on a wipe-out;
    /// the caller undoes to the trail mark either way.
    fn assign(&mut self, e: usize, label: u32) -> bool {
        self.labels[e] = label as u8;
        self.path.push((e, label));
        let mut ok = true;
        for &(b, t) in self.c.neighbors(e) {
            let b = b as usize;
            if self.labels[b] != NONE {
                continue;
            }
            let d = self.domains[b];
            let nd = d & !self.c.tables[t as usize][label as usize];
            if nd != d {
                self.trail.push((b as u32, d));
                self.domains[b] = nd;
                if nd == 0 {
                    ok = false;
                    break;
                }
            }
        }
        if ok && self.path.len() == 1 {
            let orbit = std::mem::take(&mut self.root.orbit);
            let below = (1u64 << label) - 1;
            for &o in &orbit {
                if o == e || self.labels[o] != NONE {
                    continue;
                }
                let d = self.domains[o];
                let nd = d & !below;
                if nd != d {
                    self.trail.push((o as u32, d));
                    self.domains[o] = nd;
                    if nd == 0 {
                        ok = false;
                        break;
                    }
                }
            }
            self.root.orbit = orbit;
        }
        ok && self.cliques_fit()
    }

    /// Unlabeled members of each clique need distinct (or gap-2) labels from their domains.
    fn cliques_fit(&self) -> bool {
        self.c.cliques.iter().all(|(members, spaced)| {
            let mut open = 0;
            let mut union = 0u64;
            for &m in members {
                if self.labels[m as usize] == NONE {
                    open += 1;
                    union |= self.domains[m as usize];
                }
            }
            let room = if *spaced { spaced_capacity(union) } else { union.count_ones() };
            open <= room
        })
    }

    fn undo(&mut self, e: usize, mark: usize) {
        while self.trail.len() > mark {
            let (b, d) = self.trail.pop().expect("trail above mark");
            self.domains[b as usize] = d;
        }
        self.labels[e] = NONE;
        self.path.pop();
    }

    /// Replays a prefix produced by a splitting run. Returns false if it is inconsistent.
    pub fn replay(&mut self, prefix: &[(usize, u32)]) -> bool {
        for &(e, l) in prefix {
            if self.labels[e] != NONE || self.domains[e] & (1u64 << l) == 0 || !self.assign(e, l) {
                return false;
            }
        }
        true
    }

    fn pick(&self) -> Option<usize> {
        if !self.most_constrained {
            return self.c.static_order.iter().copied().find(|&e| self.labels[e] == NONE);
        }
        // smallest domain, then highest constrained degree, then lowest id
        (0..self.c.n)
            .filter(|&e| self.labels[e] == NONE)
            .min_by_key(|&e| (self.domains[e].count_ones(), std::cmp::Reverse(self.c.degree(e)), e))
    }

    fn should_stop(&mut self) -> bool {
        if !self.nodes.is_multiple_of(CHECK_EVERY) {
            return false;
        }
        if let Some(c) = self.cancel {
            if c.load(Ordering::Relaxed) {
                return true;
            }
        }
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                self.timed_out = true;
                return true;
            }
        }
        false
    }

    pub fn run(&mut self) -> Flow {
        let depth = self.path.len();
        self.nodes += 1;
        self.max_depth = self.max_depth.max(depth);
        if self.should_stop() {
            return Flow::Stopped;
        }
        let Some(e) = self.pick() else {
            return Flow::Found;
        };
        if self.split_depth == Some(depth) {
            self.frontier.push(self.path.clone());
            return Flow::Exhausted;
        }
        let mut dom = self.domains[e];
        if depth == 0 {
            if let Some(m) = self.root.max_root_label {
                dom &= if m >= 63 { u64::MAX } else { (1u64 << (m + 1)) - 1 };
            }
        }
        while dom != 0 {
            let l = dom.trailing_zeros();
            dom &= dom - 1;
            let mark = self.trail.len();
            if self.assign(e, l) {
                match self.run() {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
            self.undo(e, mark);
        }
        Flow::Exhausted
    }
}
