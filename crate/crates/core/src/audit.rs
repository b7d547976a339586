//! Exhaustive structural checks behind the counting arguments for the
//! square, triangular and octagonal lower bounds.
//!
//! Statements about colors are checked as statements about elements:
//! a label can sit on a set of elements iff they are pairwise at distance
//! at least 3, and label `c ± 1` can sit on `e` next to a placement of `c`
//! iff `e` is at distance 1 or at least 3 from every placed element.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::conflict::clique_lower_bound;
use crate::error::{Error, Result};
use crate::gadget::{build_oct_g_h, build_square_g, build_square_g1, build_tri_gv, DistanceTable, OctGadget};
use crate::mis::Compat;

/// How often the label of `element` can be repeated inside `region`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReuseCap {
    pub element: usize,
    pub region: Vec<usize>,
    pub cap: usize,
    /// One largest reuse set.
    pub witness: Vec<usize>,
}

fn compat(dist: &DistanceTable) -> Result<Compat> {
    Compat::new(dist.len(), |a, b| dist.reusable(a, b))
}

fn check_ids(dist: &DistanceTable, ids: &[usize]) -> Result<()> {
    match ids.iter().find(|&&e| e >= dist.len()) {
        Some(&e) => Err(Error::Lookup(e)),
        None => Ok(()),
    }
}

/// Largest set of region elements that can share the label of `element`.
pub fn max_reuse(dist: &DistanceTable, element: usize, region: &[usize]) -> Result<ReuseCap> {
    check_ids(dist, &[element])?;
    check_ids(dist, region)?;
    let c = compat(dist)?;
    let cands: Vec<usize> = region.iter().copied().filter(|&r| dist.reusable(element, r)).collect();
    let witness = c.max_set(&cands);
    Ok(ReuseCap { element, region: region.to_vec(), cap: witness.len(), witness })
}

/// Same cap by plain subset enumeration.
pub fn naive_max_reuse(dist: &DistanceTable, element: usize, region: &[usize]) -> usize {
    let cands: Vec<usize> = region.iter().copied().filter(|&r| dist.reusable(element, r)).collect();
    crate::mis::naive_max_set_size(&cands, |a, b| dist.reusable(a, b))
}

/// Elements that may carry a label one away from a placed label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EligibilitySet {
    pub placement: Vec<usize>,
    pub eligible: Vec<usize>,
}

pub fn adjacent_label_eligibility(dist: &DistanceTable, placement: &[usize]) -> Result<EligibilitySet> {
    check_ids(dist, placement)?;
    for (i, &a) in placement.iter().enumerate() {
        for &b in &placement[i + 1..] {
            if !dist.reusable(a, b) {
                return Err(Error::Precondition(format!("elements {a} and {b} cannot share a label")));
            }
        }
    }
    let eligible = (0..dist.len())
        .filter(|e| !placement.contains(e))
        .filter(|&e| placement.iter().all(|&p| dist.get(e, p).is_none_or(|d| d == 1 || d >= 3)))
        .collect();
    Ok(EligibilitySet { placement: placement.to_vec(), eligible })
}

/// All sets `{first} ∪ T` with `T ⊆ region`, `|T| = extra`, pairwise reusable.
pub fn placements_with(dist: &DistanceTable, first: usize, region: &[usize], extra: usize) -> Vec<Vec<usize>> {
    fn rec(dist: &DistanceTable, cands: &[usize], extra: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if extra == 0 {
            out.push(cur.clone());
            return;
        }
        for (i, &c) in cands.iter().enumerate() {
            if cur.iter().all(|&x| dist.reusable(x, c)) {
                cur.push(c);
                rec(dist, &cands[i + 1..], extra - 1, cur, out);
                cur.pop();
            }
        }
    }
    let cands: Vec<usize> = region.iter().copied().filter(|&r| r != first).collect();
    let mut out = Vec::new();
    rec(dist, &cands, extra, &mut vec![first], &mut out);
    out
}

/// Fewest classes of pairwise-reusable elements covering `elems`, i.e. the
/// fewest labels `elems` can be colored with.
pub fn min_label_classes(dist: &DistanceTable, elems: &[usize]) -> usize {
    fn fits(dist: &DistanceTable, elems: &[usize], i: usize, classes: &mut Vec<Vec<usize>>, k: usize) -> bool {
        if i == elems.len() {
            return true;
        }
        let e = elems[i];
        for c in 0..classes.len() {
            if classes[c].iter().all(|&x| dist.reusable(x, e)) {
                classes[c].push(e);
                if fits(dist, elems, i + 1, classes, k) {
                    return true;
                }
                classes[c].pop();
            }
        }
        if classes.len() < k {
            classes.push(vec![e]);
            if fits(dist, elems, i + 1, classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    (0..=elems.len()).find(|&k| fits(dist, elems, 0, &mut Vec::new(), k)).unwrap_or(elems.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    fn new(id: &str, statement: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Claim { id: id.into(), statement: statement.into(), passed, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub suite: String,
    pub claims: Vec<Claim>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn lines(&self) -> Vec<String> {
        self.claims
            .iter()
            .map(|c| format!("[{}] {}: {} ({})", if c.passed { "PASS" } else { "FAIL" }, c.id, c.statement, c.detail))
            .collect()
    }
}

pub const SUITES: [&str; 3] = ["square", "tri", "oct"];

pub fn audit_suite(name: &str) -> Result<AuditReport> {
    match name {
        "square" => square_suite(),
        "tri" => tri_suite(),
        "oct" => oct_suite(),
        _ => Err(Error::Format(format!("unknown audit suite `{name}`"))),
    }
}

fn all_caps(dist: &DistanceTable, elems: &[usize], region: &[usize]) -> Result<Vec<usize>> {
    elems.iter().map(|&e| max_reuse(dist, e, region).map(|c| c.cap)).collect()
}

fn set(ids: &[usize]) -> BTreeSet<usize> {
    ids.iter().copied().collect()
}

pub fn square_suite() -> Result<AuditReport> {
    let g = build_square_g();
    let gd = &g.gadget;
    let dist = gd.distances();
    let all: Vec<usize> = (0..gd.element_count()).collect();
    let mut claims = Vec::new();

    claims.push(Claim::new(
        "size",
        "G has 12 vertices, so pairwise-distinct labels need span at least 11",
        gd.element_count() == 12,
        format!("|V(G)| = {}", gd.element_count()),
    ));

    let largest = compat(&dist)?.max_set(&all).len();
    claims.push(Claim::new("no-triple", "no label can be used thrice in G", largest <= 2, format!("largest same-label set {largest}")));

    let central_caps = all_caps(&dist, g.central(), &all)?;
    claims.push(Claim::new(
        "central-caps",
        "labels on S5 cannot be reused in G",
        central_caps.iter().all(|&c| c == 0),
        format!("caps {central_caps:?}"),
    ));

    let mut partner_ok = true;
    for (from, to) in [("S1", "S2"), ("S2", "S1"), ("S3", "S4"), ("S4", "S3")] {
        for &x in gd.part(from) {
            let partners: BTreeSet<usize> = all.iter().copied().filter(|&y| dist.reusable(x, y)).collect();
            partner_ok &= partners == set(gd.part(to));
        }
    }
    claims.push(Claim::new(
        "peripheral-partners",
        "labels on S1 can be reused only in S2, labels on S3 only in S4",
        partner_ok,
        "reuse partners of every peripheral vertex checked",
    ));

    let pairs: Vec<(usize, usize)> =
        all.iter().flat_map(|&a| all.iter().map(move |&b| (a, b))).filter(|&(a, b)| a < b && dist.reusable(a, b)).collect();
    let matching = max_disjoint_pairs(&pairs);
    claims.push(Claim::new(
        "disjoint-pairs",
        "at most 4 disjoint peripheral pairs can share a label",
        matching == 4,
        format!("{} reusable pairs, largest disjoint family {matching}", pairs.len()),
    ));

    let mut pairs_ok = true;
    let mut checked = 0;
    for (p, q) in [("S1", "S2"), ("S3", "S4")] {
        let block: BTreeSet<usize> = gd.part(p).iter().chain(gd.part(q)).copied().collect();
        for &x in gd.part(p) {
            for &y in gd.part(q) {
                let el = adjacent_label_eligibility(&dist, &[x, y])?;
                let allowed: BTreeSet<usize> = block.iter().copied().filter(|e| *e != x && *e != y).collect();
                pairs_ok &= set(&el.eligible).is_subset(&allowed);
                checked += 1;
            }
        }
    }
    claims.push(Claim::new(
        "pair-eligibility",
        "if x in S1 and y in S2 share c, then c ± 1 can only go to (S1 ∪ S2) \\ {x, y}; likewise for S3, S4",
        pairs_ok,
        format!("{checked} shared pairs checked"),
    ));

    let g1 = build_square_g1();
    let iso = g1.views.iter().all(|v| g1.view_isomorphism(v).is_some());
    claims.push(Claim::new(
        "g1-views",
        "G1 has 32 vertices and five partition-preserving copies of G",
        iso && g1.gadget.element_count() == 32 && g1.views.len() == 5,
        format!("|V(G1)| = {}", g1.gadget.element_count()),
    ));

    Ok(AuditReport { suite: "square".into(), claims })
}

fn max_disjoint_pairs(pairs: &[(usize, usize)]) -> usize {
    fn rec(pairs: &[(usize, usize)], used: &mut BTreeSet<usize>) -> usize {
        let Some((&(a, b), rest)) = pairs.split_first() else {
            return 0;
        };
        let skip = rec(rest, used);
        if used.contains(&a) || used.contains(&b) {
            return skip;
        }
        used.insert(a);
        used.insert(b);
        let take = 1 + rec(rest, used);
        used.remove(&a);
        used.remove(&b);
        skip.max(take)
    }
    rec(pairs, &mut BTreeSet::new())
}

/// Outcome of the alternating-triple blocking check on `S₃`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleBlocking {
    pub triples: usize,
    pub alternating_systems: usize,
    pub configurations: usize,
    pub unblocked: usize,
}

/// Enumerates label triples `c, c+1, c+2`, each used thrice in `S₃`, and
/// counts `S₃` edges that could still take `c − 1` or `c + 3`.
pub fn triple_blocking(dist: &DistanceTable, s3: &[usize], ring_vertex_of: impl Fn(usize) -> usize) -> TripleBlocking {
    let triples: Vec<Vec<usize>> = s3
        .iter()
        .flat_map(|&e| placements_with(dist, e, s3, 2))
        .map(|mut t| {
            t.sort_unstable();
            t
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let systems: BTreeSet<BTreeSet<usize>> = triples.iter().map(|t| t.iter().map(|&e| ring_vertex_of(e)).collect()).collect();
    // c and c ± 1 must differ by one: no equal elements, no distance-2 pairs
    let adjacent_ok = |a: &[usize], b: &[usize]| a.iter().all(|&x| b.iter().all(|&y| x != y && dist.get(x, y) != Some(2)));
    let mut configurations = 0;
    let mut unblocked = 0;
    for a in &triples {
        for b in &triples {
            if !adjacent_ok(a, b) {
                continue;
            }
            for c in &triples {
                if !adjacent_ok(b, c) || a.iter().any(|x| c.contains(x)) {
                    continue;
                }
                configurations += 1;
                for &x in s3 {
                    if a.contains(&x) || b.contains(&x) || c.contains(&x) {
                        continue;
                    }
                    if a.iter().all(|&y| dist.get(x, y) != Some(2)) {
                        unblocked += 1;
                    }
                    if c.iter().all(|&y| dist.get(x, y) != Some(2)) {
                        unblocked += 1;
                    }
                }
            }
        }
    }
    TripleBlocking { triples: triples.len(), alternating_systems: systems.len(), configurations, unblocked }
}

pub fn tri_suite() -> Result<AuditReport> {
    let t = build_tri_gv();
    let gd = &t.gadget;
    let dist = gd.distances();
    let all: Vec<usize> = (0..gd.element_count()).collect();
    let c = compat(&dist)?;
    let mut claims = Vec::new();

    let elig_max = |e: usize| -> Result<usize> {
        let el = adjacent_label_eligibility(&dist, &[e])?;
        Ok(c.max_set(&el.eligible).len())
    };

    let caps = all_caps(&dist, t.spokes(), &all)?;
    claims.push(Claim::new("s1-caps", "a label on an S1 edge e cannot be used in E \\ e", caps.iter().all(|&x| x == 0), format!("caps {caps:?}")));

    let l2: Vec<usize> = t.spokes().iter().map(|&e| elig_max(e)).collect::<Result<_>>()?;
    claims.push(Claim::new("s1-neighbors", "if c is on an S1 edge, c + 1 and c − 1 can each be used at most once", l2.iter().all(|&x| x <= 1), format!("largest ±1 sets {l2:?}")));

    let caps = all_caps(&dist, t.ring(), &all)?;
    claims.push(Claim::new("s2-caps", "a label on an S2 edge can be reused at most once in G_v", caps.iter().all(|&x| x <= 1), format!("caps {caps:?}")));

    let l4: Vec<usize> = t.ring().iter().map(|&e| elig_max(e)).collect::<Result<_>>()?;
    claims.push(Claim::new("s2-neighbors", "if c is on an S2 edge, c ± 1 can each be used at most twice", l4.iter().all(|&x| x <= 2), format!("largest ±1 sets {l4:?}")));

    let caps = all_caps(&dist, t.rest(), &all)?;
    let caps_s3 = all_caps(&dist, t.rest(), t.rest())?;
    claims.push(Claim::new(
        "s3-caps",
        "a label appears on at most 3 edges of S3 (at most twice more in E \\ e)",
        caps.iter().all(|&x| x <= 2) && caps_s3.iter().all(|&x| x <= 2),
        format!("max cap over E {}, over S3 {}", caps.iter().max().unwrap_or(&0), caps_s3.iter().max().unwrap_or(&0)),
    ));

    let l6: Vec<usize> = t.rest().iter().map(|&e| elig_max(e)).collect::<Result<_>>()?;
    claims.push(Claim::new("s3-neighbors", "if c is on an S3 edge, c ± 1 can each be used at most thrice", l6.iter().all(|&x| x <= 3), format!("max ±1 set {}", l6.iter().max().unwrap_or(&0))));

    let counts = (t.spokes().len(), t.ring().len(), t.rest().len());
    claims.push(Claim::new("part-sizes", "|S1| = 6, |S2| = 6, |S3| = 18", counts == (6, 6, 18), format!("{counts:?}")));
    let k1 = min_label_classes(&dist, t.spokes());
    claims.push(Claim::new("s1-labels", "S1 needs at least 6 labels", k1 >= 6, format!("fewest labels {k1}")));
    let k2 = min_label_classes(&dist, t.ring());
    claims.push(Claim::new(
        "s2-labels",
        "S2 has 3 opposite pairs and needs at least 3 labels",
        k2 >= 3 && t.opposite_pairs.len() == 3,
        format!("fewest labels {k2}, opposite pairs {}", t.opposite_pairs.len()),
    ));
    let largest = c.max_set(t.rest()).len();
    let floor = t.rest().len().div_ceil(largest.max(1));
    claims.push(Claim::new(
        "s3-labels",
        "a label covers at most 3 edges of S3, so S3 needs at least ⌈18/3⌉ = 6 labels",
        largest == 3 && floor == 6,
        format!("largest S3 set {largest}, bound {floor}"),
    ));

    let ring_vertices: BTreeSet<usize> = t.ring().iter().flat_map(|&e| [gd.patch.edges()[e].u, gd.patch.edges()[e].v]).collect();
    let ring_end = |e: usize| {
        let ed = gd.patch.edges()[e];
        if ring_vertices.contains(&ed.u) {
            ed.u
        } else {
            ed.v
        }
    };
    let one_ring_end = t.rest().iter().all(|&e| {
        let ed = gd.patch.edges()[e];
        ring_vertices.contains(&ed.u) != ring_vertices.contains(&ed.v)
    });
    let tb = triple_blocking(&dist, t.rest(), ring_end);
    claims.push(Claim::new(
        "s3-triple-blocking",
        "if c, c+1, c+2 are each used thrice in S3, neither c − 1 nor c + 3 fits in S3",
        one_ring_end && tb.alternating_systems == 2 && tb.configurations > 0 && tb.unblocked == 0,
        format!(
            "{} triples on {} alternating ring systems, {} configurations, {} unblocked",
            tb.triples, tb.alternating_systems, tb.configurations, tb.unblocked
        ),
    ));

    Ok(AuditReport { suite: "tri".into(), claims })
}

/// Per fork edge, how the H-restricted ±1 eligibility compares with the
/// other two fork edges over every size-4 placement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForkEligibility {
    pub fork_edge: usize,
    pub placements: usize,
    /// Placements whose eligible H-edges leave the fork.
    pub outside_fork: usize,
    /// Placements whose eligible H-edges differ from the other two fork edges.
    pub not_equal: usize,
}

pub fn fork_eligibility(oct: &OctGadget, dist: &DistanceTable) -> Result<Vec<ForkEligibility>> {
    let h = set(oct.h());
    let mut out = Vec::new();
    for e in oct.fork_edges() {
        let fork = oct.fork_of(e).expect("fork edge");
        let others: BTreeSet<usize> = fork.iter().copied().filter(|&x| x != e).collect();
        let mut stats = ForkEligibility { fork_edge: e, placements: 0, outside_fork: 0, not_equal: 0 };
        for p in placements_with(dist, e, oct.g_minus_h(), 3) {
            let el = adjacent_label_eligibility(dist, &p)?;
            let in_h: BTreeSet<usize> = el.eligible.into_iter().filter(|x| h.contains(x)).collect();
            stats.placements += 1;
            stats.outside_fork += usize::from(!in_h.is_subset(&others));
            stats.not_equal += usize::from(in_h != others);
        }
        out.push(stats);
    }
    Ok(out)
}

/// The octagonal counting bound assembled from audited caps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingAudit {
    pub h_labels: usize,
    pub h_prime: usize,
    pub h_prime_cap: usize,
    pub fork_edges: usize,
    pub fork_cap: usize,
    /// Largest number of fork labels that one fork can have reused to its full cap.
    pub best_per_fork: usize,
    /// Forks that can reach `best_per_fork` at once (disjoint label sets).
    pub forks_at_best: usize,
    pub triple_labels: usize,
    pub max_colorable: usize,
    pub needed: usize,
}

impl CountingAudit {
    pub fn line(&self) -> String {
        format!("max colorable edges in G∖H = {} < {}", self.max_colorable, self.needed)
    }

    pub fn formula(&self) -> String {
        let twice = self.h_prime + self.fork_edges - self.triple_labels;
        format!("({twice} × {} + {} × {}) = {}", self.h_prime_cap, self.triple_labels, self.fork_cap, self.max_colorable)
    }
}

/// Fork labels that can be reused to the fork cap when the fork carries `labels`:
/// every existing neighbor label must sit on the same fork, since the other
/// H-edges are never eligible and H uses every label of the palette.
fn full_reuse_labels(labels: &[usize], palette: usize) -> usize {
    labels
        .iter()
        .filter(|&&l| {
            let lower = l.checked_sub(1);
            let upper = (l + 1 < palette).then_some(l + 1);
            [lower, upper].into_iter().flatten().all(|n| labels.contains(&n))
        })
        .count()
}

pub fn counting_audit(oct: &OctGadget, dist: &DistanceTable) -> Result<CountingAudit> {
    let h_labels = oct.h().len();
    let gh = oct.g_minus_h();
    let h_prime_cap = all_caps(dist, oct.h_prime(), gh)?.into_iter().max().unwrap_or(0);
    let fork_cap = all_caps(dist, &oct.fork_edges(), gh)?.into_iter().max().unwrap_or(0);

    let mut best_per_fork = 0;
    let mut best_sets: Vec<[usize; 3]> = Vec::new();
    for a in 0..h_labels {
        for b in a + 1..h_labels {
            for c in b + 1..h_labels {
                let v = full_reuse_labels(&[a, b, c], h_labels);
                if v > best_per_fork {
                    best_per_fork = v;
                    best_sets.clear();
                }
                if v == best_per_fork {
                    best_sets.push([a, b, c]);
                }
            }
        }
    }
    let forks = oct.forks().len();
    let forks_at_best = max_disjoint_sets(&best_sets, forks);
    let next_best = if best_per_fork > 0 { best_per_fork - 1 } else { 0 };
    let triple_labels = forks_at_best * best_per_fork + (forks - forks_at_best) * next_best;
    let fork_edges = oct.fork_edges().len();
    let max_colorable =
        oct.h_prime().len() * h_prime_cap + (fork_edges - triple_labels) * fork_cap.saturating_sub(1) + triple_labels * fork_cap;
    Ok(CountingAudit {
        h_labels,
        h_prime: oct.h_prime().len(),
        h_prime_cap,
        fork_edges,
        fork_cap,
        best_per_fork,
        forks_at_best,
        triple_labels,
        max_colorable,
        needed: gh.len(),
    })
}

fn max_disjoint_sets(sets: &[[usize; 3]], limit: usize) -> usize {
    fn rec(sets: &[[usize; 3]], used: &mut Vec<usize>, limit: usize) -> usize {
        if limit == 0 {
            return 0;
        }
        let mut best = 0;
        for (i, s) in sets.iter().enumerate() {
            if s.iter().any(|x| used.contains(x)) {
                continue;
            }
            used.extend_from_slice(s);
            best = best.max(1 + rec(&sets[i + 1..], used, limit - 1));
            used.truncate(used.len() - 3);
            if best == limit {
                break;
            }
        }
        best
    }
    rec(sets, &mut Vec::new(), limit)
}

pub fn oct_suite() -> Result<AuditReport> {
    let oct = build_oct_g_h();
    let gd = &oct.gadget;
    let dist = gd.distances();
    let mut claims = Vec::new();

    let counts = (gd.element_count(), oct.h().len(), oct.g_minus_h().len(), oct.h_prime().len(), oct.fork_edges().len());
    claims.push(Claim::new(
        "counts",
        "|E(G)| = 86, |E(H)| = 26, |E(G∖H)| = 60, |H'| = 14, 12 fork edges",
        counts == (86, 26, 60, 14, 12),
        format!("{counts:?}"),
    ));

    let h = oct.h();
    let close = (0..h.len()).flat_map(|i| (i + 1..h.len()).map(move |j| (i, j))).filter(|&(i, j)| dist.get(h[i], h[j]).is_some_and(|d| d <= 2)).count();
    claims.push(Claim::new("h-pairs", "all 325 pairs of H are within distance 2", close == 325, format!("{close} of 325")));

    let lb = clique_lower_bound(&gd.model(1, 2).restrict(h)?);
    claims.push(Claim::new("h-span", "labeling H needs span at least 25", lb >= 25, format!("clique bound {lb}")));

    let caps = all_caps(&dist, oct.h_prime(), oct.g_minus_h())?;
    claims.push(Claim::new("h-prime-caps", "each label on H' is reused at most twice in G∖H", caps.iter().all(|&c| c == 2), format!("caps {caps:?}")));

    let caps = all_caps(&dist, &oct.fork_edges(), oct.g_minus_h())?;
    claims.push(Claim::new("fork-caps", "each label on a fork is reused at most thrice in G∖H", caps.iter().all(|&c| c == 3), format!("caps {caps:?}")));

    let fe = fork_eligibility(&oct, &dist)?;
    let total: usize = fe.iter().map(|f| f.placements).sum();
    let outside: usize = fe.iter().map(|f| f.outside_fork).sum();
    let unequal: usize = fe.iter().map(|f| f.not_equal).sum();
    claims.push(Claim::new(
        "fork-eligibility",
        "with c' on a fork edge reused thrice in G∖H, c' ± 1 can only go to the other two fork edges within H",
        outside == 0 && total > 0,
        format!("{total} placements, {outside} with eligible H-edges off the fork"),
    ));
    claims.push(Claim::new(
        "fork-eligibility-exact",
        "with c' on a fork edge reused thrice in G∖H, the H-edges eligible for c' ± 1 are exactly the other two fork edges",
        unequal == 0 && total > 0,
        format!("{total} placements, {unequal} where fewer than both other fork edges are eligible"),
    ));

    let ca = counting_audit(&oct, &dist)?;
    claims.push(Claim::new(
        "fork-schedule",
        "per fork, two labels reach full reuse only when the fork holds an extreme label, otherwise one",
        ca.best_per_fork == 2 && ca.forks_at_best == 2 && ca.triple_labels == 6,
        format!("best per fork {}, forks at best {}, labels reused thrice {}", ca.best_per_fork, ca.forks_at_best, ca.triple_labels),
    ));
    claims.push(Claim::new("counting", ca.line(), ca.max_colorable < ca.needed, ca.formula()));

    Ok(AuditReport { suite: "oct".into(), claims })
}
