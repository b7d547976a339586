//! The named lower-bound subgraphs, built from lattice coordinates.
//!
//! * Square `G`: the 12 edges of T₄ touching the corners of one unit face, as
//!   vertices of L(T₄). `G₁` covers a plus-shaped block of five faces.
//! * Triangular `G_v`: all T₆ edges incident to a neighbor of `v`.
//! * Octagonal `G`: all king-grid edges touching a 4×4 block; `H` is the part
//!   touching its central 2×2 block.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::conflict::{build_conflicts, ConflictModel};
use crate::grid::{Coord, GraphPatch, GridKind, Mode, PatchKind};
use crate::solver::symmetry::isomorphism;

/// Capped element distances of a gadget; `None` means beyond the cap.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    cap: usize,
    d: Vec<Option<u8>>,
}

impl DistanceTable {
    pub fn new(patch: &GraphPatch, mode: Mode, cap: usize) -> Self {
        let g = patch.element_graph(mode);
        let n = g.len();
        let mut d = Vec::with_capacity(n * n);
        for a in 0..n {
            d.extend(g.distances_from(a, cap).into_iter().map(|x| x.map(|x| x as u8)));
        }
        DistanceTable { n, cap, d }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn get(&self, a: usize, b: usize) -> Option<usize> {
        self.d[a * self.n + b].map(usize::from)
    }

    /// True when `a` and `b` may share a label under L(h,k) with `h, k ≥ 1`.
    pub fn reusable(&self, a: usize, b: usize) -> bool {
        a != b && self.get(a, b).is_none_or(|d| d >= 3)
    }

    pub fn max_finite(&self) -> usize {
        self.d.iter().flatten().map(|&x| usize::from(x)).max().unwrap_or(0)
    }
}

/// A gadget: a patch, the element mode it is labeled in, and its named parts.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub name: String,
    pub patch: GraphPatch,
    pub mode: Mode,
    pub partitions: BTreeMap<String, Vec<usize>>,
    /// Diagnostic names for some elements; never used in checks.
    pub names: BTreeMap<String, usize>,
}

impl Gadget {
    pub fn element_count(&self) -> usize {
        self.patch.element_count(self.mode)
    }

    pub fn model(&self, h: u32, k: u32) -> ConflictModel {
        build_conflicts(&self.patch, h, k, self.mode)
    }

    pub fn distances(&self) -> DistanceTable {
        DistanceTable::new(&self.patch, self.mode, 4)
    }

    pub fn part(&self, name: &str) -> &[usize] {
        self.partitions.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.names.get(name).copied()
    }

    /// Label used for `e` in diagnostics: its name if it has one, else its id.
    pub fn describe(&self, e: usize) -> String {
        self.names.iter().find(|(_, &id)| id == e).map_or_else(|| format!("#{e}"), |(n, _)| n.clone())
    }
}

fn cell(col: i64, row: i64) -> Coord {
    Coord::Cell { col, row }
}

fn seg(a: (i64, i64), b: (i64, i64)) -> Coord {
    Coord::segment([a.0, a.1], [b.0, b.1])
}

/// The 12 named edges of the square gadget on the face with lower-left corner `(x, y)`.
fn square_face(x: i64, y: i64) -> [(&'static str, Coord); 12] {
    let p = |dx: i64, dy: i64| (x + dx, y + dy);
    [
        ("a", seg(p(0, 1), p(0, 2))),
        ("b", seg(p(0, 1), p(-1, 1))),
        ("c", seg(p(1, 1), p(1, 2))),
        ("d", seg(p(0, 1), p(1, 1))),
        ("e", seg(p(0, 0), p(0, 1))),
        ("f", seg(p(0, 0), p(-1, 0))),
        ("g", seg(p(1, 1), p(2, 1))),
        ("h", seg(p(1, 0), p(1, 1))),
        ("i", seg(p(0, 0), p(1, 0))),
        ("j", seg(p(0, 0), p(0, -1))),
        ("k", seg(p(1, 0), p(2, 0))),
        ("l", seg(p(1, 0), p(1, -1))),
    ]
}

/// Partition letters: spokes grouped by corner, `S₂` opposite `S₁` and `S₄` opposite `S₃`.
const SQUARE_PARTS: [(&str, &[&str]); 5] = [
    ("S1", &["a", "b"]),
    ("S2", &["k", "l"]),
    ("S3", &["c", "g"]),
    ("S4", &["f", "j"]),
    ("S5", &["d", "e", "h", "i"]),
];

fn square_partitions(lookup: impl Fn(&str) -> usize) -> BTreeMap<String, Vec<usize>> {
    SQUARE_PARTS
        .iter()
        .map(|(name, letters)| {
            let mut ids: Vec<usize> = letters.iter().map(|l| lookup(l)).collect();
            ids.sort_unstable();
            (name.to_string(), ids)
        })
        .collect()
}

/// Square gadget `G`. Elements are vertices of L(T₄).
#[derive(Debug, Clone)]
pub struct SquareGadget {
    pub gadget: Gadget,
}

impl SquareGadget {
    pub fn central(&self) -> &[usize] {
        self.gadget.part("S5")
    }

    pub fn peripheral(&self) -> Vec<usize> {
        let mut p: Vec<usize> = ["S1", "S2", "S3", "S4"].iter().flat_map(|s| self.gadget.part(s).to_vec()).collect();
        p.sort_unstable();
        p
    }
}

pub fn build_square_g() -> SquareGadget {
    let face = square_face(0, 0);
    let patch = GraphPatch::induced(PatchKind::Line(GridKind::Square4), face.iter().map(|(_, c)| *c))
        .expect("square gadget coordinates are valid");
    let names: BTreeMap<String, usize> =
        face.iter().map(|(n, c)| (n.to_string(), patch.find(c).expect("face edge present"))).collect();
    let partitions = square_partitions(|l| names[l]);
    SquareGadget { gadget: Gadget { name: "square-g".into(), patch, mode: Mode::Vertex, partitions, names } }
}

/// One embedded copy of `G` inside `G₁`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetView {
    pub name: String,
    /// `elements[i]` is the `G₁` element playing the role of element `i` of `G`.
    pub elements: Vec<usize>,
    pub partitions: BTreeMap<String, Vec<usize>>,
}

impl GadgetView {
    pub fn central(&self) -> &[usize] {
        self.partitions.get("S5").map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Square gadget `G₁` with its five views `G′` (center), `G′₁` (up), `G′₂` (left),
/// `G′₃` (down), `G′₄` (right).
#[derive(Debug, Clone)]
pub struct SquareGadgetPlus {
    pub gadget: Gadget,
    pub views: Vec<GadgetView>,
}

const PLUS_FACES: [(&str, i64, i64); 5] = [("G'", 0, 0), ("G'1", 0, 1), ("G'2", -1, 0), ("G'3", 0, -1), ("G'4", 1, 0)];

pub fn build_square_g1() -> SquareGadgetPlus {
    let kind = PatchKind::Line(GridKind::Square4);
    let mut block = Vec::new();
    for (_, x, y) in PLUS_FACES {
        for (dx, dy) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            block.push((x + dx, y + dy));
        }
    }
    block.sort_unstable();
    block.dedup();
    let mut segments = Vec::new();
    for &(x, y) in &block {
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            segments.push(seg((x, y), (x + dx, y + dy)));
        }
    }
    let patch = GraphPatch::induced(kind, segments).expect("plus-shape coordinates are valid");
    let find = |c: &Coord| patch.find(c).expect("view edge present");

    let mut names: BTreeMap<String, usize> = square_face(0, 0).iter().map(|(n, c)| (n.to_string(), find(c))).collect();
    for (n, c) in [
        ("t1", seg((0, 2), (1, 2))),
        ("t2", seg((-1, 0), (-1, 1))),
        ("t3", seg((0, -1), (1, -1))),
        ("t4", seg((2, 0), (2, 1))),
    ] {
        names.insert(n.into(), find(&c));
    }

    let views = PLUS_FACES
        .iter()
        .map(|&(name, x, y)| {
            let face = square_face(x, y);
            let base = build_square_g();
            // G's element order follows its sorted coordinates; translate each one
            let mut elements = vec![0; 12];
            for (letter, c) in &face {
                elements[base.gadget.names[*letter]] = find(c);
            }
            let lookup: BTreeMap<&str, usize> = face.iter().map(|(l, c)| (*l, find(c))).collect();
            GadgetView { name: name.into(), elements, partitions: square_partitions(|l| lookup[l]) }
        })
        .collect();

    let mut partitions = BTreeMap::new();
    let view_parts: &Vec<GadgetView> = &views;
    for v in view_parts {
        partitions.insert(format!("{}:central", v.name), v.central().to_vec());
    }
    SquareGadgetPlus {
        gadget: Gadget { name: "square-g1".into(), patch, mode: Mode::Vertex, partitions, names },
        views,
    }
}

impl SquareGadgetPlus {
    /// Searches for a partition-preserving isomorphism from `G` onto the
    /// sub-gadget induced by `view`, independent of the construction map.
    pub fn view_isomorphism(&self, view: &GadgetView) -> Option<Vec<usize>> {
        let g = build_square_g();
        let base = g.gadget.model(1, 2);
        let sub = GraphPatch::induced(
            self.gadget.patch.kind(),
            view.elements.iter().map(|&e| self.gadget.patch.vertices()[e].coord),
        )
        .ok()?;
        let sub_model = build_conflicts(&sub, 1, 2, Mode::Vertex);
        // sub ids follow sorted coordinates; map them back to G₁ ids
        let sub_to_g1: Vec<usize> = sub
            .vertices()
            .iter()
            .map(|v| self.gadget.patch.find(&v.coord).expect("view element"))
            .collect();
        let class_of = |parts: &BTreeMap<String, Vec<usize>>, n: usize, to_local: &dyn Fn(usize) -> usize| {
            let mut c = vec![usize::MAX; n];
            for (i, (_, ids)) in parts.iter().enumerate() {
                for &id in ids {
                    c[to_local(id)] = i;
                }
            }
            c
        };
        let base_colors = class_of(&g.gadget.partitions, 12, &|id| id);
        let local = |id: usize| sub_to_g1.iter().position(|&x| x == id).expect("view partition member");
        let sub_colors = class_of(&view.partitions, sub_to_g1.len(), &local);
        let map = isomorphism(&base, &base_colors, &sub_model, &sub_colors)?;
        Some(map.into_iter().map(|i| sub_to_g1[i]).collect())
    }
}

/// Triangular gadget `G_v` around `v = (0, 0)`.
#[derive(Debug, Clone)]
pub struct TriGadget {
    pub gadget: Gadget,
    /// Pairs of ring edges at distance 3.
    pub opposite_pairs: Vec<(usize, usize)>,
}

impl TriGadget {
    pub fn spokes(&self) -> &[usize] {
        self.gadget.part("S1")
    }

    pub fn ring(&self) -> &[usize] {
        self.gadget.part("S2")
    }

    pub fn rest(&self) -> &[usize] {
        self.gadget.part("S3")
    }
}

const TRI_DIRS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

pub fn build_tri_gv() -> TriGadget {
    let ax = |q: i64, r: i64| Coord::Axial { q, r };
    let v = (0, 0);
    let ring: Vec<(i64, i64)> = TRI_DIRS.to_vec();
    let mut pairs = Vec::new();
    for &(q, r) in &ring {
        for (dq, dr) in TRI_DIRS {
            pairs.push((ax(q, r), ax(q + dq, r + dr)));
        }
    }
    let pairs: Vec<(Coord, Coord)> = pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let patch = GraphPatch::from_edge_coords(PatchKind::Grid(GridKind::Tri6), &pairs).expect("valid tri edges");
    let center = patch.find(&ax(v.0, v.1)).expect("center present");
    let in_ring = |c: &Coord| ring.iter().any(|&(q, r)| *c == ax(q, r));
    let (mut s1, mut s2, mut s3) = (Vec::new(), Vec::new(), Vec::new());
    for e in patch.edges() {
        let (a, b) = patch.edge_coords(e.id);
        if e.u == center || e.v == center {
            s1.push(e.id);
        } else if in_ring(&a) && in_ring(&b) {
            s2.push(e.id);
        } else {
            s3.push(e.id);
        }
    }
    let mut names = BTreeMap::new();
    for (i, &(q, r)) in ring.iter().enumerate() {
        let u = patch.find(&ax(q, r)).expect("ring vertex");
        names.insert(format!("spoke{}", i + 1), patch.edge_between(center, u).expect("spoke"));
        let (nq, nr) = ring[(i + 1) % 6];
        let w = patch.find(&ax(nq, nr)).expect("ring vertex");
        names.insert(format!("ring{}", i + 1), patch.edge_between(u, w).expect("ring edge"));
    }
    let gadget = Gadget {
        name: "tri-gv".into(),
        patch,
        mode: Mode::Edge,
        partitions: [("S1", s1), ("S2", s2), ("S3", s3)].into_iter().map(|(n, s)| (n.to_string(), s)).collect(),
        names,
    };
    let dist = gadget.distances();
    let ring_edges = gadget.part("S2").to_vec();
    let mut opposite_pairs = Vec::new();
    for (i, &a) in ring_edges.iter().enumerate() {
        for &b in &ring_edges[i + 1..] {
            if dist.get(a, b) == Some(3) {
                opposite_pairs.push((a, b));
            }
        }
    }
    TriGadget { gadget, opposite_pairs }
}

/// Octagonal gadget on the king grid.
#[derive(Debug, Clone)]
pub struct OctGadget {
    pub gadget: Gadget,
}

/// Central block vertices with their diagnostic letters, in cyclic order.
pub const OCT_CENTRAL: [(&str, (i64, i64)); 4] = [("f", (1, 1)), ("g", (2, 1)), ("j", (2, 2)), ("k", (1, 2))];

impl OctGadget {
    pub fn h(&self) -> &[usize] {
        self.gadget.part("H")
    }

    pub fn h_prime(&self) -> &[usize] {
        self.gadget.part("H'")
    }

    pub fn g_minus_h(&self) -> &[usize] {
        self.gadget.part("G-H")
    }

    /// The forks in central-letter order `f, g, j, k`.
    pub fn forks(&self) -> Vec<&[usize]> {
        OCT_CENTRAL.iter().map(|(l, _)| self.gadget.part(&format!("F_{l}"))).collect()
    }

    pub fn fork_edges(&self) -> Vec<usize> {
        let mut f: Vec<usize> = self.forks().concat();
        f.sort_unstable();
        f
    }

    /// The fork containing `e`, if any.
    pub fn fork_of(&self, e: usize) -> Option<&[usize]> {
        self.forks().into_iter().find(|f| f.contains(&e))
    }
}

/// Builds the octagonal gadget. The fork at a central vertex `x` is the three
/// edges from `x` into the outer corner of its own quadrant, i.e. to the outer
/// vertices `w` with `w − x` pointing away from the block center.
pub fn build_oct_g_h() -> OctGadget {
    let mut pairs = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            for dx in -1..=1 {
                for dy in -1..=1 {
                    if (dx, dy) != (0, 0) {
                        let (a, b) = (cell(x, y), cell(x + dx, y + dy));
                        pairs.push((a.min(b), a.max(b)));
                    }
                }
            }
        }
    }
    let patch = GraphPatch::from_edge_coords(PatchKind::Grid(GridKind::King8), &pairs).expect("valid king edges");
    let central: Vec<usize> = OCT_CENTRAL.iter().map(|(_, (x, y))| patch.find(&cell(*x, *y)).expect("central")).collect();
    let mut h = Vec::new();
    let mut rest = Vec::new();
    for e in patch.edges() {
        if central.contains(&e.u) || central.contains(&e.v) {
            h.push(e.id);
        } else {
            rest.push(e.id);
        }
    }
    let mut partitions = BTreeMap::new();
    let mut names = BTreeMap::new();
    let mut all_forks = Vec::new();
    for (letter, (x, y)) in OCT_CENTRAL {
        let (sx, sy) = (if x == 1 { -1 } else { 1 }, if y == 1 { -1 } else { 1 });
        let xv = patch.find(&cell(x, y)).expect("central");
        names.insert(letter.to_string(), xv);
        let mut fork: Vec<usize> = [(x + sx, y), (x, y + sy), (x + sx, y + sy)]
            .iter()
            .map(|&(a, b)| patch.edge_between(xv, patch.find(&cell(a, b)).expect("outer")).expect("fork edge"))
            .collect();
        fork.sort_unstable();
        all_forks.extend(&fork);
        partitions.insert(format!("F_{letter}"), fork);
    }
    let h_prime: Vec<usize> = h.iter().copied().filter(|e| !all_forks.contains(e)).collect();
    partitions.insert("H".into(), h);
    partitions.insert("H'".into(), h_prime);
    partitions.insert("G-H".into(), rest);
    OctGadget { gadget: Gadget { name: "oct-gh".into(), patch, mode: Mode::Edge, partitions, names } }
}

/// Any of the four gadgets by CLI shape name.
pub fn build_named(shape: &str) -> Option<Gadget> {
    match shape {
        "square-g" => Some(build_square_g().gadget),
        "square-g1" => Some(build_square_g1().gadget),
        "tri-gv" => Some(build_tri_gv().gadget),
        "oct-gh" => Some(build_oct_g_h().gadget),
        _ => None,
    }
}

pub const SHAPES: [&str; 4] = ["square-g", "square-g1", "tri-gv", "oct-gh"];
