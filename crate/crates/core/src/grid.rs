//! Finite patches of the hexagonal, square, triangular and king grids, their
//! line graphs, and cap-bounded element distances.
//!
//! Coordinates:
//! * `square4` / `king8` vertices are `(col, row)` cells.
//! * `tri6` vertices are axial `(q, r)` pairs with neighbor offsets
//!   `(±1,0), (0,±1), (+1,−1), (−1,+1)`.
//! * `hex3` is handled through its line graph L(T₃), whose vertices lie on
//!   three families of parallel axes X, Y, Z. A vertex is the crossing of two
//!   axes and is stored as `U(x,y)`, `V(y,z)` or `W(z,x)`. Three vertices
//!   `U(x,y), V(y,z), W(z,x)` form a triangle iff `x + y − z ∈ {0, 1}`; every
//!   vertex sits in exactly one triangle of each kind.
//! * The honeycomb T₃ itself uses black/white sublattice cells: black `(q,r)`
//!   is adjacent to white `(q,r)`, `(q+1,r)` and `(q,r+1)`.
//! * Line graphs of the other grids store each vertex as the `Segment` between
//!   the two endpoints of the underlying edge.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Hex3,
    Square4,
    Tri6,
    King8,
}

impl GridKind {
    pub const ALL: [GridKind; 4] = [GridKind::Hex3, GridKind::Square4, GridKind::Tri6, GridKind::King8];

    /// Degree of every vertex of the infinite grid.
    pub fn degree(self) -> usize {
        match self {
            GridKind::Hex3 => 3,
            GridKind::Square4 => 4,
            GridKind::Tri6 => 6,
            GridKind::King8 => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GridKind::Hex3 => "hex3",
            GridKind::Square4 => "square4",
            GridKind::Tri6 => "tri6",
            GridKind::King8 => "king8",
        }
    }

    /// The lattice `generate_patch` works on: L(T₃) for `hex3`, the grid itself otherwise.
    pub fn native_lattice(self) -> PatchKind {
        match self {
            GridKind::Hex3 => PatchKind::Line(GridKind::Hex3),
            other => PatchKind::Grid(other),
        }
    }

    pub fn origin(self) -> Coord {
        match self {
            GridKind::Hex3 => Coord::Axis { class: AxisClass::U, first: 0, second: 0 },
            GridKind::Square4 | GridKind::King8 => Coord::Cell { col: 0, row: 0 },
            GridKind::Tri6 => Coord::Axial { q: 0, r: 0 },
        }
    }

    fn point_offsets(self) -> &'static [[i64; 2]] {
        const SQUARE: [[i64; 2]; 4] = [[1, 0], [0, 1], [-1, 0], [0, -1]];
        const KING: [[i64; 2]; 8] = [[1, 0], [1, 1], [0, 1], [-1, 1], [-1, 0], [-1, -1], [0, -1], [1, -1]];
        const TRI: [[i64; 2]; 6] = [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]];
        match self {
            GridKind::Square4 => &SQUARE,
            GridKind::King8 => &KING,
            GridKind::Tri6 => &TRI,
            GridKind::Hex3 => &[],
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GridKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown grid kind `{s}`")))
    }
}

/// Which lattice a patch lives on: a grid, or the line graph of a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PatchKind {
    Grid(GridKind),
    Line(GridKind),
}

impl PatchKind {
    pub fn interior_degree(self) -> usize {
        match self {
            PatchKind::Grid(k) => k.degree(),
            PatchKind::Line(k) => 2 * (k.degree() - 1),
        }
    }

    pub fn grid(self) -> GridKind {
        match self {
            PatchKind::Grid(k) | PatchKind::Line(k) => k,
        }
    }
}

impl fmt::Display for PatchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatchKind::Grid(k) => write!(f, "{k}"),
            PatchKind::Line(k) => write!(f, "line-{k}"),
        }
    }
}

impl FromStr for PatchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.strip_prefix("line-") {
            Some(rest) => Ok(PatchKind::Line(rest.parse()?)),
            None => Ok(PatchKind::Grid(s.parse()?)),
        }
    }
}

impl TryFrom<String> for PatchKind {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PatchKind> for String {
    fn from(k: PatchKind) -> String {
        k.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxisClass {
    U,
    V,
    W,
}

/// A vertex of L(T₃): `U(x,y)`, `V(y,z)` or `W(z,x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AxisVertex {
    pub class: AxisClass,
    pub first: i64,
    pub second: i64,
}

impl AxisVertex {
    pub fn u(x: i64, y: i64) -> Self {
        AxisVertex { class: AxisClass::U, first: x, second: y }
    }

    pub fn v(y: i64, z: i64) -> Self {
        AxisVertex { class: AxisClass::V, first: y, second: z }
    }

    pub fn w(z: i64, x: i64) -> Self {
        AxisVertex { class: AxisClass::W, first: z, second: x }
    }

    /// Translation cell of the vertex. Cell `(x, y)` holds `U(x,y)`,
    /// `V(y,x+y)` and `W(x+y,x)`, the three edges of black honeycomb vertex `(x,y)`.
    pub fn cell(&self) -> (i64, i64) {
        match self.class {
            AxisClass::U => (self.first, self.second),
            AxisClass::V => (self.second - self.first, self.first),
            AxisClass::W => (self.second, self.first - self.second),
        }
    }

    pub fn in_cell(class: AxisClass, x: i64, y: i64) -> Self {
        match class {
            AxisClass::U => AxisVertex::u(x, y),
            AxisClass::V => AxisVertex::v(y, x + y),
            AxisClass::W => AxisVertex::w(x + y, x),
        }
    }

    pub fn neighbors(&self) -> [AxisVertex; 4] {
        let (a, b) = (self.first, self.second);
        match self.class {
            AxisClass::U => {
                let (z0, z1) = (a + b, a + b - 1);
                [AxisVertex::v(b, z0), AxisVertex::w(z0, a), AxisVertex::v(b, z1), AxisVertex::w(z1, a)]
            }
            AxisClass::V => {
                let (x0, x1) = (b - a, b - a + 1);
                [AxisVertex::u(x0, a), AxisVertex::w(b, x0), AxisVertex::u(x1, a), AxisVertex::w(b, x1)]
            }
            AxisClass::W => {
                let (y0, y1) = (a - b, a - b + 1);
                [AxisVertex::u(b, y0), AxisVertex::v(y0, a), AxisVertex::u(b, y1), AxisVertex::v(y1, a)]
            }
        }
    }
}

impl From<AxisVertex> for Coord {
    fn from(v: AxisVertex) -> Coord {
        Coord::Axis { class: v.class, first: v.first, second: v.second }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Coord {
    Cell { col: i64, row: i64 },
    Axial { q: i64, r: i64 },
    Honeycomb { q: i64, r: i64, white: bool },
    Axis { class: AxisClass, first: i64, second: i64 },
    Segment { from: [i64; 2], to: [i64; 2] },
}

impl Coord {
    pub fn axis(&self) -> Option<AxisVertex> {
        match *self {
            Coord::Axis { class, first, second } => Some(AxisVertex { class, first, second }),
            _ => None,
        }
    }

    pub fn segment(a: [i64; 2], b: [i64; 2]) -> Coord {
        let (from, to) = if a <= b { (a, b) } else { (b, a) };
        Coord::Segment { from, to }
    }

    fn point(&self) -> Option<[i64; 2]> {
        match *self {
            Coord::Cell { col, row } => Some([col, row]),
            Coord::Axial { q, r } => Some([q, r]),
            _ => None,
        }
    }

    fn from_point(kind: GridKind, p: [i64; 2]) -> Coord {
        match kind {
            GridKind::Tri6 => Coord::Axial { q: p[0], r: p[1] },
            _ => Coord::Cell { col: p[0], row: p[1] },
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Cell { col, row } => write!(f, "({col},{row})"),
            Coord::Axial { q, r } => write!(f, "<{q},{r}>"),
            Coord::Honeycomb { q, r, white } => write!(f, "{}({q},{r})", if *white { "w" } else { "b" }),
            Coord::Axis { class, first, second } => write!(f, "{class:?}({first},{second})"),
            Coord::Segment { from, to } => write!(f, "[{},{}]-[{},{}]", from[0], from[1], to[0], to[1]),
        }
    }
}

/// Honeycomb edge between `black(a,b)` and one of its white neighbors, as an L(T₃) vertex.
fn honeycomb_edge_axis(black: (i64, i64), white: (i64, i64)) -> Option<AxisVertex> {
    let (a, b) = black;
    match (white.0 - a, white.1 - b) {
        (0, 0) => Some(AxisVertex::u(a, b)),
        (1, 0) => Some(AxisVertex::v(b, a + b)),
        (0, 1) => Some(AxisVertex::w(a + b, a)),
        _ => None,
    }
}

fn coord_valid(kind: PatchKind, c: &Coord) -> bool {
    match (kind, c) {
        (PatchKind::Grid(GridKind::Square4 | GridKind::King8), Coord::Cell { .. }) => true,
        (PatchKind::Grid(GridKind::Tri6), Coord::Axial { .. }) => true,
        (PatchKind::Grid(GridKind::Hex3), Coord::Honeycomb { .. }) => true,
        (PatchKind::Line(GridKind::Hex3), Coord::Axis { .. }) => true,
        (PatchKind::Line(k), Coord::Segment { from, to }) if k != GridKind::Hex3 => {
            from < to && k.point_offsets().contains(&[to[0] - from[0], to[1] - from[1]])
        }
        _ => false,
    }
}

fn check_coord(kind: PatchKind, c: &Coord) -> Result<()> {
    if coord_valid(kind, c) {
        Ok(())
    } else {
        Err(Error::Coordinate { kind: kind.to_string(), coord: c.to_string() })
    }
}

/// Neighbors of `c` in the infinite lattice `kind`. `c` must be valid for `kind`.
fn lattice_neighbors(kind: PatchKind, c: &Coord) -> Vec<Coord> {
    match (kind, *c) {
        (PatchKind::Grid(GridKind::Hex3), Coord::Honeycomb { q, r, white }) => {
            let s = if white { -1 } else { 1 };
            [(0, 0), (s, 0), (0, s)]
                .into_iter()
                .map(|(dq, dr)| Coord::Honeycomb { q: q + dq, r: r + dr, white: !white })
                .collect()
        }
        (PatchKind::Grid(k), _) => {
            let p = c.point().expect("validated coordinate");
            k.point_offsets()
                .iter()
                .map(|o| Coord::from_point(k, [p[0] + o[0], p[1] + o[1]]))
                .collect()
        }
        (PatchKind::Line(GridKind::Hex3), Coord::Axis { class, first, second }) => {
            AxisVertex { class, first, second }.neighbors().into_iter().map(Coord::from).collect()
        }
        (PatchKind::Line(k), Coord::Segment { from, to }) => {
            let mut out = Vec::with_capacity(2 * (k.degree() - 1));
            for p in [from, to] {
                for o in k.point_offsets() {
                    let s = Coord::segment(p, [p[0] + o[0], p[1] + o[1]]);
                    if s != *c {
                        out.push(s);
                    }
                }
            }
            out
        }
        _ => Vec::new(),
    }
}

fn lattice_adjacent(kind: PatchKind, a: &Coord, b: &Coord) -> bool {
    lattice_neighbors(kind, a).contains(b)
}

/// Element mode of an L(h,k) instance: label edges or label vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Edge,
    Vertex,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(Mode::Edge),
            "vertex" => Ok(Mode::Vertex),
            _ => Err(Error::Format(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub coord: Coord,
    pub boundary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

/// A finite simple subgraph of one of the lattices, with dense vertex and edge ids.
#[derive(Debug, Clone)]
pub struct GraphPatch {
    kind: PatchKind,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    index: HashMap<Coord, usize>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for GraphPatch {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl GraphPatch {
    /// Builds a patch from vertex coordinates (ids are positions) and edges
    /// given as endpoint pairs (ids are positions). Every edge must join two
    /// lattice-adjacent coordinates.
    pub fn from_parts(kind: PatchKind, coords: Vec<Coord>, edge_list: &[(usize, usize)]) -> Result<Self> {
        let mut index = HashMap::with_capacity(coords.len());
        for (id, c) in coords.iter().enumerate() {
            check_coord(kind, c)?;
            if index.insert(*c, id).is_some() {
                return Err(Error::Malformed(format!("duplicate coordinate {c}")));
            }
        }
        let mut seen = BTreeSet::new();
        let mut incidence = vec![Vec::new(); coords.len()];
        let mut edges = Vec::with_capacity(edge_list.len());
        for (id, &(u, v)) in edge_list.iter().enumerate() {
            if u >= coords.len() || v >= coords.len() {
                return Err(Error::Malformed(format!("edge {id} references a missing vertex")));
            }
            if u == v {
                return Err(Error::Malformed(format!("edge {id} is a loop")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Malformed(format!("edge {id} duplicates an earlier edge")));
            }
            if !lattice_adjacent(kind, &coords[u], &coords[v]) {
                return Err(Error::Malformed(format!(
                    "edge {id} joins non-adjacent coordinates {} and {}",
                    coords[u], coords[v]
                )));
            }
            incidence[u].push(id);
            incidence[v].push(id);
            edges.push(Edge { id, u, v });
        }
        let interior = kind.interior_degree();
        let vertices = coords
            .into_iter()
            .enumerate()
            .map(|(id, coord)| Vertex { id, coord, boundary: incidence[id].len() < interior })
            .collect();
        Ok(GraphPatch { kind, vertices, edges, index, incidence })
    }

    /// The induced subgraph of the lattice on `coords`; ids follow coordinate order.
    pub fn induced(kind: PatchKind, coords: impl IntoIterator<Item = Coord>) -> Result<Self> {
        let coords: Vec<Coord> = coords.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let index: HashMap<Coord, usize> = coords.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut edge_list = Vec::new();
        for (i, c) in coords.iter().enumerate() {
            check_coord(kind, c)?;
            for n in lattice_neighbors(kind, c) {
                if let Some(&j) = index.get(&n) {
                    if j > i {
                        edge_list.push((i, j));
                    }
                }
            }
        }
        edge_list.sort_unstable();
        GraphPatch::from_parts(kind, coords, &edge_list)
    }

    /// The subgraph made of the given lattice edges and their endpoints.
    pub fn from_edge_coords(kind: PatchKind, pairs: &[(Coord, Coord)]) -> Result<Self> {
        let coords: Vec<Coord> =
            pairs.iter().flat_map(|(a, b)| [*a, *b]).collect::<BTreeSet<_>>().into_iter().collect();
        let index: HashMap<Coord, usize> = coords.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut edge_list: Vec<(usize, usize)> = pairs
            .iter()
            .map(|(a, b)| {
                let (u, v) = (index[a], index[b]);
                (u.min(v), u.max(v))
            })
            .collect();
        edge_list.sort_unstable();
        edge_list.dedup();
        GraphPatch::from_parts(kind, coords, &edge_list)
    }

    pub fn kind(&self) -> PatchKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn find(&self, coord: &Coord) -> Option<usize> {
        self.index.get(coord).copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// The edge joining two vertices, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.incidence[u].iter().copied().find(|&e| {
            let edge = self.edges[e];
            (edge.u == u && edge.v == v) || (edge.u == v && edge.v == u)
        })
    }

    pub fn edge_coords(&self, e: usize) -> (Coord, Coord) {
        let edge = self.edges[e];
        (self.vertices[edge.u].coord, self.vertices[edge.v].coord)
    }

    pub fn element_count(&self, mode: Mode) -> usize {
        match mode {
            Mode::Edge => self.edges.len(),
            Mode::Vertex => self.vertices.len(),
        }
    }

    pub fn element_graph(&self, mode: Mode) -> ElementGraph {
        let adjacency = match mode {
            Mode::Vertex => (0..self.vertices.len())
                .map(|v| {
                    let mut n: Vec<usize> = self.incidence[v]
                        .iter()
                        .map(|&e| {
                            let edge = self.edges[e];
                            if edge.u == v {
                                edge.v
                            } else {
                                edge.u
                            }
                        })
                        .collect();
                    n.sort_unstable();
                    n
                })
                .collect(),
            Mode::Edge => self
                .edges
                .iter()
                .map(|edge| {
                    let mut n: Vec<usize> = self.incidence[edge.u]
                        .iter()
                        .chain(&self.incidence[edge.v])
                        .copied()
                        .filter(|&f| f != edge.id)
                        .collect();
                    n.sort_unstable();
                    n.dedup();
                    n
                })
                .collect(),
        };
        ElementGraph { adjacency }
    }
}

/// Adjacency between the labeled elements of a patch: shared endpoints in
/// edge mode (the line graph), ordinary adjacency in vertex mode.
#[derive(Debug, Clone)]
pub struct ElementGraph {
    adjacency: Vec<Vec<usize>>,
}

impl ElementGraph {
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, a: usize) -> &[usize] {
        &self.adjacency[a]
    }

    /// Breadth-first distances from `src` truncated at `cap`; unreached entries are `None`.
    pub fn distances_from(&self, src: usize, cap: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.adjacency.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            if d == cap {
                continue;
            }
            for &y in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

/// Generates the induced patch of all lattice vertices within graph distance
/// `radius` of `center`. `hex3` windows are generated directly as L(T₃).
pub fn generate_patch(kind: GridKind, radius: usize, center: Coord) -> Result<GraphPatch> {
    generate_on(kind.native_lattice(), radius, center)
}

/// Same as [`generate_patch`] on an explicit lattice (e.g. the honeycomb or a line graph).
pub fn generate_on(lattice: PatchKind, radius: usize, center: Coord) -> Result<GraphPatch> {
    check_coord(lattice, &center)?;
    let mut dist: HashMap<Coord, usize> = HashMap::from([(center, 0)]);
    let mut queue = VecDeque::from([center]);
    while let Some(c) = queue.pop_front() {
        let d = dist[&c];
        if d == radius {
            continue;
        }
        for n in lattice_neighbors(lattice, &c) {
            if let std::collections::hash_map::Entry::Vacant(slot) = dist.entry(n) {
                slot.insert(d + 1);
                queue.push_back(n);
            }
        }
    }
    GraphPatch::induced(lattice, dist.into_keys())
}

/// L(T₃) window of all vertices whose translation cell lies in `[lo, lo + side)²`.
pub fn axis_window(lo: i64, side: i64) -> Result<GraphPatch> {
    let mut coords = Vec::new();
    for x in lo..lo + side {
        for y in lo..lo + side {
            for class in [AxisClass::U, AxisClass::V, AxisClass::W] {
                coords.push(Coord::from(AxisVertex::in_cell(class, x, y)));
            }
        }
    }
    GraphPatch::induced(PatchKind::Line(GridKind::Hex3), coords)
}

/// The line graph: vertex `i` of the result is edge `i` of `patch`, and two
/// vertices are adjacent iff the edges share an endpoint.
pub fn line_graph(patch: &GraphPatch) -> Result<GraphPatch> {
    let grid = match patch.kind() {
        PatchKind::Grid(k) => k,
        PatchKind::Line(_) => {
            return Err(Error::Unsupported("line graph of a line-graph patch".into()));
        }
    };
    let coords = (0..patch.edge_count())
        .map(|e| {
            let (a, b) = patch.edge_coords(e);
            match (a, b) {
                (Coord::Honeycomb { q, r, white: false }, Coord::Honeycomb { q: q2, r: r2, white: true })
                | (Coord::Honeycomb { q: q2, r: r2, white: true }, Coord::Honeycomb { q, r, white: false }) => {
                    honeycomb_edge_axis((q, r), (q2, r2))
                        .map(Coord::from)
                        .ok_or_else(|| Error::Malformed(format!("{a} and {b} are not adjacent")))
                }
                _ => Ok(Coord::segment(
                    a.point().ok_or_else(|| Error::Malformed(format!("unexpected coordinate {a}")))?,
                    b.point().ok_or_else(|| Error::Malformed(format!("unexpected coordinate {b}")))?,
                )),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let mut edge_list = Vec::new();
    for v in 0..patch.vertex_count() {
        let inc = patch.incident_edges(v);
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                edge_list.push((a.min(b), a.max(b)));
            }
        }
    }
    edge_list.sort_unstable();
    edge_list.dedup();
    GraphPatch::from_parts(PatchKind::Line(grid), coords, &edge_list)
}

/// Cap-bounded distance between two elements: line-graph distance for edges,
/// graph distance for vertices. `Ok(None)` means the distance exceeds `cap`.
pub fn element_distance(patch: &GraphPatch, mode: Mode, a: usize, b: usize, cap: usize) -> Result<Option<usize>> {
    let n = patch.element_count(mode);
    for x in [a, b] {
        if x >= n {
            return Err(Error::Lookup(x));
        }
    }
    if a == b {
        return Ok(Some(0));
    }
    Ok(patch.element_graph(mode).distances_from(a, cap)[b])
}
