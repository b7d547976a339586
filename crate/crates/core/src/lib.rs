//! Exact L(h,k) labeling of grid graphs and their line graphs.
//!
//! The crate covers the whole pipeline: lattice patches and line graphs
//! ([`grid`]), compiled separation constraints ([`conflict`]), the closed-form
//! span-7 labeling of L(T₃) ([`formula`]), verification ([`verify`]), an exact
//! branch-and-bound solver ([`solver`]), the named lower-bound gadgets
//! ([`gadget`]) and the structural audits behind their counting arguments
//! ([`audit`]).

pub mod audit;
pub mod conflict;
pub mod error;
pub mod formula;
pub mod gadget;
pub mod grid;
pub mod io;
pub mod mis;
pub mod render;
pub mod solver;
pub mod verify;

pub use conflict::{build_conflicts, clique_lower_bound, ConflictModel, SeparationPair};
pub use error::{Error, Result};
pub use formula::{emit_labeling, label_vertex, ModularScheme};
pub use gadget::{build_oct_g_h, build_square_g, build_square_g1, build_tri_gv, DistanceTable, Gadget};
pub use grid::{
    element_distance, generate_patch, line_graph, AxisClass, AxisVertex, Coord, GraphPatch, GridKind, Mode, PatchKind,
};
pub use solver::{certify_lb, feasible, min_span, CertifyOutcome, MinSpan, SearchConfig, SearchOutcome, Verdict};
pub use verify::{verify, verify_periodic, Labeling, ViolationReport};
