//! Symbolic engine for a family of hyperbolic tilings indexed by sign
//! sequences, with exact combinatorial invariants.

pub mod catalog;
pub mod corona;
pub mod dyadic;
pub mod error;
pub mod geometry;
pub mod group;
pub mod oracle;
pub mod pools;
pub mod render;
pub mod seq;
pub mod tiling;
pub mod verify;

pub use catalog::{by_name, catalog, line_catalog, CatalogEntry};
pub use corona::{
    burnside_orbits, census, corona_code, corona_complex, local_theorem_check, stabilizer,
    CensusReport, CensusWindow, Corona, CoronaCode, LocalTheoremVerdict,
};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use geometry::{
    cross_ratio, embed_region, layer_distance, metric_report, to_disc, Complex,
    HalfSpaceRegion, MetricReport,
};
pub use group::{hyperoctahedral, SignedPermutation, Subgroup};
pub use oracle::{complex_edge_pairs, corona_congruent, geometric_adjacency};
pub use pools::{
    classify_symmetry, flood_pools, pool_analysis, pool_id, standard_flood_check,
    BoundedSide, FloodCheck, PoolReport, SymmetryReport, Wall,
};
pub use render::{render_svg, RenderModel, RenderStyle};
pub use seq::{CoordinateWord, SequenceSpec, Sign, SpecKind, Symbol, TailBehavior};
pub use tiling::{
    anchor_cell, build_window, children, footprint, parent, side_neighbor, tail_word,
    AnchorCell, E0Box, Edge, FacetLabel, TailWord, TileAddress, TileComplex,
};
pub use verify::{run_checks, CheckReport, Outcome, CHECK_NAMES};
