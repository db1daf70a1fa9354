//! A self-check suite over a single sequence spec.
//!
//! Each check states an invariant the library is supposed to guarantee and
//! probes it on a deterministic set of sample tiles and windows, so the
//! same spec always produces the same verdict. Checks that need machinery
//! a spec cannot offer (for example flood counts on a finite word) report
//! themselves as skipped rather than passed.

use crate::corona::{burnside_orbits, census, CensusWindow};
use crate::error::Result;
use crate::oracle::{complex_edge_pairs, geometric_adjacency};
use crate::pools::{pool_analysis, standard_flood_check};
use crate::seq::SequenceSpec;
use crate::tiling::{
    anchor_cell, build_window, children, footprint, parent, E0Box, TileAddress,
};

/// Verdict of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Skipped(String),
    /// The invariant failed; the string pins down a concrete witness.
    Failed(String),
}

/// Result row of the suite.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub outcome: Outcome,
}

impl CheckReport {
    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Failed(_))
    }
}

/// Deterministic sample tiles: a grid of layers and cell offsets, plus far
/// escapes, trimmed to the spec's horizon for finite words.
fn sample_tiles(spec: &SequenceSpec) -> Vec<TileAddress> {
    let d = spec.dim();
    let max_layer = match spec.queryable_len() {
        Some(len) => (len as i64 - 2).max(0),
        None => 13,
    };
    let layers = [-2i64, 0, 1, 2, 5, 13];
    let offsets: [i64; 6] = [0, 1, -1, 23, -40, 1 << 40];
    let mut tiles = Vec::new();
    for &layer in layers.iter().filter(|&&l| l <= max_layer) {
        for (i, &base) in offsets.iter().enumerate() {
            // Vary the coordinates so multi-dimensional cells differ per axis.
            let cell = (0..d).map(|c| base.wrapping_add((c as i64) * (i as i64 + 1))).collect();
            tiles.push(TileAddress { layer, cell });
        }
    }
    tiles
}

fn check_address_round_trip(spec: &SequenceSpec) -> Result<Outcome> {
    for t in sample_tiles(spec) {
        let (p, _, halves) = parent(spec, &t)?;
        let kids = children(spec, &p)?;
        let back = kids
            .iter()
            .find(|(h, _)| *h == halves)
            .map(|(_, c)| c.clone())
            .expect("every half mask occurs");
        if back != t {
            return Ok(Outcome::Failed(format!(
                "tile {t:?} is not the {halves:?} subdivision cell of its parent {p:?}"
            )));
        }
        for (_, c) in &kids {
            let (up, _, _) = parent(spec, c)?;
            if up != p {
                return Ok(Outcome::Failed(format!(
                    "subdivision cell {c:?} of {p:?} points back to {up:?}"
                )));
            }
        }
    }
    Ok(Outcome::Passed)
}

fn check_subdivision_partition(spec: &SequenceSpec) -> Result<Outcome> {
    let d = spec.dim();
    for t in sample_tiles(spec) {
        let fp = footprint(spec, &t)?;
        let kids = children(spec, &t)?;
        if kids.len() != 1 << d {
            return Ok(Outcome::Failed(format!(
                "tile {t:?} has {} subdivision cells, want {}",
                kids.len(),
                1 << d
            )));
        }
        for (_, c) in &kids {
            let cf = footprint(spec, c)?;
            if !fp.contains(&cf) {
                return Ok(Outcome::Failed(format!(
                    "subdivision cell {c:?} leaves its tile {t:?}"
                )));
            }
        }
        for (i, (_, a)) in kids.iter().enumerate() {
            for (_, b) in kids.iter().skip(i + 1) {
                let (fa, fb) = (footprint(spec, a)?, footprint(spec, b)?);
                if fa.overlaps_interior(&fb) {
                    return Ok(Outcome::Failed(format!(
                        "subdivision cells {a:?} and {b:?} overlap"
                    )));
                }
            }
        }
    }
    Ok(Outcome::Passed)
}

fn check_anchor_grid(spec: &SequenceSpec) -> Result<Outcome> {
    let top = match spec.queryable_len() {
        Some(len) => len as i64 - 1,
        None => 40,
    };
    let mut prev = anchor_cell(spec, -3)?;
    for layer in -2..=top {
        let cur = anchor_cell(spec, layer)?;
        for i in 0..spec.dim() {
            let edge = &cur.high[i] - &cur.low[i];
            if edge != crate::dyadic::Dyadic::pow2(layer + 1) {
                return Ok(Outcome::Failed(format!(
                    "anchor cell at layer {layer} has edge {edge:?} in coordinate {i}"
                )));
            }
            // Coarse grid origins must sit on the finer grid.
            let diff = &cur.low[i] - &prev.low[i];
            if diff.to_scaled_integer(layer).is_none() {
                return Ok(Outcome::Failed(format!(
                    "anchor origin at layer {layer} leaves the layer-{} grid",
                    layer - 1
                )));
            }
        }
        prev = cur;
    }
    Ok(Outcome::Passed)
}

fn check_contact_cross_check(spec: &SequenceSpec) -> Result<Outcome> {
    let d = spec.dim();
    let top = match spec.queryable_len() {
        Some(len) => (len as i64 - 1).min(2),
        None => 2,
    };
    let half = if d >= 3 { 9 } else { 17 };
    let window = build_window(
        spec,
        (0, top),
        &E0Box::centred(d, half),
    )?;
    let combinatorial = complex_edge_pairs(&window);
    let geometric = geometric_adjacency(spec, &window.nodes)?;
    if combinatorial != geometric {
        let diff = combinatorial
            .iter()
            .find(|p| !geometric.contains(p))
            .or_else(|| geometric.iter().find(|p| !combinatorial.contains(p)))
            .expect("the pair lists differ");
        let (a, b) = (&window.nodes[diff.0], &window.nodes[diff.1]);
        return Ok(Outcome::Failed(format!(
            "contact between {a:?} and {b:?} is claimed by only one of the two routes"
        )));
    }
    Ok(Outcome::Passed)
}

fn check_pool_flood(spec: &SequenceSpec) -> Result<Outcome> {
    if !spec.is_eventually_periodic() {
        return Ok(Outcome::Skipped("pool structure needs an infinite sequence".into()));
    }
    if spec.dim() >= 3 {
        // The flood window grows too fast in three dimensions for a default
        // suite; the pool count is still validated by the wall analysis.
        let report = pool_analysis(spec)?;
        if report.pool_count != 1u128 << report.k {
            return Ok(Outcome::Failed(format!(
                "wall analysis reports {} pools with {} frozen coordinates",
                report.pool_count, report.k
            )));
        }
        return Ok(Outcome::Passed);
    }
    let flood = standard_flood_check(spec)?;
    if !flood.passed() {
        return Ok(Outcome::Failed(format!(
            "flood found {} central components, expected {} (window {:?})",
            flood.central_components, flood.expected_pools, flood.layers
        )));
    }
    Ok(Outcome::Passed)
}

fn check_symmetry_labels(spec: &SequenceSpec) -> Result<Outcome> {
    if !spec.is_eventually_periodic() {
        return Ok(Outcome::Skipped("symmetry labels need an infinite sequence".into()));
    }
    let pools = pool_analysis(spec)?;
    let sym = crate::pools::classify_symmetry(spec, false)?;
    let want = if pools.k == 0 { "Z".to_string() } else { format!("Z x B{}", pools.k) };
    if sym.group != want {
        return Ok(Outcome::Failed(format!(
            "symmetry group label {} does not match {} frozen coordinates",
            sym.group, pools.k
        )));
    }
    Ok(Outcome::Passed)
}

fn check_census_bookkeeping(spec: &SequenceSpec) -> Result<Outcome> {
    let d = spec.dim();
    let k = match d {
        1 => 3usize,
        2 => 2,
        _ => 1,
    };
    if spec.queryable_len().is_some_and(|len| len < k) {
        return Ok(Outcome::Skipped(format!(
            "census at radius {k} needs at least {k} letters"
        )));
    }
    let window = CensusWindow { layer: 0, half_width: 1 << (k + 1) };
    let cells = (2 * window.half_width as u64).pow(d as u32);
    let report = census(spec, k, window)?;
    let total: u64 = report.classes.iter().map(|c| c.multiplicity).sum();
    if total != cells {
        return Ok(Outcome::Failed(format!(
            "class multiplicities sum to {total}, window holds {cells} cells"
        )));
    }
    let bound = burnside_orbits(d, k);
    if u128::from(report.n_k) > bound {
        return Ok(Outcome::Failed(format!(
            "{} corona classes exceed the orbit bound {bound}",
            report.n_k
        )));
    }
    Ok(Outcome::Passed)
}

type CheckFn = fn(&SequenceSpec) -> Result<Outcome>;

/// The named checks in the order they run.
pub const CHECK_NAMES: [&str; 7] = [
    "address-round-trip",
    "subdivision-partition",
    "anchor-grid",
    "contact-cross-check",
    "pool-flood",
    "symmetry-labels",
    "census-bookkeeping",
];

fn checks() -> [(&'static str, CheckFn); 7] {
    [
        ("address-round-trip", check_address_round_trip),
        ("subdivision-partition", check_subdivision_partition),
        ("anchor-grid", check_anchor_grid),
        ("contact-cross-check", check_contact_cross_check),
        ("pool-flood", check_pool_flood),
        ("symmetry-labels", check_symmetry_labels),
        ("census-bookkeeping", check_census_bookkeeping),
    ]
}

/// Runs the suite, stopping after the first failed check. Library errors
/// (as opposed to failed invariants) propagate as errors.
pub fn run_checks(spec: &SequenceSpec) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for (name, f) in checks() {
        let outcome = f(spec)?;
        let failed = matches!(outcome, Outcome::Failed(_));
        reports.push(CheckReport { name, outcome });
        if failed {
            break;
        }
    }
    Ok(reports)
}
