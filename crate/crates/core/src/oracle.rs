//! Independent geometric cross-checks.
//!
//! Window complexes are wired by address arithmetic and coronas are
//! compared by words. This module re-derives both facts from geometry
//! alone — exact dyadic box intersections and explicit candidate
//! isometries — so tests can play the two routes against each other.

use std::collections::BTreeSet;

use crate::corona::Corona;
use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::seq::SequenceSpec;
use crate::tiling::{footprint, TileAddress, TileComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum AxisRel {
    Disjoint,
    Touch,
    Overlap,
}

fn axis_rel(a_lo: &Dyadic, a_hi: &Dyadic, b_lo: &Dyadic, b_hi: &Dyadic) -> AxisRel {
    if a_hi < b_lo || b_hi < a_lo {
        AxisRel::Disjoint
    } else if a_hi == b_lo || b_hi == a_lo {
        AxisRel::Touch
    } else {
        AxisRel::Overlap
    }
}

/// Facet contacts among `nodes`, derived purely from the tile boxes.
///
/// A tile at layer `j` occupies its footprint times the height band
/// `[2^j, 2^(j+1)]`. Two boxes share a facet exactly when
///
/// * they sit on the same layer and their footprints touch along exactly
///   one axis while overlapping in the interiors of all others (a side
///   contact), or
/// * they sit on adjacent layers — so their bands touch — and their
///   footprints overlap in the interiors of every axis (a vertical
///   contact between a tile and one of its subdivision cells).
///
/// Corner and edge contacts of lower dimension do not count. Returns the
/// sorted list of index pairs `(i, j)` with `i < j`.
pub fn geometric_adjacency(
    spec: &SequenceSpec,
    nodes: &[TileAddress],
) -> Result<Vec<(usize, usize)>> {
    let d = spec.dim();
    let mut boxes = Vec::with_capacity(nodes.len());
    for t in nodes {
        boxes.push((t.layer, footprint(spec, t)?));
    }
    let mut pairs = Vec::new();
    for i in 0..boxes.len() {
        for j in (i + 1)..boxes.len() {
            let (la, fa) = &boxes[i];
            let (lb, fb) = &boxes[j];
            if (la - lb).abs() > 1 {
                continue;
            }
            let mut disjoint = false;
            let mut touches = 0usize;
            for c in 0..d {
                match axis_rel(&fa.low[c], &fa.high[c], &fb.low[c], &fb.high[c]) {
                    AxisRel::Disjoint => {
                        disjoint = true;
                        break;
                    }
                    AxisRel::Touch => touches += 1,
                    AxisRel::Overlap => {}
                }
            }
            if disjoint {
                continue;
            }
            let adjacent = if la == lb {
                assert!(touches > 0, "same-layer tiles overlap in their interiors");
                touches == 1
            } else {
                touches == 0
            };
            if adjacent {
                pairs.push((i, j));
            }
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// The complex's combinatorial contacts as sorted undirected index pairs,
/// ready to compare against [`geometric_adjacency`].
pub fn complex_edge_pairs(complex: &TileComplex) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = complex
        .edges
        .iter()
        .map(|e| (e.a.min(e.b), e.a.max(e.b)))
        .collect();
    pairs.sort_unstable();
    let n = pairs.len();
    pairs.dedup();
    assert_eq!(n, pairs.len(), "two edges join the same tile pair");
    pairs
}

/// One member box of a placed corona: relative layer plus the interval the
/// tile occupies after applying a candidate isometry.
type PlacedBox = (i64, Dyadic, Dyadic);

fn placed_members(
    spec: &SequenceSpec,
    corona: &Corona,
    map: &dyn Fn(i64, &Dyadic, &Dyadic) -> PlacedBox,
) -> Result<BTreeSet<PlacedBox>> {
    let mut set = BTreeSet::new();
    for t in &corona.complex.nodes {
        let fp = footprint(spec, t)?;
        set.insert(map(t.layer, &fp.low[0], &fp.high[0]));
    }
    Ok(set)
}

/// Decides whether two coronas of the same radius in a one-dimensional
/// tiling are congruent: some isometry of the plane carries one onto the
/// other, tile by tile.
///
/// Any such isometry must send the center tile to the center tile with
/// matching facet roles (the two horocyclic edges of a tile have different
/// lengths, so they cannot trade places), which pins it down to one of two
/// candidates in the chart: the direct map `x -> s*x + c` or the reflected
/// map `x -> -s*x + c`, where `s = 2^(layer difference)` matches the
/// bands. Both candidates are applied exactly and the full member box sets
/// are compared.
pub fn corona_congruent(spec: &SequenceSpec, a: &Corona, b: &Corona) -> Result<bool> {
    assert_eq!(spec.dim(), 1, "congruence search covers one-dimensional tilings");
    assert_eq!(a.radius, b.radius, "compare coronas of equal radius");
    let fa = footprint(spec, &a.center)?;
    let fb = footprint(spec, &b.center)?;
    let shift = b.center.layer - a.center.layer;

    // Target member set in absolute coordinates.
    let target = placed_members(spec, b, &|layer, lo, hi| (layer, lo.clone(), hi.clone()))?;

    // Direct candidate: x -> 2^shift * x + c with c sending low end to low end.
    let c_dir = &fb.low[0] - &fa.low[0].mul_pow2(shift);
    let direct = placed_members(spec, a, &|layer, lo, hi| {
        (layer + shift, &lo.mul_pow2(shift) + &c_dir, &hi.mul_pow2(shift) + &c_dir)
    })?;
    if direct == target {
        return Ok(true);
    }

    // Reflected candidate: x -> -(2^shift * x) + c with c sending the high
    // end of the center onto the low end of the target center.
    let c_ref = &fb.low[0] + &fa.high[0].mul_pow2(shift);
    let reflected = placed_members(spec, a, &|layer, lo, hi| {
        (layer + shift, &c_ref - &hi.mul_pow2(shift), &c_ref - &lo.mul_pow2(shift))
    })?;
    Ok(reflected == target)
}
