//! Global invariants decidable from the sequence: pool structure (count,
//! walls, membership), a flood-fill verification oracle over finite windows,
//! and the symmetry-group classifier.
//!
//! A pool is a class of tiles linked by horospheric paths (paths crossing
//! only a- and b-facets). A coordinate whose letters are eventually constant
//! freezes one side of the footprint recurrence, producing a wall: a grid
//! hyperplane that no horospheric path ever crosses. With `k` such
//! coordinates there are exactly `2^k` pools, one per side assignment.

use std::collections::VecDeque;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::SignedPermutation;
use crate::seq::{SequenceSpec, Sign, SpecKind, TailBehavior};
use crate::tiling::{anchor_cell, build_window, footprint, E0Box, TileAddress, TileComplex};
use crate::Dyadic;

/// Which side of a wall carries the bounded end of the footprints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundedSide {
    /// Footprints are bounded below: the low corner freezes (letters
    /// eventually `+1`).
    Below,
    /// Footprints are bounded above: the high corner freezes (letters
    /// eventually `-1`).
    Above,
}

/// A wall: the coordinate hyperplane `x_i = position` that separates pools.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    /// 1-based coordinate index.
    pub coordinate: usize,
    /// Exact wall position (the limiting frozen corner value).
    pub position: BigInt,
    pub bounded_side: BoundedSide,
    /// Layer at which the corner is already frozen.
    pub onset_layer: i64,
}

impl Serialize for Wall {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Wall", 4)?;
        s.serialize_field("coordinate", &self.coordinate)?;
        s.serialize_field("position", &self.position.to_string())?;
        s.serialize_field("bounded_side", &self.bounded_side)?;
        s.serialize_field("onset_layer", &self.onset_layer)?;
        s.end()
    }
}

/// Pool structure of the tiling described by a spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoolReport {
    pub dim: usize,
    /// Number of bounded (eventually-constant) coordinates.
    pub k: usize,
    pub pool_count: u128,
    pub walls: Vec<Wall>,
    /// `(d - k, k)`: each pool's support is a product of `d - k` full lines
    /// and `k` half-lines (an octant factor).
    pub support_signature: (usize, usize),
}

/// Computes the pool structure exactly from the tail behavior of each
/// coordinate. Requires the full infinite sequence, i.e. an
/// eventually-periodic spec.
pub fn pool_analysis(spec: &SequenceSpec) -> Result<PoolReport> {
    if !spec.is_eventually_periodic() {
        return Err(Error::FiniteWordMode);
    }
    let d = spec.dim();
    let mut walls = Vec::new();
    for i in 0..d {
        if let TailBehavior::EventuallyConstant { value, onset } =
            spec.coordinate_tail_behavior(i)?
        {
            let onset_layer = onset as i64 - 1;
            let frozen = anchor_cell(spec, onset_layer)?;
            let (position, bounded_side) = match value {
                Sign::Plus => (frozen.low[i].to_bigint().unwrap(), BoundedSide::Below),
                Sign::Minus => (frozen.high[i].to_bigint().unwrap(), BoundedSide::Above),
            };
            walls.push(Wall { coordinate: i + 1, position, bounded_side, onset_layer });
        }
    }
    let k = walls.len();
    assert!(k < 128);
    Ok(PoolReport {
        dim: d,
        k,
        pool_count: 1u128 << k,
        walls,
        support_signature: (d - k, k),
    })
}

/// Which pool a tile belongs to: for each bounded coordinate in coordinate
/// order, `+` if the footprint lies on or above the wall, `-` if on or
/// below. Walls are grid hyperplanes of every layer, so a footprint never
/// straddles one.
pub fn pool_id_with(
    spec: &SequenceSpec,
    report: &PoolReport,
    t: &TileAddress,
) -> Result<Vec<Sign>> {
    let fp = footprint(spec, t)?;
    let mut id = Vec::with_capacity(report.walls.len());
    for wall in &report.walls {
        let i = wall.coordinate - 1;
        let w = Dyadic::from_bigint(wall.position.clone());
        if fp.low[i] >= w {
            id.push(Sign::Plus);
        } else if fp.high[i] <= w {
            id.push(Sign::Minus);
        } else {
            return Err(Error::WallDissectsTile { coordinate: wall.coordinate });
        }
    }
    Ok(id)
}

/// Convenience form of [`pool_id_with`] that recomputes the analysis.
pub fn pool_id(spec: &SequenceSpec, t: &TileAddress) -> Result<Vec<Sign>> {
    let report = pool_analysis(spec)?;
    pool_id_with(spec, &report, t)
}

/// Connected components of the window under horospheric (a/b) edges only.
/// Each component is sorted; components are ordered by smallest member.
pub fn flood_pools(window: &TileComplex) -> Vec<Vec<usize>> {
    let adj = window.adjacency(true);
    let mut seen = vec![false; window.len()];
    let mut components = Vec::new();
    for start in 0..window.len() {
        if seen[start] {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut comp = vec![start];
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components.sort_by_key(|c| c[0]);
    components
}

/// The standard window on which the flood oracle is guaranteed to see the
/// full pool structure: layers `[0, J* + 2]` and the box `[-2^(J*+3),
/// 2^(J*+3)]^d`, where `J*` covers every wall onset plus the normalized
/// preperiod, plus one full period (so every unbounded coordinate has both
/// corners moved well past the center).
pub fn standard_verification_window(spec: &SequenceSpec) -> Result<((i64, i64), E0Box)> {
    let report = pool_analysis(spec)?;
    let (pre, period) = spec.minimal_period()?;
    let max_onset = report.walls.iter().map(|w| w.onset_layer + 1).max().unwrap_or(0);
    let j_star = (pre as i64).max(max_onset) + period as i64;
    assert!(j_star + 3 <= 62, "verification window too large for this spec");
    let layers = (0, j_star + 2);
    let window = E0Box::centred(spec.dim(), 1 << (j_star + 3));
    Ok((layers, window))
}

/// Result of running the flood oracle on the standard window and comparing
/// it with the symbolic pool analysis.
#[derive(Debug, Clone)]
pub struct FloodCheck {
    pub layers: (i64, i64),
    pub window: E0Box,
    pub nodes: usize,
    /// All components in the window (may exceed the pool count near the
    /// window boundary, where merges happen above the top layer).
    pub components: usize,
    /// Components owning a layer-0 tile that touches the central region
    /// around the wall crossing.
    pub central_components: usize,
    pub expected_pools: u128,
    /// Every component is constant under `pool_id`, and distinct central
    /// components carry distinct ids.
    pub ids_consistent: bool,
}

impl FloodCheck {
    pub fn passed(&self) -> bool {
        self.central_components as u128 == self.expected_pools && self.ids_consistent
    }
}

/// Central region used to pick the components that witness pools: a tight
/// box around the common wall intersection (`[-2, 2]` in unbounded
/// coordinates, `[w - 2, w + 2]` around each wall).
pub fn central_region(spec: &SequenceSpec, report: &PoolReport) -> E0Box {
    let d = spec.dim();
    let mut low = vec![Dyadic::from_int(-2); d];
    let mut high = vec![Dyadic::from_int(2); d];
    for wall in &report.walls {
        let i = wall.coordinate - 1;
        let w = Dyadic::from_bigint(wall.position.clone());
        low[i] = &w - &Dyadic::from_int(2);
        high[i] = &w + &Dyadic::from_int(2);
    }
    E0Box { low, high }
}

/// Runs the flood oracle on the standard verification window and
/// cross-checks it against the symbolic analysis.
pub fn standard_flood_check(spec: &SequenceSpec) -> Result<FloodCheck> {
    let report = pool_analysis(spec)?;
    let (layers, window) = standard_verification_window(spec)?;
    let complex = build_window(spec, layers, &window)?;
    let components = flood_pools(&complex);
    let central = central_region(spec, &report);

    let mut central_components = 0usize;
    let mut central_ids: Vec<Vec<Sign>> = Vec::new();
    let mut ids_consistent = true;
    for comp in &components {
        let mut comp_id: Option<Vec<Sign>> = None;
        for &v in comp.iter() {
            let id = pool_id_with(spec, &report, &complex.nodes[v])?;
            match &comp_id {
                None => comp_id = Some(id),
                Some(existing) => {
                    if *existing != id {
                        ids_consistent = false;
                    }
                }
            }
        }
        let touches_center = comp.iter().any(|&v| {
            let t = &complex.nodes[v];
            t.layer == 0 && footprint(spec, t).map(|fp| fp.touches(&central)).unwrap_or(false)
        });
        if touches_center {
            central_components += 1;
            central_ids.push(comp_id.unwrap());
        }
    }
    central_ids.sort();
    let before = central_ids.len();
    central_ids.dedup();
    if central_ids.len() != before {
        ids_consistent = false;
    }

    Ok(FloodCheck {
        layers,
        window,
        nodes: complex.len(),
        components: components.len(),
        central_components,
        expected_pools: report.pool_count,
        ids_consistent,
    })
}

/// Essential-period witness in a serializable form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EssentialPeriodReport {
    pub q: usize,
    pub witness: SignedPermutation,
}

impl Serialize for EssentialPeriodReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EssentialPeriodReport", 2)?;
        s.serialize_field("q", &self.q)?;
        s.serialize_field("witness", &self.witness.window_notation())?;
        s.end()
    }
}

/// Symmetry classification of the tiling described by a spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    /// Group descriptor: "Z x B{k}" (with "Z" for k = 0) when the sequence
    /// is eventually periodic, "B{k}" (with "trivial" for k = 0) for
    /// asserted-aperiodic sequences.
    pub group: String,
    pub k: usize,
    /// Minimal `(preperiod, period)` of the letter sequence, when decidable.
    pub period: Option<(usize, usize)>,
    pub essential_period: Option<EssentialPeriodReport>,
    /// Descriptive fundamental domain, for d = 1 only.
    pub fundamental_domain: Option<String>,
}

/// Classifies the symmetry group.
///
/// Eventually-periodic specs always carry the layer-shift symmetry, giving
/// `Z x B_k` where `k` counts bounded coordinates. A finite word cannot
/// settle periodicity, so classification requires `assume_aperiodic`, which
/// asserts that the underlying infinite sequence is aperiodic; `k` is then
/// read off from the coordinates constant throughout the word. The flag is
/// rejected for eventually-periodic specs (they are never aperiodic) and
/// for all-constant words (such a word carries no evidence of aperiodicity:
/// every coordinate bounded forces an eventually periodic tail).
pub fn classify_symmetry(spec: &SequenceSpec, assume_aperiodic: bool) -> Result<SymmetryReport> {
    let d = spec.dim();
    match spec.kind() {
        SpecKind::EventuallyPeriodic(_) => {
            if assume_aperiodic {
                return Err(Error::ValidationError(
                    "an eventually periodic spec cannot be assumed aperiodic".into(),
                ));
            }
            let mut k = 0usize;
            for i in 0..d {
                if matches!(
                    spec.coordinate_tail_behavior(i)?,
                    TailBehavior::EventuallyConstant { .. }
                ) {
                    k += 1;
                }
            }
            let group = if k == 0 { "Z".to_string() } else { format!("Z x B{k}") };
            let minimal = spec.minimal_period()?;
            let (q, witness) = spec.essential_period()?;
            let fundamental_domain = if d == 1 {
                Some(if k == 1 {
                    "half ring".to_string()
                } else if q == 1 {
                    "1 ring".to_string()
                } else {
                    format!("{q} rings")
                })
            } else {
                None
            };
            Ok(SymmetryReport {
                group,
                k,
                period: Some(minimal),
                essential_period: Some(EssentialPeriodReport { q, witness }),
                fundamental_domain,
            })
        }
        SpecKind::FiniteWord(word) => {
            if !assume_aperiodic {
                return Err(Error::FiniteWordMode);
            }
            if word.is_empty() {
                return Err(Error::ValidationError(
                    "cannot classify an empty word".into(),
                ));
            }
            let mut k = 0usize;
            for i in 0..d {
                let first = word[0].get(i);
                if word.iter().all(|sym| sym.get(i) == first) {
                    k += 1;
                }
            }
            if k == d {
                return Err(Error::ValidationError(
                    "word is constant in every coordinate; such a sequence cannot be aperiodic"
                        .into(),
                ));
            }
            let group = if k == 0 { "trivial".to_string() } else { format!("B{k}") };
            let fundamental_domain = if d == 1 { Some("whole space".to_string()) } else { None };
            Ok(SymmetryReport {
                group,
                k,
                period: None,
                essential_period: None,
                fundamental_domain,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{ep_spec, word_spec};
    use crate::tiling::build_window;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn wall_tuple(w: &Wall) -> (usize, BigInt, BoundedSide, i64) {
        (w.coordinate, w.position.clone(), w.bounded_side, w.onset_layer)
    }

    #[test]
    fn analysis_examples() {
        // Constant +1: the low corner never moves.
        let spec = ep_spec(&[(&[], &[1])]);
        let r = pool_analysis(&spec).unwrap();
        assert_eq!((r.k, r.pool_count), (1, 2));
        assert_eq!(r.support_signature, (0, 1));
        assert_eq!(
            wall_tuple(&r.walls[0]),
            (1, BigInt::from(-1), BoundedSide::Below, 0)
        );

        // Alternating: unbounded both ways, a single pool.
        let spec = ep_spec(&[(&[], &[1, -1])]);
        let r = pool_analysis(&spec).unwrap();
        assert_eq!((r.k, r.pool_count), (0, 1));
        assert!(r.walls.is_empty());
        assert_eq!(r.support_signature, (1, 0));

        // d=2, x constant -1 (high corner frozen at +1), y alternating.
        let spec = ep_spec(&[(&[], &[-1]), (&[], &[1, -1])]);
        let r = pool_analysis(&spec).unwrap();
        assert_eq!((r.k, r.pool_count), (1, 2));
        assert_eq!(r.support_signature, (1, 1));
        assert_eq!(
            wall_tuple(&r.walls[0]),
            (1, BigInt::from(1), BoundedSide::Above, 0)
        );

        // A preperiod delays the onset: constant from the second letter.
        let spec = ep_spec(&[(&[-1], &[1])]);
        let r = pool_analysis(&spec).unwrap();
        // a^(1) after one -1 letter: -1 - 2 = -3, frozen from layer 1.
        assert_eq!(
            wall_tuple(&r.walls[0]),
            (1, BigInt::from(-3), BoundedSide::Below, 1)
        );
    }

    #[test]
    fn finite_words_have_no_pool_analysis() {
        let spec = word_spec(1, &[&[1], &[-1]]);
        assert!(matches!(pool_analysis(&spec), Err(Error::FiniteWordMode)));
    }

    #[test]
    fn pool_id_examples_and_no_straddling() {
        let spec = ep_spec(&[(&[], &[1])]);
        assert_eq!(pool_id(&spec, &TileAddress::new(0, vec![0])).unwrap(), vec![Sign::Plus]);
        assert_eq!(pool_id(&spec, &TileAddress::new(0, vec![-1])).unwrap(), vec![Sign::Minus]);
        // Walls are grid points of every layer, so no tile straddles.
        let report = pool_analysis(&spec).unwrap();
        for layer in -4..=8 {
            for m in -6..=6 {
                let t = TileAddress::new(layer, vec![m]);
                assert!(pool_id_with(&spec, &report, &t).is_ok());
            }
        }
    }

    #[test]
    fn flood_example_window() {
        // Layers [0, 6], box of half-width 2^7: exactly two components touch
        // the central region, matching the symbolic count.
        let spec = ep_spec(&[(&[], &[1])]);
        let report = pool_analysis(&spec).unwrap();
        let complex =
            build_window(&spec, (0, 6), &E0Box::centred(1, 1 << 7)).unwrap();
        let comps = flood_pools(&complex);
        let central = central_region(&spec, &report);
        let central_count = comps
            .iter()
            .filter(|comp| {
                comp.iter().any(|&v| {
                    let t = &complex.nodes[v];
                    t.layer == 0 && footprint(&spec, t).unwrap().touches(&central)
                })
            })
            .count();
        assert_eq!(central_count, 2);
    }

    #[test]
    fn standard_flood_check_matches_analysis() {
        let specs = [
            ep_spec(&[(&[], &[1])]),
            ep_spec(&[(&[], &[-1])]),
            ep_spec(&[(&[], &[1, -1])]),
            ep_spec(&[(&[-1, -1], &[1])]),
            ep_spec(&[(&[], &[1, -1]), (&[], &[-1])]),
            ep_spec(&[(&[], &[1]), (&[], &[-1])]),
        ];
        for spec in &specs {
            let check = standard_flood_check(spec).unwrap();
            assert!(
                check.passed(),
                "flood check failed: {} central vs {} expected (ids consistent: {})",
                check.central_components,
                check.expected_pools,
                check.ids_consistent
            );
        }
    }

    #[test]
    fn pool_sizes_grow_linearly_with_window_width() {
        let spec = ep_spec(&[(&[], &[1])]);
        let report = pool_analysis(&spec).unwrap();
        let mut counts: Vec<Vec<usize>> = Vec::new();
        for exp in [4, 5, 6] {
            let complex =
                build_window(&spec, (0, 0), &E0Box::centred(1, 1 << exp)).unwrap();
            let mut per_pool = vec![0usize; report.pool_count as usize];
            for t in &complex.nodes {
                let id = pool_id_with(&spec, &report, t).unwrap();
                let idx = id
                    .iter()
                    .fold(0usize, |acc, s| (acc << 1) | usize::from(*s == Sign::Plus));
                per_pool[idx] += 1;
            }
            counts.push(per_pool);
        }
        for step in 0..2 {
            for (pool, (&a, &b)) in counts[step].iter().zip(&counts[step + 1]).enumerate() {
                assert!(b >= 2 * a - 4, "pool {pool} grew too slowly: {a} -> {b}");
                assert!(b > a);
            }
        }
    }

    #[test]
    fn walls_are_distinct_coordinate_hyperplanes() {
        let specs = [
            ep_spec(&[(&[], &[1]), (&[], &[-1]), (&[], &[1, -1])]),
            ep_spec(&[(&[1, -1], &[-1]), (&[], &[1])]),
        ];
        for spec in &specs {
            let r = pool_analysis(spec).unwrap();
            let mut coords: Vec<usize> = r.walls.iter().map(|w| w.coordinate).collect();
            coords.dedup();
            assert_eq!(coords.len(), r.k, "one wall per bounded coordinate");
            // k orthogonal coordinate hyperplanes intersect in a (d-k)-flat.
            assert_eq!(spec.dim() - coords.len(), r.support_signature.0);
        }
    }

    #[test]
    fn group_action_permutes_walls() {
        let base = [
            ep_spec(&[(&[], &[1]), (&[], &[1, -1]), (&[-1], &[-1])]),
            ep_spec(&[(&[], &[-1]), (&[], &[1])]),
        ];
        let mut rng = StdRng::seed_from_u64(7);
        for spec in &base {
            let d = spec.dim();
            let group = crate::group::hyperoctahedral(d);
            for _ in 0..12 {
                let g = &group[rng.gen_range(0..group.len())];
                let moved = spec.transformed(g);
                let r0 = pool_analysis(spec).unwrap();
                let r1 = pool_analysis(&moved).unwrap();
                assert_eq!(r0.k, r1.k);
                assert_eq!(r0.pool_count, r1.pool_count);
                let mut expected: Vec<(usize, BigInt, BoundedSide, i64)> = Vec::new();
                for i in 0..d {
                    let (src, sign) = g.source_of(i);
                    if let Some(w) = r0.walls.iter().find(|w| w.coordinate == src + 1) {
                        let (pos, side) = match sign {
                            Sign::Plus => (w.position.clone(), w.bounded_side),
                            Sign::Minus => (
                                -w.position.clone(),
                                match w.bounded_side {
                                    BoundedSide::Below => BoundedSide::Above,
                                    BoundedSide::Above => BoundedSide::Below,
                                },
                            ),
                        };
                        expected.push((i + 1, pos, side, w.onset_layer));
                    }
                }
                expected.sort();
                let got: Vec<_> = r1.walls.iter().map(wall_tuple).collect();
                assert_eq!(got, expected);
            }
        }
    }

    #[test]
    fn cofinal_change_preserves_counts_and_descriptor() {
        let specs = [
            ep_spec(&[(&[], &[1])]),
            ep_spec(&[(&[], &[1, 1, -1])]),
            ep_spec(&[(&[-1], &[1, -1]), (&[], &[-1])]),
        ];
        for spec in &specs {
            let dropped = spec.dropped_first().unwrap();
            assert_eq!(
                pool_analysis(spec).unwrap().pool_count,
                pool_analysis(&dropped).unwrap().pool_count
            );
            assert_eq!(
                classify_symmetry(spec, false).unwrap().group,
                classify_symmetry(&dropped, false).unwrap().group
            );
        }
    }

    #[test]
    fn symmetry_examples() {
        let r = classify_symmetry(&ep_spec(&[(&[], &[1])]), false).unwrap();
        assert_eq!(r.group, "Z x B1");
        assert_eq!(r.fundamental_domain.as_deref(), Some("half ring"));

        let r = classify_symmetry(&ep_spec(&[(&[], &[1, -1])]), false).unwrap();
        assert_eq!(r.group, "Z");
        assert_eq!(r.k, 0);
        // The shift by one layer composed with the sign flip preserves the
        // alternating sequence, so one ring is a fundamental domain.
        assert_eq!(r.essential_period.as_ref().unwrap().q, 1);
        assert_eq!(r.fundamental_domain.as_deref(), Some("1 ring"));

        let r = classify_symmetry(&ep_spec(&[(&[], &[1, 1, -1, -1])]), false).unwrap();
        assert_eq!(r.period, Some((0, 4)));
        let ep = r.essential_period.as_ref().unwrap();
        assert_eq!(ep.q, 2);
        assert!(!ep.witness.is_identity());
        assert_eq!(r.fundamental_domain.as_deref(), Some("2 rings"));

        let r = classify_symmetry(&ep_spec(&[(&[], &[1]), (&[], &[-1])]), false).unwrap();
        assert_eq!(r.group, "Z x B2");
        assert_eq!(r.fundamental_domain, None);
    }

    #[test]
    fn aperiodic_assertions() {
        let word = word_spec(1, &[&[1], &[-1], &[-1], &[1]]);
        let r = classify_symmetry(&word, true).unwrap();
        assert_eq!(r.group, "trivial");
        assert_eq!(r.k, 0);
        assert_eq!(r.period, None);
        assert_eq!(r.fundamental_domain.as_deref(), Some("whole space"));

        // d=2, x constant in the word, y mixed.
        let word = word_spec(2, &[&[1, 1], &[1, -1], &[1, -1]]);
        let r = classify_symmetry(&word, true).unwrap();
        assert_eq!(r.group, "B1");
        assert_eq!(r.k, 1);

        // Classification of a finite word demands the assumption.
        assert!(matches!(
            classify_symmetry(&word_spec(1, &[&[1], &[-1]]), false),
            Err(Error::FiniteWordMode)
        ));
        // The assumption contradicts an eventually periodic spec.
        assert!(classify_symmetry(&ep_spec(&[(&[], &[1])]), true).is_err());
        // An all-constant word cannot come from an aperiodic sequence.
        assert!(classify_symmetry(&word_spec(2, &[&[1, -1], &[1, -1]]), true).is_err());
    }

    #[test]
    fn reports_serialize_with_stable_field_names() {
        let spec = ep_spec(&[(&[], &[1])]);
        let pools = serde_json::to_value(pool_analysis(&spec).unwrap()).unwrap();
        assert_eq!(pools["k"], 1);
        assert_eq!(pools["pool_count"], 2);
        assert_eq!(pools["walls"][0]["position"], "-1");
        assert_eq!(pools["walls"][0]["bounded_side"], "below");
        assert_eq!(pools["support_signature"][0], 0);

        let sym = serde_json::to_value(classify_symmetry(&spec, false).unwrap()).unwrap();
        assert_eq!(sym["group"], "Z x B1");
        assert_eq!(sym["period"][1], 1);
        assert_eq!(sym["essential_period"]["witness"], serde_json::json!([1]));
        assert_eq!(sym["fundamental_domain"], "half ring");
    }
}
