//! Coronae, canonical corona codes, the class census, stabilizers, a
//! Burnside counting oracle, and the local crystallographicity check.
//!
//! The k-corona of a tile is the complex of all tiles within `k`
//! facet-adjacency steps. Up to isometry a corona is determined by the first
//! `k` letters of the center's tail, read modulo one global signed
//! coordinate permutation; the canonical code is the lexicographically least
//! word in that orbit. Counting distinct codes over a wide enough window
//! yields the class count `N_k` exactly.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{hyperoctahedral, SignedPermutation, Subgroup};
use crate::seq::{SequenceSpec, Symbol};
use crate::tiling::{
    children, footprint, parent, side_neighbor, tail_word, E0Box, TileAddress, TileComplex,
};

/// The k-corona of a tile: the center, the radius, and the member complex.
#[derive(Debug, Clone)]
pub struct Corona {
    pub center: TileAddress,
    pub radius: usize,
    pub complex: TileComplex,
}

/// Breadth-first closure of facet adjacency (parent, children, and side
/// neighbors) to depth `k`, wired into a complex.
pub fn corona_complex(spec: &SequenceSpec, t: &TileAddress, k: usize) -> Result<Corona> {
    let mut members = BTreeSet::new();
    members.insert(t.clone());
    let mut frontier = VecDeque::from([(t.clone(), 0usize)]);
    while let Some((u, dist)) = frontier.pop_front() {
        if dist == k {
            continue;
        }
        let mut neighbors = Vec::with_capacity((1 << u.dim()) + 2 * u.dim() + 1);
        neighbors.push(parent(spec, &u)?.0);
        for (_, c) in children(spec, &u)? {
            neighbors.push(c);
        }
        for i in 0..u.dim() {
            neighbors.push(side_neighbor(&u, i, false));
            neighbors.push(side_neighbor(&u, i, true));
        }
        for n in neighbors {
            if members.insert(n.clone()) {
                frontier.push_back((n, dist + 1));
            }
        }
    }
    let nodes: Vec<TileAddress> = members.into_iter().collect();
    let mut low = footprint(spec, &nodes[0])?.low;
    let mut high = footprint(spec, &nodes[0])?.high;
    for n in &nodes {
        let fp = footprint(spec, n)?;
        for i in 0..spec.dim() {
            if fp.low[i] < low[i] {
                low[i] = fp.low[i].clone();
            }
            if fp.high[i] > high[i] {
                high[i] = fp.high[i].clone();
            }
        }
    }
    let layers = (t.layer - k as i64, t.layer + k as i64);
    let complex = TileComplex::from_nodes(spec, layers, E0Box { low, high }, nodes)?;
    Ok(Corona { center: t.clone(), radius: k, complex })
}

/// Canonical corona code: the tail k-prefix of the center, reduced to the
/// lexicographically least word in its orbit under the diagonal action of
/// the signed coordinate permutations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoronaCode {
    pub word: Vec<Symbol>,
}

impl fmt::Display for CoronaCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "()");
        }
        for sym in &self.word {
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

fn canonical_word(word: &[Symbol], group: &[SignedPermutation]) -> Vec<Symbol> {
    group
        .iter()
        .map(|g| g.apply_word(word))
        .min()
        .expect("the group is never empty")
}

/// Code of the k-corona of `t`.
pub fn corona_code(spec: &SequenceSpec, t: &TileAddress, k: usize) -> Result<CoronaCode> {
    let prefix = tail_word(spec, t, k)?.word;
    let group = hyperoctahedral(spec.dim());
    Ok(CoronaCode { word: canonical_word(&prefix, &group) })
}

/// All signed coordinate permutations fixing the code word letterwise.
pub fn stabilizer(dim: usize, code: &CoronaCode) -> Subgroup {
    let elements: Vec<SignedPermutation> = hyperoctahedral(dim)
        .into_iter()
        .filter(|g| g.apply_word(&code.word) == code.word)
        .collect();
    Subgroup::from_elements(elements)
}

/// Census window: the cells `m` with `-half_width <= m_i < half_width` at
/// one layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusWindow {
    pub layer: i64,
    pub half_width: i64,
}

/// One congruence class observed in a census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    pub code: CoronaCode,
    pub witness: TileAddress,
    pub multiplicity: u64,
    pub stabilizer_order: u64,
}

/// Census of corona classes over a window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub spec: SequenceSpec,
    pub k: usize,
    pub window: CensusWindow,
    #[serde(rename = "N_k")]
    pub n_k: u64,
    pub classes: Vec<CensusClass>,
}

/// Codes every tile of the window at the census layer and groups the codes.
/// Refuses windows without at least `2^(d k)` consecutive cells per
/// coordinate (below that, a census could under-report `N_k`).
pub fn census(spec: &SequenceSpec, k: usize, window: CensusWindow) -> Result<CensusReport> {
    let d = spec.dim();
    assert!(window.half_width > 0, "window half-width must be positive");
    let dk = (d as u32).checked_mul(k as u32).expect("k out of range");
    assert!(dk < 63, "census coding depth out of range");
    let cells = 2u64 * window.half_width as u64;
    let needed = 1u64 << dk;
    if cells < needed {
        return Err(Error::WindowTooSmall { cells, needed });
    }

    let group = hyperoctahedral(d);
    let mut classes: BTreeMap<CoronaCode, (TileAddress, u64)> = BTreeMap::new();
    let mut cell = vec![-window.half_width; d];
    'odometer: loop {
        let t = TileAddress::new(window.layer, cell.clone());
        let prefix = tail_word(spec, &t, k)?.word;
        let code = CoronaCode { word: canonical_word(&prefix, &group) };
        classes
            .entry(code)
            .and_modify(|(_, mult)| *mult += 1)
            .or_insert((t, 1));
        for i in 0..d {
            if cell[i] < window.half_width - 1 {
                cell[i] += 1;
                for (v, _) in cell.iter_mut().zip(0..i) {
                    *v = -window.half_width;
                }
                continue 'odometer;
            }
        }
        break;
    }

    let classes: Vec<CensusClass> = classes
        .into_iter()
        .map(|(code, (witness, multiplicity))| {
            let stabilizer_order = stabilizer(d, &code).order() as u64;
            CensusClass { code, witness, multiplicity, stabilizer_order }
        })
        .collect();
    Ok(CensusReport {
        spec: spec.clone(),
        k,
        window,
        n_k: classes.len() as u64,
        classes,
    })
}

/// Predicted class count: the number of orbits of length-`k` words over the
/// alphabet `{-1, +1}^d` under the diagonal action, by Burnside's lemma. A
/// signed permutation fixes `2^c` letters where `c` is the number of its
/// permutation cycles with positive sign product (and none if any cycle has
/// negative product).
pub fn burnside_orbits(d: usize, k: usize) -> u128 {
    assert!(d <= 4 && k <= 6, "oracle range");
    let group = hyperoctahedral(d);
    let mut total: u128 = 0;
    for g in &group {
        let mut fixed: u128 = 1;
        let mut seen = vec![false; d];
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut sign_product = 1i8;
            let mut i = start;
            loop {
                seen[i] = true;
                let (src, s) = g.source_of(i);
                sign_product *= s.as_i8();
                i = src;
                if i == start {
                    break;
                }
            }
            fixed *= if sign_product == 1 { 2 } else { 0 };
        }
        total += fixed.pow(k as u32);
    }
    total / group.len() as u128
}

/// Local-theorem verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalTheoremVerdict {
    /// Least `k` at which the class count stays put and every class keeps
    /// its stabilizer.
    Crystallographic { k: usize },
    /// First violated condition: 1 (count grows) or 2 (a stabilizer
    /// shrinks), and the `k` where it happens.
    NonCrystallographic { condition: u8, k: usize },
}

impl fmt::Display for LocalTheoremVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalTheoremVerdict::Crystallographic { k } => {
                write!(f, "crystallographic (stabilizes at k={k})")
            }
            LocalTheoremVerdict::NonCrystallographic { condition, k } => {
                write!(f, "non-crystallographic (condition {condition} violated at k={k})")
            }
        }
    }
}

impl Serialize for LocalTheoremVerdict {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            LocalTheoremVerdict::Crystallographic { k } => {
                let mut s = serializer.serialize_struct("LocalTheoremVerdict", 2)?;
                s.serialize_field("verdict", "crystallographic")?;
                s.serialize_field("k", k)?;
                s.end()
            }
            LocalTheoremVerdict::NonCrystallographic { condition, k } => {
                let mut s = serializer.serialize_struct("LocalTheoremVerdict", 3)?;
                s.serialize_field("verdict", "non-crystallographic")?;
                s.serialize_field("condition", condition)?;
                s.serialize_field("k", k)?;
                s.end()
            }
        }
    }
}

/// Applies the local criterion to a run of censuses for `k = 0..=K`:
/// the tiling is crystallographic iff for some `k` the class count is
/// unchanged at `k+1` **and** each `(k+1)`-class has the same stabilizer as
/// the `k`-class it refines. A longer word's stabilizer is always a
/// subgroup of its prefix's, so equality of orders decides equality of the
/// groups.
pub fn local_theorem_check(reports: &[CensusReport]) -> Result<LocalTheoremVerdict> {
    if reports.len() < 2 {
        return Err(Error::InsufficientData(
            "need censuses for at least k = 0 and k = 1".into(),
        ));
    }
    if reports[0].k != 0 {
        return Err(Error::InsufficientData("censuses must start at k = 0".into()));
    }
    for pair in reports.windows(2) {
        if pair[1].k != pair[0].k + 1 {
            return Err(Error::InsufficientData(format!(
                "censuses must cover consecutive k; found {} after {}",
                pair[1].k, pair[0].k
            )));
        }
        if pair[1].spec != pair[0].spec {
            return Err(Error::InsufficientData(
                "censuses describe different specs".into(),
            ));
        }
    }
    let d = reports[0].spec.dim();
    let group = hyperoctahedral(d);
    let mut first_violation: Option<(u8, usize)> = None;
    for pair in reports.windows(2) {
        let (rk, rk1) = (&pair[0], &pair[1]);
        let k = rk.k;
        if rk1.n_k != rk.n_k {
            if first_violation.is_none() {
                first_violation = Some((1, k));
            }
            continue;
        }
        let mut stable = true;
        for class in &rk1.classes {
            let prefix = CoronaCode {
                word: canonical_word(&class.code.word[..k], &group),
            };
            let base = rk.classes.iter().find(|c| c.code == prefix).ok_or_else(|| {
                Error::InsufficientData(format!(
                    "census at k={k} is missing the class refined by {} at k={}",
                    class.code,
                    k + 1
                ))
            })?;
            if base.stabilizer_order != class.stabilizer_order {
                stable = false;
            }
        }
        if stable {
            return Ok(LocalTheoremVerdict::Crystallographic { k });
        }
        if first_violation.is_none() {
            first_violation = Some((2, k));
        }
    }
    let (condition, k) = first_violation.expect("every scanned level holds or violates");
    Ok(LocalTheoremVerdict::NonCrystallographic { condition, k })
}
