//! The symbolic tiling engine.
//!
//! Tiles are addressed relative to a distinguished tile (the anchor) and its
//! tail: `layer` counts parent steps along the tail (increasing layer means
//! coarser tiles, negative layers are refinements below the anchor), `cell`
//! indexes the tile inside its layer's grid on the reference horosphere
//! projection. All geometry derived from addresses is exact.
//!
//! The grid of layer `j` has step `2^(j+1)` per coordinate. For `j >= 0` its
//! origin corner `a^(j)` follows the recurrence driven by the spec letters
//! (`sigma = +1` keeps the low corner and doubles upward, `sigma = -1`
//! mirrors that); layers `j < 0` keep the anchor corner `a^(0)` and halve
//! the step, so every grid refines the one above it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::seq::{SequenceSpec, Sign, Symbol};

/// Address of a tile: layer plus cell index vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TileAddress {
    pub layer: i64,
    pub cell: Vec<i64>,
}

impl TileAddress {
    pub fn new(layer: i64, cell: Vec<i64>) -> TileAddress {
        TileAddress { layer, cell }
    }

    pub fn anchor(dim: usize, layer: i64) -> TileAddress {
        TileAddress { layer, cell: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.cell.len()
    }
}

impl fmt::Display for TileAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.layer)?;
        for (i, m) in self.cell.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for TileAddress {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut flat = Vec::with_capacity(1 + self.cell.len());
        flat.push(self.layer);
        flat.extend_from_slice(&self.cell);
        flat.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TileAddress {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let flat = Vec::<i64>::deserialize(deserializer)?;
        if flat.len() < 2 {
            return Err(D::Error::custom("tile address needs a layer and at least one cell index"));
        }
        Ok(TileAddress { layer: flat[0], cell: flat[1..].to_vec() })
    }
}

/// Anchor cell of a layer: the footprint of the tail tile at that layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorCell {
    pub layer: i64,
    pub low: Vec<Dyadic>,
    pub high: Vec<Dyadic>,
}

/// Axis-aligned box on the reference horosphere projection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct E0Box {
    pub low: Vec<Dyadic>,
    pub high: Vec<Dyadic>,
}

impl E0Box {
    pub fn dim(&self) -> usize {
        self.low.len()
    }

    pub fn from_ints(low: &[i64], high: &[i64]) -> E0Box {
        E0Box {
            low: low.iter().map(|&v| Dyadic::from_int(v)).collect(),
            high: high.iter().map(|&v| Dyadic::from_int(v)).collect(),
        }
    }

    /// Symmetric box `[-h, h]^d`.
    pub fn centred(dim: usize, h: i64) -> E0Box {
        E0Box::from_ints(&vec![-h; dim], &vec![h; dim])
    }

    pub fn edge(&self, i: usize) -> Dyadic {
        &self.high[i] - &self.low[i]
    }

    /// True when the closed boxes intersect.
    pub fn touches(&self, other: &E0Box) -> bool {
        (0..self.dim()).all(|i| self.low[i] <= other.high[i] && other.low[i] <= self.high[i])
    }

    /// True when the open boxes intersect.
    pub fn overlaps_interior(&self, other: &E0Box) -> bool {
        (0..self.dim()).all(|i| self.low[i] < other.high[i] && other.low[i] < self.high[i])
    }

    pub fn contains(&self, other: &E0Box) -> bool {
        (0..self.dim()).all(|i| self.low[i] <= other.low[i] && other.high[i] <= self.high[i])
    }
}

/// Facet of a tile: `A` is the single facet shared with the parent, `B(h)`
/// the facet shared with the child occupying halves `h`, `C(i, +-)` the side
/// facets. A tile has `2^d + 2d + 1` of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FacetLabel {
    A,
    B(Vec<bool>),
    C { coordinate: usize, positive: bool },
}

impl FacetLabel {
    pub fn all(dim: usize) -> Vec<FacetLabel> {
        let mut out = vec![FacetLabel::A];
        for mask in 0..(1u64 << dim) {
            out.push(FacetLabel::B((0..dim).map(|i| mask & (1 << i) != 0).collect()));
        }
        for i in 0..dim {
            for positive in [false, true] {
                out.push(FacetLabel::C { coordinate: i, positive });
            }
        }
        out
    }
}

impl fmt::Display for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacetLabel::A => write!(f, "a"),
            FacetLabel::B(h) => {
                write!(f, "b")?;
                for &bit in h {
                    write!(f, "{}", if bit { 1 } else { 0 })?;
                }
                Ok(())
            }
            FacetLabel::C { coordinate, positive } => {
                write!(f, "c{}{}", coordinate + 1, if *positive { "+" } else { "-" })
            }
        }
    }
}

/// Offsets `delta-bar` for the parent step leaving `layer`: bit `i` is 1 when
/// the spec letter is `-1` there. Steps out of layers below the anchor keep
/// the shared grid corner, so their offset is 0.
fn step_offsets(spec: &SequenceSpec, layer: i64) -> Result<Vec<i64>> {
    if layer < 0 {
        return Ok(vec![0; spec.dim()]);
    }
    let sym = spec.letter(layer as usize + 1)?;
    Ok(sym.signs.iter().map(|s| if *s == Sign::Minus { 1 } else { 0 }).collect())
}

/// The tail tile's cell at `layer`, exact.
pub fn anchor_cell(spec: &SequenceSpec, layer: i64) -> Result<AnchorCell> {
    let d = spec.dim();
    if layer < 0 {
        let low = vec![Dyadic::from_int(-1); d];
        let high: Vec<Dyadic> = low.iter().map(|a| a + &Dyadic::pow2(layer + 1)).collect();
        return Ok(AnchorCell { layer, low, high });
    }
    let mut low = vec![BigInt::from(-1); d];
    let mut high = vec![BigInt::from(1); d];
    for t in 1..=layer {
        let sym = spec.letter(t as usize)?;
        let edge = BigInt::from(1) << t as u64;
        for i in 0..d {
            match sym.get(i) {
                Sign::Plus => high[i] += &edge,
                Sign::Minus => low[i] -= &edge,
            }
        }
    }
    Ok(AnchorCell {
        layer,
        low: low.into_iter().map(Dyadic::from_bigint).collect(),
        high: high.into_iter().map(Dyadic::from_bigint).collect(),
    })
}

/// Exact footprint of a tile on the reference horosphere projection.
pub fn footprint(spec: &SequenceSpec, t: &TileAddress) -> Result<E0Box> {
    assert_eq!(t.dim(), spec.dim());
    let anchor = anchor_cell(spec, t.layer)?;
    let step = Dyadic::pow2(t.layer + 1);
    let low: Vec<Dyadic> =
        (0..t.dim()).map(|i| &anchor.low[i] + &step.mul_int(t.cell[i])).collect();
    let high: Vec<Dyadic> = low.iter().map(|lo| lo + &step).collect();
    Ok(E0Box { low, high })
}

/// Parent of a tile: the address one layer up the tail direction, the step
/// letter (which of the parent's child facets the tile occupies, as a sign
/// vector), and the same information as half-selector bits.
pub fn parent(spec: &SequenceSpec, t: &TileAddress) -> Result<(TileAddress, Symbol, Vec<bool>)> {
    assert_eq!(t.dim(), spec.dim());
    let offsets = step_offsets(spec, t.layer)?;
    let mut cell = Vec::with_capacity(t.dim());
    let mut halves = Vec::with_capacity(t.dim());
    for (m, offset) in t.cell.iter().zip(&offsets) {
        let shifted = m + offset;
        cell.push(shifted.div_euclid(2));
        halves.push(shifted.rem_euclid(2) == 1);
    }
    let symbol = Symbol::new(halves.iter().map(|&h| Sign::from_half(h)).collect());
    Ok((TileAddress::new(t.layer + 1, cell), symbol, halves))
}

/// Child of a tile in the given halves; inverse of `parent`.
pub fn child(spec: &SequenceSpec, t: &TileAddress, halves: &[bool]) -> Result<TileAddress> {
    assert_eq!(t.dim(), spec.dim());
    assert_eq!(halves.len(), t.dim());
    let offsets = step_offsets(spec, t.layer - 1)?;
    let cell = (0..t.dim())
        .map(|i| 2 * t.cell[i] + (halves[i] as i64) - offsets[i])
        .collect();
    Ok(TileAddress::new(t.layer - 1, cell))
}

/// All `2^d` children, ordered by half-selector bits.
pub fn children(spec: &SequenceSpec, t: &TileAddress) -> Result<Vec<(Vec<bool>, TileAddress)>> {
    let d = t.dim();
    let mut out = Vec::with_capacity(1 << d);
    for mask in 0..(1u64 << d) {
        let halves: Vec<bool> = (0..d).map(|i| mask & (1 << i) != 0).collect();
        let c = child(spec, t, &halves)?;
        out.push((halves, c));
    }
    Ok(out)
}

/// Same-layer neighbour across the side facet `C(i, +-)`.
pub fn side_neighbor(t: &TileAddress, i: usize, positive: bool) -> TileAddress {
    let mut cell = t.cell.clone();
    cell[i] += if positive { 1 } else { -1 };
    TileAddress::new(t.layer, cell)
}

/// A tail prefix: the path of addresses and the per-step letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailWord {
    pub path: Vec<TileAddress>,
    pub word: Vec<Symbol>,
}

/// Walks `k` parent steps from `t`; `word[j]` is the letter of step `j+1`.
/// For the anchor tile this is the first `k` letters of the spec.
pub fn tail_word(spec: &SequenceSpec, t: &TileAddress, k: usize) -> Result<TailWord> {
    let mut path = Vec::with_capacity(k + 1);
    let mut word = Vec::with_capacity(k);
    path.push(t.clone());
    let mut cur = t.clone();
    for _ in 0..k {
        let (p, sym, _) = parent(spec, &cur)?;
        word.push(sym);
        path.push(p.clone());
        cur = p;
    }
    Ok(TailWord { path, word })
}

/// An edge of a tile complex: node `a`'s facet `a_facet` coincides with node
/// `b`'s facet `b_facet`. Indices satisfy `a < b` in node order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub a_facet: FacetLabel,
    pub b_facet: FacetLabel,
}

impl Edge {
    /// Horospheric edges (parent/child contacts) as opposed to side contacts.
    pub fn is_horospheric(&self) -> bool {
        matches!(self.a_facet, FacetLabel::A | FacetLabel::B(_))
    }
}

/// A finite piece of the tiling: the tiles of a layer range whose footprints
/// meet the interior of a window box, with all facet contacts among them.
/// Nodes are sorted by `(layer, cell)`; edges by `(a, b, facet)`.
#[derive(Debug, Clone)]
pub struct TileComplex {
    pub dim: usize,
    pub layer_range: (i64, i64),
    pub window: E0Box,
    pub nodes: Vec<TileAddress>,
    pub edges: Vec<Edge>,
    index: BTreeMap<TileAddress, usize>,
}

impl TileComplex {
    /// Builds a complex from a sorted, deduplicated node list by wiring up
    /// all facet contacts present in the set.
    pub fn from_nodes(
        spec: &SequenceSpec,
        layer_range: (i64, i64),
        window: E0Box,
        nodes: Vec<TileAddress>,
    ) -> Result<TileComplex> {
        let index: BTreeMap<TileAddress, usize> =
            nodes.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        assert_eq!(index.len(), nodes.len(), "node list must be deduplicated");
        let mut edges = Vec::new();
        for (ti, t) in nodes.iter().enumerate() {
            if t.layer < layer_range.1 {
                let (p, _, halves) = parent(spec, t)?;
                if let Some(&pi) = index.get(&p) {
                    edges.push(Edge {
                        a: ti,
                        b: pi,
                        a_facet: FacetLabel::A,
                        b_facet: FacetLabel::B(halves),
                    });
                }
            }
            for i in 0..t.dim() {
                let n = side_neighbor(t, i, true);
                if let Some(&ni) = index.get(&n) {
                    edges.push(Edge {
                        a: ti,
                        b: ni,
                        a_facet: FacetLabel::C { coordinate: i, positive: true },
                        b_facet: FacetLabel::C { coordinate: i, positive: false },
                    });
                }
            }
        }
        edges.sort_by(|x, y| (x.a, x.b, &x.a_facet).cmp(&(y.a, y.b, &y.a_facet)));
        Ok(TileComplex { dim: spec.dim(), layer_range, window, nodes, edges, index })
    }

    pub fn node_index(&self, t: &TileAddress) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Adjacency lists over all edges (or horospheric edges only).
    pub fn adjacency(&self, horospheric_only: bool) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            if horospheric_only && !e.is_horospheric() {
                continue;
            }
            adj[e.a].push(e.b);
            adj[e.b].push(e.a);
        }
        adj
    }

    pub fn to_doc(&self) -> TileComplexDoc {
        TileComplexDoc {
            dim: self.dim,
            layers: [self.layer_range.0, self.layer_range.1],
            window: WindowDoc {
                low: self.window.low.iter().map(|v| v.to_string()).collect(),
                high: self.window.high.iter().map(|v| v.to_string()).collect(),
            },
            nodes: self
                .nodes
                .iter()
                .map(|t| {
                    let mut flat = Vec::with_capacity(1 + t.cell.len());
                    flat.push(t.layer);
                    flat.extend_from_slice(&t.cell);
                    flat
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    a: e.a,
                    b: e.b,
                    a_facet: e.a_facet.to_string(),
                    b_facet: e.b_facet.to_string(),
                })
                .collect(),
        }
    }
}

/// Serializable form of a tile complex.
#[derive(Debug, Clone, Serialize)]
pub struct TileComplexDoc {
    pub dim: usize,
    pub layers: [i64; 2],
    pub window: WindowDoc,
    pub nodes: Vec<Vec<i64>>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowDoc {
    pub low: Vec<String>,
    pub high: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeDoc {
    pub a: usize,
    pub b: usize,
    pub a_facet: String,
    pub b_facet: String,
}

fn cell_range(anchor_low: &Dyadic, step_exp: i64, lo: &Dyadic, hi: &Dyadic) -> (i64, i64) {
    // Cells are [a + m*s, a + (m+1)*s) with s = 2^step_exp; we want all m
    // whose closed cell meets the open interval (lo, hi).
    let q = (lo - anchor_low).mul_pow2(-step_exp);
    let m_min = if q.is_integer() { q.to_bigint().unwrap() } else { q.floor() };
    let p = (hi - anchor_low).mul_pow2(-step_exp);
    let m_max = if p.is_integer() { p.to_bigint().unwrap() - 1 } else { p.floor() };
    let lo = m_min.to_i64().expect("window cell index out of i64 range");
    let hi = m_max.to_i64().expect("window cell index out of i64 range");
    (lo, hi)
}

/// Builds the tile complex of all tiles in `layers` whose footprint meets
/// the interior of `window`.
pub fn build_window(
    spec: &SequenceSpec,
    layers: (i64, i64),
    window: &E0Box,
) -> Result<TileComplex> {
    assert_eq!(window.dim(), spec.dim());
    assert!(layers.0 <= layers.1, "layer range must be nonempty");
    for i in 0..window.dim() {
        if window.low[i] >= window.high[i] {
            return Err(Error::EmptyWindow { coordinate: i + 1 });
        }
    }
    let d = spec.dim();
    let mut nodes = Vec::new();
    for layer in layers.0..=layers.1 {
        let anchor = anchor_cell(spec, layer)?;
        let ranges: Vec<(i64, i64)> = (0..d)
            .map(|i| cell_range(&anchor.low[i], layer + 1, &window.low[i], &window.high[i]))
            .collect();
        let mut cell: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        'odometer: loop {
            nodes.push(TileAddress::new(layer, cell.clone()));
            for i in 0..d {
                if cell[i] < ranges[i].1 {
                    cell[i] += 1;
                    for (v, r) in cell.iter_mut().zip(ranges.iter()).take(i) {
                        *v = r.0;
                    }
                    continue 'odometer;
                }
            }
            break;
        }
    }
    nodes.sort();
    TileComplex::from_nodes(spec, layers, window.clone(), nodes)
}
