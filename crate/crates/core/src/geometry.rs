//! Exact-to-numeric bridge: embedding of tiles into the upper half-space
//! model, the metric facts that pin the construction (layer thickness
//! `ln 2`, facet size ratio 2), and the conformal map to the Poincaré disc
//! for d = 1.
//!
//! Chart: the ideal point sits at infinite height; layer `j` occupies the
//! height band `[2^j, 2^(j+1)]`, so the anchor layer is `[1, 2]`, parents
//! stack above their children (a parent band's lower height is its
//! children's upper height), and footprints of edge `2^(j+1)` give every
//! tile an upper (a) facet of intrinsic horospheric length 1 and a lower
//! (b) band of length 2.

use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::seq::SequenceSpec;
use crate::tiling::{footprint, E0Box, TileAddress};

/// A tile embedded in the upper half-space model: footprint box times a
/// height band, both exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfSpaceRegion {
    pub footprint: E0Box,
    /// Heights `[2^layer, 2^(layer+1)]`.
    pub band: (Dyadic, Dyadic),
    pub layer: i64,
}

impl HalfSpaceRegion {
    /// Intrinsic (horospheric) edge length of the upper facet, exact:
    /// Euclidean edge divided by the height at which it sits.
    pub fn a_size(&self) -> Dyadic {
        self.footprint.edge(0).mul_pow2(-(self.layer + 1))
    }

    /// Intrinsic edge length of the lower band, exact.
    pub fn b_size(&self) -> Dyadic {
        self.footprint.edge(0).mul_pow2(-self.layer)
    }
}

/// Embeds a tile into the chart.
pub fn embed_region(spec: &SequenceSpec, t: &TileAddress) -> Result<HalfSpaceRegion> {
    Ok(HalfSpaceRegion {
        footprint: footprint(spec, t)?,
        band: (Dyadic::pow2(t.layer), Dyadic::pow2(t.layer + 1)),
        layer: t.layer,
    })
}

/// Numeric metric summary of one embedded tile.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MetricReport {
    /// Hyperbolic distance across the tile's band along a vertical
    /// geodesic: `∫ dy/y = ln 2`.
    pub layer_distance: f64,
    /// Intrinsic a-facet edge length.
    pub a_size: f64,
    /// Intrinsic b-band edge length.
    pub b_size: f64,
}

/// Evaluates the metric facts for one tile.
pub fn metric_report(spec: &SequenceSpec, t: &TileAddress) -> Result<MetricReport> {
    let region = embed_region(spec, t)?;
    let ratio = region.band.1.ratio_f64(&region.band.0);
    Ok(MetricReport {
        layer_distance: ratio.ln(),
        a_size: region.a_size().to_f64(),
        b_size: region.b_size().to_f64(),
    })
}

/// Hyperbolic distance between the horospheres bounding layers `j1` and
/// `j2` (measured along a vertical geodesic): `|j1 - j2| · ln 2`.
pub fn layer_distance(j1: i64, j2: i64) -> f64 {
    (j1 - j2).unsigned_abs() as f64 * std::f64::consts::LN_2
}

/// A point of the plane as a complex number, used only at the numeric
/// presentation boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub fn new(re: f64, im: f64) -> Complex {
        Complex { re, im }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    fn add(self, o: Complex) -> Complex {
        Complex::new(self.re + o.re, self.im + o.im)
    }

    fn sub(self, o: Complex) -> Complex {
        Complex::new(self.re - o.re, self.im - o.im)
    }

    fn mul(self, o: Complex) -> Complex {
        Complex::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }

    fn div(self, o: Complex) -> Complex {
        let n = o.re * o.re + o.im * o.im;
        Complex::new(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )
    }
}

/// Conformal map from the upper half-plane to the unit disc,
/// `w = (z - i) / (z + i)`: the base point `i` (the anchor tile's center
/// height over x = 0) goes to the disc center, the boundary line to the
/// unit circle, and the ideal point at infinite height to the boundary
/// point `+1`. Vertical lines become arcs through `+1`; horizontal
/// horocycles become circles tangent to the unit circle at `+1`.
pub fn to_disc(x: f64, y: f64) -> (f64, f64) {
    let z = Complex::new(x, y);
    let i = Complex::new(0.0, 1.0);
    let w = z.sub(i).div(z.add(i));
    (w.re, w.im)
}

/// Complex cross-ratio `(z1, z3; z2, z4)`, the Möbius invariant.
pub fn cross_ratio(z1: Complex, z2: Complex, z3: Complex, z4: Complex) -> Complex {
    z1.sub(z2).mul(z3.sub(z4)).div(z1.sub(z4).mul(z3.sub(z2)))
}
