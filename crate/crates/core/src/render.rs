//! SVG rendering of tile windows.
//!
//! For d = 1 the window is drawn in the upper half-plane chart (straight
//! segments) or in the Poincaré disc (circular arcs). Each tile is one
//! closed four-segment path — upper a-edge, right c-edge, lower b-edge,
//! left c-edge — plus a tick marking the subdivision point of the b-edge.
//! For d = 2 only the E0-projection footprint diagram is available. Output
//! is deterministic byte-for-byte for fixed inputs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::to_disc;
use crate::pools::{pool_analysis, pool_id_with};
use crate::seq::{SequenceSpec, Sign};
use crate::tiling::{footprint, tail_word, TileAddress, TileComplex};

/// Target model of a rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderModel {
    HalfPlane,
    Disc,
    /// Top view of the footprints (the only d = 2 rendering).
    Footprint,
}

impl RenderModel {
    pub fn parse(name: &str) -> Option<RenderModel> {
        match name {
            "half-plane" => Some(RenderModel::HalfPlane),
            "disc" => Some(RenderModel::Disc),
            "footprint" => Some(RenderModel::Footprint),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            RenderModel::HalfPlane => "half-plane",
            RenderModel::Disc => "disc",
            RenderModel::Footprint => "footprint",
        }
    }
}

/// Flat key-value style table. Recognized keys (all optional):
/// `scale` (pixels per model unit), `stroke-width`, `stroke` (color),
/// `background` (color), `pool-fill` (`on` to color tiles by pool),
/// `palette` (comma-separated fill colors), `highlight-tail` and
/// `highlight-tower` (`layer:cell[,cell...]` tile address).
pub type RenderStyle = BTreeMap<String, String>;

struct StyleView {
    scale: f64,
    stroke_width: f64,
    stroke: String,
    background: Option<String>,
    pool_fill: bool,
    palette: Vec<String>,
    highlight_tail: Option<TileAddress>,
    highlight_tower: Option<TileAddress>,
}

fn parse_address(text: &str) -> Result<TileAddress> {
    let (layer, cells) = text
        .split_once(':')
        .ok_or_else(|| Error::ParseError(format!("tile address must be layer:cells, got {text:?}")))?;
    let layer: i64 = layer
        .trim()
        .parse()
        .map_err(|_| Error::ParseError(format!("bad layer in tile address {text:?}")))?;
    let cell: Vec<i64> = cells
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map_err(|_| Error::ParseError(format!("bad cell index in tile address {text:?}")))
        })
        .collect::<Result<_>>()?;
    if cell.is_empty() {
        return Err(Error::ParseError(format!("tile address {text:?} has no cell indices")));
    }
    Ok(TileAddress { layer, cell })
}

impl StyleView {
    fn from_table(style: &RenderStyle) -> Result<StyleView> {
        let get_f64 = |key: &str, default: f64| -> Result<f64> {
            match style.get(key) {
                None => Ok(default),
                Some(v) => v
                    .parse::<f64>()
                    .map_err(|_| Error::ParseError(format!("style {key} must be a number, got {v:?}"))),
            }
        };
        let palette = style
            .get("palette")
            .map(|p| p.split(',').map(|c| c.trim().to_string()).collect())
            .unwrap_or_else(|| {
                vec![
                    "#bfd7ea".to_string(),
                    "#f2c6a0".to_string(),
                    "#c9e4c5".to_string(),
                    "#e8c1c5".to_string(),
                ]
            });
        Ok(StyleView {
            scale: get_f64("scale", 48.0)?,
            stroke_width: get_f64("stroke-width", 1.0)?,
            stroke: style.get("stroke").cloned().unwrap_or_else(|| "#333333".to_string()),
            background: style.get("background").cloned(),
            pool_fill: style.get("pool-fill").map(|v| v == "on").unwrap_or(false),
            palette,
            highlight_tail: style.get("highlight-tail").map(|t| parse_address(t)).transpose()?,
            highlight_tower: style.get("highlight-tower").map(|t| parse_address(t)).transpose()?,
        })
    }
}

fn fmt_coord(v: f64) -> String {
    // Fixed-point output keeps the byte stream deterministic.
    format!("{v:.6}")
}

/// Renders a d = 1 window in the half-plane or disc model, or a d <= 2
/// window as a footprint diagram.
pub fn render_svg(
    spec: &SequenceSpec,
    window: &TileComplex,
    model: RenderModel,
    style: &RenderStyle,
) -> Result<String> {
    match model {
        RenderModel::HalfPlane | RenderModel::Disc => {
            if spec.dim() != 1 {
                return Err(Error::UnsupportedDimension {
                    model: model.name().to_string(),
                    dim: spec.dim(),
                });
            }
            render_plane(spec, window, model, style)
        }
        RenderModel::Footprint => {
            if spec.dim() > 2 {
                return Err(Error::UnsupportedDimension {
                    model: model.name().to_string(),
                    dim: spec.dim(),
                });
            }
            render_footprint(spec, window, style)
        }
    }
}

/// Which decoration a tile receives.
struct Decoration {
    fill: Option<String>,
    class: Option<&'static str>,
}

fn decorations(
    spec: &SequenceSpec,
    window: &TileComplex,
    sv: &StyleView,
) -> Result<Vec<Decoration>> {
    let mut decos: Vec<Decoration> =
        (0..window.len()).map(|_| Decoration { fill: None, class: None }).collect();
    if sv.pool_fill {
        let report = pool_analysis(spec)?;
        for (i, t) in window.nodes.iter().enumerate() {
            let id = pool_id_with(spec, &report, t)?;
            let idx = id
                .iter()
                .fold(0usize, |acc, s| (acc << 1) | usize::from(*s == Sign::Plus));
            decos[i].fill = Some(sv.palette[idx % sv.palette.len()].clone());
        }
    }
    if let Some(t) = &sv.highlight_tail {
        // All window tiles on the tail of t (t itself and its ancestors).
        let span = (window.layer_range.1 - t.layer).max(0) as usize;
        let tw = tail_word(spec, t, span)?;
        for u in &tw.path {
            if let Some(i) = window.node_index(u) {
                decos[i].class = Some("tail");
            }
        }
    }
    if let Some(t) = &sv.highlight_tower {
        // All window tiles in the tower of t (t itself and its descendants):
        // exactly those whose tail passes through t.
        for (i, u) in window.nodes.iter().enumerate() {
            if u.layer > t.layer {
                continue;
            }
            let steps = (t.layer - u.layer) as usize;
            let tw = tail_word(spec, u, steps)?;
            if tw.path.last() == Some(t) {
                decos[i].class = Some("tower");
            }
        }
    }
    Ok(decos)
}

fn svg_header(
    out: &mut String,
    width: f64,
    height: f64,
    sv: &StyleView,
) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" width=\"{}\" height=\"{}\">",
        fmt_coord(width),
        fmt_coord(height),
        fmt_coord(width),
        fmt_coord(height)
    );
    let _ = writeln!(
        out,
        "<style>path,line{{stroke:{};stroke-width:{};fill:none;stroke-linejoin:round;stroke-linecap:round}}path.tail{{stroke:#c0392b;stroke-width:{}}}path.tower{{stroke:#8e44ad;stroke-width:{}}}</style>",
        sv.stroke,
        fmt_coord(sv.stroke_width),
        fmt_coord(sv.stroke_width * 2.2),
        fmt_coord(sv.stroke_width * 2.2)
    );
    if let Some(bg) = &sv.background {
        let _ = writeln!(
            out,
            "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"none\"/>",
            fmt_coord(width),
            fmt_coord(height),
            bg
        );
    }
}

fn path_attrs(deco: &Decoration) -> String {
    let mut attrs = String::new();
    if let Some(class) = deco.class {
        let _ = write!(attrs, " class=\"{class}\"");
    }
    if let Some(fill) = &deco.fill {
        let _ = write!(attrs, " style=\"fill:{fill}\"");
    }
    attrs
}

fn render_plane(
    spec: &SequenceSpec,
    window: &TileComplex,
    model: RenderModel,
    style: &RenderStyle,
) -> Result<String> {
    let sv = StyleView::from_table(style)?;
    let decos = decorations(spec, window, &sv)?;

    // Model-space extents of the tiles (half-plane coordinates).
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    let mut rects = Vec::with_capacity(window.len());
    for t in &window.nodes {
        let fp = footprint(spec, t)?;
        let lo = fp.low[0].to_f64();
        let hi = fp.high[0].to_f64();
        let bot = 2f64.powi(t.layer as i32);
        let top = 2f64.powi(t.layer as i32 + 1);
        x_min = x_min.min(lo);
        x_max = x_max.max(hi);
        y_max = y_max.max(top);
        rects.push((lo, hi, bot, top));
    }
    if rects.is_empty() {
        x_min = 0.0;
        x_max = 1.0;
        y_max = 1.0;
    }

    let mut out = String::new();
    match model {
        RenderModel::HalfPlane => {
            let margin = 0.05 * (x_max - x_min).max(y_max);
            let ox = x_min - margin;
            let oy = y_max + margin; // highest height maps to page top
            let width = (x_max - x_min + 2.0 * margin) * sv.scale;
            let height = (y_max + margin) * sv.scale; // down to the boundary (y = 0)
            let page = |x: f64, y: f64| ((x - ox) * sv.scale, (oy - y) * sv.scale);
            svg_header(&mut out, width, height, &sv);
            for (i, (lo, hi, bot, top)) in rects.iter().enumerate() {
                // Closed path: a-edge (top), right c-edge, b-edge (bottom),
                // left c-edge via Z.
                let (x1, yt) = page(*lo, *top);
                let (x2, _) = page(*hi, *top);
                let (_, yb) = page(*lo, *bot);
                let _ = writeln!(
                    out,
                    "<path{} d=\"M {} {} L {} {} L {} {} L {} {} Z\"/>",
                    path_attrs(&decos[i]),
                    fmt_coord(x1),
                    fmt_coord(yt),
                    fmt_coord(x2),
                    fmt_coord(yt),
                    fmt_coord(x2),
                    fmt_coord(yb),
                    fmt_coord(x1),
                    fmt_coord(yb),
                );
                // Subdivision tick on the b-edge.
                let mid = 0.5 * (lo + hi);
                let (tx, ty0) = page(mid, *bot);
                let (_, ty1) = page(mid, bot + 0.18 * (top - bot));
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    fmt_coord(tx),
                    fmt_coord(ty0),
                    fmt_coord(tx),
                    fmt_coord(ty1),
                );
            }
        }
        RenderModel::Disc => {
            let r = sv.scale * 5.0;
            let width = 2.0 * r * 1.02;
            let height = 2.0 * r * 1.02;
            let cx = width / 2.0;
            let cy = height / 2.0;
            // Disc coordinates to page coordinates (flip y so the upper
            // half-plane's ideal point +1 sits on the page's right).
            let page = |u: f64, v: f64| (cx + u * r, cy - v * r);
            svg_header(&mut out, width, height, &sv);
            let _ = writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"{}\"/>",
                fmt_coord(cx),
                fmt_coord(cy),
                fmt_coord(r),
                fmt_coord(sv.stroke_width * 0.5),
            );
            for (i, (lo, hi, bot, top)) in rects.iter().enumerate() {
                let corners = [(*lo, *top), (*hi, *top), (*hi, *bot), (*lo, *bot)];
                let mids = [
                    (0.5 * (lo + hi), *top),
                    (*hi, 0.5 * (bot + top)),
                    (0.5 * (lo + hi), *bot),
                    (*lo, 0.5 * (bot + top)),
                ];
                let mut d = String::new();
                for e in 0..4 {
                    let a = corners[e];
                    let b = corners[(e + 1) % 4];
                    let m = mids[e];
                    let pa = {
                        let (u, v) = to_disc(a.0, a.1);
                        page(u, v)
                    };
                    let pb = {
                        let (u, v) = to_disc(b.0, b.1);
                        page(u, v)
                    };
                    let pm = {
                        let (u, v) = to_disc(m.0, m.1);
                        page(u, v)
                    };
                    if e == 0 {
                        let _ = write!(d, "M {} {}", fmt_coord(pa.0), fmt_coord(pa.1));
                    }
                    d.push(' ');
                    d.push_str(&arc_to(pa, pb, pm));
                }
                d.push_str(" Z");
                let _ = writeln!(out, "<path{} d=\"{}\"/>", path_attrs(&decos[i]), d);
                let mid = 0.5 * (lo + hi);
                let t0 = {
                    let (u, v) = to_disc(mid, *bot);
                    page(u, v)
                };
                let t1 = {
                    let (u, v) = to_disc(mid, bot + 0.18 * (top - bot));
                    page(u, v)
                };
                let _ = writeln!(
                    out,
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    fmt_coord(t0.0),
                    fmt_coord(t0.1),
                    fmt_coord(t1.0),
                    fmt_coord(t1.1),
                );
            }
        }
        RenderModel::Footprint => unreachable!(),
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// SVG arc command from `a` to `b` through `m` (page coordinates): the
/// circular arc of the circumcircle, or a line when nearly collinear.
fn arc_to(a: (f64, f64), b: (f64, f64), m: (f64, f64)) -> String {
    let d = 2.0 * (a.0 * (b.1 - m.1) + b.0 * (m.1 - a.1) + m.0 * (a.1 - b.1));
    let chord = (b.0 - a.0).hypot(b.1 - a.1);
    if d.abs() < 1e-9 * chord.max(1e-12) {
        return format!("L {} {}", fmt_coord(b.0), fmt_coord(b.1));
    }
    let aa = a.0 * a.0 + a.1 * a.1;
    let bb = b.0 * b.0 + b.1 * b.1;
    let mm = m.0 * m.0 + m.1 * m.1;
    let ux = (aa * (b.1 - m.1) + bb * (m.1 - a.1) + mm * (a.1 - b.1)) / d;
    let uy = (aa * (m.0 - b.0) + bb * (a.0 - m.0) + mm * (b.0 - a.0)) / d;
    let r = (a.0 - ux).hypot(a.1 - uy);
    let theta = |p: (f64, f64)| (p.1 - uy).atan2(p.0 - ux);
    let two_pi = std::f64::consts::TAU;
    let pos = |x: f64| x.rem_euclid(two_pi);
    let span_pos = pos(theta(b) - theta(a));
    let to_m = pos(theta(m) - theta(a));
    let (sweep, span) = if to_m <= span_pos {
        (1, span_pos)
    } else {
        (0, two_pi - span_pos)
    };
    let large = i32::from(span > std::f64::consts::PI);
    format!(
        "A {} {} 0 {} {} {} {}",
        fmt_coord(r),
        fmt_coord(r),
        large,
        sweep,
        fmt_coord(b.0),
        fmt_coord(b.1)
    )
}

fn render_footprint(
    spec: &SequenceSpec,
    window: &TileComplex,
    style: &RenderStyle,
) -> Result<String> {
    let sv = StyleView::from_table(style)?;
    let decos = decorations(spec, window, &sv)?;
    let d = spec.dim();
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    let mut boxes = Vec::with_capacity(window.len());
    for t in &window.nodes {
        let fp = footprint(spec, t)?;
        let b = [
            fp.low[0].to_f64(),
            fp.high[0].to_f64(),
            if d == 2 { fp.low[1].to_f64() } else { 0.0 },
            if d == 2 { fp.high[1].to_f64() } else { 1.0 },
        ];
        lo[0] = lo[0].min(b[0]);
        hi[0] = hi[0].max(b[1]);
        lo[1] = lo[1].min(b[2]);
        hi[1] = hi[1].max(b[3]);
        boxes.push(b);
    }
    if boxes.is_empty() {
        lo = [0.0; 2];
        hi = [1.0; 2];
    }
    let margin = 0.05 * (hi[0] - lo[0]).max(hi[1] - lo[1]);
    let width = (hi[0] - lo[0] + 2.0 * margin) * sv.scale;
    let height = (hi[1] - lo[1] + 2.0 * margin) * sv.scale;
    let page = |x: f64, y: f64| {
        ((x - lo[0] + margin) * sv.scale, (hi[1] + margin - y) * sv.scale)
    };
    let mut out = String::new();
    svg_header(&mut out, width, height, &sv);
    for (i, b) in boxes.iter().enumerate() {
        let (x1, y1) = page(b[0], b[3]);
        let (x2, y2) = page(b[1], b[2]);
        let _ = writeln!(
            out,
            "<rect{} x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/>",
            path_attrs(&decos[i]),
            fmt_coord(x1),
            fmt_coord(y1),
            fmt_coord(x2 - x1),
            fmt_coord(y2 - y1),
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{ep_spec, word_spec};
    use crate::tiling::{build_window, E0Box};

    fn style(pairs: &[(&str, &str)]) -> RenderStyle {
        pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    #[test]
    fn single_tile_is_one_path_and_one_tick() {
        let spec = ep_spec(&[(&[], &[1])]);
        let window =
            build_window(&spec, (0, 0), &E0Box::from_ints(&[-1], &[1])).unwrap();
        assert_eq!(window.len(), 1);
        let svg = render_svg(&spec, &window, RenderModel::HalfPlane, &style(&[])).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        assert_eq!(svg.matches("<line").count(), 1);
        // Four segments: M, two L's inside, one more L, and Z.
        let path_d = svg.split("d=\"").nth(1).unwrap().split('"').next().unwrap();
        assert_eq!(path_d.matches('L').count(), 3);
        assert!(path_d.trim_end().ends_with('Z'));
    }

    #[test]
    fn shared_edges_coincide_in_page_coordinates() {
        let spec = ep_spec(&[(&[], &[1])]);
        let window =
            build_window(&spec, (0, 1), &E0Box::from_ints(&[-1], &[7])).unwrap();
        assert_eq!(window.len(), 6);
        let svg = render_svg(&spec, &window, RenderModel::HalfPlane, &style(&[])).unwrap();
        assert_eq!(svg.matches("<path").count(), 6);

        // Parse the rectangles back out of the emitted path data.
        let mut rects: Vec<[f64; 4]> = Vec::new(); // x1, y_top, x2, y_bot
        for part in svg.split("<path").skip(1) {
            let d = part.split("d=\"").nth(1).unwrap().split('"').next().unwrap();
            let nums: Vec<f64> = d
                .split(|c: char| !c.is_ascii_digit() && c != '.' && c != '-')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().unwrap())
                .collect();
            assert_eq!(nums.len(), 8);
            rects.push([nums[0], nums[1], nums[2], nums[5]]);
        }
        // Every pair sharing an edge must agree on the shared coordinate.
        let mut shared = 0;
        for i in 0..rects.len() {
            for j in 0..rects.len() {
                if i == j {
                    continue;
                }
                let (a, b) = (rects[i], rects[j]);
                // Side contact: a's right edge on b's left edge.
                if (a[2] - b[0]).abs() < 1e-9 && a[1] == b[1] {
                    shared += 1;
                }
                // Vertical contact: a's top on b's bottom.
                if (a[1] - b[3]).abs() < 1e-9 && a[0] >= b[0] - 1e-9 && a[2] <= b[2] + 1e-9 {
                    shared += 1;
                }
            }
        }
        assert!(shared >= 7, "expected the window's contacts to reappear in page space");
    }

    #[test]
    fn disc_rendering_stays_inside_the_unit_circle() {
        let spec = ep_spec(&[(&[], &[1, -1])]);
        let window =
            build_window(&spec, (0, 2), &E0Box::from_ints(&[-9], &[7])).unwrap();
        let svg = render_svg(&spec, &window, RenderModel::Disc, &style(&[])).unwrap();
        // The disc circle is centered at (cx, cy) with radius r; every path
        // coordinate must lie strictly inside it.
        let circle = svg.split("<circle").nth(1).unwrap();
        let get = |key: &str| -> f64 {
            circle
                .split(&format!("{key}=\""))
                .nth(1)
                .unwrap()
                .split('"')
                .next()
                .unwrap()
                .parse()
                .unwrap()
        };
        let (cx, cy, r) = (get("cx"), get("cy"), get("r"));
        for part in svg.split("<path").skip(1) {
            let d = part.split("d=\"").nth(1).unwrap().split('"').next().unwrap();
            let tokens: Vec<&str> = d.split_whitespace().collect();
            let mut i = 0;
            while i < tokens.len() {
                match tokens[i] {
                    "M" | "L" => {
                        let x: f64 = tokens[i + 1].parse().unwrap();
                        let y: f64 = tokens[i + 2].parse().unwrap();
                        assert!((x - cx).hypot(y - cy) < r * (1.0 - 1e-9));
                        i += 3;
                    }
                    "A" => {
                        let x: f64 = tokens[i + 6].parse().unwrap();
                        let y: f64 = tokens[i + 7].parse().unwrap();
                        assert!((x - cx).hypot(y - cy) < r * (1.0 - 1e-9));
                        i += 8;
                    }
                    "Z" => i += 1,
                    other => panic!("unexpected path token {other:?}"),
                }
            }
        }
    }

    #[test]
    fn rendering_is_deterministic() {
        let spec = ep_spec(&[(&[], &[1, 1, -1])]);
        let window =
            build_window(&spec, (0, 2), &E0Box::from_ints(&[-9], &[7])).unwrap();
        let s = style(&[("pool-fill", "on"), ("scale", "32")]);
        let a = render_svg(&spec, &window, RenderModel::HalfPlane, &s).unwrap();
        let b = render_svg(&spec, &window, RenderModel::HalfPlane, &s).unwrap();
        assert_eq!(a, b);
        let da = render_svg(&spec, &window, RenderModel::Disc, &s).unwrap();
        let db = render_svg(&spec, &window, RenderModel::Disc, &s).unwrap();
        assert_eq!(da, db);
    }

    #[test]
    fn pool_fill_uses_distinct_colors_across_a_wall() {
        let spec = ep_spec(&[(&[], &[1])]);
        let window =
            build_window(&spec, (0, 1), &E0Box::from_ints(&[-9], &[7])).unwrap();
        let svg = render_svg(
            &spec,
            &window,
            RenderModel::HalfPlane,
            &style(&[("pool-fill", "on")]),
        )
        .unwrap();
        let fills: std::collections::BTreeSet<&str> = svg
            .split("style=\"fill:")
            .skip(1)
            .map(|s| s.split('"').next().unwrap())
            .collect();
        assert_eq!(fills.len(), 2, "two pools, two fill colors");
    }

    #[test]
    fn highlights_mark_tail_and_tower() {
        let spec = ep_spec(&[(&[], &[1, -1])]);
        let window =
            build_window(&spec, (0, 3), &E0Box::from_ints(&[-17], &[15])).unwrap();
        let svg = render_svg(
            &spec,
            &window,
            RenderModel::HalfPlane,
            &style(&[("highlight-tail", "0:2")]),
        )
        .unwrap();
        // The tile (0, 2) has ancestors on every higher layer of the window.
        assert_eq!(svg.matches("class=\"tail\"").count(), 4);

        let svg = render_svg(
            &spec,
            &window,
            RenderModel::HalfPlane,
            &style(&[("highlight-tower", "2:0")]),
        )
        .unwrap();
        // Tower of a layer-2 tile: itself, 2 children, 4 grandchildren.
        assert_eq!(svg.matches("class=\"tower\"").count(), 7);
    }

    #[test]
    fn dimension_restrictions() {
        let spec2 = ep_spec(&[(&[], &[1]), (&[], &[-1])]);
        let window =
            build_window(&spec2, (0, 0), &E0Box::from_ints(&[-3, -3], &[3, 3])).unwrap();
        for model in [RenderModel::HalfPlane, RenderModel::Disc] {
            assert!(matches!(
                render_svg(&spec2, &window, model, &style(&[])),
                Err(Error::UnsupportedDimension { dim: 2, .. })
            ));
        }
        // Footprint view is the d=2 rendering.
        let svg = render_svg(&spec2, &window, RenderModel::Footprint, &style(&[])).unwrap();
        assert_eq!(svg.matches("<rect").count(), window.len());

        let spec3 = ep_spec(&[(&[], &[1]), (&[], &[-1]), (&[], &[1, -1])]);
        let window3 = build_window(
            &spec3,
            (0, 0),
            &E0Box::from_ints(&[-3, -3, -3], &[3, 3, 3]),
        )
        .unwrap();
        assert!(matches!(
            render_svg(&spec3, &window3, RenderModel::Footprint, &style(&[])),
            Err(Error::UnsupportedDimension { dim: 3, .. })
        ));
    }

    #[test]
    fn style_validation() {
        let spec = ep_spec(&[(&[], &[1])]);
        let window =
            build_window(&spec, (0, 0), &E0Box::from_ints(&[-1], &[1])).unwrap();
        assert!(matches!(
            render_svg(&spec, &window, RenderModel::HalfPlane, &style(&[("scale", "big")])),
            Err(Error::ParseError(_))
        ));
        assert!(matches!(
            render_svg(
                &spec,
                &window,
                RenderModel::HalfPlane,
                &style(&[("highlight-tail", "nonsense")])
            ),
            Err(Error::ParseError(_))
        ));
        // Pool fill needs the infinite sequence.
        let word = word_spec(1, &[&[1], &[-1]]);
        let w2 = build_window(&word, (0, 0), &E0Box::from_ints(&[-1], &[1])).unwrap();
        assert!(render_svg(&word, &w2, RenderModel::HalfPlane, &style(&[("pool-fill", "on")]))
            .is_err());
    }
}
