use std::fmt::Write;

use crate::cutset::{CutsetResult, PathRole};
use crate::error::{Error, Result};
use crate::graph::{ball, contour, PlanarEmbeddedGraph, VertexId};

/// Highlight layers drawn over the host, bottom to top.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overlays {
    pub ball: Vec<VertexId>,
    /// Closed contour walk as a vertex sequence.
    pub contour: Vec<VertexId>,
    pub curve: Vec<Vec<VertexId>>,
    pub omega: Vec<VertexId>,
    pub boundary: Vec<VertexId>,
}

impl Overlays {
    /// Layers for a cutset: `B(v, n)`, the contour of `B(v, 4n)`, the
    /// removed paths, `Omega` and its boundary.
    pub fn from_cutset(g: &PlanarEmbeddedGraph, r: &CutsetResult) -> Result<Self> {
        let c = contour(g, r.v, 4 * r.n)?;
        let mut walk: Vec<VertexId> = (0..c.len()).map(|i| c.vertex_at(i)).collect();
        walk.push(c.vertex_at(0));
        Ok(Overlays {
            ball: ball(g, r.v, r.n)?,
            contour: walk,
            curve: r
                .paths
                .iter()
                .zip(&r.path_roles)
                .filter(|(_, &role)| role != PathRole::Arc)
                .map(|(p, _)| p.clone())
                .collect(),
            omega: r.omega.clone(),
            boundary: r.boundary.clone(),
        })
    }
}

const SIZE: f64 = 800.0;
const MARGIN: f64 = 10.0;

/// SVG drawing of the host from its stored coordinates. Layer groups carry
/// the ids `edges`, `vertices`, `ball`, `contour`, `curve`, `omega` and
/// `boundary`; every vertex marker is a `circle`, every edge a `line`.
pub fn render_svg(g: &PlanarEmbeddedGraph, overlays: &Overlays) -> Result<String> {
    let coords = g
        .coords()
        .ok_or_else(|| Error::Layout("host has no coordinates; regenerate it or add a \"coords\" object".into()))?;
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &[x, y] in coords {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0);
    if !span.is_finite() || span <= 0.0 {
        return Err(Error::Layout("all vertices share one position".into()));
    }
    let scale = (SIZE - 2.0 * MARGIN) / span;
    // y grows upwards in the drawing, downwards in SVG
    let pos = |v: VertexId| {
        let [x, y] = coords[v.idx()];
        (MARGIN + (x - x0) * scale, MARGIN + (y1 - y) * scale)
    };
    let width = MARGIN * 2.0 + (x1 - x0) * scale;
    let height = MARGIN * 2.0 + (y1 - y0) * scale;
    let radius = (scale * 0.15).clamp(0.5, 6.0);
    let stroke = (scale * 0.05).clamp(0.2, 2.0);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"#
    )
    .unwrap();
    writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();

    writeln!(s, r##"<g id="edges" stroke="#b0b0b0" stroke-width="{stroke:.2}">"##).unwrap();
    for (u, w) in g.edges() {
        let ((ax, ay), (bx, by)) = (pos(u), pos(w));
        writeln!(s, r#"<line x1="{ax:.2}" y1="{ay:.2}" x2="{bx:.2}" y2="{by:.2}"/>"#).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    let dots = |s: &mut String, id: &str, fill: &str, r: f64, vs: &mut dyn Iterator<Item = VertexId>| {
        writeln!(s, r#"<g id="{id}" fill="{fill}">"#).unwrap();
        for v in vs {
            let (x, y) = pos(v);
            writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}"/>"#).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    };
    let polyline = |s: &mut String, path: &[VertexId]| {
        let pts: Vec<String> = path
            .iter()
            .map(|&v| {
                let (x, y) = pos(v);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" ")).unwrap();
    };

    dots(&mut s, "vertices", "#404040", radius, &mut g.vertices());
    dots(&mut s, "omega", "#9ecae1", radius, &mut overlays.omega.iter().copied());
    dots(&mut s, "ball", "#3182bd", radius, &mut overlays.ball.iter().copied());
    writeln!(
        s,
        r##"<g id="contour" fill="none" stroke="#31a354" stroke-width="{:.2}">"##,
        stroke * 2.0
    )
    .unwrap();
    if !overlays.contour.is_empty() {
        polyline(&mut s, &overlays.contour);
    }
    writeln!(s, "</g>").unwrap();
    writeln!(
        s,
        r##"<g id="curve" fill="none" stroke="#e6550d" stroke-width="{:.2}">"##,
        stroke * 3.0
    )
    .unwrap();
    for path in &overlays.curve {
        polyline(&mut s, path);
    }
    writeln!(s, "</g>").unwrap();
    dots(&mut s, "boundary", "#de2d26", radius * 1.3, &mut overlays.boundary.iter().copied());
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::grid;

    fn layer<'a>(svg: &'a str, id: &str) -> &'a str {
        let start = svg.find(&format!("<g id=\"{id}\"")).unwrap();
        let end = start + svg[start..].find("</g>").unwrap();
        &svg[start..end]
    }

    #[test]
    fn plain_grid_counts() {
        let g = grid(5, 5).unwrap();
        let svg = render_svg(&g, &Overlays::default()).unwrap();
        assert_eq!(layer(&svg, "vertices").matches("<circle").count(), 25);
        assert_eq!(layer(&svg, "edges").matches("<line").count(), 40);
        assert_eq!(svg, render_svg(&g, &Overlays::default()).unwrap());
    }

    #[test]
    fn missing_coordinates_is_a_layout_error() {
        let g = PlanarEmbeddedGraph::from_rotations(vec![vec![1], vec![0]], (0, 1)).unwrap();
        assert!(matches!(render_svg(&g, &Overlays::default()), Err(Error::Layout(_))));
    }
}
