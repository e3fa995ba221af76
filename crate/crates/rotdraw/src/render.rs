//! SVG output. The planarized map is laid out by barycentric (Tutte)
//! placement with one face pinned to a regular polygon. Coordinates exist
//! only here.

use anyhow::{bail, Context, Result};
use rotdraw_core::ids::edges;
use rotdraw_core::map::NodeKind;
use rotdraw_core::moves::triangle_of;
use rotdraw_core::{apply_move, GoodDrawing, Move};
use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt::Write;

const PANEL: f64 = 400.0;
const MARGIN: f64 = 30.0;
const RADIUS: f64 = 10.0;
const SWEEPS: usize = 50_000;
const TOLERANCE: f64 = 1e-10;

/// Node positions in the unit disc, indexed by node id.
pub type Layout = Vec<(f64, f64)>;

/// Face of maximum boundary length, ties broken by the smallest dart id on
/// the boundary.
pub fn default_outer_face(d: &GoodDrawing) -> usize {
    let faces = d.faces();
    (0..faces.len())
        .max_by_key(|&f| (faces[f].len(), std::cmp::Reverse(faces[f].darts.iter().min().copied())))
        .expect("a drawing has at least one face")
}

fn boundary_nodes(d: &GoodDrawing, face: usize) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    d.faces()[face]
        .darts
        .iter()
        .map(|&x| d.map().origin(x))
        .filter(|&v| seen.insert(v))
        .collect()
}

/// Moves every node not in `pinned` to the average of its neighbours until
/// the largest step drops below the tolerance.
fn relax(d: &GoodDrawing, pos: &mut Layout, pinned: &[bool]) {
    let map = d.map();
    let neighbours: Vec<Vec<usize>> =
        (0..map.node_count()).map(|v| map.rotation(v).iter().map(|&x| map.target(x)).collect()).collect();
    for _ in 0..SWEEPS {
        let mut delta: f64 = 0.0;
        for v in 0..pos.len() {
            if pinned[v] || neighbours[v].is_empty() {
                continue;
            }
            let k = neighbours[v].len() as f64;
            let (sx, sy) = neighbours[v].iter().fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let next = (sx / k, sy / k);
            delta = delta.max((next.0 - pos[v].0).abs()).max((next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if delta < TOLERANCE {
            break;
        }
    }
}

/// Barycentric layout with `outer` pinned to a regular polygon, walked so
/// that counterclockwise rotations stay counterclockwise.
pub fn layout(d: &GoodDrawing, outer: usize) -> Result<Layout> {
    if outer >= d.faces().len() {
        bail!("face {outer} does not exist (the drawing has {} faces)", d.faces().len());
    }
    let count = d.map().node_count();
    let mut pos = vec![(0.0, 0.0); count];
    let mut pinned = vec![false; count];
    let ring = boundary_nodes(d, outer);
    for (k, &v) in ring.iter().enumerate() {
        let angle = -TAU * k as f64 / ring.len() as f64;
        pos[v] = (angle.cos(), angle.sin());
        pinned[v] = true;
    }
    relax(d, &mut pos, &pinned);
    Ok(pos)
}

fn to_panel((x, y): (f64, f64), offset: f64) -> (f64, f64) {
    let half = (PANEL - 2.0 * MARGIN) / 2.0;
    (offset + MARGIN + half * (1.0 + x), MARGIN + half * (1.0 - y))
}

fn panel(d: &GoodDrawing, pos: &Layout, offset: f64, out: &mut String) {
    let _ = writeln!(out, "<g class=\"panel\">");
    let _ = writeln!(out, "<g class=\"edges\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">");
    for e in edges(d.n()) {
        let points: Vec<String> = d
            .edge_nodes(e)
            .iter()
            .map(|&v| {
                let (x, y) = to_panel(pos[v], offset);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            out,
            "<polyline class=\"edge\" data-edge=\"{}-{}\" points=\"{}\"/>",
            e.lo(),
            e.hi(),
            points.join(" ")
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "<g class=\"vertices\" font-family=\"sans-serif\" font-size=\"11\">");
    for v in 0..d.map().node_count() {
        if let NodeKind::Vertex(label) = d.node_kind(v) {
            let (x, y) = to_panel(pos[v], offset);
            let _ = writeln!(
                out,
                "<circle class=\"vertex\" data-vertex=\"{label}\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{RADIUS}\" fill=\"white\" stroke=\"black\"/>"
            );
            let _ = writeln!(
                out,
                "<text x=\"{x:.3}\" y=\"{y:.3}\" text-anchor=\"middle\" dominant-baseline=\"central\">{label}</text>"
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</g>");
}

fn document(panels: &[(&GoodDrawing, &Layout)]) -> String {
    let width = PANEL * panels.len() as f64;
    let mut out = String::new();
    let _ = writeln!(out, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{PANEL}\" viewBox=\"0 0 {width} {PANEL}\">"
    );
    for (k, (d, pos)) in panels.iter().enumerate() {
        panel(d, pos, PANEL * k as f64, &mut out);
    }
    let _ = writeln!(out, "</svg>");
    out
}

/// One drawing. `outer` defaults to [`default_outer_face`].
pub fn render(d: &GoodDrawing, outer: Option<usize>) -> Result<String> {
    if !d.is_valid() {
        bail!("cannot render an invalid drawing");
    }
    let pos = layout(d, outer.unwrap_or_else(|| default_outer_face(d)))?;
    Ok(document(&[(d, &pos)]))
}

/// Before and after panels for one move. The second panel keeps every node
/// of the first in place except the three crossings of the triangle.
pub fn render_move(d: &GoodDrawing, m: Move, outer: Option<usize>) -> Result<String> {
    let after = apply_move(d, m).with_context(|| format!("applying {m}"))?;
    let before_pos = layout(d, outer.unwrap_or_else(|| default_outer_face(d)))?;
    let pos = carry_layout(d, &before_pos, &after, m);
    Ok(document(&[(d, &before_pos), (&after, &pos)]))
}

fn carry_layout(d: &GoodDrawing, pos: &Layout, after: &GoodDrawing, m: Move) -> Layout {
    let count = after.map().node_count();
    let mut out = vec![(0.0, 0.0); count];
    let mut pinned = vec![true; count];
    for v in 0..count {
        out[v] = match after.node_kind(v) {
            NodeKind::Vertex(label) => pos[d.vertex_node(label)],
            NodeKind::Crossing(e, f) => pos[d.crossing_node(e, f).expect("moves keep every crossing")],
        };
    }
    if let Some(t) = triangle_of(after, m.triple) {
        for &c in &t.corners {
            pinned[c] = false;
        }
    }
    relax(after, &mut out, &pinned);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rotdraw_core::gen::convex_drawing;

    #[test]
    fn outer_face_is_longest() {
        let d = convex_drawing(5).unwrap();
        let f = default_outer_face(&d);
        assert!(d.faces().iter().all(|g| g.len() <= d.faces()[f].len()));
        assert_eq!(d.faces()[f].len(), 5);
    }

    #[test]
    fn layout_is_barycentric() {
        let d = convex_drawing(6).unwrap();
        let outer = default_outer_face(&d);
        let pos = layout(&d, outer).unwrap();
        let ring = boundary_nodes(&d, outer);
        let map = d.map();
        for v in (0..map.node_count()).filter(|v| !ring.contains(v)) {
            let nbrs = map.rotation(v);
            let cx = nbrs.iter().map(|&x| pos[map.target(x)].0).sum::<f64>() / nbrs.len() as f64;
            let cy = nbrs.iter().map(|&x| pos[map.target(x)].1).sum::<f64>() / nbrs.len() as f64;
            assert!((cx - pos[v].0).abs() < 1e-8 && (cy - pos[v].1).abs() < 1e-8);
        }
    }

    #[test]
    fn unknown_outer_face_is_an_error() {
        let d = convex_drawing(4).unwrap();
        assert!(render(&d, Some(99)).is_err());
    }
}
