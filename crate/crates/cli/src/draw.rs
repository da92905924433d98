//! Straight-line drawing by barycentric relaxation.

use std::fmt::Write;

use planar_core::{embed, Graph, NonPlanarEvidence, VertexId};

const RADIUS: f64 = 200.0;
const MARGIN: f64 = 20.0;
const TOLERANCE: f64 = 1e-7;
const MAX_ITERATIONS: usize = 100_000;

/// Positions for one connected graph: the external face on a regular
/// polygon, every other vertex repeatedly moved to the mean of its
/// neighbors.
pub fn barycentric(g: &Graph) -> Result<Vec<(f64, f64)>, NonPlanarEvidence> {
    let n = g.n();
    if n == 1 {
        return Ok(vec![(0.0, 0.0)]);
    }
    let pe = embed(g)?;
    let mut outer: Vec<VertexId> = Vec::new();
    for &v in &pe.faces[pe.external] {
        if !outer.contains(&v) {
            outer.push(v);
        }
    }
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    let k = outer.len() as f64;
    for (i, &v) in outer.iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / k - std::f64::consts::FRAC_PI_2;
        pos[v] = (RADIUS * a.cos(), RADIUS * a.sin());
        fixed[v] = true;
    }
    for _ in 0..MAX_ITERATIONS {
        let mut moved: f64 = 0.0;
        for v in 0..n {
            if fixed[v] || g.degree(v) == 0 {
                continue;
            }
            let d = g.degree(v) as f64;
            let (sx, sy) = g.neighbors(v).iter().fold((0.0, 0.0), |(x, y), &(w, _)| (x + pos[w].0, y + pos[w].1));
            let next = (sx / d, sy / d);
            moved = moved.max((next.0 - pos[v].0).hypot(next.1 - pos[v].1));
            pos[v] = next;
        }
        if moved < TOLERANCE {
            break;
        }
    }
    Ok(pos)
}

/// SVG 1.1 document; connected components are laid out left to right.
pub fn svg(g: &Graph) -> Result<String, NonPlanarEvidence> {
    let mut pos = vec![(0.0, 0.0); g.n()];
    let cell = 2.0 * (RADIUS + MARGIN);
    let comps = g.connected_components();
    for (c, comp) in comps.iter().enumerate() {
        let (sub, map, _) = g.induced_subgraph(comp);
        let local = barycentric(&sub)?;
        for (i, &v) in map.iter().enumerate() {
            pos[v] = (local[i].0 + RADIUS + MARGIN + c as f64 * cell, local[i].1 + RADIUS + MARGIN);
        }
    }
    let width = cell * comps.len().max(1) as f64;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{cell:.0}" viewBox="0 0 {width:.0} {cell:.0}">"#
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="1">"#);
    for &(u, v) in g.edges() {
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
            pos[u].0, pos[u].1, pos[v].0, pos[v].1
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="white" stroke="black" font-size="8" text-anchor="middle">"#);
    for (v, p) in pos.iter().enumerate() {
        let _ = writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="6"/>"#, p.0, p.1);
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" fill="black" stroke="none">{v}</text>"#,
            p.0,
            p.1 + 3.0
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    Ok(out)
}
