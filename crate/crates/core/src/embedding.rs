//! Rotation systems and face tracing.
//!
//! A dart is an edge with a direction: dart `2e` runs from the first stored
//! endpoint of `e` to the second, dart `2e + 1` the other way. Faces are
//! traced with one fixed convention everywhere in the crate: after arriving
//! at `v` along edge `e`, leave along the successor of `e` in the rotation
//! of `v`.

use serde::{Deserialize, Serialize};

use crate::error::EmbedError;
use crate::graph::{EdgeId, Graph, VertexId};

pub type Dart = usize;

pub fn dart_from(g: &Graph, e: EdgeId, from: VertexId) -> Dart {
    let (a, _) = g.endpoints(e);
    if a == from {
        2 * e
    } else {
        2 * e + 1
    }
}

pub fn dart_tail(g: &Graph, d: Dart) -> VertexId {
    let (a, b) = g.endpoints(d / 2);
    if d % 2 == 0 {
        a
    } else {
        b
    }
}

pub fn dart_head(g: &Graph, d: Dart) -> VertexId {
    dart_tail(g, d ^ 1)
}

/// A combinatorial embedding: per-vertex cyclic edge order plus the face
/// walks it induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarEmbedding {
    pub n: usize,
    pub rotation: Vec<Vec<EdgeId>>,
    pub faces: Vec<Vec<VertexId>>,
    pub external: usize,
}

impl PlanarEmbedding {
    /// Traces the faces of `rotation` and records the face containing
    /// `external_dart` (or face 0) as external.
    pub fn from_rotation(
        g: &Graph,
        rotation: Vec<Vec<EdgeId>>,
        external_dart: Option<Dart>,
    ) -> Result<Self, EmbedError> {
        let traced = trace_darts(g, &rotation)?;
        let mut external = 0;
        if let Some(x) = external_dart {
            if let Some(i) = traced.face_of.get(x) {
                external = *i;
            }
        }
        let faces = face_walks(g, &traced.faces, &rotation);
        Ok(PlanarEmbedding {
            n: g.n(),
            rotation,
            faces,
            external,
        })
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// `V - E + F == 2` for every connected component.
    pub fn satisfies_euler(&self, g: &Graph) -> bool {
        let comps = g.connected_components();
        let mut comp_of = vec![0; g.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut f = vec![0i64; comps.len()];
        for face in &self.faces {
            match face.first() {
                Some(&v) if v < g.n() => f[comp_of[v]] += 1,
                _ => return false,
            }
        }
        let mut e = vec![0i64; comps.len()];
        for &(u, _) in g.edges() {
            e[comp_of[u]] += 1;
        }
        comps
            .iter()
            .enumerate()
            .all(|(i, c)| c.len() as i64 - e[i] + f[i] == 2)
    }
}

pub(crate) struct Traced {
    pub faces: Vec<Vec<Dart>>,
    pub face_of: Vec<usize>,
}

/// Checks the rotation is a permutation of each vertex's incident edges and
/// traces all dart orbits. Faces are started from darts in ascending order.
pub(crate) fn trace_darts(g: &Graph, rotation: &[Vec<EdgeId>]) -> Result<Traced, EmbedError> {
    if rotation.len() != g.n() {
        return Err(EmbedError::MalformedFaces(format!(
            "rotation has {} vertices, graph has {}",
            rotation.len(),
            g.n()
        )));
    }
    // position of dart d's edge inside the rotation of tail(d)
    let mut pos = vec![usize::MAX; 2 * g.m()];
    for (v, rot) in rotation.iter().enumerate() {
        if rot.len() != g.degree(v) {
            return Err(EmbedError::MalformedFaces(format!(
                "rotation at {v} has {} edges, degree is {}",
                rot.len(),
                g.degree(v)
            )));
        }
        for (i, &e) in rot.iter().enumerate() {
            if e >= g.m() {
                return Err(EmbedError::MalformedFaces(format!("unknown edge {e}")));
            }
            let (a, b) = g.endpoints(e);
            if a != v && b != v {
                return Err(EmbedError::MalformedFaces(format!(
                    "edge {e} is not incident to {v}"
                )));
            }
            let d = dart_from(g, e, v);
            if pos[d] != usize::MAX {
                return Err(EmbedError::MalformedFaces(format!(
                    "edge {e} repeated at {v}"
                )));
            }
            pos[d] = i;
        }
    }
    let mut face_of = vec![usize::MAX; 2 * g.m()];
    let mut faces = Vec::new();
    for start in 0..2 * g.m() {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            face_of[d] = id;
            walk.push(d);
            let v = dart_head(g, d);
            let rot = &rotation[v];
            let i = pos[d ^ 1];
            let e2 = rot[(i + 1) % rot.len()];
            d = dart_from(g, e2, v);
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    Ok(Traced { faces, face_of })
}

/// Vertex walks of dart faces; isolated vertices contribute a one-vertex face.
pub(crate) fn face_walks(g: &Graph, faces: &[Vec<Dart>], rotation: &[Vec<EdgeId>]) -> Vec<Vec<VertexId>> {
    let mut out: Vec<Vec<VertexId>> = faces
        .iter()
        .map(|f| f.iter().map(|&d| dart_tail(g, d)).collect())
        .collect();
    for (v, rot) in rotation.iter().enumerate() {
        if rot.is_empty() {
            out.push(vec![v]);
        }
    }
    out
}

/// Rotation of a single simple cycle given as a cyclic vertex order.
pub(crate) fn cycle_rotation(g: &Graph, vertices: &[VertexId]) -> Vec<Vec<EdgeId>> {
    let mut rotation = vec![Vec::new(); g.n()];
    let k = vertices.len();
    for i in 0..k {
        let (u, v) = (vertices[i], vertices[(i + 1) % k]);
        let e = g.edge_between(u, v).expect("cycle edge");
        rotation[u].push(e);
        rotation[v].push(e);
    }
    rotation
}
