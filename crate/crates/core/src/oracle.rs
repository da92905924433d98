//! Brute-force references and generators.
//!
//! Nothing here uses the conflict, embedding or Kuratowski modules: cycles,
//! bridges, conflicts and face tracing are re-implemented directly from their
//! definitions so that agreement with the fast path means something. Search
//! routines are exponential and refuse inputs above a size guard unless the
//! caller overrides it.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::embedding::PlanarEmbedding;
use crate::error::OracleError;
use crate::graph::{classify_cycle, Cycle, EdgeId, Graph, VertexId};

pub const TUTTE_MAX_N: usize = 10;
pub const MINOR_MAX_N: usize = 16;
pub const FACELIKE_MAX_N: usize = 12;

fn guard(what: &'static str, limit: usize, got: usize, override_guard: bool) -> Result<(), OracleError> {
    if got > limit && !override_guard {
        return Err(OracleError::GuardExceeded { what, limit, got });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MinorKind {
    K5,
    K33,
}

impl MinorKind {
    pub fn branch_count(self) -> usize {
        match self {
            MinorKind::K5 => 5,
            MinorKind::K33 => 6,
        }
    }

    /// Index pairs of branch sets that must be joined. For K3,3 the sides
    /// are `0..3` and `3..6`.
    pub fn required_pairs(self) -> Vec<(usize, usize)> {
        match self {
            MinorKind::K5 => (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect(),
            MinorKind::K33 => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
        }
    }
}

impl std::fmt::Display for MinorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MinorKind::K5 => "K5",
            MinorKind::K33 => "K33",
        })
    }
}

/// A K5 or K3,3 minor: disjoint connected branch sets plus connecting paths.
/// Each path is a vertex sequence starting in one branch set, ending in
/// another, with interior vertices outside every branch set and every other
/// path. A required pair may also be joined by a plain edge of the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub kind: MinorKind,
    pub branch_sets: Vec<Vec<VertexId>>,
    pub paths: Vec<Vec<VertexId>>,
}

pub fn verify_minor(g: &Graph, m: &MinorModel) -> bool {
    let k = m.kind.branch_count();
    if m.branch_sets.len() != k {
        return false;
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, set) in m.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= g.n() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
    }
    // each branch set connected
    for (i, set) in m.branch_sets.iter().enumerate() {
        let mut seen = HashSet::from([set[0]]);
        let mut stack = vec![set[0]];
        while let Some(u) = stack.pop() {
            for &(w, _) in g.neighbors(u) {
                if owner[w] == i && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() != set.len() {
            return false;
        }
    }
    let mut joined = HashSet::new();
    for u in 0..g.n() {
        for &(w, _) in g.neighbors(u) {
            let (a, b) = (owner[u], owner[w]);
            if a != usize::MAX && b != usize::MAX && a != b {
                joined.insert((a.min(b), a.max(b)));
            }
        }
    }
    let mut interior_used = vec![false; g.n()];
    for p in &m.paths {
        if p.len() < 2 || p.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let (a, b) = (owner[p[0]], owner[p[p.len() - 1]]);
        if a == usize::MAX || b == usize::MAX || a == b {
            return false;
        }
        if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        for &v in &p[1..p.len() - 1] {
            if owner[v] != usize::MAX || interior_used[v] {
                return false;
            }
            interior_used[v] = true;
        }
        joined.insert((a.min(b), a.max(b)));
    }
    m.kind.required_pairs().into_iter().all(|pair| joined.contains(&pair))
}

/// All simple cycles as vertex sequences starting at their smallest vertex,
/// each listed once. With `induced_only`, only chordless cycles are
/// produced and the search never extends a path that already has a chord.
/// `visit` returns `false` to stop early.
fn for_each_cycle(g: &Graph, induced_only: bool, mut visit: impl FnMut(&[VertexId]) -> bool) {
    let n = g.n();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path: Vec<VertexId> = vec![s];
        let mut cursor = vec![0usize];
        on_path[s] = true;
        while let Some(&v) = path.last() {
            let i = *cursor.last().unwrap();
            let nbrs = g.neighbors(v);
            if i >= nbrs.len() {
                on_path[v] = false;
                path.pop();
                cursor.pop();
                continue;
            }
            *cursor.last_mut().unwrap() += 1;
            let w = nbrs[i].0;
            if !induced_only {
                if w == s {
                    if path.len() >= 3 && path[1] < v && !visit(&path) {
                        return;
                    }
                    continue;
                }
            } else if path.len() >= 2 {
                if w <= s || on_path[w] {
                    continue;
                }
                // w may touch the path only at v and possibly at s
                let chord = path[1..path.len() - 1].iter().any(|&x| g.has_edge(x, w));
                if chord {
                    continue;
                }
                if g.has_edge(s, w) {
                    // closes a chordless cycle; extending past w would keep
                    // the chord sw, so stop here
                    path.push(w);
                    let go_on = path[1] > w || visit(&path);
                    path.pop();
                    if !go_on {
                        return;
                    }
                    continue;
                }
            }
            if w <= s || on_path[w] {
                continue;
            }
            on_path[w] = true;
            path.push(w);
            cursor.push(0);
        }
    }
}

/// Bridges of the cycle `cyc` by definition: chords, and components of
/// `g - V(cyc)` with their attachment vertices. Returns attachment position
/// sets (positions along `cyc`).
fn literal_bridges(g: &Graph, cyc: &[VertexId]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cyc.iter().enumerate() {
        pos[v] = i;
    }
    let k = cyc.len();
    let mut out = Vec::new();
    for (i, &v) in cyc.iter().enumerate() {
        for &(w, _) in g.neighbors(v) {
            if pos[w] != usize::MAX && v < w {
                let j = pos[w];
                let consecutive = (i + 1) % k == j || (j + 1) % k == i;
                if !consecutive {
                    out.push(vec![i.min(j), i.max(j)]);
                }
            }
        }
    }
    let mut comp = vec![false; n];
    for s in 0..n {
        if pos[s] != usize::MAX || comp[s] {
            continue;
        }
        comp[s] = true;
        let mut stack = vec![s];
        let mut att = Vec::new();
        while let Some(u) = stack.pop() {
            for &(w, _) in g.neighbors(u) {
                if pos[w] != usize::MAX {
                    att.push(pos[w]);
                } else if !comp[w] {
                    comp[w] = true;
                    stack.push(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push(att);
    }
    out
}

/// The conflict relation straight from its definition: four distinct
/// attachments alternating around the cycle, or three shared attachments.
/// Quadratic in the attachment counts.
pub fn conflicts_literal(a: &[usize], b: &[usize]) -> bool {
    let shared = a.iter().filter(|x| b.contains(x)).count();
    if shared >= 3 {
        return true;
    }
    let strictly_between = |lo: usize, hi: usize, x: usize| lo < x && x < hi;
    for (i, &a1) in a.iter().enumerate() {
        for &a2 in &a[i + 1..] {
            let (lo, hi) = (a1.min(a2), a1.max(a2));
            for (j, &b1) in b.iter().enumerate() {
                for &b2 in &b[j + 1..] {
                    if [b1, b2].iter().any(|x| *x == lo || *x == hi) {
                        continue;
                    }
                    if strictly_between(lo, hi, b1) != strictly_between(lo, hi, b2) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn bipartite(adj: &[Vec<usize>]) -> bool {
    let mut color = vec![u8::MAX; adj.len()];
    for s in 0..adj.len() {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    stack.push(w);
                } else if color[w] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether the conflict graph of the cycle `cyc` is bipartite.
pub fn cycle_conflicts_bipartite(g: &Graph, cyc: &[VertexId]) -> bool {
    let bridges = literal_bridges(g, cyc);
    let mut adj = vec![Vec::new(); bridges.len()];
    for i in 0..bridges.len() {
        for j in i + 1..bridges.len() {
            if conflicts_literal(&bridges[i], &bridges[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    bipartite(&adj)
}

/// Tutte's criterion: planar iff every cycle has a bipartite conflict graph.
pub fn tutte_planarity(g: &Graph, override_guard: bool) -> Result<bool, OracleError> {
    guard("tutte_planarity vertex count", TUTTE_MAX_N, g.n(), override_guard)?;
    let mut planar = true;
    for_each_cycle(g, false, |cyc| {
        planar = cycle_conflicts_bipartite(g, cyc);
        planar
    });
    Ok(planar)
}

/// All simple cycles of `g` (each once), as vertex sequences.
pub fn all_cycles(g: &Graph, override_guard: bool) -> Result<Vec<Vec<VertexId>>, OracleError> {
    guard("cycle enumeration vertex count", TUTTE_MAX_N, g.n(), override_guard)?;
    let mut out = Vec::new();
    for_each_cycle(g, false, |c| {
        out.push(c.to_vec());
        true
    });
    Ok(out)
}

/// Induced non-separating cycles, sorted by edge set.
pub fn enumerate_facelike_cycles(g: &Graph, override_guard: bool) -> Result<Vec<Cycle>, OracleError> {
    guard("face enumeration vertex count", FACELIKE_MAX_N, g.n(), override_guard)?;
    let mut out = Vec::new();
    for_each_cycle(g, true, |c| {
        let cyc = Cycle::from_vertices(g, c.to_vec()).expect("enumerated cycle");
        let flags = classify_cycle(g, &cyc).expect("valid cycle");
        if flags.induced && flags.nonseparating {
            out.push(cyc);
        }
        true
    });
    out.sort_by(|a, b| a.edges().cmp(b.edges()));
    Ok(out)
}

/// Every vertex pair whose removal disconnects a connected graph.
pub fn separating_pairs_bruteforce(g: &Graph) -> Vec<(VertexId, VertexId)> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut keep = vec![true; n];
            keep[a] = false;
            keep[b] = false;
            if n > 2 && crate::graph::components(g, &keep).len() > 1 {
                out.push((a, b));
            }
        }
    }
    out
}

/// 3-connected by brute force: more than 3 vertices, connected, and no
/// vertex or vertex pair disconnects it.
pub fn is_triconnected_bruteforce(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return false;
    }
    for a in 0..n {
        let mut keep = vec![true; n];
        keep[a] = false;
        if crate::graph::components(g, &keep).len() > 1 {
            return false;
        }
    }
    separating_pairs_bruteforce(g).is_empty()
}

/// Searches for a `kind` minor by contracting edges of a small graph.
///
/// A model can always be assumed to use every vertex of its connected
/// component (leftover vertices are absorbed into a neighbouring branch
/// set), so the search runs over partitions of each component into connected
/// parts. Parts with at most two neighbouring parts are merged away eagerly:
/// they cannot be branch sets of a graph with minimum degree 3, and merging
/// them into either neighbour preserves any model.
pub fn brute_force_minor(g: &Graph, kind: MinorKind, override_guard: bool) -> Result<Option<MinorModel>, OracleError> {
    guard("brute_force_minor vertex count", MINOR_MAX_N, g.n(), override_guard)?;
    if g.n() > 128 {
        return Err(OracleError::GuardExceeded {
            what: "brute_force_minor hard limit",
            limit: 128,
            got: g.n(),
        });
    }
    for comp in g.connected_components() {
        if comp.len() < kind.branch_count() {
            continue;
        }
        let adj: Vec<u128> = (0..g.n())
            .map(|v| g.neighbors(v).iter().fold(0u128, |acc, &(w, _)| acc | (1u128 << w)))
            .collect();
        let parts: Vec<u128> = comp.iter().map(|&v| 1u128 << v).collect();
        let mut search = MinorSearch {
            adj: &adj,
            kind,
            seen: HashSet::new(),
        };
        if let Some(found) = search.run(parts) {
            let sets: Vec<Vec<VertexId>> = found.iter().map(|&p| bits(p)).collect();
            let model = MinorModel {
                kind,
                branch_sets: sets,
                paths: Vec::new(),
            };
            debug_assert!(verify_minor(g, &model));
            return Ok(Some(model));
        }
    }
    Ok(None)
}

fn bits(mut p: u128) -> Vec<VertexId> {
    let mut out = Vec::new();
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        out.push(v);
        p &= p - 1;
    }
    out
}

struct MinorSearch<'a> {
    adj: &'a [u128],
    kind: MinorKind,
    seen: HashSet<Vec<u128>>,
}

impl MinorSearch<'_> {
    fn quotient(&self, parts: &[u128]) -> Vec<u64> {
        parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let nb = bits(p).into_iter().fold(0u128, |acc, v| acc | self.adj[v]) & !p;
                parts
                    .iter()
                    .enumerate()
                    .filter(|&(j, &q)| j != i && nb & q != 0)
                    .fold(0u64, |acc, (j, _)| acc | (1u64 << j))
            })
            .collect()
    }

    fn normalize(&self, mut parts: Vec<u128>) -> (Vec<u128>, Vec<u64>) {
        loop {
            let q = self.quotient(&parts);
            match (0..parts.len()).find(|&i| q[i].count_ones() <= 2) {
                Some(i) if parts.len() > 1 && q[i] != 0 => {
                    let j = q[i].trailing_zeros() as usize;
                    parts[j] |= parts[i];
                    parts.remove(i);
                }
                _ => {
                    parts.sort_unstable();
                    let q = self.quotient(&parts);
                    return (parts, q);
                }
            }
        }
    }

    fn matches(&self, q: &[u64]) -> Option<Vec<usize>> {
        match self.kind {
            MinorKind::K5 => (0..5).all(|i| q[i].count_ones() == 4).then(|| (0..5).collect()),
            MinorKind::K33 => {
                for a in 1..6 {
                    for b in a + 1..6 {
                        let side: Vec<usize> = vec![0, a, b];
                        let other: Vec<usize> = (0..6).filter(|x| !side.contains(x)).collect();
                        if side.iter().all(|&i| other.iter().all(|&j| q[i] >> j & 1 == 1)) {
                            return Some(side.into_iter().chain(other).collect());
                        }
                    }
                }
                None
            }
        }
    }

    fn run(&mut self, parts: Vec<u128>) -> Option<Vec<u128>> {
        let (parts, q) = self.normalize(parts);
        let k = self.kind.branch_count();
        if parts.len() < k {
            return None;
        }
        let edges: usize = q.iter().map(|x| x.count_ones() as usize).sum::<usize>() / 2;
        if edges < self.kind.required_pairs().len() {
            return None;
        }
        if parts.len() == k {
            return self.matches(&q).map(|order| order.into_iter().map(|i| parts[i]).collect());
        }
        if !self.seen.insert(parts.clone()) {
            return None;
        }
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if q[i] >> j & 1 == 1 {
                    let mut next = parts.clone();
                    next[i] |= next[j];
                    next.remove(j);
                    if let Some(found) = self.run(next) {
                        return Some(found);
                    }
                }
            }
        }
        None
    }
}

/// Faces of a rotation system, traced with the crate-wide convention: after
/// arriving at `v` along `e`, continue along the edge after `e` in the
/// rotation of `v`. Each face is a vertex walk; isolated vertices give `[v]`.
pub fn trace_faces(g: &Graph, rotation: &[Vec<EdgeId>]) -> Result<Vec<Vec<VertexId>>, OracleError> {
    if rotation.len() != g.n() {
        return Err(OracleError::MalformedRotation("wrong number of vertices".into()));
    }
    // index of edge e in rotation[v], keyed by (v, e)
    let mut index = std::collections::HashMap::new();
    for (v, rot) in rotation.iter().enumerate() {
        let mut mine: Vec<EdgeId> = g.neighbors(v).iter().map(|&(_, e)| e).collect();
        let mut theirs = rot.clone();
        mine.sort_unstable();
        theirs.sort_unstable();
        if mine != theirs {
            return Err(OracleError::MalformedRotation(format!(
                "rotation at {v} is not a permutation of its edges"
            )));
        }
        for (i, &e) in rot.iter().enumerate() {
            index.insert((v, e), i);
        }
    }
    let mut used = HashSet::new();
    let mut faces = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        for (from, to) in [(a, b), (b, a)] {
            if used.contains(&(from, e)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut v, mut edge) = (from, to, e);
            loop {
                used.insert((u, edge));
                walk.push(u);
                let rot = &rotation[v];
                let next = rot[(index[&(v, edge)] + 1) % rot.len()];
                let w = g.other(next, v);
                u = v;
                v = w;
                edge = next;
                if u == from && edge == e {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    for (v, rot) in rotation.iter().enumerate() {
        if rot.is_empty() {
            faces.push(vec![v]);
        }
    }
    Ok(faces)
}

fn canonical_walk(w: &[VertexId]) -> Vec<VertexId> {
    (0..w.len().max(1))
        .map(|s| w[s..].iter().chain(&w[..s]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// True iff re-tracing `pe.rotation` gives exactly `pe.faces` (as cyclic
/// walks) and Euler's formula holds on every connected component.
pub fn verify_embedding(g: &Graph, pe: &PlanarEmbedding) -> Result<bool, OracleError> {
    if pe.n != g.n() {
        return Ok(false);
    }
    let traced = trace_faces(g, &pe.rotation)?;
    let mut a: Vec<Vec<VertexId>> = traced.iter().map(|w| canonical_walk(w)).collect();
    let mut b: Vec<Vec<VertexId>> = pe.faces.iter().map(|w| canonical_walk(w)).collect();
    a.sort();
    b.sort();
    if a != b {
        return Ok(false);
    }
    if !pe.faces.is_empty() && pe.external >= pe.faces.len() {
        return Ok(false);
    }
    // Euler per component
    let comps = g.connected_components();
    let mut comp_of = vec![0; g.n()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut f = vec![0i64; comps.len()];
    for w in &traced {
        f[comp_of[w[0]]] += 1;
    }
    let mut e = vec![0i64; comps.len()];
    for &(u, _) in g.edges() {
        e[comp_of[u]] += 1;
    }
    Ok(comps
        .iter()
        .enumerate()
        .all(|(i, c)| c.len() as i64 - e[i] + f[i] == 2))
}

/// Rotation system from consistently oriented triangles: in face `(x, y, z)`
/// the edge `yz` follows `yx` around `y`.
fn rotation_from_triangles(g: &Graph, tris: &[[VertexId; 3]]) -> Vec<Vec<EdgeId>> {
    let mut succ = std::collections::HashMap::new();
    for t in tris {
        for i in 0..3 {
            let (x, y, z) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            let a = g.edge_between(y, x).unwrap();
            let b = g.edge_between(y, z).unwrap();
            succ.insert((y, a), b);
        }
    }
    (0..g.n())
        .map(|v| {
            let start = g.neighbors(v)[0].1;
            let mut rot = vec![start];
            let mut e = succ[&(v, start)];
            while e != start {
                rot.push(e);
                e = succ[&(v, e)];
            }
            rot
        })
        .collect()
}

/// Random stacked triangulation: K4, then `n - 4` times a uniformly chosen
/// face receives a new vertex joined to its three corners.
pub fn gen_triangulation(n: usize, seed: u64) -> Result<(Graph, PlanarEmbedding), OracleError> {
    if n < 4 {
        return Err(OracleError::TooFewVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut tris: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]];
    for v in 4..n {
        let i = rng.gen_range(0..tris.len());
        let [a, b, c] = tris[i];
        tris[i] = [a, b, v];
        tris.push([b, c, v]);
        tris.push([c, a, v]);
        pairs.extend([(a, v), (b, v), (c, v)]);
    }
    let g = Graph::new(n, &pairs).expect("stacked triangulation is simple");
    let rotation = rotation_from_triangles(&g, &tris);
    let faces = trace_faces(&g, &rotation)?;
    let pe = PlanarEmbedding {
        n,
        rotation,
        faces,
        external: 0,
    };
    Ok((g, pe))
}

/// Uniform random simple graph with `n` vertices and `m` edges. Edge ids
/// follow the sampling order.
pub fn gen_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, OracleError> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(OracleError::TooManyEdges { m, max: total });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(VertexId, VertexId)> = sample(&mut rng, total, m)
        .into_iter()
        .map(|k| pair_of_index(n, k))
        .collect();
    Ok(Graph::new(n, &pairs).expect("distinct pairs"))
}

/// The `k`-th pair `(i, j)`, `i < j`, in row-major order.
fn pair_of_index(n: usize, mut k: usize) -> (VertexId, VertexId) {
    let mut i = 0;
    while k >= n - 1 - i {
        k -= n - 1 - i;
        i += 1;
    }
    (i, i + 1 + k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_graph, complete, cycle, wheel};

    fn k(name: &str) -> Graph {
        canonical_graph(name).unwrap()
    }

    #[test]
    fn tutte_examples() {
        assert!(tutte_planarity(&complete(4), false).unwrap());
        assert!(!tutte_planarity(&complete(5), false).unwrap());
        assert!(!tutte_planarity(&k("Petersen"), false).unwrap());
        assert!(!tutte_planarity(&k("K33"), false).unwrap());
        assert!(tutte_planarity(&k("Q3"), false).unwrap());
        assert!(matches!(
            tutte_planarity(&complete(11), false),
            Err(OracleError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn cycle_enumeration_counts() {
        // K4 has 7 cycles, K5 has 37
        assert_eq!(all_cycles(&complete(4), false).unwrap().len(), 7);
        assert_eq!(all_cycles(&complete(5), false).unwrap().len(), 37);
        assert_eq!(all_cycles(&cycle(6), false).unwrap().len(), 1);
    }

    #[test]
    fn literal_conflicts() {
        assert!(conflicts_literal(&[0, 3], &[2, 5]));
        assert!(conflicts_literal(&[0, 3], &[1, 4]));
        assert!(!conflicts_literal(&[0, 2], &[0, 3]));
        assert!(conflicts_literal(&[0, 2, 4], &[0, 2, 4]));
        assert!(!conflicts_literal(&[0, 2, 4], &[0, 2]));
    }

    #[test]
    fn minor_examples() {
        let m = brute_force_minor(&k("K33"), MinorKind::K33, false).unwrap().unwrap();
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
        assert!(verify_minor(&k("K33"), &m));
        assert!(brute_force_minor(&complete(4), MinorKind::K5, false).unwrap().is_none());
        assert!(brute_force_minor(&complete(4), MinorKind::K33, false).unwrap().is_none());
        let pet = k("Petersen");
        let m = brute_force_minor(&pet, MinorKind::K5, false).unwrap().unwrap();
        assert!(verify_minor(&pet, &m));
        let m = brute_force_minor(&pet, MinorKind::K33, false).unwrap().unwrap();
        assert!(verify_minor(&pet, &m));
        assert!(brute_force_minor(&k("K33"), MinorKind::K5, false).unwrap().is_none());
        assert!(brute_force_minor(&k("octahedron"), MinorKind::K33, false).unwrap().is_none());
    }

    #[test]
    fn verify_minor_examples() {
        let k5 = complete(5);
        let good = MinorModel {
            kind: MinorKind::K5,
            branch_sets: (0..5).map(|v| vec![v]).collect(),
            paths: vec![],
        };
        assert!(verify_minor(&k5, &good));
        let overlap = MinorModel {
            kind: MinorKind::K5,
            branch_sets: vec![vec![0, 1], vec![1], vec![2], vec![3], vec![4]],
            paths: vec![],
        };
        assert!(!verify_minor(&k5, &overlap));
        let k33 = k("K33");
        let mut missing = k33.edges().to_vec();
        missing.pop();
        let g = Graph::new(6, &missing).unwrap();
        let model = MinorModel {
            kind: MinorKind::K33,
            branch_sets: (0..6).map(|v| vec![v]).collect(),
            paths: vec![],
        };
        assert!(verify_minor(&k33, &model));
        assert!(!verify_minor(&g, &model));
    }

    #[test]
    fn verify_minor_with_paths() {
        // K5 with edge (0,1) subdivided by vertex 5
        let mut pairs: Vec<_> = complete(5).edges()[1..].to_vec();
        pairs.push((0, 5));
        pairs.push((5, 1));
        let g = Graph::new(6, &pairs).unwrap();
        let mut m = MinorModel {
            kind: MinorKind::K5,
            branch_sets: (0..5).map(|v| vec![v]).collect(),
            paths: vec![vec![0, 5, 1]],
        };
        assert!(verify_minor(&g, &m));
        m.paths.push(vec![1, 5, 0]);
        assert!(!verify_minor(&g, &m), "paths must be internally disjoint");
    }

    #[test]
    fn verify_embedding_examples() {
        let k4 = complete(4);
        let rotation = vec![vec![0, 1, 2], vec![0, 4, 3], vec![1, 3, 5], vec![2, 5, 4]];
        let pe = PlanarEmbedding {
            n: 4,
            faces: trace_faces(&k4, &rotation).unwrap(),
            rotation: rotation.clone(),
            external: 0,
        };
        assert!(verify_embedding(&k4, &pe).unwrap());
        let mut flipped = pe.clone();
        flipped.rotation[0].reverse();
        assert!(!verify_embedding(&k4, &flipped).unwrap());

        let k5 = complete(5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let rotation: Vec<Vec<EdgeId>> = (0..5)
                .map(|v| {
                    let mut r: Vec<EdgeId> = k5.neighbors(v).iter().map(|&(_, e)| e).collect();
                    rand::seq::SliceRandom::shuffle(&mut r[..], &mut rng);
                    r
                })
                .collect();
            let pe = PlanarEmbedding {
                n: 5,
                faces: trace_faces(&k5, &rotation).unwrap(),
                rotation,
                external: 0,
            };
            assert!(!verify_embedding(&k5, &pe).unwrap());
        }
        let bad = PlanarEmbedding {
            n: 4,
            rotation: vec![vec![0], vec![], vec![], vec![]],
            faces: vec![],
            external: 0,
        };
        assert!(verify_embedding(&k4, &bad).is_err());
    }

    #[test]
    fn facelike_examples() {
        let k4 = complete(4);
        let f = enumerate_facelike_cycles(&k4, false).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|c| c.len() == 3));
        let w5 = wheel(5);
        let f = enumerate_facelike_cycles(&w5, false).unwrap();
        assert_eq!(f.len(), 6);
        assert_eq!(f.iter().filter(|c| c.len() == 5).count(), 1);
        let c6 = cycle(6);
        assert_eq!(enumerate_facelike_cycles(&c6, false).unwrap().len(), 1);
        // induced-only enumeration agrees with filtering all cycles
        for g in [k("Q3"), k("octahedron"), k("prism"), wheel(6), k("Petersen")] {
            let mut want: Vec<_> = all_cycles(&g, false)
                .unwrap()
                .into_iter()
                .map(|c| Cycle::from_vertices(&g, c).unwrap())
                .filter(|c| {
                    let f = classify_cycle(&g, c).unwrap();
                    f.induced && f.nonseparating
                })
                .collect();
            want.sort_by(|a, b| a.edges().cmp(b.edges()));
            let got = enumerate_facelike_cycles(&g, false).unwrap();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn generators() {
        let (g, pe) = gen_triangulation(4, 0).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(pe.faces.len(), 4);
        let (g, pe) = gen_triangulation(10, 1).unwrap();
        assert_eq!(g.m(), 24);
        assert!(verify_embedding(&g, &pe).unwrap());
        assert!(is_triconnected_bruteforce(&g));
        let (g, pe) = gen_triangulation(100, 7).unwrap();
        assert!(verify_embedding(&g, &pe).unwrap());
        assert_eq!(gen_triangulation(100, 7).unwrap().0, g);
        assert!(gen_triangulation(3, 0).is_err());

        let g = gen_gnm(5, 10, 9).unwrap();
        assert_eq!(g.m(), 10);
        let g = gen_gnm(4, 3, 1).unwrap();
        assert_eq!(g.m(), 3);
        assert!(gen_gnm(3, 4, 0).is_err());
        assert_eq!(gen_gnm(30, 60, 5).unwrap(), gen_gnm(30, 60, 5).unwrap());
    }

    #[test]
    fn pair_indexing_covers_all_pairs() {
        let n = 7;
        let pairs: Vec<_> = (0..21).map(|k| pair_of_index(n, k)).collect();
        let mut expect = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                expect.push((i, j));
            }
        }
        assert_eq!(pairs, expect);
    }

    #[test]
    fn separating_pairs() {
        assert!(separating_pairs_bruteforce(&complete(4)).is_empty());
        assert_eq!(separating_pairs_bruteforce(&cycle(4)), vec![(0, 2), (1, 3)]);
    }
}
