//! Extraction of a K5 or K3,3 minor from a non-planar graph.
//!
//! The route: find the shortest non-planar edge prefix, pick a cycle of the
//! planar remainder whose conflict graph is not bipartite, take an induced odd
//! cycle of bridges, and either reduce it to a K5 subdivision (five or more
//! bridges) or brute force a small reduced graph (three bridges).

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::conflict::{interleaving, two_color, BridgeKind, ConflictGraph, TwoColoring, WitnessMode};
use crate::decompose::blocks;
use crate::embed3::{embed, is_planar};
use crate::embedding::{dart_tail, trace_darts};
use crate::error::KuratowskiError;
use crate::graph::{Cycle, EdgeId, EdgeSet, Graph, VertexId};
pub use crate::oracle::MinorKind;
use crate::oracle::{brute_force_minor, verify_minor, MinorModel};

pub type KuratowskiMinor = MinorModel;

fn post(msg: impl Into<String>) -> KuratowskiError {
    KuratowskiError::Postcondition(msg.into())
}

/// `G'`: the first `edge_map.len()` edges of the chosen order, over all
/// vertices of the input. Removing the last edge (`culprit`, joining `x` and
/// `y`) leaves a planar graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalPrefix {
    pub graph: Graph,
    pub edge_map: Vec<EdgeId>,
    pub culprit: EdgeId,
    pub x: VertexId,
    pub y: VertexId,
}

fn prefix_graph(g: &Graph, order: &[EdgeId], len: usize) -> Graph {
    let pairs: Vec<_> = order[..len].iter().map(|&e| g.endpoints(e)).collect();
    Graph::new(g.n(), &pairs).expect("prefix of a simple graph")
}

/// Binary search for the shortest non-planar prefix of `order` (input order
/// when `None`).
pub fn minimal_nonplanar_prefix(g: &Graph, order: Option<&[EdgeId]>) -> Result<MinimalPrefix, KuratowskiError> {
    let default: Vec<EdgeId>;
    let order = match order {
        Some(o) => {
            let mut seen = vec![false; g.m()];
            if o.len() != g.m() || o.iter().any(|&e| e >= g.m() || std::mem::replace(&mut seen[e], true)) {
                return Err(post("order is not a permutation of the edges"));
            }
            o
        }
        None => {
            default = (0..g.m()).collect();
            &default
        }
    };
    if is_planar(g) {
        return Err(KuratowskiError::Planar);
    }
    // invariant: prefix(lo) planar, prefix(hi) not
    let (mut lo, mut hi) = (0, g.m());
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if is_planar(&prefix_graph(g, order, mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let graph = prefix_graph(g, order, hi);
    let culprit = hi - 1;
    let (x, y) = graph.endpoints(culprit);
    Ok(MinimalPrefix {
        graph,
        edge_map: order[..hi].to_vec(),
        culprit,
        x,
        y,
    })
}

/// A cycle whose conflict graph is not bipartite.
///
/// `graph` is the block of `G' - culprit` that carries the obstruction plus
/// one edge joining its terminals `s, t`. When that edge is not an edge of
/// `G'`, `virtual_path` is the path of `G'` it stands for.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessCycle {
    pub graph: Graph,
    pub cycle: Cycle,
    /// Faces of the embedded block, from one containing `s` to one
    /// containing `t`.
    pub dual_path: Vec<usize>,
    pub conflict: ConflictGraph,
    pub terminals: (VertexId, VertexId),
    pub virtual_path: Option<Vec<VertexId>>,
}

fn bfs_path(g: &Graph, from: VertexId, to: VertexId, allowed: impl Fn(VertexId) -> bool) -> Option<Vec<VertexId>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut v = to;
            while v != from {
                v = prev[v];
                path.push(v);
            }
            path.reverse();
            return Some(path);
        }
        for &(w, _) in g.neighbors(u) {
            if prev[w] == usize::MAX && allowed(w) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Block of `rest = G' - xy` that becomes non-planar once its terminals on
/// the x-y chain of blocks are joined: `(edges, s, t, chain)`.
fn critical_block(
    rest: &Graph,
    x: VertexId,
    y: VertexId,
) -> Result<(Vec<EdgeId>, VertexId, VertexId, Option<Vec<VertexId>>), KuratowskiError> {
    let bct = blocks(rest);
    let nb = bct.blocks.len();
    let mut cut_index = HashMap::new();
    for (i, &c) in bct.cut_vertices.iter().enumerate() {
        cut_index.insert(c, nb + i);
    }
    let mut adj = vec![Vec::new(); nb + bct.cut_vertices.len()];
    for &(b, c) in &bct.tree {
        let ci = cut_index[&c];
        adj[b].push(ci);
        adj[ci].push(b);
    }
    let node_of = |v: VertexId| -> Option<usize> {
        cut_index
            .get(&v)
            .copied()
            .or_else(|| bct.blocks.iter().position(|b| b.vertices.binary_search(&v).is_ok()))
    };
    let (Some(sx), Some(sy)) = (node_of(x), node_of(y)) else {
        return Err(post("culprit endpoint is isolated in the planar remainder"));
    };
    let mut prev = vec![usize::MAX; adj.len()];
    prev[sx] = sx;
    let mut queue = VecDeque::from([sx]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    if prev[sy] == usize::MAX {
        return Err(post("culprit joins two components"));
    }
    let mut nodes = vec![sy];
    while *nodes.last().unwrap() != sx {
        nodes.push(prev[*nodes.last().unwrap()]);
    }
    nodes.reverse();
    // blocks along the chain with their terminals
    let mut chain = Vec::new();
    for (i, &node) in nodes.iter().enumerate() {
        if node >= nb {
            continue;
        }
        let s = if i == 0 { x } else { bct.cut_vertices[nodes[i - 1] - nb] };
        let t = if i + 1 == nodes.len() { y } else { bct.cut_vertices[nodes[i + 1] - nb] };
        chain.push((node, s, t));
    }
    for &(b, s, t) in &chain {
        let block = &bct.blocks[b];
        let mut pairs: Vec<_> = block.edges.iter().map(|e| rest.endpoints(e)).collect();
        if pairs.iter().any(|&(a, c)| (a, c) == (s, t) || (a, c) == (t, s)) {
            continue;
        }
        pairs.push((s, t));
        let h = Graph::new(rest.n(), &pairs)?;
        if is_planar(&h) {
            continue;
        }
        let edges = block.edges.as_slice().to_vec();
        if chain.len() == 1 {
            return Ok((edges, s, t, None));
        }
        let inside: HashSet<VertexId> = block.vertices.iter().copied().collect();
        let first = bfs_path(rest, s, x, |v| v == x || !inside.contains(&v)).ok_or_else(|| post("no chain path to x"))?;
        let second = bfs_path(rest, y, t, |v| v == t || !inside.contains(&v)).ok_or_else(|| post("no chain path to y"))?;
        let mut path = first;
        path.extend(second);
        return Ok((edges, s, t, Some(path)));
    }
    Err(post("no block of the x-y chain is critical"))
}

fn is_bipartite_conflict(h: &ConflictGraph) -> bool {
    h.node_count() == 0 || matches!(two_color(h, 0), Ok(TwoColoring::Colors(_)))
}

/// Finds a cycle through the culprit's terminals whose conflict graph is not
/// bipartite, using a path in the dual of the embedded critical block that
/// avoids every face touching a terminal except its ends.
pub fn witness_cycle(mp: &MinimalPrefix) -> Result<WitnessCycle, KuratowskiError> {
    let rest_pairs: Vec<_> = (0..mp.graph.m())
        .filter(|&e| e != mp.culprit)
        .map(|e| mp.graph.endpoints(e))
        .collect();
    let rest = Graph::new(mp.graph.n(), &rest_pairs)?;
    if !is_planar(&rest) {
        return Err(post("prefix is not minimal"));
    }
    let (block_edges, s, t, virtual_path) = critical_block(&rest, mp.x, mp.y)?;
    let mut pairs: Vec<_> = block_edges.iter().map(|&e| rest.endpoints(e)).collect();
    let block = Graph::new(rest.n(), &pairs)?;
    pairs.push((s, t));
    let graph = Graph::new(rest.n(), &pairs)?;

    let emb = embed(&block).map_err(|_| post("critical block is not planar"))?;
    let traced = trace_darts(&block, &emb.rotation).map_err(|e| post(e.to_string()))?;
    let nf = traced.faces.len();
    let face_edges: Vec<EdgeSet> = traced
        .faces
        .iter()
        .map(|f| EdgeSet::xor_all(block.m(), f.iter().map(|&d| EdgeSet::from_sorted_unchecked(vec![d / 2])).collect::<Vec<_>>().iter()))
        .collect();
    let touches = |f: usize, v: VertexId| traced.faces[f].iter().any(|&d| dart_tail(&block, d) == v);
    let blocked: Vec<bool> = (0..nf).map(|f| touches(f, s) || touches(f, t)).collect();
    let mut dual = vec![Vec::new(); nf];
    for e in 0..block.m() {
        let (a, b) = (traced.face_of[2 * e], traced.face_of[2 * e + 1]);
        if a != b {
            dual[a].push(b);
            dual[b].push(a);
        }
    }
    let fs: Vec<usize> = (0..nf).filter(|&f| touches(f, s)).collect();
    let ft: Vec<usize> = (0..nf).filter(|&f| touches(f, t)).collect();
    for &a in &fs {
        for &b in &ft {
            if a == b {
                return Err(post("terminals share a face"));
            }
            let mut prev = vec![usize::MAX; nf];
            prev[a] = a;
            let mut queue = VecDeque::from([a]);
            while let Some(u) = queue.pop_front() {
                if u == b {
                    break;
                }
                for &w in &dual[u] {
                    if prev[w] == usize::MAX && (w == b || !blocked[w]) {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if prev[b] == usize::MAX {
                continue;
            }
            let mut path = vec![b];
            while *path.last().unwrap() != a {
                path.push(prev[*path.last().unwrap()]);
            }
            path.reverse();
            let set = EdgeSet::xor_all(block.m(), path.iter().map(|&f| &face_edges[f]));
            let Ok(cycle) = Cycle::from_edge_set(&graph, &set) else {
                continue;
            };
            if !cycle.vertices().contains(&s) || !cycle.vertices().contains(&t) {
                continue;
            }
            let conflict = crate::conflict::conflict_graph(&graph, &cycle)?;
            if is_bipartite_conflict(&conflict) {
                continue;
            }
            return Ok(WitnessCycle {
                graph,
                cycle,
                dual_path: path,
                conflict,
                terminals: (s, t),
                virtual_path,
            });
        }
    }
    // Every face pair gave a pinched region. Any cycle of the block through
    // both terminals works as well: its bridges each embed with it, so a
    // bipartite conflict graph would make the block plus `st` planar.
    let vertices = cycle_through(&block, s, t).ok_or_else(|| post("terminals are not 2-connected"))?;
    let cycle = Cycle::from_vertices(&graph, vertices)?;
    let conflict = crate::conflict::conflict_graph(&graph, &cycle)?;
    if is_bipartite_conflict(&conflict) {
        return Err(post("cycle through the terminals has bipartite conflicts"));
    }
    Ok(WitnessCycle {
        graph,
        cycle,
        dual_path: Vec::new(),
        conflict,
        terminals: (s, t),
        virtual_path,
    })
}

/// A simple cycle through `s` and `t`, from two internally disjoint paths
/// found by unit-capacity augmentation on the vertex-split graph.
fn cycle_through(g: &Graph, s: VertexId, t: VertexId) -> Option<Vec<VertexId>> {
    let n = g.n();
    // node 2v is v's entry, 2v+1 its exit; arcs are stored in pairs
    let mut head = Vec::new();
    let mut cap = Vec::new();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let mut add = |a: usize, b: usize, c: i32, out: &mut Vec<Vec<usize>>| {
        out[a].push(head.len());
        head.push(b);
        cap.push(c);
        out[b].push(head.len());
        head.push(a);
        cap.push(0);
    };
    for v in 0..n {
        add(2 * v, 2 * v + 1, if v == s || v == t { 2 } else { 1 }, &mut out);
    }
    for &(u, v) in g.edges() {
        add(2 * u + 1, 2 * v, 1, &mut out);
        add(2 * v + 1, 2 * u, 1, &mut out);
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    for _ in 0..2 {
        let mut via = vec![usize::MAX; 2 * n];
        let mut queue = VecDeque::from([src]);
        via[src] = usize::MAX - 1;
        while let Some(a) = queue.pop_front() {
            for &arc in &out[a] {
                let b = head[arc];
                if cap[arc] > 0 && via[b] == usize::MAX {
                    via[b] = arc;
                    queue.push_back(b);
                }
            }
        }
        if via[dst] == usize::MAX {
            return None;
        }
        let mut b = dst;
        while b != src {
            let arc = via[b];
            cap[arc] -= 1;
            cap[arc ^ 1] += 1;
            b = head[arc ^ 1];
        }
    }
    // flow on graph edges after cancelling opposite units
    let mut next: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let base = 2 * n + 4 * i;
        let (uv, vu) = (cap[base] == 0, cap[base + 2] == 0);
        match (uv, vu) {
            (true, false) => next[u].push(v),
            (false, true) => next[v].push(u),
            _ => {}
        }
    }
    let starts = next[s].clone();
    let mut walk = |mut v: VertexId| {
        let mut p = vec![s];
        while v != t {
            p.push(v);
            v = next[v].pop()?;
        }
        Some(p)
    };
    if starts.len() != 2 {
        return None;
    }
    let mut first = walk(starts[0])?;
    let second = walk(starts[1])?;
    first.push(t);
    first.extend(second[1..].iter().rev());
    Some(first)
}

/// An induced odd cycle of the conflict graph, as bridge indices in cycle
/// order.
pub fn induced_odd_cycle(h: &ConflictGraph) -> Result<Vec<usize>, KuratowskiError> {
    let k = h.node_count();
    let mut color = vec![u8::MAX; k];
    let mut parent = vec![usize::MAX; k];
    let mut depth = vec![0usize; k];
    for root in 0..k {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in h.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let tree_path = |mut a: usize, mut b: usize| -> Vec<usize> {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        while a != b {
            if depth[a] >= depth[b] {
                left.push(a);
                a = parent[a];
            } else {
                right.push(b);
                b = parent[b];
            }
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    };
    let mut clash = None;
    'outer: for u in 0..k {
        for &w in h.neighbors(u) {
            if u < w && color[u] == color[w] {
                clash = Some((u, w));
                break 'outer;
            }
        }
    }
    let (mut a, mut b) = clash.ok_or(KuratowskiError::Bipartite)?;
    // shrink until every chord of the fundamental cycle is bichromatic
    let path = loop {
        let path = tree_path(a, b);
        let on: HashMap<usize, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut mono = None;
        for (i, &u) in path.iter().enumerate() {
            for &w in h.neighbors(u) {
                if let Some(&j) = on.get(&w) {
                    if j > i + 1 && (i, j) != (0, path.len() - 1) && color[u] == color[w] {
                        mono = Some((u, w));
                    }
                }
            }
        }
        match mono {
            Some((c, d)) => (a, b) = (c, d),
            None => break path,
        }
    };
    let on: HashMap<usize, usize> = path.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let last = path.len() - 1;
    let mut out = vec![path[0]];
    let mut i = 0;
    while i < last {
        let mut next = i + 1;
        for &w in h.neighbors(path[i]) {
            if let Some(&j) = on.get(&w) {
                if j > next && !(i == 0 && j == last) {
                    next = j;
                }
            }
        }
        out.push(path[next]);
        i = next;
    }
    let len = out.len();
    if len < 3 || len % 2 == 0 {
        return Err(post("odd cycle walk has wrong parity"));
    }
    for p in 0..len {
        for q in p + 1..len {
            let adjacent = q == p + 1 || (p == 0 && q == len - 1);
            if h.has_edge(out[p], out[q]) != adjacent {
                return Err(post("odd cycle is not induced"));
            }
        }
    }
    Ok(out)
}

/// The odd cycle of bridges reduced to one path per bridge. `cycle` is the
/// cycle's vertex order rotated and oriented so that the attachment pairs
/// read `u0, v(2k), u1, v0, u2, v1, ..., u(2k), v(2k-1)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathReduction {
    pub graph: Graph,
    pub cycle: Vec<VertexId>,
    pub bridges: Vec<usize>,
    pub pairs: Vec<(VertexId, VertexId)>,
    pub paths: Vec<Vec<VertexId>>,
}

fn strictly_interleave(p: (usize, usize), q: (usize, usize)) -> bool {
    let (lo, hi) = (p.0.min(p.1), p.0.max(p.1));
    if q.0 == lo || q.0 == hi || q.1 == lo || q.1 == hi {
        return false;
    }
    let inside = |x: usize| lo < x && x < hi;
    inside(q.0) != inside(q.1)
}

/// Picks one attachment pair per bridge so that cyclically consecutive pairs
/// interleave. Returns positions on the cycle.
fn choose_pairs(cands: &[Vec<(usize, usize)>]) -> Option<Vec<(usize, usize)>> {
    let r = cands.len();
    for first in &cands[0] {
        // best[i][c]: predecessor choice index for candidate c of bridge i
        let mut reach: Vec<Vec<usize>> = vec![Vec::new(); r];
        let mut alive = vec![true];
        reach[0] = vec![0];
        let mut prev_cands = vec![*first];
        for i in 1..r {
            let mut here = vec![usize::MAX; cands[i].len()];
            let mut any = vec![false; cands[i].len()];
            for (c, q) in cands[i].iter().enumerate() {
                for (p_idx, p) in prev_cands.iter().enumerate() {
                    if alive[p_idx] && strictly_interleave(*p, *q) {
                        here[c] = p_idx;
                        any[c] = true;
                        break;
                    }
                }
            }
            reach[i] = here;
            alive = any;
            prev_cands = cands[i].clone();
        }
        for (c, q) in cands[r - 1].iter().enumerate() {
            if alive[c] && strictly_interleave(*q, *first) {
                let mut out = vec![(0, 0); r];
                let mut idx = c;
                for i in (1..r).rev() {
                    out[i] = cands[i][idx];
                    idx = reach[i][idx];
                }
                out[0] = *first;
                return Some(out);
            }
        }
    }
    None
}

fn pairs_of(points: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            out.push((points[i], points[j]));
        }
    }
    out
}

/// Path from `u` to `v` through the interior of a component bridge.
fn path_through(g: &Graph, interior: &[VertexId], u: VertexId, v: VertexId) -> Option<Vec<VertexId>> {
    if interior.is_empty() {
        return g.has_edge(u, v).then(|| vec![u, v]);
    }
    let inside: HashSet<VertexId> = interior.iter().copied().collect();
    let mut prev: HashMap<VertexId, VertexId> = HashMap::new();
    let mut queue = VecDeque::new();
    for &(w, _) in g.neighbors(u) {
        if inside.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, u);
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        if g.has_edge(x, v) {
            let mut path = vec![v, x];
            let mut c = x;
            while prev[&c] != u {
                c = prev[&c];
                path.push(c);
            }
            path.push(u);
            path.reverse();
            return Some(path);
        }
        for &(w, _) in g.neighbors(x) {
            if inside.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, x);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Reduces each bridge of an induced odd cycle (length at least five) to a
/// single path between two attachments.
pub fn reduce_bridges_to_paths(wc: &WitnessCycle, odd: &[usize]) -> Result<PathReduction, KuratowskiError> {
    let r = odd.len();
    if r < 5 || r % 2 == 0 {
        return Err(KuratowskiError::CycleTooShort);
    }
    let h = &wc.conflict;
    let cyc = &h.cycle;
    let len = cyc.len();
    let pos = cyc.positions(wc.graph.n());
    let att: Vec<Vec<usize>> = odd
        .iter()
        .map(|&b| {
            let mut p: Vec<usize> = h.bridges[b].attachments.iter().map(|&v| pos[v]).collect();
            p.sort_unstable();
            p
        })
        .collect();
    let mut keep: Vec<Vec<usize>> = vec![Vec::new(); r];
    for i in 0..r {
        let j = (i + 1) % r;
        let w = interleaving(&att[i], &att[j]).ok_or(KuratowskiError::RedirectToTriangle(odd[i], odd[j]))?;
        keep[i].extend([w[0], w[2]]);
        keep[j].extend([w[1], w[3]]);
    }
    let narrow: Vec<_> = keep
        .iter_mut()
        .map(|k| {
            k.sort_unstable();
            k.dedup();
            pairs_of(k)
        })
        .collect();
    let chosen = match choose_pairs(&narrow) {
        Some(c) => c,
        None => {
            let wide: Vec<_> = att.iter().map(|a| pairs_of(a)).collect();
            choose_pairs(&wide).ok_or_else(|| post("no consistent attachment pairs"))?
        }
    };
    let (order, labels) = label_pattern(&chosen, len).ok_or_else(|| post("attachment pairs do not follow the odd-cycle pattern"))?;
    let vert = |p: usize| cyc.vertices()[p];
    let mut cycle: Vec<VertexId> = order.iter().map(|&p| vert(p)).collect();
    cycle.shrink_to_fit();
    let mut pairs = Vec::with_capacity(r);
    let mut paths = Vec::with_capacity(r);
    for (i, &(pu, pv)) in labels.iter().enumerate() {
        let (u, v) = (vert(pu), vert(pv));
        let b = &h.bridges[odd[i]];
        let interior: &[VertexId] = if b.kind == BridgeKind::Chord { &[] } else { &b.vertices };
        let path = path_through(&wc.graph, interior, u, v).ok_or_else(|| post("bridge path not found"))?;
        pairs.push((u, v));
        paths.push(path);
    }
    Ok(PathReduction {
        graph: wc.graph.clone(),
        cycle,
        bridges: odd.to_vec(),
        pairs,
        paths,
    })
}

/// Orients the cycle and labels each chosen pair `(u_i, v_i)`. Returns the
/// cycle positions in walking order starting at `u0`, plus the labels.
#[allow(clippy::type_complexity)]
fn label_pattern(chosen: &[(usize, usize)], len: usize) -> Option<(Vec<usize>, Vec<(usize, usize)>)> {
    let r = chosen.len();
    for forward in [true, false] {
        for flip0 in [false, true] {
            let (u0, v0) = if flip0 { (chosen[0].1, chosen[0].0) } else { chosen[0] };
            let off = |p: usize| if forward { (p + len - u0) % len } else { (u0 + len - p) % len };
            let mut labels = vec![(u0, v0)];
            for (i, &(a, b)) in chosen.iter().enumerate().skip(1) {
                let (first, second) = if off(a) <= off(b) { (a, b) } else { (b, a) };
                labels.push(if i == r - 1 { (second, first) } else { (first, second) });
            }
            // slot sequence u0, v(r-1), u1, v0, u2, v1, ...
            let mut slots = vec![labels[0].0, labels[r - 1].1];
            for i in 1..r {
                slots.push(labels[i].0);
                slots.push(labels[i - 1].1);
            }
            let last = slots.len() - 1;
            let offs: Vec<usize> = slots
                .iter()
                .enumerate()
                .map(|(j, &p)| if j == last && p == u0 { len } else { off(p) })
                .collect();
            let ok = (0..last).all(|j| offs[j] < offs[j + 1] || (j % 2 == 1 && offs[j] == offs[j + 1]))
                && offs[last] <= len;
            if ok {
                let order = (0..len).map(|k| if forward { (u0 + k) % len } else { (u0 + len - k) % len }).collect();
                return Some((order, labels));
            }
        }
    }
    None
}

/// Builds a K5 subdivision from a path reduction with an odd number (at
/// least five) of bridge paths.
pub fn k5_minor_from_reduction(pr: &PathReduction) -> Result<KuratowskiMinor, KuratowskiError> {
    let mut cycle = pr.cycle.clone();
    let mut chords: Vec<Vec<VertexId>> = pr.paths.clone();
    if chords.len() < 5 || chords.len() % 2 == 0 {
        return Err(KuratowskiError::CycleTooShort);
    }
    let index = |cycle: &[VertexId]| -> HashMap<VertexId, usize> { cycle.iter().enumerate().map(|(i, &v)| (v, i)).collect() };
    let ends = |c: &Vec<VertexId>| (c[0], c[c.len() - 1]);
    while chords.len() > 5 {
        // fold chords 1, 2, 3 into one chord and absorb chord 2 into the cycle
        let pos = index(&cycle);
        let (u2, v2) = ends(&chords[2]);
        let (_, v1) = ends(&chords[1]);
        let (u3, _) = ends(&chords[3]);
        let (pu2, pv1, pu3, pv2) = (pos[&u2], pos[&v1], pos[&u3], pos[&v2]);
        if !(pu2 < pv1 && pv1 <= pu3 && pu3 < pv2) {
            return Err(post("fold positions out of order"));
        }
        let mut merged = chords[1].clone();
        merged.extend_from_slice(&cycle[pv1 + 1..=pu3]);
        merged.extend_from_slice(&chords[3][1..]);
        let mut next = cycle[..pu2].to_vec();
        next.extend_from_slice(&chords[2]);
        next.extend_from_slice(&cycle[pv2 + 1..]);
        cycle = next;
        let mut rest = vec![chords[0].clone(), merged];
        rest.extend(chords.drain(4..));
        chords = rest;
    }
    let pos = index(&cycle);
    let l = cycle.len();
    let (u, v): (Vec<_>, Vec<_>) = chords.iter().map(ends).unzip();
    let slots = [u[0], v[4], u[1], v[0], u[2], v[1], u[3], v[2], u[4], v[3]];
    let off = |j: usize| -> usize {
        let j = j % 10;
        if j == 9 && slots[9] == slots[0] {
            l
        } else {
            pos[&slots[j]]
        }
    };
    let mut branch_sets = Vec::with_capacity(5);
    for m in 0..5 {
        let (a, b) = (off(2 * m + 1), if m == 4 { l } else { off(2 * m + 2) });
        let mut set: Vec<VertexId> = (a..=b).map(|i| cycle[i % l]).collect();
        set.sort_unstable();
        set.dedup();
        branch_sets.push(set);
    }
    let mut paths: Vec<Vec<VertexId>> = Vec::with_capacity(10);
    for m in 0..5 {
        let (a, b) = if m == 4 { (0, off(1)) } else { (off(2 * m + 2), off(2 * m + 3)) };
        paths.push(cycle[a..=b].to_vec());
    }
    paths.extend(chords);
    let minor = MinorModel {
        kind: MinorKind::K5,
        branch_sets,
        paths,
    };
    if !verify_minor(&pr.graph, &minor) {
        return Err(post("assembled K5 model does not verify"));
    }
    Ok(minor)
}

/// Size of the graph brute forced in the three-bridge case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedSize {
    pub vertices: usize,
    pub edges: usize,
}

/// Three mutually conflicting bridges: keep at most four attachments per
/// bridge, contract each bridge interior to a hub and each cycle arc between
/// kept attachments to an edge, then search the small graph exhaustively.
pub fn triangle_case(wc: &WitnessCycle, tri: [usize; 3]) -> Result<(KuratowskiMinor, ReducedSize), KuratowskiError> {
    let h = &wc.conflict;
    let cyc = &h.cycle;
    let len = cyc.len();
    let pos = cyc.positions(wc.graph.n());
    let mut keep: Vec<Vec<usize>> = vec![Vec::new(); 3];
    for i in 0..3 {
        for j in i + 1..3 {
            let (a, b) = (tri[i], tri[j]);
            let w = h.witness(a, b).ok_or_else(|| post("triangle bridges do not conflict"))?;
            match w.mode {
                WitnessMode::Interleave => {
                    // the stored witness lists the lower-indexed bridge first
                    let (lo, hi) = if a < b { (i, j) } else { (j, i) };
                    keep[lo].extend([w.points[0], w.points[2]]);
                    keep[hi].extend([w.points[1], w.points[3]]);
                }
                WitnessMode::Shared3 => {
                    for &v in &w.points {
                        keep[i].push(pos[v]);
                        keep[j].push(pos[v]);
                    }
                }
            }
        }
    }
    let mut points: Vec<usize> = keep.iter().flatten().copied().collect();
    points.sort_unstable();
    points.dedup();
    let k = points.len();
    if k < 3 {
        return Err(post("fewer than three kept attachments"));
    }
    let index: HashMap<usize, usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut pairs: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut hubs: Vec<(usize, &[VertexId])> = Vec::new();
    let mut next = k;
    for (i, kept) in keep.iter_mut().enumerate() {
        kept.sort_unstable();
        kept.dedup();
        let b = &h.bridges[tri[i]];
        match b.kind {
            BridgeKind::Chord => {
                if kept.len() != 2 {
                    return Err(post("chord with more than two attachments"));
                }
                pairs.push((index[&kept[0]], index[&kept[1]]));
            }
            BridgeKind::Component => {
                for p in kept.iter() {
                    pairs.push((next, index[p]));
                }
                hubs.push((next, &b.vertices));
                next += 1;
            }
        }
    }
    let mut seen = HashSet::new();
    pairs.retain(|&(a, b)| seen.insert((a.min(b), a.max(b))));
    let size = ReducedSize {
        vertices: next,
        edges: pairs.len(),
    };
    if size.vertices > 15 || size.edges > 24 {
        return Err(post(format!("reduced graph too large: {} vertices, {} edges", size.vertices, size.edges)));
    }
    let reduced = Graph::new(next, &pairs)?;
    let found = match brute_force_minor(&reduced, MinorKind::K33, false).map_err(|e| post(e.to_string()))? {
        Some(m) => m,
        None => brute_force_minor(&reduced, MinorKind::K5, false)
            .map_err(|e| post(e.to_string()))?
            .ok_or_else(|| post("reduced graph has no Kuratowski minor"))?,
    };
    // expansion: images of reduced vertices and interiors of arcs
    let vert = |p: usize| cyc.vertices()[p];
    let image = |x: usize| -> Vec<VertexId> {
        if x < k {
            vec![vert(points[x])]
        } else {
            hubs.iter().find(|h| h.0 == x).map(|h| h.1.to_vec()).unwrap_or_default()
        }
    };
    let arc = |i: usize| -> Vec<VertexId> {
        let (a, b) = (points[i], points[(i + 1) % k]);
        let steps = (b + len - a) % len;
        (0..=steps).map(|s| vert((a + s) % len)).collect()
    };
    let mut owner = vec![usize::MAX; next];
    for (s, set) in found.branch_sets.iter().enumerate() {
        for &x in set {
            owner[x] = s;
        }
    }
    let mut branch_sets: Vec<Vec<VertexId>> = found.branch_sets.iter().map(|s| s.iter().flat_map(|&x| image(x)).collect()).collect();
    let mut paths = Vec::new();
    for i in 0..k {
        let (a, b) = (owner[i], owner[(i + 1) % k]);
        let full = arc(i);
        if full.len() <= 2 || a == usize::MAX || b == usize::MAX {
            continue;
        }
        if a == b {
            branch_sets[a].extend_from_slice(&full[1..full.len() - 1]);
        } else {
            paths.push(full);
        }
    }
    for set in &mut branch_sets {
        set.sort_unstable();
    }
    let minor = MinorModel {
        kind: found.kind,
        branch_sets,
        paths,
    };
    if !verify_minor(&wc.graph, &minor) {
        return Err(post("expanded triangle model does not verify"));
    }
    Ok((minor, size))
}

/// Rewrites a model of the witness graph as a model of `G'` by replacing the
/// terminal edge with the chain path it stands for.
fn expand_virtual(minor: &mut KuratowskiMinor, s: VertexId, t: VertexId, chain: &[VertexId]) {
    let interior = &chain[1..chain.len() - 1];
    let owner = |v: VertexId| minor.branch_sets.iter().position(|set| set.contains(&v));
    match (owner(s), owner(t)) {
        (Some(a), Some(b)) if a == b => {
            minor.branch_sets[a].extend_from_slice(interior);
            return;
        }
        (Some(_), Some(_)) => {
            minor.paths.push(chain.to_vec());
            return;
        }
        _ => {}
    }
    for p in &mut minor.paths {
        if let Some(i) = p.windows(2).position(|w| (w[0], w[1]) == (s, t) || (w[0], w[1]) == (t, s)) {
            let mut piece = chain.to_vec();
            if p[i] == t {
                piece.reverse();
            }
            p.splice(i..i + 2, piece);
            return;
        }
    }
}

/// Drops branch set vertices one at a time while the model stays valid.
fn shrink(g: &Graph, minor: &mut KuratowskiMinor) {
    for s in 0..minor.branch_sets.len() {
        let mut i = 0;
        while i < minor.branch_sets[s].len() && minor.branch_sets[s].len() > 1 {
            let v = minor.branch_sets[s].remove(i);
            if verify_minor(g, minor) {
                continue;
            }
            minor.branch_sets[s].insert(i, v);
            i += 1;
        }
    }
}

/// How a minor was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Route {
    /// Induced odd cycle of at least five bridges folded into a K5.
    OddCycle { bridges: usize },
    /// Three conflicting bridges, brute forced after reduction.
    Triangle { vertices: usize, edges: usize },
    /// Edge deletion down to a minimal non-planar subgraph.
    Deletion,
}

/// A K5 or K3,3 minor of a non-planar graph, verified before return.
pub fn find_kuratowski(g: &Graph) -> Result<KuratowskiMinor, KuratowskiError> {
    find_kuratowski_traced(g).map(|(m, _)| m)
}

pub fn find_kuratowski_traced(g: &Graph) -> Result<(KuratowskiMinor, Route), KuratowskiError> {
    let mp = minimal_nonplanar_prefix(g, None)?;
    let (mut minor, route) = match conflict_route(&mp) {
        Ok(found) => found,
        Err(_) => (deletion_route(&mp.graph)?, Route::Deletion),
    };
    shrink(g, &mut minor);
    if !verify_minor(g, &minor) {
        return Err(post("minor does not verify against the input"));
    }
    Ok((minor, route))
}

fn conflict_route(mp: &MinimalPrefix) -> Result<(KuratowskiMinor, Route), KuratowskiError> {
    let wc = witness_cycle(mp)?;
    let odd = induced_odd_cycle(&wc.conflict)?;
    let (mut minor, route) = if odd.len() == 3 {
        let (m, size) = triangle_case(&wc, [odd[0], odd[1], odd[2]])?;
        (
            m,
            Route::Triangle {
                vertices: size.vertices,
                edges: size.edges,
            },
        )
    } else {
        match reduce_bridges_to_paths(&wc, &odd) {
            Ok(pr) => (k5_minor_from_reduction(&pr)?, Route::OddCycle { bridges: odd.len() }),
            Err(KuratowskiError::RedirectToTriangle(a, b)) => {
                let h = &wc.conflict;
                let c = h
                    .neighbors(a)
                    .iter()
                    .copied()
                    .find(|&c| c != b && h.has_edge(b, c))
                    .ok_or_else(|| post("no third bridge for the triangle case"))?;
                let (m, size) = triangle_case(&wc, [a, b, c])?;
                (
                    m,
                    Route::Triangle {
                        vertices: size.vertices,
                        edges: size.edges,
                    },
                )
            }
            Err(e) => return Err(e),
        }
    };
    if let Some(chain) = &wc.virtual_path {
        expand_virtual(&mut minor, wc.terminals.0, wc.terminals.1, chain);
    }
    if !verify_minor(&mp.graph, &minor) {
        return Err(post("expanded minor does not verify in the prefix graph"));
    }
    Ok((minor, route))
}

/// Deletes edges while the graph stays non-planar, then reads the branch
/// vertices and paths off the remaining subdivision.
fn deletion_route(g: &Graph) -> Result<KuratowskiMinor, KuratowskiError> {
    let mut keep: Vec<EdgeId> = (0..g.m()).collect();
    let mut i = 0;
    while i < keep.len() {
        let trial: Vec<_> = keep.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| g.endpoints(e)).collect();
        if is_planar(&Graph::new(g.n(), &trial)?) {
            i += 1;
        } else {
            keep.remove(i);
        }
    }
    let pairs: Vec<_> = keep.iter().map(|&e| g.endpoints(e)).collect();
    let k = Graph::new(g.n(), &pairs)?;
    let branch: Vec<VertexId> = (0..k.n()).filter(|&v| k.degree(v) >= 3).collect();
    let kind = match branch.len() {
        5 => MinorKind::K5,
        6 => MinorKind::K33,
        n => return Err(post(format!("minimal non-planar subgraph has {n} branch vertices"))),
    };
    let is_branch = |v: VertexId| k.degree(v) >= 3;
    let mut paths = Vec::new();
    let mut adjacency = vec![Vec::new(); k.n()];
    for &b in &branch {
        for &(w, _) in k.neighbors(b) {
            let mut path = vec![b, w];
            let (mut prev, mut cur) = (b, w);
            while !is_branch(cur) {
                let nxt = k.neighbors(cur).iter().map(|&(x, _)| x).find(|&x| x != prev).ok_or_else(|| post("dangling path"))?;
                prev = cur;
                cur = nxt;
                path.push(cur);
            }
            adjacency[b].push(cur);
            if b < cur {
                paths.push(path);
            }
        }
    }
    let mut branch_sets: Vec<Vec<VertexId>> = branch.iter().map(|&b| vec![b]).collect();
    if kind == MinorKind::K33 {
        // side of the first branch vertex first
        let first = branch[0];
        let (mut a, mut b): (Vec<_>, Vec<_>) = branch.iter().partition(|&&v| v == first || !adjacency[first].contains(&v));
        a.sort_unstable();
        b.sort_unstable();
        branch_sets = a.into_iter().chain(b).map(|v| vec![v]).collect();
    }
    let minor = MinorModel { kind, branch_sets, paths };
    if !verify_minor(g, &minor) {
        return Err(post("deletion model does not verify"));
    }
    Ok(minor)
}
