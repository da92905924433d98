//! Bridges of a cycle, the conflict relation between them, and 2-coloring of
//! the resulting conflict graph.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{ConflictError, GraphError};
use crate::graph::{validate_cycle, Cycle, EdgeSet, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BridgeKind {
    Chord,
    Component,
}

/// A chord of a cycle, or a component of `G - V(C)` together with its edges
/// to the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bridge {
    pub kind: BridgeKind,
    /// Interior vertices; empty for chords.
    pub vertices: Vec<VertexId>,
    /// Attachment vertices in the order they occur along the cycle.
    pub attachments: Vec<VertexId>,
    pub edges: EdgeSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessMode {
    Interleave,
    Shared3,
}

/// Evidence that two bridges conflict. For `Interleave`, `points` holds four
/// cycle positions `a1, a2, a1', a2'` in cyclic order where `a1, a1'` belong to
/// the first bridge. For `Shared3`, `points` holds three common attachment
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictWitness {
    pub mode: WitnessMode,
    pub points: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictEdge {
    pub a: usize,
    pub b: usize,
    pub witness: ConflictWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConflictGraph {
    pub cycle: Cycle,
    pub bridges: Vec<Bridge>,
    pub edges: Vec<ConflictEdge>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl ConflictGraph {
    /// Conflict graph over explicitly given bridges of `cycle`.
    pub fn from_bridges(cycle: Cycle, bridges: Vec<Bridge>, n: usize) -> Self {
        let pos = cycle.positions(n);
        let att_pos: Vec<Vec<usize>> = bridges
            .iter()
            .map(|b| b.attachments.iter().map(|&v| pos[v]).collect())
            .collect();
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); bridges.len()];
        for i in 0..bridges.len() {
            if att_pos[i].len() < 2 {
                continue;
            }
            for j in i + 1..bridges.len() {
                if att_pos[j].len() < 2 {
                    continue;
                }
                if let Some(witness) = conflict_positions(&att_pos[i], &att_pos[j], &cycle) {
                    adj[i].push(j);
                    adj[j].push(i);
                    edges.push(ConflictEdge { a: i, b: j, witness });
                }
            }
        }
        ConflictGraph {
            cycle,
            bridges,
            edges,
            adj,
        }
    }

    pub fn node_count(&self) -> usize {
        self.bridges.len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i].contains(&j)
    }

    pub fn witness(&self, i: usize, j: usize) -> Option<&ConflictWitness> {
        self.edges
            .iter()
            .find(|e| (e.a, e.b) == (i, j) || (e.a, e.b) == (j, i))
            .map(|e| &e.witness)
    }

    pub fn is_connected(&self) -> bool {
        if self.bridges.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.bridges.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.bridges.len()
    }
}

/// Bridges of `c`: one per chord and one per connected component of
/// `g - V(c)`, ordered by smallest contained edge id. Components without
/// edges (isolated vertices) come last.
pub fn bridges_of_cycle(g: &Graph, c: &Cycle) -> Result<Vec<Bridge>, GraphError> {
    validate_cycle(g, c)?;
    Ok(bridges_unchecked(g, c))
}

pub(crate) fn bridges_unchecked(g: &Graph, c: &Cycle) -> Vec<Bridge> {
    let pos = c.positions(g.n());
    let on_cycle = |v: VertexId| pos[v] != usize::MAX;
    let mut out = Vec::new();
    for &v in c.vertices() {
        for &(w, e) in g.neighbors(v) {
            if v < w && on_cycle(w) && !c.edges().contains(e) {
                let mut att = vec![v, w];
                att.sort_by_key(|&x| pos[x]);
                out.push(Bridge {
                    kind: BridgeKind::Chord,
                    vertices: Vec::new(),
                    attachments: att,
                    edges: EdgeSet::from_sorted_unchecked(vec![e]),
                });
            }
        }
    }
    let mut comp = vec![usize::MAX; g.n()];
    let mut is_att = vec![usize::MAX; g.n()];
    let mut stack = Vec::new();
    let mut isolated = Vec::new();
    for s in 0..g.n() {
        if on_cycle(s) || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        stack.push(s);
        let mut vertices = Vec::new();
        let mut attachments = Vec::new();
        let mut edges = Vec::new();
        while let Some(u) = stack.pop() {
            vertices.push(u);
            for &(w, e) in g.neighbors(u) {
                if on_cycle(w) {
                    edges.push(e);
                    if is_att[w] != id {
                        is_att[w] = id;
                        attachments.push(w);
                    }
                } else {
                    if u < w {
                        edges.push(e);
                    }
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
        }
        vertices.sort_unstable();
        attachments.sort_by_key(|&x| pos[x]);
        let bridge = Bridge {
            kind: BridgeKind::Component,
            vertices,
            attachments,
            edges: edges.into_iter().collect(),
        };
        if bridge.edges.is_empty() {
            isolated.push(bridge);
        } else {
            out.push(bridge);
        }
    }
    out.sort_by_key(|b| b.edges.as_slice()[0]);
    out.extend(isolated);
    out
}

/// Index of the bridge containing each edge; `usize::MAX` for cycle edges.
pub fn bridge_of_edge(m: usize, bridges: &[Bridge]) -> Vec<usize> {
    let mut out = vec![usize::MAX; m];
    for (i, b) in bridges.iter().enumerate() {
        for e in b.edges.iter() {
            out[e] = i;
        }
    }
    out
}

/// Conflict test between two bridges of `c`.
pub fn conflicts(b1: &Bridge, b2: &Bridge, c: &Cycle) -> Option<ConflictWitness> {
    let index = |v: VertexId| c.vertices().iter().position(|&x| x == v);
    let mut p1: Vec<usize> = b1.attachments.iter().filter_map(|&v| index(v)).collect();
    let mut p2: Vec<usize> = b2.attachments.iter().filter_map(|&v| index(v)).collect();
    p1.sort_unstable();
    p2.sort_unstable();
    if p1.len() < 2 || p2.len() < 2 {
        return None;
    }
    conflict_positions(&p1, &p2, c)
}

/// Conflict test on sorted attachment positions.
pub(crate) fn conflict_positions(a: &[usize], b: &[usize], c: &Cycle) -> Option<ConflictWitness> {
    if let Some(w) = interleaving(a, b) {
        return Some(ConflictWitness {
            mode: WitnessMode::Interleave,
            points: w.to_vec(),
        });
    }
    let mut shared = Vec::with_capacity(3);
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() && shared.len() < 3 {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                shared.push(c.vertices()[a[i]]);
                i += 1;
                j += 1;
            }
        }
    }
    (shared.len() == 3).then_some(ConflictWitness {
        mode: WitnessMode::Shared3,
        points: shared,
    })
}

/// Finds positions `x1 ∈ a, y1 ∈ b, x2 ∈ a, y2 ∈ b`, pairwise distinct and in
/// cyclic order. Runs in `O((|a| + |b|) log |a|)` by classifying every point
/// of `b` by the open arc of `a` it falls into.
pub(crate) fn interleaving(a: &[usize], b: &[usize]) -> Option<[usize; 4]> {
    let p = a.len();
    if p < 2 || b.len() < 2 {
        return None;
    }
    // b points that are not in a, tagged with the arc they fall into: arc i
    // is the open interval (a[i-1], a[i]) with arc 0 wrapping around
    let mut first_arc: Option<(usize, usize)> = None;
    let mut second_arc: Option<(usize, usize)> = None;
    let mut on_a = Vec::new();
    for &x in b {
        match a.binary_search(&x) {
            Ok(k) => on_a.push(k),
            Err(i) => {
                let arc = i % p;
                match first_arc {
                    None => first_arc = Some((arc, x)),
                    Some((fa, _)) if fa != arc && second_arc.is_none() => second_arc = Some((arc, x)),
                    _ => {}
                }
            }
        }
    }
    let order = |x1: usize, y1: usize, x2: usize, y2: usize| -> [usize; 4] {
        // rotate so that the smallest position leads while keeping a-points
        // at even slots when possible
        let mut pts = [(x1, 0), (y1, 1), (x2, 0), (y2, 1)];
        let start = (0..4).min_by_key(|&i| pts[i].0).unwrap();
        pts.rotate_left(start);
        if pts[0].1 == 1 {
            // smallest point belongs to b: lead with the next a-point instead
            pts.rotate_left(1);
        }
        [pts[0].0, pts[1].0, pts[2].0, pts[3].0]
    };
    match (first_arc, second_arc) {
        (Some((i, xi)), Some((j, xj))) => Some(order(a[i], xj, a[j], xi)),
        (Some((i, xi)), None) => {
            let prev = (i + p - 1) % p;
            let k = *on_a.iter().find(|&&k| k != i && k != prev)?;
            Some(order(a[i], a[k], a[prev], xi))
        }
        (None, _) => {
            let adjacent = |k: usize, l: usize| k == l || (k + 1) % p == l || (l + 1) % p == k;
            for (s, &k) in on_a.iter().enumerate() {
                if let Some(&l) = on_a[s + 1..].iter().find(|&&l| !adjacent(k, l)) {
                    return Some(order(a[(k + 1) % p], a[l], a[(l + 1) % p], a[k]));
                }
                if s >= 2 {
                    break;
                }
            }
            None
        }
    }
}

pub fn conflict_graph(g: &Graph, c: &Cycle) -> Result<ConflictGraph, GraphError> {
    let bridges = bridges_of_cycle(g, c)?;
    Ok(ConflictGraph::from_bridges(c.clone(), bridges, g.n()))
}

/// A closed walk `walk[0], walk[1], .., walk[k-1], walk[0]` of odd length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddCycleWitness {
    pub walk: Vec<usize>,
}

impl OddCycleWitness {
    pub fn is_valid_in(&self, h: &ConflictGraph) -> bool {
        let k = self.walk.len();
        k % 2 == 1
            && self.walk.iter().all(|&v| v < h.node_count())
            && (0..k).all(|i| h.has_edge(self.walk[i], self.walk[(i + 1) % k]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwoColoring {
    Colors(Vec<u8>),
    OddCycle(OddCycleWitness),
}

/// 2-colors `h` breadth-first: `anchor` gets color 0, then every other
/// component is anchored at its smallest node with color 0. Color 0 means
/// "same side as the anchor".
pub fn two_color(h: &ConflictGraph, anchor: usize) -> Result<TwoColoring, ConflictError> {
    let n = h.node_count();
    if n == 0 {
        return Ok(TwoColoring::Colors(Vec::new()));
    }
    if anchor >= n {
        return Err(ConflictError::InvalidAnchor { anchor, nodes: n });
    }
    Ok(two_color_adj(n, |v| h.neighbors(v), anchor))
}

pub(crate) fn two_color_adj<'a, F>(n: usize, adj: F, anchor: usize) -> TwoColoring
where
    F: Fn(usize) -> &'a [usize],
{
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let roots = std::iter::once(anchor).chain((0..n).filter(|&v| v != anchor));
    let mut queue = VecDeque::new();
    for r in roots {
        if color[r] != u8::MAX {
            continue;
        }
        color[r] = 0;
        queue.push_back(r);
        while let Some(u) = queue.pop_front() {
            for &w in adj(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    let (mut a, mut b) = (u, w);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    left.extend(right.into_iter().rev());
                    return TwoColoring::OddCycle(OddCycleWitness { walk: left });
                }
            }
        }
    }
    TwoColoring::Colors(color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_graph, complete, cycle, spanning_tree, wheel, fundamental_cycle};

    fn hexagon() -> (Graph, Cycle) {
        let k33 = canonical_graph("K33").unwrap();
        let c = Cycle::from_vertices(&k33, vec![0, 3, 1, 4, 2, 5]).unwrap();
        (k33, c)
    }

    #[test]
    fn k33_hexagon_has_three_chords() {
        let (g, c) = hexagon();
        let bridges = bridges_of_cycle(&g, &c).unwrap();
        assert_eq!(bridges.len(), 3);
        assert!(bridges.iter().all(|b| b.kind == BridgeKind::Chord));
        let chords: Vec<_> = bridges
            .iter()
            .map(|b| g.endpoints(b.edges.as_slice()[0]))
            .collect();
        assert_eq!(chords, vec![(0, 4), (1, 5), (2, 3)]);
    }

    #[test]
    fn w5_triangle_has_one_component_bridge() {
        let g = wheel(5);
        let c = Cycle::from_vertices(&g, vec![0, 3, 4]).unwrap();
        let bridges = bridges_of_cycle(&g, &c).unwrap();
        assert_eq!(bridges.len(), 1);
        assert_eq!(bridges[0].kind, BridgeKind::Component);
        assert_eq!(bridges[0].vertices, vec![1, 2, 5]);
        let mut att = bridges[0].attachments.clone();
        att.sort();
        assert_eq!(att, vec![0, 3, 4]);
    }

    #[test]
    fn c6_has_no_bridges() {
        let g = cycle(6);
        let c = Cycle::from_vertices(&g, (0..6).collect()).unwrap();
        assert!(bridges_of_cycle(&g, &c).unwrap().is_empty());
        let h = conflict_graph(&g, &c).unwrap();
        assert_eq!(h.node_count(), 0);
        assert_eq!(two_color(&h, 0).unwrap(), TwoColoring::Colors(vec![]));
    }

    #[test]
    fn hexagon_chord_witnesses() {
        let (g, c) = hexagon();
        let b = bridges_of_cycle(&g, &c).unwrap();
        let w = conflicts(&b[0], &b[1], &c).unwrap();
        assert_eq!(w.mode, WitnessMode::Interleave);
        assert_eq!(w.points, vec![0, 2, 3, 5]);
        let w = conflicts(&b[0], &b[2], &c).unwrap();
        assert_eq!(w.points, vec![0, 1, 3, 4]);
    }

    #[test]
    fn nested_chords_sharing_an_endpoint_do_not_conflict() {
        let g = Graph::new(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3)],
        )
        .unwrap();
        let c = Cycle::from_vertices(&g, (0..6).collect()).unwrap();
        let b = bridges_of_cycle(&g, &c).unwrap();
        assert_eq!(b.len(), 2);
        assert!(conflicts(&b[0], &b[1], &c).is_none());
    }

    #[test]
    fn shared_three_attachments() {
        // two independent vertices 6 and 7 both attached to 0, 2, 4 of a hexagon
        let g = Graph::new(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0),
                (6, 0), (6, 2), (6, 4), (7, 0), (7, 2), (7, 4),
            ],
        )
        .unwrap();
        let c = Cycle::from_vertices(&g, (0..6).collect()).unwrap();
        let b = bridges_of_cycle(&g, &c).unwrap();
        let w = conflicts(&b[0], &b[1], &c).unwrap();
        assert_eq!(w.mode, WitnessMode::Shared3);
        assert_eq!(w.points, vec![0, 2, 4]);
    }

    #[test]
    fn k33_hexagon_conflict_graph_is_triangle() {
        let (g, c) = hexagon();
        let h = conflict_graph(&g, &c).unwrap();
        assert_eq!(h.edges.len(), 3);
        match two_color(&h, 0).unwrap() {
            TwoColoring::OddCycle(w) => {
                assert_eq!(w.walk.len(), 3);
                assert!(w.is_valid_in(&h));
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn k5_fundamental_triangles_have_one_bridge() {
        let g = complete(5);
        let t = spanning_tree(&g, 0).unwrap();
        for e in t.non_tree_edges() {
            let c = fundamental_cycle(&g, &t, e).unwrap();
            let h = conflict_graph(&g, &c).unwrap();
            assert_eq!(h.node_count(), 1);
            assert!(h.edges.is_empty());
        }
    }

    #[test]
    fn path_coloring_and_bad_anchor() {
        // three chords of an octagon, consecutive ones crossing
        let g = Graph::new(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 0),
                (0, 2), (1, 4), (3, 5),
            ],
        )
        .unwrap();
        let c = Cycle::from_vertices(&g, (0..8).collect()).unwrap();
        let h = conflict_graph(&g, &c).unwrap();
        assert_eq!(h.edges.len(), 2);
        assert_eq!(two_color(&h, 0).unwrap(), TwoColoring::Colors(vec![0, 1, 0]));
        assert!(two_color(&h, 7).is_err());
    }
}
