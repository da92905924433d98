//! Simple undirected graphs, BFS spanning trees, fundamental cycles and the
//! GF(2) edge-set arithmetic used throughout the crate.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

/// A simple undirected graph on vertices `0..n` with stable edge ids `0..m`
/// assigned in construction order. Serializes as `{"n": .., "edges": [[u, v], ..]}`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // sorted by neighbor id
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(r: GraphRepr) -> Result<Self, Self::Error> {
        Graph::new(r.n, &r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate pairs and out-of-range
    /// vertex ids. Edge ids follow input order.
    pub fn new(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in pairs.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(GraphError::DuplicateEdge { u, v: w[0].0 });
            }
        }
        Ok(Graph {
            n,
            edges: pairs.to_vec(),
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Incident `(neighbor, edge)` pairs in ascending neighbor order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The spanning subgraph (all `n` vertices) on the given edges, renumbered
    /// in the given order. Returns the subgraph and the map from new edge id
    /// to the id in `self`.
    pub fn edge_subgraph(&self, edges: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let pairs: Vec<_> = edges.iter().map(|&e| self.edges[e]).collect();
        let g = Graph::new(self.n, &pairs).expect("subgraph of a simple graph is simple");
        (g, edges.to_vec())
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    /// Returns the graph, the vertex map (new -> old) and the edge map.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        let mut emap = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                pairs.push((local[u], local[v]));
                emap.push(e);
            }
        }
        let g = Graph::new(vertices.len(), &pairs).expect("induced subgraph is simple");
        (g, vertices.to_vec(), emap)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || components(self, &vec![true; self.n]).len() == 1
    }

    /// Connected components of the whole graph.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        components(self, &vec![true; self.n])
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format: a header line `n m`, then `m` lines
    /// `u v`. Text after `#` is ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                let tok = tok.ok_or_else(|| GraphError::Parse {
                    line: lineno + 1,
                    msg: "expected two integers".into(),
                })?;
                tok.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: lineno + 1,
                    msg: format!("not a non-negative integer: {tok:?}"),
                })
            };
            let a = parse(it.next())?;
            let b = parse(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    msg: "trailing tokens".into(),
                });
            }
            if header.is_none() {
                header = Some((a, b));
            } else {
                pairs.push((a, b));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header line".into(),
        })?;
        if pairs.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header announces {m} edges, found {}", pairs.len()),
            });
        }
        Graph::new(n, &pairs)
    }
}

/// Builds a graph from vertex count and pairs; see [`Graph::new`].
pub fn build_graph(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
    Graph::new(n, pairs)
}

/// Fixed test corpus with documented numbering:
///
/// * `Kn`: complete graph, edges `(i, j)` for `i < j` in lexicographic order.
/// * `Cn`: cycle `0-1-..-(n-1)-0`, edges `(i, i+1)` then `(n-1, 0)`.
/// * `K33`: parts `{0,1,2}` and `{3,4,5}`, edges `(a, b)` lexicographic.
/// * `W5` (and `Wn`): hub `0`, rim `1..=n`; spokes `(0, i)` first, then rim
///   edges `(i, i+1)` and finally `(n, 1)`.
/// * `Q3`: cube on bit-vectors `0..8`, edges `(a, a ^ bit)` with `a < a ^ bit`
///   in lexicographic order.
/// * `Petersen`: outer cycle `0..5`, spokes `(i, i+5)`, inner pentagram
///   `(5+i, 5+(i+2)%5)`.
/// * `grid(r,c)`: vertex `i*c + j`; horizontal edges row by row, then
///   vertical edges.
/// * `octahedron`: `K6` minus the perfect matching `(0,5),(1,4),(2,3)`.
/// * `prism`: triangles `0-1-2`, `3-4-5` and matching `(i, i+3)`.
pub fn canonical_graph(name: &str) -> Result<Graph, GraphError> {
    let unknown = || GraphError::UnknownGraph(name.to_string());
    let lower = name.trim().to_ascii_lowercase();
    let g = match lower.as_str() {
        "k33" | "k3,3" => {
            let mut pairs = Vec::new();
            for a in 0..3 {
                for b in 3..6 {
                    pairs.push((a, b));
                }
            }
            Graph::new(6, &pairs)?
        }
        "q3" => {
            let mut pairs = Vec::new();
            for a in 0..8usize {
                for bit in [1usize, 2, 4] {
                    let b = a ^ bit;
                    if a < b {
                        pairs.push((a, b));
                    }
                }
            }
            pairs.sort_unstable();
            Graph::new(8, &pairs)?
        }
        "petersen" => {
            let mut pairs = Vec::new();
            for i in 0..5 {
                pairs.push((i, (i + 1) % 5));
            }
            for i in 0..5 {
                pairs.push((i, i + 5));
            }
            for i in 0..5 {
                pairs.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::new(10, &pairs)?
        }
        "octahedron" => {
            let mut pairs = Vec::new();
            for a in 0..6 {
                for b in a + 1..6 {
                    if a + b != 5 {
                        pairs.push((a, b));
                    }
                }
            }
            Graph::new(6, &pairs)?
        }
        "prism" => Graph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )?,
        s if s.starts_with("grid(") && s.ends_with(')') => {
            let inner = &s[5..s.len() - 1];
            let mut parts = inner.split(',').map(|p| p.trim().parse::<usize>());
            let (r, c) = match (parts.next(), parts.next(), parts.next()) {
                (Some(Ok(r)), Some(Ok(c)), None) if r > 0 && c > 0 => (r, c),
                _ => return Err(unknown()),
            };
            grid(r, c)
        }
        s if s.starts_with('k') => complete(s[1..].parse().map_err(|_| unknown())?),
        s if s.starts_with('c') => {
            let k: usize = s[1..].parse().map_err(|_| unknown())?;
            if k < 3 {
                return Err(unknown());
            }
            cycle(k)
        }
        s if s.starts_with('w') => {
            let k: usize = s[1..].parse().map_err(|_| unknown())?;
            if k < 3 {
                return Err(unknown());
            }
            wheel(k)
        }
        _ => return Err(unknown()),
    };
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            pairs.push((a, b));
        }
    }
    Graph::new(n, &pairs).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let mut pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    pairs.push((n - 1, 0));
    Graph::new(n, &pairs).unwrap()
}

/// Wheel with hub `0` and `rim` rim vertices.
pub fn wheel(rim: usize) -> Graph {
    let mut pairs: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
    pairs.extend((1..rim).map(|i| (i, i + 1)));
    pairs.push((rim, 1));
    Graph::new(rim + 1, &pairs).unwrap()
}

pub fn grid(r: usize, c: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..r {
        for j in 0..c.saturating_sub(1) {
            pairs.push((i * c + j, i * c + j + 1));
        }
    }
    for i in 0..r.saturating_sub(1) {
        for j in 0..c {
            pairs.push((i * c + j, (i + 1) * c + j));
        }
    }
    Graph::new(r * c, &pairs).unwrap()
}

/// Breadth-first spanning tree; neighbors are explored in ascending id.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    root: VertexId,
    parent: Vec<Option<(VertexId, EdgeId)>>,
    depth: Vec<usize>,
    in_tree: Vec<bool>,
}

impl SpanningTree {
    pub fn root(&self) -> VertexId {
        self.root
    }

    /// Parent vertex and the tree edge to it; `None` for the root.
    pub fn parent(&self, v: VertexId) -> Option<(VertexId, EdgeId)> {
        self.parent[v]
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    pub fn is_tree_edge(&self, e: EdgeId) -> bool {
        self.in_tree[e]
    }

    pub fn tree_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.in_tree.iter().enumerate().filter(|(_, t)| **t).map(|(e, _)| e)
    }

    pub fn non_tree_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.in_tree.iter().enumerate().filter(|(_, t)| !**t).map(|(e, _)| e)
    }
}

impl SpanningTree {
    /// Builds a tree from an explicit edge list, checking it spans `g`.
    pub fn from_edges(g: &Graph, root: VertexId, edges: &[EdgeId]) -> Result<Self, GraphError> {
        if root >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: root, n: g.n() });
        }
        if edges.len() + 1 != g.n() {
            return Err(GraphError::NotSpanningTree);
        }
        let mut in_tree = vec![false; g.m()];
        let mut tree_adj = vec![Vec::new(); g.n()];
        for &e in edges {
            if e >= g.m() || std::mem::replace(&mut in_tree[e], true) {
                return Err(GraphError::NotSpanningTree);
            }
            let (u, v) = g.endpoints(e);
            tree_adj[u].push((v, e));
            tree_adj[v].push((u, e));
        }
        let mut parent = vec![None; g.n()];
        let mut depth = vec![usize::MAX; g.n()];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut seen = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, e) in &tree_adj[u] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some((u, e));
                    seen += 1;
                    queue.push_back(w);
                }
            }
        }
        if seen != g.n() {
            return Err(GraphError::NotSpanningTree);
        }
        Ok(SpanningTree {
            root,
            parent,
            depth,
            in_tree,
        })
    }
}

pub fn spanning_tree(g: &Graph, root: VertexId) -> Result<SpanningTree, GraphError> {
    if root >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: root, n: g.n() });
    }
    let mut parent = vec![None; g.n()];
    let mut depth = vec![usize::MAX; g.n()];
    let mut in_tree = vec![false; g.m()];
    let mut queue = VecDeque::from([root]);
    depth[root] = 0;
    let mut seen = 1;
    while let Some(u) = queue.pop_front() {
        for &(w, e) in g.neighbors(u) {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = Some((u, e));
                in_tree[e] = true;
                seen += 1;
                queue.push_back(w);
            }
        }
    }
    if seen != g.n() {
        return Err(GraphError::Disconnected);
    }
    Ok(SpanningTree {
        root,
        parent,
        depth,
        in_tree,
    })
}

/// A set of edge ids, i.e. a vector of the edge space over GF(2).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSet(Vec<EdgeId>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn from_sorted_unchecked(v: Vec<EdgeId>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        EdgeSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    /// Symmetric difference.
    pub fn xor(&self, other: &EdgeSet) -> EdgeSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        EdgeSet(out)
    }

    /// GF(2) sum of many sets, computed with a parity buffer of size `m`.
    pub fn xor_all<'a>(m: usize, sets: impl IntoIterator<Item = &'a EdgeSet>) -> EdgeSet {
        let mut parity = vec![false; m];
        for s in sets {
            for e in s.iter() {
                parity[e] = !parity[e];
            }
        }
        EdgeSet(parity.iter().enumerate().filter(|(_, p)| **p).map(|(e, _)| e).collect())
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut v: Vec<_> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }
}

pub fn xor(a: &EdgeSet, b: &EdgeSet) -> EdgeSet {
    a.xor(b)
}

/// A simple cycle: its edge set and a cyclic vertex order (implicitly closed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cycle {
    vertices: Vec<VertexId>,
    edges: EdgeSet,
}

impl Cycle {
    /// Builds a cycle from a cyclic vertex sequence, checking every consecutive
    /// pair (including last-first) is an edge and no vertex repeats.
    pub fn from_vertices(g: &Graph, vertices: Vec<VertexId>) -> Result<Self, GraphError> {
        let k = vertices.len();
        if k < 3 {
            return Err(GraphError::InvalidCycle("fewer than three vertices".into()));
        }
        let mut seen = vec![false; g.n()];
        let mut edges = Vec::with_capacity(k);
        for i in 0..k {
            let (u, v) = (vertices[i], vertices[(i + 1) % k]);
            if u >= g.n() {
                return Err(GraphError::VertexOutOfRange { vertex: u, n: g.n() });
            }
            if std::mem::replace(&mut seen[u], true) {
                return Err(GraphError::InvalidCycle(format!("vertex {u} repeats")));
            }
            let e = g
                .edge_between(u, v)
                .ok_or_else(|| GraphError::InvalidCycle(format!("({u},{v}) is not an edge")))?;
            edges.push(e);
        }
        Ok(Cycle {
            vertices,
            edges: edges.into_iter().collect(),
        })
    }

    /// Recovers a cycle from an edge set, failing unless the edges form one
    /// connected 2-regular subgraph. The vertex order starts at the smallest
    /// vertex and continues toward its smaller cycle neighbor.
    pub fn from_edge_set(g: &Graph, edges: &EdgeSet) -> Result<Self, GraphError> {
        if edges.len() < 3 {
            return Err(GraphError::InvalidCycle("fewer than three edges".into()));
        }
        let mut inc: std::collections::HashMap<VertexId, Vec<EdgeId>> = Default::default();
        for e in edges.iter() {
            if e >= g.m() {
                return Err(GraphError::InvalidCycle(format!("edge {e} out of range")));
            }
            let (u, v) = g.endpoints(e);
            inc.entry(u).or_default().push(e);
            inc.entry(v).or_default().push(e);
        }
        if inc.values().any(|l| l.len() != 2) {
            return Err(GraphError::InvalidCycle("a vertex does not have degree two".into()));
        }
        let start = *inc.keys().min().unwrap();
        let first = {
            let l = &inc[&start];
            let (a, b) = (g.other(l[0], start), g.other(l[1], start));
            if a < b {
                l[0]
            } else {
                l[1]
            }
        };
        let mut vertices = vec![start];
        let (mut prev_edge, mut cur) = (first, g.other(first, start));
        while cur != start {
            vertices.push(cur);
            let l = &inc[&cur];
            let next = if l[0] == prev_edge { l[1] } else { l[0] };
            prev_edge = next;
            cur = g.other(next, cur);
        }
        if vertices.len() != inc.len() {
            return Err(GraphError::InvalidCycle("edge set is not connected".into()));
        }
        Ok(Cycle {
            vertices,
            edges: edges.clone(),
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Position of every vertex along the cycle (`usize::MAX` off the cycle).
    pub fn positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.vertices.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn fundamental_cycle(g: &Graph, t: &SpanningTree, e: EdgeId) -> Result<Cycle, GraphError> {
    if e >= g.m() {
        return Err(GraphError::InvalidCycle(format!("edge {e} out of range")));
    }
    if t.is_tree_edge(e) {
        return Err(GraphError::TreeEdge { edge: e });
    }
    let (u, v) = g.endpoints(e);
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    let mut edges = vec![e];
    while a != b {
        if t.depth(a) >= t.depth(b) {
            let (p, pe) = t.parent(a).expect("non-root has a parent");
            edges.push(pe);
            a = p;
            left.push(a);
        } else {
            let (p, pe) = t.parent(b).expect("non-root has a parent");
            edges.push(pe);
            b = p;
            right.push(b);
        }
    }
    // left ends at the lca, right ends at the lca too
    right.pop();
    left.extend(right.into_iter().rev());
    Ok(Cycle {
        vertices: left,
        edges: edges.into_iter().collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFlags {
    pub induced: bool,
    pub nonseparating: bool,
}

pub fn classify_cycle(g: &Graph, c: &Cycle) -> Result<CycleFlags, GraphError> {
    validate_cycle(g, c)?;
    let on_cycle = {
        let mut s = vec![false; g.n()];
        for &v in c.vertices() {
            s[v] = true;
        }
        s
    };
    let induced = c.vertices().iter().all(|&v| {
        g.neighbors(v)
            .iter()
            .all(|&(w, e)| !on_cycle[w] || c.edges().contains(e))
    });
    let retained: Vec<bool> = on_cycle.iter().map(|b| !b).collect();
    let nonseparating = components(g, &retained).len() <= 1;
    Ok(CycleFlags {
        induced,
        nonseparating,
    })
}

/// Checks that `c` is consistent with `g`.
pub fn validate_cycle(g: &Graph, c: &Cycle) -> Result<(), GraphError> {
    let rebuilt = Cycle::from_vertices(g, c.vertices().to_vec())?;
    if rebuilt.edges() != c.edges() {
        return Err(GraphError::InvalidCycle(
            "edge set disagrees with vertex order".into(),
        ));
    }
    Ok(())
}

/// Connected components of the subgraph induced by the retained vertices,
/// each sorted, ordered by smallest member.
pub fn components(g: &Graph, retained: &[bool]) -> Vec<Vec<VertexId>> {
    let mut comp = vec![usize::MAX; g.n()];
    let mut out: Vec<Vec<VertexId>> = Vec::new();
    let mut stack = Vec::new();
    for s in 0..g.n() {
        if !retained[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        stack.push(s);
        let mut members = Vec::new();
        while let Some(u) = stack.pop() {
            members.push(u);
            for &(w, _) in g.neighbors(u) {
                if retained[w] && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse_edge_list(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[EdgeId]) -> EdgeSet {
        v.iter().copied().collect()
    }

    #[test]
    fn build_triangle_and_k33() {
        let k3 = build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
        let k33 = canonical_graph("K33").unwrap();
        assert_eq!((k33.n(), k33.m()), (6, 9));
        assert!(k33.edges().iter().all(|&(a, b)| a < 3 && b >= 3));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            build_graph(3, &[(0, 0)]),
            Err(GraphError::SelfLoop { vertex: 0 })
        ));
        assert!(matches!(
            build_graph(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { .. })
        ));
        assert!(matches!(
            build_graph(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn canonical_corpus() {
        let k5 = canonical_graph("K5").unwrap();
        assert_eq!((k5.n(), k5.m()), (5, 10));
        let w5 = canonical_graph("W5").unwrap();
        assert_eq!((w5.n(), w5.m()), (6, 10));
        assert_eq!(w5.degree(0), 5);
        assert!((1..=5).all(|v| w5.degree(v) == 3));
        let p = canonical_graph("Petersen").unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let q3 = canonical_graph("Q3").unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        let gr = canonical_graph("grid(3,3)").unwrap();
        assert_eq!((gr.n(), gr.m()), (9, 12));
        assert!(canonical_graph("Heawood").is_err());
        assert!(canonical_graph("grid(0,3)").is_err());
    }

    #[test]
    fn bfs_tree_examples() {
        let k5 = complete(5);
        let t = spanning_tree(&k5, 0).unwrap();
        assert!((1..5).all(|v| t.parent(v).unwrap().0 == 0));

        let c4 = cycle(4);
        let t = spanning_tree(&c4, 0).unwrap();
        let tree: Vec<_> = t.tree_edges().map(|e| c4.endpoints(e)).collect();
        assert_eq!(tree, vec![(0, 1), (1, 2), (3, 0)]);

        let two = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(spanning_tree(&two, 0), Err(GraphError::Disconnected)));
    }

    #[test]
    fn fundamental_cycle_examples() {
        let k5 = complete(5);
        let t = spanning_tree(&k5, 0).unwrap();
        let e = k5.edge_between(1, 2).unwrap();
        let c = fundamental_cycle(&k5, &t, e).unwrap();
        let mut vs = c.vertices().to_vec();
        vs.sort();
        assert_eq!(vs, vec![0, 1, 2]);
        assert!(matches!(
            fundamental_cycle(&k5, &t, k5.edge_between(0, 1).unwrap()),
            Err(GraphError::TreeEdge { .. })
        ));

        let c4 = build_graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let t = SpanningTree::from_edges(&c4, 0, &[0, 1, 2]).unwrap();
        let c = fundamental_cycle(&c4, &t, 3).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3]);
        assert_eq!(c.edges(), &set(&[0, 1, 2, 3]));
        assert!(SpanningTree::from_edges(&c4, 0, &[0, 1]).is_err());
    }

    #[test]
    fn classify_examples() {
        let k5 = complete(5);
        let tri = Cycle::from_vertices(&k5, vec![0, 1, 2]).unwrap();
        assert_eq!(
            classify_cycle(&k5, &tri).unwrap(),
            CycleFlags {
                induced: true,
                nonseparating: true
            }
        );
        let k33 = canonical_graph("K33").unwrap();
        let hex = Cycle::from_vertices(&k33, vec![0, 3, 1, 4, 2, 5]).unwrap();
        assert!(!classify_cycle(&k33, &hex).unwrap().induced);
        let c6 = cycle(6);
        let whole = Cycle::from_vertices(&c6, (0..6).collect()).unwrap();
        assert_eq!(
            classify_cycle(&c6, &whole).unwrap(),
            CycleFlags {
                induced: true,
                nonseparating: true
            }
        );
        assert!(Cycle::from_vertices(&c6, vec![0, 1, 3]).is_err());
    }

    #[test]
    fn xor_examples() {
        assert_eq!(xor(&set(&[1, 2]), &set(&[2, 3])), set(&[1, 3]));
        let a = set(&[0, 4, 9]);
        assert!(xor(&a, &a).is_empty());
        assert_eq!(xor(&a, &EdgeSet::new()), a);
    }

    #[test]
    fn components_examples() {
        let k5 = complete(5);
        let mut keep = vec![true; 5];
        for v in 0..3 {
            keep[v] = false;
        }
        assert_eq!(components(&k5, &keep), vec![vec![3, 4]]);
        let c6 = cycle(6);
        let keep: Vec<bool> = (0..6).map(|v| v != 0 && v != 3).collect();
        assert_eq!(components(&c6, &keep), vec![vec![1, 2], vec![4, 5]]);
        assert!(components(&c6, &[false; 6]).is_empty());
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = canonical_graph("Petersen").unwrap();
        let text = format!("# petersen\n{}", g.to_edge_list());
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 x\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn cycle_from_edge_set() {
        let w5 = wheel(5);
        let rim: EdgeSet = (5..10).collect();
        let c = Cycle::from_edge_set(&w5, &rim).unwrap();
        assert_eq!(c.vertices(), &[1, 2, 3, 4, 5]);
        let two_triangles: EdgeSet = build_graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
            .map(|_| (0..6).collect())
            .unwrap();
        let g = build_graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(Cycle::from_edge_set(&g, &two_triangles).is_err());
    }
}
