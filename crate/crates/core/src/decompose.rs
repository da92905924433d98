//! Block-cut trees, triconnected components (S/P/R split components) and
//! composition of component embeddings back into one rotation system.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::embedding::{dart_from, Dart, PlanarEmbedding};
use crate::error::DecomposeError;
use crate::graph::{EdgeId, EdgeSet, Graph, VertexId};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: EdgeSet,
}

/// Maximal biconnected subgraphs, ordered by smallest edge id, with the cut
/// vertices and the block/cut-vertex incidences forming the tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
    /// `(block index, cut vertex)` pairs.
    pub tree: Vec<(usize, VertexId)>,
}

pub fn blocks(g: &Graph) -> BlockCutTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut found: Vec<Vec<EdgeId>> = Vec::new();
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack: Vec<(VertexId, usize)> = vec![(root, 0)];
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < g.degree(v) {
                let (w, e) = g.neighbors(v)[top.1];
                top.1 += 1;
                if e == parent_edge[v] {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    parent_edge[w] = e;
                    stack.push((w, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let pe = parent_edge[v];
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        block.sort_unstable();
                        found.push(block);
                    }
                }
            }
        }
    }
    found.sort_by_key(|b| b[0]);
    let mut count = vec![0usize; n];
    let blocks: Vec<Block> = found
        .into_iter()
        .map(|edges| {
            let mut vertices: Vec<VertexId> = edges
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.endpoints(e);
                    [u, v]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            for &v in &vertices {
                count[v] += 1;
            }
            Block {
                vertices,
                edges: EdgeSet::from_sorted_unchecked(edges),
            }
        })
        .collect();
    let cut_vertices: Vec<VertexId> = (0..n).filter(|&v| count[v] > 1).collect();
    let mut tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if count[v] > 1 {
                tree.push((i, v));
            }
        }
    }
    BlockCutTree {
        blocks,
        cut_vertices,
        tree,
    }
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    let bct = blocks(g);
    bct.blocks.len() == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    S,
    P,
    R,
}

/// An edge of a triconnected component: either a real edge of the graph or
/// one copy of a virtual edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub real: Option<EdgeId>,
    #[serde(rename = "virtual")]
    pub virtual_id: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriComponent {
    pub kind: ComponentKind,
    pub edges: Vec<TriEdge>,
}

impl TriComponent {
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.edges.iter().flat_map(|e| [e.u, e.v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// The component as a graph on `0..k`, edge `i` being `self.edges[i]`.
    /// Only meaningful for S and R components, which are simple.
    pub fn local_graph(&self) -> Result<(Graph, Vec<VertexId>), DecomposeError> {
        let vs = self.vertices();
        let local = |x: VertexId| vs.binary_search(&x).unwrap();
        let pairs: Vec<_> = self.edges.iter().map(|e| (local(e.u), local(e.v))).collect();
        let g = Graph::new(vs.len(), &pairs)?;
        Ok((g, vs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualPair {
    pub id: usize,
    pub pair: (VertexId, VertexId),
    pub components: (usize, usize),
}

/// Split components of a biconnected graph. Each virtual edge id occurs in
/// exactly two components; `virtual_pairs` lists them and is also the edge
/// list of the tree over components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationTree {
    pub components: Vec<TriComponent>,
    pub virtual_pairs: Vec<VirtualPair>,
}

impl SeparationTree {
    pub fn separating_pairs(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self.virtual_pairs.iter().map(|p| p.pair).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Real edges left after cancelling every virtual pair, sorted.
    pub fn merged_edges(&self) -> Vec<(VertexId, VertexId, EdgeId)> {
        let mut out: Vec<_> = self
            .components
            .iter()
            .flat_map(|c| c.edges.iter())
            .filter_map(|e| e.real.map(|id| (e.u.min(e.v), e.u.max(e.v), id)))
            .collect();
        out.sort_unstable();
        out
    }
}

#[derive(Debug, Clone, Copy)]
struct ArenaEdge {
    u: VertexId,
    v: VertexId,
    real: Option<EdgeId>,
    virt: Option<usize>,
}

/// Adjacency view of one piece of the multigraph, on local vertex indices.
struct Piece {
    verts: Vec<VertexId>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Piece {
    fn new(arena: &[ArenaEdge], edges: &[usize]) -> Self {
        let mut verts: Vec<VertexId> = edges.iter().flat_map(|&i| [arena[i].u, arena[i].v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut adj = vec![Vec::new(); verts.len()];
        for &i in edges {
            let a = verts.binary_search(&arena[i].u).unwrap();
            let b = verts.binary_search(&arena[i].v).unwrap();
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        Piece { verts, adj }
    }

    /// Smallest articulation point of the piece with `a` removed.
    fn articulation_without(&self, a: usize) -> Option<usize> {
        let k = self.verts.len();
        if k < 4 {
            return None;
        }
        let root = if a == 0 { 1 } else { 0 };
        let mut disc = vec![usize::MAX; k];
        let mut low = vec![0; k];
        let mut pe = vec![usize::MAX; k];
        let mut art = vec![false; k];
        let mut root_children = 0;
        disc[root] = 0;
        let mut timer = 1;
        let mut stack = vec![(root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 < self.adj[v].len() {
                let (w, e) = self.adj[v][top.1];
                top.1 += 1;
                if w == a || e == pe[v] {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    pe[w] = e;
                    stack.push((w, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p == root {
                        root_children += 1;
                    } else if low[v] >= disc[p] {
                        art[p] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            art[root] = true;
        }
        art.iter().position(|&x| x)
    }
}

struct Splitter {
    arena: Vec<ArenaEdge>,
    next_virt: usize,
    out: Vec<(ComponentKind, Vec<usize>)>,
}

impl Splitter {
    fn virtual_pair(&mut self, u: VertexId, v: VertexId) -> (usize, usize) {
        let k = self.next_virt;
        self.next_virt += 1;
        let e = ArenaEdge {
            u,
            v,
            real: None,
            virt: Some(k),
        };
        self.arena.push(e);
        self.arena.push(e);
        (self.arena.len() - 2, self.arena.len() - 1)
    }

    fn run(&mut self, initial: Vec<usize>) {
        let mut work = vec![initial];
        while let Some(piece) = work.pop() {
            self.split(piece, &mut work);
        }
    }

    fn split(&mut self, mut piece: Vec<usize>, work: &mut Vec<Vec<usize>>) {
        // bonds first: every bundle of parallel edges becomes a P component
        let key = |e: &ArenaEdge| (e.u.min(e.v), e.u.max(e.v));
        piece.sort_by_key(|&i| (key(&self.arena[i]), i));
        let first = key(&self.arena[piece[0]]);
        if piece.iter().all(|&i| key(&self.arena[i]) == first) {
            self.out.push((ComponentKind::P, piece));
            return;
        }
        let mut simple = Vec::with_capacity(piece.len());
        let mut s = 0;
        while s < piece.len() {
            let k = key(&self.arena[piece[s]]);
            let mut t = s;
            while t < piece.len() && key(&self.arena[piece[t]]) == k {
                t += 1;
            }
            if t - s >= 2 {
                let (a, b) = self.virtual_pair(k.0, k.1);
                let mut bond = piece[s..t].to_vec();
                bond.push(a);
                self.out.push((ComponentKind::P, bond));
                simple.push(b);
            } else {
                simple.push(piece[s]);
            }
            s = t;
        }
        let piece = simple;
        let view = Piece::new(&self.arena, &piece);
        if view.adj.iter().all(|a| a.len() == 2) {
            self.out.push((ComponentKind::S, piece));
            return;
        }
        let pair = view
            .adj
            .iter()
            .position(|a| a.len() == 2)
            .map(|v| (view.adj[v][0].0, view.adj[v][1].0))
            .or_else(|| {
                let k = view.verts.len();
                par::find_first(k, |a| view.articulation_without(a).is_some())
                    .map(|a| (a, view.articulation_without(a).unwrap()))
            });
        let Some((a, b)) = pair else {
            self.out.push((ComponentKind::R, piece));
            return;
        };
        // separation classes of {a, b}
        let k = view.verts.len();
        let mut comp = vec![usize::MAX; k];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut direct = None;
        for s in 0..k {
            if s == a || s == b || comp[s] != usize::MAX {
                continue;
            }
            let id = classes.len();
            comp[s] = id;
            let mut stack = vec![s];
            let mut edges = Vec::new();
            while let Some(x) = stack.pop() {
                for &(w, e) in &view.adj[x] {
                    if w == a || w == b {
                        edges.push(e);
                    } else {
                        if x < w {
                            edges.push(e);
                        }
                        if comp[w] == usize::MAX {
                            comp[w] = id;
                            stack.push(w);
                        }
                    }
                }
            }
            classes.push(edges);
        }
        for &(w, e) in &view.adj[a] {
            if w == b {
                direct = Some(e);
            }
        }
        let (ua, ub) = (view.verts[a], view.verts[b]);
        let slots = classes.len() + direct.is_some() as usize;
        if slots >= 3 {
            let mut center: Vec<usize> = direct.into_iter().collect();
            for mut class in classes {
                let (x, y) = self.virtual_pair(ua, ub);
                class.push(x);
                center.push(y);
                work.push(class);
            }
            self.out.push((ComponentKind::P, center));
        } else {
            debug_assert_eq!(classes.len(), 2);
            let (x, y) = self.virtual_pair(ua, ub);
            let mut it = classes.into_iter();
            let mut c1 = it.next().unwrap();
            let mut c2 = it.next().unwrap();
            c1.push(x);
            c2.push(y);
            work.push(c2);
            work.push(c1);
        }
    }
}

/// Triconnected components of a biconnected graph with at least 3 vertices.
pub fn triconnected_components(g: &Graph) -> Result<SeparationTree, DecomposeError> {
    if !is_biconnected(g) {
        return Err(DecomposeError::NotBiconnected);
    }
    let all: Vec<EdgeId> = (0..g.m()).collect();
    Ok(triconnected_of_edges(g, &all))
}

/// Separation tree of every block with at least 3 vertices, keyed by block
/// index in `blocks(g)`. Edge ids stay those of `g`.
pub fn block_separation_trees(g: &Graph) -> Vec<(usize, SeparationTree)> {
    blocks(g)
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| b.vertices.len() >= 3)
        .map(|(i, b)| (i, triconnected_of_edges(g, b.edges.as_slice())))
        .collect()
}

/// Same as [`triconnected_components`] for the subgraph on `edges`, which
/// the caller guarantees is biconnected with at least 3 vertices.
pub(crate) fn triconnected_of_edges(g: &Graph, edges: &[EdgeId]) -> SeparationTree {
    let arena: Vec<ArenaEdge> = edges
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            ArenaEdge {
                u,
                v,
                real: Some(e),
                virt: None,
            }
        })
        .collect();
    let mut sp = Splitter {
        arena,
        next_virt: 0,
        out: Vec::new(),
    };
    sp.run((0..edges.len()).collect());
    merge_same_kind(sp.arena, sp.out, sp.next_virt)
}

/// Merges adjacent S-S and P-P components and renumbers everything
/// deterministically.
fn merge_same_kind(
    arena: Vec<ArenaEdge>,
    comps: Vec<(ComponentKind, Vec<usize>)>,
    nvirt: usize,
) -> SeparationTree {
    let mut owner = vec![usize::MAX; arena.len()];
    for (c, (_, edges)) in comps.iter().enumerate() {
        for &e in edges {
            owner[e] = c;
        }
    }
    let mut copies = vec![Vec::with_capacity(2); nvirt];
    for (i, e) in arena.iter().enumerate() {
        if let Some(k) = e.virt {
            copies[k].push(i);
        }
    }
    let mut uf: Vec<usize> = (0..comps.len()).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    let mut dropped = vec![false; nvirt];
    for (k, c) in copies.iter().enumerate() {
        let (c1, c2) = (owner[c[0]], owner[c[1]]);
        let (k1, k2) = (comps[c1].0, comps[c2].0);
        if k1 == k2 && k1 != ComponentKind::R {
            dropped[k] = true;
            let (r1, r2) = (find(&mut uf, c1), find(&mut uf, c2));
            uf[r1.max(r2)] = r1.min(r2);
        }
    }
    let mut groups: BTreeMap<usize, (ComponentKind, Vec<usize>)> = BTreeMap::new();
    for (c, (kind, edges)) in comps.iter().enumerate() {
        let r = find(&mut uf, c);
        let entry = groups.entry(r).or_insert_with(|| (*kind, Vec::new()));
        entry
            .1
            .extend(edges.iter().copied().filter(|&e| arena[e].virt.is_none_or(|k| !dropped[k])));
    }
    let mut merged: Vec<(ComponentKind, Vec<usize>)> = groups.into_values().collect();
    let first_real = |edges: &Vec<usize>| {
        edges
            .iter()
            .filter_map(|&e| arena[e].real)
            .min()
            .unwrap_or(usize::MAX)
    };
    for (kind, edges) in merged.iter_mut() {
        edges.sort_by_key(|&e| (arena[e].real.unwrap_or(usize::MAX), e));
        if *kind == ComponentKind::S {
            order_cycle(&arena, edges);
        }
    }
    merged.sort_by_key(|(_, edges)| (first_real(edges), edges[0]));
    let mut renumber = vec![usize::MAX; nvirt];
    let mut pairs: Vec<VirtualPair> = Vec::new();
    let mut components = Vec::with_capacity(merged.len());
    for (c, (kind, edges)) in merged.into_iter().enumerate() {
        let tri = edges
            .into_iter()
            .map(|e| {
                let a = arena[e];
                let virtual_id = a.virt.map(|k| {
                    if renumber[k] == usize::MAX {
                        renumber[k] = pairs.len();
                        pairs.push(VirtualPair {
                            id: pairs.len(),
                            pair: (a.u.min(a.v), a.u.max(a.v)),
                            components: (c, usize::MAX),
                        });
                    } else {
                        pairs[renumber[k]].components.1 = c;
                    }
                    renumber[k]
                });
                TriEdge {
                    u: a.u,
                    v: a.v,
                    real: a.real,
                    virtual_id,
                }
            })
            .collect();
        components.push(TriComponent { kind, edges: tri });
    }
    SeparationTree {
        components,
        virtual_pairs: pairs,
    }
}

/// Reorders the edges of a cycle component so consecutive edges share a
/// vertex, starting from the first edge.
fn order_cycle(arena: &[ArenaEdge], edges: &mut [usize]) {
    let n = edges.len();
    let start = arena[edges[0]];
    let mut at = start.v;
    for i in 1..n {
        let j = (i..n)
            .find(|&j| arena[edges[j]].u == at || arena[edges[j]].v == at)
            .expect("cycle component");
        edges.swap(i, j);
        let e = arena[edges[i]];
        at = if e.u == at { e.v } else { e.u };
    }
}

/// Rotation of one triconnected component: for each of its vertices the
/// cyclic order of local edge indices, plus an optional external dart given
/// as `(local edge, tail vertex)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEmbedding {
    pub rotation: Vec<(VertexId, Vec<usize>)>,
    pub external: Option<(usize, VertexId)>,
}

impl ComponentEmbedding {
    /// Direct embedding for S and P components; `None` for R.
    pub fn trivial(comp: &TriComponent) -> Option<Self> {
        match comp.kind {
            ComponentKind::R => None,
            ComponentKind::P => {
                let (u, v) = (comp.edges[0].u.min(comp.edges[0].v), comp.edges[0].u.max(comp.edges[0].v));
                let fwd: Vec<usize> = (0..comp.edges.len()).collect();
                let back: Vec<usize> = fwd.iter().rev().copied().collect();
                Some(ComponentEmbedding {
                    rotation: vec![(u, fwd), (v, back)],
                    external: Some((0, u)),
                })
            }
            ComponentKind::S => {
                let k = comp.edges.len();
                let mut rot: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
                for i in 0..k {
                    let e = comp.edges[i];
                    rot.entry(e.u).or_default().push(i);
                    rot.entry(e.v).or_default().push(i);
                }
                let first = comp.edges[0];
                let next = comp.edges[1 % k];
                let tail = if first.v == next.u || first.v == next.v {
                    first.u
                } else {
                    first.v
                };
                Some(ComponentEmbedding {
                    rotation: rot.into_iter().collect(),
                    external: Some((0, tail)),
                })
            }
        }
    }

    /// Lifts an embedding of [`TriComponent::local_graph`].
    pub fn from_local(emb: &PlanarEmbedding, local: &Graph, vmap: &[VertexId]) -> Self {
        let rotation = emb
            .rotation
            .iter()
            .enumerate()
            .map(|(v, rot)| (vmap[v], rot.clone()))
            .collect();
        let external = emb.faces.get(emb.external).and_then(|f| {
            if f.len() < 2 {
                return None;
            }
            local.edge_between(f[0], f[1]).map(|e| (e, vmap[f[0]]))
        });
        ComponentEmbedding { rotation, external }
    }
}

/// Rotation of one block on global edge ids, sparse over its vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRotation {
    pub rotation: Vec<(VertexId, Vec<EdgeId>)>,
    /// External dart as `(edge, tail vertex)`.
    pub external: Option<(EdgeId, VertexId)>,
}

impl BlockRotation {
    pub fn single_edge(g: &Graph, e: EdgeId) -> Self {
        let (u, v) = g.endpoints(e);
        let mut rotation = vec![(u, vec![e]), (v, vec![e])];
        rotation.sort_unstable();
        BlockRotation {
            rotation,
            external: Some((e, u)),
        }
    }
}

/// Glues component rotations along virtual edges. At each separating pair
/// the rotation of the new component (read from just after its virtual edge)
/// replaces the virtual edge of the component already placed.
pub fn compose_rotation(
    st: &SeparationTree,
    embs: &[ComponentEmbedding],
) -> Result<BlockRotation, DecomposeError> {
    let nc = st.components.len();
    if embs.len() != nc {
        return Err(DecomposeError::InvalidComponentEmbedding(format!(
            "{} embeddings for {} components",
            embs.len(),
            nc
        )));
    }
    for (c, (comp, emb)) in st.components.iter().zip(embs).enumerate() {
        check_component_embedding(c, comp, emb)?;
    }
    type Slot = (usize, usize);
    let mut rot: BTreeMap<VertexId, Vec<Slot>> = BTreeMap::new();
    let mut local_rot: Vec<BTreeMap<VertexId, &Vec<usize>>> = embs
        .iter()
        .map(|e| e.rotation.iter().map(|(v, r)| (*v, r)).collect())
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nc];
    for p in &st.virtual_pairs {
        adj[p.components.0].push(p.id);
        adj[p.components.1].push(p.id);
    }
    // local index of each virtual copy per component
    let mut copy_in: Vec<Vec<(usize, usize)>> = vec![Vec::new(); st.virtual_pairs.len()];
    for (c, comp) in st.components.iter().enumerate() {
        for (i, e) in comp.edges.iter().enumerate() {
            if let Some(k) = e.virtual_id {
                copy_in[k].push((c, i));
            }
        }
    }
    let mut placed = vec![false; nc];
    placed[0] = true;
    for (v, r) in &local_rot[0] {
        rot.insert(*v, r.iter().map(|&i| (0, i)).collect());
    }
    let mut external: Option<(Slot, VertexId)> = embs[0].external.map(|(i, t)| ((0, i), t));
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for &k in &adj[a] {
            let (sa, sb) = (copy_in[k][0], copy_in[k][1]);
            let (from, to) = if sa.0 == a { (sa, sb) } else { (sb, sa) };
            let b = to.0;
            if placed[b] {
                continue;
            }
            placed[b] = true;
            let (x, y) = st.virtual_pairs[k].pair;
            for end in [x, y] {
                let brot = local_rot[b].get(&end).copied().ok_or_else(|| {
                    DecomposeError::InvalidComponentEmbedding(format!("component {b} misses vertex {end}"))
                })?;
                let pos = brot.iter().position(|&i| i == to.1).unwrap();
                let seq: Vec<Slot> = (1..brot.len())
                    .map(|s| (b, brot[(pos + s) % brot.len()]))
                    .collect();
                if external == Some((from, end)) {
                    external = Some((seq[0], end));
                }
                let target = rot.get_mut(&end).unwrap();
                let at = target.iter().position(|&s| s == from).unwrap();
                target.splice(at..=at, seq);
            }
            for (v, r) in &local_rot[b] {
                if *v != x && *v != y {
                    rot.insert(*v, r.iter().map(|&i| (b, i)).collect());
                }
            }
            queue.push_back(b);
        }
    }
    local_rot.clear();
    if placed.iter().any(|p| !p) {
        return Err(DecomposeError::InvalidComponentEmbedding(
            "components do not form a tree".into(),
        ));
    }
    let real = |s: Slot| st.components[s.0].edges[s.1].real;
    let rotation = rot
        .into_iter()
        .map(|(v, slots)| {
            let edges: Option<Vec<EdgeId>> = slots.into_iter().map(real).collect();
            edges
                .map(|e| (v, e))
                .ok_or_else(|| DecomposeError::InvalidComponentEmbedding("virtual edge left over".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let external = external.and_then(|(s, t)| real(s).map(|e| (e, t)));
    Ok(BlockRotation { rotation, external })
}

fn check_component_embedding(
    c: usize,
    comp: &TriComponent,
    emb: &ComponentEmbedding,
) -> Result<(), DecomposeError> {
    let bad = |msg: String| DecomposeError::InvalidComponentEmbedding(format!("component {c}: {msg}"));
    let mut seen = vec![0u8; comp.edges.len()];
    let vs = comp.vertices();
    if emb.rotation.len() != vs.len() {
        return Err(bad("rotation does not cover the component's vertices".into()));
    }
    for (v, r) in &emb.rotation {
        for &i in r {
            let e = comp.edges.get(i).ok_or_else(|| bad(format!("unknown edge {i}")))?;
            if e.u != *v && e.v != *v {
                return Err(bad(format!("edge {i} not incident to {v}")));
            }
            seen[i] += 1;
        }
    }
    if seen.iter().any(|&s| s != 2) {
        return Err(bad("rotation is not a permutation of incidences".into()));
    }
    Ok(())
}

/// Embedding of a biconnected graph from embeddings of its triconnected
/// components.
pub fn compose_triconnected(
    g: &Graph,
    st: &SeparationTree,
    embs: &[ComponentEmbedding],
) -> Result<PlanarEmbedding, DecomposeError> {
    let block = compose_rotation(st, embs)?;
    let bct = blocks(g);
    compose_blocks(g, &bct, &[block])
}

/// Splices block rotations at cut vertices: each block contributes one
/// contiguous arc, in block order. The external face is the one containing
/// the first block's external dart.
pub fn compose_blocks(
    g: &Graph,
    bct: &BlockCutTree,
    embs: &[BlockRotation],
) -> Result<PlanarEmbedding, DecomposeError> {
    if embs.len() != bct.blocks.len() {
        return Err(DecomposeError::InvalidComponentEmbedding(format!(
            "{} embeddings for {} blocks",
            embs.len(),
            bct.blocks.len()
        )));
    }
    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); g.n()];
    for b in embs {
        for (v, r) in &b.rotation {
            if *v >= g.n() {
                return Err(DecomposeError::InvalidComponentEmbedding(format!("vertex {v} out of range")));
            }
            rotation[*v].extend_from_slice(r);
        }
    }
    let external: Option<Dart> = embs
        .first()
        .and_then(|b| b.external)
        .map(|(e, t)| dart_from(g, e, t));
    PlanarEmbedding::from_rotation(g, rotation, external)
        .map_err(|e| DecomposeError::InvalidComponentEmbedding(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, wheel};

    pub(crate) fn two_k4_sharing_edge() -> Graph {
        // K4 on {0,1,2,3} and K4 on {0,1,4,5}, sharing edge (0,1)
        let mut pairs = Vec::new();
        for &(a, b) in &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
            pairs.push((a, b));
        }
        for &(a, b) in &[(0, 4), (0, 5), (1, 4), (1, 5), (4, 5)] {
            pairs.push((a, b));
        }
        Graph::new(6, &pairs).unwrap()
    }

    fn embed_components(st: &SeparationTree) -> Vec<ComponentEmbedding> {
        st.components
            .iter()
            .map(|c| {
                ComponentEmbedding::trivial(c).unwrap_or_else(|| {
                    // K4 is the only R component in these tests
                    let (lg, vmap) = c.local_graph().unwrap();
                    let emb = crate::embed3::embed_triconnected(&lg).expect("planar");
                    ComponentEmbedding::from_local(&emb, &lg, &vmap)
                })
            })
            .collect()
    }

    fn count_kind(st: &SeparationTree, k: ComponentKind) -> usize {
        st.components.iter().filter(|c| c.kind == k).count()
    }

    #[test]
    fn block_examples() {
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let bct = blocks(&bowtie);
        assert_eq!(bct.blocks.len(), 2);
        assert_eq!(bct.cut_vertices, vec![0]);

        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let bct = blocks(&p4);
        assert_eq!(bct.blocks.len(), 3);
        assert!(bct.blocks.iter().all(|b| b.edges.len() == 1));
        assert_eq!(bct.cut_vertices, vec![1, 2]);

        let bct = blocks(&complete(4));
        assert_eq!(bct.blocks.len(), 1);
        assert!(bct.cut_vertices.is_empty());
    }

    #[test]
    fn triconnected_examples() {
        let st = triconnected_components(&complete(4)).unwrap();
        assert_eq!(st.components.len(), 1);
        assert_eq!(st.components[0].kind, ComponentKind::R);
        assert!(st.separating_pairs().is_empty());

        let st = triconnected_components(&cycle(5)).unwrap();
        assert_eq!(st.components.len(), 1);
        assert_eq!(st.components[0].kind, ComponentKind::S);

        let g = two_k4_sharing_edge();
        let st = triconnected_components(&g).unwrap();
        assert_eq!(count_kind(&st, ComponentKind::R), 2);
        assert_eq!(count_kind(&st, ComponentKind::P), 1);
        assert_eq!(st.separating_pairs(), vec![(0, 1)]);
        let p = st.components.iter().find(|c| c.kind == ComponentKind::P).unwrap();
        assert_eq!(p.edges.len(), 3);
    }

    #[test]
    fn not_biconnected_is_rejected() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(triconnected_components(&p3), Err(DecomposeError::NotBiconnected));
    }

    #[test]
    fn round_trip_and_virtual_pairs() {
        for g in [two_k4_sharing_edge(), wheel(6), cycle(7), crate::graph::grid(3, 4)] {
            let st = triconnected_components(&g).unwrap();
            let merged = st.merged_edges();
            let expect: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| (u.min(v), u.max(v), e))
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            assert_eq!(merged, expect);
            for p in &st.virtual_pairs {
                let (a, b) = p.components;
                assert_ne!(a, b);
                for c in [a, b] {
                    let n = st.components[c]
                        .edges
                        .iter()
                        .filter(|e| e.virtual_id == Some(p.id))
                        .count();
                    assert_eq!(n, 1);
                }
                // no S-S or P-P neighbours survive merging
                let (ka, kb) = (st.components[a].kind, st.components[b].kind);
                assert!(ka != kb || ka == ComponentKind::R);
            }
        }
    }

    #[test]
    fn grid_components() {
        // the 3x4 grid has separating pairs at its corners
        let st = triconnected_components(&crate::graph::grid(3, 4)).unwrap();
        assert!(count_kind(&st, ComponentKind::S) >= 1);
        assert!(count_kind(&st, ComponentKind::R) >= 1);
    }

    #[test]
    fn compose_identity_and_two_k4() {
        let k4 = complete(4);
        let st = triconnected_components(&k4).unwrap();
        let embs = embed_components(&st);
        let emb = compose_triconnected(&k4, &st, &embs).unwrap();
        assert_eq!(emb.face_count(), 4);

        let g = two_k4_sharing_edge();
        let st = triconnected_components(&g).unwrap();
        let embs = embed_components(&st);
        let emb = compose_triconnected(&g, &st, &embs).unwrap();
        assert_eq!(emb.face_count(), 7);
        assert!(crate::oracle::verify_embedding(&g, &emb).unwrap());
    }

    #[test]
    fn compose_bond_in_any_order() {
        // theta graph: three paths between 0 and 1
        let g = Graph::new(5, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap();
        let st = triconnected_components(&g).unwrap();
        let p = st.components.iter().position(|c| c.kind == ComponentKind::P).unwrap();
        assert_eq!(st.components[p].edges.len(), 3);
        let mut embs = embed_components(&st);
        // reverse the bond's cyclic order
        for (_, r) in embs[p].rotation.iter_mut() {
            r.reverse();
        }
        let emb = compose_triconnected(&g, &st, &embs).unwrap();
        assert_eq!(emb.face_count(), 3);
        assert!(crate::oracle::verify_embedding(&g, &emb).unwrap());
    }

    #[test]
    fn compose_blocks_examples() {
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let emb = crate::embed3::embed(&bowtie).unwrap();
        assert_eq!(emb.face_count(), 3);

        let star = Graph::new(
            7,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4), (0, 5), (5, 6), (0, 6)],
        )
        .unwrap();
        let emb = crate::embed3::embed(&star).unwrap();
        assert_eq!(emb.face_count(), 4);
        assert!(crate::oracle::verify_embedding(&star, &emb).unwrap());
        // each block is contiguous around the cut vertex
        let block_of = |e: EdgeId| e / 3;
        let r = &emb.rotation[0];
        let changes = (0..r.len())
            .filter(|&i| block_of(r[i]) != block_of(r[(i + 1) % r.len()]))
            .count();
        assert_eq!(changes, 3);
    }

    #[test]
    fn bad_component_embedding_is_rejected() {
        let g = cycle(4);
        let st = triconnected_components(&g).unwrap();
        let mut embs = embed_components(&st);
        embs[0].rotation[0].1.pop();
        assert!(compose_triconnected(&g, &st, &embs).is_err());
    }
}
