//! Embedding 3-connected graphs by changing the cycle basis from fundamental
//! cycles to faces, and the full pipeline for arbitrary graphs.
//!
//! For a 3-connected planar graph the faces are exactly its induced
//! non-separating cycles. Starting from one fundamental cycle that is a face
//! (`e0`), every other fundamental cycle `C(e)` splits the graph into the
//! side containing `e0` and the other side; the bridges on the other side are
//! read off a 2-coloring of the conflict graph of `C(e)`. The face of `e` is
//! `C(e)` plus the fundamental cycles immediately enclosed by it.

use serde::{Deserialize, Serialize};

use crate::conflict::{bridge_of_edge, bridges_unchecked, conflict_graph, ConflictGraph, OddCycleWitness, TwoColoring};
use crate::decompose::{self, BlockRotation, ComponentEmbedding};
use crate::embedding::{dart_from, Dart, PlanarEmbedding};
use crate::error::EmbedError;
use crate::graph::{classify_cycle, fundamental_cycle, spanning_tree, Cycle, EdgeId, EdgeSet, Graph, SpanningTree, VertexId};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvidenceReason {
    NoFundamentalFace,
    NonbipartiteConflict,
    FaceCheckFailed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum EvidencePayload {
    /// No fundamental cycle of the BFS tree rooted at 0 is induced and
    /// non-separating.
    NoCandidate,
    /// A cycle whose conflict graph contains the given odd closed walk.
    OddConflict { cycle: Cycle, walk: OddCycleWitness },
    /// An edge that lies on `covering.len() != 2` members of `family`.
    EdgeCoverage {
        edge: EdgeId,
        covering: Vec<usize>,
        family: Vec<EdgeSet>,
    },
    /// A member of the family that is not a simple, induced, non-separating
    /// cycle.
    BadFace { face: usize, edges: EdgeSet },
    /// The face walks pass every local check but admit no rotation system
    /// satisfying Euler's formula.
    Inconsistent { faces: Vec<Vec<VertexId>> },
}

/// Why a graph was rejected. `subject` is the graph the payload refers to:
/// the input itself, or a triconnected component of it (which may contain
/// virtual edges), with `vertex_map` translating its vertices to the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonPlanarEvidence {
    pub reason: EvidenceReason,
    pub payload: EvidencePayload,
    pub subject: Graph,
    pub vertex_map: Vec<VertexId>,
}

impl std::fmt::Display for NonPlanarEvidence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let what = match self.reason {
            EvidenceReason::NoFundamentalFace => "no fundamental cycle is a face candidate",
            EvidenceReason::NonbipartiteConflict => "a conflict graph is not bipartite",
            EvidenceReason::FaceCheckFailed => "the candidate face family is not a face set",
        };
        write!(f, "non-planar: {what}")
    }
}

impl std::error::Error for NonPlanarEvidence {}

impl NonPlanarEvidence {
    fn new(g: &Graph, reason: EvidenceReason, payload: EvidencePayload) -> Self {
        NonPlanarEvidence {
            reason,
            payload,
            subject: g.clone(),
            vertex_map: (0..g.n()).collect(),
        }
    }

    /// Re-checks the payload against `subject` from scratch.
    pub fn validate(&self) -> bool {
        let g = &self.subject;
        match &self.payload {
            EvidencePayload::NoCandidate => match spanning_tree(g, 0) {
                Ok(t) => find_fundamental_face(g, &t).is_none(),
                Err(_) => false,
            },
            EvidencePayload::OddConflict { cycle, walk } => match conflict_graph(g, cycle) {
                Ok(h) => walk.is_valid_in(&h),
                Err(_) => false,
            },
            EvidencePayload::EdgeCoverage { edge, covering, family } => {
                let recount: Vec<usize> = family
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.contains(*edge))
                    .map(|(i, _)| i)
                    .collect();
                *edge < g.m() && recount == *covering && recount.len() != 2
            }
            EvidencePayload::BadFace { edges, .. } => match Cycle::from_edge_set(g, edges) {
                Err(_) => true,
                Ok(c) => classify_cycle(g, &c).map(|f| !(f.induced && f.nonseparating)).unwrap_or(true),
            },
            EvidencePayload::Inconsistent { faces } => match faces_to_rotation(g, faces) {
                Err(_) => true,
                Ok(emb) => !emb.satisfies_euler(g),
            },
        }
    }
}

/// The smallest non-tree edge whose fundamental cycle is induced and
/// non-separating.
pub fn find_fundamental_face(g: &Graph, t: &SpanningTree) -> Option<EdgeId> {
    let candidates: Vec<EdgeId> = t.non_tree_edges().collect();
    par::find_first(candidates.len(), |i| {
        let c = fundamental_cycle(g, t, candidates[i]).expect("non-tree edge");
        let f = classify_cycle(g, &c).expect("fundamental cycle is valid");
        f.induced && f.nonseparating
    })
    .map(|i| candidates[i])
}

/// The relation `e' ≺ e` ("`e'` lies on the far side of `C(e)` from `e0`")
/// between non-tree edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnclosureRelation {
    pub anchor: EdgeId,
    pub n: usize,
    pub m: usize,
    /// Non-tree edges in ascending order.
    pub non_tree: Vec<EdgeId>,
    /// `C(e)` indexed by edge id; `None` for tree edges.
    pub cycles: Vec<Option<Cycle>>,
    /// `below[e]` lists every `e'` with `e' ≺ e`, ascending.
    pub below: Vec<Vec<EdgeId>>,
    /// Whether the conflict graph of `C(e)` was connected, per edge.
    pub conflict_connected: Vec<bool>,
}

impl EnclosureRelation {
    pub fn pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut out = Vec::new();
        for (e, list) in self.below.iter().enumerate() {
            for &x in list {
                out.push((x, e));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn precedes(&self, a: EdgeId, b: EdgeId) -> bool {
        self.below[b].binary_search(&a).is_ok()
    }

    pub fn cycle(&self, e: EdgeId) -> &Cycle {
        self.cycles[e].as_ref().expect("non-tree edge")
    }
}

/// Builds and 2-colors the conflict graph of every fundamental cycle, with
/// the bridge containing `e0` as anchor.
pub fn enclosure(g: &Graph, t: &SpanningTree, e0: EdgeId) -> Result<EnclosureRelation, NonPlanarEvidence> {
    let non_tree: Vec<EdgeId> = t.non_tree_edges().collect();
    let results = par::map(&non_tree, |&e| -> Result<(Cycle, Vec<EdgeId>, bool), NonPlanarEvidence> {
        let c = fundamental_cycle(g, t, e).expect("non-tree edge");
        if e == e0 {
            return Ok((c, Vec::new(), true));
        }
        let bridges = bridges_unchecked(g, &c);
        let bmap = bridge_of_edge(g.m(), &bridges);
        let h = ConflictGraph::from_bridges(c, bridges, g.n());
        let anchor = bmap[e0];
        let coloring = crate::conflict::two_color(&h, anchor).expect("anchor is a bridge of the cycle");
        match coloring {
            TwoColoring::OddCycle(walk) => Err(NonPlanarEvidence::new(
                g,
                EvidenceReason::NonbipartiteConflict,
                EvidencePayload::OddConflict {
                    cycle: h.cycle.clone(),
                    walk,
                },
            )),
            TwoColoring::Colors(color) => {
                let below = non_tree
                    .iter()
                    .copied()
                    .filter(|&x| x != e && x != e0 && color[bmap[x]] == 1)
                    .collect();
                let connected = h.is_connected();
                Ok((h.cycle, below, connected))
            }
        }
    });
    let mut cycles = vec![None; g.m()];
    let mut below = vec![Vec::new(); g.m()];
    let mut conflict_connected = vec![true; g.m()];
    for (r, &e) in results.into_iter().zip(&non_tree) {
        let (c, b, conn) = r?;
        cycles[e] = Some(c);
        below[e] = b;
        conflict_connected[e] = conn;
    }
    Ok(EnclosureRelation {
        anchor: e0,
        n: g.n(),
        m: g.m(),
        non_tree,
        cycles,
        below,
        conflict_connected,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceLabel {
    /// `F(e)` for a non-tree edge `e ≠ e0`.
    Edge(EdgeId),
    External,
    Complement,
}

/// Candidate faces: `F(e)` for every non-tree `e ≠ e0` in ascending order,
/// then `C(e0)`, then the GF(2) sum of all of these.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceBasis {
    pub labels: Vec<FaceLabel>,
    pub faces: Vec<EdgeSet>,
    /// Immediate predecessors `P(e)` per face; empty for the last two.
    pub predecessors: Vec<Vec<EdgeId>>,
}

impl FaceBasis {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Sum of edge lists over GF(2) by sorting and cancelling pairs.
fn xor_lists<'a>(sets: impl IntoIterator<Item = &'a [EdgeId]>) -> EdgeSet {
    let mut all: Vec<EdgeId> = sets.into_iter().flatten().copied().collect();
    all.sort_unstable();
    let mut out = Vec::with_capacity(all.len());
    let mut i = 0;
    while i < all.len() {
        let mut j = i;
        while j < all.len() && all[j] == all[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(all[i]);
        }
        i = j;
    }
    EdgeSet::from_sorted_unchecked(out)
}

/// Face candidates from the enclosure relation.
///
/// `P(e)` is the set of maximal elements of `{e' : e' ≺ e}`. They are found
/// by scanning that set in order of decreasing down-set size and skipping
/// anything already below a chosen element, which is exact whenever `≺` is
/// transitive (always, for planar input; anything else is caught by the face
/// checks).
pub fn face_basis(rel: &EnclosureRelation) -> FaceBasis {
    let targets: Vec<EdgeId> = rel.non_tree.iter().copied().filter(|&e| e != rel.anchor).collect();
    let computed = par::map_range_with(
        targets.len(),
        || (vec![usize::MAX; rel.m], Vec::new()),
        |(mark, order): &mut (Vec<usize>, Vec<EdgeId>), i| {
            let e = targets[i];
            order.clear();
            order.extend_from_slice(&rel.below[e]);
            order.sort_by_key(|&x| (std::cmp::Reverse(rel.below[x].len()), x));
            let mut preds = Vec::new();
            for &x in order.iter() {
                if mark[x] == i {
                    continue;
                }
                preds.push(x);
                for &y in &rel.below[x] {
                    mark[y] = i;
                }
            }
            preds.sort_unstable();
            let face = xor_lists(
                std::iter::once(rel.cycle(e).edges().as_slice())
                    .chain(preds.iter().map(|&x| rel.cycle(x).edges().as_slice())),
            );
            (face, preds)
        },
    );
    let mut labels = Vec::with_capacity(targets.len() + 2);
    let mut faces = Vec::with_capacity(targets.len() + 2);
    let mut predecessors = Vec::with_capacity(targets.len() + 2);
    for (&e, (face, preds)) in targets.iter().zip(computed) {
        labels.push(FaceLabel::Edge(e));
        faces.push(face);
        predecessors.push(preds);
    }
    labels.push(FaceLabel::External);
    faces.push(rel.cycle(rel.anchor).edges().clone());
    predecessors.push(Vec::new());
    let complement = EdgeSet::xor_all(rel.m, faces.iter());
    labels.push(FaceLabel::Complement);
    faces.push(complement);
    predecessors.push(Vec::new());
    FaceBasis {
        labels,
        faces,
        predecessors,
    }
}

/// Checks that every edge lies on exactly two candidates, then that every
/// candidate is a simple cycle, and in strict mode also induced and
/// non-separating.
pub fn verify_face_family(g: &Graph, fb: &FaceBasis, strict: bool) -> Result<(), NonPlanarEvidence> {
    let mut count = vec![0usize; g.m()];
    for f in &fb.faces {
        for e in f.iter() {
            count[e] += 1;
        }
    }
    if let Some(edge) = count.iter().position(|&c| c != 2) {
        let covering = fb
            .faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.contains(edge))
            .map(|(i, _)| i)
            .collect();
        return Err(NonPlanarEvidence::new(
            g,
            EvidenceReason::FaceCheckFailed,
            EvidencePayload::EdgeCoverage {
                edge,
                covering,
                family: fb.faces.clone(),
            },
        ));
    }
    let bad = par::find_first(fb.faces.len(), |i| match Cycle::from_edge_set(g, &fb.faces[i]) {
        Err(_) => true,
        Ok(c) => {
            strict && {
                let flags = classify_cycle(g, &c).expect("valid cycle");
                !(flags.induced && flags.nonseparating)
            }
        }
    });
    if let Some(face) = bad {
        return Err(NonPlanarEvidence::new(
            g,
            EvidenceReason::FaceCheckFailed,
            EvidencePayload::BadFace {
                face,
                edges: fb.faces[face].clone(),
            },
        ));
    }
    Ok(())
}

/// Recovers a rotation system from face walks. Walks are first oriented
/// consistently (every edge traversed once in each direction); then each
/// angle `(u, v, w)` says that edge `vw` follows edge `vu` around `v`. The
/// face containing the first step of `faces[0]` becomes the external face.
pub fn faces_to_rotation(g: &Graph, faces: &[Vec<VertexId>]) -> Result<PlanarEmbedding, EmbedError> {
    let bad = |msg: String| EmbedError::MalformedFaces(msg);
    let mut darts: Vec<Vec<Dart>> = Vec::with_capacity(faces.len());
    let mut occ: Vec<Vec<(usize, bool)>> = vec![Vec::new(); g.m()];
    for (f, walk) in faces.iter().enumerate() {
        let k = walk.len();
        if k < 2 {
            if k == 1 && walk[0] < g.n() && g.degree(walk[0]) == 0 {
                darts.push(Vec::new());
                continue;
            }
            return Err(bad(format!("face {f} is too short")));
        }
        let mut d = Vec::with_capacity(k);
        for i in 0..k {
            let (u, v) = (walk[i], walk[(i + 1) % k]);
            if u >= g.n() || v >= g.n() {
                return Err(bad(format!("face {f} has an unknown vertex")));
            }
            let e = g
                .edge_between(u, v)
                .ok_or_else(|| bad(format!("face {f} steps along a non-edge ({u},{v})")))?;
            let dart = dart_from(g, e, u);
            occ[e].push((f, dart % 2 == 0));
            d.push(dart);
        }
        darts.push(d);
    }
    if let Some(e) = occ.iter().position(|o| o.len() != 2) {
        return Err(bad(format!("edge {e} lies on {} face steps", occ[e].len())));
    }
    // orient: flip[f] says whether walk f is reversed
    let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
    let mut nbrs: Vec<Vec<(usize, bool)>> = vec![Vec::new(); faces.len()];
    for o in &occ {
        let ((f1, d1), (f2, d2)) = (o[0], o[1]);
        // flips of f1 and f2 must differ iff the steps have the same direction
        let differ = d1 == d2;
        if f1 == f2 {
            if differ {
                return Err(bad(format!("face {f1} traverses an edge twice in one direction")));
            }
            continue;
        }
        nbrs[f1].push((f2, differ));
        nbrs[f2].push((f1, differ));
    }
    for s in 0..faces.len() {
        if flip[s].is_some() {
            continue;
        }
        flip[s] = Some(false);
        let mut stack = vec![s];
        while let Some(f) = stack.pop() {
            let ff = flip[f].unwrap();
            for &(h, differ) in &nbrs[f] {
                let want = ff ^ differ;
                match flip[h] {
                    None => {
                        flip[h] = Some(want);
                        stack.push(h);
                    }
                    Some(x) if x != want => {
                        return Err(bad("faces cannot be oriented consistently".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    for (f, d) in darts.iter_mut().enumerate() {
        if flip[f] == Some(true) {
            d.reverse();
            for x in d.iter_mut() {
                *x ^= 1;
            }
        }
    }
    // next[d] for a dart d leaving v is the dart leaving v after it
    let mut next = vec![usize::MAX; 2 * g.m()];
    for d in &darts {
        let k = d.len();
        for i in 0..k {
            let (din, dout) = (d[i], d[(i + 1) % k]);
            let back = din ^ 1;
            if next[back] != usize::MAX {
                return Err(bad("an angle is used twice".into()));
            }
            next[back] = dout;
        }
    }
    let mut rotation = vec![Vec::new(); g.n()];
    for v in 0..g.n() {
        let deg = g.degree(v);
        if deg == 0 {
            continue;
        }
        let (_, e0) = g.neighbors(v)[0];
        let start = dart_from(g, e0, v);
        let mut d = start;
        loop {
            rotation[v].push(d / 2);
            d = next[d];
            if d == usize::MAX || d == start || rotation[v].len() > deg {
                break;
            }
        }
        if d != start || rotation[v].len() != deg {
            return Err(bad(format!("angles at vertex {v} do not form one cycle")));
        }
    }
    let external = darts.first().and_then(|d| d.first().copied());
    let emb = PlanarEmbedding::from_rotation(g, rotation, external)?;
    let canon = |mut d: Vec<Dart>| {
        d.sort_unstable();
        d
    };
    let mut want: Vec<Vec<Dart>> = darts.into_iter().filter(|d| !d.is_empty()).map(canon).collect();
    let mut got: Vec<Vec<Dart>> = crate::embedding::trace_darts(g, &emb.rotation)?
        .faces
        .into_iter()
        .map(canon)
        .collect();
    want.sort();
    got.sort();
    if want != got {
        return Err(bad("re-traced faces differ from the input walks".into()));
    }
    Ok(emb)
}

fn trivial_rotation(g: &Graph) -> PlanarEmbedding {
    let rotation = (0..g.n())
        .map(|v| g.neighbors(v).iter().map(|&(_, e)| e).collect())
        .collect();
    PlanarEmbedding::from_rotation(g, rotation, Some(0)).expect("adjacency order is a rotation")
}

/// Embeds a 3-connected graph, or explains why it is not planar.
///
/// Inputs that are not 3-connected are accepted; they either embed
/// correctly or are rejected with evidence that still re-validates.
pub fn embed_triconnected(g: &Graph) -> Result<PlanarEmbedding, NonPlanarEvidence> {
    embed_triconnected_with(g, true)
}

pub fn embed_triconnected_with(g: &Graph, strict: bool) -> Result<PlanarEmbedding, NonPlanarEvidence> {
    if !g.is_connected() {
        return embed(g);
    }
    if g.m() + 1 == g.n() || g.m() == 0 {
        return Ok(trivial_rotation(g));
    }
    if g.m() == g.n() && (0..g.n()).all(|v| g.degree(v) == 2) {
        let c = Cycle::from_edge_set(g, &(0..g.m()).collect()).expect("a 2-regular connected graph is a cycle");
        let rotation = crate::embedding::cycle_rotation(g, c.vertices());
        return Ok(PlanarEmbedding::from_rotation(g, rotation, Some(0)).expect("cycle rotation"));
    }
    let t = spanning_tree(g, 0).expect("connected");
    let e0 = find_fundamental_face(g, &t)
        .ok_or_else(|| NonPlanarEvidence::new(g, EvidenceReason::NoFundamentalFace, EvidencePayload::NoCandidate))?;
    let rel = enclosure(g, &t, e0)?;
    let fb = face_basis(&rel);
    verify_face_family(g, &fb, strict)?;
    // external face first
    let k = fb.faces.len();
    let walks: Vec<Vec<VertexId>> = std::iter::once(k - 2)
        .chain((0..k).filter(|&i| i != k - 2))
        .map(|i| Cycle::from_edge_set(g, &fb.faces[i]).expect("checked").vertices().to_vec())
        .collect();
    let inconsistent = |walks: Vec<Vec<VertexId>>| {
        NonPlanarEvidence::new(g, EvidenceReason::FaceCheckFailed, EvidencePayload::Inconsistent { faces: walks })
    };
    match faces_to_rotation(g, &walks) {
        Ok(emb) if emb.satisfies_euler(g) => Ok(emb),
        _ => Err(inconsistent(walks)),
    }
}

/// Embeds any graph: blocks, then triconnected components, each R component
/// through [`embed_triconnected`], then composition.
pub fn embed(g: &Graph) -> Result<PlanarEmbedding, NonPlanarEvidence> {
    let bct = decompose::blocks(g);
    let rotations = par::map(&bct.blocks, |b| embed_block(g, b.edges.as_slice()));
    let rotations = rotations.into_iter().collect::<Result<Vec<_>, _>>()?;
    let emb = decompose::compose_blocks(g, &bct, &rotations).expect("block rotations compose");
    debug_assert!(emb.satisfies_euler(g));
    Ok(emb)
}

fn embed_block(g: &Graph, edges: &[EdgeId]) -> Result<BlockRotation, NonPlanarEvidence> {
    if edges.len() == 1 {
        return Ok(BlockRotation::single_edge(g, edges[0]));
    }
    let st = decompose::triconnected_of_edges(g, edges);
    let embs = st
        .components
        .iter()
        .map(|comp| match ComponentEmbedding::trivial(comp) {
            Some(e) => Ok(e),
            None => {
                let (lg, vmap) = comp.local_graph().expect("R components are simple");
                match embed_triconnected(&lg) {
                    Ok(emb) => Ok(ComponentEmbedding::from_local(&emb, &lg, &vmap)),
                    Err(mut ev) => {
                        ev.vertex_map = ev.vertex_map.iter().map(|&v| vmap[v]).collect();
                        Err(ev)
                    }
                }
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(decompose::compose_rotation(&st, &embs).expect("component rotations compose"))
}

/// Planarity test through [`embed`].
pub fn is_planar(g: &Graph) -> bool {
    embed(g).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_graph, complete, cycle, grid, wheel};
    use std::collections::BTreeSet;

    fn star_tree(g: &Graph) -> SpanningTree {
        let t = spanning_tree(g, 0).unwrap();
        assert!((1..g.n()).all(|v| t.depth(v) == 1));
        t
    }

    fn edge_sets(g: &Graph, walks: &[Vec<VertexId>]) -> BTreeSet<EdgeSet> {
        walks
            .iter()
            .map(|w| {
                (0..w.len())
                    .map(|i| g.edge_between(w[i], w[(i + 1) % w.len()]).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn fundamental_face_examples() {
        let w5 = wheel(5);
        let t = star_tree(&w5);
        let e0 = find_fundamental_face(&w5, &t).unwrap();
        assert_eq!(w5.endpoints(e0), (1, 2));

        let c6 = cycle(6);
        let t = spanning_tree(&c6, 0).unwrap();
        let only: Vec<_> = t.non_tree_edges().collect();
        assert_eq!(find_fundamental_face(&c6, &t), Some(only[0]));

        let k33 = canonical_graph("K33").unwrap();
        let t = spanning_tree(&k33, 0).unwrap();
        let e0 = find_fundamental_face(&k33, &t).unwrap();
        assert_eq!(k33.endpoints(e0), (1, 4));
    }

    #[test]
    fn enclosure_is_empty_for_w5_and_k5() {
        let w5 = wheel(5);
        let t = star_tree(&w5);
        let rel = enclosure(&w5, &t, w5.edge_between(1, 2).unwrap()).unwrap();
        assert!(rel.pairs().is_empty());

        let k5 = complete(5);
        let t = star_tree(&k5);
        let rel = enclosure(&k5, &t, k5.edge_between(1, 2).unwrap()).unwrap();
        assert!(rel.pairs().is_empty());
    }

    #[test]
    fn prism_enclosure_matches_containment() {
        let g = canonical_graph("prism").unwrap();
        let t = spanning_tree(&g, 0).unwrap();
        let e0 = find_fundamental_face(&g, &t).unwrap();
        let rel = enclosure(&g, &t, e0).unwrap();
        assert!(!rel.pairs().is_empty());
        // e' ≺ e means e' is not on the e0 side of C(e): in the unique
        // embedding, the face sets on either side of C(e) determine that
        let emb = embed_triconnected(&g).unwrap();
        let faces = edge_sets(&g, &emb.faces);
        let outer: EdgeSet = rel.cycle(e0).edges().clone();
        for &e in &rel.non_tree {
            if e == e0 {
                continue;
            }
            let c = rel.cycle(e);
            // faces on the far side: flood from faces not containing e0's face
            let far = far_side(&faces, c.edges(), &outer);
            for &x in &rel.non_tree {
                if x == e || x == e0 {
                    continue;
                }
                let inside = far.iter().any(|f| f.contains(x));
                assert_eq!(rel.precedes(x, e), inside, "edge {x} vs cycle of {e}");
            }
        }
    }

    /// Union of the faces separated from `outer` by the cycle `c`.
    fn far_side(faces: &BTreeSet<EdgeSet>, c: &EdgeSet, outer: &EdgeSet) -> Vec<EdgeSet> {
        let faces: Vec<&EdgeSet> = faces.iter().collect();
        let mut seen = vec![false; faces.len()];
        let start = faces.iter().position(|f| *f == outer).unwrap();
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..faces.len() {
                if !seen[j] && faces[i].iter().any(|e| faces[j].contains(e) && !c.contains(e)) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        faces
            .iter()
            .zip(&seen)
            .filter(|(_, s)| !**s)
            .map(|(f, _)| (*f).clone())
            .collect()
    }

    #[test]
    fn w5_face_basis() {
        let w5 = wheel(5);
        let t = star_tree(&w5);
        let rel = enclosure(&w5, &t, w5.edge_between(1, 2).unwrap()).unwrap();
        let fb = face_basis(&rel);
        assert_eq!(fb.len(), w5.m() - w5.n() + 2);
        let tri = |a, b, c| -> EdgeSet {
            [w5.edge_between(a, b), w5.edge_between(b, c), w5.edge_between(a, c)]
                .into_iter()
                .map(Option::unwrap)
                .collect()
        };
        let rim: EdgeSet = (1..=5)
            .map(|i| w5.edge_between(i, i % 5 + 1).unwrap())
            .collect();
        let expect: BTreeSet<EdgeSet> =
            [tri(0, 2, 3), tri(0, 3, 4), tri(0, 4, 5), tri(0, 5, 1), tri(0, 1, 2), rim.clone()]
                .into_iter()
                .collect();
        let got: BTreeSet<EdgeSet> = fb.faces.iter().cloned().collect();
        assert_eq!(got, expect);
        assert_eq!(fb.faces.last().unwrap(), &rim);
        assert!(EdgeSet::xor_all(w5.m(), fb.faces.iter()).is_empty());
        assert!(verify_face_family(&w5, &fb, true).is_ok());
    }

    #[test]
    fn c6_faces_coincide() {
        let c6 = cycle(6);
        let t = spanning_tree(&c6, 0).unwrap();
        let e0 = find_fundamental_face(&c6, &t).unwrap();
        let rel = enclosure(&c6, &t, e0).unwrap();
        let fb = face_basis(&rel);
        assert_eq!(fb.len(), 2);
        assert_eq!(fb.faces[0], fb.faces[1]);
        assert!(verify_face_family(&c6, &fb, true).is_ok());
    }

    #[test]
    fn k5_family_is_rejected_at_a_spoke() {
        let k5 = complete(5);
        let t = star_tree(&k5);
        let rel = enclosure(&k5, &t, k5.edge_between(1, 2).unwrap()).unwrap();
        let fb = face_basis(&rel);
        let all: EdgeSet = (0..k5.m()).collect();
        assert_eq!(fb.faces.last().unwrap(), &all);
        let ev = verify_face_family(&k5, &fb, true).unwrap_err();
        assert_eq!(ev.reason, EvidenceReason::FaceCheckFailed);
        match &ev.payload {
            EvidencePayload::EdgeCoverage { edge, covering, .. } => {
                let (u, _) = k5.endpoints(*edge);
                assert_eq!(u, 0);
                assert_eq!(covering.len(), 4);
            }
            other => panic!("unexpected payload {other:?}"),
        }
        assert!(ev.validate());
    }

    #[test]
    fn non_cycle_candidate_is_rejected() {
        let k5 = complete(5);
        let fb = FaceBasis {
            labels: vec![FaceLabel::External, FaceLabel::Complement],
            faces: vec![(0..10).collect(), (0..10).collect()],
            predecessors: vec![vec![], vec![]],
        };
        let ev = verify_face_family(&k5, &fb, true).unwrap_err();
        assert_eq!(ev.reason, EvidenceReason::FaceCheckFailed);
        assert!(matches!(ev.payload, EvidencePayload::BadFace { face: 0, .. }));
        assert!(ev.validate());
    }

    #[test]
    fn faces_to_rotation_examples() {
        let k4 = complete(4);
        let walks = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        let emb = faces_to_rotation(&k4, &walks).unwrap();
        assert!(emb.rotation.iter().all(|r| r.len() == 3));
        assert_eq!(emb.face_count(), 4);
        assert_eq!(edge_sets(&k4, &emb.faces), edge_sets(&k4, &walks));

        let k3 = complete(3);
        let emb = faces_to_rotation(&k3, &[vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        assert!(emb.rotation.iter().all(|r| r.len() == 2));
        assert_eq!(emb.face_count(), 2);

        let w5 = wheel(5);
        let mut walks = vec![vec![1, 2, 3, 4, 5]];
        for i in 1..=5 {
            walks.push(vec![0, i, i % 5 + 1]);
        }
        let emb = faces_to_rotation(&w5, &walks).unwrap();
        assert_eq!(emb.face_count(), 6);
        assert_eq!(edge_sets(&w5, &emb.faces), edge_sets(&w5, &walks));

        // an edge on three walks is malformed
        assert!(faces_to_rotation(&k3, &[vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]]).is_err());
    }

    #[test]
    fn embed_triconnected_examples() {
        let w5 = wheel(5);
        let emb = embed_triconnected(&w5).unwrap();
        assert_eq!(emb.face_count(), 6);
        assert!(crate::oracle::verify_embedding(&w5, &emb).unwrap());

        let ev = embed_triconnected(&complete(5)).unwrap_err();
        assert!(ev.validate());

        let oct = canonical_graph("octahedron").unwrap();
        let emb = embed_triconnected(&oct).unwrap();
        assert_eq!(emb.face_count(), 8);
        assert!(crate::oracle::verify_embedding(&oct, &emb).unwrap());
    }

    #[test]
    fn external_face_is_the_fundamental_face() {
        let w5 = wheel(5);
        let emb = embed_triconnected(&w5).unwrap();
        let mut ext = emb.faces[emb.external].clone();
        ext.sort();
        assert_eq!(ext, vec![0, 1, 2]);
    }

    #[test]
    fn embed_examples() {
        let g = grid(3, 3);
        let emb = embed(&g).unwrap();
        assert_eq!(emb.face_count(), 5);
        assert!(crate::oracle::verify_embedding(&g, &emb).unwrap());

        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(embed(&bowtie).unwrap().face_count(), 3);

        let pet = canonical_graph("Petersen").unwrap();
        let ev = embed(&pet).unwrap_err();
        assert!(ev.validate());
    }

    #[test]
    fn embed_handles_trees_isolated_vertices_and_forests() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let emb = embed(&g).unwrap();
        assert!(emb.satisfies_euler(&g));
        assert!(crate::oracle::verify_embedding(&g, &emb).unwrap());
        let empty = Graph::new(0, &[]).unwrap();
        assert_eq!(embed(&empty).unwrap().face_count(), 0);
    }

    #[test]
    fn planted_k5_is_rejected() {
        // K5 on 0..5 hanging off a long cycle through vertex 0
        let mut pairs: Vec<(usize, usize)> = complete(5).edges().to_vec();
        for i in 5..9 {
            pairs.push((i, i + 1));
        }
        pairs.push((0, 5));
        pairs.push((9, 1));
        let g = Graph::new(10, &pairs).unwrap();
        let ev = embed(&g).unwrap_err();
        assert!(ev.validate());
        assert!(ev.vertex_map.iter().all(|&v| v < 5));
    }
}
