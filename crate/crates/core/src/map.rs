//! Planarized combinatorial maps of good drawings.
//!
//! Every crossing is promoted to a degree-4 node, so a drawing becomes a
//! connected plane map. Darts come in twin pairs, one per segment direction;
//! `next`/`prev` walk the counterclockwise rotation at the dart's origin. The
//! face to the left of a dart `d` continues with `prev(twin(d))`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use thiserror::Error;

use crate::facts::{crossing_set_of, crossing_sign, CrossingSign};
use crate::ids::{edge_count, edges, EdgeId, VertexId};
use crate::scheme::{RotationScheme, SchemeError};

pub type NodeId = usize;
pub type DartId = usize;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("malformed map: {0}")]
    Malformed(&'static str),
    #[error("not a good drawing: {} violations", .0.violations.len())]
    Invalid(ValidationReport),
    #[error("expected {expected} crossing lists, found {found}")]
    WrongListCount { expected: usize, found: usize },
    #[error("asymmetric crossing data: {0} lists {1} but not vice versa")]
    Asymmetric(EdgeId, EdgeId),
    #[error("edge {0} lists {1} more than once")]
    Duplicate(EdgeId, EdgeId),
    #[error("edge {0} lists the adjacent edge {1}")]
    AdjacentListed(EdgeId, EdgeId),
    #[error("crossing {0} x {1} disagrees with the rotation scheme")]
    CrossingSetMismatch(EdgeId, EdgeId),
    #[error("reconstructed map has Euler characteristic {0}, not 2")]
    NotSpherical(i64),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// A face: the cyclic sequence of darts having it on their left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<DartId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

/// Dart structure and faces of a plane map, with no labelling attached.
#[derive(Clone, Debug)]
pub struct PlaneMap {
    origin: Vec<NodeId>,
    twin: Vec<DartId>,
    next: Vec<DartId>,
    prev: Vec<DartId>,
    node_dart: Vec<DartId>,
    face_of: Vec<usize>,
    faces: Vec<Face>,
}

impl PlaneMap {
    /// `rotations[v]` lists the darts leaving node `v` in counterclockwise
    /// order. Every dart must occur in exactly one rotation and `twin` must be
    /// a fixed-point-free involution.
    pub fn new(twin: Vec<DartId>, rotations: &[Vec<DartId>]) -> Result<Self, MapError> {
        let m = twin.len();
        for (d, &t) in twin.iter().enumerate() {
            if t >= m || t == d || twin[t] != d {
                return Err(MapError::Malformed("twin is not an involution on darts"));
            }
        }
        let mut origin = vec![NONE; m];
        let mut next = vec![NONE; m];
        let mut prev = vec![NONE; m];
        let mut node_dart = vec![NONE; rotations.len()];
        for (v, rot) in rotations.iter().enumerate() {
            for (k, &d) in rot.iter().enumerate() {
                if d >= m || origin[d] != NONE {
                    return Err(MapError::Malformed("dart missing from or repeated in rotations"));
                }
                origin[d] = v;
                next[d] = rot[(k + 1) % rot.len()];
                prev[d] = rot[(k + rot.len() - 1) % rot.len()];
            }
            if let Some(&d) = rot.first() {
                node_dart[v] = d;
            }
        }
        if origin.contains(&NONE) {
            return Err(MapError::Malformed("dart missing from or repeated in rotations"));
        }
        let mut map = PlaneMap { origin, twin, next, prev, node_dart, face_of: vec![NONE; m], faces: Vec::new() };
        map.trace();
        Ok(map)
    }

    fn trace(&mut self) {
        for d in 0..self.origin.len() {
            if self.face_of[d] != NONE {
                continue;
            }
            let id = self.faces.len();
            let mut darts = Vec::new();
            let mut x = d;
            while self.face_of[x] == NONE {
                self.face_of[x] = id;
                darts.push(x);
                x = self.face_next(x);
            }
            self.faces.push(Face { darts });
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_dart.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn origin(&self, d: DartId) -> NodeId {
        self.origin[d]
    }

    /// The node `d` points at.
    pub fn target(&self, d: DartId) -> NodeId {
        self.origin[self.twin[d]]
    }

    pub fn twin(&self, d: DartId) -> DartId {
        self.twin[d]
    }

    pub fn next(&self, d: DartId) -> DartId {
        self.next[d]
    }

    pub fn prev(&self, d: DartId) -> DartId {
        self.prev[d]
    }

    /// Successor of `d` along the boundary of the face on its left.
    pub fn face_next(&self, d: DartId) -> DartId {
        self.prev[self.twin[d]]
    }

    /// The darts leaving `v`, counterclockwise.
    pub fn rotation(&self, v: NodeId) -> Vec<DartId> {
        let first = self.node_dart[v];
        if first == NONE {
            return Vec::new();
        }
        let mut out = vec![first];
        let mut d = self.next[first];
        while d != first {
            out.push(d);
            d = self.next[d];
        }
        out
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.rotation(v).len()
    }

    /// Index of the face to the left of `d`.
    pub fn face_of(&self, d: DartId) -> usize {
        self.face_of[d]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// `V - E + F`; equals 2 exactly for a connected map on the sphere.
    pub fn euler_characteristic(&self) -> i64 {
        self.node_count() as i64 - (self.dart_count() / 2) as i64 + self.faces.len() as i64
    }

    /// For a degree-4 node, the dart continuing straight through it after
    /// arriving along `d`'s twin.
    pub fn opposite(&self, d: DartId) -> DartId {
        self.next[self.next[d]]
    }

    /// Faces on the left side of the closed dart walk `cycle`: flood fill from
    /// the faces left of each cycle dart without crossing any cycle segment.
    pub fn region_left_of(&self, cycle: &[DartId]) -> Vec<bool> {
        let mut wall = vec![false; self.dart_count()];
        for &d in cycle {
            wall[d] = true;
            wall[self.twin[d]] = true;
        }
        let mut inside = vec![false; self.faces.len()];
        let mut stack: Vec<usize> = cycle.iter().map(|&d| self.face_of[d]).collect();
        while let Some(f) = stack.pop() {
            if inside[f] {
                continue;
            }
            inside[f] = true;
            for &d in &self.faces[f].darts {
                if !wall[d] {
                    let g = self.face_of[self.twin[d]];
                    if !inside[g] {
                        stack.push(g);
                    }
                }
            }
        }
        inside
    }

    /// Nodes all of whose incident faces lie in `region`.
    pub fn nodes_inside(&self, region: &[bool]) -> Vec<NodeId> {
        (0..self.node_count())
            .filter(|&v| {
                let rot = self.rotation(v);
                !rot.is_empty() && rot.iter().all(|&d| region[self.face_of[d]])
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Vertex(VertexId),
    /// A crossing of two edges, stored with the smaller edge first.
    Crossing(EdgeId, EdgeId),
}

/// One invariant broken by a candidate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TwinMismatch { dart: DartId },
    VertexDegree { vertex: VertexId, degree: usize },
    VertexEdges { vertex: VertexId },
    CrossingDegree { node: NodeId, degree: usize },
    CrossingNotAlternating { node: NodeId },
    CrossingLabel { node: NodeId },
    AdjacentEdgesCross { node: NodeId, e: EdgeId, f: EdgeId },
    RepeatedCrossing { e: EdgeId, f: EdgeId },
    BrokenEdgePath { edge: EdgeId },
    StrayDarts { count: usize },
    NotSpherical { euler: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TwinMismatch { dart } => write!(f, "dart {dart} and its twin disagree on edge or direction"),
            Violation::VertexDegree { vertex, degree } => write!(f, "vertex {vertex} has degree {degree}"),
            Violation::VertexEdges { vertex } => write!(f, "vertex {vertex} does not carry each incident edge once"),
            Violation::CrossingDegree { node, degree } => write!(f, "crossing node {node} has degree {degree}"),
            Violation::CrossingNotAlternating { node } => write!(f, "crossing node {node} does not alternate two edges"),
            Violation::CrossingLabel { node } => write!(f, "crossing node {node} is labelled with the wrong edges"),
            Violation::AdjacentEdgesCross { e, f: g, .. } => write!(f, "adjacent edges cross: {e} and {g}"),
            Violation::RepeatedCrossing { e, f: g } => write!(f, "edges {e} and {g} cross more than once"),
            Violation::BrokenEdgePath { edge } => write!(f, "edge {edge} is not a simple path between its ends"),
            Violation::StrayDarts { count } => write!(f, "{count} darts lie on no edge path"),
            Violation::NotSpherical { euler } => write!(f, "V - E + F = {euler}, not 2"),
        }
    }
}

/// Every invariant a candidate map violates. Empty means a good drawing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Labels of a dart for [`GoodDrawing::from_raw`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RawDart {
    pub edge: EdgeId,
    /// Points from the `lo` end of its edge towards `hi`.
    pub forward: bool,
    pub twin: DartId,
}

/// A planarized drawing of `K_n`.
///
/// Node `k - 1` is vertex `k`; nodes from `n` on are crossings. Maps built by
/// [`from_crossing_data`] number crossings in lexicographic order of their
/// edge pairs and darts by segment along edges in lexicographic order.
#[derive(Clone, Debug)]
pub struct GoodDrawing {
    n: usize,
    map: PlaneMap,
    kinds: Vec<NodeKind>,
    dart_edge: Vec<EdgeId>,
    dart_forward: Vec<bool>,
    /// Forward darts along each edge from `lo` to `hi`, by edge index.
    paths: Vec<Vec<DartId>>,
    crossing_nodes: BTreeMap<(EdgeId, EdgeId), NodeId>,
    report: ValidationReport,
}

impl GoodDrawing {
    /// Assembles a candidate map. Fails only when the dart structure itself is
    /// malformed; drawing-level problems land in [`GoodDrawing::validate`].
    pub fn from_raw(
        n: usize,
        kinds: Vec<NodeKind>,
        darts: &[RawDart],
        rotations: &[Vec<DartId>],
    ) -> Result<Self, MapError> {
        if kinds.len() != rotations.len() || kinds.len() < n {
            return Err(MapError::Malformed("node kinds and rotations differ in length"));
        }
        for (k, kind) in kinds.iter().enumerate() {
            let ok = match kind {
                NodeKind::Vertex(v) => k < n && v.index() == k,
                NodeKind::Crossing(e, f) => k >= n && e < f,
            };
            if !ok {
                return Err(MapError::Malformed("vertices must occupy nodes 0..n in label order"));
            }
        }
        let twin = darts.iter().map(|d| d.twin).collect();
        let map = PlaneMap::new(twin, rotations)?;
        let mut d = GoodDrawing {
            n,
            map,
            kinds,
            dart_edge: darts.iter().map(|d| d.edge).collect(),
            dart_forward: darts.iter().map(|d| d.forward).collect(),
            paths: Vec::new(),
            crossing_nodes: BTreeMap::new(),
            report: ValidationReport::default(),
        };
        d.report = d.check();
        Ok(d)
    }

    fn check(&mut self) -> ValidationReport {
        let mut out = Vec::new();
        let n = self.n;
        let map = &self.map;
        for dart in 0..map.dart_count() {
            let t = map.twin(dart);
            if self.dart_edge[t] != self.dart_edge[dart] || self.dart_forward[t] == self.dart_forward[dart] {
                out.push(Violation::TwinMismatch { dart });
            }
        }
        for k in 0..n {
            let v = VertexId::new(k + 1);
            let rot = map.rotation(k);
            if rot.len() != n - 1 {
                out.push(Violation::VertexDegree { vertex: v, degree: rot.len() });
            }
            let mut seen = vec![false; n];
            let mut ok = true;
            for &d in &rot {
                let e = self.dart_edge[d];
                if !e.contains(v) || (e.lo() == v) != self.dart_forward[d] {
                    ok = false;
                    continue;
                }
                let w = e.other(v).index();
                ok &= !seen[w];
                seen[w] = true;
            }
            if !ok || seen.iter().enumerate().any(|(w, &s)| w != k && !s) {
                out.push(Violation::VertexEdges { vertex: v });
            }
        }
        let mut pairs: BTreeMap<(EdgeId, EdgeId), NodeId> = BTreeMap::new();
        for node in n..self.kinds.len() {
            let rot = map.rotation(node);
            if rot.len() != 4 {
                out.push(Violation::CrossingDegree { node, degree: rot.len() });
                continue;
            }
            let es: Vec<EdgeId> = rot.iter().map(|&d| self.dart_edge[d]).collect();
            let alternating = es[0] == es[2]
                && es[1] == es[3]
                && es[0] != es[1]
                && self.dart_forward[rot[0]] != self.dart_forward[rot[2]]
                && self.dart_forward[rot[1]] != self.dart_forward[rot[3]];
            if !alternating {
                out.push(Violation::CrossingNotAlternating { node });
                continue;
            }
            let (e, f) = if es[0] < es[1] { (es[0], es[1]) } else { (es[1], es[0]) };
            if self.kinds[node] != NodeKind::Crossing(e, f) {
                out.push(Violation::CrossingLabel { node });
            }
            if e.shares_endpoint(f) {
                out.push(Violation::AdjacentEdgesCross { node, e, f });
            }
            if pairs.insert((e, f), node).is_some() {
                out.push(Violation::RepeatedCrossing { e, f });
            }
        }
        let mut paths = Vec::with_capacity(edge_count(n));
        let mut covered = 0usize;
        let mut visited = vec![false; self.kinds.len()];
        for e in edges(n) {
            let path = self.trace_edge(e, &mut visited);
            match path {
                Some(p) => {
                    covered += 2 * p.len();
                    paths.push(p);
                }
                None => {
                    out.push(Violation::BrokenEdgePath { edge: e });
                    paths.push(Vec::new());
                }
            }
        }
        let all_paths = out.iter().all(|v| !matches!(v, Violation::BrokenEdgePath { .. }));
        if all_paths && covered != map.dart_count() {
            out.push(Violation::StrayDarts { count: map.dart_count().saturating_sub(covered) });
        }
        let euler = map.euler_characteristic();
        if euler != 2 {
            out.push(Violation::NotSpherical { euler });
        }
        if out.is_empty() {
            self.paths = paths;
            self.crossing_nodes = pairs;
        }
        ValidationReport { violations: out }
    }

    fn trace_edge(&self, e: EdgeId, visited: &mut [bool]) -> Option<Vec<DartId>> {
        let map = &self.map;
        let start = map
            .rotation(e.lo().index())
            .into_iter()
            .find(|&d| self.dart_edge[d] == e && self.dart_forward[d])?;
        let mut path = vec![start];
        let mut touched = Vec::new();
        let mut d = start;
        let result = loop {
            let w = map.target(d);
            if w < self.n {
                break (w == e.hi().index()).then_some(());
            }
            if visited[w] || map.degree(w) != 4 {
                break None;
            }
            visited[w] = true;
            touched.push(w);
            let nd = map.opposite(map.twin(d));
            if self.dart_edge[nd] != e || !self.dart_forward[nd] {
                break None;
            }
            path.push(nd);
            d = nd;
        };
        for w in touched {
            visited[w] = false;
        }
        result.map(|_| path)
    }

    /// The validation report computed when the map was assembled.
    pub fn validate(&self) -> ValidationReport {
        self.report.clone()
    }

    pub fn is_valid(&self) -> bool {
        self.report.is_valid()
    }

    fn require_valid(&self) -> Result<(), MapError> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(MapError::Invalid(self.report.clone()))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn map(&self) -> &PlaneMap {
        &self.map
    }

    pub fn node_kind(&self, v: NodeId) -> NodeKind {
        self.kinds[v]
    }

    pub fn node_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn crossing_count(&self) -> usize {
        self.kinds.len() - self.n
    }

    pub fn is_crossing(&self, v: NodeId) -> bool {
        v >= self.n
    }

    pub fn vertex_node(&self, v: VertexId) -> NodeId {
        v.index()
    }

    pub fn dart_edge(&self, d: DartId) -> EdgeId {
        self.dart_edge[d]
    }

    pub fn dart_forward(&self, d: DartId) -> bool {
        self.dart_forward[d]
    }

    /// The node where `e` and `f` cross, if they do.
    pub fn crossing_node(&self, e: EdgeId, f: EdgeId) -> Option<NodeId> {
        let key = if e < f { (e, f) } else { (f, e) };
        self.crossing_nodes.get(&key).copied()
    }

    /// All crossing pairs, `(e, f)` with `e < f`, sorted.
    pub fn crossing_pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        self.crossing_nodes.keys().copied().collect()
    }

    /// Forward darts of `e` from `lo` to `hi`. Empty for an invalid map.
    pub fn edge_path(&self, e: EdgeId) -> &[DartId] {
        self.paths.get(e.index(self.n)).map(|p| p.as_slice()).unwrap_or(&[])
    }

    /// Nodes along `e` from `lo` to `hi`, both ends included.
    pub fn edge_nodes(&self, e: EdgeId) -> Vec<NodeId> {
        let path = self.edge_path(e);
        let mut out: Vec<NodeId> = path.iter().map(|&d| self.map.origin(d)).collect();
        if let Some(&last) = path.last() {
            out.push(self.map.target(last));
        }
        out
    }

    /// Darts of `e` leading from node `a` to node `b`, both on `e`.
    pub fn edge_darts_between(&self, e: EdgeId, a: NodeId, b: NodeId) -> Vec<DartId> {
        let path = self.edge_path(e);
        let ia = path.iter().position(|&d| self.map.origin(d) == a);
        let ib = path.iter().position(|&d| self.map.origin(d) == b);
        let idx = |x: Option<usize>, node: NodeId| x.unwrap_or_else(|| {
            debug_assert_eq!(self.map.target(*path.last().unwrap()), node);
            path.len()
        });
        let (ia, ib) = (idx(ia, a), idx(ib, b));
        if ia <= ib {
            path[ia..ib].to_vec()
        } else {
            path[ib..ia].iter().rev().map(|&d| self.map.twin(d)).collect()
        }
    }

    pub fn faces(&self) -> &[Face] {
        self.map.faces()
    }

    /// Distinct nodes on the boundary of face `f`.
    pub fn face_nodes(&self, f: usize) -> Vec<NodeId> {
        let mut out: Vec<NodeId> = self.map.faces()[f].darts.iter().map(|&d| self.map.origin(d)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn rotation_scheme_of(&self) -> Result<RotationScheme, MapError> {
        self.require_valid()?;
        let orders = (0..self.n)
            .map(|k| {
                let v = VertexId::new(k + 1);
                self.map.rotation(k).into_iter().map(|d| self.dart_edge[d].other(v)).collect()
            })
            .collect();
        Ok(RotationScheme::new(self.n, orders)?)
    }

    pub fn crossing_data_of(&self) -> Result<CrossingData, MapError> {
        let scheme = self.rotation_scheme_of()?;
        let lists = edges(self.n)
            .map(|e| {
                self.edge_path(e)[1..]
                    .iter()
                    .map(|&d| self.dart_edge[self.map.next(d)])
                    .collect()
            })
            .collect();
        Ok(CrossingData { scheme, lists })
    }

    /// Label-preserving equality of the two maps: same segments along every
    /// edge and the same rotation at every node.
    pub fn same_map(&self, other: &GoodDrawing) -> bool {
        if self.n != other.n || !self.is_valid() || !other.is_valid() || self.node_count() != other.node_count() {
            return false;
        }
        let key_a = self.dart_keys();
        let key_b = other.dart_keys();
        let mut index_b = BTreeMap::new();
        for (d, k) in key_b.iter().enumerate() {
            index_b.insert(*k, d);
        }
        (0..self.map.dart_count()).all(|d| match index_b.get(&key_a[d]) {
            Some(&db) => key_a[self.map.next(d)] == key_b[other.map.next(db)],
            None => false,
        })
    }

    fn dart_keys(&self) -> Vec<(EdgeId, usize, bool)> {
        let mut keys = vec![(EdgeId::from_labels(1, 2), 0, false); self.map.dart_count()];
        for e in edges(self.n) {
            for (k, &d) in self.edge_path(e).iter().enumerate() {
                keys[d] = (e, k, true);
                keys[self.map.twin(d)] = (e, k, false);
            }
        }
        keys
    }
}

/// Per-edge crossing orders together with the rotation scheme: the complete
/// description of a good drawing up to orientation-preserving homeomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingData {
    scheme: RotationScheme,
    /// By edge index; each list read from the edge's smaller endpoint.
    lists: Vec<Vec<EdgeId>>,
}

impl CrossingData {
    /// Shape check only. Consistency is verified by [`CrossingData::check`]
    /// and by [`from_crossing_data`].
    pub fn new(scheme: RotationScheme, lists: Vec<Vec<EdgeId>>) -> Result<Self, MapError> {
        let expected = edge_count(scheme.n());
        if lists.len() != expected {
            return Err(MapError::WrongListCount { expected, found: lists.len() });
        }
        Ok(CrossingData { scheme, lists })
    }

    pub fn n(&self) -> usize {
        self.scheme.n()
    }

    pub fn scheme(&self) -> &RotationScheme {
        &self.scheme
    }

    /// Edges crossing `e`, in order from `e.lo()`.
    pub fn list(&self, e: EdgeId) -> &[EdgeId] {
        &self.lists[e.index(self.n())]
    }

    pub(crate) fn list_mut(&mut self, e: EdgeId) -> &mut Vec<EdgeId> {
        let n = self.n();
        &mut self.lists[e.index(n)]
    }

    /// `(edge, list)` in lexicographic edge order.
    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, &[EdgeId])> {
        edges(self.n()).zip(self.lists.iter().map(|l| l.as_slice()))
    }

    pub fn crossing_count(&self) -> usize {
        self.lists.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Pairs `(e, f)` with `e < f` listed by `e`, sorted.
    pub fn pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        let mut out: Vec<(EdgeId, EdgeId)> = self
            .iter()
            .flat_map(|(e, l)| l.iter().filter(move |&&f| e < f).map(move |&f| (e, f)))
            .collect();
        out.sort();
        out
    }

    /// Mutual mentions, goodness, and agreement with the crossing set the
    /// scheme forces.
    pub fn check(&self) -> Result<(), MapError> {
        for (e, list) in self.iter() {
            for (k, &f) in list.iter().enumerate() {
                if e.shares_endpoint(f) {
                    return Err(MapError::AdjacentListed(e, f));
                }
                if list[..k].contains(&f) {
                    return Err(MapError::Duplicate(e, f));
                }
                if !self.list(f).contains(&e) {
                    return Err(MapError::Asymmetric(e, f));
                }
            }
        }
        let forced = crossing_set_of(&self.scheme);
        let listed = self.pairs();
        if forced != listed {
            let (e, f) = forced
                .iter()
                .find(|p| listed.binary_search(p).is_err())
                .or_else(|| listed.iter().find(|p| forced.binary_search(p).is_err()))
                .copied()
                .expect("sets differ");
            return Err(MapError::CrossingSetMismatch(e, f));
        }
        Ok(())
    }

    /// The data of the subdrawing induced on vertices `1..=m`.
    pub fn restrict(&self, m: usize) -> CrossingData {
        let scheme = self.scheme.restrict(m);
        let lists = edges(m)
            .map(|e| self.list(e).iter().copied().filter(|f| f.hi().get() <= m).collect())
            .collect();
        CrossingData { scheme, lists }
    }

    /// True when both drawings order the crossings among `keep` edges the
    /// same way along every edge in `keep`.
    pub fn agree_on(&self, other: &CrossingData, keep: &dyn Fn(EdgeId) -> bool) -> bool {
        self.n() == other.n()
            && self.iter().all(|(e, l)| {
                !keep(e)
                    || l.iter().copied().filter(|&f| keep(f)).eq(other.list(e).iter().copied().filter(|&f| keep(f)))
            })
    }
}

/// Rebuilds the planarized map described by `c`. Crossing rotations come from
/// the scheme-determined crossing signs.
pub fn from_crossing_data(c: &CrossingData) -> Result<GoodDrawing, MapError> {
    c.check()?;
    let n = c.n();
    let pairs = c.pairs();
    let mut kinds: Vec<NodeKind> = (1..=n).map(|k| NodeKind::Vertex(VertexId::new(k))).collect();
    let mut node_of = BTreeMap::new();
    for &(e, f) in &pairs {
        node_of.insert((e, f), kinds.len());
        kinds.push(NodeKind::Crossing(e, f));
    }
    let key = |e: EdgeId, f: EdgeId| if e < f { (e, f) } else { (f, e) };

    let mut darts = Vec::new();
    // per node: (edge, forward dart leaving, backward dart leaving)
    let mut at_crossing: Vec<Vec<(EdgeId, DartId, DartId)>> = vec![Vec::new(); kinds.len()];
    let mut at_vertex: Vec<Vec<(VertexId, DartId)>> = vec![Vec::new(); n];
    for (e, list) in c.iter() {
        let mut nodes = vec![e.lo().index()];
        nodes.extend(list.iter().map(|&f| node_of[&key(e, f)]));
        nodes.push(e.hi().index());
        let first = darts.len();
        for _ in 0..nodes.len() - 1 {
            let g = darts.len();
            darts.push(RawDart { edge: e, forward: true, twin: g + 1 });
            darts.push(RawDart { edge: e, forward: false, twin: g });
        }
        at_vertex[e.lo().index()].push((e.hi(), first));
        at_vertex[e.hi().index()].push((e.lo(), darts.len() - 1));
        for t in 1..nodes.len() - 1 {
            let fwd = first + 2 * t;
            let back = first + 2 * (t - 1) + 1;
            at_crossing[nodes[t]].push((e, fwd, back));
        }
    }

    let mut rotations: Vec<Vec<DartId>> = Vec::with_capacity(kinds.len());
    for k in 0..n {
        let v = VertexId::new(k + 1);
        let rot = c
            .scheme()
            .ccw(v)
            .iter()
            .map(|w| at_vertex[k].iter().find(|(x, _)| x == w).expect("every edge has a dart").1)
            .collect();
        rotations.push(rot);
    }
    for node in n..kinds.len() {
        let NodeKind::Crossing(e, f) = kinds[node] else { unreachable!() };
        let ends = &at_crossing[node];
        let (_, ef, eb) = *ends.iter().find(|x| x.0 == e).expect("crossing on e");
        let (_, ff, fb) = *ends.iter().find(|x| x.0 == f).expect("crossing on f");
        let sign = crossing_sign(c.scheme(), e.forward(), f.forward())
            .map_err(|_| MapError::CrossingSetMismatch(e, f))?;
        rotations.push(match sign {
            CrossingSign::RightToLeft => vec![ef, ff, eb, fb],
            CrossingSign::LeftToRight => vec![ef, fb, eb, ff],
        });
    }
    let d = GoodDrawing::from_raw(n, kinds, &darts, &rotations)?;
    if !d.is_valid() {
        let euler = d.map.euler_characteristic();
        if euler != 2 {
            return Err(MapError::NotSpherical(euler));
        }
        return Err(MapError::Invalid(d.validate()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize, b: usize) -> EdgeId {
        EdgeId::from_labels(a, b)
    }

    fn empty_lists(n: usize) -> Vec<Vec<EdgeId>> {
        vec![Vec::new(); edge_count(n)]
    }

    fn convex_k4_data() -> CrossingData {
        let mut lists = empty_lists(4);
        lists[e(1, 3).index(4)] = vec![e(2, 4)];
        lists[e(2, 4).index(4)] = vec![e(1, 3)];
        CrossingData::new(RotationScheme::convex(4), lists).unwrap()
    }

    #[test]
    fn planar_triangle_and_k4() {
        let k3 = CrossingData::new(RotationScheme::convex(3), empty_lists(3)).unwrap();
        let d = from_crossing_data(&k3).unwrap();
        assert!(d.is_valid());
        assert_eq!(d.faces().len(), 2);

        let s = RotationScheme::from_labels(&[&[2, 4, 3], &[3, 4, 1], &[1, 4, 2], &[1, 2, 3]]).unwrap();
        let c = CrossingData::new(s.clone(), empty_lists(4)).unwrap();
        let d = from_crossing_data(&c).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.faces().len(), 4);
        assert_eq!(d.rotation_scheme_of().unwrap(), s);
    }

    #[test]
    fn convex_k4_has_one_crossing_and_five_faces() {
        let d = from_crossing_data(&convex_k4_data()).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.map().node_count(), 5);
        assert_eq!(d.map().dart_count(), 16);
        assert_eq!(d.faces().len(), 5);
        let mut sizes: Vec<usize> = d.faces().iter().map(Face::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 3, 3, 4]);
        assert_eq!(d.crossing_data_of().unwrap(), convex_k4_data());
        assert_eq!(d.edge_nodes(e(1, 3)), vec![0, 4, 2]);
    }

    #[test]
    fn rejects_bad_crossing_data() {
        let mut lists = empty_lists(4);
        lists[e(1, 3).index(4)] = vec![e(2, 4)];
        let c = CrossingData::new(RotationScheme::convex(4), lists).unwrap();
        assert_eq!(from_crossing_data(&c).unwrap_err(), MapError::Asymmetric(e(1, 3), e(2, 4)));

        let c = CrossingData::new(RotationScheme::convex(4), empty_lists(4)).unwrap();
        assert_eq!(from_crossing_data(&c).unwrap_err(), MapError::CrossingSetMismatch(e(1, 3), e(2, 4)));

        let mut lists = empty_lists(4);
        lists[e(1, 2).index(4)] = vec![e(3, 4)];
        lists[e(3, 4).index(4)] = vec![e(1, 2)];
        let c = CrossingData::new(RotationScheme::convex(4), lists).unwrap();
        assert!(matches!(from_crossing_data(&c), Err(MapError::CrossingSetMismatch(..))));

        let mut lists = empty_lists(4);
        lists[e(1, 2).index(4)] = vec![e(1, 3)];
        lists[e(1, 3).index(4)] = vec![e(1, 2)];
        let c = CrossingData::new(RotationScheme::convex(4), lists).unwrap();
        assert_eq!(from_crossing_data(&c).unwrap_err(), MapError::AdjacentListed(e(1, 2), e(1, 3)));
    }

    #[test]
    fn validate_reports_adjacent_crossing() {
        // Triangle 1,2,3 where {1,2} and {1,3} are forced through a shared
        // crossing node.
        let good = from_crossing_data(&CrossingData::new(RotationScheme::convex(3), empty_lists(3)).unwrap()).unwrap();
        assert!(good.validate().is_valid());
        let (a, b, c) = (e(1, 2), e(1, 3), e(2, 3));
        let darts = [
            RawDart { edge: a, forward: true, twin: 1 },
            RawDart { edge: a, forward: false, twin: 0 },
            RawDart { edge: a, forward: true, twin: 3 },
            RawDart { edge: a, forward: false, twin: 2 },
            RawDart { edge: b, forward: true, twin: 5 },
            RawDart { edge: b, forward: false, twin: 4 },
            RawDart { edge: b, forward: true, twin: 7 },
            RawDart { edge: b, forward: false, twin: 6 },
            RawDart { edge: c, forward: true, twin: 9 },
            RawDart { edge: c, forward: false, twin: 8 },
        ];
        let rotations = vec![vec![0, 4], vec![3, 8], vec![9, 7], vec![2, 6, 1, 5]];
        let kinds = vec![
            NodeKind::Vertex(VertexId::new(1)),
            NodeKind::Vertex(VertexId::new(2)),
            NodeKind::Vertex(VertexId::new(3)),
            NodeKind::Crossing(a, b),
        ];
        let d = GoodDrawing::from_raw(3, kinds, &darts, &rotations).unwrap();
        let report = d.validate();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::AdjacentEdgesCross { .. })));
        assert!(d.rotation_scheme_of().is_err());
    }

    #[test]
    fn malformed_structure_is_an_error() {
        let darts = [RawDart { edge: e(1, 2), forward: true, twin: 0 }];
        let kinds = vec![NodeKind::Vertex(VertexId::new(1)), NodeKind::Vertex(VertexId::new(2))];
        assert!(GoodDrawing::from_raw(2, kinds, &darts, &[vec![0], vec![]]).is_err());
    }

    #[test]
    fn same_map_and_region() {
        let d = from_crossing_data(&convex_k4_data()).unwrap();
        let d2 = from_crossing_data(&d.crossing_data_of().unwrap()).unwrap();
        assert!(d.same_map(&d2));
        // The triangle 1,2,3 walked 1->2->3->1 has vertex 4 on its right.
        let mut cycle = d.edge_darts_between(e(1, 2), 0, 1);
        cycle.extend(d.edge_darts_between(e(2, 3), 1, 2));
        cycle.extend(d.edge_darts_between(e(1, 3), 2, 0));
        let left = d.map().region_left_of(&cycle);
        let inside = d.map().nodes_inside(&left);
        assert!(!inside.contains(&3));
        let right: Vec<bool> = left.iter().map(|x| !x).collect();
        assert!(d.map().nodes_inside(&right).contains(&3));
    }
}
