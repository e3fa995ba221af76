//! Reidemeister III moves on good drawings.
//!
//! A move slides one edge of an empty triangular face across the crossing of
//! the other two. All three crossings survive; along each of the three edges
//! the two triangle crossings trade places.

use alloc::vec::Vec;
use core::fmt;
use thiserror::Error;

use crate::ids::EdgeId;
use crate::map::{from_crossing_data, DartId, GoodDrawing, MapError, NodeId};

/// Which side of its smallest edge a triangle lies on.
///
/// `Ccw` means the boundary walk with the triangle on the left runs along the
/// smallest of the three edges from its lower to its higher endpoint, so the
/// triangle sits to the left of that edge. A move always switches the side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flip {
    Cw,
    Ccw,
}

impl Flip {
    pub fn opposite(self) -> Self {
        match self {
            Flip::Cw => Flip::Ccw,
            Flip::Ccw => Flip::Cw,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Flip::Cw => "cw",
            Flip::Ccw => "ccw",
        }
    }
}

/// One Reidemeister III move: the three edges of the triangle and the side
/// the triangle ends up on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub triple: [EdgeId; 3],
    pub flip: Flip,
}

impl Move {
    pub fn new(mut triple: [EdgeId; 3], flip: Flip) -> Self {
        triple.sort();
        Move { triple, flip }
    }

    /// The move that undoes this one.
    pub fn inverse(self) -> Self {
        Move { triple: self.triple, flip: self.flip.opposite() }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.triple;
        write!(f, "{a}{b}{c}:{}", self.flip.as_str())
    }
}

/// A disc bounded by segments of three pairwise crossing edges, with no end
/// of those edges inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub edges: [EdgeId; 3],
    /// The three crossing nodes.
    pub corners: [NodeId; 3],
    /// Closed dart walk around the triangle, which lies on its left.
    pub boundary: Vec<DartId>,
    pub side: Flip,
    /// The disc is a single face: no vertex, edge, or crossing inside.
    pub ready: bool,
}

impl Triangle {
    /// The move flipping this triangle, if it is ready.
    pub fn to_move(&self) -> Move {
        Move { triple: self.edges, flip: self.side.opposite() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("edges of {0} do not pairwise cross")]
    NotPairwiseCrossing(Move),
    #[error("edges of {0} do not bound an empty triangular face")]
    NotEmpty(Move),
    #[error("triangle of {0} already lies on the requested side")]
    WrongSide(Move),
    #[error("move {index} ({mv}) cannot be applied: {source}")]
    AtIndex { index: usize, mv: Move, source: alloc::boxed::Box<MoveError> },
    #[error(transparent)]
    Map(#[from] MapError),
}

fn sorted3(mut t: [EdgeId; 3]) -> [EdgeId; 3] {
    t.sort();
    t
}

fn side_of(d: &GoodDrawing, boundary: &[DartId], smallest: EdgeId) -> Flip {
    let dart = boundary
        .iter()
        .copied()
        .find(|&x| d.dart_edge(x) == smallest)
        .expect("boundary runs along every triangle edge");
    if d.dart_forward(dart) {
        Flip::Ccw
    } else {
        Flip::Cw
    }
}

/// Triangular faces whose corners are three crossings of three distinct
/// edges: exactly the triangles a move can flip right now.
pub fn ready_triangles(d: &GoodDrawing) -> Vec<Triangle> {
    let map = d.map();
    let mut out = Vec::new();
    for face in map.faces() {
        if face.len() != 3 {
            continue;
        }
        let corners = [0, 1, 2].map(|k| map.origin(face.darts[k]));
        if corners.iter().any(|&v| !d.is_crossing(v)) {
            continue;
        }
        let edges = [0, 1, 2].map(|k| d.dart_edge(face.darts[k]));
        if edges[0] == edges[1] || edges[1] == edges[2] || edges[0] == edges[2] {
            continue;
        }
        let edges = sorted3(edges);
        let side = side_of(d, &face.darts, edges[0]);
        out.push(Triangle { edges, corners, boundary: face.darts.clone(), side, ready: true });
    }
    out.sort_by_key(|t| t.edges);
    out
}

/// Closed walk e: X_ef -> X_eg, g: X_eg -> X_fg, f: X_fg -> X_ef.
fn triangle_walk(d: &GoodDrawing, [e, f, g]: [EdgeId; 3]) -> Option<(Vec<DartId>, [NodeId; 3])> {
    let xef = d.crossing_node(e, f)?;
    let xeg = d.crossing_node(e, g)?;
    let xfg = d.crossing_node(f, g)?;
    let mut walk = d.edge_darts_between(e, xef, xeg);
    walk.extend(d.edge_darts_between(g, xeg, xfg));
    walk.extend(d.edge_darts_between(f, xfg, xef));
    Some((walk, [xef, xeg, xfg]))
}

/// The pre-Reidemeister triangle of three pairwise crossing edges, if one
/// side of their closed curve is free of the edges' ends.
pub fn triangle_of(d: &GoodDrawing, triple: [EdgeId; 3]) -> Option<Triangle> {
    let edges = sorted3(triple);
    let (walk, corners) = triangle_walk(d, edges)?;
    let map = d.map();
    let ends: Vec<NodeId> = edges.iter().flat_map(|e| [e.lo().index(), e.hi().index()]).collect();
    let left = map.region_left_of(&walk);
    let free = |region: &[bool]| {
        let inside = map.nodes_inside(region);
        !ends.iter().any(|v| inside.contains(v))
    };
    let boundary = if free(&left) {
        walk
    } else {
        let right: Vec<DartId> = walk.iter().rev().map(|&x| map.twin(x)).collect();
        let region = map.region_left_of(&right);
        if !free(&region) {
            return None;
        }
        right
    };
    let ready = boundary.len() == 3 && map.face_of(boundary[0]) == map.face_of(boundary[1]) && map.face_of(boundary[1]) == map.face_of(boundary[2]);
    let side = side_of(d, &boundary, edges[0]);
    Some(Triangle { edges, corners, boundary, side, ready })
}

/// Every pre-Reidemeister triangle of `d`, sorted by edge triple.
pub fn find_triangles(d: &GoodDrawing) -> Vec<Triangle> {
    let pairs = d.crossing_pairs();
    let crosses = |a: EdgeId, b: EdgeId| d.crossing_node(a, b).is_some();
    let mut out = Vec::new();
    for (k, &(e, f)) in pairs.iter().enumerate() {
        for &(e2, g) in &pairs[k + 1..] {
            if e2 != e || !crosses(f, g) {
                continue;
            }
            if let Some(t) = triangle_of(d, [e, f, g]) {
                out.push(t);
            }
        }
    }
    out
}

/// Flips the empty triangle named by `m`.
pub fn apply_move(d: &GoodDrawing, m: Move) -> Result<GoodDrawing, MoveError> {
    let [e, f, g] = m.triple;
    if d.crossing_node(e, f).is_none() || d.crossing_node(e, g).is_none() || d.crossing_node(f, g).is_none() {
        return Err(MoveError::NotPairwiseCrossing(m));
    }
    let t = ready_triangles(d)
        .into_iter()
        .find(|t| t.edges == m.triple)
        .ok_or(MoveError::NotEmpty(m))?;
    if t.side == m.flip {
        return Err(MoveError::WrongSide(m));
    }
    let mut data = d.crossing_data_of()?;
    for (x, y, z) in [(e, f, g), (f, e, g), (g, e, f)] {
        let list = data.list_mut(x);
        let i = list.iter().position(|&w| w == y).expect("crossing listed");
        let j = list.iter().position(|&w| w == z).expect("crossing listed");
        debug_assert_eq!(i.abs_diff(j), 1);
        list.swap(i, j);
    }
    Ok(from_crossing_data(&data)?)
}

/// Left fold of [`apply_move`]; the first failure carries its index.
pub fn apply_sequence(d: &GoodDrawing, s: &[Move]) -> Result<GoodDrawing, MoveError> {
    let mut cur = d.clone();
    for (index, &mv) in s.iter().enumerate() {
        cur = apply_move(&cur, mv).map_err(|source| MoveError::AtIndex { index, mv, source: alloc::boxed::Box::new(source) })?;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::convex_drawing;

    #[test]
    fn convex_k4_has_no_triangles() {
        let d = convex_drawing(4).unwrap();
        assert!(find_triangles(&d).is_empty());
        assert!(ready_triangles(&d).is_empty());
    }

    #[test]
    fn convex_k5_has_no_pairwise_crossing_triple() {
        assert!(find_triangles(&convex_drawing(5).unwrap()).is_empty());
    }

    #[test]
    fn ready_faces_are_the_flagged_triangles() {
        let d = convex_drawing(6).unwrap();
        let all = find_triangles(&d);
        let ready = ready_triangles(&d);
        let flagged: Vec<_> = all.iter().filter(|t| t.ready).cloned().collect();
        assert_eq!(flagged, ready);
        assert!(!ready.is_empty());
    }

    #[test]
    fn move_then_inverse_restores() {
        let d = convex_drawing(6).unwrap();
        let t = &ready_triangles(&d)[0];
        let m = t.to_move();
        let d2 = apply_move(&d, m).unwrap();
        assert_ne!(d2.crossing_data_of().unwrap(), d.crossing_data_of().unwrap());
        assert!(matches!(apply_move(&d2, m), Err(MoveError::WrongSide(x)) if x == m));
        let back = apply_sequence(&d, &[m, m.inverse()]).unwrap();
        assert!(back.same_map(&d));
    }

    #[test]
    fn bad_moves_are_rejected() {
        let d = convex_drawing(5).unwrap();
        let e = EdgeId::from_labels;
        let m = Move::new([e(1, 2), e(3, 4), e(1, 3)], Flip::Cw);
        assert!(matches!(apply_move(&d, m), Err(MoveError::NotPairwiseCrossing(x)) if x == m));
        let err = apply_sequence(&d, &[m]).unwrap_err();
        assert!(matches!(err, MoveError::AtIndex { index: 0, .. }));
    }
}
