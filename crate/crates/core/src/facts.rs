//! What a rotation scheme alone says about every drawing realizing it.
//!
//! Any two good drawings with the same rotation scheme agree on each induced
//! `K_4` up to an orientation-preserving homeomorphism. So the crossing pairs,
//! the direction in which each pair crosses, and which side of a triangle a
//! fourth vertex lies on are all functions of the scheme.

use alloc::vec::Vec;
use thiserror::Error;

use crate::ids::{DirectedEdge, EdgeId, VertexId};
use crate::scheme::RotationScheme;

/// How `f` crosses the directed edge `e`: from the right-hand side of `e` to
/// its left-hand side, or the reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CrossingSign {
    LeftToRight,
    RightToLeft,
}

impl CrossingSign {
    pub fn flipped(self) -> Self {
        match self {
            CrossingSign::LeftToRight => CrossingSign::RightToLeft,
            CrossingSign::RightToLeft => CrossingSign::LeftToRight,
        }
    }
}

/// Classification of one of the 16 rotation systems of `K_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K4Class {
    /// Embeds in the sphere without crossings.
    Planar,
    /// Realized by a good drawing with exactly one crossing.
    ///
    /// `pair` indexes the disjoint pairings of the local indices 0..4:
    /// 0 is `{01, 23}`, 1 is `{02, 13}`, 2 is `{03, 12}`. `sign` is how the
    /// edge not containing index 0, traversed low to high, crosses the edge
    /// containing index 0, traversed low to high.
    Crossing { pair: u8, sign: CrossingSign },
    /// Neither planar nor realizable with a single crossing, so no good
    /// drawing has it. Still a nonembedding in the sphere.
    Unrealizable,
}

impl K4Class {
    pub fn is_planar(self) -> bool {
        self == K4Class::Planar
    }
}

use CrossingSign::{LeftToRight as LR, RightToLeft as RL};
use K4Class::{Crossing as X, Planar as P, Unrealizable as U};

/// Indexed by the orientation bits of [`K4Rotation`]. Regenerated and checked
/// against a face-tracing enumeration in the test suite.
const K4_TABLE: [K4Class; 16] = [
    X { pair: 1, sign: LR },
    U,
    U,
    X { pair: 2, sign: LR },
    U,
    P,
    X { pair: 0, sign: RL },
    U,
    U,
    X { pair: 0, sign: LR },
    P,
    U,
    X { pair: 2, sign: RL },
    U,
    U,
    X { pair: 1, sign: RL },
];

const PAIRS: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];

/// The rotation system induced on four vertices.
///
/// Stored as four sorted labels and one bit per label: bit `t` is set when
/// the local rotation at `labels[t]` lists the other three in increasing
/// cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct K4Rotation {
    labels: [VertexId; 4],
    bits: u8,
}

impl K4Rotation {
    /// Panics unless `labels` are strictly increasing and `bits < 16`.
    pub fn from_bits(labels: [VertexId; 4], bits: u8) -> Self {
        assert!(labels.windows(2).all(|w| w[0] < w[1]), "K4 labels must be strictly increasing");
        assert!(bits < 16);
        K4Rotation { labels, bits }
    }

    /// The rotation system induced by `s` on the four given vertices.
    pub fn from_scheme(s: &RotationScheme, mut labels: [VertexId; 4]) -> Self {
        labels.sort();
        let mut bits = 0u8;
        for t in 0..4 {
            let o: Vec<VertexId> = labels.iter().copied().filter(|&w| w != labels[t]).collect();
            if s.is_ccw(labels[t], o[0], o[1], o[2]) {
                bits |= 1 << t;
            }
        }
        K4Rotation { labels, bits }
    }

    pub fn labels(&self) -> [VertexId; 4] {
        self.labels
    }

    pub fn bits(&self) -> u8 {
        self.bits
    }

    /// Every local rotation reversed.
    pub fn mirror(&self) -> Self {
        K4Rotation { labels: self.labels, bits: !self.bits & 0xf }
    }

    pub fn class(&self) -> K4Class {
        K4_TABLE[self.bits as usize]
    }

    /// The crossing pair as edges, lexicographically ordered.
    pub fn crossing_pair(&self) -> Option<(EdgeId, EdgeId)> {
        match self.class() {
            K4Class::Crossing { pair, .. } => Some(self.pair_edges(pair)),
            _ => None,
        }
    }

    fn pair_edges(&self, pair: u8) -> (EdgeId, EdgeId) {
        let [(a, b), (c, d)] = PAIRS[pair as usize];
        let l = &self.labels;
        (EdgeId::new(l[a], l[b]), EdgeId::new(l[c], l[d]))
    }
}

/// The pair of edges that crosses in every good drawing realizing `r`, or
/// `None` if no such drawing has a crossing (or none exists at all).
pub fn k4_crossing(r: &K4Rotation) -> Option<(EdgeId, EdgeId)> {
    r.crossing_pair()
}

/// All 4-subsets of `1..=n` in lexicographic order.
pub fn quadruples(n: usize) -> impl Iterator<Item = [VertexId; 4]> {
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| {
            (b + 1..=n).flat_map(move |c| {
                (c + 1..=n).map(move |d| [a, b, c, d].map(VertexId::new))
            })
        })
    })
}

/// Every crossing pair forced by `s`, each as `(e, f)` with `e < f`, sorted.
pub fn crossing_set_of(s: &RotationScheme) -> Vec<(EdgeId, EdgeId)> {
    let mut out: Vec<(EdgeId, EdgeId)> = quadruples(s.n())
        .filter_map(|q| K4Rotation::from_scheme(s, q).crossing_pair())
        .collect();
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactsError {
    #[error("edges {0} and {1} share an endpoint")]
    Adjacent(EdgeId, EdgeId),
    #[error("edges {0} and {1} do not cross under this rotation scheme")]
    NotCrossing(EdgeId, EdgeId),
}

/// How the traversal of `f` crosses the traversal of `e`.
pub fn crossing_sign(s: &RotationScheme, e: DirectedEdge, f: DirectedEdge) -> Result<CrossingSign, FactsError> {
    let (ee, fe) = (e.edge(), f.edge());
    if ee.shares_endpoint(fe) {
        return Err(FactsError::Adjacent(ee, fe));
    }
    let r = K4Rotation::from_scheme(s, [e.from, e.to, f.from, f.to]);
    let K4Class::Crossing { pair, sign } = r.class() else {
        return Err(FactsError::NotCrossing(ee, fe));
    };
    let (base_e, base_f) = r.pair_edges(pair);
    if !((base_e == ee && base_f == fe) || (base_e == fe && base_f == ee)) {
        return Err(FactsError::NotCrossing(ee, fe));
    }
    let mut out = sign;
    if base_e != ee {
        out = out.flipped();
    }
    if !e.is_forward() {
        out = out.flipped();
    }
    if !f.is_forward() {
        out = out.flipped();
    }
    Ok(out)
}

/// A side of a directed closed curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Self {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Where a fourth vertex lies relative to a directed triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleSide {
    pub side: Side,
    /// The edge from `x` leaving on the other side, with the triangle edge it
    /// must cross. `None` when all three edges at `x` stay on one side.
    pub minority: Option<(EdgeId, EdgeId)>,
}

/// The side of the directed cycle `(u, v, w)` that contains `x`, decided by
/// where the edges `xu`, `xv`, `xw` leave the triangle's corners.
pub fn triangle_side(s: &RotationScheme, t: [VertexId; 3], x: VertexId) -> TriangleSide {
    let [u, v, w] = t;
    let at = [
        (u, s.is_ccw(u, v, x, w), EdgeId::new(v, w)),
        (v, s.is_ccw(v, w, x, u), EdgeId::new(w, u)),
        (w, s.is_ccw(w, u, x, v), EdgeId::new(u, v)),
    ];
    let lefts = at.iter().filter(|c| c.1).count();
    let side = if lefts >= 2 { Side::Left } else { Side::Right };
    let minority = match lefts {
        1 | 2 => at
            .iter()
            .find(|c| c.1 != (side == Side::Left))
            .map(|c| (EdgeId::new(x, c.0), c.2)),
        _ => None,
    };
    TriangleSide { side, minority }
}
