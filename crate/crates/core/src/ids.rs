//! Vertex and edge labels of `K_n`.

use core::fmt;

/// A vertex label in `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u16);

impl VertexId {
    /// Panics if `label` is zero or does not fit in 16 bits.
    pub fn new(label: usize) -> Self {
        assert!(label >= 1 && label <= u16::MAX as usize, "vertex label {label} out of range");
        VertexId(label as u16)
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Zero-based position, handy for indexing per-vertex tables.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered pair `{lo, hi}` of distinct vertices, stored with `lo < hi`.
///
/// Ordering is lexicographic on `(lo, hi)`, which is also the order used by
/// every file format and by [`EdgeId::index`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId {
    lo: VertexId,
    hi: VertexId,
}

impl EdgeId {
    /// Panics if `a == b`.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        assert!(a != b, "edge endpoints must be distinct (got {a} twice)");
        if a < b {
            EdgeId { lo: a, hi: b }
        } else {
            EdgeId { lo: b, hi: a }
        }
    }

    pub fn from_labels(a: usize, b: usize) -> Self {
        EdgeId::new(VertexId::new(a), VertexId::new(b))
    }

    pub fn lo(self) -> VertexId {
        self.lo
    }

    pub fn hi(self) -> VertexId {
        self.hi
    }

    pub fn contains(self, v: VertexId) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn shares_endpoint(self, other: EdgeId) -> bool {
        other.contains(self.lo) || other.contains(self.hi)
    }

    /// The endpoint that is not `v`. Panics if `v` is not an endpoint.
    pub fn other(self, v: VertexId) -> VertexId {
        if v == self.lo {
            self.hi
        } else {
            assert!(v == self.hi, "{v} is not an endpoint of {self}");
            self.lo
        }
    }

    /// Position of this edge among the edges of `K_n` in lexicographic order.
    pub fn index(self, n: usize) -> usize {
        let i = self.lo.get();
        let j = self.hi.get();
        debug_assert!(j <= n);
        (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
    }

    /// The edge traversed from `from` towards the other endpoint.
    pub fn directed_from(self, from: VertexId) -> DirectedEdge {
        DirectedEdge::new(from, self.other(from))
    }

    /// The edge traversed from `lo` to `hi`.
    pub fn forward(self) -> DirectedEdge {
        DirectedEdge::new(self.lo, self.hi)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// An edge together with a direction of traversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedEdge {
    pub from: VertexId,
    pub to: VertexId,
}

impl DirectedEdge {
    pub fn new(from: VertexId, to: VertexId) -> Self {
        assert!(from != to, "directed edge endpoints must be distinct");
        DirectedEdge { from, to }
    }

    pub fn edge(self) -> EdgeId {
        EdgeId::new(self.from, self.to)
    }

    pub fn reversed(self) -> Self {
        DirectedEdge { from: self.to, to: self.from }
    }

    /// True when the traversal runs from the smaller label to the larger one.
    pub fn is_forward(self) -> bool {
        self.from < self.to
    }
}

impl fmt::Display for DirectedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// All edges of `K_n` in lexicographic order.
pub fn edges(n: usize) -> impl Iterator<Item = EdgeId> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| EdgeId::from_labels(i, j)))
}

pub fn edge_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn edge_index_is_lexicographic_rank() {
        for n in 2..9 {
            let all: Vec<EdgeId> = edges(n).collect();
            assert_eq!(all.len(), edge_count(n));
            for (k, e) in all.iter().enumerate() {
                assert_eq!(e.index(n), k);
            }
            let mut sorted = all.clone();
            sorted.sort();
            assert_eq!(sorted, all);
        }
    }

    #[test]
    fn edge_normalizes_endpoints() {
        let e = EdgeId::from_labels(5, 2);
        assert_eq!(e.lo().get(), 2);
        assert_eq!(e.hi().get(), 5);
        assert_eq!(e.other(VertexId::new(2)).get(), 5);
        assert!(e.shares_endpoint(EdgeId::from_labels(5, 7)));
        assert!(!e.shares_endpoint(EdgeId::from_labels(1, 3)));
    }

    #[test]
    #[should_panic]
    fn loop_edge_rejected() {
        let _ = EdgeId::from_labels(3, 3);
    }
}
