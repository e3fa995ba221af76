//! Rotation schemes: one cyclic order of the other vertices per vertex.
//!
//! All cyclic orders are counterclockwise under a single global orientation
//! of the sphere. Two schemes are equal when every local rotation agrees up to
//! a cyclic shift; reversing a rotation yields the mirror drawing and is never
//! identified with the original.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::ids::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("expected {expected} local rotations, found {found}")]
    WrongVertexCount { expected: usize, found: usize },
    #[error("local rotation of vertex {vertex} is not a cyclic permutation of the other vertices")]
    NotAPermutation { vertex: usize },
}

/// A rotation scheme of `K_n`.
#[derive(Clone, Debug)]
pub struct RotationScheme {
    n: usize,
    /// `orders[v]` is the rotation of vertex `v + 1`, rotated to start at its
    /// smallest entry.
    orders: Vec<Vec<VertexId>>,
    /// `pos[v * n + w]` is the index of vertex `w + 1` inside `orders[v]`.
    pos: Vec<u16>,
}

impl PartialEq for RotationScheme {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.orders == other.orders
    }
}

impl Eq for RotationScheme {}

impl RotationScheme {
    pub fn new(n: usize, orders: Vec<Vec<VertexId>>) -> Result<Self, SchemeError> {
        if orders.len() != n {
            return Err(SchemeError::WrongVertexCount { expected: n, found: orders.len() });
        }
        let mut normalized = Vec::with_capacity(n);
        for (k, order) in orders.into_iter().enumerate() {
            let v = k + 1;
            let mut seen = vec![false; n + 1];
            if order.len() != n - 1 {
                return Err(SchemeError::NotAPermutation { vertex: v });
            }
            for w in &order {
                let w = w.get();
                if w == v || w > n || seen[w] {
                    return Err(SchemeError::NotAPermutation { vertex: v });
                }
                seen[w] = true;
            }
            normalized.push(normalize(order));
        }
        let mut scheme = RotationScheme { n, orders: normalized, pos: vec![0; n * n] };
        for v in 0..n {
            scheme.rebuild_positions(v);
        }
        Ok(scheme)
    }

    /// Builds a scheme from plain labels, e.g. `&[&[2, 4, 3], ...]`.
    pub fn from_labels(orders: &[&[usize]]) -> Result<Self, SchemeError> {
        let n = orders.len();
        let orders = orders
            .iter()
            .map(|o| o.iter().map(|&w| VertexId::new(w)).collect())
            .collect();
        RotationScheme::new(n, orders)
    }

    /// The scheme of `K_n` with vertices in convex position labelled
    /// counterclockwise: `rho(k) = (k+1, ..., n, 1, ..., k-1)`.
    pub fn convex(n: usize) -> Self {
        let orders = (1..=n)
            .map(|k| (1..n).map(|s| VertexId::new((k - 1 + s) % n + 1)).collect())
            .collect();
        RotationScheme::new(n, orders).expect("convex scheme is well formed")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Counterclockwise rotation at `v`, starting at its smallest entry.
    pub fn ccw(&self, v: VertexId) -> &[VertexId] {
        &self.orders[v.index()]
    }

    /// Index of `w` in the rotation at `v`.
    pub fn position(&self, v: VertexId, w: VertexId) -> usize {
        self.pos[v.index() * self.n + w.index()] as usize
    }

    /// True when `a`, `b`, `c` occur in this counterclockwise cyclic order
    /// around `v`.
    pub fn is_ccw(&self, v: VertexId, a: VertexId, b: VertexId, c: VertexId) -> bool {
        let m = self.n - 1;
        let pa = self.position(v, a);
        let pb = (self.position(v, b) + m - pa) % m;
        let pc = (self.position(v, c) + m - pa) % m;
        pb < pc
    }

    /// The rotation at `v` restricted to `among`, read counterclockwise
    /// starting from the first element of `among`.
    pub fn induced(&self, v: VertexId, among: &[VertexId]) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = among.iter().copied().filter(|&w| w != v).collect();
        let m = self.n - 1;
        let start = self.position(v, out[0]);
        out.sort_by_key(|&w| (self.position(v, w) + m - start) % m);
        out
    }

    /// The scheme induced on the vertices `1..=m`.
    pub fn restrict(&self, m: usize) -> RotationScheme {
        assert!(m <= self.n);
        let orders = (0..m)
            .map(|v| self.orders[v].iter().copied().filter(|w| w.get() <= m).collect())
            .collect();
        RotationScheme::new(m, orders).expect("restriction of a scheme is a scheme")
    }

    /// The mirror scheme: every local rotation reversed.
    pub fn mirror(&self) -> RotationScheme {
        let orders = self
            .orders
            .iter()
            .map(|o| o.iter().rev().copied().collect())
            .collect();
        RotationScheme::new(self.n, orders).expect("mirror of a scheme is a scheme")
    }

    /// Transposes the entries at cyclic positions `idx` and `idx + 1` of the
    /// rotation at `v`. Returns the two vertices that were swapped.
    pub fn swap_adjacent(&mut self, v: VertexId, idx: usize) -> (VertexId, VertexId) {
        let order = &mut self.orders[v.index()];
        let m = order.len();
        let (i, j) = (idx % m, (idx + 1) % m);
        let pair = (order[i], order[j]);
        order.swap(i, j);
        let taken = core::mem::take(order);
        *order = normalize(taken);
        self.rebuild_positions(v.index());
        pair
    }

    fn rebuild_positions(&mut self, v: usize) {
        let n = self.n;
        for (p, w) in self.orders[v].iter().enumerate() {
            self.pos[v * n + w.index()] = p as u16;
        }
    }
}

fn normalize(mut order: Vec<VertexId>) -> Vec<VertexId> {
    if let Some(min_at) = order.iter().enumerate().min_by_key(|(_, w)| **w).map(|(p, _)| p) {
        order.rotate_left(min_at);
    }
    order
}
