//! Generators of good drawings.
//!
//! Both constructions start from a concrete picture, read off its crossing
//! orders with exact integer arithmetic, and hand the result to
//! [`from_crossing_data`], whose Euler check confirms the picture was read
//! consistently.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ids::{edge_count, EdgeId, VertexId};
use crate::map::{from_crossing_data, CrossingData, GoodDrawing, MapError};
use crate::moves::{apply_move, ready_triangles, Move, MoveError};
use crate::scheme::RotationScheme;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("need at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("two crossings on edge {0} coincide; the construction is degenerate for this n")]
    Tie(EdgeId),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Move(#[from] MoveError),
}

/// `p / q` with `q != 0`, compared exactly.
#[derive(Clone, Copy, Debug)]
struct Ratio {
    p: i128,
    q: i128,
}

impl Ratio {
    fn new(p: i128, q: i128) -> Self {
        debug_assert!(q != 0);
        if q < 0 {
            Ratio { p: -p, q: -q }
        } else {
            Ratio { p, q }
        }
    }

    fn cmp(self, o: Ratio) -> Ordering {
        (self.p * o.q).cmp(&(o.p * self.q))
    }
}

fn sort_exact(e: EdgeId, mut keyed: Vec<(Ratio, EdgeId)>) -> Result<Vec<EdgeId>, GenError> {
    keyed.sort_by(|a, b| a.0.cmp(b.0));
    if keyed.windows(2).any(|w| w[0].0.cmp(w[1].0) == Ordering::Equal) {
        return Err(GenError::Tie(e));
    }
    Ok(keyed.into_iter().map(|(_, f)| f).collect())
}

/// Crossing orders of the straight-line drawing of `K_m` on the points
/// `(k^3, k^6)`, `k = 1..=m`. These lie on a parabola, so they are in convex
/// position and counterclockwise in `k`. Chords are listed by position pairs,
/// each list read from the smaller position.
fn convex_orders(m: usize) -> Result<BTreeMap<(usize, usize), Vec<(usize, usize)>>, GenError> {
    let x = |k: usize| (k as i128).pow(3);
    let mut out = BTreeMap::new();
    for i in 1..=m {
        for j in i + 1..=m {
            let mut keyed = Vec::new();
            for a in 1..=m {
                for b in a + 1..=m {
                    let interleaved = (i < a && a < j && j < b) || (a < i && i < b && b < j);
                    if interleaved {
                        // x-coordinate where the two chords of the parabola meet
                        let r = Ratio::new(x(i) * x(j) - x(a) * x(b), x(i) + x(j) - x(a) - x(b));
                        keyed.push((r, EdgeId::from_labels(a, b)));
                    }
                }
            }
            let sorted = sort_exact(EdgeId::from_labels(i, j), keyed)?;
            out.insert((i, j), sorted.into_iter().map(|f| (f.lo().get(), f.hi().get())).collect());
        }
    }
    Ok(out)
}

/// The straight-line drawing of `K_n` with vertices in convex position,
/// labelled counterclockwise.
pub fn convex_drawing(n: usize) -> Result<GoodDrawing, GenError> {
    if n < 3 {
        return Err(GenError::TooSmall(n));
    }
    let orders = convex_orders(n)?;
    let lists = orders
        .values()
        .map(|l| l.iter().map(|&(a, b)| EdgeId::from_labels(a, b)).collect())
        .collect();
    let data = CrossingData::new(RotationScheme::convex(n), lists)?;
    Ok(from_crossing_data(&data)?)
}

/// The two-circle drawing of `K_n` with `H(n)` crossings.
///
/// Vertices `1..=p`, `p = ceil(n/2)`, sit counterclockwise on an inner circle
/// and `p+1..=n` counterclockwise on an outer circle, at slightly perturbed
/// angles. Edges within a circle are drawn as convex chords on the side away
/// from the other circle. Each inner-outer edge runs through the annulus,
/// its angle moving linearly with the radius by the shorter way round.
pub fn cylindrical_drawing(n: usize) -> Result<GoodDrawing, GenError> {
    if n < 3 {
        return Err(GenError::TooSmall(n));
    }
    let p = n.div_ceil(2);
    let q = n / 2;
    let ni = n as i128;
    // Angles in units of 1/turn turns.
    let turn: i128 = (p as i128) * 2 * (q as i128) * 7919 * 3000 * ni.pow(5);
    let mut theta = vec![0i128; n + 1];
    for k in 0..p {
        let kk = k as i128;
        theta[k + 1] = kk * turn / p as i128 + (kk * kk + 1) * turn / (1000 * ni.pow(4));
    }
    for k in 0..q {
        let kk = k as i128;
        theta[p + 1 + k] = (2 * kk + 1) * turn / (2 * q as i128) + turn / 7919 + (kk.pow(3) + 2) * turn / (3000 * ni.pow(5));
    }
    let delta = |t: usize, s: usize| -> i128 {
        let mut d = (theta[s] - theta[t]).rem_euclid(turn);
        if 2 * d > turn {
            d -= turn;
        }
        assert!(2 * d.abs() != turn, "spoke displacement of exactly half a turn");
        d
    };

    let mut lists: Vec<Vec<EdgeId>> = vec![Vec::new(); edge_count(n)];
    for ((a, b), l) in convex_orders(p)? {
        lists[EdgeId::from_labels(a, b).index(n)] = l.into_iter().map(|(x, y)| EdgeId::from_labels(x, y)).collect();
    }
    // The outer disc sees the outer circle in reverse, so position k there is
    // label n + 1 - k, and lists read from the larger label.
    let outer = |k: usize| n + 1 - k;
    for ((a, b), l) in convex_orders(q)? {
        let e = EdgeId::from_labels(outer(a), outer(b));
        let mut mapped: Vec<EdgeId> = l.into_iter().map(|(x, y)| EdgeId::from_labels(outer(x), outer(y))).collect();
        mapped.reverse();
        lists[e.index(n)] = mapped;
    }

    let spokes: Vec<(usize, usize)> = (1..=p).flat_map(|t| (p + 1..=n).map(move |s| (t, s))).collect();
    let mut keyed: BTreeMap<EdgeId, Vec<(Ratio, EdgeId)>> = BTreeMap::new();
    for (k, &(t1, s1)) in spokes.iter().enumerate() {
        for &(t2, s2) in &spokes[k + 1..] {
            if t1 == t2 || s1 == s2 {
                continue;
            }
            let d0 = theta[t1] - theta[t2];
            let d1 = delta(t1, s1) - delta(t2, s2);
            let (lo, hi) = if d1 > 0 { (d0, d0 + d1) } else { (d0 + d1, d0) };
            // the one multiple of a turn strictly inside (lo, hi), if any
            let m = (lo.div_euclid(turn) + 1) * turn;
            if m >= hi {
                continue;
            }
            let h = Ratio::new(m - d0, d1);
            let (a, b) = (EdgeId::from_labels(t1, s1), EdgeId::from_labels(t2, s2));
            keyed.entry(a).or_default().push((h, b));
            keyed.entry(b).or_default().push((h, a));
        }
    }
    for (e, k) in keyed {
        lists[e.index(n)] = sort_exact(e, k)?;
    }

    let mut orders = Vec::with_capacity(n);
    let by_delta = |mut xs: Vec<(i128, usize)>| {
        xs.sort();
        xs.into_iter().map(|(_, w)| VertexId::new(w))
    };
    for t in 1..=p {
        let mut o: Vec<VertexId> = (1..p).map(|s| VertexId::new((t - 1 + s) % p + 1)).collect();
        o.extend(by_delta((p + 1..=n).map(|s| (delta(t, s), s)).collect()));
        orders.push(o);
    }
    for s in p + 1..=n {
        let mut o: Vec<VertexId> = by_delta((1..=p).map(|t| (delta(t, s), t)).collect()).collect();
        // the other outer vertices clockwise from s
        let pos = s - p - 1;
        o.extend((1..q).map(|k| VertexId::new(p + 1 + (pos + q - k) % q)));
        orders.push(o);
    }
    let data = CrossingData::new(RotationScheme::new(n, orders).map_err(MapError::from)?, lists)?;
    Ok(from_crossing_data(&data)?)
}

/// A drawing after random moves, with the moves that produced it.
#[derive(Clone, Debug)]
pub struct Perturbation {
    pub drawing: GoodDrawing,
    pub moves: Vec<Move>,
    /// Fewer than the requested number of moves were possible.
    pub short: bool,
}

/// Applies `k` moves, each chosen uniformly among the triangles that are
/// ready at that point.
pub fn perturb(d: &GoodDrawing, k: usize, seed: u64) -> Result<Perturbation, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut moves = Vec::with_capacity(k);
    for _ in 0..k {
        let ready = ready_triangles(&cur);
        if ready.is_empty() {
            return Ok(Perturbation { drawing: cur, moves, short: true });
        }
        let m = ready[rng.random_range(0..ready.len())].to_move();
        cur = apply_move(&cur, m)?;
        moves.push(m);
    }
    Ok(Perturbation { drawing: cur, moves, short: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convex_small_cases() {
        assert_eq!(convex_drawing(3).unwrap().crossing_count(), 0);
        let d = convex_drawing(4).unwrap();
        assert_eq!(d.crossing_pairs(), vec![(EdgeId::from_labels(1, 3), EdgeId::from_labels(2, 4))]);
        assert_eq!(convex_drawing(6).unwrap().crossing_count(), 15);
        assert!(matches!(convex_drawing(2), Err(GenError::TooSmall(2))));
    }

    #[test]
    fn cylindrical_small_cases() {
        let counts: Vec<usize> = (3..=8).map(|n| cylindrical_drawing(n).unwrap().crossing_count()).collect();
        assert_eq!(counts, vec![0, 0, 1, 3, 9, 18]);
    }

    #[test]
    fn perturb_is_deterministic() {
        let d = convex_drawing(7).unwrap();
        let a = perturb(&d, 20, 11).unwrap();
        let b = perturb(&d, 20, 11).unwrap();
        assert!(!a.short);
        assert_eq!(a.moves, b.moves);
        assert!(a.drawing.same_map(&b.drawing));
        assert_eq!(a.drawing.crossing_pairs(), d.crossing_pairs());
        assert_eq!(a.drawing.rotation_scheme_of().unwrap(), d.rotation_scheme_of().unwrap());
        let k4 = perturb(&convex_drawing(4).unwrap(), 3, 0).unwrap();
        assert!(k4.short && k4.moves.is_empty());
        let none = perturb(&d, 0, 5).unwrap();
        assert!(none.moves.is_empty() && none.drawing.same_map(&d));
    }
}
