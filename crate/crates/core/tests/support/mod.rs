//! Independent oracles shared by the integration tests. Nothing here calls
//! the library routine it is used to check.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rotdraw_core::dual::{Arrangement, DualPath};
use rotdraw_core::gen::{convex_drawing, cylindrical_drawing};
use rotdraw_core::ids::edges;
use rotdraw_core::{CrossingData, EdgeId, GoodDrawing, Side, VertexId};
use std::collections::BTreeSet;

pub fn e(a: usize, b: usize) -> EdgeId {
    EdgeId::from_labels(a, b)
}

/// Base drawings of criterion-style corpora: convex and cylindrical, n in `ns`.
pub fn bases(ns: std::ops::RangeInclusive<usize>) -> Vec<(&'static str, usize, GoodDrawing)> {
    let mut out = Vec::new();
    for n in ns {
        out.push(("convex", n, convex_drawing(n).unwrap()));
        out.push(("cylindrical", n, cylindrical_drawing(n).unwrap()));
    }
    out
}

/// What face tracing says about one K4 rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum K4Oracle {
    Planar,
    /// The pairs of disjoint edges whose one-crossing planarization is
    /// spherical, for either orientation of the crossing.
    Crossing(Vec<(EdgeId, EdgeId)>),
}

/// Number of orbits of `d -> next(twin(d))`.
fn count_faces(twin: &[usize], next: &[usize]) -> usize {
    let mut seen = vec![false; twin.len()];
    let mut faces = 0;
    for s in 0..twin.len() {
        if seen[s] {
            continue;
        }
        faces += 1;
        let mut d = s;
        while !seen[d] {
            seen[d] = true;
            d = next[twin[d]];
        }
    }
    faces
}

/// A rotation map given as: darts `(from, to)` and a ccw cyclic list of dart
/// indices per node. Returns the number of faces.
fn faces_of(darts: &[(usize, usize)], rot: &[Vec<usize>]) -> usize {
    let m = darts.len();
    let mut twin = vec![usize::MAX; m];
    for (i, &(a, b)) in darts.iter().enumerate() {
        for (j, &(c, d)) in darts.iter().enumerate() {
            if i != j && a == d && b == c && twin[i] == usize::MAX && twin[j] == usize::MAX {
                twin[i] = j;
                twin[j] = i;
            }
        }
    }
    let mut next = vec![0; m];
    for r in rot {
        for k in 0..r.len() {
            next[r[k]] = r[(k + 1) % r.len()];
        }
    }
    count_faces(&twin, &next)
}

/// Face-tracing oracle for the K4 rotation system `rot[t]` (the three other
/// labels around label `t + 1`, counterclockwise).
pub fn k4_oracle(rot: &[[usize; 3]; 4]) -> K4Oracle {
    // K4 itself: darts (u, v) for u != v
    let mut darts = Vec::new();
    for u in 1..=4 {
        for &v in &rot[u - 1] {
            darts.push((u, v));
        }
    }
    let rotation: Vec<Vec<usize>> = (0..4).map(|t| (3 * t..3 * t + 3).collect()).collect();
    if 4 - 6 + faces_of(&darts, &rotation) as i64 == 2 {
        return K4Oracle::Planar;
    }
    let mut found = Vec::new();
    for [(a, b), (c, d)] in [[(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]] {
        for flip in [false, true] {
            // node 5 is the crossing; a-b and c-d run through it
            let via = |u: usize, v: usize| {
                if (u, v) == (a, b) || (u, v) == (b, a) || (u, v) == (c, d) || (u, v) == (d, c) {
                    5
                } else {
                    v
                }
            };
            let mut darts = Vec::new();
            let mut rotation = Vec::new();
            for u in 1..=4 {
                let mut r = Vec::new();
                for &v in &rot[u - 1] {
                    r.push(darts.len());
                    darts.push((u, via(u, v)));
                }
                rotation.push(r);
            }
            let order = if flip { [a, d, b, c] } else { [a, c, b, d] };
            let mut r = Vec::new();
            for w in order {
                r.push(darts.len());
                darts.push((5, w));
            }
            rotation.push(r);
            if 5 - 8 + faces_of(&darts, &rotation) as i64 == 2 {
                found.push((e(a, b), e(c, d)));
            }
        }
    }
    found.sort();
    found.dedup();
    K4Oracle::Crossing(found)
}

/// All 16 K4 rotation systems, each vertex's neighbours ascending or
/// descending.
pub fn all_k4_systems() -> Vec<[[usize; 3]; 4]> {
    (0..16u8)
        .map(|bits| {
            let mut rot = [[0; 3]; 4];
            for t in 0..4 {
                let mut others: Vec<usize> = (1..=4).filter(|&x| x != t + 1).collect();
                if bits >> t & 1 == 0 {
                    others.reverse();
                }
                rot[t] = [others[0], others[1], others[2]];
            }
            rot
        })
        .collect()
}

/// Which side of the directed cycle `u -> v -> w -> u` the vertex `x` lies
/// on, by flooding the faces of the planarized map.
pub fn side_by_containment(d: &GoodDrawing, t: [usize; 3], x: usize) -> Side {
    let map = d.map();
    let node = |k: usize| k - 1;
    let mut walk = Vec::new();
    for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
        let path = d.edge_path(e(a, b));
        if a < b {
            walk.extend_from_slice(path);
        } else {
            walk.extend(path.iter().rev().map(|&z| map.twin(z)));
        }
    }
    let mut wall = vec![false; map.dart_count()];
    for &z in &walk {
        wall[z] = true;
        wall[map.twin(z)] = true;
    }
    let faces = map.faces();
    let mut left = vec![false; faces.len()];
    let mut stack: Vec<usize> = walk.iter().map(|&z| map.face_of(z)).collect();
    while let Some(f) = stack.pop() {
        if std::mem::replace(&mut left[f], true) {
            continue;
        }
        for &z in &faces[f].darts {
            if !wall[z] {
                stack.push(map.face_of(map.twin(z)));
            }
        }
    }
    let dart = map.rotation(node(x))[0];
    if left[map.face_of(dart)] {
        Side::Left
    } else {
        Side::Right
    }
}

/// Largest number of crossing pairs among the edges of any 6-cycle.
pub fn six_cycle_max(d: &GoodDrawing) -> usize {
    let n = d.n();
    let m = n * (n - 1) / 2;
    let mut crosses = vec![false; m * m];
    for (a, b) in d.crossing_pairs() {
        crosses[a.index(n) * m + b.index(n)] = true;
        crosses[b.index(n) * m + a.index(n)] = true;
    }
    let mut best = 0;
    let mut cyc = [0usize; 6];
    // cycles starting at their smallest vertex, second vertex < last vertex
    fn rec(n: usize, depth: usize, cyc: &mut [usize; 6], used: &mut [bool], f: &mut dyn FnMut(&[usize; 6])) {
        if depth == 6 {
            if cyc[1] < cyc[5] {
                f(cyc);
            }
            return;
        }
        for v in cyc[0] + 1..=n {
            if !used[v] {
                used[v] = true;
                cyc[depth] = v;
                rec(n, depth + 1, cyc, used, f);
                used[v] = false;
            }
        }
    }
    for s in 1..=n {
        let mut used = vec![false; n + 1];
        used[s] = true;
        cyc[0] = s;
        rec(n, 1, &mut cyc, &mut used, &mut |c| {
            let es: Vec<usize> = (0..6).map(|k| e(c[k], c[(k + 1) % 6]).index(n)).collect();
            let mut count = 0;
            for i in 0..6 {
                for j in i + 1..6 {
                    count += crosses[es[i] * m + es[j]] as usize;
                }
            }
            best = best.max(count);
        });
    }
    best
}

/// Every list is unchanged except at most three, each changed by a single
/// adjacent transposition.
pub fn lists_differ_by_adjacent_swaps(a: &CrossingData, b: &CrossingData) -> bool {
    let mut changed = 0;
    for ((ea, la), (eb, lb)) in a.iter().zip(b.iter()) {
        if ea != eb || la.len() != lb.len() {
            return false;
        }
        let diff: Vec<usize> = (0..la.len()).filter(|&k| la[k] != lb[k]).collect();
        match diff.as_slice() {
            [] => {}
            [i, j] if *j == i + 1 && la[*i] == lb[*j] && la[*j] == lb[*i] => changed += 1,
            _ => return false,
        }
    }
    changed <= 3
}

/// Faces adjacent across every step, and no arc crossed twice.
pub fn dual_path_ok(a: &Arrangement, p: &DualPath) -> bool {
    if p.faces.len() != p.steps.len() + 1 {
        return false;
    }
    let mut count = vec![0; a.arc_count()];
    for (k, s) in p.steps.iter().enumerate() {
        let seg = a.segment(s.segment);
        let (from, to) = if s.to_left { (seg.right, seg.left) } else { (seg.left, seg.right) };
        if from != p.faces[k] || to != p.faces[k + 1] || from == to {
            return false;
        }
        count[s.segment.arc] += 1;
    }
    count.iter().all(|&c| c <= 1)
}

/// `(start, end)` step ranges where `p` and `q` run apart.
pub fn lens_ranges(p: &DualPath, q: &DualPath) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut k = 0;
    while k < p.steps.len() {
        if p.steps[k] == q.steps[k] {
            k += 1;
            continue;
        }
        let b = (k + 1..p.faces.len()).find(|&b| q.faces[k + 1..].contains(&p.faces[b]))?;
        if q.faces[b] != p.faces[b] {
            return None;
        }
        out.push((k, b));
        k = b;
    }
    Some(out)
}

/// Vertices inside the lens `start..end` of `p` and `q`: pairs of arcs whose
/// crossings with the lens boundary interleave around it.
pub fn interleaved_pairs(p: &DualPath, q: &DualPath, (start, end): (usize, usize)) -> BTreeSet<(usize, usize)> {
    let len = end - start;
    let mut pos = std::collections::BTreeMap::<usize, Vec<usize>>::new();
    for k in start..end {
        pos.entry(p.steps[k].segment.arc).or_default().push(k - start);
        // around the boundary: along p, then back along q
        pos.entry(q.steps[k].segment.arc).or_default().push(2 * len - 1 - (k - start));
    }
    let arcs: Vec<(usize, (usize, usize))> = pos
        .into_iter()
        .filter(|(_, v)| v.len() == 2)
        .map(|(a, v)| (a, (v[0].min(v[1]), v[0].max(v[1]))))
        .collect();
    let mut out = BTreeSet::new();
    for (i, &(a, (a0, a1))) in arcs.iter().enumerate() {
        for &(b, (b0, b1)) in &arcs[i + 1..] {
            let inside = |x: usize| a0 < x && x < a1;
            if inside(b0) != inside(b1) {
                out.insert((a.min(b), a.max(b)));
            }
        }
    }
    out
}

/// Total interleaved pairs over every lens.
pub fn interior_total(p: &DualPath, q: &DualPath) -> Option<usize> {
    Some(lens_ranges(p, q)?.into_iter().map(|r| interleaved_pairs(p, q, r).len()).sum())
}

/// The edges among a random vertex subset of size at least 4.
pub fn random_clique_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<EdgeId> {
    let size = rng.random_range(4..=n);
    let mut verts: Vec<usize> = (1..=n).collect();
    while verts.len() > size {
        let k = rng.random_range(0..verts.len());
        verts.remove(k);
    }
    edges(n).filter(|f| verts.contains(&f.lo().get()) && verts.contains(&f.hi().get())).collect()
}

/// A random nonempty edge subset.
pub fn random_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<EdgeId> {
    let mut picked: Vec<EdgeId> = edges(n).collect();
    let k = rng.random_range(1..=picked.len());
    picked.shuffle(rng);
    picked.truncate(k);
    picked.sort();
    picked
}

pub fn vertex(k: usize) -> VertexId {
    VertexId::new(k)
}
