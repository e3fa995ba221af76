//! Turning one good drawing into another with the same rotation scheme by
//! Reidemeister III moves.
//!
//! The drawings are matched vertex by vertex. Once they agree on `K_{i-1}`,
//! the edges `v_i v_1, ..., v_i v_{i-1}` are fixed in turn. Each such edge is
//! a dual path in the arrangement of `K_{i-1}`, and so is its counterpart in
//! the target. Where the two paths differ they bound lenses; the path is slid
//! across the vertices inside a lens one at a time. Each slide is a move of
//! the edge across a crossing of two `K_{i-1}` edges, carried out after the
//! triangle it sweeps has been emptied of all other edges.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::dual::{Arrangement, DualError, DualPath, Lens, SegmentId, SlideStep, Step};
use crate::ids::{edges, EdgeId, VertexId};
use crate::map::{from_crossing_data, CrossingData, DartId, GoodDrawing, MapError, NodeId, NodeKind};
use crate::moves::{apply_move, triangle_of, Move, MoveError};

/// Emptying or slide loops give up after this many rounds.
const ROUND_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("drawings have {0} and {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("drawings have different rotation schemes")]
    SchemeMismatch,
    #[error("drawings differ on K_4")]
    K4Mismatch,
    #[error("edge v{i}v{j} starts in different faces of K_{k}", k = .i - 1)]
    StartFace { i: usize, j: usize },
    #[error("a lens of edge v{i}v{j} separates two vertices of K_{k}", k = .i - 1)]
    SeparatedVertices { i: usize, j: usize },
    #[error("vertex {vertex} lies inside the triangle of {}{}{}", .triple[0], .triple[1], .triple[2])]
    VertexInTriangle { triple: [EdgeId; 3], vertex: VertexId },
    #[error("fixed edge {edge} enters the triangle of {}{}{}", .triple[0], .triple[1], .triple[2])]
    FixedEdgeInTriangle { triple: [EdgeId; 3], edge: EdgeId },
    #[error("{}{}{} do not bound a triangle free of their ends", .0[0], .0[1], .0[2])]
    NotATriangle([EdgeId; 3]),
    #[error("emptying the triangle of {}{}{} made no progress", .0[0], .0[1], .0[2])]
    Stuck([EdgeId; 3]),
    #[error("after sliding, edge v{i}v{j} does not follow the expected dual path")]
    SlideMismatch { i: usize, j: usize },
    #[error("after fixing edge v{i}v{j}, the drawings disagree on the fixed edges")]
    Prefix { i: usize, j: usize },
    #[error("the final drawing differs from the target")]
    NotEquivalent,
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Dual(#[from] DualError),
}

/// Same vertex count and the same crossing order along every edge. For
/// valid drawings this is the same as having isomorphic planarizations with
/// matching labels.
pub fn drawings_equivalent(a: &GoodDrawing, b: &GoodDrawing) -> bool {
    match (a.crossing_data_of(), b.crossing_data_of()) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

/// Work done for one edge `v_i v_j`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeStage {
    pub i: usize,
    pub j: usize,
    pub lenses: usize,
    pub slides: usize,
    pub moves: usize,
}

#[derive(Clone, Debug, Default)]
pub struct TransformReport {
    pub moves: Vec<Move>,
    pub stages: Vec<EdgeStage>,
    /// Moves spent clearing triangles before a slide.
    pub clearing_moves: usize,
    pub slides: usize,
    /// Triangles checked to contain no vertex and no fixed edge.
    pub triangle_checks: usize,
    /// Lenses checked to have every other vertex of `K_{i-1}` on one side.
    pub lens_checks: usize,
    /// Lengths of the target routes lifted into the current drawing.
    pub lifted: Vec<usize>,
}

/// A target route of `v_i v_j` traced through the faces of the full current
/// drawing: same crossings with `K_{i-1}` in the same order and on the same
/// segments, shortest possible in between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedRoute {
    /// Map faces of the current drawing.
    pub faces: Vec<usize>,
    /// The darts crossed, each with the next face on its left.
    pub darts: Vec<DartId>,
}

/// Moves taking `d1` to a drawing equivalent to `d2`.
pub fn gioan_transform(d1: &GoodDrawing, d2: &GoodDrawing) -> Result<Vec<Move>, TransformError> {
    Ok(transform_with_report(d1, d2)?.moves)
}

fn is_small(e: EdgeId, m: usize) -> bool {
    e.hi().get() <= m
}

fn other_edge(d: &GoodDrawing, x: NodeId, e: EdgeId) -> EdgeId {
    match d.node_kind(x) {
        NodeKind::Crossing(a, b) => {
            if a == e {
                b
            } else {
                a
            }
        }
        NodeKind::Vertex(_) => unreachable!("interior path nodes are crossings"),
    }
}

fn dart_at(d: &GoodDrawing, node: NodeId, e: EdgeId, forward: bool) -> Option<DartId> {
    d.map().rotation(node).into_iter().find(|&x| d.dart_edge(x) == e && d.dart_forward(x) == forward)
}

/// The arrangement of `K_{i-1}` shared by both drawings at stage `i`.
struct Stage {
    i: usize,
    small: GoodDrawing,
    arr: Arrangement,
}

impl Stage {
    fn new(data: &CrossingData, i: usize) -> Result<Self, TransformError> {
        let small = from_crossing_data(&data.restrict(i - 1))?;
        let all: Vec<EdgeId> = edges(i - 1).collect();
        let arr = Arrangement::from_drawing(&small, &all)?;
        Ok(Stage { i, small, arr })
    }

    /// Face of `K_{i-1}` where `v_i v_j` reaches `v_j`: left of the dart
    /// from `v_j` to the neighbour preceding `v_i` in the rotation at `v_j`.
    fn end_face(&self, d: &GoodDrawing, j: usize) -> Result<usize, TransformError> {
        let s = d.rotation_scheme_of()?;
        let among: Vec<VertexId> = (1..=self.i).map(VertexId::new).collect();
        let vj = VertexId::new(j);
        let order = s.induced(vj, &among);
        let at = order.iter().position(|&w| w.get() == self.i).expect("v_i is a neighbour");
        let a = order[(at + order.len() - 1) % order.len()];
        let e = EdgeId::new(vj, a);
        let path = self.small.edge_path(e);
        let dart = if e.lo() == vj { path[0] } else { self.small.map().twin(*path.last().expect("edge has darts")) };
        Ok(self.arr.face_left_of(dart))
    }

    /// `v_i v_j` in `d` as a dual path of `K_{i-1}`, from `v_i` to `v_j`.
    fn route(&self, d: &GoodDrawing, j: usize) -> Result<DualPath, TransformError> {
        let m = self.i - 1;
        let e = EdgeId::from_labels(j, self.i);
        let path = d.edge_path(e);
        let mut steps = Vec::new();
        // forward darts run from v_j, so walk them backwards
        for &fd in path[..path.len() - 1].iter().rev() {
            let x = d.map().target(fd);
            let sigma = other_edge(d, x, e);
            if !is_small(sigma, m) {
                continue;
            }
            let index = d
                .edge_nodes(sigma)
                .into_iter()
                .take_while(|&y| y != x)
                .filter(|&y| d.is_crossing(y) && is_small(other_edge(d, y, sigma), m))
                .count();
            let toward_j = d.map().twin(fd);
            let fwd = dart_at(d, x, sigma, true).expect("crossing has both edges");
            let to_left = d.map().next(fwd) == toward_j;
            steps.push(Step { segment: SegmentId { arc: sigma.index(m), index }, to_left });
        }
        let end = self.end_face(d, j)?;
        let start = match steps.first() {
            Some(&s) => self.arr.step_faces(s).0,
            None => end,
        };
        let p = self.arr.path_from_steps(start, steps).map_err(|_| TransformError::SlideMismatch { i: self.i, j })?;
        if p.last() != end {
            return Err(TransformError::SlideMismatch { i: self.i, j });
        }
        Ok(p)
    }
}

/// The lens to work on: fewest vertices inside, then nearest `v_j`.
fn pick(lenses: &[Lens]) -> &Lens {
    lenses
        .iter()
        .min_by(|a, b| a.interior.len().cmp(&b.interior.len()).then(b.start.cmp(&a.start)))
        .expect("at least one lens")
}

/// Flips triangles inside the pre-Reidemeister triangle of `triple` until
/// it is a single face. Edges for which `fixed` holds must stay out of the
/// way: meeting one inside the triangle is an error.
///
/// Any other edge entering the triangle cuts off one of its corners. The
/// smallest such corner is emptied first, recursively, and then flipped,
/// which takes that edge out of the triangle for good.
pub fn empty_triangle(d: &GoodDrawing, triple: [EdgeId; 3], fixed: &dyn Fn(EdgeId) -> bool) -> Result<(GoodDrawing, Vec<Move>), TransformError> {
    let mut cur = d.clone();
    let mut moves = Vec::new();
    let mut rounds = 0;
    clear(&mut cur, triple, fixed, &mut moves, &mut rounds)?;
    Ok((cur, moves))
}

fn clear(cur: &mut GoodDrawing, triple: [EdgeId; 3], fixed: &dyn Fn(EdgeId) -> bool, moves: &mut Vec<Move>, rounds: &mut usize) -> Result<(), TransformError> {
    loop {
        *rounds += 1;
        if *rounds > ROUND_CAP {
            return Err(TransformError::Stuck(triple));
        }
        let t = triangle_of(cur, triple).ok_or(TransformError::NotATriangle(triple))?;
        if t.ready {
            return Ok(());
        }
        let map = cur.map();
        let region = map.region_left_of(&t.boundary);
        if let Some(v) = map.nodes_inside(&region).into_iter().find(|&v| !cur.is_crossing(v)) {
            return Err(TransformError::VertexInTriangle { triple: t.edges, vertex: VertexId::new(v + 1) });
        }
        let mut inside = BTreeSet::new();
        for (f, _) in region.iter().enumerate().filter(|(_, &r)| r) {
            for &x in &map.faces()[f].darts {
                let e = cur.dart_edge(x);
                if !t.edges.contains(&e) {
                    inside.insert(e);
                }
            }
        }
        if let Some(&edge) = inside.iter().find(|&&e| fixed(e)) {
            return Err(TransformError::FixedEdgeInTriangle { triple: t.edges, edge });
        }
        let on_boundary: BTreeSet<NodeId> = t.boundary.iter().map(|&x| map.origin(x)).collect();
        let mut best: Option<(usize, [EdgeId; 3])> = None;
        for &g in &inside {
            let sides: Vec<EdgeId> = t
                .edges
                .iter()
                .copied()
                .filter(|&s| cur.crossing_node(g, s).is_some_and(|x| on_boundary.contains(&x)))
                .collect();
            if sides.len() != 2 {
                return Err(TransformError::Stuck(triple));
            }
            let sub = [g, sides[0], sides[1]];
            let st = triangle_of(cur, sub).ok_or(TransformError::NotATriangle(sub))?;
            let size = map.region_left_of(&st.boundary).iter().filter(|&&r| r).count();
            if best.is_none_or(|(b, _)| size < b) {
                best = Some((size, sub));
            }
        }
        let (_, sub) = best.ok_or(TransformError::Stuck(triple))?;
        clear(cur, sub, fixed, moves, rounds)?;
        let st = triangle_of(cur, sub).ok_or(TransformError::NotATriangle(sub))?;
        let m = st.to_move();
        *cur = apply_move(cur, m)?;
        moves.push(m);
    }
}

/// Lifts a target route into the current drawing.
pub fn lift_route(d: &GoodDrawing, i: usize, j: usize, target: &GoodDrawing) -> Result<LiftedRoute, TransformError> {
    let data = d.crossing_data_of()?;
    let stage = Stage::new(&data, i)?;
    let q = stage.route(target, j)?;
    lift(d, &stage, j, &q)
}

fn lift(d: &GoodDrawing, stage: &Stage, j: usize, q: &DualPath) -> Result<LiftedRoute, TransformError> {
    let m = stage.i - 1;
    let map = d.map();
    let e = EdgeId::from_labels(j, stage.i);
    let path = d.edge_path(e);
    // start beside v_i, finish beside v_j
    let start = map.face_of(map.twin(*path.last().expect("edge has darts")));
    let goal = map.face_of(path[0]);
    // segment of every K_{i-1} dart, with its side flag
    let mut seg = vec![None; map.dart_count()];
    for sigma in edges(m) {
        let mut index = 0;
        for &x in d.edge_path(sigma) {
            seg[x] = Some((sigma.index(m), index, true));
            seg[map.twin(x)] = Some((sigma.index(m), index, false));
            let y = map.target(x);
            if d.is_crossing(y) && is_small(other_edge(d, y, sigma), m) {
                index += 1;
            }
        }
    }
    // 0-1 BFS over (face, steps done); every crossing costs one
    let nf = map.faces().len();
    let layers = q.steps.len() + 1;
    let mut dist = vec![usize::MAX; nf * layers];
    let mut back: Vec<Option<(usize, DartId)>> = vec![None; nf * layers];
    let mut queue = VecDeque::new();
    dist[start] = 0;
    queue.push_back(start);
    while let Some(s) = queue.pop_front() {
        let (f, t) = (s % nf, s / nf);
        for &x in &map.faces()[f].darts {
            let g = map.face_of(map.twin(x));
            let next = match seg[x] {
                None => Some(t * nf + g),
                Some((arc, index, along)) => q.steps.get(t).and_then(|st| {
                    // crossing x from its left: right-to-left along the arc iff x runs backwards
                    let ok = st.segment.arc == arc && st.segment.index == index && st.to_left == !along;
                    ok.then(|| (t + 1) * nf + g)
                }),
            };
            if let Some(ns) = next {
                if dist[s] + 1 < dist[ns] {
                    dist[ns] = dist[s] + 1;
                    back[ns] = Some((s, map.twin(x)));
                    queue.push_back(ns);
                }
            }
        }
    }
    let end = (layers - 1) * nf + goal;
    if dist[end] == usize::MAX {
        return Err(TransformError::SlideMismatch { i: stage.i, j });
    }
    let mut faces = vec![goal];
    let mut darts = Vec::new();
    let mut s = end;
    while let Some((p, x)) = back[s] {
        faces.push(p % nf);
        darts.push(x);
        s = p;
    }
    faces.reverse();
    darts.reverse();
    Ok(LiftedRoute { faces, darts })
}

/// Carries out one slide of `v_i v_j` in the full drawing: clears the
/// triangle it sweeps, then flips it.
fn perform_slide(
    cur: &mut GoodDrawing,
    stage: &Stage,
    j: usize,
    slide: &SlideStep,
    report: &mut TransformReport,
) -> Result<usize, TransformError> {
    let i = stage.i;
    let m = i - 1;
    let e = EdgeId::from_labels(j, i);
    let small = &stage.small;
    let f = stage.arr.arc_label(slide.arcs.0).expect("arcs are edges");
    let g = stage.arr.arc_label(slide.arcs.1).expect("arcs are edges");
    let triple = [e, f, g];
    let fixed = |x: EdgeId| is_small(x, m) || (x.hi().get() == i && x.lo().get() < j);

    // the corner of the crossing of f and g that the route went around
    let w = cur.crossing_node(f, g).ok_or(TransformError::NotATriangle(triple))?;
    let corner = dart_at(cur, w, small.dart_edge(slide.corner), small.dart_forward(slide.corner))
        .ok_or(TransformError::NotATriangle(triple))?;
    let (xef, xeg) = (
        cur.crossing_node(e, f).ok_or(TransformError::NotATriangle(triple))?,
        cur.crossing_node(e, g).ok_or(TransformError::NotATriangle(triple))?,
    );
    let map = cur.map();
    let mut walk = cur.edge_darts_between(e, xef, xeg);
    walk.extend(cur.edge_darts_between(g, xeg, w));
    walk.extend(cur.edge_darts_between(f, w, xef));
    let mut region = map.region_left_of(&walk);
    if !region[map.face_of(corner)] {
        let rev: Vec<DartId> = walk.iter().rev().map(|&x| map.twin(x)).collect();
        region = map.region_left_of(&rev);
    }
    report.triangle_checks += 1;
    if let Some(v) = map.nodes_inside(&region).into_iter().find(|&v| !cur.is_crossing(v)) {
        return Err(TransformError::VertexInTriangle { triple, vertex: VertexId::new(v + 1) });
    }
    for (face, _) in region.iter().enumerate().filter(|(_, &r)| r) {
        for &x in &map.faces()[face].darts {
            let edge = cur.dart_edge(x);
            if !triple.contains(&edge) && fixed(edge) {
                return Err(TransformError::FixedEdgeInTriangle { triple, edge });
            }
        }
    }
    let t = triangle_of(cur, triple).ok_or(TransformError::NotATriangle(triple))?;
    if map.region_left_of(&t.boundary) != region {
        return Err(TransformError::NotATriangle(triple));
    }

    let (cleared, moves) = empty_triangle(cur, triple, &fixed)?;
    *cur = cleared;
    let count = moves.len();
    report.clearing_moves += count;
    report.moves.extend(moves);
    let t = triangle_of(cur, triple).ok_or(TransformError::NotATriangle(triple))?;
    let mv = t.to_move();
    *cur = apply_move(cur, mv)?;
    report.moves.push(mv);
    report.slides += 1;
    Ok(count + 1)
}

/// [`gioan_transform`] with counts of the work done and the checks passed.
pub fn transform_with_report(d1: &GoodDrawing, d2: &GoodDrawing) -> Result<TransformReport, TransformError> {
    if d1.n() != d2.n() {
        return Err(TransformError::SizeMismatch(d1.n(), d2.n()));
    }
    let n = d1.n();
    let target = d2.crossing_data_of()?;
    if d1.rotation_scheme_of()? != *target.scheme() {
        return Err(TransformError::SchemeMismatch);
    }
    let mut cur = d1.clone();
    let mut report = TransformReport::default();
    if n >= 4 && !cur.crossing_data_of()?.agree_on(&target, &|e| is_small(e, 4)) {
        return Err(TransformError::K4Mismatch);
    }
    for i in 5..=n {
        let stage = Stage::new(&target, i)?;
        for j in 1..i {
            let mut info = EdgeStage { i, j, ..EdgeStage::default() };
            let q = stage.route(d2, j)?;
            if !q.is_empty() {
                report.lifted.push(lift(&cur, &stage, j, &q)?.darts.len());
            }
            let vj = [j - 1];
            for _ in 0..ROUND_CAP {
                let p = stage.route(&cur, j)?;
                if p.steps == q.steps {
                    break;
                }
                if p.first() != q.first() {
                    return Err(TransformError::StartFace { i, j });
                }
                let lenses = stage.arr.lenses(&p, &q, &vj).map_err(|err| match err {
                    DualError::TerminalsSeparated(_) => TransformError::SeparatedVertices { i, j },
                    other => other.into(),
                })?;
                report.lens_checks += lenses.len();
                info.lenses += 1;
                let lens = pick(&lenses);
                let (slides, _) = stage.arr.lens_slides(&p, &q, lens, &vj)?;
                let mut expected = p;
                for s in &slides {
                    info.moves += perform_slide(&mut cur, &stage, j, s, &mut report)?;
                    info.slides += 1;
                    expected = stage.arr.slide_at(&expected, s.at).ok_or(TransformError::SlideMismatch { i, j })?.1;
                    if stage.route(&cur, j)? != expected {
                        return Err(TransformError::SlideMismatch { i, j });
                    }
                }
            }
            let keep = |e: EdgeId| is_small(e, i - 1) || (e.hi().get() == i && e.lo().get() <= j);
            if !cur.crossing_data_of()?.agree_on(&target, &keep) {
                return Err(TransformError::Prefix { i, j });
            }
            report.stages.push(info);
        }
    }
    if cur.crossing_data_of()? != target {
        return Err(TransformError::NotEquivalent);
    }
    Ok(report)
}
