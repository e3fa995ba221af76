//! Arrangements of arcs, dual paths, and sliding dual paths over vertices.
//!
//! An arrangement here is a plane map together with a set of designated arcs,
//! each an oriented chain of darts. Its faces are the map faces merged across
//! every non-designated dart. Arcs are cut into segments at arrangement
//! vertices, the points where two designated arcs meet; a dual path steps
//! from face to face across segments.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::ids::EdgeId;
use crate::map::{DartId, GoodDrawing, NodeId, PlaneMap};

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("arc {0} is not a chain of darts")]
    BrokenArc(usize),
    #[error("dart {0} lies on two arcs")]
    SharedDart(DartId),
    #[error("step {0} of the dual path does not join its neighbouring faces")]
    NotAdjacent(usize),
    #[error("dual path crosses arc {0} more than once")]
    RepeatedArc(usize),
    #[error("dual paths do not share both end faces")]
    NotCoterminal,
    #[error("subpaths between faces {0} and {1} have different lengths")]
    LensMismatch(usize, usize),
    #[error("closed curve crosses the arrangement inconsistently")]
    Inconsistent,
    #[error("the arcs of the arrangement do not form a connected graph")]
    Disconnected,
    #[error("terminals lie on both sides of the lens starting at step {0}")]
    TerminalsSeparated(usize),
    #[error("no vertex inside the lens starting at step {0} can be slid over")]
    NoSlide(usize),
    #[error("no dual path crossing each arc at most once joins faces {0} and {1}")]
    NoPath(usize, usize),
}

/// Segment `index` of arc `arc`, counted along the arc's orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegmentId {
    pub arc: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub id: SegmentId,
    /// Map darts along the arc's orientation.
    pub darts: Vec<DartId>,
    pub start: NodeId,
    pub end: NodeId,
    /// Face on the left of the arc along this segment.
    pub left: usize,
    pub right: usize,
}

/// One crossing of a dual path: the segment and whether the path passes
/// from the arc's right to its left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub segment: SegmentId,
    pub to_left: bool,
}

/// `faces[k]` and `faces[k + 1]` lie on either side of `steps[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualPath {
    pub faces: Vec<usize>,
    pub steps: Vec<Step>,
}

impl DualPath {
    pub fn trivial(face: usize) -> Self {
        DualPath { faces: vec![face], steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> usize {
        self.faces[0]
    }

    pub fn last(&self) -> usize {
        *self.faces.last().expect("dual path has a face")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub segment: SegmentId,
    pub left: usize,
    pub right: usize,
}

/// One vertex per face, one edge per segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub faces: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn is_connected(&self) -> bool {
        if self.faces == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.faces];
        for e in &self.edges {
            adj[e.left].push(e.right);
            adj[e.right].push(e.left);
        }
        let mut seen = vec![false; self.faces];
        let mut stack = vec![0];
        while let Some(f) = stack.pop() {
            if !core::mem::replace(&mut seen[f], true) {
                stack.extend(adj[f].iter().copied());
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// A sliding of a dual path over a vertex where two arcs cross: the faces
/// `(F0, F1, F2)` at steps `at..at + 2` become `(F0, F3, F2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SlideStep {
    pub vertex: NodeId,
    pub at: usize,
    pub before: [usize; 3],
    pub after: [usize; 3],
    /// Arcs crossed at `at` and `at + 1` before the slide; afterwards they
    /// are crossed in the other order.
    pub arcs: (usize, usize),
    /// Map dart at `vertex` with the corner the path went around on its left.
    pub corner: DartId,
}

/// Maximal subpaths of two dual paths with common end faces and nothing
/// else in common, as the step range `start..end` shared by both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lens {
    pub start: usize,
    pub end: usize,
    /// Arrangement vertices on the side without terminals.
    pub interior: Vec<NodeId>,
}

#[derive(Clone, Debug)]
pub struct Arrangement {
    map: PlaneMap,
    /// Per dart: global segment index, or `NONE` off the arrangement.
    seg_of: Vec<usize>,
    /// Per dart: runs along its arc's orientation.
    along: Vec<bool>,
    segments: Vec<Segment>,
    arc_segments: Vec<Vec<usize>>,
    arc_labels: Vec<Option<EdgeId>>,
    face_class: Vec<usize>,
    face_count: usize,
    terminal: Vec<bool>,
    vertex: Vec<bool>,
    /// Per face: `(segment, to_left, neighbour)` in boundary-walk order.
    adj: Vec<Vec<(usize, bool, usize)>>,
}

impl Arrangement {
    /// `arcs[a]` is the chain of darts of arc `a` in its orientation;
    /// `terminal[v]` marks nodes where arcs may end and that can never be
    /// slid over.
    pub fn new(map: PlaneMap, arcs: &[Vec<DartId>], terminal: Vec<bool>) -> Result<Self, DualError> {
        let m = map.dart_count();
        let nodes = map.node_count();
        let mut arc_of = vec![NONE; m];
        let mut along = vec![false; m];
        let mut touching = vec![0usize; nodes];
        for (a, chain) in arcs.iter().enumerate() {
            if chain.is_empty() || chain.windows(2).any(|w| map.target(w[0]) != map.origin(w[1])) {
                return Err(DualError::BrokenArc(a));
            }
            let mut seen = BTreeSet::new();
            for &d in chain {
                for x in [d, map.twin(d)] {
                    if arc_of[x] != NONE {
                        return Err(DualError::SharedDart(x));
                    }
                    arc_of[x] = a;
                }
                along[d] = true;
                seen.insert(map.origin(d));
                seen.insert(map.target(d));
            }
            for v in seen {
                touching[v] += 1;
            }
        }
        let vertex: Vec<bool> = (0..nodes).map(|v| !terminal[v] && touching[v] >= 2).collect();

        let mut seg_of = vec![NONE; m];
        let mut segments = Vec::new();
        let mut arc_segments = Vec::with_capacity(arcs.len());
        for (a, chain) in arcs.iter().enumerate() {
            let mut mine = Vec::new();
            let mut cur: Vec<DartId> = Vec::new();
            for (k, &d) in chain.iter().enumerate() {
                cur.push(d);
                let end = map.target(d);
                if k + 1 == chain.len() || vertex[end] || terminal[end] {
                    let id = SegmentId { arc: a, index: mine.len() };
                    let g = segments.len();
                    for &x in &cur {
                        seg_of[x] = g;
                        seg_of[map.twin(x)] = g;
                    }
                    segments.push(Segment {
                        id,
                        start: map.origin(cur[0]),
                        end,
                        darts: core::mem::take(&mut cur),
                        left: 0,
                        right: 0,
                    });
                    mine.push(g);
                }
            }
            arc_segments.push(mine);
        }

        // merge map faces across darts off the arrangement
        let nf = map.faces().len();
        let mut parent: Vec<usize> = (0..nf).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for d in 0..m {
            if seg_of[d] == NONE {
                let (a, b) = (find(&mut parent, map.face_of(d)), find(&mut parent, map.face_of(map.twin(d))));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut face_class = vec![NONE; nf];
        let mut face_count = 0;
        for f in 0..nf {
            let r = find(&mut parent, f);
            if face_class[r] == NONE {
                face_class[r] = face_count;
                face_count += 1;
            }
            face_class[f] = face_class[r];
        }
        for s in &mut segments {
            s.left = face_class[map.face_of(s.darts[0])];
            s.right = face_class[map.face_of(map.twin(s.darts[0]))];
        }

        let mut adj: Vec<Vec<(usize, bool, usize)>> = vec![Vec::new(); face_count];
        for (f, face) in map.faces().iter().enumerate() {
            let cls = face_class[f];
            for &d in &face.darts {
                let g = seg_of[d];
                if g == NONE {
                    continue;
                }
                // d has `cls` on its left; crossing it reaches its right
                let to_left = !along[d];
                let other = face_class[map.face_of(map.twin(d))];
                if !adj[cls].iter().any(|&(s, t, _)| s == g && t == to_left) {
                    adj[cls].push((g, to_left, other));
                }
            }
        }

        Ok(Arrangement {
            map,
            seg_of,
            along,
            segments,
            arc_segments,
            arc_labels: vec![None; arcs.len()],
            face_class,
            face_count,
            terminal,
            vertex,
            adj,
        })
    }

    /// The arrangement formed by the given edges of a drawing. Arc `k` is
    /// `designated[k]`, oriented from its smaller endpoint.
    pub fn from_drawing(d: &GoodDrawing, designated: &[EdgeId]) -> Result<Self, DualError> {
        let arcs: Vec<Vec<DartId>> = designated.iter().map(|&e| d.edge_path(e).to_vec()).collect();
        let terminal = (0..d.node_count()).map(|v| !d.is_crossing(v)).collect();
        let mut a = Arrangement::new(d.map().clone(), &arcs, terminal)?;
        a.arc_labels = designated.iter().map(|&e| Some(e)).collect();
        Ok(a)
    }

    pub fn map(&self) -> &PlaneMap {
        &self.map
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    /// The arrangement face containing the map face left of `d`.
    pub fn face_left_of(&self, d: DartId) -> usize {
        self.face_class[self.map.face_of(d)]
    }

    /// Arrangement face of a map face.
    pub fn face_of_map_face(&self, f: usize) -> usize {
        self.face_class[f]
    }

    pub fn arc_count(&self) -> usize {
        self.arc_segments.len()
    }

    pub fn arc_label(&self, arc: usize) -> Option<EdgeId> {
        self.arc_labels[arc]
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    fn index(&self, id: SegmentId) -> usize {
        self.arc_segments[id.arc][id.index]
    }

    pub fn segment(&self, id: SegmentId) -> &Segment {
        &self.segments[self.index(id)]
    }

    /// The segment a designated dart lies on.
    pub fn segment_of_dart(&self, d: DartId) -> Option<SegmentId> {
        let g = self.seg_of[d];
        (g != NONE).then(|| self.segments[g].id)
    }

    pub fn dart_along_arc(&self, d: DartId) -> bool {
        self.along[d]
    }

    pub fn is_vertex(&self, v: NodeId) -> bool {
        self.vertex[v]
    }

    pub fn is_terminal(&self, v: NodeId) -> bool {
        self.terminal[v]
    }

    /// Faces on the right and left of a step, in crossing order.
    pub fn step_faces(&self, s: Step) -> (usize, usize) {
        let seg = self.segment(s.segment);
        if s.to_left {
            (seg.right, seg.left)
        } else {
            (seg.left, seg.right)
        }
    }

    pub fn dual_graph(&self) -> DualGraph {
        DualGraph {
            faces: self.face_count,
            edges: self
                .segments
                .iter()
                .map(|s| DualEdge { segment: s.id, left: s.left, right: s.right })
                .collect(),
        }
    }

    /// Builds a dual path from its steps, starting in face `start`.
    pub fn path_from_steps(&self, start: usize, steps: Vec<Step>) -> Result<DualPath, DualError> {
        let mut faces = vec![start];
        for (k, &s) in steps.iter().enumerate() {
            let (from, to) = self.step_faces(s);
            if from != faces[k] {
                return Err(DualError::NotAdjacent(k));
            }
            faces.push(to);
        }
        Ok(DualPath { faces, steps })
    }

    /// Number of times `p` crosses each arc.
    pub fn arc_crossings(&self, p: &DualPath) -> Vec<usize> {
        let mut c = vec![0; self.arc_count()];
        for s in &p.steps {
            c[s.segment.arc] += 1;
        }
        c
    }

    /// Adjacency of consecutive faces and at most one crossing per arc.
    pub fn check_path(&self, p: &DualPath) -> Result<(), DualError> {
        if p.faces.len() != p.steps.len() + 1 {
            return Err(DualError::NotAdjacent(p.steps.len()));
        }
        for (k, &s) in p.steps.iter().enumerate() {
            if self.step_faces(s) != (p.faces[k], p.faces[k + 1]) {
                return Err(DualError::NotAdjacent(k));
            }
        }
        match self.arc_crossings(p).iter().position(|&c| c > 1) {
            Some(a) => Err(DualError::RepeatedArc(a)),
            None => Ok(()),
        }
    }

    fn reachable(&self, from: usize, to: usize, blocked: &[bool]) -> bool {
        let mut seen = vec![false; self.face_count];
        let mut stack = vec![from];
        while let Some(f) = stack.pop() {
            if f == to {
                return true;
            }
            if core::mem::replace(&mut seen[f], true) {
                continue;
            }
            for &(g, _, h) in &self.adj[f] {
                if !blocked[self.segments[g].id.arc] && !seen[h] {
                    stack.push(h);
                }
            }
        }
        false
    }

    /// A dual path from `fa` to `fb` crossing each arc at most once.
    ///
    /// Follows the inductive construction: from the current face, cross an
    /// incident arc that separates it from `fb` in the region left by the
    /// arcs already crossed, taking the first such arc in boundary-walk
    /// order. If no incident arc separates, which can happen when arcs have
    /// free ends, the remaining incident arcs are tried in the same order
    /// with backtracking.
    pub fn find_dual_path(&self, fa: usize, fb: usize) -> Result<DualPath, DualError> {
        let mut blocked = vec![false; self.arc_count()];
        let mut path = DualPath::trivial(fa);
        let mut dead = BTreeSet::new();
        if self.search(fb, &mut blocked, &mut path, &mut dead) {
            Ok(path)
        } else {
            Err(DualError::NoPath(fa, fb))
        }
    }

    fn search(
        &self,
        fb: usize,
        blocked: &mut Vec<bool>,
        path: &mut DualPath,
        dead: &mut BTreeSet<(usize, Vec<bool>)>,
    ) -> bool {
        let cur = path.last();
        if cur == fb {
            return true;
        }
        if dead.contains(&(cur, blocked.clone())) || !self.reachable(cur, fb, blocked) {
            return false;
        }
        let mut separating = Vec::new();
        let mut others = Vec::new();
        for &(g, to_left, next) in &self.adj[cur] {
            let arc = self.segments[g].id.arc;
            if blocked[arc] || next == cur {
                continue;
            }
            blocked[arc] = true;
            let sep = !self.reachable(cur, fb, blocked);
            let viable = self.reachable(next, fb, blocked);
            blocked[arc] = false;
            if viable {
                if sep { &mut separating } else { &mut others }.push((g, to_left, next));
            }
        }
        for (g, to_left, next) in separating.into_iter().chain(others) {
            let arc = self.segments[g].id.arc;
            blocked[arc] = true;
            path.steps.push(Step { segment: self.segments[g].id, to_left });
            path.faces.push(next);
            if self.search(fb, blocked, path, dead) {
                return true;
            }
            path.steps.pop();
            path.faces.pop();
            blocked[arc] = false;
        }
        dead.insert((cur, blocked.clone()));
        false
    }

    /// Splits two co-terminal paths into lenses where they differ.
    pub fn lenses(&self, p: &DualPath, q: &DualPath, exempt: &[NodeId]) -> Result<Vec<Lens>, DualError> {
        if p.first() != q.first() || p.last() != q.last() {
            return Err(DualError::NotCoterminal);
        }
        let mut out = Vec::new();
        let mut k = 0;
        while k < p.len().min(q.len()) {
            if p.steps[k] == q.steps[k] {
                k += 1;
                continue;
            }
            let a = k;
            let end = (a + 1..p.faces.len())
                .find_map(|b| (a + 1..q.faces.len()).find(|&c| q.faces[c] == p.faces[b]).map(|c| (b, c)));
            let (b, c) = end.ok_or(DualError::NotCoterminal)?;
            if b != c {
                return Err(DualError::LensMismatch(a, b));
            }
            let interior = self.interior(&p.steps[a..b], &q.steps[a..b], exempt, a)?;
            out.push(Lens { start: a, end: b, interior });
            k = b;
        }
        if p.len() != q.len() {
            return Err(DualError::LensMismatch(k, p.len().max(q.len())));
        }
        Ok(out)
    }

    /// Side of each arc node relative to the closed curve crossing the given
    /// steps: `Some(true)` on the side holding no non-exempt terminal.
    pub fn sides(&self, p1: &[Step], q1: &[Step], exempt: &[NodeId], at: usize) -> Result<Vec<Option<bool>>, DualError> {
        let nodes = self.map.node_count();
        let mut parity = vec![false; self.segments.len()];
        for s in p1.iter().chain(q1) {
            let g = self.index(s.segment);
            parity[g] = !parity[g];
        }
        let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); nodes];
        for (g, s) in self.segments.iter().enumerate() {
            adj[s.start].push((s.end, parity[g]));
            adj[s.end].push((s.start, parity[g]));
        }
        let mut color: Vec<Option<bool>> = vec![None; nodes];
        let mut roots = 0;
        for root in 0..nodes {
            if adj[root].is_empty() || color[root].is_some() {
                continue;
            }
            roots += 1;
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].expect("queued nodes are coloured");
                for &(w, flip) in &adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(cv ^ flip);
                            queue.push_back(w);
                        }
                        Some(cw) if cw != cv ^ flip => return Err(DualError::Inconsistent),
                        Some(_) => {}
                    }
                }
            }
        }
        if roots > 1 {
            return Err(DualError::Disconnected);
        }
        let mut terminal_colors = (0..nodes)
            .filter(|&v| self.terminal[v] && !exempt.contains(&v))
            .filter_map(|v| color[v]);
        let outside = terminal_colors.next().ok_or(DualError::Disconnected)?;
        if terminal_colors.any(|c| c != outside) {
            return Err(DualError::TerminalsSeparated(at));
        }
        Ok(color.into_iter().map(|c| c.map(|c| c != outside)).collect())
    }

    fn interior(&self, p1: &[Step], q1: &[Step], exempt: &[NodeId], at: usize) -> Result<Vec<NodeId>, DualError> {
        let sides = self.sides(p1, q1, exempt, at)?;
        Ok((0..sides.len()).filter(|&v| self.vertex[v] && sides[v] == Some(true)).collect())
    }

    fn dart_at(&self, g: usize, v: NodeId) -> DartId {
        let s = &self.segments[g];
        if s.start == v {
            s.darts[0]
        } else {
            self.map.twin(*s.darts.last().expect("segment has darts"))
        }
    }

    /// The slide over the vertex shared by steps `k` and `k + 1`, if those
    /// two crossings go around one corner of a crossing of two arcs.
    pub fn slide_at(&self, p: &DualPath, k: usize) -> Option<(SlideStep, DualPath)> {
        if k + 1 >= p.steps.len() {
            return None;
        }
        let (ga, gb) = (self.index(p.steps[k].segment), self.index(p.steps[k + 1].segment));
        let (sa, sb) = (&self.segments[ga], &self.segments[gb]);
        if sa.id.arc == sb.id.arc {
            return None;
        }
        let w = [sa.start, sa.end]
            .into_iter()
            .find(|&v| (v == sb.start || v == sb.end) && self.vertex[v] && self.map.degree(v) == 4)?;
        let (x, y) = (self.dart_at(ga, w), self.dart_at(gb, w));
        let corner = if self.map.next(x) == y {
            x
        } else if self.map.next(y) == x {
            y
        } else {
            return None;
        };
        if self.face_left_of(corner) != p.faces[k + 1] {
            return None;
        }
        let (ox, oy) = (self.map.opposite(x), self.map.opposite(y));
        let mid = self.face_left_of(self.map.opposite(corner));
        let s1 = Step { segment: self.segments[self.seg_of[oy]].id, to_left: p.steps[k + 1].to_left };
        let s2 = Step { segment: self.segments[self.seg_of[ox]].id, to_left: p.steps[k].to_left };
        if self.step_faces(s1) != (p.faces[k], mid) || self.step_faces(s2) != (mid, p.faces[k + 2]) {
            return None;
        }
        let mut next = p.clone();
        next.steps[k] = s1;
        next.steps[k + 1] = s2;
        next.faces[k + 1] = mid;
        let step = SlideStep {
            vertex: w,
            at: k,
            before: [p.faces[k], p.faces[k + 1], p.faces[k + 2]],
            after: [p.faces[k], mid, p.faces[k + 2]],
            arcs: (sa.id.arc, sb.id.arc),
            corner,
        };
        Some((step, next))
    }

    /// Slides `p` onto `q` inside one lens, always over the interior vertex
    /// nearest the start of `p`. Each slide moves that vertex from inside the
    /// lens to outside, and the interior shrinks by exactly one vertex.
    pub fn lens_slides(&self, p: &DualPath, q: &DualPath, lens: &Lens, exempt: &[NodeId]) -> Result<(Vec<SlideStep>, DualPath), DualError> {
        let (a, b) = (lens.start, lens.end);
        let mut cur = p.clone();
        let mut interior = lens.interior.clone();
        let mut out = Vec::new();
        while cur.steps[a..b] != q.steps[a..b] {
            if interior.is_empty() {
                return Err(DualError::NoSlide(a));
            }
            let (step, next) = (a..b.saturating_sub(1))
                .filter_map(|k| self.slide_at(&cur, k))
                .find(|(s, _)| interior.contains(&s.vertex))
                .ok_or(DualError::NoSlide(a))?;
            let now = self.interior(&next.steps[a..b], &q.steps[a..b], exempt, a)?;
            if now.len() + 1 != interior.len() || now.contains(&step.vertex) {
                return Err(DualError::Inconsistent);
            }
            interior = now;
            cur = next;
            out.push(step);
        }
        if !interior.is_empty() {
            return Err(DualError::Inconsistent);
        }
        Ok((out, cur))
    }

    /// Slides turning `p` into `q`, lens by lens from the start of `p`.
    pub fn sliding_sequence(&self, p: &DualPath, q: &DualPath) -> Result<Vec<SlideStep>, DualError> {
        self.check_path(p)?;
        self.check_path(q)?;
        let lenses = self.lenses(p, q, &[])?;
        let mut cur = p.clone();
        let mut out = Vec::new();
        for lens in &lenses {
            let (steps, next) = self.lens_slides(&cur, q, lens, &[])?;
            out.extend(steps);
            cur = next;
        }
        debug_assert_eq!(&cur, q);
        Ok(out)
    }

    /// Replays slides on `p`.
    pub fn apply_slides(&self, p: &DualPath, steps: &[SlideStep]) -> Option<DualPath> {
        let mut cur = p.clone();
        for s in steps {
            let (done, next) = self.slide_at(&cur, s.at)?;
            if done != *s {
                return None;
            }
            cur = next;
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::convex_drawing;

    /// Pseudolines through a common terminal node 0, given by the order in
    /// which they cross. Only two-line cases are built by hand here.
    fn single_arc() -> Arrangement {
        // one loop at the terminal
        let map = PlaneMap::new(vec![1, 0], &[vec![0, 1]]).unwrap();
        Arrangement::new(map, &[vec![0]], vec![true]).unwrap()
    }

    fn two_crossing_arcs() -> Arrangement {
        // node 0 terminal, node 1 the crossing; arc a = 0, 2; arc b = 4, 6
        let twin = vec![1, 0, 3, 2, 5, 4, 7, 6];
        // seen from the terminal the ends run clockwise
        let rotations = vec![vec![0, 7, 3, 4], vec![2, 6, 1, 5]];
        let map = PlaneMap::new(twin, &rotations).unwrap();
        Arrangement::new(map, &[vec![0, 2], vec![4, 6]], vec![true, false]).unwrap()
    }

    #[test]
    fn small_arrangements() {
        let a = single_arc();
        assert_eq!(a.face_count(), 2);
        assert_eq!(a.dual_graph().edges.len(), 1);

        let b = two_crossing_arcs();
        assert_eq!(b.map().euler_characteristic(), 2);
        assert_eq!(b.face_count(), 4);
        let g = b.dual_graph();
        assert_eq!(g.edges.len(), 4);
        assert!(g.is_connected());
        let f0 = 0;
        let far = (0..4).find(|&f| !g.edges.iter().any(|e| (e.left == f0 && e.right == f) || (e.right == f0 && e.left == f)) && f != f0).unwrap();
        let p = b.find_dual_path(f0, far).unwrap();
        assert_eq!(p.len(), 2);
        b.check_path(&p).unwrap();
        assert_eq!(b.find_dual_path(f0, f0).unwrap().len(), 0);
    }

    #[test]
    fn single_slide_in_two_crossing_arcs() {
        let b = two_crossing_arcs();
        let g = b.dual_graph();
        let f0 = 0;
        let far = (1..4).find(|&f| !g.edges.iter().any(|e| (e.left == f0 && e.right == f) || (e.right == f0 && e.left == f))).unwrap();
        let p = b.find_dual_path(f0, far).unwrap();
        let (step, q) = (0..1).find_map(|k| b.slide_at(&p, k)).unwrap();
        assert_eq!(step.vertex, 1);
        let slides = b.sliding_sequence(&p, &q).unwrap();
        assert_eq!(slides.len(), 1);
        assert_eq!(b.apply_slides(&p, &slides).unwrap(), q);
        assert!(b.sliding_sequence(&p, &p).unwrap().is_empty());
    }

    #[test]
    fn convex_k4_dual_graph_matches_faces() {
        let d = convex_drawing(4).unwrap();
        let all: Vec<EdgeId> = crate::ids::edges(4).collect();
        let a = Arrangement::from_drawing(&d, &all).unwrap();
        let g = a.dual_graph();
        assert_eq!(g.faces, d.faces().len());
        assert_eq!(g.edges.len(), d.map().dart_count() / 2);
        assert!(g.is_connected());
    }
}
