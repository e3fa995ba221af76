//! JSON file formats: drawings, rotation schemes and move sequences.
//!
//! Writers are deterministic: vertices ascending, edges lexicographic, each
//! local rotation starting at its smallest entry, two-space indentation and a
//! trailing newline.

use anyhow::{bail, ensure, Context, Result};
use rotdraw_core::ids::edges;
use rotdraw_core::map::from_crossing_data;
use rotdraw_core::{CrossingData, EdgeId, Flip, GoodDrawing, Move, RotationScheme, VertexId};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotationEntry {
    pub vertex: usize,
    pub ccw: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossingEntry {
    pub edge: [usize; 2],
    pub crosses: Vec<[usize; 2]>,
}

/// A drawing file. It stores exactly the crossing data of the drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingFile {
    pub n: usize,
    pub rotation: Vec<RotationEntry>,
    pub crossings: Vec<CrossingEntry>,
}

/// A scheme file: the rotation block of a drawing file on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeFile {
    pub n: usize,
    pub rotation: Vec<RotationEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveEntry {
    pub triple: [[usize; 2]; 3],
    pub flip: String,
}

fn rotation_block(s: &RotationScheme) -> Vec<RotationEntry> {
    (1..=s.n())
        .map(|k| RotationEntry {
            vertex: k,
            ccw: s.ccw(VertexId::new(k)).iter().map(|w| w.get()).collect(),
        })
        .collect()
}

fn pair(e: EdgeId) -> [usize; 2] {
    [e.lo().get(), e.hi().get()]
}

fn edge(n: usize, [a, b]: [usize; 2]) -> Result<EdgeId> {
    ensure!(a < b, "edge [{a},{b}] must list its smaller endpoint first");
    ensure!(a >= 1 && b <= n, "edge [{a},{b}] is not an edge of K_{n}");
    Ok(EdgeId::from_labels(a, b))
}

fn scheme_from(n: usize, rotation: &[RotationEntry]) -> Result<RotationScheme> {
    ensure!(n >= 1, "n must be positive");
    ensure!(rotation.len() == n, "expected {n} rotation entries, found {}", rotation.len());
    let mut orders = Vec::with_capacity(n);
    for (k, entry) in rotation.iter().enumerate() {
        ensure!(entry.vertex == k + 1, "rotation entry {k} is for vertex {}, expected {}", entry.vertex, k + 1);
        ensure!(
            entry.ccw.iter().all(|&w| (1..=n).contains(&w)),
            "rotation of vertex {} names a vertex outside 1..={n}",
            entry.vertex
        );
        orders.push(entry.ccw.iter().map(|&w| VertexId::new(w)).collect());
    }
    Ok(RotationScheme::new(n, orders)?)
}

impl SchemeFile {
    pub fn from_scheme(s: &RotationScheme) -> Self {
        SchemeFile { n: s.n(), rotation: rotation_block(s) }
    }

    pub fn to_scheme(&self) -> Result<RotationScheme> {
        scheme_from(self.n, &self.rotation)
    }
}

impl DrawingFile {
    pub fn from_data(c: &CrossingData) -> Self {
        DrawingFile {
            n: c.n(),
            rotation: rotation_block(c.scheme()),
            crossings: c
                .iter()
                .map(|(e, list)| CrossingEntry { edge: pair(e), crosses: list.iter().copied().map(pair).collect() })
                .collect(),
        }
    }

    pub fn from_drawing(d: &GoodDrawing) -> Result<Self> {
        Ok(Self::from_data(&d.crossing_data_of()?))
    }

    /// Edges missing from `crossings` are taken to cross nothing.
    pub fn to_data(&self) -> Result<CrossingData> {
        let n = self.n;
        let scheme = scheme_from(n, &self.rotation)?;
        let all: Vec<EdgeId> = edges(n).collect();
        let mut lists: Vec<Option<Vec<EdgeId>>> = vec![None; all.len()];
        for entry in &self.crossings {
            let e = edge(n, entry.edge)?;
            let slot = &mut lists[e.index(n)];
            ensure!(slot.is_none(), "edge {e} appears twice in crossings");
            *slot = Some(entry.crosses.iter().map(|&p| edge(n, p)).collect::<Result<_>>()?);
        }
        Ok(CrossingData::new(scheme, lists.into_iter().map(Option::unwrap_or_default).collect())?)
    }

    pub fn to_drawing(&self) -> Result<GoodDrawing> {
        Ok(from_crossing_data(&self.to_data()?)?)
    }
}

impl MoveEntry {
    pub fn from_move(m: &Move) -> Self {
        MoveEntry { triple: m.triple.map(pair), flip: m.flip.as_str().to_string() }
    }

    pub fn to_move(&self, n: usize) -> Result<Move> {
        let flip = match self.flip.as_str() {
            "cw" => Flip::Cw,
            "ccw" => Flip::Ccw,
            other => bail!("flip must be \"cw\" or \"ccw\", not {other:?}"),
        };
        let triple = [edge(n, self.triple[0])?, edge(n, self.triple[1])?, edge(n, self.triple[2])?];
        Ok(Move::new(triple, flip))
    }
}

pub fn moves_to_entries(moves: &[Move]) -> Vec<MoveEntry> {
    moves.iter().map(MoveEntry::from_move).collect()
}

pub fn entries_to_moves(entries: &[MoveEntry], n: usize) -> Result<Vec<Move>> {
    entries
        .iter()
        .enumerate()
        .map(|(i, m)| m.to_move(n).with_context(|| format!("move {i}")))
        .collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file formats always serialize");
    s.push('\n');
    s
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn read_drawing(path: &Path) -> Result<GoodDrawing> {
    read_json::<DrawingFile>(path)?.to_drawing().with_context(|| format!("building drawing from {}", path.display()))
}

pub fn read_moves(path: &Path, n: usize) -> Result<Vec<Move>> {
    let entries: Vec<MoveEntry> = read_json(path)?;
    entries_to_moves(&entries, n).with_context(|| format!("in {}", path.display()))
}
