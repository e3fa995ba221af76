//! Good drawings of complete graphs as combinatorial maps.
//!
//! A drawing of `K_n` on the sphere is stored as its planarization: the `n`
//! vertices plus one degree-4 node per crossing. Everything here is purely
//! combinatorial; no coordinates are involved.

#![no_std]

extern crate alloc;

pub mod archdeacon;
pub mod dual;
pub mod facts;
pub mod gen;
pub mod ids;
pub mod map;
pub mod moves;
pub mod scheme;
pub mod transform;

pub use facts::{crossing_set_of, crossing_sign, k4_crossing, triangle_side, CrossingSign, K4Class, K4Rotation, Side};
pub use ids::{DirectedEdge, EdgeId, VertexId};
pub use map::{CrossingData, DartId, Face, GoodDrawing, MapError, NodeId, NodeKind, ValidationReport, Violation};
pub use moves::{apply_move, apply_sequence, find_triangles, Flip, Move, MoveError, Triangle};
pub use scheme::{RotationScheme, SchemeError};
pub use transform::{drawings_equivalent, empty_triangle, gioan_transform, transform_with_report, TransformError, TransformReport};
pub use dual::{Arrangement, DualError, DualPath, SegmentId, SlideStep, Step};

