//! Planar knot diagrams: plat closures, orientation, checkerboard coloring,
//! crossing classification, PD codes and connected sums.

mod color;
mod orient;
mod pd;
mod planar;
mod plat;
mod splice;

pub use color::{
    checkerboard, crossing_stats, Color, ColoredDiagram, CrossingInfo, CrossingKind, CrossingStats,
};
pub use orient::{orient, OrientedDiagram};
pub use pd::{parse_pd, write_pd};
pub use planar::{Dart, FaceMap, OverPair, PlanarDiagram};
pub use plat::plat_closure;
pub use splice::splice_connected_sum;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("diagram has {components} components, expected a knot")]
    LinkNotKnot { components: usize },
    #[error("split diagram: free circles next to crossings")]
    Split,
    #[error("rotation system is not planar: {crossings} crossings but {faces} faces")]
    NotPlanar { crossings: usize, faces: usize },
    #[error("faces admit no checkerboard coloring")]
    NotCheckerboard,
    #[error("invalid edge pairing: {0}")]
    BadPairing(String),
    #[error("inconsistent orientation: {0}")]
    InconsistentOrientation(String),
    #[error("malformed PD code at line {line}: {message}")]
    MalformedPd { line: usize, message: String },
}
