//! Exact-arithmetic calculus of Delzant polytopes and marked semitoric
//! polygons: validation, the vertical shear / cut-flip group action,
//! canonical orbit representatives, Taylor-series and twisting-index label
//! algebra, corner-chop surgery, strictly-minimal classification, and the
//! combinatorial data of the Delzant construction.
//!
//! All values are immutable and every operation is a pure function on exact
//! rationals; equal inputs give bit-identical outputs.

pub mod delzant;
pub mod doc;
pub mod error;
pub mod geometry;
pub mod intmat;
pub mod labels;
pub mod rat;
pub mod semitoric;
pub mod series;
pub mod surgeries;
pub mod svg;

pub use error::{Error, Result};
