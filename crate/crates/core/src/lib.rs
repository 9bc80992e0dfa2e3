//! Syzygies, Hilbert functions and free resolutions of three bidegree-(2,1)
//! forms on P^1 x P^1, computed with exact rational linear algebra.

pub mod bipoly;
pub mod classify;
pub mod error;
pub mod exactnum;
pub mod fixtures;
pub mod hilbert;
pub mod resolution;
pub mod sample;
pub mod syzygy;
pub mod verify;

pub use bipoly::{BiDeg, BiHomPoly, InputTriple, PolyError};
pub use classify::{classify, resultant_21, InstanceClass, ResultantReport};
pub use error::{Error, Result};
pub use exactnum::{ExactMatrix, LinalgError, Rational};
pub use syzygy::{SyzGens, SyzTriple};
pub use hilbert::{DimRow, DimTable};
pub use resolution::{build_resolution, verify_complex, ComplexReport, FreeModule, GradedComplex, GradedMap};
pub use verify::{verify_instance, VerifyReport};
