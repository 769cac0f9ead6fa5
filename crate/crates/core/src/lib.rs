//! Characteristic-class obstructions to polarizations, arboreal skeleta and
//! Maslov data on Weinstein manifolds given by their cohomology.
//!
//! Verdicts are obstructions only: a silent check never implies existence.

pub mod chern;
pub mod coeff;
pub mod error;
pub mod graded;
pub mod homotopy;
pub mod numtheory;
pub mod obstructions;
pub mod search;
pub mod spaces;
pub mod verify;

/// Schema tag carried by every machine-readable output.
pub const SCHEMA_VERSION: &str = "ccobstruct/1";

pub use coeff::{CoefficientRing, RingElement};
pub use error::{Error, Result};
pub use graded::{GradedClass, RingPresentation};
pub use homotopy::HomotopyGroupDescriptor;
pub use obstructions::{classify, CheckKind, ObstructionReport, Verdict};
pub use search::{search, OutputFormat, SearchSpec, SearchTable};
pub use spaces::SpaceModel;
