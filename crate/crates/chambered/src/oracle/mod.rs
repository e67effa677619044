//! An independent g-vector oracle. Nothing here touches the matrix
//! representation: the input is the raw graph, the machinery is the doubled
//! quiver, its truncated relation quotient, ideal-word submodules, and
//! minimal presentations. Agreement between this pipeline and the matrix
//! side is the main cross-validation of the crate.

pub mod presentation;
pub mod quiver;
pub mod submodule;
pub mod trunc;

pub use presentation::{
    minimal_presentation, OracleColumn, OracleContext, OracleGMatrix, Presentation,
};
pub use quiver::DoubleQuiver;
pub use submodule::{ideal_word_module, GradedSubmodule, ModuleShape};
pub use trunc::TruncatedAlgebra;
