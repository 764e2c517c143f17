//! Rainbow connectivity of graphs: certificate verifiers, exact solvers,
//! the hardness reductions for strong rainbow vertex coloring, and the
//! constructive colorings and win-win procedures for graphs with a small
//! vertex cover or a large color saving.

pub mod bench;
pub mod coloring;
pub mod error;
pub mod fpt;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod solve;
pub mod verify;

pub use coloring::{Coloring, EdgeColoring, PairSet, VertexColoring};
pub use error::{Error, Result};
pub use graph::{EdgeSet, Graph, VertexSet};
pub use solve::{Answer, Mode, SolveReport, Solver};
pub use verify::{Variant, Verdict};
