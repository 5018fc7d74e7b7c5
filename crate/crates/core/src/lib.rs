pub mod canon;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod sampling;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Vertex, MAX_VERTICES};
pub use invariants::Girth;
