pub mod canon;
pub mod cli;
pub mod constructor;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DistanceTable, Graph, Relabeling, Vertex, VertexSet};
