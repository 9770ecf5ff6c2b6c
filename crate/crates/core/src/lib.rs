//! Exact-arithmetic tools for point visibility graphs: construction from
//! rational embeddings, the blocker transformation, reductions to visibility
//! graphs with exhaustive oracles, grid visibility graphs and dominating sets.

pub mod blocker;
pub mod domination;
pub mod error;
pub mod family;
pub mod geometry;
pub mod graph;
pub mod grid;
pub mod harness;
pub mod io;
pub mod oracle;
pub mod reductions;
pub mod visibility;

pub use blocker::{add_universal_point, phi, phi_embedding, PhiResult};
pub use error::{Error, Result};
pub use family::{Case, Family};
pub use geometry::{Point, Rational};
pub use graph::{Diameter, Graph};
pub use reductions::{Instance, Problem, ReducedInstance};
pub use visibility::{hamiltonian_cycle, realizes, visibility_graph, Embedding};
