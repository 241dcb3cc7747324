//! Role colourings (locally surjective homomorphisms) of graphs.
//!
//! A `k`-role-colouring partitions the vertices into `k` non-empty classes
//! such that vertices of the same class see the same *set* of classes in
//! their neighbourhoods. This crate provides an exhaustive oracle, exact
//! solvers for paths, trees and cographs, and the SAT reductions behind
//! the hardness of the problem on general graphs.

pub mod cograph;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod path;
pub mod role;
pub mod sat;
pub mod solver;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{Graph, GraphClass, GraphKind};
pub use role::{role_graph, validate, RoleColouring, RoleGraph};
pub use solver::{solve, Method, Solution};
