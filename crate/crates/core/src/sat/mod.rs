//! SAT to role-colouring reductions: CNF formulas, the occurrence-splitting
//! transform, the reduction graphs and the translations between satisfying
//! assignments and colourings.

mod cnf;
mod reduction;
mod tovey;

pub use cnf::{formula_graph, Assignment, CnfFormula, TRUTH_TABLE_LIMIT};
pub use reduction::{
    assignment_to_colouring, build_reduction, build_reduction_k, build_reduction_k2, colouring_to_assignment,
    reduction_size, verify_reduction_small, ReductionGraph, VERIFY_PARTITION_BUDGET,
};
pub use tovey::{planar_tovey_transform, tovey_transform, tovey_transform_with_origin, ToveyResult};
