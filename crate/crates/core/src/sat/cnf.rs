use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// CNF formula over variables `1..=num_vars`; a literal is a signed
/// variable id as in DIMACS (`-3` is the negation of variable 3).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
}

/// Truth values indexed by variable id minus one.
pub type Assignment = Vec<bool>;

/// Largest variable count the truth-table sweep accepts.
pub const TRUTH_TABLE_LIMIT: usize = 24;

impl CnfFormula {
    /// Checks well-formedness: non-empty clauses, literals in range, no
    /// repeated variable within a clause.
    pub fn new(num_vars: usize, clauses: Vec<Vec<i64>>) -> Result<Self> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(Error::Formula(format!("clause {} is empty", j + 1)));
            }
            let mut vars: Vec<u64> = Vec::with_capacity(clause.len());
            for &lit in clause {
                let v = lit.unsigned_abs();
                if lit == 0 || v as usize > num_vars {
                    return Err(Error::Formula(format!("clause {}: literal {lit} out of range 1..={num_vars}", j + 1)));
                }
                if vars.contains(&v) {
                    return Err(Error::Formula(format!("clause {} mentions variable {v} twice", j + 1)));
                }
                vars.push(v);
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Occurrence counts `(positive, negative)` per variable.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(0, 0); self.num_vars];
        for &lit in self.clauses.iter().flatten() {
            let entry = &mut occ[var_index(lit)];
            if lit > 0 {
                entry.0 += 1;
            } else {
                entry.1 += 1;
            }
        }
        occ
    }

    /// Clause sizes 1 to 3 and at most three occurrences per variable.
    pub fn is_three_three(&self) -> bool {
        self.clauses.iter().all(|c| (1..=3).contains(&c.len()))
            && self.occurrences().iter().all(|&(p, n)| p + n <= 3)
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self.clauses.iter().all(|c| c.iter().any(|&lit| literal_value(lit, assignment)))
    }

    /// First satisfying assignment in binary counting order (variable 1
    /// is the least significant bit), by exhaustive sweep.
    pub fn solve_by_truth_table(&self) -> Result<Option<Assignment>> {
        if self.num_vars > TRUTH_TABLE_LIMIT {
            return Err(Error::TooLarge(format!(
                "truth table over {} variables (limit {TRUTH_TABLE_LIMIT})",
                self.num_vars
            )));
        }
        let mut a = vec![false; self.num_vars];
        for bits in 0u64..1 << self.num_vars {
            for (i, slot) in a.iter_mut().enumerate() {
                *slot = bits >> i & 1 == 1;
            }
            if self.satisfied_by(&a) {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }
}

pub(crate) fn var_index(lit: i64) -> usize {
    lit.unsigned_abs() as usize - 1
}

pub(crate) fn literal_value(lit: i64, assignment: &[bool]) -> bool {
    assignment[var_index(lit)] == (lit > 0)
}

/// Bipartite clause/variable incidence graph: clause `j` is vertex `j`,
/// variable `i` is vertex `clauses + i - 1`.
pub fn formula_graph(phi: &CnfFormula) -> Result<Graph> {
    let m = phi.clauses.len();
    let edges: Vec<(usize, usize)> = phi
        .clauses
        .iter()
        .enumerate()
        .flat_map(|(j, c)| c.iter().map(move |&lit| (j, m + var_index(lit))))
        .collect();
    Graph::new(m + phi.num_vars, &edges)
}
