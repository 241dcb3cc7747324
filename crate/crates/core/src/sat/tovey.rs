use serde::{Deserialize, Serialize};

use super::cnf::{var_index, Assignment, CnfFormula};
use crate::error::{Error, Result};

/// Output of the occurrence-splitting transform together with the
/// original variable behind each new one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToveyResult {
    pub formula: CnfFormula,
    /// `origin[i]` is the input variable (1-based) that new variable `i + 1` copies.
    pub origin: Vec<usize>,
}

impl ToveyResult {
    /// Reads an assignment of the transformed formula back onto the input
    /// variables; all copies of a variable agree in any satisfying assignment.
    pub fn project(&self, assignment: &[bool], num_vars: usize) -> Assignment {
        let mut out = vec![false; num_vars];
        for (i, &orig) in self.origin.iter().enumerate().rev() {
            out[orig - 1] = assignment[i];
        }
        out
    }
}

/// Splits every variable with more than three occurrences into one fresh
/// variable per occurrence, chained by the cyclic implications
/// `x_1 ∨ ¬x_2, x_2 ∨ ¬x_3, ..., x_j ∨ ¬x_1` so the copies are all true or
/// all false. Formulas already within three occurrences come back unchanged.
pub fn tovey_transform(phi: &CnfFormula) -> CnfFormula {
    tovey_with_origin(phi, None).expect("default rotation is always valid").formula
}

/// [`tovey_transform`] with the variable map kept.
pub fn tovey_transform_with_origin(phi: &CnfFormula) -> ToveyResult {
    tovey_with_origin(phi, None).expect("default rotation is always valid")
}

/// Planar flavour: the copies of a variable are placed around their cycle
/// in the given cyclic order of its occurrences (`rotation[v - 1]` lists
/// occurrence indices `0..j`), so each implication clause joins copies that
/// are consecutive in the embedding. Without a rotation the input clause
/// order is used.
pub fn planar_tovey_transform(phi: &CnfFormula, rotation: Option<&[Vec<usize>]>) -> Result<ToveyResult> {
    tovey_with_origin(phi, rotation)
}

fn tovey_with_origin(phi: &CnfFormula, rotation: Option<&[Vec<usize>]>) -> Result<ToveyResult> {
    let occ = phi.occurrences();
    // positions of each variable's occurrences in clause order
    let mut positions: Vec<Vec<(usize, usize)>> = vec![Vec::new(); phi.num_vars];
    for (j, clause) in phi.clauses.iter().enumerate() {
        for (p, &lit) in clause.iter().enumerate() {
            positions[var_index(lit)].push((j, p));
        }
    }
    let mut clauses = phi.clauses.clone();
    let mut extra = Vec::new();
    let mut origin = Vec::new();
    for v in 0..phi.num_vars {
        let j = occ[v].0 + occ[v].1;
        if j <= 3 {
            origin.push(v + 1);
            let id = origin.len() as i64;
            for &(c, p) in &positions[v] {
                clauses[c][p] = clauses[c][p].signum() * id;
            }
            continue;
        }
        let order: Vec<usize> = match rotation.and_then(|r| r.get(v)) {
            Some(o) => {
                let mut sorted = o.clone();
                sorted.sort_unstable();
                if sorted != (0..j).collect::<Vec<_>>() {
                    return Err(Error::Formula(format!("rotation for variable {} is not a permutation of 0..{j}", v + 1)));
                }
                o.clone()
            }
            None => (0..j).collect(),
        };
        let first = origin.len() as i64 + 1;
        for &occurrence in &order {
            origin.push(v + 1);
            let (c, p) = positions[v][occurrence];
            clauses[c][p] = clauses[c][p].signum() * origin.len() as i64;
        }
        for i in 0..j as i64 {
            let next = (i + 1) % j as i64;
            extra.push(vec![first + i, -(first + next)]);
        }
    }
    clauses.extend(extra);
    Ok(ToveyResult { formula: CnfFormula { num_vars: origin.len(), clauses }, origin })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_occurrences() {
        let phi = CnfFormula::new(2, vec![vec![1, 2], vec![1], vec![-1, -2], vec![1, 2]]).unwrap();
        let out = tovey_transform_with_origin(&phi);
        assert_eq!(out.formula.num_vars, 5);
        assert_eq!(out.formula.clauses.len(), 8);
        assert_eq!(&out.formula.clauses[4..], &[vec![1, -2], vec![2, -3], vec![3, -4], vec![4, -1]]);
        assert_eq!(out.origin, vec![1, 1, 1, 1, 2]);
        assert!(out.formula.occurrences().iter().all(|&(p, n)| p + n <= 3));
    }

    #[test]
    fn unchanged_when_already_small() {
        let phi = CnfFormula::new(2, vec![vec![1, 2], vec![-2]]).unwrap();
        assert_eq!(tovey_transform(&phi), phi);
    }

    #[test]
    fn planar_rotation_is_checked() {
        let phi = CnfFormula::new(1, vec![vec![1]; 4]).unwrap();
        assert!(planar_tovey_transform(&phi, Some(&[vec![0, 1, 2]])).is_err());
        let out = planar_tovey_transform(&phi, Some(&[vec![2, 0, 3, 1]])).unwrap();
        assert_eq!(out.formula.clauses[2], vec![1]);
        assert_eq!(out.formula.clauses[0], vec![2]);
    }
}
