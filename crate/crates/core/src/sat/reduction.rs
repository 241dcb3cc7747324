use serde::{Deserialize, Serialize};

use super::cnf::{literal_value, var_index, Assignment, CnfFormula};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle;
use crate::role::{self, RoleColouring};

/// Oracle budget for [`verify_reduction_small`], in `k`-partitions of the
/// reduction graph. The pruned search never visits most of them, but the
/// count is a scale-free way to refuse hopeless instances up front.
pub const VERIFY_PARTITION_BUDGET: u128 = 1 << 45;

/// A reduction graph together with its formula and vertex labels.
///
/// Vertex layout: for each clause `C_j`, then `u_{j,1}, u_{j,2}` and
/// `v_{j,k}, ..., v_{j,1}` (for `k = 2`: `C_j, b_j, a_j`); then for each
/// variable `x_i, ¬x_i`, the `2k - 4` path vertices `z`, and
/// `y_{i,k-1}, ..., y_{i,1}` (for `k = 2`: a single `y_i`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub k: usize,
    pub labels: Vec<String>,
    pub formula: CnfFormula,
    clause_start: Vec<usize>,
    var_start: Vec<usize>,
    /// whether the z-path runs from `x_i` towards `¬x_i`
    z_from_positive: Vec<bool>,
}

impl ReductionGraph {
    /// Vertex of literal `lit` (signed variable id).
    pub fn literal_vertex(&self, lit: i64) -> usize {
        self.var_start[var_index(lit)] + usize::from(lit < 0)
    }

    pub fn clause_vertex(&self, j: usize) -> usize {
        self.clause_start[j]
    }

    /// The vertex whose colour marks TRUE literals: `a_1` for `k = 2`,
    /// `v_{1,k-2}` otherwise.
    pub fn distinguished_vertex(&self) -> usize {
        if self.k == 2 {
            self.clause_start[0] + 2
        } else {
            self.v_vertex(0, self.k - 2)
        }
    }

    fn v_vertex(&self, j: usize, t: usize) -> usize {
        self.clause_start[j] + 3 + (self.k - t)
    }
}

/// Checks the domain of the construction: 3,3-form (clause sizes 1 to 3),
/// every variable occurring, connected clause/variable incidence graph.
fn check_domain(phi: &CnfFormula) -> Result<()> {
    if phi.clauses.is_empty() {
        return Err(Error::Formula("formula has no clauses".into()));
    }
    if !phi.is_three_three() {
        return Err(Error::Formula(
            "formula is not in 3,3-form (clauses of size at most 3, variables occurring at most 3 times); apply the occurrence-splitting transform first".into(),
        ));
    }
    if let Some(v) = phi.occurrences().iter().position(|&(p, n)| p + n == 0) {
        return Err(Error::Formula(format!("variable {} does not occur", v + 1)));
    }
    if !super::formula_graph(phi)?.is_connected() {
        return Err(Error::Formula("clause/variable incidence graph is disconnected".into()));
    }
    Ok(())
}

/// 2-role-colouring reduction: per clause a pendant path `a_j - b_j - C_j`,
/// per variable a triangle `x_i, ¬x_i, y_i`, and each literal vertex
/// adjacent to the clauses it occurs in.
pub fn build_reduction_k2(phi: &CnfFormula) -> Result<ReductionGraph> {
    build(phi, 2)
}

/// `k`-role-colouring reduction for `k >= 3`: per clause a dangling path
/// `v_{j,1} .. v_{j,k}` into `C_j` and two vertices `u_{j,1}, u_{j,2}` each
/// forming a triangle with `v_{j,k}, C_j`; per variable a path of `2k - 4`
/// vertices between the two literal vertices, an apex `y_{i,k-1}` adjacent
/// to both literals, and a dangling path `y_{i,1} .. y_{i,k-1}`.
pub fn build_reduction_k(phi: &CnfFormula, k: usize) -> Result<ReductionGraph> {
    if k < 3 {
        return Err(Error::Formula(format!("this construction needs k >= 3 (got {k}); use the 2-colour one")));
    }
    build(phi, k)
}

/// Either construction, chosen by `k`.
pub fn build_reduction(phi: &CnfFormula, k: usize) -> Result<ReductionGraph> {
    match k {
        0 | 1 => Err(Error::Formula(format!("reductions need k >= 2 (got {k})"))),
        2 => build_reduction_k2(phi),
        _ => build_reduction_k(phi, k),
    }
}

fn build(phi: &CnfFormula, k: usize) -> Result<ReductionGraph> {
    check_domain(phi)?;
    let occ = phi.occurrences();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut clause_start = Vec::new();
    for j in 1..=phi.clauses.len() {
        let c = labels.len();
        clause_start.push(c);
        labels.push(format!("C{j}"));
        if k == 2 {
            labels.push(format!("b{j}"));
            labels.push(format!("a{j}"));
            edges.extend([(c, c + 1), (c + 1, c + 2)]);
            continue;
        }
        labels.push(format!("u{j}_1"));
        labels.push(format!("u{j}_2"));
        let vk = c + 3;
        for t in (1..=k).rev() {
            labels.push(format!("v{j}_{t}"));
        }
        edges.extend([(c, vk), (c + 1, c), (c + 1, vk), (c + 2, c), (c + 2, vk)]);
        edges.extend((vk..vk + k - 1).map(|v| (v, v + 1)));
    }
    let mut var_start = Vec::new();
    let mut z_from_positive = Vec::new();
    for i in 1..=phi.num_vars {
        let x = labels.len();
        var_start.push(x);
        labels.push(format!("x{i}"));
        labels.push(format!("-x{i}"));
        edges.push((x, x + 1));
        if k == 2 {
            labels.push(format!("y{i}"));
            edges.extend([(x, x + 2), (x + 1, x + 2)]);
            z_from_positive.push(true);
            continue;
        }
        // the path starts at the literal that is not the once-occurring one
        let from_positive = occ[i - 1].1 == 1;
        z_from_positive.push(from_positive);
        let (start, end) = if from_positive { (x, x + 1) } else { (x + 1, x) };
        edges.pop();
        let z0 = x + 2;
        for t in 1..=2 * k - 4 {
            labels.push(format!("z{i}_{t}"));
        }
        let mut chain = vec![start];
        chain.extend(z0..z0 + 2 * k - 4);
        chain.push(end);
        edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
        let apex = z0 + 2 * k - 4;
        for t in (1..k).rev() {
            labels.push(format!("y{i}_{t}"));
        }
        edges.extend([(apex, x), (apex, x + 1)]);
        edges.extend((apex..apex + k - 2).map(|v| (v, v + 1)));
    }
    for (j, clause) in phi.clauses.iter().enumerate() {
        for &lit in clause {
            let v = var_start[var_index(lit)] + usize::from(lit < 0);
            edges.push((v, clause_start[j]));
        }
    }
    let graph = Graph::new(labels.len(), &edges)?;
    Ok(ReductionGraph { graph, k, labels, formula: phi.clone(), clause_start, var_start, z_from_positive })
}

/// The canonical colouring for a satisfying assignment.
///
/// `k = 2`: TRUE literals and every `a_j` get colour 1 ("red"), the rest
/// colour 2. `k >= 3`: `v_{j,t}` and `y_{i,t}` get `t`, `u` gets `k`,
/// `C_j` gets `k - 1`, a TRUE literal `k - 2` and a FALSE literal `k`, with
/// the z-path walking `k-2, k-3, .., 1, .., k` from the TRUE end.
pub fn assignment_to_colouring(rg: &ReductionGraph, assignment: &[bool]) -> Result<RoleColouring> {
    let phi = &rg.formula;
    if assignment.len() != phi.num_vars {
        return Err(Error::LengthMismatch { expected: phi.num_vars, got: assignment.len() });
    }
    if let Some(j) = phi.clauses.iter().position(|c| !c.iter().any(|&l| literal_value(l, assignment))) {
        return Err(Error::Formula(format!("assignment leaves clause {} unsatisfied", j + 1)));
    }
    let k = rg.k;
    let mut colours = vec![0usize; rg.graph.n()];
    for &c in &rg.clause_start {
        if k == 2 {
            colours[c..c + 3].copy_from_slice(&[2, 2, 1]);
            continue;
        }
        colours[c] = k - 1;
        colours[c + 1] = k;
        colours[c + 2] = k;
        for t in 1..=k {
            colours[c + 3 + (k - t)] = t;
        }
    }
    for (i, &x) in rg.var_start.iter().enumerate() {
        let truth = assignment[i];
        if k == 2 {
            colours[x] = if truth { 1 } else { 2 };
            colours[x + 1] = if truth { 2 } else { 1 };
            colours[x + 2] = 2;
            continue;
        }
        // colours along start, z_1 .. z_{2k-4}, end when the start literal is TRUE
        let mut walk: Vec<usize> = (0..=2 * k - 4).map(|p| 1 + p.abs_diff(k - 3)).collect();
        walk.push(k);
        let start_true = truth == rg.z_from_positive[i];
        if !start_true {
            walk.reverse();
        }
        let (start, end) = if rg.z_from_positive[i] { (x, x + 1) } else { (x + 1, x) };
        colours[start] = walk[0];
        colours[end] = walk[2 * k - 3];
        colours[x + 2..x + 2 + 2 * k - 4].copy_from_slice(&walk[1..2 * k - 3]);
        let apex = x + 2 + 2 * k - 4;
        for t in 1..k {
            colours[apex + (k - 1 - t)] = t;
        }
    }
    let rc = RoleColouring::new(k, colours)?;
    if !role::validate(&rg.graph, &rc)? {
        return Err(Error::Internal("canonical reduction colouring failed validation".into()));
    }
    Ok(rc)
}

/// Reads an assignment off a valid colouring: `x_i` is TRUE iff its vertex
/// has the colour of [`ReductionGraph::distinguished_vertex`]. The result
/// is checked against the formula.
pub fn colouring_to_assignment(rg: &ReductionGraph, rc: &RoleColouring) -> Result<Assignment> {
    if rc.k != rg.k || !role::validate(&rg.graph, rc)? {
        return Err(Error::InvalidColouring);
    }
    let marked = rc.colours[rg.distinguished_vertex()];
    let assignment: Assignment = rg.var_start.iter().map(|&x| rc.colours[x] == marked).collect();
    if !rg.formula.satisfied_by(&assignment) {
        return Err(Error::Internal("extracted assignment does not satisfy the formula".into()));
    }
    Ok(assignment)
}

/// Number of vertices the reduction for `phi` at `k` would have.
pub fn reduction_size(phi: &CnfFormula, k: usize) -> usize {
    let (c, v) = if k == 2 { (3, 3) } else { (k + 3, 3 * k - 3) };
    c * phi.clauses.len() + v * phi.num_vars
}

/// Builds the reduction and checks that the formula is satisfiable exactly
/// when the graph has a `k`-role-colouring (truth table against the
/// exhaustive oracle). Both directions of the translation are exercised:
/// a satisfying assignment must map to a valid colouring and an oracle
/// colouring must map back to a satisfying assignment.
pub fn verify_reduction_small(phi: &CnfFormula, k: usize) -> Result<bool> {
    let rg = build_reduction(phi, k)?;
    let n = rg.graph.n();
    let partitions = oracle::stirling2(n, k);
    if n > oracle::MAX_VERTICES || partitions > VERIFY_PARTITION_BUDGET {
        return Err(Error::TooLarge(format!(
            "reduction graph has {n} vertices and {partitions} {k}-partitions (budget {VERIFY_PARTITION_BUDGET})"
        )));
    }
    let truth = phi.solve_by_truth_table()?;
    let found = oracle::solve_exact(&rg.graph, k)?;
    if let Some(a) = &truth {
        assignment_to_colouring(&rg, a)?;
    }
    if let Some(rc) = &found {
        colouring_to_assignment(&rg, rc)?;
    }
    Ok(truth.is_some() == found.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::role::role_graph;

    fn fig1() -> CnfFormula {
        CnfFormula::new(2, vec![vec![1, 2], vec![-2]]).unwrap()
    }

    #[test]
    fn figure_one_graph() {
        let rg = build_reduction_k2(&fig1()).unwrap();
        assert_eq!(rg.graph.n(), 12);
        assert_eq!(rg.labels, ["C1", "b1", "a1", "C2", "b2", "a2", "x1", "-x1", "y1", "x2", "-x2", "y2"]);
        let rc = assignment_to_colouring(&rg, &[true, false]).unwrap();
        assert_eq!(rc.colours, vec![2, 2, 1, 2, 2, 1, 1, 2, 2, 2, 1, 2]);
        let r = role_graph(&rg.graph, &rc).unwrap();
        assert_eq!(r.edges.iter().copied().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(r.loops.iter().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(colouring_to_assignment(&rg, &rc).unwrap(), vec![true, false]);
        assert!(matches!(assignment_to_colouring(&rg, &[false, false]), Err(Error::Formula(_))));
    }

    #[test]
    fn census_for_larger_k() {
        for k in 3..=6 {
            let rg = build_reduction_k(&fig1(), k).unwrap();
            // per clause C, u x2, v xk; per variable x, -x, z x(2k-4), y x(k-1)
            assert_eq!(rg.graph.n(), 2 * (k + 3) + 2 * (2 + (2 * k - 4) + (k - 1)));
            assert_eq!(rg.graph.n(), reduction_size(&fig1(), k));
            assert!(rg.graph.is_connected());
            let rc = assignment_to_colouring(&rg, &[true, false]).unwrap();
            assert_eq!(colouring_to_assignment(&rg, &rc).unwrap(), vec![true, false]);
            let r = role_graph(&rg.graph, &rc).unwrap();
            assert!(r.is_path_ignoring_loops());
            assert_eq!(r.loops.iter().copied().collect::<Vec<_>>(), vec![k]);
        }
        assert!(build_reduction_k(&fig1(), 2).is_err());
    }

    #[test]
    fn k3_labels() {
        let rg = build_reduction_k(&CnfFormula::new(1, vec![vec![1]]).unwrap(), 3).unwrap();
        assert_eq!(
            rg.labels,
            ["C1", "u1_1", "u1_2", "v1_3", "v1_2", "v1_1", "x1", "-x1", "z1_1", "z1_2", "y1_2", "y1_1"]
        );
    }

    #[test]
    fn domain_checks() {
        let split = CnfFormula::new(2, vec![vec![1], vec![2]]).unwrap();
        assert!(build_reduction_k2(&split).is_err());
        let unused = CnfFormula::new(2, vec![vec![1]]).unwrap();
        assert!(build_reduction_k2(&unused).is_err());
        let heavy = CnfFormula::new(1, vec![vec![1]; 4]).unwrap();
        assert!(build_reduction_k2(&heavy).is_err());
    }

    #[test]
    fn unsatisfiable_has_no_two_colouring() {
        let phi = CnfFormula::new(2, vec![vec![1, 2], vec![-1], vec![-2]]).unwrap();
        let rg = build_reduction_k2(&phi).unwrap();
        assert_eq!(oracle::solve_exact(&rg.graph, 2).unwrap(), None);
        assert!(verify_reduction_small(&phi, 2).unwrap());
    }

    #[test]
    fn small_equivalences() {
        assert!(verify_reduction_small(&fig1(), 2).unwrap());
        let contradiction = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(verify_reduction_small(&contradiction, 2).unwrap());
        let unit = CnfFormula::new(1, vec![vec![1]]).unwrap();
        assert!(verify_reduction_small(&unit, 3).unwrap());
    }
}
