//! Command-line front end. Exit codes: 0 for a positive decision or plain
//! success, 1 for a negative decision, 2 for usage, parse and input errors.
//! Payloads go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rolecol::sat::{self, CnfFormula, ReductionGraph};
use rolecol::{io, oracle, role, Graph, Method};

pub const ORACLE_LIMIT_VAR: &str = "ROLECOL_ORACLE_LIMIT";

#[derive(Parser, Debug)]
#[command(name = "rolecol", version, about = "Role colourings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Path,
    Tree,
    Cograph,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Brute => Method::Brute,
            MethodArg::Path => Method::Path,
            MethodArg::Tree => Method::Tree,
            MethodArg::Cograph => Method::Cograph,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find a k-role-colouring; prints it as JSON, exit 1 if none exists.
    Solve {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
    /// Check a colouring; exit 0 if it is a role colouring, 1 if not.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Print the role graph of a valid colouring.
    Rolegraph {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Exhaustive search. Without --k, k is read from a label sidecar
    /// `<input>.labels.json` when present.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, conflicts_with = "all_k")]
        k: Option<usize>,
        #[arg(long)]
        all_k: bool,
    },
    /// Build the reduction graph of a CNF formula; writes the graph to
    /// --out and the labels to `<out>.labels.json`.
    Reduce {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        planar_tovey: bool,
    },
    /// Read a satisfying assignment off a colouring of a reduction graph.
    Extract {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        colouring: PathBuf,
        #[arg(long)]
        planar_tovey: bool,
    },
    /// Quick built-in consistency checks.
    Selftest,
}

/// Decision outcome of a successful command.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Outcome {
    Yes,
    No,
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(Outcome::Yes) => 0,
        Ok(Outcome::No) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    io::parse_graph(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_colouring(path: &Path) -> Result<rolecol::RoleColouring> {
    io::parse_colouring(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn oracle_limit(err: &mut dyn Write) -> Result<usize> {
    match std::env::var(ORACLE_LIMIT_VAR) {
        Ok(v) => {
            let limit: usize = v.trim().parse().with_context(|| format!("{ORACLE_LIMIT_VAR}={v:?} is not a number"))?;
            if limit > oracle::PRACTICAL_LIMIT {
                writeln!(
                    err,
                    "warning: {ORACLE_LIMIT_VAR}={limit} is above the practical ceiling of {} vertices; exhaustive search may not finish",
                    oracle::PRACTICAL_LIMIT
                )?;
            }
            Ok(limit.min(oracle::MAX_VERTICES))
        }
        Err(_) => Ok(oracle::PRACTICAL_LIMIT),
    }
}

fn sidecar_path(graph: &Path) -> PathBuf {
    let mut name = graph.as_os_str().to_owned();
    name.push(".labels.json");
    PathBuf::from(name)
}

/// Parses the CNF and brings it into 3,3-form.
fn prepared_formula(path: &Path, planar: bool) -> Result<(CnfFormula, sat::ToveyResult)> {
    let phi = io::parse_cnf(&read(path)?).with_context(|| format!("in {}", path.display()))?;
    let split = if planar { sat::planar_tovey_transform(&phi, None)? } else { sat::tovey_transform_with_origin(&phi) };
    Ok((phi, split))
}

fn reduction(split: &sat::ToveyResult, k: usize) -> Result<ReductionGraph> {
    Ok(sat::build_reduction(&split.formula, k)?)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Solve { k, input, method } => {
            let g = load_graph(&input)?;
            let limit = oracle_limit(err)?;
            let solution = rolecol::solve(&g, k, method.into(), limit)?;
            writeln!(err, "method: {:?}", solution.method)?;
            match solution.colouring {
                Some(rc) => {
                    out.write_all(io::write_colouring(&rc).as_bytes())?;
                    Ok(Outcome::Yes)
                }
                None => {
                    writeln!(out, "null")?;
                    Ok(Outcome::No)
                }
            }
        }
        Command::Verify { input, colouring } => {
            let g = load_graph(&input)?;
            let rc = load_colouring(&colouring)?;
            if role::validate(&g, &rc)? {
                writeln!(out, "valid")?;
                Ok(Outcome::Yes)
            } else {
                writeln!(out, "invalid")?;
                Ok(Outcome::No)
            }
        }
        Command::Rolegraph { input, colouring, dot } => {
            let g = load_graph(&input)?;
            let rc = load_colouring(&colouring)?;
            if !role::validate(&g, &rc)? {
                writeln!(err, "colouring is not a role colouring")?;
                return Ok(Outcome::No);
            }
            let r = role::role_graph(&g, &rc)?;
            let text = if dot { io::role_graph_to_dot(&r) } else { io::write_role_graph(&r) };
            out.write_all(text.as_bytes())?;
            Ok(Outcome::Yes)
        }
        Command::Oracle { input, k, all_k } => {
            let g = load_graph(&input)?;
            let limit = oracle_limit(err)?;
            if g.n() > limit {
                bail!(
                    "{} vertices exceed the exhaustive-search limit {limit}; set {ORACLE_LIMIT_VAR} to override",
                    g.n()
                );
            }
            if all_k {
                let ks = oracle::solvable_k_set(&g)?;
                writeln!(out, "{}", serde_json::json!({ "n": g.n(), "solvable_k": ks }))?;
                return Ok(Outcome::Yes);
            }
            let k = match k {
                Some(k) => k,
                None => {
                    let side = sidecar_path(&input);
                    if !side.exists() {
                        bail!("give --k or --all-k (no label sidecar {} found)", side.display());
                    }
                    io::parse_labels(&read(&side)?).with_context(|| format!("in {}", side.display()))?.1
                }
            };
            match oracle::solve_exact(&g, k)? {
                Some(rc) => {
                    out.write_all(io::write_colouring(&rc).as_bytes())?;
                    Ok(Outcome::Yes)
                }
                None => {
                    writeln!(out, "null")?;
                    Ok(Outcome::No)
                }
            }
        }
        Command::Reduce { cnf, k, out: target, planar_tovey } => {
            let (phi, split) = prepared_formula(&cnf, planar_tovey)?;
            if split.formula != phi {
                writeln!(err, "note: split variables with more than three occurrences ({} -> {} variables)", phi.num_vars, split.formula.num_vars)?;
            }
            let rg = reduction(&split, k)?;
            std::fs::write(&target, io::write_graph(&rg.graph)).with_context(|| format!("cannot write {}", target.display()))?;
            let side = sidecar_path(&target);
            std::fs::write(&side, io::write_labels(&rg)).with_context(|| format!("cannot write {}", side.display()))?;
            writeln!(
                out,
                "{}",
                serde_json::json!({ "vertices": rg.graph.n(), "edges": rg.graph.m(), "k": k, "variables": split.formula.num_vars, "clauses": split.formula.clauses.len() })
            )?;
            Ok(Outcome::Yes)
        }
        Command::Extract { cnf, k, graph, colouring, planar_tovey } => {
            let (phi, split) = prepared_formula(&cnf, planar_tovey)?;
            let rg = reduction(&split, k)?;
            let g = load_graph(&graph)?;
            if g != rg.graph {
                bail!("{} is not the reduction graph of {} at k = {k}", graph.display(), cnf.display());
            }
            let rc = load_colouring(&colouring)?;
            if rc.k != k || !role::validate(&g, &rc)? {
                writeln!(err, "colouring is not a {k}-role-colouring of the graph")?;
                return Ok(Outcome::No);
            }
            let assignment = split.project(&sat::colouring_to_assignment(&rg, &rc)?, phi.num_vars);
            if !phi.satisfied_by(&assignment) {
                bail!("extracted assignment does not satisfy the input formula");
            }
            for (i, value) in assignment.iter().enumerate() {
                writeln!(out, "x{}={}", i + 1, if *value { "TRUE" } else { "FALSE" })?;
            }
            Ok(Outcome::Yes)
        }
        Command::Selftest => selftest(out),
    }
}

fn selftest(out: &mut dyn Write) -> Result<Outcome> {
    let mut all = true;
    let mut report = |name: &str, ok: bool, out: &mut dyn Write| -> Result<()> {
        all &= ok;
        writeln!(out, "{} {name}", if ok { "PASS" } else { "FAIL" })?;
        Ok(())
    };

    let mut paths_ok = true;
    for n in 1..=8 {
        for k in 1..=n {
            let fast = rolecol::path::path_k_colourable(n, k)?;
            let slow = oracle::solve_exact(&Graph::path(n)?, k)?.is_some();
            paths_ok &= fast == slow;
        }
    }
    report("path lemma agrees with exhaustive search (n <= 8)", paths_ok, out)?;

    let mut trees_ok = true;
    for n in 1..=6 {
        for edges in rolecol::tree::prufer::unlabelled_trees(n) {
            let t = Graph::new(n, &edges)?;
            for k in 1..=n {
                trees_ok &= rolecol::tree::solve_tree(&t, k)?.is_some() == oracle::solve_exact(&t, k)?.is_some();
            }
        }
    }
    report("tree solver agrees with exhaustive search (n <= 6)", trees_ok, out)?;

    let c4 = Graph::cycle(4)?;
    let cographs_ok = (2..=4).all(|k| rolecol::cograph::k_role_colour(&c4, k).is_ok());
    report("cograph colourings of C4 for k = 2..4", cographs_ok, out)?;

    let phi = CnfFormula::new(2, vec![vec![1, 2], vec![-2]])?;
    let rg = sat::build_reduction_k2(&phi)?;
    let rc = sat::assignment_to_colouring(&rg, &[true, false])?;
    let back = sat::colouring_to_assignment(&rg, &rc)?;
    report("2-colour reduction round trip", rg.graph.n() == 12 && back == vec![true, false], out)?;
    report("2-colour reduction equivalence", sat::verify_reduction_small(&phi, 2)?, out)?;

    Ok(if all { Outcome::Yes } else { Outcome::No })
}
