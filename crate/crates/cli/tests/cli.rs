use std::path::{Path, PathBuf};
use std::process::Command;

use rolecol::{io, oracle, sat, Graph, Method};
use tempfile::TempDir;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["rolecol"];
    argv.extend_from_slice(args);
    let code = rolecol_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const FIG1_CNF: &str = "c (x1 or x2) and (not x2)\np cnf 2 2\n1 2 0\n-2 0\n";

#[test]
fn solve_path_fixture() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p4.col", &io::write_graph(&Graph::path(5).unwrap()));
    let (code, out, _) = run(&["solve", "--k", "2", "--input", s(&p)]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"k\":2,\"colours\":[1,2,1,2,1]}\n");
    // at k = 4 the admissible lengths are 4, 7, 10, ... and 8, 15, ...
    let (code, out, _) = run(&["solve", "--k", "4", "--input", s(&p)]);
    assert_eq!((code, out.as_str()), (1, "null\n"));
}

#[test]
fn figure_one_pipeline() {
    let dir = TempDir::new().unwrap();
    let cnf = write(&dir, "fig1.cnf", FIG1_CNF);
    let graph = dir.path().join("fig1.col");
    let (code, out, _) = run(&["reduce", "--cnf", s(&cnf), "--k", "2", "--out", s(&graph)]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("\"vertices\":12"));
    assert!(dir.path().join("fig1.col.labels.json").exists());

    let (code, colouring, _) = run(&["oracle", "--input", s(&graph)]);
    assert_eq!(code, 0);
    let c = write(&dir, "c.json", &colouring);
    let (code, out, _) = run(&["verify", "--input", s(&graph), "--colouring", s(&c)]);
    assert_eq!((code, out.as_str()), (0, "valid\n"));
    let (code, out, _) = run(&["extract", "--cnf", s(&cnf), "--k", "2", "--graph", s(&graph), "--colouring", s(&c)]);
    assert_eq!(code, 0);
    assert_eq!(out, "x1=TRUE\nx2=FALSE\n");

    let (code, out, _) = run(&["rolegraph", "--input", s(&graph), "--colouring", s(&c)]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("k 2"));
}

#[test]
fn figure_one_depicted_colouring_verifies() {
    let dir = TempDir::new().unwrap();
    let phi = io::parse_cnf(FIG1_CNF).unwrap();
    let rg = sat::build_reduction_k2(&phi).unwrap();
    let g = write(&dir, "g.col", &io::write_graph(&rg.graph));
    let rc = sat::assignment_to_colouring(&rg, &[true, false]).unwrap();
    let c = write(&dir, "c.json", &io::write_colouring(&rc));
    assert_eq!(run(&["verify", "--input", s(&g), "--colouring", s(&c)]).0, 0);
    // flipping one vertex breaks it
    let mut broken = rc.clone();
    broken.colours[0] = 1;
    let c2 = write(&dir, "c2.json", &io::write_colouring(&broken));
    assert_eq!(run(&["verify", "--input", s(&g), "--colouring", s(&c2)]).0, 1);
}

#[test]
fn errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.col", "p edge 3 1\ne 1 x\n");
    let (code, _, err) = run(&["solve", "--k", "1", "--input", s(&bad)]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    let cycle = write(&dir, "c5.col", &io::write_graph(&Graph::cycle(5).unwrap()));
    let (code, _, err) = run(&["solve", "--k", "2", "--input", s(&cycle), "--method", "tree"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a tree"), "{err}");
    assert_eq!(run(&["solve", "--k", "2", "--input", s(&cycle), "--method", "cograph"]).0, 2);
    assert_eq!(run(&["solve", "--k", "9", "--input", s(&cycle)]).0, 2);
    assert_eq!(run(&["solve", "--input", s(&cycle)]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["oracle", "--input", s(&cycle)]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

/// Fixtures across all graph classes, n <= 10.
fn fixtures() -> Vec<Graph> {
    let mut gs = vec![
        Graph::path(7).unwrap(),
        Graph::path(10).unwrap(),
        Graph::star(5).unwrap(),
        Graph::new(8, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap(),
        Graph::cycle(4).unwrap(),
        Graph::complete(5).unwrap(),
        Graph::cycle(6).unwrap(),
        Graph::new(6, &[(1, 2), (3, 4), (4, 5), (3, 5)]).unwrap(),
        Graph::complete(3).unwrap().join(&Graph::empty(3).unwrap()),
        Graph::new(3, &[(1, 2)]).unwrap().join(&Graph::new(3, &[(1, 2)]).unwrap()),
    ];
    // Petersen graph: not a cograph, not a tree
    let mut pet = Vec::new();
    for i in 0..5 {
        pet.extend([(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]);
    }
    gs.push(Graph::new(10, &pet).unwrap());
    gs
}

#[test]
fn auto_and_brute_agree() {
    let dir = TempDir::new().unwrap();
    for (i, g) in fixtures().into_iter().enumerate() {
        let f = write(&dir, &format!("g{i}.col"), &io::write_graph(&g));
        for k in 1..=g.n() {
            let k_s = k.to_string();
            let (auto, a_out, _) = run(&["solve", "--k", &k_s, "--input", s(&f)]);
            let (brute, _, _) = run(&["solve", "--k", &k_s, "--input", s(&f), "--method", "brute"]);
            assert_eq!(auto, brute, "graph {i}, k={k}");
            // independent check of the decision
            let truth = oracle::solve_exact(&g, k).unwrap().is_some();
            assert_eq!(auto == 0, truth, "graph {i}, k={k}");
            if auto == 0 {
                let rc = io::parse_colouring(&a_out).unwrap();
                assert!(rolecol::validate(&g, &rc).unwrap());
            }
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = Graph::complete(3).unwrap().join(&Graph::empty(3).unwrap());
    let f = write(&dir, "g.col", &io::write_graph(&g));
    let first = run(&["solve", "--k", "4", "--input", s(&f)]);
    let second = run(&["solve", "--k", "4", "--input", s(&f)]);
    assert_eq!(first, second);
    let cnf = write(&dir, "f.cnf", FIG1_CNF);
    let a = dir.path().join("a.col");
    let b = dir.path().join("b.col");
    run(&["reduce", "--cnf", s(&cnf), "--k", "3", "--out", s(&a)]);
    run(&["reduce", "--cnf", s(&cnf), "--k", "3", "--out", s(&b)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let (code, out, _) = run(&["oracle", "--input", s(&f), "--all-k"]);
    assert_eq!(code, 0);
    assert_eq!(out, "{\"n\":6,\"solvable_k\":[1,2,3,4,5,6]}\n");
}

#[test]
fn occurrence_splitting_before_reduction() {
    let dir = TempDir::new().unwrap();
    // x1 in four clauses
    let cnf = write(&dir, "h.cnf", "p cnf 2 4\n1 2 0\n1 0\n1 -2 0\n-1 2 0\n");
    let out = dir.path().join("h.col");
    let (code, stdout, err) = run(&["reduce", "--cnf", s(&cnf), "--k", "2", "--out", s(&out), "--planar-tovey"]);
    assert_eq!(code, 0, "{err}");
    assert!(stdout.contains("\"variables\":5"));
    let g = io::parse_graph(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let phi = io::parse_cnf(&std::fs::read_to_string(&cnf).unwrap()).unwrap();
    let split = sat::planar_tovey_transform(&phi, None).unwrap();
    let rg = sat::build_reduction_k2(&split.formula).unwrap();
    let truth = split.formula.solve_by_truth_table().unwrap().unwrap();
    let rc = sat::assignment_to_colouring(&rg, &truth).unwrap();
    let c = write(&dir, "c.json", &io::write_colouring(&rc));
    let (code, stdout, _) = run(&["extract", "--cnf", s(&cnf), "--k", "2", "--graph", s(&out), "--colouring", s(&c), "--planar-tovey"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "x1=TRUE\nx2=TRUE\n");
    assert_eq!(g, rg.graph);
}

#[test]
fn binary_honours_oracle_limit() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c5.col", &io::write_graph(&Graph::cycle(5).unwrap()));
    let bin = env!("CARGO_BIN_EXE_rolecol");
    let out = Command::new(bin).args(["solve", "--k", "5", "--input", s(&f)]).env("ROLECOL_ORACLE_LIMIT", "4").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ROLECOL_ORACLE_LIMIT"));
    let out = Command::new(bin).args(["solve", "--k", "5", "--input", s(&f)]).env("ROLECOL_ORACLE_LIMIT", "20").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let out = Command::new(bin).arg("selftest").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn method_enum_matches_library() {
    assert_eq!("cograph".parse::<Method>().unwrap(), Method::Cograph);
}
