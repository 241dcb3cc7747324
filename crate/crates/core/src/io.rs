//! Text formats: DIMACS-style graphs (`p edge n m` / `e u v`, 1-indexed),
//! DIMACS CNF, colouring JSON, DOT, and the label sidecar of reduction graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::graph::Graph;
use crate::role::{RoleColouring, RoleGraph};
use crate::sat::{CnfFormula, ReductionGraph};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(t) if t.starts_with('c') => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token.parse().map_err(|_| parse_err(line, format!("expected {what}, found {token:?}")))
}

/// Parses a graph in DIMACS edge format. Comment lines start with `c`;
/// the header must precede every edge and the number of edge lines must
/// match it.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, tokens) in content_lines(text) {
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                if tokens.len() != 4 || !matches!(tokens[1], "edge" | "col") {
                    return Err(parse_err(line, "expected `p edge <n> <m>`"));
                }
                let n: usize = number(tokens[2], line, "vertex count")?;
                if n == 0 {
                    return Err(parse_err(line, "graph must have at least one vertex"));
                }
                header = Some((n, number(tokens[3], line, "edge count")?, line));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(parse_err(line, "edge before the `p edge` line"));
                };
                if tokens.len() != 3 {
                    return Err(parse_err(line, "expected `e <u> <v>`"));
                }
                let u: usize = number(tokens[1], line, "vertex id")?;
                let v: usize = number(tokens[2], line, "vertex id")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_err(line, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
    }
    let Some((n, m, at)) = header else {
        return Err(parse_err(text.lines().count().max(1), "missing `p edge <n> <m>` line"));
    };
    if edges.len() != m {
        return Err(parse_err(at, format!("header announces {m} edges but {} were listed", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses `{"k": K, "colours": [...]}` and checks the colour range.
pub fn parse_colouring(text: &str) -> Result<RoleColouring> {
    let raw: RoleColouring = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    RoleColouring::new(raw.k, raw.colours)
}

pub fn write_colouring(rc: &RoleColouring) -> String {
    serde_json::to_string(rc).expect("colourings serialize") + "\n"
}

/// DOT for a graph; vertices are numbered from 1 as in the text format,
/// optionally carrying labels and colour classes.
pub fn graph_to_dot(g: &Graph, colouring: Option<&RoleColouring>, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let mut attrs = Vec::new();
        if let Some(names) = labels {
            attrs.push(format!("label={}", quote(&names[v])));
        }
        if let Some(rc) = colouring {
            attrs.push(format!("colour_class={}", rc.colours[v]));
            attrs.push(format!("xlabel=\"{}\"", rc.colours[v]));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {};", v + 1);
        } else {
            let _ = writeln!(out, "  {} [{}];", v + 1, attrs.join(", "));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

/// DOT for a role graph, self-loops drawn as `c -- c`.
pub fn role_graph_to_dot(r: &RoleGraph) -> String {
    let mut out = String::from("graph R {\n");
    for c in 1..=r.k {
        let _ = writeln!(out, "  {c};");
    }
    for &(c, d) in &r.edges {
        let _ = writeln!(out, "  {c} -- {d};");
    }
    for &c in &r.loops {
        let _ = writeln!(out, "  {c} -- {c};");
    }
    out.push_str("}\n");
    out
}

/// Plain-text role graph: `k`, then one `c d` line per edge and `c c` per loop.
pub fn write_role_graph(r: &RoleGraph) -> String {
    let mut out = format!("k {}\n", r.k);
    for &(c, d) in &r.edges {
        let _ = writeln!(out, "{c} {d}");
    }
    for &c in &r.loops {
        let _ = writeln!(out, "{c} {c}");
    }
    out
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Parses DIMACS CNF. Clauses are 0-terminated and may span lines; a line
/// holding only `%` ends the input.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    let mut last_line = 1;
    for (line, tokens) in content_lines(text) {
        last_line = line;
        if tokens[0] == "%" {
            break;
        }
        if tokens[0] == "p" {
            if header.is_some() {
                return Err(parse_err(line, "second problem line"));
            }
            if tokens.len() != 4 || tokens[1] != "cnf" {
                return Err(parse_err(line, "expected `p cnf <vars> <clauses>`"));
            }
            header = Some((number(tokens[2], line, "variable count")?, number(tokens[3], line, "clause count")?, line));
            continue;
        }
        let Some((vars, _, _)) = header else {
            return Err(parse_err(line, "clause before the `p cnf` line"));
        };
        for tok in tokens {
            let lit: i64 = number(tok, line, "literal")?;
            if lit == 0 {
                if current.is_empty() {
                    return Err(parse_err(line, "empty clause"));
                }
                let clause = std::mem::take(&mut current);
                CnfFormula::new(vars, vec![clause.clone()]).map_err(|e| parse_err(line, e.to_string()))?;
                clauses.push(clause);
            } else {
                current.push(lit);
            }
        }
    }
    let Some((vars, count, at)) = header else {
        return Err(parse_err(last_line, "missing `p cnf <vars> <clauses>` line"));
    };
    if !current.is_empty() {
        return Err(parse_err(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != count {
        return Err(parse_err(at, format!("header announces {count} clauses but {} were listed", clauses.len())));
    }
    CnfFormula::new(vars, clauses)
}

pub fn write_cnf(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars, phi.clauses.len());
    for clause in &phi.clauses {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Label sidecar of a reduction graph, keyed by 1-based vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelSidecar {
    pub vertex_labels: BTreeMap<String, String>,
    pub k: usize,
}

/// `{"vertex_labels": {"1": "C1", ...}, "k": K}` with keys in vertex order.
pub fn write_labels(rg: &ReductionGraph) -> String {
    let mut out = String::from("{\"vertex_labels\": {");
    for (i, label) in rg.labels.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "\"{}\": {}", i + 1, quote(label));
    }
    let _ = writeln!(out, "}}, \"k\": {}}}", rg.k);
    out
}

/// Labels in vertex order, checked to cover `1..=n` exactly.
pub fn parse_labels(text: &str) -> Result<(Vec<String>, usize)> {
    let side: LabelSidecar = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let n = side.vertex_labels.len();
    let mut labels = vec![String::new(); n];
    for (key, label) in side.vertex_labels {
        let v: usize = key.parse().map_err(|_| Error::Parse { line: 1, message: format!("bad vertex key {key:?}") })?;
        if v == 0 || v > n || !labels[v - 1].is_empty() {
            return Err(parse_err(1, format!("vertex key {key} does not fit 1..={n}")));
        }
        labels[v - 1] = label;
    }
    Ok((labels, side.k))
}
