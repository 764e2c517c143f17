//! Text formats.
//!
//! - Graph edge list: `n m`, then `m` lines `u v`; lines starting with `#`
//!   are comments.
//! - DIMACS: `p edge n m` and `e u v` with 1-based ids; `c` lines are comments.
//! - Coloring: `c <count> <edge|vertex>`, then one `id color` line per element.
//!   Edge ids index the graph's sorted edge list.
//! - Pair set: one `u v` line per pair.
//! - Role table: `id role origin-ids...`.

use std::fmt::Write as _;
use std::path::Path;

use crate::coloring::{Coloring, EdgeColoring, PairSet, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reductions::Role;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines<'a>(
    text: &'a str,
    comment: impl Fn(&str) -> bool + 'a,
) -> impl Iterator<Item = (usize, &'a str)> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(move |(_, l)| !l.is_empty() && !comment(l))
}

fn numbers<const N: usize>(line: usize, fields: &[&str]) -> Result<[usize; N]> {
    if fields.len() != N {
        return Err(parse_err(
            line,
            format!("expected {N} numbers, found {} fields", fields.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line, format!("`{f}` is not a non-negative integer")))?;
    }
    Ok(out)
}

fn edge_list_comment(l: &str) -> bool {
    l.starts_with('#')
}

fn dimacs_comment(l: &str) -> bool {
    l.starts_with('c') && (l.len() == 1 || l.as_bytes()[1].is_ascii_whitespace())
}

/// Reads either graph format, choosing DIMACS when the first content line is
/// a `p` line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = content_lines(text, |l| edge_list_comment(l) || dimacs_comment(l)).next();
    match first {
        Some((_, l)) if l.starts_with("p ") => parse_dimacs(text),
        _ => parse_edge_list(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text, edge_list_comment);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let [n, m] = numbers::<2>(hl, &header.split_whitespace().collect::<Vec<_>>())?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (ln, l) in lines {
        let [u, v] = numbers::<2>(ln, &l.split_whitespace().collect::<Vec<_>>())?;
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("edge {u}-{v} out of range for {n} vertices")));
        }
        edges.push((u, v));
        last = ln;
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 1;
    for (ln, l) in content_lines(text, dimacs_comment) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        last = ln;
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(ln, "duplicate `p` line"));
                }
                if fields.get(1) != Some(&"edge") {
                    return Err(parse_err(ln, "expected `p edge n m`"));
                }
                let [n, m] = numbers::<2>(ln, &fields[2..])?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(ln, "`e` line before `p` line"))?;
                let [u, v] = numbers::<2>(ln, &fields[1..])?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(ln, format!("edge {u}-{v} out of range 1..={n}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(parse_err(ln, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(1, "missing `p edge n m` line"))?;
    if edges.len() != m {
        return Err(parse_err(last, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).unwrap();
    }
    s
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = content_lines(text, edge_list_comment);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `c <count> <edge|vertex>` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "c" {
        return Err(parse_err(hl, "expected `c <count> <edge|vertex>`"));
    }
    let [count] = numbers::<1>(hl, &fields[1..2])?;
    let edge = match fields[2] {
        "edge" => true,
        "vertex" => false,
        other => return Err(parse_err(hl, format!("unknown element kind `{other}`"))),
    };
    let mut colors: Vec<u32> = Vec::new();
    for (ln, l) in lines {
        let [id, color] = numbers::<2>(ln, &l.split_whitespace().collect::<Vec<_>>())?;
        if id != colors.len() {
            return Err(parse_err(ln, format!("expected id {}, found {id}", colors.len())));
        }
        colors.push(u32::try_from(color).map_err(|_| parse_err(ln, "color too large"))?);
    }
    let count = u32::try_from(count).map_err(|_| parse_err(hl, "count too large"))?;
    Ok(if edge {
        Coloring::Edge(EdgeColoring::new(colors, count)?)
    } else {
        Coloring::Vertex(VertexColoring::new(colors, count)?)
    })
}

pub fn write_coloring(col: &Coloring) -> String {
    let kind = match col {
        Coloring::Edge(_) => "edge",
        Coloring::Vertex(_) => "vertex",
    };
    let mut s = format!("c {} {kind}\n", col.count());
    for (id, c) in col.colors().iter().enumerate() {
        writeln!(s, "{id} {c}").unwrap();
    }
    s
}

pub fn parse_pairs(text: &str) -> Result<PairSet> {
    let mut set = PairSet::new();
    for (ln, l) in content_lines(text, edge_list_comment) {
        let [a, b] = numbers::<2>(ln, &l.split_whitespace().collect::<Vec<_>>())?;
        set.insert(a, b).map_err(|e| parse_err(ln, e.to_string()))?;
    }
    Ok(set)
}

pub fn write_pairs(pairs: &PairSet) -> String {
    pairs.iter().fold(String::new(), |mut s, (a, b)| {
        writeln!(s, "{a} {b}").unwrap();
        s
    })
}

pub fn write_roles(roles: &[Role]) -> String {
    roles.iter().enumerate().fold(String::new(), |mut s, (id, r)| {
        writeln!(s, "{id} {r}").unwrap();
        s
    })
}

/// DOT rendering with each vertex labelled by its role.
pub fn roles_to_dot(g: &Graph, roles: &[Role]) -> String {
    let labels: Vec<String> = roles.iter().map(|r| r.to_string()).collect();
    g.to_dot(Some(&labels))
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph(&read(path.as_ref())?)
}

pub fn load_coloring(path: impl AsRef<Path>) -> Result<Coloring> {
    parse_coloring(&read(path.as_ref())?)
}

pub fn load_pairs(path: impl AsRef<Path>) -> Result<PairSet> {
    parse_pairs(&read(path.as_ref())?)
}
