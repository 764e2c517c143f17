//! Deterministic instance generators.
//!
//! Families are addressed by compact descriptors such as `path:5`,
//! `corona:complete:3`, `random:8:0.4`, `pendant-heavy:2:42` or
//! `bounded-cover:9:3`; together with a seed a descriptor reconstructs the
//! instance exactly.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{corona, Graph};

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

/// `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (0, v))).unwrap()
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::new(10, edges).unwrap()
}

/// `K_n ∘ K_1`: clique on `0..n`, pendant `n + v` hanging off `v`.
pub fn clique_corona(n: usize) -> Graph {
    corona(&complete(n), &Graph::empty(1))
}

/// Erdős–Rényi `G(n, prob)` conditioned on connectivity by rejection.
pub fn random_connected(n: usize, prob: f64, seed: u64) -> Result<Graph> {
    if n == 0 || !(0.0..=1.0).contains(&prob) {
        return Err(Error::InvalidArgument(format!(
            "random graph needs n >= 1 and 0 <= p <= 1, got n={n}, p={prob}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(prob) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no connected G({n}, {prob}) found after 100000 draws"
    )))
}

/// A connected graph with vertex cover number exactly `p` and exactly
/// `bridges` edge separators, all of them pendant edges.
///
/// Layout: centers `0..p` (the unique minimum cover), then connector vertices
/// adjacent to two or more centers, then pendants. Every center gets at least
/// two pendants and the surplus goes to center 0. Consecutive centers are
/// joined through connectors (plus optionally a direct edge) so that the
/// center block is 2-edge-connected; extra center edges and extra connectors
/// are drawn from the seed. For `p = 1` this is the star `K_{1,bridges}`.
pub fn pendant_heavy(p: usize, bridges: usize, seed: u64) -> Result<Graph> {
    if p == 0 {
        return Err(Error::InvalidArgument("pendant-heavy needs p >= 1".into()));
    }
    if p == 1 {
        if bridges == 0 {
            return Err(Error::InvalidArgument(
                "pendant-heavy with p = 1 needs at least one bridge".into(),
            ));
        }
        return Ok(star(bridges + 1));
    }
    if bridges < 2 * p {
        return Err(Error::InvalidArgument(format!(
            "pendant-heavy with p = {p} needs at least {} bridges",
            2 * p
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut next = p;
    for i in 0..p - 1 {
        let direct = rng.gen_bool(0.5);
        if direct {
            edges.push((i, i + 1));
        }
        let connectors = if direct {
            rng.gen_range(1..=3)
        } else {
            rng.gen_range(2..=3)
        };
        for _ in 0..connectors {
            edges.push((i, next));
            edges.push((i + 1, next));
            next += 1;
        }
    }
    for i in 0..p {
        for j in i + 2..p {
            if rng.gen_bool(0.3) {
                edges.push((i, j));
            }
        }
    }
    // connectors with random neighborhoods of size >= 2
    for _ in 0..rng.gen_range(0..=p) {
        let mut nbrs: Vec<usize> = (0..p).filter(|_| rng.gen_bool(0.5)).collect();
        while nbrs.len() < 2 {
            let c = rng.gen_range(0..p);
            if !nbrs.contains(&c) {
                nbrs.push(c);
            }
        }
        for c in nbrs {
            edges.push((c, next));
        }
        next += 1;
    }
    let mut counts = vec![2; p];
    counts[0] += bridges - 2 * p;
    for (c, &count) in counts.iter().enumerate() {
        for _ in 0..count {
            edges.push((c, next));
            next += 1;
        }
    }
    Graph::new(next, edges)
}

/// A connected graph on `n` vertices whose edges all touch `0..p`, so its
/// vertex cover number is at most `p`. Each outside vertex picks a random
/// nonempty set of cover neighbors; cover pairs are joined with probability
/// 1/2. Connectivity is enforced by rejection.
pub fn bounded_cover(n: usize, p: usize, seed: u64) -> Result<Graph> {
    if p == 0 || p > n || (p == n && n > 1) {
        return Err(Error::InvalidArgument(format!(
            "bounded-cover needs 1 <= p < n (or n = p = 1), got n={n}, p={p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100_000 {
        let mut edges = Vec::new();
        for u in 0..p {
            for v in u + 1..p {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        for v in p..n {
            let mask = rng.gen_range(1..1u32 << p);
            edges.extend((0..p).filter(|&c| mask >> c & 1 == 1).map(|c| (c, v)));
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidArgument(format!(
        "no connected bounded-cover graph found for n={n}, p={p}"
    )))
}

/// Every connected graph on `n` vertices, one per isomorphism class, in a
/// fixed order. Exhaustive; meant for `n <= 7`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .map(|key| from_key(n, key))
        .filter(Graph::is_connected)
        .collect()
}

/// Canonical keys of all graphs on `n` vertices, built by adding one vertex
/// at a time to every smaller class.
fn all_graphs(n: usize) -> Vec<u64> {
    assert!(n <= 11, "exhaustive enumeration is limited to 11 vertices");
    let mut layer: Vec<u64> = vec![0];
    for size in 1..n {
        let mut next = std::collections::BTreeSet::new();
        for &key in &layer {
            let base = from_key(size, key);
            for nbrs in 0u32..(1 << size) {
                let mut edges = base.edges().to_vec();
                edges.extend((0..size).filter(|&u| nbrs >> u & 1 == 1).map(|u| (u, size)));
                next.insert(canonical_key(&Graph::new(size + 1, edges).unwrap()));
            }
        }
        layer = next.into_iter().collect();
    }
    if n == 0 {
        Vec::new()
    } else {
        layer
    }
}

/// Bit `i` of the key is pair `i` in row-major order over `u < v`.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn from_key(n: usize, key: u64) -> Graph {
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| key >> pair_index(n, u, v) & 1 == 1);
    Graph::new(n, edges).unwrap()
}

/// Largest key over relabelings that list vertices by descending degree.
/// Isomorphic graphs share the set of such relabelings up to composition, so
/// they share the key.
fn canonical_key(g: &Graph) -> u64 {
    use itertools::Itertools;
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let blocks: Vec<Vec<usize>> = by_degree
        .chunk_by(|&a, &b| g.degree(a) == g.degree(b))
        .map(<[usize]>::to_vec)
        .collect();
    let mut best = 0;
    for choice in blocks
        .iter()
        .map(|b| b.iter().copied().permutations(b.len()))
        .multi_cartesian_product()
    {
        let order: Vec<usize> = choice.concat();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let key = g.edges().iter().fold(0u64, |k, &(u, v)| {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            k | 1 << pair_index(n, a, b)
        });
        best = best.max(key);
    }
    best
}

/// A generator family with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Petersen,
    /// `base ∘ K_1`.
    Corona(Box<Family>),
    RandomConnected { n: usize, prob: f64 },
    PendantHeavy { p: usize, bridges: usize },
    BoundedCover { n: usize, p: usize },
}

impl Family {
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        Ok(match self {
            Family::Path(n) if *n >= 1 => path(*n),
            Family::Cycle(n) if *n >= 3 => cycle(*n),
            Family::Complete(n) if *n >= 1 => complete(*n),
            Family::Star(n) if *n >= 1 => star(*n),
            Family::Petersen => petersen(),
            Family::Corona(base) => corona(&base.generate(seed)?, &Graph::empty(1)),
            Family::RandomConnected { n, prob } => random_connected(*n, *prob, seed)?,
            Family::PendantHeavy { p, bridges } => pendant_heavy(*p, *bridges, seed)?,
            Family::BoundedCover { n, p } => bounded_cover(*n, *p, seed)?,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "invalid parameters for family {other}"
                )))
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Corona(base) => write!(f, "corona:{base}"),
            Family::RandomConnected { n, prob } => write!(f, "random:{n}:{prob}"),
            Family::PendantHeavy { p, bridges } => write!(f, "pendant-heavy:{p}:{bridges}"),
            Family::BoundedCover { n, p } => write!(f, "bounded-cover:{n}:{p}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown family descriptor '{s}'"));
        let (head, rest) = s.split_once(':').unwrap_or((s, ""));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        Ok(match head {
            "path" => Family::Path(num(rest)?),
            "cycle" => Family::Cycle(num(rest)?),
            "complete" => Family::Complete(num(rest)?),
            "star" => Family::Star(num(rest)?),
            "petersen" if rest.is_empty() => Family::Petersen,
            "corona" => Family::Corona(Box::new(rest.parse()?)),
            "random" => {
                let (n, p) = rest.split_once(':').ok_or_else(bad)?;
                Family::RandomConnected {
                    n: num(n)?,
                    prob: p.parse().map_err(|_| bad())?,
                }
            }
            "pendant-heavy" => {
                let (p, b) = rest.split_once(':').ok_or_else(bad)?;
                Family::PendantHeavy {
                    p: num(p)?,
                    bridges: num(b)?,
                }
            }
            "bounded-cover" => {
                let (n, p) = rest.split_once(':').ok_or_else(bad)?;
                Family::BoundedCover {
                    n: num(n)?,
                    p: num(p)?,
                }
            }
            _ => return Err(bad()),
        })
    }
}

impl From<Family> for String {
    fn from(f: Family) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Family {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}
