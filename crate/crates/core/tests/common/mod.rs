//! Exhaustive reference implementations. Slow by design; small graphs only.
#![allow(dead_code)]

use std::collections::VecDeque;

use itertools::Itertools;
use rainbow::{Coloring, EdgeColoring, Graph, PairSet, Variant, VertexColoring};

pub fn distances_from(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for w in g.neighbors(u) {
            if d[w] == usize::MAX {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// Calls `visit` with the vertex sequence of every simple `a`-`b` path.
fn for_each_path(g: &Graph, a: usize, b: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(
        g: &Graph,
        b: usize,
        path: &mut Vec<usize>,
        on: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let u = *path.last().unwrap();
        if u == b {
            return visit(path);
        }
        for w in g.neighbors(u).collect::<Vec<_>>() {
            if !on[w] {
                on[w] = true;
                path.push(w);
                let found = go(g, b, path, on, visit);
                path.pop();
                on[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
    let mut on = vec![false; g.n()];
    on[a] = true;
    go(g, b, &mut vec![a], &mut on, visit)
}

fn all_distinct(colors: impl Iterator<Item = u32>) -> bool {
    let mut seen = std::collections::HashSet::new();
    colors.into_iter().all(|c| seen.insert(c))
}

/// Pairs a variant has to connect.
pub fn checked_pairs(g: &Graph, variant: &Variant) -> Vec<(usize, usize)> {
    match variant {
        Variant::Ssrvc(p) => p.iter().collect(),
        _ => (0..g.n()).tuple_combinations().collect(),
    }
}

/// Is some `a`-`b` path (shortest, for strong variants) rainbow?
pub fn naive_pair_ok(g: &Graph, variant: &Variant, col: &Coloring, a: usize, b: usize) -> bool {
    let dist = distances_from(g, a)[b];
    if dist == usize::MAX {
        return false;
    }
    for_each_path(g, a, b, &mut |path| {
        if variant.is_strong() && path.len() - 1 != dist {
            return false;
        }
        match col {
            Coloring::Edge(c) => all_distinct(
                path.windows(2)
                    .map(|w| c.color(g.edge_id(w[0], w[1]).unwrap())),
            ),
            Coloring::Vertex(c) => all_distinct(path[1..path.len() - 1].iter().map(|&v| c.color(v))),
        }
    })
}

/// First failing pair by exhaustive path enumeration, `None` if every
/// checked pair has a rainbow path.
pub fn naive_verify(g: &Graph, variant: &Variant, col: &Coloring) -> Option<(usize, usize)> {
    checked_pairs(g, variant)
        .into_iter()
        .find(|&(a, b)| !naive_pair_ok(g, variant, col, a, b))
}

fn make(g: &Graph, variant: &Variant, colors: Vec<u32>, count: u32) -> Coloring {
    assert_eq!(colors.len(), element_count(g, variant));
    if variant.colors_edges() {
        Coloring::Edge(EdgeColoring::new(colors, count).unwrap())
    } else {
        Coloring::Vertex(VertexColoring::new(colors, count).unwrap())
    }
}

pub fn element_count(g: &Graph, variant: &Variant) -> usize {
    if variant.colors_edges() {
        g.m()
    } else {
        g.n()
    }
}

/// Every coloring with exactly the palette `1..=c`.
pub fn all_colorings<'a>(g: &'a Graph, variant: &Variant, c: u32) -> impl Iterator<Item = Coloring> + 'a {
    let size = element_count(g, variant);
    let variant = variant.clone();
    (0..size)
        .map(|_| 1..=c)
        .multi_cartesian_product()
        .map(move |colors| make(g, &variant, colors, c))
}

/// Smallest palette with a valid coloring, by trying every coloring of
/// every palette size. Palette 0 is valid when no checked pair needs a
/// colored element: no edges at all, or (vertex variants) every checked pair
/// adjacent.
pub fn brute_optimum(g: &Graph, variant: &Variant) -> usize {
    let zero_ok = if variant.colors_edges() {
        g.m() == 0
    } else {
        checked_pairs(g, variant)
            .iter()
            .all(|&(a, b)| g.has_edge(a, b))
    };
    if zero_ok {
        return 0;
    }
    (1..)
        .find(|&c| {
            if element_count(g, variant) == 0 {
                return naive_verify(g, variant, &make(g, variant, vec![], c)).is_none();
            }
            all_colorings(g, variant, c).any(|col| naive_verify(g, variant, &col).is_none())
        })
        .unwrap() as usize
}

pub fn brute_chromatic_ok(g: &Graph, k: u32) -> bool {
    if g.n() == 0 {
        return true;
    }
    (0..g.n())
        .map(|_| 1..=k)
        .multi_cartesian_product()
        .any(|c| g.edges().iter().all(|&(u, v)| c[u] != c[v]))
}

pub fn brute_min_cover(g: &Graph) -> usize {
    (0..=g.n())
        .find(|&size| {
            (0..g.n()).combinations(size).any(|x| {
                g.edges()
                    .iter()
                    .all(|&(u, v)| x.contains(&u) || x.contains(&v))
            })
        })
        .unwrap()
}

/// Every spanning tree, as a graph on the same vertex set.
pub fn spanning_trees(g: &Graph) -> Vec<Graph> {
    if g.n() == 0 {
        return vec![];
    }
    (0..g.m())
        .combinations(g.n() - 1)
        .map(|ids| g.spanning_subgraph(ids))
        .filter(|t| t.is_connected())
        .collect()
}

pub fn tree_diameter(t: &Graph) -> usize {
    (0..t.n())
        .map(|s| distances_from(t, s).into_iter().max().unwrap())
        .max()
        .unwrap_or(0)
}

pub fn leaves(t: &Graph) -> usize {
    (0..t.n()).filter(|&v| t.degree(v) == 1).count()
}

/// Edges whose removal disconnects the graph.
pub fn brute_bridges(g: &Graph) -> Vec<usize> {
    (0..g.m())
        .filter(|&e| !g.spanning_subgraph((0..g.m()).filter(|&f| f != e)).is_connected())
        .collect()
}

/// Random pair set over `0..n` drawn from `rng`.
pub fn random_pairs(n: usize, rng: &mut impl rand::Rng) -> PairSet {
    let mut p = PairSet::new();
    for (a, b) in (0..n).tuple_combinations() {
        if rng.gen_bool(0.4) {
            p.insert(a, b).unwrap();
        }
    }
    p
}

/// 200 connected graphs on 2..=8 vertices at mixed densities.
pub fn random_corpus() -> Vec<(String, Graph)> {
    let probs = [0.25, 0.35, 0.5, 0.7, 0.9];
    (0..200u64)
        .map(|seed| {
            let n = 2 + (seed % 7) as usize;
            let prob = probs[(seed / 7) as usize % probs.len()];
            let g = rainbow::generate::random_connected(n, prob, seed).unwrap();
            (format!("random:{n}:{prob} seed {seed}"), g)
        })
        .collect()
}

/// 100 connected graphs on at most 10 vertices with vertex cover number at most 3.
pub fn small_cover_corpus() -> Vec<(String, Graph)> {
    (0..100u64)
        .map(|seed| {
            let p = 1 + (seed % 3) as usize;
            let n = (p + 1 + (seed / 3) as usize % (10 - p)).min(10);
            let g = rainbow::generate::bounded_cover(n, p, seed).unwrap();
            (format!("bounded-cover:{n}:{p} seed {seed}"), g)
        })
        .collect()
}
