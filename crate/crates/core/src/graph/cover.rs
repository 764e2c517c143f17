use std::collections::BTreeMap;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub fn is_vertex_cover(g: &Graph, x: &VertexSet) -> bool {
    first_uncovered(g, x).is_none()
}

fn first_uncovered(g: &Graph, x: &VertexSet) -> Option<(usize, usize)> {
    g.edges()
        .iter()
        .copied()
        .find(|&(u, v)| !x.contains(u) && !x.contains(v))
}

pub(crate) fn require_cover(g: &Graph, x: &VertexSet) -> Result<()> {
    if x.universe() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "vertex set over {} ids used with a graph on {} vertices",
            x.universe(),
            g.n()
        )));
    }
    match first_uncovered(g, x) {
        Some((u, v)) => Err(Error::NotACover(u, v)),
        None => Ok(()),
    }
}

/// Exact minimum vertex cover.
///
/// Branches on a maximum-degree vertex (take it, or take its whole
/// neighborhood) after exhausting the degree-0 and degree-1 reduction rules,
/// and prunes with the `remaining edges / max degree` bound.
pub fn min_vertex_cover(g: &Graph) -> VertexSet {
    let mut search = CoverSearch {
        g,
        best: (0..g.n()).filter(|&v| g.degree(v) > 0).collect(),
    };
    let mut alive = vec![true; g.n()];
    let mut chosen = Vec::new();
    search.branch(&mut alive, &mut chosen);
    VertexSet::from_iter(g.n(), search.best)
}

struct CoverSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
}

impl CoverSearch<'_> {
    fn live_degree(&self, alive: &[bool], v: usize) -> usize {
        self.g.neighbors(v).filter(|&w| alive[w]).count()
    }

    fn take(&self, alive: &mut [bool], chosen: &mut Vec<usize>, v: usize) {
        alive[v] = false;
        chosen.push(v);
    }

    fn branch(&mut self, alive: &mut Vec<bool>, chosen: &mut Vec<usize>) {
        // kernelize
        loop {
            let mut changed = false;
            for v in 0..self.g.n() {
                if !alive[v] {
                    continue;
                }
                match self.live_degree(alive, v) {
                    0 => {
                        alive[v] = false;
                        changed = true;
                    }
                    1 => {
                        let u = self.g.neighbors(v).find(|&w| alive[w]).unwrap();
                        self.take(alive, chosen, u);
                        alive[v] = false;
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        if chosen.len() >= self.best.len() {
            return;
        }

        let mut edges_left = 0;
        let mut pivot = None;
        let mut max_deg = 0;
        for v in 0..self.g.n() {
            if !alive[v] {
                continue;
            }
            let d = self.live_degree(alive, v);
            edges_left += d;
            if d > max_deg {
                max_deg = d;
                pivot = Some(v);
            }
        }
        edges_left /= 2;
        let Some(v) = pivot else {
            self.best = chosen.clone();
            return;
        };
        if chosen.len() + edges_left.div_ceil(max_deg) >= self.best.len() {
            return;
        }

        {
            let mut alive2 = alive.clone();
            let mut chosen2 = chosen.clone();
            self.take(&mut alive2, &mut chosen2, v);
            self.branch(&mut alive2, &mut chosen2);
        }
        {
            let neighborhood: Vec<usize> = self.g.neighbors(v).filter(|&w| alive[w]).collect();
            for w in neighborhood {
                self.take(alive, chosen, w);
            }
            alive[v] = false;
            self.branch(alive, chosen);
        }
    }
}

/// Vertices outside a cover sharing one neighborhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeClass {
    /// The common neighborhood, a subset of the cover.
    pub neighborhood: VertexSet,
    pub members: VertexSet,
}

/// Partition of `V \ x` into maximal classes with identical neighborhoods,
/// ordered by smallest member.
pub fn neighborhood_types(g: &Graph, x: &VertexSet) -> Result<Vec<TypeClass>> {
    require_cover(g, x)?;
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in (0..g.n()).filter(|&v| !x.contains(v)) {
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        classes.entry(nbrs).or_default().push(v);
    }
    let mut out: Vec<TypeClass> = classes
        .into_iter()
        .map(|(nbrs, members)| TypeClass {
            neighborhood: VertexSet::from_iter(g.n(), nbrs),
            members: VertexSet::from_iter(g.n(), members),
        })
        .collect();
    out.sort_by_key(|t| t.members.iter().next());
    Ok(out)
}
