//! Certificate checkers for the four rainbow connectivity notions and the
//! subset variant.
//!
//! Every check is a reachability search over states `(vertex, used colors)`
//! from each source. A walk whose colors never repeat shortcuts to a path
//! whose colors never repeat, so walk reachability decides path existence.
//! Strong variants walk only along the shortest-path DAG of the source.
//!
//! Only colors that occur on two or more elements are tracked in the subset
//! mask; a color carried by a single element can never repeat on a path. This
//! makes colorings with many singleton colors cheap and keeps the mask within
//! one machine word in practice.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, EdgeColoring, PairSet, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Graph};

/// Number of distinct repeated colors a check can track.
pub const MASK_CAPACITY: usize = u64::BITS as usize;

/// Which connectivity notion a coloring is checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", content = "pairs", rename_all = "lowercase")]
pub enum Variant {
    Rc,
    Src,
    Rvc,
    Srvc,
    /// Strong vertex connectivity required only for the listed pairs.
    Ssrvc(PairSet),
}

impl Variant {
    pub fn colors_edges(&self) -> bool {
        matches!(self, Variant::Rc | Variant::Src)
    }

    pub fn is_strong(&self) -> bool {
        matches!(self, Variant::Src | Variant::Srvc | Variant::Ssrvc(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Variant::Rc => "rc",
            Variant::Src => "src",
            Variant::Rvc => "rvc",
            Variant::Srvc => "srvc",
            Variant::Ssrvc(_) => "ssrvc",
        }
    }

    pub(crate) fn element(&self) -> Element {
        if self.colors_edges() {
            Element::Edge
        } else {
            Element::Vertex
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a check. On failure, the lexicographically first unconnected pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Rainbow,
    Fails { a: usize, b: usize },
}

impl Verdict {
    pub fn is_rainbow(&self) -> bool {
        matches!(self, Verdict::Rainbow)
    }

    pub fn witness(&self) -> Option<(usize, usize)> {
        match *self {
            Verdict::Rainbow => None,
            Verdict::Fails { a, b } => Some((a, b)),
        }
    }

    fn from_failure(f: Option<(usize, usize)>) -> Self {
        match f {
            None => Verdict::Rainbow,
            Some((a, b)) => Verdict::Fails { a, b },
        }
    }
}

pub fn is_rainbow_edge(g: &Graph, col: &EdgeColoring) -> Result<Verdict> {
    check_edges(g, col, false)
}

pub fn is_strong_rainbow_edge(g: &Graph, col: &EdgeColoring) -> Result<Verdict> {
    check_edges(g, col, true)
}

pub fn is_rainbow_vertex(g: &Graph, col: &VertexColoring) -> Result<Verdict> {
    check_vertices(g, col, false, None)
}

pub fn is_strong_rainbow_vertex(g: &Graph, col: &VertexColoring) -> Result<Verdict> {
    check_vertices(g, col, true, None)
}

/// Strong vertex check restricted to the pairs in `pairs`.
pub fn is_subset_srvc(g: &Graph, col: &VertexColoring, pairs: &PairSet) -> Result<Verdict> {
    pairs.check_against(g)?;
    check_vertices(g, col, true, Some(pairs))
}

/// Dispatches on `variant`; the coloring kind must match it.
pub fn verify(g: &Graph, variant: &Variant, col: &Coloring) -> Result<Verdict> {
    match (variant, col) {
        (Variant::Rc, Coloring::Edge(c)) => is_rainbow_edge(g, c),
        (Variant::Src, Coloring::Edge(c)) => is_strong_rainbow_edge(g, c),
        (Variant::Rvc, Coloring::Vertex(c)) => is_rainbow_vertex(g, c),
        (Variant::Srvc, Coloring::Vertex(c)) => is_strong_rainbow_vertex(g, c),
        (Variant::Ssrvc(p), Coloring::Vertex(c)) => is_subset_srvc(g, c, p),
        _ => Err(Error::InvalidColoring(format!(
            "{variant} needs {} coloring",
            if variant.colors_edges() { "an edge" } else { "a vertex" }
        ))),
    }
}

fn check_edges(g: &Graph, col: &EdgeColoring, strong: bool) -> Result<Verdict> {
    g.require_connected()?;
    col.check_against(g)?;
    let slots = slots_for(col.colors())?;
    let checker = Checker::all_pairs(g, Element::Edge, strong);
    Ok(Verdict::from_failure(checker.first_failure(&slots, usize::MAX)))
}

fn check_vertices(
    g: &Graph,
    col: &VertexColoring,
    strong: bool,
    pairs: Option<&PairSet>,
) -> Result<Verdict> {
    g.require_connected()?;
    col.check_against(g)?;
    let slots = slots_for(col.colors())?;
    let checker = match pairs {
        Some(p) => Checker::for_pairs(g, Element::Vertex, strong, p),
        None => Checker::all_pairs(g, Element::Vertex, strong),
    };
    Ok(Verdict::from_failure(checker.first_failure(&slots, usize::MAX)))
}

/// Tracks repeated colors as mask bits, singletons as free.
fn slots_for(colors: &[u32]) -> Result<Vec<Slot>> {
    let mut occurrences: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in colors {
        *occurrences.entry(c).or_default() += 1;
    }
    let repeated: BTreeMap<u32, u64> = occurrences
        .into_iter()
        .filter(|&(_, k)| k > 1)
        .enumerate()
        .map(|(i, (c, _))| (c, i as u64))
        .collect();
    if repeated.len() > MASK_CAPACITY {
        return Err(Error::Capacity {
            repeated: repeated.len(),
            capacity: MASK_CAPACITY,
        });
    }
    Ok(colors
        .iter()
        .map(|c| match repeated.get(c) {
            Some(&bit) => Slot::Bit(1 << bit),
            None => Slot::Free,
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Element {
    Edge,
    Vertex,
}

/// Per-element color state seen by the checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Slot {
    /// Never conflicts: an uncolored element during search, or a singleton color.
    Free,
    Bit(u64),
}

/// Reusable pair checker over one graph; the solver runs it on partial
/// colorings, with `max_len` bounding the number of colored elements a
/// rainbow path may carry.
pub(crate) struct Checker<'g> {
    g: &'g Graph,
    element: Element,
    strong: bool,
    /// `(source, sorted targets, distances from source if strong)`
    sources: Vec<(usize, Vec<usize>, Vec<usize>)>,
}

impl<'g> Checker<'g> {
    pub(crate) fn all_pairs(g: &'g Graph, element: Element, strong: bool) -> Self {
        let mut per_source: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for s in 0..g.n() {
            for t in s + 1..g.n() {
                per_source.entry(s).or_default().push(t);
            }
        }
        Self::build(g, element, strong, per_source)
    }

    pub(crate) fn for_pairs(g: &'g Graph, element: Element, strong: bool, pairs: &PairSet) -> Self {
        let mut per_source: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (a, b) in pairs.iter() {
            per_source.entry(a).or_default().push(b);
        }
        Self::build(g, element, strong, per_source)
    }

    fn build(
        g: &'g Graph,
        element: Element,
        strong: bool,
        per_source: BTreeMap<usize, Vec<usize>>,
    ) -> Self {
        let sources = per_source
            .into_iter()
            .filter_map(|(s, mut targets)| {
                // adjacent pairs are joined by a single edge with no internal vertex
                targets.retain(|&t| !g.has_edge(s, t));
                targets.sort_unstable();
                targets.dedup();
                if targets.is_empty() {
                    return None;
                }
                let dist = if strong { bfs_distances(g, s) } else { Vec::new() };
                Some((s, targets, dist))
            })
            .collect();
        Checker {
            g,
            element,
            strong,
            sources,
        }
    }

    /// Pairs the checker examines, adjacent ones excluded.
    pub(crate) fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.sources
            .iter()
            .flat_map(|(s, ts, _)| ts.iter().map(move |&t| (*s, t)))
    }

    pub(crate) fn first_failure(&self, slots: &[Slot], max_len: usize) -> Option<(usize, usize)> {
        for (s, targets, dist) in &self.sources {
            let reached = self.reach(*s, targets, dist, slots, max_len);
            if let Some(&t) = targets.iter().find(|&&t| !reached[t]) {
                return Some((*s, t));
            }
        }
        None
    }

    fn reach(
        &self,
        s: usize,
        targets: &[usize],
        dist: &[usize],
        slots: &[Slot],
        max_len: usize,
    ) -> Vec<bool> {
        let g = self.g;
        let n = g.n();
        let mut is_target = vec![false; n];
        for &t in targets {
            is_target[t] = true;
        }
        let mut remaining = targets.len();
        let mut reached = vec![false; n];
        let mut seen: Vec<Vec<u64>> = vec![Vec::new(); n];
        seen[s].push(0);
        let mut frontier = vec![(s, 0u64)];
        let mut layer = 0usize;

        while !frontier.is_empty() && remaining > 0 {
            layer += 1;
            // colored elements on any path of this many edges
            let cost = match self.element {
                Element::Edge => layer,
                Element::Vertex => layer - 1,
            };
            if cost > max_len {
                break;
            }
            let mut next = Vec::new();
            for &(v, mask) in &frontier {
                let mut base = mask;
                if self.element == Element::Vertex && v != s {
                    match slots[v] {
                        Slot::Bit(b) if mask & b != 0 => continue,
                        Slot::Bit(b) => base |= b,
                        Slot::Free => {}
                    }
                }
                for &(w, e) in g.incident(v) {
                    if self.strong && dist[w] != dist[v] + 1 {
                        continue;
                    }
                    let mut m = base;
                    if self.element == Element::Edge {
                        match slots[e] {
                            Slot::Bit(b) if m & b != 0 => continue,
                            Slot::Bit(b) => m |= b,
                            Slot::Free => {}
                        }
                    }
                    let antichain = &mut seen[w];
                    if antichain.iter().any(|&old| old & !m == 0) {
                        continue;
                    }
                    antichain.retain(|&old| m & !old != 0);
                    antichain.push(m);
                    next.push((w, m));
                    if is_target[w] && !reached[w] {
                        reached[w] = true;
                        remaining -= 1;
                    }
                }
            }
            frontier = next;
        }
        reached
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn ec(colors: &[u32]) -> EdgeColoring {
        EdgeColoring::from_colors(colors.to_vec()).unwrap()
    }

    fn vc(colors: &[u32]) -> VertexColoring {
        VertexColoring::from_colors(colors.to_vec()).unwrap()
    }

    #[test]
    fn triangle_with_one_color() {
        let g = generate::complete(3);
        assert!(is_rainbow_edge(&g, &ec(&[1, 1, 1])).unwrap().is_rainbow());
    }

    #[test]
    fn p3_single_color_fails_with_endpoints() {
        let g = generate::path(3);
        let v = is_rainbow_edge(&g, &ec(&[1, 1])).unwrap();
        assert_eq!(v, Verdict::Fails { a: 0, b: 2 });
        assert!(!is_strong_rainbow_edge(&g, &ec(&[1, 1])).unwrap().is_rainbow());
    }

    #[test]
    fn star_all_distinct() {
        let g = generate::star(6);
        assert!(is_rainbow_edge(&g, &ec(&[1, 2, 3, 4, 5])).unwrap().is_rainbow());
    }

    #[test]
    fn c4_alternating_colors_is_strong() {
        // edges sorted: (0,1) (0,3) (1,2) (2,3); around the cycle 0-1-2-3-0
        // the colors read 1,2,1,2
        let g = generate::cycle(4);
        let col = ec(&[1, 2, 2, 1]);
        assert!(is_strong_rainbow_edge(&g, &col).unwrap().is_rainbow());
    }

    #[test]
    fn all_distinct_always_passes() {
        let g = generate::petersen();
        assert!(is_strong_rainbow_edge(&g, &EdgeColoring::all_distinct(&g))
            .unwrap()
            .is_rainbow());
        assert!(is_strong_rainbow_vertex(&g, &VertexColoring::all_distinct(&g))
            .unwrap()
            .is_rainbow());
    }

    #[test]
    fn vertex_variants_on_short_paths() {
        let p4 = generate::path(4);
        assert!(!is_rainbow_vertex(&p4, &vc(&[1, 1, 1, 1])).unwrap().is_rainbow());
        assert!(is_rainbow_vertex(&p4, &vc(&[1, 1, 2, 1])).unwrap().is_rainbow());
        assert_eq!(
            is_strong_rainbow_vertex(&p4, &vc(&[2, 1, 1, 2])).unwrap(),
            Verdict::Fails { a: 0, b: 3 }
        );
        // diameter 2: one color suffices
        let petersen = generate::petersen();
        assert!(is_strong_rainbow_vertex(&petersen, &vc(&[1; 10]))
            .unwrap()
            .is_rainbow());
    }

    #[test]
    fn subset_check_on_triangle_corona() {
        // the 1-based pendants 4,5,6 of K_3 ∘ K_1 are ids 3,4,5 here
        let g = generate::clique_corona(3);
        let pairs = PairSet::from_pairs([(3, 4), (3, 5)]).unwrap();
        let good = vc(&[1, 2, 3, 1, 2, 3]);
        assert!(is_subset_srvc(&g, &good, &pairs).unwrap().is_rainbow());
        let bad = vc(&[1, 1, 1, 1, 1, 1]);
        let v = is_subset_srvc(&g, &bad, &pairs).unwrap();
        assert_eq!(v, Verdict::Fails { a: 3, b: 4 });
    }

    #[test]
    fn empty_pair_set_always_passes() {
        let g = generate::path(5);
        let v = is_subset_srvc(&g, &vc(&[1; 5]), &PairSet::new()).unwrap();
        assert!(v.is_rainbow());
    }

    #[test]
    fn capacity_is_enforced() {
        // 65 repeated colors on a long path
        let g = generate::path(131);
        let colors: Vec<u32> = (0..130).map(|i| (i / 2) as u32 + 1).collect();
        let err = is_rainbow_edge(&g, &ec(&colors)).unwrap_err();
        assert!(matches!(err, Error::Capacity { repeated: 65, .. }));
    }

    #[test]
    fn mismatched_coloring_rejected() {
        let g = generate::path(3);
        assert!(matches!(
            is_rainbow_edge(&g, &ec(&[1])),
            Err(Error::InvalidColoring(_))
        ));
        assert!(matches!(
            verify(&g, &Variant::Rvc, &Coloring::Edge(ec(&[1, 2]))),
            Err(Error::InvalidColoring(_))
        ));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            is_rainbow_vertex(&g, &vc(&[1, 1, 1])),
            Err(Error::Disconnected)
        ));
    }
}
