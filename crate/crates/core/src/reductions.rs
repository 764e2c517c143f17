//! Hardness reductions for strong rainbow vertex coloring.
//!
//! Two steps, each with coloring translators in both directions:
//!
//! 1. proper `k`-coloring of `G` → subset strong rainbow vertex `k`-coloring
//!    of `K_n ∘ K_1` with one pair of pendants per edge of `G`;
//! 2. subset instance → strong rainbow vertex `k`-coloring of a graph of
//!    diameter 3.
//!
//! [`check_equivalence`] runs exact oracles on both sides and cross-checks the
//! translated witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{PairSet, VertexColoring};
use crate::error::{Error, Result};
use crate::generate::clique_corona;
use crate::graph::{diameter, Graph};
use crate::solve::Solver;
use crate::verify::{is_strong_rainbow_vertex, is_subset_srvc, Variant};

/// What an output vertex stands for. Ids refer to the input of the step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "lowercase")]
pub enum Role {
    /// Clique vertex standing for source vertex `v`.
    Original { v: usize },
    /// Pendant `p_v` attached to clique vertex `v`.
    Pendant { v: usize },
    /// `x_p` for pendant `p`.
    X { pendant: usize },
    /// First gadget vertex of non-pair `{u, v}`, adjacent to pendant `u`.
    X1 { u: usize, v: usize },
    /// Second gadget vertex of non-pair `{u, v}`, adjacent to pendant `v`.
    X2 { u: usize, v: usize },
    S,
    T,
}

impl Role {
    pub fn label(&self) -> &'static str {
        match self {
            Role::Original { .. } => "original",
            Role::Pendant { .. } => "pendant",
            Role::X { .. } => "x",
            Role::X1 { .. } => "x1",
            Role::X2 { .. } => "x2",
            Role::S => "s",
            Role::T => "t",
        }
    }

    pub fn origin(&self) -> Vec<usize> {
        match *self {
            Role::Original { v } | Role::Pendant { v } => vec![v],
            Role::X { pendant } => vec![pendant],
            Role::X1 { u, v } | Role::X2 { u, v } => vec![u, v],
            Role::S | Role::T => Vec::new(),
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())?;
        for id in self.origin() {
            write!(f, " {id}")?;
        }
        Ok(())
    }
}

/// `K_n ∘ K_1` with a set of pendant pairs and a color budget.
///
/// Clique vertices are `0..n`; the pendant of `v` is `n + v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsrvcInstance {
    clique: usize,
    graph: Graph,
    pairs: PairSet,
    k: usize,
}

impl SsrvcInstance {
    pub fn new(clique: usize, pairs: PairSet, k: usize) -> Result<Self> {
        for (a, b) in pairs.iter() {
            if a < clique || b >= 2 * clique {
                return Err(Error::InvalidPairs(format!(
                    "pair {a}-{b} is not a pair of pendants of K_{clique} ∘ K_1"
                )));
            }
        }
        Ok(SsrvcInstance {
            clique,
            graph: clique_corona(clique),
            pairs,
            k,
        })
    }

    pub fn clique(&self) -> usize {
        self.clique
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pairs(&self) -> &PairSet {
        &self.pairs
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn pendant(&self, v: usize) -> usize {
        self.clique + v
    }

    /// The clique vertex a pendant hangs off.
    pub fn anchor(&self, pendant: usize) -> usize {
        pendant - self.clique
    }

    pub fn variant(&self) -> Variant {
        Variant::Ssrvc(self.pairs.clone())
    }

    pub fn accepts(&self, col: &VertexColoring) -> Result<bool> {
        Ok(col.count() as usize <= self.k && is_subset_srvc(&self.graph, col, &self.pairs)?.is_rainbow())
    }
}

/// A reduction between two vertex coloring problems.
pub trait Reduction {
    /// Exact source oracle: a witness or `None`.
    fn solve_source(&self, solver: &mut Solver) -> Result<Option<VertexColoring>>;
    fn solve_target(&self, solver: &mut Solver) -> Result<Option<VertexColoring>>;
    fn source_accepts(&self, col: &VertexColoring) -> Result<bool>;
    fn target_accepts(&self, col: &VertexColoring) -> Result<bool>;
    /// Source witness → target witness.
    fn forward(&self, col: &VertexColoring) -> Result<VertexColoring>;
    /// Target witness → source witness.
    fn backward(&self, col: &VertexColoring) -> Result<VertexColoring>;
    fn roles(&self) -> &[Role];
    fn target_graph(&self) -> &Graph;
}

/// Proper `k`-coloring → subset strong rainbow vertex `k`-coloring.
#[derive(Clone, Debug)]
pub struct ColoringToSsrvc {
    source: Graph,
    k: usize,
    instance: SsrvcInstance,
    roles: Vec<Role>,
}

pub fn reduce_coloring_to_ssrvc(g: &Graph, k: usize) -> Result<ColoringToSsrvc> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "the coloring reduction needs k >= 3, got {k}"
        )));
    }
    let n = g.n();
    let pairs = PairSet::from_pairs(g.edges().iter().map(|&(u, v)| (n + u, n + v)))?;
    let instance = SsrvcInstance::new(n, pairs, k)?;
    let roles = (0..n)
        .map(|v| Role::Original { v })
        .chain((0..n).map(|v| Role::Pendant { v }))
        .collect();
    Ok(ColoringToSsrvc {
        source: g.clone(),
        k,
        instance,
        roles,
    })
}

impl ColoringToSsrvc {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn instance(&self) -> &SsrvcInstance {
        &self.instance
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl Reduction for ColoringToSsrvc {
    fn solve_source(&self, solver: &mut Solver) -> Result<Option<VertexColoring>> {
        solver.chromatic_decide(&self.source, self.k)
    }

    fn solve_target(&self, solver: &mut Solver) -> Result<Option<VertexColoring>> {
        let g = self.instance.graph();
        let report = solver.decide(g, &self.instance.variant(), self.k)?;
        Ok(report.witness.map(|w| match w {
            crate::coloring::Coloring::Vertex(c) => c,
            crate::coloring::Coloring::Edge(_) => unreachable!("vertex variant"),
        }))
    }

    fn source_accepts(&self, col: &VertexColoring) -> Result<bool> {
        Ok(col.count() as usize <= self.k && col.is_proper(&self.source))
    }

    fn target_accepts(&self, col: &VertexColoring) -> Result<bool> {
        self.instance.accepts(col)
    }

    /// Both `v` and its pendant take `v`'s color.
    fn forward(&self, col: &VertexColoring) -> Result<VertexColoring> {
        col.check_against(&self.source)?;
        let colors = col.colors().iter().chain(col.colors()).copied().collect();
        VertexColoring::new(colors, col.count())
    }

    /// Colors of the clique vertices.
    fn backward(&self, col: &VertexColoring) -> Result<VertexColoring> {
        col.check_against(self.instance.graph())?;
        VertexColoring::new(col.colors()[..self.source.n()].to_vec(), col.count())
    }

    fn roles(&self) -> &[Role] {
        &self.roles
    }

    fn target_graph(&self) -> &Graph {
        self.instance.graph()
    }
}

/// Subset instance → strong rainbow vertex `k`-coloring on a diameter-3 graph.
///
/// Id layout: the corona's vertices unchanged, then `x_p` for each pendant
/// in order, then `x1, x2` for each pendant pair outside the pair set in
/// lexicographic order, then `s`, `t`.
#[derive(Clone, Debug)]
pub struct SsrvcToSrvc {
    instance: SsrvcInstance,
    graph: Graph,
    roles: Vec<Role>,
}

/// Vertex count of the diameter-3 graph for a clique of size `n` with `pairs` pairs.
pub fn srvc_vertex_count(n: usize, pairs: usize) -> usize {
    2 * n + n + 2 * (n * n.saturating_sub(1) / 2 - pairs) + 2
}

pub fn reduce_ssrvc_to_srvc(inst: &SsrvcInstance) -> Result<SsrvcToSrvc> {
    if inst.k() < 3 {
        return Err(Error::Precondition(format!(
            "the diameter-3 reduction needs k >= 3, got {}",
            inst.k()
        )));
    }
    let n = inst.clique();
    let mut roles: Vec<Role> = (0..n)
        .map(|v| Role::Original { v })
        .chain((0..n).map(|v| Role::Pendant { v }))
        .collect();
    let mut edges = inst.graph().edges().to_vec();
    let pendants: Vec<usize> = (0..n).map(|v| inst.pendant(v)).collect();

    // E_1
    let x_base = 2 * n;
    for (i, &p) in pendants.iter().enumerate() {
        roles.push(Role::X { pendant: p });
        edges.push((p, x_base + i));
    }
    let s = x_base + n + 2 * (n * n.saturating_sub(1) / 2 - inst.pairs().len());
    let t = s + 1;
    for i in 0..n {
        edges.push((s, x_base + i));
        edges.push((t, x_base + i));
    }
    // E_2, E_3
    let mut next = x_base + n;
    for (i, &u) in pendants.iter().enumerate() {
        for &v in &pendants[i + 1..] {
            if inst.pairs().contains(u, v) {
                continue;
            }
            let (x1, x2) = (next, next + 1);
            next += 2;
            roles.push(Role::X1 { u, v });
            roles.push(Role::X2 { u, v });
            edges.extend([(u, x1), (x1, x2), (x2, v)]);
            edges.extend([(s, x1), (t, x2), (inst.anchor(u), x1), (inst.anchor(v), x2)]);
        }
    }
    debug_assert_eq!(next, s);
    roles.push(Role::S);
    roles.push(Role::T);
    // E_4
    for y in 0..n {
        edges.push((s, y));
        edges.push((t, y));
    }
    let graph = Graph::new(t + 1, edges)?;
    if graph.n() != srvc_vertex_count(n, inst.pairs().len()) || roles.len() != graph.n() {
        return Err(Error::Invariant(format!(
            "built {} vertices, expected {}",
            graph.n(),
            srvc_vertex_count(n, inst.pairs().len())
        )));
    }
    let diam = diameter(&graph)?;
    if diam != 3 {
        return Err(Error::Precondition(format!(
            "reduced graph has diameter {diam}; diameter 3 needs a clique of at least 2 vertices"
        )));
    }
    Ok(SsrvcToSrvc {
        instance: inst.clone(),
        graph,
        roles,
    })
}

impl SsrvcToSrvc {
    pub fn instance(&self) -> &SsrvcInstance {
        &self.instance
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.instance.k()
    }
}

/// Colors `c1 = 1` and `c2 = 2` of the extended coloring.
const C1: u32 = 1;
const C2: u32 = 2;

impl Reduction for SsrvcToSrvc {
    fn solve_source(&self, solver: &mut Solver) -> Result<Option<VertexColoring>> {
        let report = solver.decide(self.instance.graph(), &self.instance.variant(), self.k())?;
        Ok(report.witness.map(into_vertex))
    }

    fn solve_target(&self, solver: &mut Solver) -> Result<Option<VertexColoring>> {
        let report = solver.decide(&self.graph, &Variant::Srvc, self.k())?;
        Ok(report.witness.map(into_vertex))
    }

    fn source_accepts(&self, col: &VertexColoring) -> Result<bool> {
        self.instance.accepts(col)
    }

    fn target_accepts(&self, col: &VertexColoring) -> Result<bool> {
        Ok(col.count() as usize <= self.k() && is_strong_rainbow_vertex(&self.graph, col)?.is_rainbow())
    }

    /// Keeps the corona's colors; `x_p` and `x1` get `c1`, `x2`, `s`, `t` get `c2`.
    fn forward(&self, col: &VertexColoring) -> Result<VertexColoring> {
        col.check_against(self.instance.graph())?;
        let mut colors = col.colors().to_vec();
        colors.extend(self.roles[colors.len()..].iter().map(|role| match role {
            Role::X { .. } | Role::X1 { .. } => C1,
            _ => C2,
        }));
        VertexColoring::new(colors, col.count().max(C2))
    }

    /// Restriction to the corona's vertices.
    fn backward(&self, col: &VertexColoring) -> Result<VertexColoring> {
        col.check_against(&self.graph)?;
        VertexColoring::new(
            col.colors()[..self.instance.graph().n()].to_vec(),
            col.count(),
        )
    }

    fn roles(&self) -> &[Role] {
        &self.roles
    }

    fn target_graph(&self) -> &Graph {
        &self.graph
    }
}

fn into_vertex(c: crate::coloring::Coloring) -> VertexColoring {
    match c {
        crate::coloring::Coloring::Vertex(v) => v,
        crate::coloring::Coloring::Edge(_) => unreachable!("vertex variant"),
    }
}

/// Both reduction steps, chained.
pub fn reduce_coloring_to_srvc(g: &Graph, k: usize) -> Result<(ColoringToSsrvc, SsrvcToSrvc)> {
    let first = reduce_coloring_to_ssrvc(g, k)?;
    let second = reduce_ssrvc_to_srvc(first.instance())?;
    Ok((first, second))
}

/// Agreement of the two exact oracles on one reduction step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub answer: bool,
    pub source_nodes: u64,
    pub target_nodes: u64,
}

/// Solves both sides exactly and checks they agree; on yes, the forward image
/// of the source witness must pass the target check and the backward image of
/// the target witness must pass the source check.
pub fn check_equivalence<R: Reduction>(r: &R, solver: &mut Solver) -> Result<EquivalenceReport> {
    let before = solver.nodes();
    let source = r.solve_source(solver)?;
    let mid = solver.nodes();
    let target = r.solve_target(solver)?;
    let after = solver.nodes();
    match (&source, &target) {
        (Some(sw), Some(tw)) => {
            let fwd = r.forward(sw)?;
            if !r.target_accepts(&fwd)? {
                return Err(Error::Equivalence(format!(
                    "forward image {:?} of source witness {:?} fails the target check",
                    fwd.colors(),
                    sw.colors()
                )));
            }
            let back = r.backward(tw)?;
            if !r.source_accepts(&back)? {
                return Err(Error::Equivalence(format!(
                    "backward image {:?} of target witness {:?} fails the source check",
                    back.colors(),
                    tw.colors()
                )));
            }
        }
        (None, None) => {}
        _ => {
            return Err(Error::Equivalence(format!(
                "source answers {}, target answers {}; source witness {:?}, target witness {:?}",
                source.is_some(),
                target.is_some(),
                source.as_ref().map(|c| c.colors().to_vec()),
                target.as_ref().map(|c| c.colors().to_vec()),
            )))
        }
    }
    Ok(EquivalenceReport {
        answer: source.is_some(),
        source_nodes: mid - before,
        target_nodes: after - mid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn triangle_reduces_to_its_corona() {
        let r = reduce_coloring_to_ssrvc(&generate::complete(3), 3).unwrap();
        assert_eq!(r.instance().graph(), &generate::clique_corona(3));
        assert_eq!(r.instance().pairs().len(), 3);
    }

    #[test]
    fn edgeless_source_has_no_pairs() {
        let r = reduce_coloring_to_ssrvc(&Graph::empty(4), 3).unwrap();
        assert!(r.instance().pairs().is_empty());
        let rep = check_equivalence(&r, &mut Solver::new()).unwrap();
        assert!(rep.answer);
    }

    #[test]
    fn two_pair_instance_has_diameter_three() {
        // pendants of the triangle are 3, 4, 5
        let pairs = PairSet::from_pairs([(3, 4), (3, 5)]).unwrap();
        let inst = SsrvcInstance::new(3, pairs, 3).unwrap();
        let r = reduce_ssrvc_to_srvc(&inst).unwrap();
        assert_eq!(diameter(r.graph()).unwrap(), 3);
        // one non-pair {4, 5} gives the only gadget
        assert_eq!(r.graph().n(), 6 + 3 + 2 + 2);
        let gadget: Vec<_> = r.roles()[9..11].to_vec();
        assert_eq!(gadget, vec![Role::X1 { u: 4, v: 5 }, Role::X2 { u: 4, v: 5 }]);
        assert_eq!(r.roles()[11], Role::S);
    }

    #[test]
    fn extended_coloring_verifies_on_two_pair_instance() {
        let pairs = PairSet::from_pairs([(3, 4), (3, 5)]).unwrap();
        let inst = SsrvcInstance::new(3, pairs, 3).unwrap();
        let r = reduce_ssrvc_to_srvc(&inst).unwrap();
        let phi = VertexColoring::new(vec![1, 2, 3, 1, 2, 3], 3).unwrap();
        assert!(inst.accepts(&phi).unwrap());
        let ext = r.forward(&phi).unwrap();
        assert!(is_strong_rainbow_vertex(r.graph(), &ext).unwrap().is_rainbow());
        assert_eq!(r.backward(&ext).unwrap(), phi);
    }

    #[test]
    fn all_pairs_means_no_gadgets() {
        let n = 4;
        let pairs =
            PairSet::from_pairs((0..n).flat_map(|u| (u + 1..n).map(move |v| (n + u, n + v))))
                .unwrap();
        let inst = SsrvcInstance::new(n, pairs, 3).unwrap();
        let r = reduce_ssrvc_to_srvc(&inst).unwrap();
        assert_eq!(r.graph().n(), 3 * n + 2);
        assert!(r
            .roles()
            .iter()
            .all(|role| !matches!(role, Role::X1 { .. } | Role::X2 { .. })));
    }

    #[test]
    fn small_k_rejected() {
        assert!(matches!(
            reduce_coloring_to_ssrvc(&generate::path(3), 2),
            Err(Error::Precondition(_))
        ));
        let inst = SsrvcInstance::new(3, PairSet::new(), 2).unwrap();
        assert!(matches!(
            reduce_ssrvc_to_srvc(&inst),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn single_vertex_source_cannot_reach_diameter_three() {
        let inst = SsrvcInstance::new(1, PairSet::new(), 3).unwrap();
        assert!(matches!(
            reduce_ssrvc_to_srvc(&inst),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn equivalence_on_small_sources() {
        let mut solver = Solver::new();
        for (g, expect) in [
            (generate::complete(4), false),
            (generate::cycle(5), true),
            (generate::complete(3), true),
        ] {
            let (first, second) = reduce_coloring_to_srvc(&g, 3).unwrap();
            assert_eq!(check_equivalence(&first, &mut solver).unwrap().answer, expect);
            assert_eq!(check_equivalence(&second, &mut solver).unwrap().answer, expect);
        }
    }

    #[test]
    fn vertex_count_formula() {
        let g = generate::cycle(5);
        let (_, second) = reduce_coloring_to_srvc(&g, 3).unwrap();
        assert_eq!(second.graph().n(), srvc_vertex_count(5, 5));
        assert_eq!(second.graph().n(), 10 + 5 + 10 + 2);
    }

    #[test]
    fn role_rendering() {
        assert_eq!(Role::X1 { u: 4, v: 5 }.to_string(), "x1 4 5");
        assert_eq!(Role::S.to_string(), "s");
    }
}
