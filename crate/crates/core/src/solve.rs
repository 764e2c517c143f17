//! Exact decision and optimization oracles for every variant, plus proper
//! vertex coloring as the source problem of the reductions.
//!
//! Colorings are enumerated in canonical order: the first element to receive
//! a new color always receives the smallest unused index, so each partition of
//! the elements into color classes is visited once. A rainbow property is
//! invariant under permuting color names, hence a "no" from the canonical
//! search is exhaustive.
//!
//! Partial colorings are pruned with the verifier run in optimistic mode:
//! uncolored elements count as fresh colors and paths may carry at most `k`
//! colored elements. Any completion's rainbow path is also rainbow under this
//! relaxation, so a pair that fails it fails in every completion.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, EdgeColoring, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{bridges, diameter, distance_matrix, Graph};
use crate::verify::{verify, Checker, Element, Slot, Variant, MASK_CAPACITY};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Mode {
    Decide { k: usize },
    Optimize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "answer", content = "value", rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Optimum(usize),
}

/// Result of one solver call.
///
/// On `Yes` or `Optimum`, `witness` passes the variant's verifier with a
/// palette no larger than the bound. An optimum of 0 (a single vertex, or a
/// vertex variant where every checked pair is adjacent) carries an empty edge
/// coloring or no witness at all.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub variant: Variant,
    #[serde(flatten)]
    pub mode: Mode,
    #[serde(flatten)]
    pub answer: Answer,
    pub witness: Option<Coloring>,
    /// Search nodes expanded by this call.
    pub nodes: u64,
}

impl SolveReport {
    pub fn is_yes(&self) -> bool {
        matches!(self.answer, Answer::Yes | Answer::Optimum(_))
    }

    pub fn optimum(&self) -> Option<usize> {
        match self.answer {
            Answer::Optimum(k) => Some(k),
            _ => None,
        }
    }
}

/// Backtracking solver with a per-call node budget. Single-owner: one call at a time.
#[derive(Debug)]
pub struct Solver {
    budget: u64,
    nodes: u64,
    call_start: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Self::new()
    }
}

pub fn decide(g: &Graph, variant: &Variant, k: usize) -> Result<SolveReport> {
    Solver::new().decide(g, variant, k)
}

pub fn optimize(g: &Graph, variant: &Variant) -> Result<SolveReport> {
    Solver::new().optimize(g, variant)
}

pub fn chromatic_decide(g: &Graph, k: usize) -> Result<Option<VertexColoring>> {
    Solver::new().chromatic_decide(g, k)
}

impl Solver {
    pub fn new() -> Self {
        Self::with_budget(DEFAULT_BUDGET)
    }

    pub fn with_budget(budget: u64) -> Self {
        Solver {
            budget,
            nodes: 0,
            call_start: 0,
        }
    }

    /// Nodes expanded over the solver's lifetime.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    fn begin(&mut self) -> u64 {
        self.call_start = self.nodes;
        self.nodes
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes - self.call_start > self.budget {
            Err(Error::BudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Is there a coloring with at most `k` colors satisfying `variant`?
    pub fn decide(&mut self, g: &Graph, variant: &Variant, k: usize) -> Result<SolveReport> {
        if k == 0 {
            return Err(Error::InvalidArgument("decide needs k >= 1".into()));
        }
        let start = self.begin();
        let witness = self.find(g, variant, k)?;
        Ok(SolveReport {
            variant: variant.clone(),
            mode: Mode::Decide { k },
            answer: if witness.is_some() {
                Answer::Yes
            } else {
                Answer::No
            },
            witness,
            nodes: self.nodes - start,
        })
    }

    /// Smallest palette admitting a valid coloring, by ascending search from a
    /// lower bound: `max(1, bridges, diam)` for edge variants and
    /// `max(1, diam - 1)` for vertex variants (the largest distance over the
    /// checked pairs for the subset variant).
    pub fn optimize(&mut self, g: &Graph, variant: &Variant) -> Result<SolveReport> {
        g.require_connected()?;
        check_variant(g, variant)?;
        let start = self.begin();
        let report = |answer, witness, nodes| SolveReport {
            variant: variant.clone(),
            mode: Mode::Optimize,
            answer,
            witness,
            nodes,
        };
        let reach = match variant {
            Variant::Ssrvc(p) => {
                let dist = distance_matrix(g);
                p.iter().map(|(a, b)| dist[a][b]).max().unwrap_or(0)
            }
            _ => diameter(g)?,
        };
        let lower = if variant.colors_edges() {
            if g.m() == 0 {
                let empty = EdgeColoring::new(Vec::new(), 0)?;
                return Ok(report(Answer::Optimum(0), Some(Coloring::Edge(empty)), 0));
            }
            reach.max(bridges(g)?.len()).max(1)
        } else {
            if reach <= 1 {
                return Ok(report(Answer::Optimum(0), None, 0));
            }
            reach - 1
        };
        let mut k = lower;
        loop {
            if let Some(w) = self.find(g, variant, k)? {
                return Ok(report(Answer::Optimum(k), Some(w), self.nodes - start));
            }
            k += 1;
        }
    }

    fn find(&mut self, g: &Graph, variant: &Variant, k: usize) -> Result<Option<Coloring>> {
        g.require_connected()?;
        check_variant(g, variant)?;
        let element = variant.element();
        let size = match element {
            Element::Edge => g.m(),
            Element::Vertex => g.n(),
        };
        if variant.colors_edges() && bridges(g)?.len() > k {
            return Ok(None);
        }

        let checker = match variant {
            Variant::Ssrvc(p) => Checker::for_pairs(g, element, true, p),
            _ => Checker::all_pairs(g, element, variant.is_strong()),
        };
        let order = search_order(g, variant, &checker);

        let mut colors = vec![1u32; size];
        if k >= order.len() {
            // all relevant elements distinct
            for (i, &e) in order.iter().enumerate() {
                colors[e] = i as u32 + 1;
            }
        } else {
            if k > MASK_CAPACITY {
                return Err(Error::Capacity {
                    repeated: k,
                    capacity: MASK_CAPACITY,
                });
            }
            let mut slots = vec![Slot::Free; size];
            self.tick()?;
            if checker.first_failure(&slots, k).is_some() {
                return Ok(None);
            }
            let mut assigned = vec![0u32; size];
            if !self.extend(&checker, &order, 0, 0, k, &mut assigned, &mut slots)? {
                return Ok(None);
            }
            for &e in &order {
                colors[e] = assigned[e];
            }
        }
        let palette = k as u32;
        let witness = match element {
            Element::Edge => Coloring::Edge(EdgeColoring::new(colors, palette)?),
            Element::Vertex => Coloring::Vertex(VertexColoring::new(colors, palette)?),
        };
        if !verify(g, variant, &witness)?.is_rainbow() {
            return Err(Error::Invariant(format!(
                "search produced a {variant} witness the verifier rejects"
            )));
        }
        Ok(Some(witness))
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        checker: &Checker<'_>,
        order: &[usize],
        idx: usize,
        used: u32,
        k: usize,
        assigned: &mut [u32],
        slots: &mut [Slot],
    ) -> Result<bool> {
        let Some(&e) = order.get(idx) else {
            return Ok(true);
        };
        let top = (used + 1).min(k as u32);
        for c in 1..=top {
            self.tick()?;
            assigned[e] = c;
            slots[e] = Slot::Bit(1 << (c - 1));
            if checker.first_failure(slots, k).is_none()
                && self.extend(checker, order, idx + 1, used.max(c), k, assigned, slots)?
            {
                return Ok(true);
            }
        }
        assigned[e] = 0;
        slots[e] = Slot::Free;
        Ok(false)
    }

    /// Proper `k`-coloring by canonical backtracking, highest degree first.
    pub fn chromatic_decide(&mut self, g: &Graph, k: usize) -> Result<Option<VertexColoring>> {
        self.begin();
        let n = g.n();
        if n == 0 {
            return Ok(Some(VertexColoring::new(Vec::new(), k as u32)?));
        }
        if k == 0 {
            return Ok(None);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut colors = vec![0u32; n];
        if self.color_from(g, &order, 0, 0, k as u32, &mut colors)? {
            Ok(Some(VertexColoring::new(colors, k as u32)?))
        } else {
            Ok(None)
        }
    }

    fn color_from(
        &mut self,
        g: &Graph,
        order: &[usize],
        idx: usize,
        used: u32,
        k: u32,
        colors: &mut [u32],
    ) -> Result<bool> {
        let Some(&v) = order.get(idx) else {
            return Ok(true);
        };
        for c in 1..=(used + 1).min(k) {
            self.tick()?;
            if g.neighbors(v).any(|w| colors[w] == c) {
                continue;
            }
            colors[v] = c;
            if self.color_from(g, order, idx + 1, used.max(c), k, colors)? {
                return Ok(true);
            }
        }
        colors[v] = 0;
        Ok(false)
    }
}

fn check_variant(g: &Graph, variant: &Variant) -> Result<()> {
    match variant {
        Variant::Ssrvc(p) => p.check_against(g),
        _ => Ok(()),
    }
}

/// Elements whose color can matter, in BFS order from vertex 0. Others are
/// fixed to color 1: vertices that are never internal on a checked path, and
/// for strong variants edges lying on no checked shortest path.
fn search_order(g: &Graph, variant: &Variant, checker: &Checker<'_>) -> Vec<usize> {
    let n = g.n();
    let mut rank = vec![usize::MAX; n];
    let mut queue = VecDeque::from([0]);
    let mut next = 0;
    if n > 0 {
        rank[0] = 0;
        next = 1;
    }
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if rank[w] == usize::MAX {
                rank[w] = next;
                next += 1;
                queue.push_back(w);
            }
        }
    }

    let strong = variant.is_strong();
    let dist = if strong {
        distance_matrix(g)
    } else {
        Vec::new()
    };
    let mut relevant_vertex = vec![!strong; n];
    let mut relevant_edge = vec![!strong; g.m()];
    if strong {
        for (s, t) in checker.pairs() {
            let d = dist[s][t];
            for v in 0..n {
                if v != s && v != t && dist[s][v] + dist[v][t] == d {
                    relevant_vertex[v] = true;
                }
            }
            for (id, &(a, b)) in g.edges().iter().enumerate() {
                if dist[s][a] + 1 + dist[b][t] == d || dist[s][b] + 1 + dist[a][t] == d {
                    relevant_edge[id] = true;
                }
            }
        }
    }

    match variant.element() {
        Element::Vertex => {
            let mut vs: Vec<usize> = (0..n)
                .filter(|&v| relevant_vertex[v] && g.degree(v) >= 2)
                .collect();
            vs.sort_by_key(|&v| rank[v]);
            vs
        }
        Element::Edge => {
            let mut es: Vec<usize> = (0..g.m()).filter(|&e| relevant_edge[e]).collect();
            es.sort_by_key(|&e| {
                let (a, b) = g.edge(e);
                (rank[a].min(rank[b]), rank[a].max(rank[b]))
            });
            es
        }
    }
}
