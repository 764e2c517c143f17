//! Colorings and pair sets: the certificates solvers emit and verifiers consume.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_palette(colors: &[u32], count: u32) -> Result<()> {
    if let Some((id, &c)) = colors
        .iter()
        .enumerate()
        .find(|&(_, &c)| c == 0 || c > count)
    {
        return Err(Error::InvalidColoring(format!(
            "element {id} has color {c} outside [1, {count}]"
        )));
    }
    Ok(())
}

/// Total map from edge ids to colors in `[1, count]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<u32>,
    count: u32,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>, count: u32) -> Result<Self> {
        check_palette(&colors, count)?;
        Ok(EdgeColoring { colors, count })
    }

    /// Palette sized to the largest color used.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let count = colors.iter().copied().max().unwrap_or(0);
        Self::new(colors, count)
    }

    /// Every edge its own color.
    pub fn all_distinct(g: &Graph) -> Self {
        EdgeColoring {
            colors: (1..=g.m() as u32).collect(),
            count: g.m() as u32,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    /// Declared palette size.
    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn distinct_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.m() {
            return Err(Error::InvalidColoring(format!(
                "{} edge colors for a graph with {} edges",
                self.colors.len(),
                g.m()
            )));
        }
        Ok(())
    }
}

/// Total map from vertex ids to colors in `[1, count]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexColoring {
    colors: Vec<u32>,
    count: u32,
}

impl VertexColoring {
    pub fn new(colors: Vec<u32>, count: u32) -> Result<Self> {
        check_palette(&colors, count)?;
        Ok(VertexColoring { colors, count })
    }

    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let count = colors.iter().copied().max().unwrap_or(0);
        Self::new(colors, count)
    }

    pub fn all_distinct(g: &Graph) -> Self {
        VertexColoring {
            colors: (1..=g.n() as u32).collect(),
            count: g.n() as u32,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn distinct_used(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Adjacent vertices always differ.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::InvalidColoring(format!(
                "{} vertex colors for a graph with {} vertices",
                self.colors.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// Either kind of certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Coloring {
    Edge(EdgeColoring),
    Vertex(VertexColoring),
}

impl Coloring {
    pub fn count(&self) -> u32 {
        match self {
            Coloring::Edge(c) => c.count(),
            Coloring::Vertex(c) => c.count(),
        }
    }

    pub fn colors(&self) -> &[u32] {
        match self {
            Coloring::Edge(c) => c.colors(),
            Coloring::Vertex(c) => c.colors(),
        }
    }
}

/// Set of unordered pairs of distinct vertices, stored as `(min, max)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairSet(BTreeSet<(usize, usize)>);

impl PairSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = Self::new();
        for (a, b) in pairs {
            set.insert(a, b)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::InvalidPairs(format!("pair {a}-{b} is not distinct")));
        }
        self.0.insert((a.min(b), a.max(b)));
        Ok(())
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.0.contains(&(a.min(b), a.max(b)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub(crate) fn check_against(&self, g: &Graph) -> Result<()> {
        match self.iter().find(|&(_, b)| b >= g.n()) {
            Some((a, b)) => Err(Error::InvalidPairs(format!(
                "pair {a}-{b} out of range for {} vertices",
                g.n()
            ))),
            None => Ok(()),
        }
    }
}
