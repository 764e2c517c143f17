use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// Distance marker for unreachable vertices.
pub const INF: usize = usize::MAX;

pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![INF; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if dist[w] == INF {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// All-pairs shortest path lengths by repeated BFS.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|s| bfs_distances(g, s)).collect()
}

pub fn eccentricity(g: &Graph, v: usize) -> Result<usize> {
    let d = bfs_distances(g, v);
    match d.iter().max() {
        Some(&INF) => Err(Error::Disconnected),
        Some(&e) => Ok(e),
        None => Ok(0),
    }
}

/// Length of the longest shortest path; 0 for graphs on at most one vertex.
pub fn diameter(g: &Graph) -> Result<usize> {
    g.require_connected()?;
    let mut best = 0;
    for v in 0..g.n() {
        best = best.max(eccentricity(g, v)?);
    }
    Ok(best)
}
