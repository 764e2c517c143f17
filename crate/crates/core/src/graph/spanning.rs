use std::collections::VecDeque;

use itertools::Itertools;

use super::paths::{bfs_distances, INF};
use super::Graph;
use crate::error::{Error, Result};

/// Largest graph `max_leaf_spanning_tree_exact` will enumerate.
pub const EXACT_LEAF_SEARCH_LIMIT: usize = 20;

/// Vertices of degree 1 in `tree`.
pub fn leaf_count(tree: &Graph) -> usize {
    (0..tree.n()).filter(|&v| tree.degree(v) == 1).count()
}

pub fn tree_diameter(tree: &Graph) -> usize {
    if tree.n() <= 1 {
        return 0;
    }
    let d0 = bfs_distances(tree, 0);
    let far = (0..tree.n()).max_by_key(|&v| d0[v]).unwrap();
    let d1 = bfs_distances(tree, far);
    *d1.iter().max().unwrap()
}

/// BFS forest grown simultaneously from `roots`; returns the tree edge ids.
fn bfs_tree_edges(g: &Graph, roots: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for &r in roots {
        seen[r] = true;
        queue.push_back(r);
    }
    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        for &(w, e) in g.incident(u) {
            if !seen[w] {
                seen[w] = true;
                edges.push(e);
                queue.push_back(w);
            }
        }
    }
    edges
}

/// A spanning tree of minimum diameter.
///
/// The optimum is a BFS tree rooted at an absolute center, which for unit
/// edge lengths sits on a vertex or on the midpoint of an edge; every such
/// candidate is built and the shallowest kept (first in vertex-then-edge order).
pub fn spanning_tree_min_diameter(g: &Graph) -> Result<Graph> {
    g.require_connected()?;
    if g.n() <= 1 {
        return Ok(g.clone());
    }
    let mut best: Option<(usize, Graph)> = None;
    let mut consider = |edges: Vec<usize>| {
        let tree = g.spanning_subgraph(edges);
        let d = tree_diameter(&tree);
        if best.as_ref().map_or(true, |(bd, _)| d < *bd) {
            best = Some((d, tree));
        }
    };
    for c in 0..g.n() {
        consider(bfs_tree_edges(g, &[c]));
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let mut edges = bfs_tree_edges(g, &[u, v]);
        edges.push(id);
        consider(edges);
    }
    Ok(best.unwrap().1)
}

/// Greedy search for a spanning tree with at least `k` leaves.
///
/// From every root, repeatedly expands the tree vertex with the most
/// neighbors outside the tree (attaching all of them), preferring expansions
/// that add two or more vertices, then one-step lookahead through a single
/// new neighbor. `None` means the heuristic failed, not that no such tree exists.
pub fn max_leaf_spanning_tree(g: &Graph, k: usize) -> Result<Option<Graph>> {
    g.require_connected()?;
    let mut best: Option<Graph> = None;
    let mut best_leaves = 0;
    for root in 0..g.n() {
        let tree = g.spanning_subgraph(grow_leafy(g, root));
        let leaves = leaf_count(&tree);
        if best.is_none() || leaves > best_leaves {
            best_leaves = leaves;
            best = Some(tree);
        }
    }
    Ok(best.filter(|_| best_leaves >= k))
}

fn grow_leafy(g: &Graph, root: usize) -> Vec<usize> {
    let n = g.n();
    let mut in_tree = vec![false; n];
    in_tree[root] = true;
    let mut count = 1;
    let mut edges = Vec::new();

    let fresh = |in_tree: &[bool], u: usize| g.neighbors(u).filter(|&w| !in_tree[w]).count();

    let expand = |in_tree: &mut [bool], edges: &mut Vec<usize>, u: usize| -> usize {
        let mut added = 0;
        for &(w, e) in g.incident(u) {
            if !in_tree[w] {
                in_tree[w] = true;
                edges.push(e);
                added += 1;
            }
        }
        added
    };

    count += expand(&mut in_tree, &mut edges, root);
    while count < n {
        let tree_vertices: Vec<usize> = (0..n).filter(|&v| in_tree[v]).collect();
        let (u, gain) = tree_vertices
            .iter()
            .map(|&u| (u, fresh(&in_tree, u)))
            .max_by_key(|&(u, f)| (f, std::cmp::Reverse(u)))
            .unwrap();
        if gain >= 2 {
            count += expand(&mut in_tree, &mut edges, u);
            continue;
        }
        // every tree vertex has at most one outside neighbor: look one step ahead
        let mut pick: Option<(usize, usize, usize)> = None;
        for &u in &tree_vertices {
            for w in g.neighbors(u).filter(|&w| !in_tree[w]) {
                let ahead = g.neighbors(w).filter(|&x| !in_tree[x]).count();
                if pick.map_or(true, |(_, _, best)| ahead > best) {
                    pick = Some((u, w, ahead));
                }
            }
        }
        let (u, w, _) = pick.expect("connected graph always has a frontier edge");
        count += expand(&mut in_tree, &mut edges, u);
        count += expand(&mut in_tree, &mut edges, w);
    }
    edges
}

/// A spanning tree with the maximum number of leaves, by exhaustive search.
///
/// For `n >= 3` the internal vertices of a spanning tree form a connected
/// dominating set and vice versa, so the smallest connected dominating set
/// gives the optimum. Exponential; refuses graphs above
/// [`EXACT_LEAF_SEARCH_LIMIT`] vertices.
pub fn max_leaf_spanning_tree_exact(g: &Graph) -> Result<Graph> {
    g.require_connected()?;
    let n = g.n();
    if n > EXACT_LEAF_SEARCH_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "exact leaf search limited to {EXACT_LEAF_SEARCH_LIMIT} vertices, got {n}"
        )));
    }
    if n <= 2 {
        return Ok(g.clone());
    }
    for size in 1..=n {
        for inner in (0..n).combinations(size) {
            let mut member = vec![false; n];
            for &v in &inner {
                member[v] = true;
            }
            let dominating = (0..n).all(|v| member[v] || g.neighbors(v).any(|w| member[w]));
            if !dominating {
                continue;
            }
            // connectivity of g[inner]
            let sub = Graph::new(
                n,
                g.edges()
                    .iter()
                    .copied()
                    .filter(|&(a, b)| member[a] && member[b]),
            )
            .unwrap();
            let d = bfs_distances(&sub, inner[0]);
            if inner.iter().any(|&v| d[v] == INF) {
                continue;
            }
            let mut edges = bfs_tree_edges(&sub, &[inner[0]])
                .into_iter()
                .map(|e| g.edge_id(sub.edge(e).0, sub.edge(e).1).unwrap())
                .collect::<Vec<_>>();
            for v in (0..n).filter(|&v| !member[v]) {
                let (_, e) = *g.incident(v).iter().find(|&&(w, _)| member[w]).unwrap();
                edges.push(e);
            }
            return Ok(g.spanning_subgraph(edges));
        }
    }
    unreachable!("the full vertex set dominates a connected graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::diameter;

    #[test]
    fn tree_input_is_returned() {
        let t = generate::path(6);
        assert_eq!(spanning_tree_min_diameter(&t).unwrap(), t);
    }

    #[test]
    fn complete_graph_gives_a_star() {
        let t = spanning_tree_min_diameter(&generate::complete(4)).unwrap();
        assert!(t.is_tree());
        assert_eq!(tree_diameter(&t), 2);
    }

    #[test]
    fn even_cycle_needs_edge_center() {
        // every spanning tree of C_6 is a 6-vertex path
        let g = generate::cycle(6);
        let t = spanning_tree_min_diameter(&g).unwrap();
        assert!(t.is_tree());
        assert_eq!(tree_diameter(&t), 5);
        assert!(tree_diameter(&t) >= diameter(&g).unwrap());
    }

    #[test]
    fn star_has_five_leaves() {
        let t = max_leaf_spanning_tree(&generate::star(6), 5).unwrap().unwrap();
        assert_eq!(leaf_count(&t), 5);
    }

    #[test]
    fn path_never_has_three_leaves() {
        assert!(max_leaf_spanning_tree(&generate::path(6), 3)
            .unwrap()
            .is_none());
        let t = max_leaf_spanning_tree_exact(&generate::path(6)).unwrap();
        assert_eq!(leaf_count(&t), 2);
    }

    #[test]
    fn exact_on_petersen() {
        // Petersen: connected domination number 4, so 6 leaves
        let t = max_leaf_spanning_tree_exact(&generate::petersen()).unwrap();
        assert!(t.is_tree());
        assert_eq!(leaf_count(&t), 6);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            spanning_tree_min_diameter(&g),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            max_leaf_spanning_tree(&g, 1),
            Err(Error::Disconnected)
        ));
    }
}
