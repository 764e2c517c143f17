use super::{EdgeSet, Graph};
use crate::error::Result;

/// Edges whose removal disconnects `g` (edge separators).
///
/// Iterative lowlink DFS, linear in `n + m`. The parent edge is skipped by id,
/// so it is never mistaken for a back edge.
pub fn bridges(g: &Graph) -> Result<EdgeSet> {
    g.require_connected()?;
    let n = g.n();
    let mut out = EdgeSet::new(g.m());
    if n == 0 {
        return Ok(out);
    }
    let mut tin = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    // (vertex, edge id used to enter it, next incident index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    tin[0] = 0;
    low[0] = 0;
    timer += 1;
    while let Some(top) = stack.last_mut() {
        let (v, via, idx) = *top;
        if idx < g.incident(v).len() {
            top.2 += 1;
            let (w, e) = g.incident(v)[idx];
            if e == via {
                continue;
            }
            if tin[w] == usize::MAX {
                tin[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, e, 0));
            } else {
                low[v] = low[v].min(tin[w]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _, _)) = stack.last() {
                low[parent] = low[parent].min(low[v]);
                if low[v] > tin[parent] {
                    out.insert(via);
                }
            }
        }
    }
    Ok(out)
}

/// Remove-each-edge-and-test oracle; quadratic, for cross-checking only.
pub fn bridges_naive(g: &Graph) -> Result<EdgeSet> {
    g.require_connected()?;
    let mut out = EdgeSet::new(g.m());
    for id in 0..g.m() {
        let rest = g.spanning_subgraph((0..g.m()).filter(|&e| e != id));
        if !rest.is_connected() {
            out.insert(id);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::generate;

    #[test]
    fn every_tree_edge_is_a_bridge() {
        let t = generate::path(7);
        assert_eq!(bridges(&t).unwrap().len(), 6);
        let star = generate::star(6);
        assert_eq!(bridges(&star).unwrap().len(), 5);
    }

    #[test]
    fn cycle_has_no_bridges() {
        assert!(bridges(&generate::cycle(5)).unwrap().is_empty());
    }

    #[test]
    fn mixed_graph() {
        // triangle 0-1-2 with a tail 2-3-4
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        let b: Vec<_> = bridges(&g).unwrap().iter().map(|e| g.edge(e)).collect();
        assert_eq!(b, vec![(2, 3), (3, 4)]);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(bridges(&g), Err(Error::Disconnected)));
        assert!(matches!(bridges_naive(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn single_vertex() {
        assert!(bridges(&Graph::empty(1)).unwrap().is_empty());
    }
}
