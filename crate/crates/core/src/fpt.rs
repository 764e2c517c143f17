//! Colorings and decision procedures for graphs with a small vertex cover or
//! a large color saving.
//!
//! Every constructed coloring is run through its verifier before it is
//! returned; a rejection is reported as [`Error::Invariant`].

use serde::{Deserialize, Serialize};

use crate::coloring::{Coloring, EdgeColoring, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{
    bridges, diameter, is_vertex_cover, max_leaf_spanning_tree, max_leaf_spanning_tree_exact,
    min_vertex_cover, neighborhood_types, spanning_tree_min_diameter, Graph, VertexSet,
};
use crate::solve::Solver;
use crate::verify::{is_rainbow_edge, is_rainbow_vertex, is_strong_rainbow_vertex, verify, Variant};

/// Largest graph on which `saving_rvc` retries an exhaustive leaf search
/// after the greedy one comes up short.
pub const EXACT_LEAF_FALLBACK: usize = 9;

/// Bridge-count threshold `2p - 2 + p(p² + 2p·2^p)` for cover size `p >= 1`.
pub fn beta(p: usize) -> Result<u64> {
    let pp = p as u64;
    if pp == 0 {
        return Err(Error::InvalidArgument("beta is defined for p >= 1".into()));
    }
    let overflow = || Error::InvalidArgument(format!("beta({p}) overflows u64"));
    let zp = z_prime(p)?;
    pp.checked_mul(zp)
        .and_then(|t| t.checked_add(2 * pp - 2))
        .ok_or_else(overflow)
}

/// `p² + 2p·2^p`, the number of pendant edges of the hub that receive the
/// low colors in the threshold coloring.
pub fn z_prime(p: usize) -> Result<u64> {
    let pp = p as u64;
    let overflow = || Error::InvalidArgument(format!("p² + 2p·2^p overflows u64 at p = {p}"));
    let pow = 1u64.checked_shl(p as u32).filter(|_| p < 64).ok_or_else(overflow)?;
    pp.checked_mul(pp)
        .and_then(|sq| 2u64.checked_mul(pp)?.checked_mul(pow)?.checked_add(sq))
        .ok_or_else(overflow)
}

/// `z + p² + 2^p·2p`, the palette bound of [`rc_bounded_coloring`].
pub fn bounded_palette(z: usize, p: usize) -> Result<u64> {
    z_prime(p)?
        .checked_add(z as u64)
        .ok_or_else(|| Error::InvalidArgument("palette bound overflows u64".into()))
}

fn require_cover(g: &Graph, x: &VertexSet) -> Result<()> {
    g.require_connected()?;
    if x.universe() != g.n() || !is_vertex_cover(g, x) {
        return Err(Error::Precondition("x is not a vertex cover of g".into()));
    }
    Ok(())
}

/// Bridges with no endpoint that is a pendant outside `x`.
pub fn non_pendant_bridges(g: &Graph, x: &VertexSet) -> Result<usize> {
    require_cover(g, x)?;
    let outside_pendant = |v: usize| !x.contains(v) && g.degree(v) == 1;
    Ok(bridges(g)?
        .iter()
        .filter(|&e| {
            let (u, v) = g.edge(e);
            !outside_pendant(u) && !outside_pendant(v)
        })
        .count())
}

fn unique_on(n: usize, z: &[usize]) -> Result<VertexColoring> {
    let mut colors = vec![1u32; n];
    for (i, &v) in z.iter().enumerate() {
        colors[v] = i as u32 + 1;
    }
    VertexColoring::new(colors, z.len().max(1) as u32)
}

/// Rainbow vertex coloring with at most `2|x|` colors: the internal vertices
/// of a minimum-diameter spanning tree get distinct colors, the rest color 1.
pub fn rvc_coloring_2p(g: &Graph, x: &VertexSet) -> Result<VertexColoring> {
    require_cover(g, x)?;
    let tree = spanning_tree_min_diameter(g)?;
    let internal: Vec<usize> = (0..g.n()).filter(|&v| tree.degree(v) >= 2).collect();
    if internal.len() > 2 * x.len() {
        return Err(Error::Invariant(format!(
            "spanning tree has {} internal vertices for a cover of size {}",
            internal.len(),
            x.len()
        )));
    }
    let col = unique_on(g.n(), &internal)?;
    if !is_rainbow_vertex(g, &col)?.is_rainbow() {
        return Err(Error::Invariant("tree-interior coloring is not rainbow".into()));
    }
    Ok(col)
}

/// Strong rainbow vertex coloring with at most `|x|²` colors: `x` plus one
/// common outside neighbor per pair of cover vertices get distinct colors.
pub fn srvc_coloring_p2(g: &Graph, x: &VertexSet) -> Result<VertexColoring> {
    require_cover(g, x)?;
    let cover = x.to_vec();
    let mut z = cover.clone();
    for (i, &a) in cover.iter().enumerate() {
        for &b in &cover[i + 1..] {
            let common = g
                .neighbors(a)
                .filter(|&v| !x.contains(v) && g.has_edge(v, b))
                .min();
            if let Some(v) = common {
                if !z.contains(&v) {
                    z.push(v);
                }
            }
        }
    }
    if z.len() > cover.len().pow(2).max(1) {
        return Err(Error::Invariant(format!(
            "{} colored vertices for a cover of size {}",
            z.len(),
            cover.len()
        )));
    }
    let col = unique_on(g.n(), &z)?;
    if !is_strong_rainbow_vertex(g, &col)?.is_rainbow() {
        return Err(Error::Invariant("cover-based coloring is not strong rainbow".into()));
    }
    Ok(col)
}

/// Rainbow edge coloring with exactly `z` colors, `z` the bridge count, for
/// graphs whose bridge count reaches `beta(|x|)`.
///
/// The hub is the cover vertex with the most pendants (lowest id on ties).
/// Its first `z'` pendant edges take colors `1..=z'`, the other bridges
/// `z'+1..=z`. The `i`-th non-bridge edge inside the cover takes `z' - i`.
/// For the `i`-th type (0-based) with at least two cover neighbors, the
/// non-bridge edges at its smallest member `y` take `2pi + 1 + j` and those at
/// the other members `2pi + 1 + p + j`, where `j` is the cover vertex's index.
pub fn rc_exact_above_threshold(g: &Graph, x: &VertexSet) -> Result<EdgeColoring> {
    require_cover(g, x)?;
    let p = x.len();
    let bridge_set = bridges(g)?;
    let z = bridge_set.len();
    if p == 0 || (z as u64) < beta(p)? {
        return Err(Error::Precondition(format!(
            "{z} bridges is below the threshold for cover size {p}; use rc_bounded_coloring"
        )));
    }
    let zp = z_prime(p)? as usize;
    let cover = x.to_vec();
    let outside_pendant = |v: usize| !x.contains(v) && g.degree(v) == 1;

    let hub = cover
        .iter()
        .copied()
        .max_by_key(|&c| {
            (
                g.neighbors(c).filter(|&v| outside_pendant(v)).count(),
                std::cmp::Reverse(c),
            )
        })
        .expect("p >= 1");
    let mut hub_edges: Vec<(usize, usize)> = g
        .incident(hub)
        .iter()
        .filter(|&&(v, _)| outside_pendant(v))
        .map(|&(v, e)| (v, e))
        .collect();
    if hub_edges.len() < zp {
        return Err(Error::Precondition(format!(
            "no cover vertex has {zp} pendants (best has {}); is x a minimum cover?",
            hub_edges.len()
        )));
    }
    hub_edges.sort();

    let mut colors = vec![0u32; g.m()];
    let mut next = 1u32;
    for &(_, e) in &hub_edges[..zp] {
        colors[e] = next;
        next += 1;
    }
    for e in bridge_set.iter() {
        if colors[e] == 0 {
            colors[e] = next;
            next += 1;
        }
    }
    debug_assert_eq!(next as usize, z + 1);

    let inner: Vec<usize> = (0..g.m())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            x.contains(u) && x.contains(v) && !bridge_set.contains(e)
        })
        .collect();
    for (i, &e) in inner.iter().enumerate() {
        colors[e] = (zp - (i + 1)) as u32;
    }

    let index_in_cover = |c: usize| cover.binary_search(&c).expect("cover vertex");
    let multi = neighborhood_types(g, x)?
        .into_iter()
        .filter(|t| t.neighborhood.len() > 1);
    for (i, ty) in multi.enumerate() {
        let y = ty.members.iter().next().expect("types are nonempty");
        for member in ty.members.iter() {
            let offset = if member == y { 0 } else { p };
            for &(c, e) in g.incident(member) {
                if !bridge_set.contains(e) {
                    colors[e] = (2 * p * i + 1 + offset + index_in_cover(c)) as u32;
                }
            }
        }
    }

    if let Some(e) = colors.iter().position(|&c| c == 0) {
        return Err(Error::Invariant(format!("edge {e} left uncolored")));
    }
    let col = EdgeColoring::new(colors, z as u32)?;
    if !is_rainbow_edge(g, &col)?.is_rainbow() {
        return Err(Error::Invariant(format!(
            "threshold coloring with {z} colors is not rainbow"
        )));
    }
    Ok(col)
}

/// Rainbow edge coloring with at most `z + p² + 2^p·2p` colors for graphs
/// below the bridge threshold.
///
/// Distinct colors on edges inside the cover, on pendant edges, and on the
/// edges of each type's smallest member; one shared color per (type, cover
/// vertex) for the remaining members.
pub fn rc_bounded_coloring(g: &Graph, x: &VertexSet) -> Result<EdgeColoring> {
    require_cover(g, x)?;
    let p = x.len();
    let z = bridges(g)?.len();
    if p > 0 && (z as u64) >= beta(p)? {
        return Err(Error::Precondition(format!(
            "{z} bridges reaches the threshold for cover size {p}; use rc_exact_above_threshold"
        )));
    }
    let mut colors = vec![0u32; g.m()];
    let mut next = 0u32;
    let mut fresh = || {
        next += 1;
        next
    };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if (x.contains(u) && x.contains(v)) || g.degree(u) == 1 || g.degree(v) == 1 {
            colors[e] = fresh();
        }
    }
    let types = neighborhood_types(g, x)?;
    for ty in &types {
        let y = ty.members.iter().next().expect("types are nonempty");
        for &(_, e) in g.incident(y) {
            if colors[e] == 0 {
                colors[e] = fresh();
            }
        }
    }
    for ty in &types {
        let y = ty.members.iter().next().expect("types are nonempty");
        for c in ty.neighborhood.iter() {
            let mut shared = None;
            for member in ty.members.iter().filter(|&v| v != y) {
                let e = g.edge_id(c, member).expect("type members see their neighborhood");
                if colors[e] == 0 {
                    colors[e] = *shared.get_or_insert_with(&mut fresh);
                }
            }
        }
    }
    let used = next;
    if let Some(e) = colors.iter().position(|&c| c == 0) {
        return Err(Error::Invariant(format!("edge {e} left uncolored")));
    }
    let bound = bounded_palette(z, p)?;
    if used as u64 > bound {
        return Err(Error::Invariant(format!(
            "bounded coloring used {used} colors, bound {bound}"
        )));
    }
    let col = EdgeColoring::new(colors, used)?;
    if !is_rainbow_edge(g, &col)?.is_rainbow() {
        return Err(Error::Invariant("bounded coloring is not rainbow".into()));
    }
    Ok(col)
}

/// How a win-win procedure reached its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// A structural bound answered yes with a constructed witness.
    StructuralYes,
    /// The bridge count reached the threshold, so the answer is `z <= k`.
    ThresholdExact,
    /// The instance fell through to the exact solver.
    BoundedFallback,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::StructuralYes => "structural-yes",
            Branch::ThresholdExact => "threshold-exact",
            Branch::BoundedFallback => "bounded-fallback",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WinWinOutcome {
    pub branch: Branch,
    pub yes: bool,
    /// Verified witness whenever `yes`, except for vertex variants whose
    /// optimum is 0.
    pub witness: Option<Coloring>,
    /// Exact-solver nodes spent (0 outside the fallback branch).
    pub nodes: u64,
}

impl WinWinOutcome {
    fn structural(witness: Coloring) -> Self {
        WinWinOutcome {
            branch: Branch::StructuralYes,
            yes: true,
            witness: Some(witness),
            nodes: 0,
        }
    }
}

fn checked(g: &Graph, variant: &Variant, witness: Coloring, k: usize) -> Result<Coloring> {
    if witness.count() as usize > k || !verify(g, variant, &witness)?.is_rainbow() {
        return Err(Error::Invariant(format!(
            "structural {variant} witness with {} colors fails for k = {k}",
            witness.count()
        )));
    }
    Ok(witness)
}

fn fallback(solver: &mut Solver, g: &Graph, variant: &Variant, k: usize) -> Result<WinWinOutcome> {
    let report = solver.decide(g, variant, k)?;
    Ok(WinWinOutcome {
        branch: Branch::BoundedFallback,
        yes: report.is_yes(),
        witness: report.witness,
        nodes: report.nodes,
    })
}

/// Is the variant's number at most `k`? Decided through a minimum vertex cover.
///
/// `variant` must be `Rc`, `Rvc` or `Srvc`.
pub fn decide_vc(
    solver: &mut Solver,
    g: &Graph,
    variant: &Variant,
    k: usize,
) -> Result<WinWinOutcome> {
    g.require_connected()?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if !matches!(variant, Variant::Rc | Variant::Rvc | Variant::Srvc) {
        return Err(Error::InvalidArgument(format!(
            "cover-based decision supports rc, rvc and srvc, not {variant}"
        )));
    }
    let x = min_vertex_cover(g);
    let p = x.len();
    match variant {
        Variant::Rvc if k >= 2 * p => {
            let w = Coloring::Vertex(rvc_coloring_2p(g, &x)?);
            Ok(WinWinOutcome::structural(checked(g, variant, w, k)?))
        }
        Variant::Srvc if k >= p * p => {
            let w = Coloring::Vertex(srvc_coloring_p2(g, &x)?);
            Ok(WinWinOutcome::structural(checked(g, variant, w, k)?))
        }
        Variant::Rc => {
            if p == 0 {
                let w = Coloring::Edge(EdgeColoring::new(Vec::new(), 0)?);
                return Ok(WinWinOutcome::structural(checked(g, variant, w, k)?));
            }
            let z = bridges(g)?.len();
            if z as u64 >= beta(p)? {
                let witness = if z <= k {
                    let w = Coloring::Edge(rc_exact_above_threshold(g, &x)?);
                    Some(checked(g, variant, w, k)?)
                } else {
                    None
                };
                return Ok(WinWinOutcome {
                    branch: Branch::ThresholdExact,
                    yes: z <= k,
                    witness,
                    nodes: 0,
                });
            }
            if k as u64 >= bounded_palette(z, p)? {
                let w = Coloring::Edge(rc_bounded_coloring(g, &x)?);
                return Ok(WinWinOutcome::structural(checked(g, variant, w, k)?));
            }
            fallback(solver, g, variant, k)
        }
        _ => fallback(solver, g, variant, k),
    }
}

/// Is `rc(g) <= m - k`?
pub fn saving_rc(solver: &mut Solver, g: &Graph, k: usize) -> Result<WinWinOutcome> {
    g.require_connected()?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let (n, m) = (g.n(), g.m());
    if m >= n + k {
        let tree = spanning_tree_min_diameter(g)?;
        let mut colors = vec![1u32; m];
        for (i, &(u, v)) in tree.edges().iter().enumerate() {
            colors[g.edge_id(u, v).expect("tree edge")] = i as u32 + 1;
        }
        let w = Coloring::Edge(EdgeColoring::new(colors, (n - 1) as u32)?);
        return Ok(WinWinOutcome::structural(checked(g, &Variant::Rc, w, m - k)?));
    }
    if m <= k {
        // rc >= 1 whenever there is an edge, and k >= 1 rules out m = 0 here
        return Ok(WinWinOutcome {
            branch: Branch::BoundedFallback,
            yes: false,
            witness: None,
            nodes: 0,
        });
    }
    fallback(solver, g, &Variant::Rc, m - k)
}

/// Is `rvc(g) <= n - k`?
///
/// A spanning tree with `k + 1` leaves gives a witness: distinct colors on
/// its internal vertices, color 1 on the leaves.
pub fn saving_rvc(solver: &mut Solver, g: &Graph, k: usize) -> Result<WinWinOutcome> {
    g.require_connected()?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = g.n();
    let mut tree = max_leaf_spanning_tree(g, k + 1)?;
    if tree.is_none() && n <= EXACT_LEAF_FALLBACK {
        let t = max_leaf_spanning_tree_exact(g)?;
        if crate::graph::leaf_count(&t) > k {
            tree = Some(t);
        }
    }
    if let Some(tree) = tree {
        let internal: Vec<usize> = (0..n).filter(|&v| tree.degree(v) >= 2).collect();
        let w = Coloring::Vertex(unique_on(n, &internal)?);
        return Ok(WinWinOutcome::structural(checked(g, &Variant::Rvc, w, n - k)?));
    }
    if k >= n {
        // only rvc = 0 fits, which needs diameter at most 1
        return Ok(WinWinOutcome {
            branch: Branch::BoundedFallback,
            yes: k == n && diameter(g)? <= 1,
            witness: None,
            nodes: 0,
        });
    }
    fallback(solver, g, &Variant::Rvc, n - k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn cover(g: &Graph) -> VertexSet {
        min_vertex_cover(g)
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta(1).unwrap(), 5);
        assert_eq!(beta(2).unwrap(), 42);
        assert_eq!(z_prime(2).unwrap(), 20);
        assert!(beta(0).is_err());
        assert!(beta(70).is_err());
    }

    #[test]
    fn star_threshold_coloring() {
        for leaves in [5, 9] {
            let g = generate::star(leaves + 1);
            let col = rc_exact_above_threshold(&g, &cover(&g)).unwrap();
            assert_eq!(col.count() as usize, leaves);
            assert_eq!(col.distinct_used(), leaves);
        }
        let small = generate::star(5);
        assert!(matches!(
            rc_exact_above_threshold(&small, &cover(&small)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn cover_vertex_colorings_small_cases() {
        let star = generate::star(6);
        assert!(rvc_coloring_2p(&star, &cover(&star)).unwrap().count() <= 2);
        let s = srvc_coloring_p2(&star, &cover(&star)).unwrap();
        assert_eq!(s.count(), 1);

        let p5 = generate::path(5);
        assert!(rvc_coloring_2p(&p5, &cover(&p5)).unwrap().count() <= 4);

        let c4 = generate::cycle(4);
        let x = VertexSet::from_iter(4, [0, 2]);
        let col = srvc_coloring_p2(&c4, &x).unwrap();
        assert!(col.count() <= 4);
    }

    #[test]
    fn bounded_coloring_small_cases() {
        for g in [generate::cycle(4), generate::complete(4), generate::petersen()] {
            let x = cover(&g);
            let z = bridges(&g).unwrap().len();
            let col = rc_bounded_coloring(&g, &x).unwrap();
            assert!(col.count() as u64 <= bounded_palette(z, x.len()).unwrap());
        }
    }

    #[test]
    fn pendant_heavy_threshold() {
        let g = generate::pendant_heavy(2, 42, 7).unwrap();
        let x = cover(&g);
        assert_eq!(x.len(), 2);
        let col = rc_exact_above_threshold(&g, &x).unwrap();
        assert_eq!(col.count(), 42);
    }

    #[test]
    fn decide_vc_examples() {
        let mut s = Solver::new();
        let star = generate::star(10);
        let yes = decide_vc(&mut s, &star, &Variant::Rc, 9).unwrap();
        assert_eq!(yes.branch, Branch::ThresholdExact);
        assert!(yes.yes && yes.witness.is_some());
        let no = decide_vc(&mut s, &star, &Variant::Rc, 8).unwrap();
        assert!(!no.yes);

        let p6 = generate::path(6);
        let out = decide_vc(&mut s, &p6, &Variant::Rvc, 6).unwrap();
        assert_eq!(out.branch, Branch::StructuralYes);

        let pet = generate::petersen();
        assert!(decide_vc(&mut s, &pet, &Variant::Srvc, 1).unwrap().yes);
        assert!(decide_vc(&mut s, &pet, &Variant::Src, 1).is_err());
    }

    #[test]
    fn saving_examples() {
        let mut s = Solver::new();
        let k5 = saving_rc(&mut s, &generate::complete(5), 5).unwrap();
        assert_eq!(k5.branch, Branch::StructuralYes);
        assert!(k5.witness.unwrap().count() <= 4);
        assert!(!saving_rc(&mut s, &generate::path(5), 1).unwrap().yes);
        let c6 = saving_rc(&mut s, &generate::cycle(6), 2).unwrap();
        assert!(c6.yes);
        assert_eq!(c6.branch, Branch::BoundedFallback);

        let star = saving_rvc(&mut s, &generate::star(6), 4).unwrap();
        assert_eq!(star.branch, Branch::StructuralYes);
        assert!(saving_rvc(&mut s, &generate::path(5), 2).unwrap().yes);
        assert!(!saving_rvc(&mut s, &generate::path(4), 3).unwrap().yes);
    }

    #[test]
    fn non_pendant_bridge_count_on_path() {
        // P_6 with cover {1, 3, 4}: the middle edges are bridges between cover vertices
        let g = generate::path(6);
        let x = cover(&g);
        assert!(non_pendant_bridges(&g, &x).unwrap() <= 2 * x.len() - 2);
    }
}
