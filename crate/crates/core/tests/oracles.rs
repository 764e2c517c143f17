//! Library routines against the exhaustive references in `common`.

mod common;

use common::*;
use rainbow::fpt::{decide_vc, saving_rc, saving_rvc};
use rainbow::generate::{connected_graphs, random_connected};
use rainbow::graph::{
    bridges, is_vertex_cover, leaf_count, max_leaf_spanning_tree, max_leaf_spanning_tree_exact,
    min_vertex_cover, spanning_tree_min_diameter, tree_diameter as lib_tree_diameter,
};
use rainbow::{Graph, Solver, Variant};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_connected() -> Vec<Graph> {
    (1..=6).flat_map(connected_graphs).collect()
}

#[test]
fn bridges_match_deletion_test() {
    let corpus = small_connected()
        .into_iter()
        .chain(random_corpus().into_iter().map(|(_, g)| g));
    for g in corpus {
        let fast: Vec<usize> = bridges(&g).unwrap().iter().collect();
        assert_eq!(fast, brute_bridges(&g), "{:?}", g.edges());
    }
}

#[test]
fn vertex_cover_is_minimum() {
    for g in small_connected() {
        let x = min_vertex_cover(&g);
        assert!(is_vertex_cover(&g, &x));
        assert_eq!(x.len(), brute_min_cover(&g), "{:?}", g.edges());
    }
    for seed in 0..40 {
        let g = random_connected(11, 0.3, seed).unwrap();
        assert_eq!(min_vertex_cover(&g).len(), brute_min_cover(&g));
    }
}

#[test]
fn spanning_trees_are_extremal() {
    for g in small_connected() {
        let trees = spanning_trees(&g);
        let best_diam = trees.iter().map(tree_diameter).min().unwrap();
        let best_leaves = trees.iter().map(leaves).max().unwrap();

        let t = spanning_tree_min_diameter(&g).unwrap();
        assert!(t.is_tree() && t.n() == g.n());
        assert!(t.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        assert_eq!(lib_tree_diameter(&t), best_diam, "{:?}", g.edges());

        let t = max_leaf_spanning_tree_exact(&g).unwrap();
        assert!(t.is_tree() && t.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
        assert_eq!(leaf_count(&t), best_leaves, "{:?}", g.edges());

        if let Some(t) = max_leaf_spanning_tree(&g, 0).unwrap() {
            assert!(t.is_tree() && leaf_count(&t) <= best_leaves);
        }
    }
}

#[test]
fn optimize_matches_enumeration() {
    let mut solver = Solver::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in (1..=5).flat_map(connected_graphs) {
        let mut variants = vec![Variant::Rc, Variant::Src, Variant::Rvc, Variant::Srvc];
        variants.push(Variant::Ssrvc(random_pairs(g.n(), &mut rng)));
        for v in &variants {
            // edge palettes beyond 4 on 10 edges are out of reach for enumeration
            if v.colors_edges() && g.m() > 7 {
                continue;
            }
            let got = solver.optimize(&g, v).unwrap().optimum().unwrap();
            assert_eq!(got, brute_optimum(&g, v), "{v} on {:?}", g.edges());
        }
    }
}

#[test]
fn chromatic_matches_enumeration() {
    let mut solver = Solver::new();
    for g in small_connected() {
        for k in 1..=4 {
            let got = solver.chromatic_decide(&g, k).unwrap();
            assert_eq!(got.is_some(), brute_chromatic_ok(&g, k as u32), "k = {k} on {:?}", g.edges());
            if let Some(c) = got {
                assert!(c.is_proper(&g) && c.count() as usize <= k);
            }
        }
    }
}

#[test]
fn win_win_procedures_agree_exhaustively() {
    let mut solver = Solver::new();
    for g in (2..=6).flat_map(connected_graphs) {
        let rc = solver.optimize(&g, &Variant::Rc).unwrap().optimum().unwrap();
        let rvc = solver.optimize(&g, &Variant::Rvc).unwrap().optimum().unwrap();
        let srvc = solver.optimize(&g, &Variant::Srvc).unwrap().optimum().unwrap();
        for k in 1..=g.n() {
            for (v, opt) in [(Variant::Rc, rc), (Variant::Rvc, rvc), (Variant::Srvc, srvc)] {
                let out = decide_vc(&mut solver, &g, &v, k).unwrap();
                assert_eq!(out.yes, opt <= k, "{v} k = {k} on {:?}", g.edges());
            }
            let out = saving_rc(&mut solver, &g, k).unwrap();
            assert_eq!(out.yes, g.m() > k && rc <= g.m() - k, "saving rc k = {k} on {:?}", g.edges());
            let out = saving_rvc(&mut solver, &g, k).unwrap();
            assert_eq!(out.yes, rvc + k <= g.n(), "saving rvc k = {k} on {:?}", g.edges());
        }
    }
}
