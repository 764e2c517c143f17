//! Vertex colorings built from a minimum vertex cover, next to the optimum.

use rainbow::fpt::{rvc_coloring_2p, srvc_coloring_p2};
use rainbow::generate;
use rainbow::graph::min_vertex_cover;
use rainbow::{Solver, Variant};

fn main() -> rainbow::Result<()> {
    let mut solver = Solver::new();
    println!("{:<24} {:>2} {:>9} {:>4} {:>10} {:>5}", "graph", "p", "tree-rvc", "rvc", "cover-srvc", "srvc");
    for seed in 0..8 {
        let p = 1 + seed as usize % 3;
        let g = generate::bounded_cover(9, p, seed)?;
        let x = min_vertex_cover(&g);
        let by_tree = rvc_coloring_2p(&g, &x)?;
        let by_cover = srvc_coloring_p2(&g, &x)?;
        let rvc = solver.optimize(&g, &Variant::Rvc)?.optimum().unwrap_or(0);
        let srvc = solver.optimize(&g, &Variant::Srvc)?.optimum().unwrap_or(0);
        println!(
            "{:<24} {:>2} {:>9} {:>4} {:>10} {:>5}",
            format!("bounded-cover:9:{p} #{seed}"),
            x.len(),
            by_tree.count(),
            rvc,
            by_cover.count(),
            srvc
        );
    }
    Ok(())
}
