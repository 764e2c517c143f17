//! Edge colorings on either side of the bridge-count threshold.

use rainbow::fpt::{beta, bounded_palette, rc_bounded_coloring, rc_exact_above_threshold};
use rainbow::generate;
use rainbow::graph::{bridges, min_vertex_cover};

fn main() -> rainbow::Result<()> {
    for p in 1..=4 {
        println!("threshold for cover size {p}: {}", beta(p)?);
    }

    // at or above the threshold, the bridge count colors everything
    for (p, z, seed) in [(1, 5, 0), (1, 9, 0), (2, 42, 1), (2, 50, 2)] {
        let g = generate::pendant_heavy(p, z, seed)?;
        let x = min_vertex_cover(&g);
        let col = rc_exact_above_threshold(&g, &x)?;
        println!(
            "pendant-heavy:{p}:{z}: n = {}, m = {}, rc witness with {} colors",
            g.n(),
            g.m(),
            col.distinct_used()
        );
    }

    // below it, a coloring within z + p^2 + 2p 2^p
    for seed in 0..4 {
        let g = generate::bounded_cover(8, 2, seed)?;
        let x = min_vertex_cover(&g);
        let z = bridges(&g)?.len();
        let col = rc_bounded_coloring(&g, &x)?;
        println!(
            "bounded-cover:8:2 #{seed}: {z} bridges, {} colors, bound {}",
            col.distinct_used(),
            bounded_palette(z, x.len())?
        );
    }
    Ok(())
}
