//! Check colorings against each variant and read back the failing pair.

use rainbow::generate;
use rainbow::verify::verify;
use rainbow::{Coloring, EdgeColoring, PairSet, Variant, VertexColoring};

fn main() -> rainbow::Result<()> {
    let c6 = generate::cycle(6);
    println!("C_6 edges: {:?}", c6.edges());

    // opposite edges share a color: every pair has a rainbow path
    let good = EdgeColoring::new(
        c6.edges()
            .iter()
            .map(|&(u, v)| if v == u + 1 { u as u32 % 3 + 1 } else { 3 })
            .collect(),
        3,
    )?;
    let bad = EdgeColoring::new(vec![1, 1, 2, 2, 1, 2], 2)?;
    for (name, col) in [("3 colors", good), ("2 colors", bad)] {
        let col = Coloring::Edge(col);
        for v in [Variant::Rc, Variant::Src] {
            match verify(&c6, &v, &col)?.witness() {
                None => println!("{name}: {v} ok"),
                Some((a, b)) => println!("{name}: {v} fails, first bad pair {a}-{b}"),
            }
        }
    }

    let p5 = generate::path(5);
    let interior = Coloring::Vertex(VertexColoring::new(vec![1, 1, 2, 3, 1], 3)?);
    println!("P_5 interior distinct: rvc {:?}", verify(&p5, &Variant::Rvc, &interior)?);

    // the subset variant only checks the listed pairs
    let corona = generate::clique_corona(3);
    let pairs = PairSet::from_pairs([(3, 4), (3, 5)])?;
    let phi = Coloring::Vertex(VertexColoring::new(vec![1, 2, 2, 1, 2, 2], 2)?);
    let verdict = verify(&corona, &Variant::Ssrvc(pairs), &phi)?;
    println!("K_3 ∘ K_1 with pairs 3-4, 3-5: {verdict:?}");
    Ok(())
}
