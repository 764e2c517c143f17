//! Instance families and the text formats.

use rainbow::generate::{connected_graphs, Family};
use rainbow::io;
use rainbow::{Coloring, VertexColoring};

fn main() -> rainbow::Result<()> {
    for desc in ["star:6", "corona:complete:3", "random:8:0.4", "pendant-heavy:2:42", "bounded-cover:9:3"] {
        let family: Family = desc.parse()?;
        let g = family.generate(7)?;
        println!("{family} (seed 7): n = {}, m = {}", g.n(), g.m());
    }
    let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
    println!("connected graphs up to isomorphism on 1..=6 vertices: {counts:?}");

    let g: Family = "corona:complete:3".parse()?;
    let g = g.generate(0)?;
    let text = io::write_edge_list(&g);
    print!("edge list:\n{text}");
    assert_eq!(io::parse_graph(&text)?, g);
    let dimacs = io::write_dimacs(&g);
    assert_eq!(io::parse_graph(&dimacs)?, g);

    let col = Coloring::Vertex(VertexColoring::new(vec![1, 2, 3, 1, 2, 3], 3)?);
    print!("coloring file:\n{}", io::write_coloring(&col));
    println!("DOT:\n{}", g.to_dot(None));
    Ok(())
}
