//! From 3-coloring to strong rainbow vertex coloring on a diameter-3 graph.

use rainbow::generate;
use rainbow::graph::diameter;
use rainbow::io::write_roles;
use rainbow::reductions::{
    check_equivalence, reduce_coloring_to_srvc, reduce_ssrvc_to_srvc, Reduction, SsrvcInstance,
};
use rainbow::{PairSet, Solver, VertexColoring};

fn main() -> rainbow::Result<()> {
    let mut solver = Solver::new();

    // K_3 ∘ K_1 with pendants 3, 4, 5 and pairs {3,4}, {3,5}
    let inst = SsrvcInstance::new(3, PairSet::from_pairs([(3, 4), (3, 5)])?, 3)?;
    let step = reduce_ssrvc_to_srvc(&inst)?;
    println!(
        "subset instance -> {} vertices, {} edges, diameter {}",
        step.graph().n(),
        step.graph().m(),
        diameter(step.graph())?
    );
    print!("{}", write_roles(step.roles()));
    let phi = VertexColoring::new(vec![1, 2, 3, 1, 2, 3], 3)?;
    let extended = step.forward(&phi)?;
    println!("extended coloring {:?} accepted: {}", extended.colors(), step.target_accepts(&extended)?);

    // the full chain on an odd cycle (3-colorable) and on K_4 (not)
    for (name, g) in [("C_5", generate::cycle(5)), ("K_4", generate::complete(4))] {
        let (first, second) = reduce_coloring_to_srvc(&g, 3)?;
        let a = check_equivalence(&first, &mut solver)?;
        let b = check_equivalence(&second, &mut solver)?;
        println!(
            "{name}: 3-colorable {} | subset step agrees ({} nodes) | diameter-3 step agrees ({} nodes, {} vertices)",
            a.answer,
            a.source_nodes + a.target_nodes,
            b.source_nodes + b.target_nodes,
            second.graph().n()
        );
    }
    Ok(())
}
