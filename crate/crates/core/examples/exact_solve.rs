//! Exact optima of all four rainbow numbers on a few classic graphs.

use rainbow::generate::{self, Family};
use rainbow::{Solver, Variant};

fn main() -> rainbow::Result<()> {
    let mut solver = Solver::new();
    println!("{:<22} {:>3} {:>3} {:>3} {:>4}", "graph", "rc", "src", "rvc", "srvc");
    for desc in ["path:6", "cycle:6", "complete:5", "star:6", "petersen", "corona:complete:3"] {
        let family: Family = desc.parse()?;
        let g = family.generate(0)?;
        let mut row = Vec::new();
        for v in [Variant::Rc, Variant::Src, Variant::Rvc, Variant::Srvc] {
            row.push(solver.optimize(&g, &v)?.optimum().unwrap_or(0));
        }
        println!("{desc:<22} {:>3} {:>3} {:>3} {:>4}", row[0], row[1], row[2], row[3]);
    }

    // decision form, with the witness the search found
    let c6 = generate::cycle(6);
    for k in [2, 3] {
        let report = solver.decide(&c6, &Variant::Rc, k)?;
        println!("rc(C_6) <= {k}: {:?} witness {:?}", report.answer, report.witness.map(|w| w.colors().to_vec()));
    }

    // budgets bound the search; running out is an error, not a "no"
    let mut tight = Solver::with_budget(10);
    match tight.optimize(&generate::petersen(), &Variant::Src) {
        Err(e) => println!("petersen src with 10 nodes: {e}"),
        Ok(r) => println!("petersen src = {:?}", r.answer),
    }
    Ok(())
}
