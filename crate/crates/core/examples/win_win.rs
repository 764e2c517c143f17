//! Cover-based decisions: which branch answers, and with what witness.

use rainbow::fpt::decide_vc;
use rainbow::generate;
use rainbow::{Solver, Variant};

fn main() -> rainbow::Result<()> {
    let mut solver = Solver::new();
    let cases = [
        ("star:10", generate::star(10), Variant::Rc, 9),
        ("star:10", generate::star(10), Variant::Rc, 8),
        ("path:6", generate::path(6), Variant::Rvc, 6),
        ("path:6", generate::path(6), Variant::Rvc, 3),
        ("petersen", generate::petersen(), Variant::Srvc, 1),
        ("cycle:7", generate::cycle(7), Variant::Srvc, 2),
        ("pendant-heavy:2:45", generate::pendant_heavy(2, 45, 3)?, Variant::Rc, 45),
    ];
    for (name, g, variant, k) in cases {
        let out = decide_vc(&mut solver, &g, &variant, k)?;
        println!(
            "{name:<20} {variant} <= {k:<3} {:<3} via {:<16} witness colors {:?}",
            if out.yes { "yes" } else { "no" },
            out.branch.to_string(),
            out.witness.map(|w| w.count())
        );
    }
    Ok(())
}
