//! How many colors below the trivial bound can be saved?

use rainbow::fpt::{saving_rc, saving_rvc};
use rainbow::generate;
use rainbow::Solver;

fn main() -> rainbow::Result<()> {
    let mut solver = Solver::new();
    for (name, g) in [
        ("complete:5", generate::complete(5)),
        ("cycle:6", generate::cycle(6)),
        ("path:5", generate::path(5)),
        ("star:6", generate::star(6)),
        ("petersen", generate::petersen()),
    ] {
        let (n, m) = (g.n(), g.m());
        let rc: Vec<String> = (1..=m)
            .map(|k| saving_rc(&mut solver, &g, k).map(|o| format!("{}{}", k, if o.yes { "+" } else { "-" })))
            .collect::<rainbow::Result<_>>()?;
        let rvc: Vec<String> = (1..=n)
            .map(|k| saving_rvc(&mut solver, &g, k).map(|o| format!("{}{}", k, if o.yes { "+" } else { "-" })))
            .collect::<rainbow::Result<_>>()?;
        println!("{name:<11} rc <= m-k: {}", rc.join(" "));
        println!("{:<11} rvc <= n-k: {}", "", rvc.join(" "));
    }
    Ok(())
}
