//! The batch harness on a small custom suite.

use rainbow::bench::{render_text, run_suite, RunConfig};

fn main() -> rainbow::Result<()> {
    let cfg = RunConfig {
        instances: ["cycle:5", "petersen", "bounded-cover:7:2"]
            .iter()
            .map(|d| d.parse())
            .collect::<rainbow::Result<_>>()?,
        seed: 3,
        ..RunConfig::default()
    };
    print!("{}", render_text(&run_suite(&cfg)?));
    Ok(())
}
