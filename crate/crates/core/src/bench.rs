//! Batch runs over generated instances.
//!
//! For each instance and variant the harness computes the optimum, re-verifies
//! the witness, and cross-checks the cover-based decision procedure at the
//! optimum and one below it. Records come back in instance order whatever the
//! thread count, and contain no timing unless asked, so identical configs
//! give byte-identical output.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::fpt::{decide_vc, Branch};
use crate::generate::Family;
use crate::io::write_coloring;
use crate::solve::{Solver, DEFAULT_BUDGET};
use crate::verify::{verify, Variant};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub instances: Vec<Family>,
    pub seed: u64,
    pub budget: u64,
    pub variants: Vec<Variant>,
    /// Record wall time per instance (breaks byte-identical output).
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            instances: default_instances(),
            seed: 0,
            budget: DEFAULT_BUDGET,
            variants: vec![Variant::Rc, Variant::Src, Variant::Rvc, Variant::Srvc],
            timing: false,
        }
    }
}

pub fn default_instances() -> Vec<Family> {
    [
        "path:6",
        "cycle:6",
        "complete:5",
        "star:6",
        "petersen",
        "corona:complete:3",
        "random:7:0.4",
        "bounded-cover:8:2",
        "pendant-heavy:1:6",
    ]
    .iter()
    .map(|d| d.parse().expect("built-in descriptor"))
    .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub instance: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub variant: String,
    pub optimum: usize,
    /// Branch the cover-based procedure took at `k = optimum`, for the
    /// variants it supports.
    pub branch: Option<Branch>,
    pub nodes: u64,
    /// SHA-256 of the witness in coloring-file format; empty without witness.
    pub witness_sha256: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl BenchRecord {
    pub fn to_line(&self) -> String {
        let mut s = format!(
            "{} seed={} n={} m={} {} optimum={} nodes={}",
            self.instance, self.seed, self.n, self.m, self.variant, self.optimum, self.nodes
        );
        if let Some(b) = self.branch {
            write!(s, " branch={b}").unwrap();
        }
        if !self.witness_sha256.is_empty() {
            write!(s, " witness={}", &self.witness_sha256[..16]).unwrap();
        }
        if let Some(ms) = self.wall_ms {
            write!(s, " wall_ms={ms:.1}").unwrap();
        }
        s
    }
}

pub fn witness_checksum(col: &Coloring) -> String {
    hex::encode(Sha256::digest(write_coloring(col).as_bytes()))
}

fn run_one(family: &Family, variant: &Variant, cfg: &RunConfig) -> Result<BenchRecord> {
    let g = family.generate(cfg.seed)?;
    let mut solver = Solver::with_budget(cfg.budget);
    let start = Instant::now();
    let report = solver.optimize(&g, variant)?;
    let optimum = report.optimum().expect("optimize reports an optimum");
    let label = format!("{family} seed {} {variant}", cfg.seed);
    if let Some(w) = &report.witness {
        if !verify(&g, variant, w)?.is_rainbow() || w.count() as usize > optimum {
            return Err(Error::Invariant(format!(
                "{label}: witness {:?} does not re-verify",
                w.colors()
            )));
        }
    }
    let mut branch = None;
    let mut nodes = report.nodes;
    if matches!(variant, Variant::Rc | Variant::Rvc | Variant::Srvc) {
        for k in [optimum, optimum.saturating_sub(1)] {
            if k == 0 {
                continue;
            }
            let out = decide_vc(&mut solver, &g, variant, k)?;
            nodes += out.nodes;
            if out.yes != (optimum <= k) {
                return Err(Error::Invariant(format!(
                    "{label}: exact optimum {optimum} (witness {:?}) but cover-based decision at k = {k} says {} via {:?} (witness {:?})",
                    report.witness.as_ref().map(|w| w.colors().to_vec()),
                    out.yes,
                    out.branch,
                    out.witness.as_ref().map(|w| w.colors().to_vec()),
                )));
            }
            if k == optimum {
                branch = Some(out.branch);
            }
        }
    }
    Ok(BenchRecord {
        instance: family.to_string(),
        seed: cfg.seed,
        n: g.n(),
        m: g.m(),
        variant: variant.name().to_string(),
        optimum,
        branch,
        nodes,
        witness_sha256: report.witness.as_ref().map(witness_checksum).unwrap_or_default(),
        wall_ms: cfg.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

/// Runs every (instance, variant) pair, in parallel, returning records in
/// configuration order. The first failure in that order is returned.
pub fn run_suite(cfg: &RunConfig) -> Result<Vec<BenchRecord>> {
    let jobs: Vec<(&Family, &Variant)> = cfg
        .instances
        .iter()
        .flat_map(|f| cfg.variants.iter().map(move |v| (f, v)))
        .collect();
    jobs.par_iter()
        .map(|(f, v)| run_one(f, v, cfg))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

pub fn render_text(records: &[BenchRecord]) -> String {
    records.iter().fold(String::new(), |mut s, r| {
        writeln!(s, "{}", r.to_line()).unwrap();
        s
    })
}
