//! End-to-end runs of the `rainbow` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn generated(dir: &TempDir, family: &str) -> PathBuf {
    let path = dir.path().join(format!("{}.graph", family.replace(':', "_")));
    let out = run(&["generate", family, "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{out:?}");
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_exit_codes() {
    let dir = TempDir::new().unwrap();
    let petersen = generated(&dir, "petersen");
    assert_eq!(code(&run(&["solve", "-g", s(&petersen), "-v", "rc", "-k", "3"])), 0);
    assert_eq!(code(&run(&["solve", "-g", s(&petersen), "-v", "rc", "-k", "2"])), 1);
    let out = run(&["solve", "-g", s(&petersen), "-v", "src", "--budget", "10"]);
    assert_eq!(code(&out), 3, "{out:?}");
    assert_eq!(code(&run(&["solve", "-v", "rc"])), 2);
    assert_eq!(code(&run(&["solve", "-g", "/nonexistent", "-v", "rc"])), 2);
    assert_eq!(code(&run(&["solve", "-g", s(&petersen), "-v", "rc", "-k", "0"])), 2);

    let out = run(&["solve", "-g", s(&petersen), "-v", "rvc", "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["answer"], "optimum");
    assert_eq!(json["value"], 1);
}

#[test]
fn witnesses_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    for family in ["petersen", "cycle:6", "corona:complete:3", "random:7:0.4"] {
        let g = generated(&dir, family);
        for variant in ["rc", "src", "rvc", "srvc"] {
            let w = dir.path().join(format!("{variant}.witness"));
            let _ = std::fs::remove_file(&w);
            let out = run(&["solve", "-g", s(&g), "-v", variant, "-w", s(&w)]);
            assert_eq!(code(&out), 0, "{family} {variant}: {out:?}");
            if !w.exists() {
                continue;
            }
            let out = run(&["verify", "-g", s(&g), "-v", variant, "-c", s(&w)]);
            assert_eq!(code(&out), 0, "{family} {variant}: {out:?}");
        }
    }
}

#[test]
fn corrupted_witness_is_rejected() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "cycle:6");
    let w = dir.path().join("w");
    assert_eq!(code(&run(&["solve", "-g", s(&g), "-v", "rc", "-w", s(&w)])), 0);
    let text = std::fs::read_to_string(&w).unwrap();
    // one color everywhere cannot rainbow-connect a 6-cycle
    let flat: String = text
        .lines()
        .enumerate()
        .map(|(i, l)| if i == 0 { format!("{l}\n") } else { format!("{} 1\n", l.split(' ').next().unwrap()) })
        .collect();
    std::fs::write(&w, flat).unwrap();
    let out = run(&["verify", "-g", s(&g), "-v", "rc", "-c", s(&w)]);
    assert_eq!(code(&out), 1, "{out:?}");

    std::fs::write(&w, "c 2 edge\n0 1\n").unwrap();
    assert_eq!(code(&run(&["verify", "-g", s(&g), "-v", "rc", "-c", s(&w)])), 2);
}

#[test]
fn ssrvc_needs_pairs() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "corona:complete:3");
    assert_eq!(code(&run(&["solve", "-g", s(&g), "-v", "ssrvc"])), 2);
    let pairs = dir.path().join("p");
    std::fs::write(&pairs, "3 4\n3 5\n").unwrap();
    let out = run(&["solve", "-g", s(&g), "-v", "ssrvc", "--pairs", s(&pairs), "-k", "3"]);
    assert_eq!(code(&out), 0, "{out:?}");
}

#[test]
fn reduce_writes_instance_files() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "complete:3");
    let prefix = dir.path().join("k3");
    let src = dir.path().join("src.col");
    std::fs::write(&src, "c 3 vertex\n0 1\n1 2\n2 3\n").unwrap();
    let out = run(&[
        "reduce", "--from", "coloring", "-g", s(&g), "-k", "3", "--to", "srvc", "-o", s(&prefix), "--forward", s(&src),
        "--check",
    ]);
    assert_eq!(code(&out), 0, "{out:?}");
    for ext in ["graph", "roles", "dot", "witness"] {
        assert!(prefix.with_extension(ext).exists(), "{ext}");
    }
    let target = prefix.with_extension("graph");
    let witness = prefix.with_extension("witness");
    let out = run(&["verify", "-g", s(&target), "-v", "srvc", "-c", s(&witness)]);
    assert_eq!(code(&out), 0, "{out:?}");
    let out = run(&["reduce", "-g", s(&g), "-k", "3", "--backward", s(&witness)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("c 3 vertex\n0 1\n1 2\n2 3\n"));

    // an improper source coloring is bad input
    std::fs::write(&src, "c 3 vertex\n0 1\n1 1\n2 3\n").unwrap();
    let out = run(&["reduce", "-g", s(&g), "-k", "3", "-o", s(&prefix), "--forward", s(&src)]);
    assert_eq!(code(&out), 2);

    let pairs = dir.path().join("pairs");
    std::fs::write(&pairs, "3 4\n").unwrap();
    let out = run(&["reduce", "--from", "ssrvc", "--clique", "3", "--pairs", s(&pairs), "-k", "3", "--to", "ssrvc", "-o", s(&prefix)]);
    assert_eq!(code(&out), 0, "{out:?}");
    assert!(prefix.with_extension("pairs").exists());
    assert_eq!(code(&run(&["reduce", "--from", "ssrvc", "-k", "3"])), 2);
    assert_eq!(code(&run(&["reduce", "-g", s(&g), "-k", "2"])), 2);
}

#[test]
fn fpt_subcommand() {
    let dir = TempDir::new().unwrap();
    let star = generated(&dir, "star:6");
    let out = run(&["fpt", "-g", s(&star), "--variant", "rc", "-k", "5", "--json"]);
    assert_eq!(code(&out), 0, "{out:?}");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["yes"], true);
    assert_eq!(code(&run(&["fpt", "-g", s(&star), "--variant", "rc", "-k", "4"])), 1);
    let path = generated(&dir, "path:4");
    assert_eq!(code(&run(&["fpt", "-g", s(&path), "--saving", "rvc", "-k", "3"])), 1);
    assert_eq!(code(&run(&["fpt", "-g", s(&path), "--saving", "rvc", "-k", "2"])), 0);
    assert_eq!(code(&run(&["fpt", "-g", s(&path), "-k", "2"])), 2);
}

#[test]
fn bench_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |o: &Path| {
        vec![
            "bench".to_string(),
            "--instance".into(),
            "cycle:5".into(),
            "--instance".into(),
            "random:6:0.5".into(),
            "--seed".into(),
            "3".into(),
            "--json".into(),
            "-o".into(),
            o.to_str().unwrap().into(),
        ]
    };
    for o in [&a, &b] {
        let argv = args(o);
        let out = run(&argv.iter().map(String::as_str).collect::<Vec<_>>());
        assert_eq!(code(&out), 0, "{out:?}");
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let text1 = stdout(&run(&["bench", "--instance", "star:5"]));
    let text2 = stdout(&run(&["bench", "--instance", "star:5"]));
    assert_eq!(text1, text2);
    assert_eq!(text1.lines().count(), 4);

    let out = run(&["bench", "--empty"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
}
