use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_qho-nodal"));
    c.env("NODAL_THREADS", "2");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn help_lists_subcommands() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for cmd in ["plot", "verify", "scaling"] {
        assert!(text.contains(cmd));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "two-domains", "--n", "3", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "two-domains", "--n", "3"]).status.code(), Some(2));
    // θ = π/4 is critical for n = 3.
    let out = run(&["verify", "two-domains", "--n", "3", "--theta", "0.7853981633974483"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn passing_claim_exits_zero_with_sorted_json() {
    let out = run(&["verify", "two-domains", "--n", "5", "--theta", "0.1", "--resolution", "256"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["computed"]["mu"], 2);
    let text = String::from_utf8(out.stdout).unwrap();
    let keys: Vec<usize> =
        ["\"claim\"", "\"computed\"", "\"expected\"", "\"parameters\""].iter().map(|k| text.find(k).unwrap()).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn failing_claim_exits_one() {
    // μ = 50 exceeds the Courant bound for degree 3.
    let out = run(&["verify", "bounds", "--n", "3", "--mu", "50"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn config_file_supplies_defaults_and_flags_win() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# defaults\nn = 5\ntheta = 0.1\nresolution = 128\n").unwrap();
    let c = cfg.to_str().unwrap();

    let out = run(&["--config", c, "verify", "two-domains"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["parameters"]["theta"], 0.1);

    let out = run(&["--config", c, "verify", "two-domains", "--theta", "0.2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["parameters"]["theta"], 0.2);

    std::fs::write(&cfg, "unknown_key = 3\n").unwrap();
    assert_eq!(run(&["--config", c, "verify", "two-domains"]).status.code(), Some(2));
}

fn plot_files(dir: &Path, tag: &str) -> (Vec<u8>, Vec<u8>) {
    let svg = dir.join(format!("{tag}.svg"));
    let js = dir.join(format!("{tag}.json"));
    let out = run(&[
        "plot",
        "--family",
        "stern",
        "--n",
        "7",
        "--theta",
        "0.35",
        "--resolution",
        "256",
        "--output",
        svg.to_str().unwrap(),
        "--json",
        js.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    (std::fs::read(svg).unwrap(), std::fs::read(js).unwrap())
}

#[test]
fn plot_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (svg_a, json_a) = plot_files(dir.path(), "a");
    let (svg_b, json_b) = plot_files(dir.path(), "b");
    assert_eq!(svg_a, svg_b);
    assert_eq!(json_a, json_b);
    let svg = String::from_utf8(svg_a).unwrap();
    assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"));
    assert!(svg.contains("viewBox"));
}

#[test]
fn scaling_csv_is_deterministic_across_thread_counts() {
    let args = ["scaling", "--n-max", "11", "--resolution", "192"];
    let a = bin().args(args).env("NODAL_THREADS", "1").output().unwrap();
    let b = bin().args(args).env("NODAL_THREADS", "4").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let csv = String::from_utf8(a.stdout).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("n,lambda,radius,length"));
    assert!(lines.count() >= 5);
}
