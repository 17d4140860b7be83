use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn spreaders(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spreaders"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = spreaders(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn table1_lists_maximal_triples() {
    let out = ok(&["table1", "--beta", "0.5"]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "beta,x1,x2,x3,I");
    assert_eq!(rows[1], "0.5,1,1,2,0.984375");
    assert!(rows.iter().any(|r| r.starts_with("0.5,0,3,4,")));
}

#[test]
fn table1_rejects_small_bound() {
    let out = spreaders(&["table1", "--beta", "0.3", "--bound", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn select_writes_trailer() {
    let out = ok(&["select", "--graph", s(&fixture("k23.txt")), "--algo", "dri", "--m", "3", "--beta", "0.8"]);
    assert_eq!(
        out,
        "rank,node_label,degree,coreness\n1,a,3,2\n2,b,3,2\n# converged_reason=no_feasible_candidate\n"
    );
}

#[test]
fn dri_without_beta_fails() {
    let out = spreaders(&["select", "--graph", s(&fixture("k23.txt")), "--algo", "dri", "--m", "2"]);
    assert!(!out.status.success());
}

#[test]
fn select_ri_simulate_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let graph = fixture("ba300.txt");
    let seeds = dir.path().join("seeds.csv");
    ok(&["select", "--graph", s(&graph), "--algo", "dsn", "--m", "10", "--out", s(&seeds)]);

    let ri = ok(&["ri", "--graph", s(&graph), "--seeds", s(&seeds), "--beta", "0.1"]);
    assert!(ri.starts_with("node_label,n1,n2,n3,I,RI\n"));
    assert_eq!(ri.lines().filter(|l| !l.starts_with('#')).count(), 1 + 290);
    let trailer = ri.lines().last().unwrap();
    assert!(trailer.starts_with("# beta=0.1"), "{trailer}");

    let summary = dir.path().join("summary.json");
    let curve = ok(&[
        "simulate", "--graph", s(&graph), "--seeds", s(&seeds), "--beta", "0.1", "--reps", "30", "--seed", "4",
        "--summary", s(&summary),
    ]);
    assert!(curve.starts_with("step,mean_S,mean_I,mean_R,mean_AIF\n0,290,10,0,"));
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(&summary).unwrap()).unwrap();
    assert_eq!(json["reps"], 30);
    assert_eq!(json["n_seeds"], 10);
    let mean = json["final_aif_mean"].as_f64().unwrap();
    let last: f64 = curve.lines().last().unwrap().rsplit(',').next().unwrap().parse().unwrap();
    assert!((mean - last).abs() < 1e-9);
}

#[test]
fn stats_writes_csv_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("stats.csv");
    ok(&["stats", s(&fixture("triangle.txt")), s(&fixture("cycle6.txt")), "--out", s(&out)]);
    let csv = std::fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 3);
    assert!(csv.contains("\ntriangle,3,3,2,1,1,0.5\n"), "{csv}");
    let sidecar: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("stats.json")).unwrap()).unwrap();
    assert_eq!(sidecar[1]["stats"]["distance_mode"]["mode"], "exact");
}

#[test]
fn experiment_commands_write_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let config = fixture("experiment.json");
    let out = s(dir.path());
    for (args, stem) in [
        (vec!["sweep"], "sweep"),
        (vec!["stability"], "stability"),
        (vec!["properties"], "properties"),
        (vec!["curve", "--algo", "dsn", "--m", "5", "--beta", "0.2"], "curve_dsn_m5_beta0.2"),
    ] {
        let mut full = args.clone();
        full.extend(["--config", s(&config), "--output-dir", out]);
        ok(&full);
        let csv = std::fs::read_to_string(dir.path().join(format!("{stem}.csv"))).unwrap();
        assert!(csv.lines().count() > 1, "{stem}");
        let sidecar: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join(format!("{stem}.json"))).unwrap()).unwrap();
        assert_eq!(sidecar["command"], args[0]);
        assert_eq!(sidecar["graph"]["nodes"], 300);
    }
}
