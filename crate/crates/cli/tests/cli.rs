use std::fs;
use std::path::Path;

use assert_cmd::Command;
use tempfile::TempDir;

const FIG3: &str = r#"{"g":9.8,"h0":1,"k":1,"epsilon":0.1,"omega0":2,"linearization":"shear","root_sign":"+","beta":1,"t_end":10,"n_samples":1000}"#;

fn bin(dir: &Path) -> Command {
    let mut cmd = Command::cargo_bin("vortexpaths").unwrap();
    cmd.current_dir(dir);
    cmd
}

fn with_config(text: &str) -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("run.json"), text).unwrap();
    dir
}

#[test]
fn speed_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(dir.path())
        .args(["speed", "--preset", "fig3"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    assert_eq!(
        String::from_utf8(out).unwrap(),
        include_str!("golden/fig3_speed.txt")
    );
}

#[test]
fn reproduce_summary_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    bin(dir.path())
        .args(["reproduce", "--preset", "fig3", "--out", "g"])
        .assert()
        .success();
    let got = fs::read_to_string(dir.path().join("g_summary.csv")).unwrap();
    assert_eq!(got, include_str!("golden/fig3_summary.csv"));
}

#[test]
fn negative_vorticity_summary() {
    let dir = tempfile::tempdir().unwrap();
    bin(dir.path())
        .args(["reproduce", "--preset", "neg20", "--out", "n"])
        .assert()
        .success();
    let got = fs::read_to_string(dir.path().join("n_summary.csv")).unwrap();
    for q in [
        "Z0_hat,7.98",
        "p,9.554",
        "q,2.485",
        "threshold,9.9967",
        "classification,HyperellipticOnly",
    ] {
        assert!(got.contains(q), "{q} missing from\n{got}");
    }
    assert!(!got.contains(",fail"));
}

#[test]
fn config_trajectory_round_trips() {
    let dir = with_config(FIG3);
    bin(dir.path())
        .args(["trajectory", "--config", "run.json", "--out", "t", "--svg"])
        .assert()
        .success();
    let mut reader = csv::Reader::from_path(dir.path().join("t_trajectory.csv")).unwrap();
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["t", "x", "z", "u", "v", "X", "Z", "method"]);
    let mut rows = 0;
    for rec in reader.records() {
        let rec = rec.unwrap();
        for field in rec.iter().take(7) {
            let v: f64 = field.parse().unwrap();
            assert_eq!(format!("{v:.16e}"), field);
        }
        assert_eq!(&rec[7], "elliptic");
        rows += 1;
    }
    assert_eq!(rows, 1000);
    let svg = fs::read_to_string(dir.path().join("t_trajectory.svg")).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 1);
}

#[test]
fn stagnation_and_field_files() {
    let dir = with_config(FIG3);
    bin(dir.path())
        .args(["stagnation", "--config", "run.json", "--out", "s"])
        .assert()
        .success();
    let text = fs::read_to_string(dir.path().join("s_stagnation.csv")).unwrap();
    assert!(text.starts_with("Z,z,kind,residual"));
    assert_eq!(text.lines().count(), 3);
    bin(dir.path())
        .args(["field", "--config", "run.json", "--out", "f"])
        .assert()
        .success();
    let text = fs::read_to_string(dir.path().join("f_field.csv")).unwrap();
    assert_eq!(text.lines().count(), 1 + 64 * 32);
    assert!(!text.contains('\r'));
}

#[test]
fn missing_field_is_a_validation_error() {
    let dir = with_config(&FIG3.replace("\"g\":9.8,", ""));
    bin(dir.path())
        .args(["speed", "--config", "run.json"])
        .assert()
        .code(1)
        .stderr(predicates::str::contains("`g`"));
}

#[test]
fn exit_codes() {
    let dir = with_config(&FIG3.replace("0.1", "1.5"));
    bin(dir.path())
        .args(["speed", "--config", "run.json"])
        .assert()
        .code(1);
    bin(dir.path())
        .args(["speed", "--config", "absent.json"])
        .assert()
        .code(3);
    bin(dir.path()).args(["speed"]).assert().code(1);
    bin(dir.path()).args(["nonsense"]).assert().code(1);
    // The closed form needs a turning-point start, not an initial position.
    let dir = with_config(&FIG3.replace(
        "\"beta\":1",
        "\"initial\":{\"x0\":0,\"z0\":0.5},\"method\":\"elliptic\"",
    ));
    bin(dir.path())
        .args(["trajectory", "--config", "run.json"])
        .assert()
        .code(2);
    bin(dir.path())
        .args([
            "trajectory",
            "--config",
            "run.json",
            "--out",
            "/nonexistent/dir/x",
        ])
        .assert()
        .code(2);
    let dir = with_config(FIG3);
    bin(dir.path())
        .args([
            "speed",
            "--config",
            "run.json",
            "--out",
            "/nonexistent/dir/x",
        ])
        .assert()
        .success();
    bin(dir.path())
        .args([
            "field",
            "--config",
            "run.json",
            "--out",
            "/nonexistent/dir/x",
        ])
        .assert()
        .code(3);
}

#[test]
fn log_level_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    bin(dir.path())
        .env("VORTEXPATHS_LOG", "info")
        .args(["trajectory", "--preset", "fig3"])
        .assert()
        .success()
        .stderr(predicates::str::contains("trajectory by elliptic"));
    bin(dir.path())
        .env("VORTEXPATHS_LOG", "error")
        .args(["trajectory", "--preset", "fig3"])
        .assert()
        .success()
        .stderr(predicates::str::is_empty());
}

#[test]
fn outputs_are_deterministic() {
    let dir = with_config(FIG3);
    for prefix in ["a", "b"] {
        bin(dir.path())
            .args([
                "trajectory",
                "--config",
                "run.json",
                "--svg",
                "--out",
                prefix,
            ])
            .assert()
            .success();
    }
    for suffix in ["trajectory.csv", "trajectory.svg"] {
        let a = fs::read(dir.path().join(format!("a_{suffix}"))).unwrap();
        let b = fs::read(dir.path().join(format!("b_{suffix}"))).unwrap();
        assert_eq!(a, b, "{suffix}");
    }
}
