use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pluecker-verify"))
        .args(args)
        .env("PLUECKER_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pluecker-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_exit_status_tracks_the_verdict() {
    let ok = bin(&["verify", "p2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).trim_end().ends_with("verdict: PASS (14/14 claims)"));

    let bad = bin(&["verify", "p2", "--perturb"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("square leaving position 2, entry (0, 1): -2*x1"));

    let refused = bin(&["verify", "g36", "--prime", "31"]);
    assert_eq!(refused.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("must exceed"));
}

#[test]
fn json_reports() {
    let o = bin(&["--format", "json", "verify", "two-points", "--primes", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["check"], "two-points");
    assert_eq!(v["pass"], true);
    assert!(v["claims"].as_array().unwrap().iter().all(|c| ["published", "derived", "trivial"].contains(&c["source"].as_str().unwrap())));
    assert!(v.get("timings_ms").is_none_or(|t| t.is_null()));

    let timed = bin(&["--format", "json", "--timings", "verify", "section", "--m", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&timed)).unwrap();
    assert!(v["timings_ms"]["total"].is_u64());
}

#[test]
fn ideal_utilities() {
    let cubic = scratch("cubic.txt", "# twisted cubic\nring: x, y, z, w over Q\nx*z - y^2\ny*w - z^2\nx*w - y*z\n");
    let h = bin(&["hilbert", cubic.to_str().unwrap()]);
    assert_eq!(h.status.code(), Some(0));
    assert!(stdout(&h).contains("projective dimension: 1\ndegree: 3"));

    let gb = bin(&["gb", cubic.to_str().unwrap()]);
    assert_eq!(stdout(&gb), "ring: x, y, z, w over Q\nz^2 - y*w\ny*z - x*w\ny^2 - x*z\n");

    let embedded = scratch("embedded.txt", "ring: x, y, z over F32003\nx^2, x*y, x*z\n");
    let s = bin(&["saturate", embedded.to_str().unwrap()]);
    assert_eq!(stdout(&s), "ring: x, y, z over F32003\nx\n");

    let points = scratch("points.txt", "ring: x, y over F5\nx^2 + 1, y\n");
    let r = bin(&["radical0", points.to_str().unwrap()]);
    assert!(stdout(&r).contains("# rational points: (2, 0), (3, 0)"));

    let line = scratch("line.txt", "ring: x, y over Q\nx - y\n");
    let e = bin(&["radical0", line.to_str().unwrap()]);
    assert_eq!(e.status.code(), Some(2));

    let broken = scratch("broken.txt", "ring: x, y over Q\nx + * y\n");
    let e = bin(&["gb", broken.to_str().unwrap()]);
    assert_eq!(e.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&e.stderr).contains("syntax error"));
}

#[test]
fn pluecker_and_homology() {
    let p = bin(&["pluecker", "--grassmann", "2,5"]);
    assert_eq!(stdout(&p).lines().count(), 6);

    let k = scratch(
        "koszul.json",
        r#"{"vars": ["x", "y"], "field": "Q", "modules": [[0], [-1, -1], [-2]],
            "differentials": [[["y", "x"]], [["x"], ["-y"]]]}"#,
    );
    let o = bin(&["homology", k.to_str().unwrap(), "--degree-window", "0..5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "degree window: 0..5\nH_0 in degree 0: 1\n");

    let not_complex = scratch(
        "bad.json",
        r#"{"vars": ["x", "y"], "field": "Q", "modules": [[0], [-1, -1], [-2]],
            "differentials": [[["y", "x"]], [["x"], ["y"]]]}"#,
    );
    let o = bin(&["homology", not_complex.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a complex"));
}
