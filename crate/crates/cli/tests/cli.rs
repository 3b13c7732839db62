use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn milnor(args: &[&str]) -> (i32, String, String) {
    milnor_env(args, &[])
}

fn milnor_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_milnor"));
    cmd.args(args).env_remove("MILNOR_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = milnor(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn matrix_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn bound_examples() {
    let v = json(&["bound", "--poly", "z^2*y - x*y^2"]);
    assert_eq!(v["instance"]["s"], "1");
    assert_eq!(v["bounds"]["main"], "2");
    assert_eq!(v["bounds"]["naive"], "3");

    let v = json(&["bound", "--poly", "r^2*y^2 - t*x^3", "--vars", "x,y,r,t"]);
    assert_eq!(v["bounds"]["best"], "0");
    assert_eq!(v["bounds"]["special"], "0");
    let labels: Vec<&str> = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["V(x,y)", "V(x,r)"]);

    let v = json(&[
        "bound",
        "--poly",
        "u^25 + w^24*z - x^22*y*z^2",
        "--component",
        "u,w,x",
        "--component",
        "u,w,z",
    ]);
    assert_eq!(v["bounds"]["naive"], "12720");
    assert_eq!(v["bounds"]["main"], "12716");
}

#[test]
fn text_report_follows_the_presentation_order() {
    let (code, out, _) = milnor(&["bound", "--poly", "z^2*y - x*y^2", "--multiple-of", "2"]);
    assert_eq!(code, 0);
    let keys = [
        "critical locus",
        "components",
        "generic mu",
        "naive bound",
        "main bound",
        "refined bound",
    ];
    let positions: Vec<usize> = keys
        .iter()
        .map(|k| out.find(k).unwrap_or_else(|| panic!("{k} missing")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{out}");
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = [
        "bound",
        "--poly",
        "r^2*y^2 - t*x^3",
        "--seed",
        "9",
        "--format",
        "json",
    ];
    let (a, b) = (milnor(&args), milnor(&args));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["config"]["seed"], "9");
    for key in ["instance", "components", "bounds", "caveats", "config"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn mu_examples() {
    let (code, out, _) = milnor(&["mu", "--poly", "4*y^2 - 3*x^3", "--oracle-cap", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("mu = 2"));
    assert!(out.contains("stable at 2"));
    let (code, out, _) = milnor(&["mu", "--poly", "x^2 + y^2"]);
    assert_eq!((code, out.lines().last()), (0, Some("mu = 1")));
    let (code, out, _) = milnor(&["mu", "--poly", "x*y^2"]);
    assert_eq!(code, 2);
    assert!(out.contains("non-isolated"));
}

#[test]
fn charcheck_examples() {
    let id = matrix_file("3\n1 0 0\n0 1 0\n0 0 1\n");
    let (code, out, _) = milnor(&[
        "charcheck",
        "--matrix",
        id.path().to_str().unwrap(),
        "--p",
        "3",
        "--m",
        "1",
        "--full",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: equal"));
    assert!(out.contains("quasi-unipotent: yes (cyclotomic factors: Phi_1 * Phi_1 * Phi_1)"));

    let comp = matrix_file("2\n0 -1\n1 -1\n");
    let v = json(&[
        "charcheck",
        "--matrix",
        comp.path().to_str().unwrap(),
        "--p",
        "5",
        "--m",
        "2",
    ]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["char_a_mod_p"], "x^2 + x + 1");

    let rand4 = matrix_file("4\n3 -7 2 0\n1 4 -9 5\n-2 8 6 -1\n7 0 -3 2\n");
    let v = json(&[
        "charcheck",
        "--matrix",
        rand4.path().to_str().unwrap(),
        "--p",
        "2",
        "--m",
        "3",
    ]);
    assert_eq!(v["equal"], true);
}

#[test]
fn nonreduced_examples() {
    let v = json(&["nonreduced", "--mults", "2,4", "--degree", "6"]);
    assert_eq!(
        (v["components"].as_str(), v["rank_h0"].as_str()),
        (Some("2"), Some("1"))
    );
    let v = json(&["nonreduced", "--mults", "1,3", "--degree", "4"]);
    assert_eq!(v["rank_h0"], "0");
    let v = json(&[
        "nonreduced",
        "--mults",
        "3,5",
        "--degree",
        "8",
        "--coprime-set",
        "5",
    ]);
    assert_eq!(v["coprime_bound"], "2");
}

#[test]
fn usage_and_parse_errors_exit_1() {
    for args in [
        vec!["bound"],
        vec!["frobnicate"],
        vec!["bound", "--poly", "x^2 +"],
        vec!["bound", "--poly", "x^2 + y"],
        vec!["bound", "--poly", "z^2*y - x*y^2", "--component", "x,z"],
        vec!["bound", "--poly", "z^2*y - x*y^2", "--component", "q"],
        vec!["bound", "--poly", "z^2*y - x*y^2", "--prime-power", "2^3"],
        vec!["mu", "--poly", "x^2 + 1"],
        vec![
            "charcheck",
            "--matrix",
            "/nonexistent/matrix.txt",
            "--p",
            "3",
        ],
        vec!["nonreduced", "--mults", "2,4", "--degree", "5"],
    ] {
        let (code, _, err) = milnor(&args);
        assert_eq!(code, 1, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
    let bad = matrix_file("2\n1 2\n");
    let (code, _, _) = milnor(&[
        "charcheck",
        "--matrix",
        bad.path().to_str().unwrap(),
        "--p",
        "3",
    ]);
    assert_eq!(code, 1);
    let ok = matrix_file("1\n1\n");
    let (code, _, _) = milnor(&[
        "charcheck",
        "--matrix",
        ok.path().to_str().unwrap(),
        "--p",
        "4",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn degenerate_inputs_exit_2() {
    // The critical locus is the plane x = y, which is not a coordinate subspace.
    let (code, _, err) = milnor(&["bound", "--poly", "x^2*z - 2*x*y*z + y^2*z"]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = milnor(&[
        "bound",
        "--poly",
        "x^2*z - 2*x*y*z + y^2*z",
        "--assume-complete",
    ]);
    assert_eq!(code, 2);
    // Linear forms have no critical points.
    let (code, _, _) = milnor(&["bound", "--poly", "x + y"]);
    assert_eq!(code, 2);
}

#[test]
fn resource_limits_exit_3() {
    let (code, _, err) = milnor(&["bound", "--poly", "z^2*y - x*y^2", "--budget", "0"]);
    assert_eq!(code, 3, "{err}");
    let (code, _, _) = milnor_env(
        &["bound", "--poly", "z^2*y - x*y^2"],
        &[("MILNOR_BUDGET", "0")],
    );
    assert_eq!(code, 3);
    let (code, _, _) = milnor_env(
        &["bound", "--poly", "z^2*y - x*y^2", "--budget", "1000"],
        &[("MILNOR_BUDGET", "0")],
    );
    assert_eq!(code, 0);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = milnor(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("bound"));
}
