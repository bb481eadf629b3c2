use std::io::Write;
use std::process::{Command, Output, Stdio};

fn templab(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_templab"))
        .args(args)
        .env_remove("TEMPLAB_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn construct_then_verify() {
    let g = templab(&["construct", "parity", "12"], None);
    assert!(g.status.success());
    let v = templab(&["verify", "-"], Some(&stdout(&g)));
    assert_eq!(v.status.code(), Some(0));
    let r = json(&v);
    assert_eq!(r["v"], 1);
    assert_eq!(r["T"], 36);
    assert_eq!(r["tau"], 3);
    assert_eq!(r["ok"], true);
}

#[test]
fn generator_svg_marks() {
    let g = templab(&["construct", "generator", "16"], None);
    let svg = templab(&["render", "-", "--format", "svg"], Some(&stdout(&g)));
    assert!(svg.status.success());
    assert_eq!(stdout(&svg).matches(r#"class="contact""#).count(), 65);
}

#[test]
fn verify_reports_unreachable_pair() {
    let v = templab(&["verify", "-"], Some("tg 1\nn 3\ne 0 1 2\ne 1 2 1\n"));
    assert_eq!(v.status.code(), Some(1));
    let r = json(&v);
    assert_eq!(r["temporally_connected"], false);
    assert!(r["unreachable"]
        .as_array()
        .unwrap()
        .iter()
        .any(|p| p == &serde_json::json!([0, 2])));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        templab(&["construct", "moebius", "3"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        templab(&["construct", "parity"], None).status.code(),
        Some(2)
    );
    assert_eq!(templab(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(
        templab(&["verify", "-", "--class", "sparkly"], Some(""))
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bad_input_exits_1() {
    let o = templab(&["measure", "-"], Some("tg 1\nn 2\ne 0 1 2 1\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn construct_json_report() {
    let o = templab(&["construct", "trees", "12", "--seed", "3", "--json"], None);
    let r = json(&o);
    assert_eq!(r["measured"]["total"], 21);
    assert_eq!(r["matches_prediction"], true);
}

#[test]
fn analyze_cycle_report() {
    let g = templab(&["construct", "generator", "8"], None);
    let o = templab(&["analyze-cycle", "-"], Some(&stdout(&g)));
    assert!(o.status.success());
    let r = json(&o);
    assert_eq!(r["pairs"].as_array().unwrap().len(), 8);
    assert!(r["maximal"]
        .as_array()
        .unwrap()
        .iter()
        .all(|m| m["dominating"].is_boolean()));
    let covering = templab(
        &["analyze-cycle", "-"],
        Some("tg 1\nn 3\ne 0 1 1\ne 1 2 2\ne 0 2 3\n"),
    );
    assert_eq!(covering.status.code(), Some(1));
}

#[test]
fn generate_writes_json_lines() {
    let o = templab(&["generate", "--footprint", "cycle:5"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let stats = &lines.last().unwrap()["stats"];
    assert_eq!(stats["stored"], (lines.len() - 1) as u64);
    assert_eq!(stats["max_temporality"], 3);
    assert_eq!(stats["complete"], true);
    assert!(lines[0]["canonical"].is_array());
}

#[test]
fn runs_are_byte_identical() {
    let runs = [
        vec!["construct", "cacti", "15", "5", "--seed", "2"],
        vec!["construct", "adhoc", "3", "--json"],
        vec!["generate", "--footprint", "cycle:6", "--threads", "3"],
        vec!["generate", "--footprint", "path:4", "--mode", "strict"],
    ];
    for args in runs {
        let (a, b) = (templab(&args, None), templab(&args, None));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
    let one = templab(
        &["generate", "--footprint", "cycle:6", "--threads", "1"],
        None,
    );
    let four = templab(
        &["generate", "--footprint", "cycle:6", "--threads", "4"],
        None,
    );
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn seed_from_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_templab"))
            .args(["construct", "trees", "20"])
            .env("TEMPLAB_SEED", seed)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("5"), run("5"));
    assert_ne!(run("5"), run("6"));
}

#[test]
fn render_views() {
    let g = templab(&["construct", "parity", "8"], None);
    let a = templab(&["render", "-", "--dominating"], Some(&stdout(&g)));
    assert!(a.status.success());
    let tree = templab(&["construct", "trees", "6"], None);
    assert_eq!(
        templab(&["render", "-"], Some(&stdout(&tree)))
            .status
            .code(),
        Some(1)
    );
    let gv = templab(
        &["render", "-", "--view", "graph", "--format", "svg"],
        Some(&stdout(&tree)),
    );
    assert!(stdout(&gv).starts_with("<svg"));
}
