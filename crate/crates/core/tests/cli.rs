use std::process::{Command, Output};

use serde_json::Value;

fn uhg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uhg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

#[test]
fn join_of_points() {
    let o = uhg(&["compute", "join", "--field", "Q", "[1:0:0]", "[0:1:0]", "--plain"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(0:0:1)");
    let o = uhg(&["compute", "join", "--field", "Q", "[1:0:0]", "[0:1:0]"]);
    assert_eq!(json(&o)["result"], "(0:0:1)");
}

#[test]
fn quadrance_over_f23() {
    let o = uhg(&["compute", "quadrance", "--field", "Fp=23", "[14:0:1]", "[0:10:1]", "--plain"]);
    assert_eq!(stdout(&o), "21");
}

#[test]
fn printed_literals_reparse() {
    let o = uhg(&["compute", "meet", "--field", "Q", "(1:2:3)", "(-4:1:7)", "--plain"]);
    let p = stdout(&o);
    let back = uhg(&["compute", "join", "--field", "Q", &p, "[1:1:1]", "--plain"]);
    assert_eq!(back.status.code(), Some(0), "{p} did not re-parse");
    let dual = uhg(&["compute", "dual", "--field", "Q", &p, "--plain"]);
    let twice = uhg(&["compute", "dual", "--field", "Q", &stdout(&dual), "--plain"]);
    assert_eq!(stdout(&twice), p);
}

#[test]
fn right_triangle_from_spreads() {
    let o = uhg(&["solve", "right-triangle", "--field", "Q", "--S1", "1/4", "--S2", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    for (k, want) in [("q1", "-1/2"), ("q2", "-1"), ("q3", "-2"), ("S1", "1/4"), ("S2", "1/2")] {
        assert_eq!(v[k], want, "{k}");
    }
}

#[test]
fn undefined_metric_exits_3() {
    // [1:0:1] is null, so its quadrance with anything is undefined.
    let o = uhg(&["compute", "quadrance", "--field", "Q", "[1:0:1]", "[0:0:1]"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(json(&o)["result"].is_null());
}

#[test]
fn parse_errors_exit_2() {
    let o = uhg(&["compute", "join", "--field", "Q", "[1:0:x]", "[0:1:0]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('x'));
    assert_eq!(uhg(&["compute", "join", "--field", "Q[sqrt=", "[1:0:0]", "[0:1:0]"]).status.code(), Some(2));
    assert_eq!(uhg(&["verify", "T999-nothing"]).status.code(), Some(2));
    assert_eq!(uhg(&["verify", "T1-join-of-points", "--field", "Q", "--exhaustive"]).status.code(), Some(2));
}

#[test]
fn verify_reports() {
    let o = uhg(&["verify", "T92-48-64", "--field", "Fp=11"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let r = if v.is_array() { v[0].clone() } else { v };
    assert_eq!(r["id"], "T92-48-64");
    assert_eq!(r["passed"], 495);
    assert_eq!(r["failed"], 0);
}

#[test]
fn converse_counterexample_exits_1() {
    let o = uhg(&["verify", "CX-pythagoras-converse", "--field", "Q"]);
    assert_eq!(o.status.code(), Some(1));
    let o = uhg(&["verify", "CX-triple-quad-converse", "--field", "Q[sqrt=-1]", "--plain"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn seeded_runs_repeat() {
    let args = ["verify", "T38-triple-quad", "--field", "Q", "--trials", "50", "--seed", "9"];
    let (a, b) = (uhg(&args), uhg(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn null_points_and_params() {
    let o = uhg(&["null", "point", "--field", "Q", "1:2", "--plain"]);
    assert_eq!(stdout(&o), "[-3:4:5]");
    let o = uhg(&["null", "param", "--field", "Q", "[-3:4:5]", "--plain"]);
    assert_eq!(stdout(&o), "1:2");
}

#[test]
fn projection() {
    assert_eq!(stdout(&uhg(&["project", "--field", "Q", "[1:2:4]", "--plain"])), "[1/4, 1/2]");
    assert_eq!(stdout(&uhg(&["project", "--field", "Q", "[1:2:0]", "--plain"])), "at infinity: [1:2]");
}
