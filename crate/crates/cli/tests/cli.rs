use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddferrers"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_single_and_unknown() {
    let ok = run(&["verify", "thm3_newnu", "--order", "12"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("PASS  thm3_newnu"));
    let bad = run(&["verify", "bogus"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("bogus"));
}

#[test]
fn verify_all_json() {
    let o = run(&["--format", "json", "verify", "all", "--order", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert!(reports.len() >= 22);
    assert!(reports
        .iter()
        .all(|r| r["pass"] == true && r["order"] == 30));
}

#[test]
fn tables_check() {
    for which in ["1", "2", "3", "4"] {
        let o = run(&["table", which, "--check"]);
        assert_eq!(o.status.code(), Some(0), "table {which}");
    }
    assert!(stdout(&run(&["table", "2"])).contains("12 pairs"));
    assert!(stdout(&run(&["table", "4"])).contains("10 pairs"));
    let t1 = stdout(&run(&["table", "1"]));
    assert!(t1.contains("lambda^6 = (4)"));
    assert_eq!(run(&["table", "5"]).status.code(), Some(2));
}

#[test]
fn map_both_directions() {
    let f = stdout(&run(&["map", "forward", "omega", "(6,4,3,3,2)"]));
    assert!(f.trim_end().ends_with("image: F(7,3,2,2,1)"));
    let i = run(&["map", "inverse", "nu", "(9,5,4,3,1)"]);
    assert!(stdout(&i).trim_end().ends_with("image: (10,8,5,4,3)"));
    let bad = run(&["map", "forward", "omega", "(3,3)"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("smallest part not unique"));
    assert_eq!(
        run(&["map", "inverse", "nu", "(3,3)"]).status.code(),
        Some(2)
    );
}

#[test]
fn fuzz_is_deterministic() {
    let args = [
        "--format",
        "json",
        "fuzz",
        "nu",
        "--max-n",
        "12",
        "--seed",
        "7",
        "--samples",
        "50",
    ];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&args).stdout);
    assert_eq!(
        run(&["fuzz", "omega", "--max-n", "0"]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["fuzz", "omega", "--max-n", "41"]).status.code(),
        Some(2)
    );
}

#[test]
fn enumerate_and_show() {
    let e = stdout(&run(&["enumerate", "p_omega", "--m", "3", "--n", "15"]));
    assert!(e.contains("12 members"));
    let s = stdout(&run(&["show", "(6,6,3,2)"]));
    assert!(s.contains("size 24"));
    assert_eq!(run(&["show", "(2,x)"]).status.code(), Some(2));
}
