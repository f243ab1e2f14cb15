use std::process::{Command, Output};

fn a1hit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_a1hit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_with_reps() {
    let o = a1hit(&["table", "--k", "1", "--n-max", "1", "--d-max", "1", "--reps"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,d,dimP,dimI,dimD,dimU,degenerate,reps\n1,1,1,0,1,1,true,\"x1\"\n");
}

#[test]
fn table_json() {
    let o = a1hit(&["table", "--k", "1", "--n-max", "2", "--d-max", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cells"].as_array().unwrap().len(), 6);
    assert_eq!(v["cells"][4]["dimU"], 1);
}

#[test]
fn series_text_and_csv() {
    let o = a1hit(&["series", "--name", "Qn", "--n", "3"]);
    assert_eq!(stdout(&o), "t^-3 + 1 - t^2\n");
    let o = a1hit(&["series", "--name", "dn1", "--n", "1", "--t-order", "8", "--format", "csv"]);
    let csv = stdout(&o);
    assert!(csv.starts_with("n,d,coeff\n"));
    assert!(csv.contains("0,2,1\n") && csv.contains("0,3,0\n"));
}

#[test]
fn unknown_series_lists_catalog() {
    let o = a1hit(&["series", "--name", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("HDelta1n"));
}

#[test]
fn rep_outputs() {
    let o = a1hit(&["rep", "--k", "1", "--n", "3", "--d", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "trivial\n");
    let o = a1hit(&["rep", "--k", "1", "--n", "5", "--d", "9"]);
    assert_eq!(stdout(&o), "x1^2 x2^4 x3 x4 x5 + x1^4 x2^2 x3 x4 x5\n");
}

#[test]
fn verify_exit_codes() {
    let o = a1hit(&["verify", "--suite", "u1-theorem", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let o = a1hit(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn guard_limits() {
    let o = a1hit(&["table", "--n-max", "9", "--d-max", "2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = a1hit(&["--unsafe-limits", "table", "--n-max", "9", "--d-max", "2"]);
    assert!(o.status.success());
}

#[test]
fn pn_dump_and_out_file() {
    let path = std::env::temp_dir().join(format!("a1hit-pn-{}.json", std::process::id()));
    let o = a1hit(&["pn", "--n", "1", "--D", "8", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(v["D"], 8);
    assert_eq!(v["basis"][0]["label"], "t_1");
    let o = a1hit(&["pn", "--n", "2", "--D", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn threads_flag() {
    let o = a1hit(&["--threads", "2", "table", "--n-max", "2", "--d-max", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 9);
}
