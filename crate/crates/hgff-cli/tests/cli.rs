use std::process::{Command, Output};

use serde_json::Value;

fn hgff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgff")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn verify_gauss_eval() {
    let o = hgff(&["verify", "--id", "gauss-eval", "--q", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let r = &v["reports"][0];
    assert_eq!(r["id"], "gauss-eval");
    assert_eq!(r["status"], "pass");
    assert_eq!(r["tuples_checked"], 216);
    assert_eq!(v["mode"], "exhaustive");
}

#[test]
fn zeta_legendre_example() {
    let o = hgff(&["zeta", "--q", "5", "--upper", "1/2,1/2", "--lower", "1", "--lambda", "2", "--rational"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["poly"], "1 + 2T + 5T^2");
    assert_eq!(v["purity"]["status"], "pass");
    assert!(v["series"].as_array().unwrap().iter().all(|s| s["ok"] == true));
}

#[test]
fn usage_errors_exit_2() {
    let o = hgff(&["field", "info", "4", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not prime"));
    assert_eq!(hgff(&["nonsense"]).status.code(), Some(2));
    assert_eq!(hgff(&["verify", "--id", "no-such-id", "--q", "5"]).status.code(), Some(2));
    assert_eq!(hgff(&["verify", "--id", "gauss-eval", "--q", "5", "--mode", "sample:x"]).status.code(), Some(2));
}

#[test]
fn budget_env_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_hgff"))
        .args(["field", "info", "13", "1"])
        .env("HGFF_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(hgff(&["field", "info", "13", "1"]).status.code(), Some(0));
}

#[test]
fn field_info_text() {
    let o = hgff(&["field", "info", "3", "2"]);
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.starts_with("q = 9\n"));
    assert!(s.contains("modulus = [1, 0, 1]"));
}

#[test]
fn counts_match() {
    let o = hgff(&["count", "glc", "--q", "5", "--N", "2", "--i", "1", "--j", "1", "--k", "1", "--lambda", "2"]);
    let v = json(&o);
    assert_eq!(v["affine"], 7);
    assert_eq!(v["formula"], 8);
    assert_eq!(v["trace"], -2);
    let o = hgff(&["count", "hgv", "--q", "7", "--N", "3", "--i", "1,1", "--j", "1,1", "--k", "1", "--lambda", "3"]);
    let v = json(&o);
    assert_eq!(v["formula"].as_i64().unwrap(), v["affine"].as_i64().unwrap() + 1);
}

#[test]
fn eval_and_tables() {
    let o = hgff(&["eval", "--q", "7", "--upper", "chi^1,order:3,index:1", "--lower", "eps", "--lambda", "g^2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["spec"]["upper"][1], "chi^2");
    assert!(v["P_complex"].as_array().unwrap().len() == 2);
    let o = hgff(&["char", "table", "5"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 5);
    let v = json(&hgff(&["sums", "5"]));
    assert_eq!(v["gauss"].as_array().unwrap().len(), 4);
    assert_eq!(v["jacobi"].as_array().unwrap().len(), 16);
}

#[test]
fn json_and_csv_reports_are_stable() {
    let dir = std::env::temp_dir().join(format!("hgff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b, c) = (dir.join("a.json"), dir.join("b.json"), dir.join("r.csv"));
    let args = |p: &std::path::Path| {
        vec![
            "verify".to_string(),
            "--all".into(),
            "--q".into(),
            "5,7".into(),
            "--json".into(),
            p.display().to_string(),
        ]
    };
    let run = |v: Vec<String>| Command::new(env!("CARGO_BIN_EXE_hgff")).args(v).output().unwrap();
    let mut first = args(&a);
    first.extend(["--csv".to_string(), c.display().to_string()]);
    assert_eq!(run(first).status.code(), Some(0));
    assert_eq!(run(args(&b)).status.code(), Some(0));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let csv = std::fs::read_to_string(&c).unwrap();
    let report: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    let n = report["reports"].as_array().unwrap().len();
    assert_eq!(csv.lines().count(), n + 1);
    assert!(csv.starts_with("id,q,status,tuples_checked,failures\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}
