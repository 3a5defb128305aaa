use std::process::{Command, Output};

fn imptab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_imptab"))
        .args(args)
        .env_remove("IMPTAB_BUDGET")
        .env_remove("IMPTAB_ORDER")
        .env_remove("IMPTAB_SEED")
        .output()
        .expect("run imptab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn series_plain() {
    let o = imptab(&["series", "u", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1 3 18\n");
    assert_eq!(stdout(&imptab(&["series", "i", "--n", "2"])), "0 0\n");
    assert_eq!(stdout(&imptab(&["series", "t", "--n", "4"])), "1 5 30 229\n");
    assert_eq!(stdout(&imptab(&["series", "g2", "--n", "4"])), "2 4 16 80\n");
}

#[test]
fn series_bfile_is_exact() {
    let o = imptab(&["series", "g", "--n", "3", "--format", "bfile"]);
    assert_eq!(o.stdout, b"1 3\n2 9\n3 54\n");
}

#[test]
fn series_csv_and_json() {
    let csv = stdout(&imptab(&["series", "s", "--n", "3", "--format", "csv"]));
    assert_eq!(csv, "n,s\n1,1\n2,1\n3,4\n");
    let json = stdout(&imptab(&["series", "f", "--n", "4", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["values"], serde_json::json!(["1", "1", "6", "41"]));
    let mut again = serde_json::to_string_pretty(&v).unwrap();
    again.push('\n');
    assert_eq!(again, json);
}

#[test]
fn series_output_file() {
    let dir = std::env::temp_dir().join(format!("imptab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.txt");
    let o = imptab(&["series", "r", "--n", "4", "--format", "bfile", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 1\n2 3\n3 12\n4 61\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&imptab(&["series", "q"])), 2);
    assert_eq!(code(&imptab(&["table", "--n", "2", "--semantics", "4"])), 2);
    assert_eq!(code(&imptab(&["frobnicate"])), 2);
    assert_eq!(code(&imptab(&["table", "--n", "2", "--format", "bfile"])), 2);
}

#[test]
fn table_kleene_two_variables() {
    let o = imptab(&["table", "--n", "2", "--index", "0", "--semantics", "3", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "p1,p2,value");
    assert_eq!(lines.len(), 1 + 9);
    assert!(lines.contains(&"1,0,0"));
    assert!(lines.contains(&"2,0,2"));
}

#[test]
fn table_headers_and_ranges() {
    let first = stdout(&imptab(&["table", "--n", "3", "--index", "0"]));
    let second = stdout(&imptab(&["table", "--n", "3", "--index", "1"]));
    assert!(first.starts_with("# (p1 => (p2 => p3))"));
    assert!(second.starts_with("# ((p1 => p2) => p3)"));
    let o = imptab(&["table", "--n", "3", "--index", "2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("0..=1"));

    let one = stdout(&imptab(&["table", "--n", "1", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&one).unwrap();
    assert_eq!(v["formula"], "p1");
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn table_budget_exit_3() {
    assert_eq!(code(&imptab(&["table", "--n", "9"])), 3);
    assert_eq!(code(&imptab(&["table", "--n", "5", "--budget", "4"])), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_imptab"))
        .args(["table", "--n", "5"])
        .env("IMPTAB_BUDGET", "4")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn verify_kleene_and_classical() {
    let o = imptab(&["verify", "--n", "7"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("all paths agree"));

    let o = imptab(&["verify", "--n", "9", "--semantics", "2", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("n,r,s,g\n1,1,1,2\n2,3,1,4\n3,12,4,16\n"));

    let o = imptab(&["verify", "--n", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,t,f,u,g\n1,1,1,1,3\n");
}

#[test]
fn verify_json_round_trips() {
    let out = stdout(&imptab(&["verify", "--n", "4", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["rows"][2]["brute"], serde_json::json!(["30", "6", "18"]));
    let mut again = serde_json::to_string_pretty(&v).unwrap();
    again.push('\n');
    assert_eq!(again, out);
}

#[test]
fn colors_matrix() {
    let out = stdout(&imptab(&["colors", "--n", "4", "--format", "csv"]));
    assert_eq!(out, "left,right,count,product\n1,1,33,33\n1,0,19,19\n0,1,19,19\n0,0,9,9\n");
    let out = stdout(&imptab(&["colors", "--n", "2"]));
    assert!(out.contains("total  4"));
    let out = stdout(&imptab(&["colors", "--n", "2", "--semantics", "3", "--format", "csv"]));
    let counts: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(counts, vec!["1"; 9]);
    assert_eq!(code(&imptab(&["colors", "--n", "1"])), 2);
}

#[test]
fn monoid_reports_counterexample_for_t_identity() {
    let o = imptab(&["monoid", "--order", "12", "--identity-order", "12", "--k-max", "3"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 1);
    let failing: Vec<&str> = out.lines().filter(|l| l.starts_with("[COUNTEREXAMPLE]")).collect();
    assert_eq!(failing.len(), 1, "{out}");
    assert!(failing[0].contains("T^k = 2/3") && failing[0].contains("at n = 2"));
    assert!(out.contains("not checked:"));
}

#[test]
fn monoid_tamper_gives_witness() {
    let o = imptab(&[
        "monoid", "--order", "10", "--identity-order", "10", "--k-max", "2",
        "--tamper", "U:4:1", "--format", "json",
    ]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let witnesses: Vec<&serde_json::Value> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|r| r.get("witness"))
        .collect();
    assert!(witnesses.iter().any(|w| w["n"] == 4));
    assert!(v["counterexamples"].as_u64().unwrap() >= 2);
}

#[test]
fn monoid_is_deterministic_given_seed() {
    let args = ["monoid", "--order", "8", "--identity-order", "8", "--k-max", "2", "--seed", "11"];
    assert_eq!(imptab(&args).stdout, imptab(&args).stdout);
}
