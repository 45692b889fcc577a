use std::process::{Command, Output};

use serde_json::Value;

fn lincong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lincong"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one JSON object per line")).collect()
}

#[test]
fn count_square_worked_example() {
    let o = lincong(&["count", "--mode", "square", "-n", "27", "-a", "1,1", "-b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = json_lines(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["count"], 4);
    assert_eq!(rows[0]["oracle_count"], 4);
    assert_eq!(rows[0]["match"], true);
    assert_eq!(rows[0]["method"], "formula");
}

#[test]
fn count_blocks_and_strict() {
    let o = lincong(&["count", "--mode", "blocks", "-n", "6", "--blocks", "2:2,2:3", "-b", "5"]);
    assert_eq!(json_lines(&o)[0]["count"], 63);
    let o = lincong(&["count", "--mode", "strict", "-n", "5", "-k", "2", "-a", "1", "-b", "0"]);
    assert_eq!(json_lines(&o)[0]["count"], 2);
}

#[test]
fn even_square_modulus_is_tagged() {
    let o = lincong(&["count", "--mode", "square", "-n", "8", "-a", "1,1", "-b", "1"]);
    assert_eq!(json_lines(&o)[0]["method"], "oracle-fallback");
}

#[test]
fn large_counts_are_exact_integers() {
    let o = lincong(&["count", "--mode", "strict", "-n", "10000", "-k", "10", "-a", "1", "-b", "0"]);
    let text = stdout(&o);
    assert!(text.contains("\"count\":274335507759128251224219994749"), "{text}");
    let row = &json_lines(&o)[0];
    assert!(row.get("oracle_count").is_none() && row.get("match").is_none());
}

#[test]
fn budget_zero_skips_the_oracle() {
    let o = lincong(&["count", "--mode", "all", "-n", "7", "-a", "1,2", "-b", "3", "--budget", "0"]);
    let row = &json_lines(&o)[0];
    assert_eq!(row["count"], 7);
    assert!(row.get("oracle_count").is_none());
}

#[test]
fn csv_header_once() {
    let o = lincong(&["verify", "--mode", "ramanujan", "--n-max", "6", "--format", "csv"]);
    let text = stdout(&o);
    assert_eq!(text.matches("mode,n,k,a").count(), 1);
    assert!(text.contains("cases,mismatches,skipped,max_residual\n21,0,0,"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lincong(&["count", "--mode", "strict", "-n", "5"]).status.code(), Some(2));
    assert_eq!(lincong(&["count", "--mode", "bogus", "-n", "5"]).status.code(), Some(2));
    assert_eq!(lincong(&["count", "--mode", "blocks", "-n", "5", "--blocks", "2-1"]).status.code(), Some(2));
    let o = lincong(&["count", "--mode", "distinct", "-n", "6", "-a", "2,1", "-b", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("subset [0]"));
}

fn summary(o: &Output) -> Value {
    json_lines(o).last().unwrap()["summary"].clone()
}

#[test]
fn verify_sweeps_have_no_mismatches() {
    for args in [
        vec!["--mode", "strict", "--n-max", "12", "--k-max", "4"],
        vec!["--mode", "square", "--n-list", "9,27,45", "--k-max", "2"],
        vec!["--mode", "ramanujan", "--n-max", "200"],
        vec!["--mode", "blocks", "--n-max", "6", "--k-max", "4"],
        vec!["--mode", "distinct", "--n-max", "7", "--k-max", "3"],
        vec!["--mode", "all", "--n-max", "8", "--k-max", "2"],
    ] {
        let mut full = vec!["verify"];
        full.extend(&args);
        let o = lincong(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let s = summary(&o);
        assert_eq!(s["mismatches"], 0, "{args:?}");
        assert!(s["cases"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_output_is_independent_of_workers() {
    let one = lincong(&["verify", "--mode", "square", "--n-list", "15,25", "--k-max", "2", "--jobs", "1"]);
    let four = lincong(&["verify", "--mode", "square", "--n-list", "15,25", "--k-max", "2", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_reports_skips_over_budget() {
    let o = lincong(&["verify", "--mode", "strict", "--n-list", "9", "--k-max", "2", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let s = summary(&o);
    assert!(s["skipped"].as_u64().unwrap() > 0);
    assert_eq!(s["mismatches"], 0);
}

#[test]
fn bench_marks_oracle_skipped() {
    let o = lincong(&["bench", "--mode", "strict", "-n", "10000", "-k", "10"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,mode,t_formula_s,t_oracle_s,speedup"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..3], &["10000", "10", "strict"]);
    assert_eq!(row[4], "skipped");
    assert!(row[3].parse::<f64>().unwrap() < 0.1);
}

#[test]
fn selftest_is_deterministic() {
    let a = lincong(&["selftest"]);
    let b = lincong(&["selftest"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().all(|l| l.starts_with("ok ") || l.starts_with("selftest:")));
}
