use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lorenz-fiber"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn analyze_json(cols: &str) -> Value {
    let o = run(&["analyze", "--columns", cols, "--format", "json"]);
    assert!(o.status.success());
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn analyze_hopf_and_trefoil() {
    let hopf = analyze_json("1");
    assert_eq!(hopf["components"], 2);
    assert_eq!(hopf["betti1"], 1);
    assert_eq!(hopf["cyclotomic"], true);
    let tref = analyze_json("2");
    assert_eq!(tref["rho"], 1.0);
    assert_eq!(tref["char_poly"], serde_json::json!([1, -1, 1]));
}

#[test]
fn analyze_input_forms_agree() {
    let a = run(&["analyze", "--columns", "4,3,1", "--format", "json"]);
    let b = run(&[
        "analyze",
        "--json",
        r#"{"columns":[4,3,1]}"#,
        "--format",
        "json",
    ]);
    let mut child = bin()
        .args(["analyze", "--input", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"columns":[4,3,1]}"#)
        .unwrap();
    let c = child.wait_with_output().unwrap();
    assert!(a.status.success() && b.status.success() && c.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn analyze_matrices() {
    let o = run(&["analyze", "--columns", "2", "--matrices"]);
    let text = stdout(&o);
    assert!(text.contains("\nH\n 1  1\n-1  0\n"), "{text}");
    assert!(
        text.contains("word [3,2,4,1,3,2]\nbasis (2,1) (1,1)\n"),
        "{text}"
    );
    let v: Value = serde_json::from_slice(
        &run(&[
            "analyze",
            "--columns",
            "2",
            "--matrices",
            "--format",
            "json",
        ])
        .stdout,
    )
    .unwrap();
    assert_eq!(v["v"], serde_json::json!([[-1, 0], [-1, -1]]));
    assert_eq!(v["j"], serde_json::json!([[0, 1], [-1, 0]]));
}

#[test]
fn usage_errors_exit_2() {
    let o = run(&["analyze", "--columns", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("columns must be ≥ 1"));
    assert_eq!(run(&["analyze", "--columns", "2,3"]).status.code(), Some(2));
    assert_eq!(
        run(&["analyze", "--json", r#"{"rows":[1]}"#]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(
        run(&["enumerate", "--b", "2", "--k-max", "1", "--l", "3..2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--b", "0", "--k-max", "1", "--l", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
}

#[test]
fn enumerate_csv() {
    let o = run(&[
        "enumerate",
        "--b",
        "1",
        "--k-max",
        "0",
        "--l",
        "1..3",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let header: Vec<String> = r.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header.join(","), lorenz_fiber_header());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|row| &row[15] == "true"));
    let o = run(&["enumerate", "--b", "2", "--k-max", "2", "--l", "2..2"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

fn lorenz_fiber_header() -> &'static str {
    "columns,b,l,k,cells,strands,crossings,components,euler,betti1,char_poly,alexander,rho,rho_err,mahler,cyclotomic,bound,margin,lemma_internal_ok,lemma_external_ok"
}

#[test]
fn enumerate_json_lines_match_csv() {
    let args = ["enumerate", "--b", "2", "--k-max", "2", "--l", "2..6"];
    let json = run(&[&args[..], &["--format", "json"]].concat());
    let csv_out = run(&[&args[..], &["--format", "csv"]].concat());
    let lines: Vec<Value> = stdout(&json)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let mut r = csv::Reader::from_reader(csv_out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(lines.len(), rows.len());
    for (v, row) in lines.iter().zip(&rows) {
        assert_eq!(v["cells"].to_string(), row[4]);
        assert_eq!(v["euler"].to_string(), row[8]);
        assert_eq!(v["char_poly"].to_string(), row[10]);
        let rho: f64 = row[12].parse().unwrap();
        assert_eq!(v["rho"].as_f64().unwrap(), rho);
        if v["k"] == 2 {
            assert!(v["margin"].as_f64().unwrap() >= 0.0);
        }
    }
}

#[test]
fn thread_cap_does_not_change_output() {
    let args = ["enumerate", "--b", "3", "--k-max", "2", "--l", "2..3"];
    let one = bin()
        .args(args)
        .env("LORENZ_FIBER_THREADS", "1")
        .output()
        .unwrap();
    let many = bin()
        .args(args)
        .env("LORENZ_FIBER_THREADS", "4")
        .output()
        .unwrap();
    let seq = run(&[&args[..], &["--sequential"]].concat());
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stdout, seq.stdout);
}

#[test]
fn table_is_aligned() {
    let o = run(&["table", "--b", "2", "--k-max", "1", "--l", "2..3"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    let col = lines[0].find("cells").unwrap();
    assert!(lines[1..]
        .iter()
        .all(|l| l[col..].starts_with(|c: char| c.is_ascii_digit())));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "crossroute", "--max-cells", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 violations"));
    let o = run(&["verify", "bound", "--b", "2", "--k-max", "3", "--l", "2..4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    // the internal shadow holds everywhere; the external one does not, so lemmas exits 1
    let o = run(&["verify", "lemmas", "--max-cells", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().skip(1).all(|l| l.contains("external")));
}

#[test]
fn verify_report_file() {
    let dir = std::env::temp_dir().join(format!("lorenz-fiber-report-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let o = run(&[
        "verify",
        "crossroute",
        "--max-cells",
        "5",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "crossroute");
    assert_eq!(v["diagrams"], 18);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["records"].as_array().unwrap().len(), 18);
    std::fs::remove_dir_all(&dir).unwrap();
}
