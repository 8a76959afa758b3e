//! End-to-end tests of the `bivarieg` binary: golden JSON, exit codes and
//! agreement between text and JSON output.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bivarieg_core::bivariegation::verify_certificate;
use bivarieg_core::io::from_graph6;
use bivarieg_core::iso::is_isomorphic;
use bivarieg_core::{BivariegationCertificate, Family};
use serde_json::Value;

fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn data(name: &str) -> String {
    tests_dir().join("data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bivarieg"));
    cmd.args(args).env_remove("BIVARIEG_CYCLE_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let o = run(&full);
    let v = serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: bad JSON ({e}): {}", stdout(&o)));
    (code(&o), v)
}

/// Compares stdout with `tests/golden/<name>`; `BLESS=1` rewrites the file.
fn golden(name: &str, args: &[&str], expected_code: i32) {
    let o = run(args);
    assert_eq!(code(&o), expected_code, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let path = tests_dir().join("golden").join(name);
    let actual = stdout(&o);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(actual, expected, "golden {name} differs");
}

#[test]
fn golden_petersen_certificate() {
    golden("check_biv_petersen.json", &["check", "biv", "--family", "petersen", "--json"], 0);
    golden("check_biv_petersen_file.json", &["check", "biv", "--file", &data("petersen.g6"), "--json"], 0);
}

#[test]
fn petersen_certificate_is_valid() {
    let (code, v) = json(&["check", "biv", "--family", "petersen"]);
    assert_eq!(code, 0);
    assert_eq!(v["bivariegated"], true);
    let cert: BivariegationCertificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    let g = Family::Petersen.build().unwrap();
    assert!(verify_certificate(&g, &cert, 1_000_000));
    assert_eq!(cert.side_u.len(), 5);
    assert_eq!(cert.special_edges.len(), 5);
}

#[test]
fn golden_degree_sequence_2_4() {
    golden("degseq_check_2_4.json", &["degseq", "check", "2^4", "--json"], 0);
    golden("degseq_check_2_4.txt", &["degseq", "check", "2^4"], 0);
    let (_, v) = json(&["degseq", "check", "2 2 2 2"]);
    assert_eq!(v["partition"]["n"], 2);
    assert_eq!(v["partition"]["sides"], serde_json::json!([[2], [2]]));
}

#[test]
fn golden_spectra_3() {
    golden("spectra_3.json", &["spectra", "--n", "3", "--json"], 0);
    let (code, v) = json(&["spectra", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["eigenvalues"], serde_json::json!({"3": 1, "1": 1, "0": 2, "-2": 2}));
    assert_eq!(v["polynomial_identity"], true);
}

#[test]
fn golden_edge_list_inputs() {
    golden("solve_lg_c4.json", &["solve", "lg", "--file", &data("c4.edges"), "--json"], 0);
    golden("fixed_point_c8.json", &["fixed-point", "--file", &data("c8.edges"), "--json"], 0);
    golden("linegraph_k13.json", &["linegraph", "--file", &data("k13.edges"), "--json"], 0);
    golden("check_line_k4.json", &["check", "line", "--family", "complete:4", "--json"], 0);
}

#[test]
fn spectra_dump_prints_integer_rows() {
    let o = run(&["spectra", "--n", "2", "--dump"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip_while(|l| *l != "adjacency:").skip(1).collect();
    assert_eq!(rows, ["0 1 1 0", "1 0 0 1", "1 0 0 1", "0 1 1 0"]);
}

#[test]
fn messy_edge_list_is_accepted() {
    let (code, v) = json(&["check", "biv", "--file", &data("p5_messy.edges")]);
    // Five vertices: odd order can never be split evenly.
    assert_eq!(code, 1);
    assert_eq!(v["bivariegated"], false);
    assert_eq!(v["certificate"], Value::Null);
}

#[test]
fn format_override() {
    let o = run(&["check", "biv", "--file", &data("c4.edges"), "--format", "graph6"]);
    assert_eq!(code(&o), 2);
    let o = run(&["check", "biv", "--graph6", "Cl", "--format", "graph6"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["check", "biv", "--bogus"],
        vec!["check", "biv"],
        vec!["check", "biv", "--family", "petersen", "--graph6", "Cl"],
        vec!["check", "biv", "--family", "wheel:5"],
        vec!["check", "biv", "--graph6", "not graph6!"],
        vec!["check", "biv", "--file", "/nonexistent/graph.txt"],
        vec!["scan", "oracle", "--max-order", "10"],
        vec!["scan", "no_such_property", "--max-order", "3"],
        vec!["spectra", "--n", "0"],
        vec!["degseq", "check", "2^0"],
        vec!["degseq", "realize", "2^4", "--perm", "0,0"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} wrote to stdout");
        assert!(!o.stderr.is_empty(), "{args:?} gave no diagnostic");
    }
    let bad = data("bad_count.edges");
    assert_eq!(code(&run(&["check", "biv", "--file", &bad])), 2);
}

#[test]
fn unknown_flag_prints_usage() {
    let o = run(&["spectra", "--n", "3", "--colour"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage:"));
}

#[test]
fn resource_caps_exit_3() {
    let o = run_env(&["solve", "lg", "--family", "cycle:8"], &[("BIVARIEG_CYCLE_CAP", "0")]);
    assert_eq!(code(&o), 3);
    let o = run(&["linegraph", "--family", "complete:5", "--iterate", "5"]);
    assert_eq!(code(&o), 3);
    let o = run_env(&["scan", "lemma2", "--max-order", "5"], &[("BIVARIEG_CYCLE_CAP", "0")]);
    assert_eq!(code(&o), 3);
    let o = run_env(&["solve", "lg", "--family", "cycle:8"], &[("BIVARIEG_CYCLE_CAP", "lots")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn text_and_json_verdicts_agree() {
    let graphs = [
        "petersen",
        "cycle:4",
        "cycle:5",
        "cycle:8",
        "complete:4",
        "complete_bipartite:2,3",
        "complete_bivariegated:3",
        "matching:3",
        "path:4",
    ];
    let commands: [(&[&str], &str, &str); 5] = [
        (&["check", "biv"], "bivariegated", "bivariegated: yes"),
        (&["check", "line"], "line_graph", "line graph: yes"),
        (&["solve", "lg"], "solution", "L(G) bivariegated: yes"),
        (&["solve", "nested"], "lg_bivariegated", "L(G) bivariegated: yes"),
        (&["fixed-point"], "fixed", "L(G) = G: yes"),
    ];
    for family in graphs {
        for (cmd, field, marker) in commands {
            let mut args = cmd.to_vec();
            args.extend(["--family", family]);
            let text = run(&args);
            let (json_code, v) = json(&args);
            assert_eq!(code(&text), json_code, "{args:?}");
            let said_yes = stdout(&text).lines().any(|l| l == marker);
            assert_eq!(said_yes, v[field] == true, "{args:?}");
        }
    }
}

#[test]
fn solve_examples() {
    // C4 and C8: L(C_4k) = C_4k is bivariegated, witnessed by a path decomposition.
    for n in [4, 8] {
        let (code, v) = json(&["solve", "lg", "--family", &format!("cycle:{n}")]);
        assert_eq!(code, 0);
        assert_eq!(v["witness"]["paths"].as_array().unwrap().len(), n / 2);
        assert!(v.get("discrepancy").is_none());
    }
    let (code, v) = json(&["solve", "lg", "--family", "cycle:6"]);
    assert_eq!(code, 1);
    assert_eq!(v["witness"], Value::Null);
    assert!(v["witness_absent_reason"].is_string());

    let (code, v) = json(&["solve", "nested", "--family", "cycle:8"]);
    assert_eq!(code, 0);
    assert!(v["nested_witness"]["certificate"]["special_edges"].is_array());
    let (code, _) = json(&["solve", "nested", "--family", "cycle:6"]);
    assert_eq!(code, 1);

    let (code, v) = json(&["fixed-point", "--family", "cycle:8"]);
    assert_eq!((code, v["conclusion"].as_str()), (0, Some("fixed_bivariegated_cycle")));
    let (code, v) = json(&["fixed-point", "--family", "cycle:5"]);
    assert_eq!((code, v["conclusion"].as_str()), (1, Some("fixed_not_bivariegated")));
    let (code, v) = json(&["fixed-point", "--family", "path:4"]);
    assert_eq!((code, v["conclusion"].as_str()), (1, Some("not_fixed")));
}

#[test]
fn degree_sequence_examples() {
    for (seq, present) in [("1^2", true), ("3^3,1^3", true), ("3^4", false), ("{2^8}", true)] {
        let (code, v) = json(&["degseq", "check", seq]);
        assert_eq!(v["potentially"], present, "{seq}");
        assert_eq!(code, i32::from(!present), "{seq}");
    }
    let (_, v) = json(&["degseq", "check", "3 3 3 1 1 1"]);
    assert_eq!(v["partition"]["sides"], serde_json::json!([[3], [1, 1, 1]]));

    for (seq, forcibly) in [("1^6", true), ("2^4", true), ("3^3,1^3", true), ("2^8", false)] {
        let (code, v) = json(&["degseq", "forcibly", seq, "--oracle"]);
        assert_eq!(v["forcibly"], forcibly, "{seq}");
        assert_eq!(code, i32::from(!forcibly));
        let failing = v["oracle"]["failing"].as_array().unwrap();
        assert_eq!(failing.is_empty(), forcibly, "{seq}");
    }

    for (n, count) in [(1, 1), (2, 3)] {
        let (_, v) = json(&["degseq", "partitions", "--n", &n.to_string()]);
        assert_eq!(v["count"], count);
    }

    // {2^4} realizes as C4, with either matching.
    let c4 = Family::Cycle(4).build().unwrap();
    for perm in [None, Some("1,0")] {
        let mut args = vec!["degseq", "realize", "2^4"];
        if let Some(p) = perm {
            args.extend(["--perm", p]);
        }
        let (code, v) = json(&args);
        assert_eq!(code, 0);
        let g = from_graph6(v["graph6"].as_str().unwrap()).unwrap();
        assert!(is_isomorphic(&g, &c4));
        let cert: BivariegationCertificate = serde_json::from_value(v["certificate"].clone()).unwrap();
        assert!(verify_certificate(&g, &cert, 1_000_000));
    }
    let (code, _) = json(&["degseq", "realize", "3^4"]);
    assert_eq!(code, 1);
}

#[test]
fn scan_output_is_independent_of_jobs() {
    let one = run(&["scan", "cor13", "--max-order", "7", "--jobs", "1", "--json"]);
    let four = run(&["scan", "cor13", "--max-order", "7", "--jobs", "4", "--json"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["property"], "cor13");
    assert_eq!(v["notable"], serde_json::json!(["Cr"]));
}

#[test]
fn scan_exports_counterexamples() {
    let dir = std::env::temp_dir().join(format!("bivarieg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("found.g6");
    let o = run(&["scan", "oracle", "--max-order", "5", "--export", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["scan", "--help"])), 0);
}

/// Top-level fields of each golden match its schema in `docs/schemas`.
#[test]
fn goldens_match_schema_fields() {
    let schemas = tests_dir().join("../../../docs/schemas");
    let pairs = [
        ("check_biv_petersen.json", "check_biv"),
        ("check_line_k4.json", "check_line"),
        ("degseq_check_2_4.json", "degseq_check"),
        ("fixed_point_c8.json", "fixed_point"),
        ("solve_lg_c4.json", "solve_lg"),
        ("spectra_3.json", "spectra"),
    ];
    for (golden, schema) in pairs {
        let doc: Value =
            serde_json::from_str(&std::fs::read_to_string(tests_dir().join("golden").join(golden)).unwrap()).unwrap();
        let path = schemas.join(format!("{schema}.schema.json"));
        let s: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let props = s["properties"].as_object().unwrap();
        let fields = doc.as_object().unwrap();
        for key in fields.keys() {
            assert!(props.contains_key(key), "{golden}: {key} not in {schema}");
        }
        for key in s["required"].as_array().unwrap() {
            assert!(fields.contains_key(key.as_str().unwrap()), "{golden}: missing {key}");
        }
    }
}
