use coxdet::typeb::{closed_counts, enumerated_counts, BCounts};
use coxdet_cli::{run, run_command, Command, Formulas, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("coxdet").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).unwrap()
}

#[test]
fn det_examples() {
    assert_eq!(ok(&["det", "--type", "B", "--alpha", "2,1", "--beta", "1"]).trim(), "triv");
    assert_eq!(ok(&["det", "--type", "A", "--lambda", "2,1"]).trim(), "sgn");
    assert_eq!(ok(&["det", "--type", "a", "--lambda", "2"]).trim(), "triv");
}

#[test]
fn count_type_b() {
    let v = json(&["count", "--type", "B", "--n", "6"]);
    assert_eq!(v["group"], "B");
    assert_eq!(v["n"], 6);
    assert_eq!(v["method"], "closed");
    let c = &v["counts"];
    assert_eq!((c["triv"].as_str(), c["sgn0"].as_str()), (Some("33"), Some("8")));
    assert_eq!((c["sgn1"].as_str(), c["eps"].as_str()), (Some("16"), Some("8")));

    let e = json(&["count", "--type", "B", "--n", "6", "--method", "enumerate"]);
    assert_eq!(e["counts"], v["counts"]);
    assert_eq!(e["method"], "enumeration");
}

#[test]
fn count_other_types() {
    let d = json(&["count", "--type", "D", "--n", "4"]);
    assert_eq!(d["counts"]["triv"], "5");
    assert_eq!(d["counts"]["sgn"], "8");
    let i = json(&["count", "--type", "I2", "--p", "5"]);
    assert_eq!(i["counts"]["triv"], "1");
    assert_eq!(i["counts"]["eps_W"], "3");
    let f = json(&["count", "--type", "exceptional", "--name", "F4"]);
    assert_eq!(f["method"], "table");
    assert_eq!(f["counts"]["omega1"], "4");
    assert_eq!(f["counts"]["omega2"], "4");
}

#[test]
fn counts_are_decimal_strings() {
    let v = json(&["count", "--type", "B", "--n", "300"]);
    for (_, c) in v["counts"].as_object().unwrap() {
        let s = c.as_str().unwrap();
        assert!(s.bytes().all(|b| b.is_ascii_digit()), "{s}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["count", "--type", "B", "--n", "17"][..],
        &["table", "--type", "B", "--max-n", "12"],
        &["plot-data", "--type", "B", "--max-n", "20"],
        &["tower", "--lambda", "5,3,2,1,1"],
    ] {
        assert_eq!(ok(args), ok(args), "{args:?}");
    }
}

#[test]
fn table_rows() {
    let csv = ok(&["table", "--type", "B", "--max-n", "3"]);
    assert_eq!(csv, "n,N_triv,N_sgn0,N_sgn1,N_eps\n1,1,0,0,1\n2,1,1,2,1\n3,2,4,2,2\n");
}

#[test]
fn plot_data_is_log2_of_table() {
    let plot = ok(&["plot-data", "--type", "B", "--max-n", "16"]);
    let table = ok(&["table", "--type", "B", "--max-n", "16"]);
    let mut rows = plot.lines();
    assert_eq!(rows.next(), Some("n,log2_N_triv,log2_N_sgn0,log2_N_sgn1,log2_N_eps"));
    for (p, t) in rows.zip(table.lines().skip(2)) {
        let p: Vec<f64> = p.split(',').map(|c| c.parse().unwrap()).collect();
        let t: Vec<f64> = t.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(p[0], t[0]);
        for j in 1..5 {
            assert!((p[j] - t[j].log2()).abs() < 1e-6, "n = {}", t[0]);
        }
    }
}

#[test]
fn tower_formats() {
    let v = json(&["tower", "--lambda", "3,1"]);
    assert_eq!(v["rows"][0]["i"], 2);
    assert_eq!(v["rows"][0]["entries"][0]["pos"], "01");
    assert_eq!(v["rows"][0]["entries"][0]["core"], "1");
    let ascii = ok(&["tower", "--lambda", "3,1", "--format", "ascii"]);
    assert_eq!(ascii, "row 0: ∅\nrow 1: ∅,∅\nrow 2: ∅,(1),∅,∅\n");
    let empty = json(&["tower", "--lambda", ""]);
    assert_eq!(empty["rows"].as_array().map(Vec::len), Some(0));
}

#[test]
fn verify_small_and_medium() {
    let out = ok(&["verify", "--max-n", "2"]);
    assert!(out.contains("SKIP  inequality chain"));
    assert!(out.ends_with("all checks passed\n"));
    ok(&["verify", "--max-n", "12"]);
}

fn off_by_one(n: usize) -> coxdet::Result<BCounts> {
    let mut c = closed_counts(n)?;
    if n == 7 {
        c += &enumerated_counts(1);
    }
    Ok(c)
}

#[test]
fn verify_catches_a_wrong_formula() {
    let formulas = Formulas {
        b_totals: off_by_one,
        ..Formulas::default()
    };
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_command(Command::Verify { max_n: 12 }, &formulas, &mut out, &mut err);
    assert_eq!(code, EXIT_VERIFY);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("FAIL"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["det", "--type", "A", "--lambda", "2,x"][..],
        &["det", "--type", "A", "--lambda", "1,2"],
        &["det", "--type", "D", "--alpha", "1", "--beta", "1", "--half", "plus"],
        &["det", "--type", "D", "--alpha", "2", "--beta", "2"],
        &["count", "--type", "B", "--n", "40", "--method", "enumerate"],
        &["count", "--type", "I2"],
        &["count", "--type", "exceptional", "--name", "G9"],
        &["tower", "--lambda", "-1"],
        &["frobnicate"],
        &["count", "--type", "Z", "--n", "3"],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn type_d_halves() {
    let plus = ok(&["det", "--type", "D", "--alpha", "2", "--beta", "2", "--half", "plus"]);
    let minus = ok(&["det", "--type", "D", "--alpha", "2", "--beta", "2", "--half", "minus"]);
    assert_eq!(plus, minus);
    assert_eq!(
        ok(&["det", "--type", "D", "--alpha", "1,1", "--beta", "2"]),
        ok(&["det", "--type", "D", "--alpha", "2", "--beta", "1,1"])
    );
}
