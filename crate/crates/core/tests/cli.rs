use std::io::Write as _;
use std::process::Command;

use ebring::cli::{parse_ring_spec, run, TableFile, EXIT_BUDGET, EXIT_OK, EXIT_USAGE};
use ebring::FiniteRing;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ebring").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn ring_specs_round_trip() {
    let corpus = [
        "Z/2", "Z/12", "Z/60", "Z/97", "Z/256", "GF(2)", "GF(3)", "GF(4)", "GF(8)", "GF(9)", "GF(16)",
        "GF(25)", "GF(27)", "GF(2)[x]/(x^2)", "GF(2)[x]/(x^3)", "GF(2)[x]/(x^2+x)", "GF(2)[x]/(x^3+x^2)",
        "GF(2)[x]/(x^2+x+1)", "GF(3)[x]/(x^2)", "GF(3)[x]/(x^2+1)", "GF(3)[x]/(x^2+2x)", "GF(5)[x]/(x^2+2)",
        "GF(4)[x]/(x^2)", "GF(2)[x]/(x^4+x+1)", "Z/4 x GF(3)", "Z/2 x Z/2", "Z/4 x Z/4", "Z/3 x Z/5 x Z/7",
        "GF(4) x Z/6", "Z/8 x GF(2)[x]/(x^2)", "GF(2)[x]/(x^2) x GF(3)[x]/(x^2)",
    ];
    assert!(corpus.len() >= 30);
    for text in corpus {
        let spec = parse_ring_spec(text).unwrap();
        let canonical = spec.render();
        let again = parse_ring_spec(&canonical).unwrap();
        assert_eq!(again.atoms, spec.atoms, "{text}");
        assert_eq!(again.render(), canonical, "{text}");
    }
    assert_eq!(parse_ring_spec("  Z/4   x   GF(3) ").unwrap().render(), "Z/4 x GF(3)");
    assert_eq!(parse_ring_spec("GF(2)[x]/(x + x^3)").unwrap().render(), "GF(2)[x]/(x^3+x)");
}

#[test]
fn malformed_specs_are_usage_errors() {
    for text in ["", "Z/", "Z/1", "Z/0", "Q/3", "GF(6)", "GF(2)[x]/(0)", "GF(2)[x]/(x^", "Z/4 x", "Z/4 y Z/2", "GF(2)[x]/(x^2)x", "GF(3)[x]/(2x^2+x)"] {
        let (code, _, err) = call(&["invariants", text]);
        assert_eq!(code, EXIT_USAGE, "{text:?}: {err}");
        assert!(!err.is_empty(), "{text:?}");
    }
    let (code, _, err) = call(&["invariants", "Q/3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("column 1"), "{err}");
    assert_eq!(call(&["no-such-command"]).0, EXIT_USAGE);
    assert_eq!(call(&["davenport", "Z2 x"]).0, EXIT_USAGE);
}

#[test]
fn invariants_json_has_the_frozen_fields() {
    let (code, out, _) = call(&["invariants", "Z/12", "--exact", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in [
        "ring", "order", "units_order", "unit_group", "davenport", "maximal_ideals", "lower_bound", "exact_I",
        "exact_is_formula_derived", "ghw_upper", "equality_case", "witness_T",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["order"], 12);
    assert_eq!(v["unit_group"], serde_json::json!([2, 2]));
    assert_eq!(v["davenport"], 3);
    assert_eq!(v["lower_bound"], 4);
    assert_eq!(v["exact_I"], 4);
    assert_eq!(v["maximal_ideals"].as_array().unwrap().len(), 2);
    assert_eq!(v["witness_T"].as_array().unwrap().len(), 3);
}

#[test]
fn every_subcommand_succeeds_on_small_inputs() {
    for args in [
        &["invariants", "GF(2)[x]/(x^3+x^2)"][..],
        &["construct", "Z/4 x GF(3)", "--json"],
        &["davenport", "Z2 x Z4"],
        &["davenport", "Z3 x Z3", "--json"],
        &["verify", "Z/16"],
        &["crosscheck", "int", "360"],
        &["crosscheck", "poly", "2", "x^3+x^2", "--json"],
        &["inspect", "Z/12", "maxideals"],
        &["inspect", "GF(2)[x]/(x^3)", "nilradical"],
        &["inspect", "Z/6", "idempotents"],
        &["inspect", "Z/8", "units"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_OK, "{args:?}: {err}");
        assert!(!out.is_empty(), "{args:?}");
    }
    let (_, out, _) = call(&["davenport", "Z2 x Z4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(out.contains('5'), "{v}");
}

#[test]
fn oversized_exact_search_reports_budget_exit() {
    let (code, _, err) = call(&["davenport", "Z2 x Z2 x Z2 x Z2 x Z2 x Z2 x Z2", "--cap", "8"]);
    assert_eq!(code, EXIT_BUDGET, "{err}");
}

#[test]
fn table_rings_load_from_json() {
    let ring = FiniteRing::zmod(6).unwrap();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(serde_json::to_string(&TableFile::from_ring(&ring)).unwrap().as_bytes()).unwrap();
    let spec = format!("table:{}", file.path().display());
    let (code, table_out, err) = call(&["invariants", &spec, "--exact", "--json"]);
    assert_eq!(code, EXIT_OK, "{err}");
    let (_, direct_out, _) = call(&["invariants", "Z/6", "--exact", "--json"]);
    let a: serde_json::Value = serde_json::from_str(&table_out).unwrap();
    let b: serde_json::Value = serde_json::from_str(&direct_out).unwrap();
    for key in ["order", "unit_group", "davenport", "lower_bound", "exact_I"] {
        assert_eq!(a[key], b[key], "{key}");
    }

    let mut broken = tempfile::NamedTempFile::new().unwrap();
    broken.write_all(br#"{"n": 2, "add": [0,1,1,0], "mul": [0,0,0,0]}"#).unwrap();
    let (code, _, _) = call(&["invariants", &format!("table:{}", broken.path().display())]);
    assert_ne!(code, EXIT_OK);
}

#[test]
fn budget_environment_variable_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_ebring"))
        .args(["invariants", "Z/16", "--exact"])
        .env("EBRING_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_BUDGET), "{}", String::from_utf8_lossy(&out.stderr));
    let out = Command::new(env!("CARGO_BIN_EXE_ebring")).args(["invariants", "Z/16", "--exact"]).output().unwrap();
    assert!(out.status.success());
}
