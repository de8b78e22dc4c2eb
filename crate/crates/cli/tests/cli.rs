mod common;

use common::{fixture, pipeline_corpus, pipeline_deviation, run_bin};
use dmstrata_cli::{run, MatrixDocument};
use serde_json::Value;

fn run_in_process(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dmstrata").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(stdout: &str) -> Value {
    serde_json::from_str(stdout).unwrap()
}

#[test]
fn purify_then_trace_closes_on_a_small_corpus() {
    for doc in pipeline_corpus().iter().step_by(10) {
        assert!(pipeline_deviation(doc).unwrap() <= 1e-11);
    }
}

#[test]
fn mixed_qubit_purifies_to_bell_state() {
    let input = std::fs::read_to_string(fixture("mixed2.json")).unwrap();
    let (code, out, _) = run_in_process(&["purify"], &input);
    assert_eq!(code, 0);
    let doc = MatrixDocument::parse(&out).unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let expected = [h, 0.0, 0.0, h];
    for (z, e) in doc.entries.iter().zip(expected) {
        assert!((z.re - e).abs() < 1e-15 && z.im == 0.0);
    }
}

#[test]
fn classify_reports_dimensions() {
    let input = std::fs::read_to_string(fixture("diag5.json")).unwrap();
    let (code, out, _) = run_in_process(&["classify"], &input);
    assert_eq!(code, 0);
    let r = report(&out);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["results"]["mu"], 3);
    assert_eq!(r["results"]["stratum_dim"], 20);
    assert_eq!(r["results"]["stabilizer_dim"], 4);
    assert_eq!(r["tolerances"]["tol"].as_f64(), Some(1e-9));
}

#[test]
fn verify_dimension_anchor_values() {
    for (n, mu, expected) in [("2", "2", 3), ("3", "2", 7), ("4", "1", 6)] {
        let (code, out, _) = run_in_process(&["verify-dimension", "--n", n, "--mu", mu], "");
        assert_eq!(code, 0);
        let r = report(&out);
        assert_eq!(r["results"]["formula"], expected);
        let samples = r["results"]["samples"].as_array().unwrap();
        assert_eq!(samples.len(), 20);
        assert!(samples.iter().enumerate().all(|(i, s)| s["index"] == i && s["rank"] == expected));
    }
}

#[test]
fn verify_dimension_failure_still_reports() {
    // a huge gap requirement exhausts the sampler on every draw
    let (code, out, err) = run_in_process(&["verify-dimension", "--n", "4", "--mu", "4", "--samples", "2", "--gap", "0.5"], "");
    assert_eq!(code, 5);
    assert!(err.contains("RankMismatch"));
    let r = report(&out);
    assert_eq!(r["status"], "RankMismatch");
    assert_eq!(r["results"]["samples"][0]["error"], "SamplingExhausted");
}

#[test]
fn seeds_accept_hex_and_decimal() {
    let (_, hex, _) = run_in_process(&["sample", "--kind", "pure", "--n", "2", "--seed", "0x2A"], "");
    let (_, dec, _) = run_in_process(&["sample", "--kind", "pure", "--n", "2", "--seed", "42"], "");
    assert_eq!(hex, dec);
    let (code, out, _) = run_in_process(&["sample", "--kind", "pure", "--n", "2", "--seed", "0xZZ"], "");
    assert_eq!((code, out.as_str()), (2, ""));
}

#[test]
fn sample_rank_out_of_range_is_a_precondition_error() {
    let (code, out, err) = run_in_process(&["sample", "--kind", "density", "--n", "2", "--mu", "3"], "");
    assert_eq!((code, out.as_str()), (4, ""));
    assert!(err.contains("RankOutOfRange"));
}

#[test]
fn non_positive_tolerance_is_rejected() {
    let (code, _, _) = run_in_process(&["classify", "--tol", "-1"], "");
    assert_eq!(code, 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("dmstrata-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("trace.json");
    let input = std::fs::read(fixture("bell.json")).unwrap();
    let out = run_bin(&["trace".into(), "--out".into(), path.display().to_string()], &input);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc = MatrixDocument::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((doc.entries[0].re - 0.5).abs() < 1e-15 && (doc.entries[3].re - 0.5).abs() < 1e-15);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run_in_process(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("verify-dimension"));
}
