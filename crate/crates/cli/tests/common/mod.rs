//! Golden cases and process helpers shared by the CLI test targets.
#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use dmstrata::sampling::{random_density, random_unitary};
use dmstrata::{apply_local_b, purify};
use dmstrata_cli::MatrixDocument;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    /// Fixture piped to stdin.
    pub stdin: Option<&'static str>,
    pub exit: i32,
    /// Substring the stderr must contain (failures only).
    pub stderr: &'static str,
}

const fn case(name: &'static str, args: &'static [&'static str], stdin: Option<&'static str>) -> Case {
    Case {
        name,
        args,
        stdin,
        exit: 0,
        stderr: "",
    }
}

const fn failing(name: &'static str, args: &'static [&'static str], stdin: Option<&'static str>, exit: i32, stderr: &'static str) -> Case {
    Case {
        name,
        args,
        stdin,
        exit,
        stderr,
    }
}

/// `@name` in an argument expands to the fixture path.
pub const CASES: &[Case] = &[
    case("purify_mixed2", &["purify"], Some("mixed2.json")),
    case("purify_diag_5_3_2", &["purify"], Some("diag_5_3_2.json")),
    case("purify_ground2_from_file", &["purify", "--in", "@ground2.json"], None),
    failing("purify_malformed", &["purify"], Some("malformed.json"), 2, "ParseError"),
    failing("purify_trace_1_1", &["purify"], Some("trace_1_1.json"), 3, "TraceNotOne"),
    case("trace_bell", &["trace"], Some("bell.json")),
    case("trace_product01", &["trace"], Some("product01.json")),
    failing("trace_six_amplitudes", &["trace"], Some("six_amplitudes.json"), 2, "ParseError"),
    case("connect_bell_bell", &["connect", "@bell.json", "@bell.json"], None),
    case("connect_planted", &["connect", "@planted_psi.json", "@planted_phi.json"], None),
    case("connect_planted_stdin", &["connect", "-", "@planted_phi.json"], Some("planted_psi.json")),
    failing("connect_different_states", &["connect", "@bell.json", "@product01.json"], None, 4, "PartialTraceMismatch"),
    case("classify_mixed2", &["classify"], Some("mixed2.json")),
    case("classify_ground2", &["classify"], Some("ground2.json")),
    case("classify_diag5", &["classify", "--tol", "1e-9"], Some("diag5.json")),
    case("split_mixed2", &["split"], Some("mixed2.json")),
    case("split_diag_7_3", &["split"], Some("diag_7_3.json")),
    case("split_diag_5_3_2", &["split"], Some("diag_5_3_2.json")),
    failing("split_ground2", &["split"], Some("ground2.json"), 4, "AlreadyPure"),
    case("bloch_mixed2", &["bloch"], Some("mixed2.json")),
    case("bloch_ground2", &["bloch"], Some("ground2.json")),
    case("bloch_from_x", &["bloch", "--from", "1", "0", "0"], None),
    case("bloch_from_negative", &["bloch", "--from", "0", "-0.6", "0.8"], None),
    failing("bloch_from_outside", &["bloch", "--from", "1", "1", "0"], None, 3, "OutsideBall"),
    failing("bloch_qutrit", &["bloch"], Some("diag_5_3_2.json"), 4, "DimensionNotTwo"),
    case("verify_n2_mu2", &["verify-dimension", "--n", "2", "--mu", "2", "--samples", "20"], None),
    case("verify_n3_mu2", &["verify-dimension", "--n", "3", "--mu", "2", "--samples", "20", "--seed", "0x2a"], None),
    case("verify_n4_mu1", &["verify-dimension", "--n", "4", "--mu", "1", "--samples", "20", "--seed", "7"], None),
    failing("verify_rank_too_big", &["verify-dimension", "--n", "2", "--mu", "3"], None, 4, "RankOutOfRange"),
    case("sample_pure", &["sample", "--kind", "pure", "--n", "2", "--seed", "42"], None),
    case("sample_unitary", &["sample", "--kind", "unitary", "--n", "3", "--seed", "0x2a"], None),
    case("sample_density", &["sample", "--kind", "density", "--n", "4", "--mu", "2", "--seed", "7"], None),
    failing("unknown_flag", &["classify", "--bogus"], None, 2, "--bogus"),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    crate_dir().join("tests/fixtures").join(name)
}

pub fn golden(name: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{name}.json"))
}

pub fn blessing() -> bool {
    std::env::var_os("DMSTRATA_BLESS").is_some_and(|v| v == "1")
}

pub fn run_bin(args: &[String], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dmstrata"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn dmstrata");
    // a failed write just means the command exited before reading stdin
    let _ = child.stdin.take().expect("piped stdin").write_all(stdin);
    child.wait_with_output().expect("wait for dmstrata")
}

pub fn run_case(case: &Case) -> Output {
    let args: Vec<String> = case
        .args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => fixture(name).display().to_string(),
            None => a.to_string(),
        })
        .collect();
    let stdin = case.stdin.map(|f| std::fs::read(fixture(f)).expect("fixture")).unwrap_or_default();
    run_bin(&args, &stdin)
}

/// Compares one case against its golden file; returns a description of the
/// first difference.
pub fn check_case(case: &Case) -> Result<(), String> {
    let out = run_case(case);
    let code = out.status.code().unwrap_or(-1);
    if code != case.exit {
        return Err(format!("{}: exit {code}, expected {}: {}", case.name, case.exit, String::from_utf8_lossy(&out.stderr)));
    }
    let stderr = String::from_utf8_lossy(&out.stderr);
    if !stderr.contains(case.stderr) {
        return Err(format!("{}: stderr {stderr:?} lacks {:?}", case.name, case.stderr));
    }
    let expected = std::fs::read(golden(case.name)).map_err(|e| format!("{}: missing golden: {e}", case.name))?;
    if out.stdout != expected {
        return Err(format!("{}: stdout differs from golden file", case.name));
    }
    Ok(())
}

/// Two purifications of one rank-2 qutrit state, for `connect`.
pub fn planted_pair() -> (MatrixDocument, MatrixDocument) {
    let rho = random_density(3, 2, 11).unwrap();
    let base = purify(&rho).unwrap();
    let psi = apply_local_b(&base, &random_unitary(3, 12)).unwrap();
    let phi = apply_local_b(&base, &random_unitary(3, 13)).unwrap();
    (MatrixDocument::from_pure(&psi), MatrixDocument::from_pure(&phi))
}

/// Density documents for the `purify | trace` pipeline: all sizes 2..=6 and
/// every rank.
pub fn pipeline_corpus() -> Vec<MatrixDocument> {
    (0..100u64)
        .map(|i| {
            let n = 2 + (i % 5) as usize;
            let mu = 1 + (i / 5) as usize % n;
            MatrixDocument::from_density(&random_density(n, mu, 0xc0ffee + i).unwrap())
        })
        .collect()
}

/// Runs `purify | trace` through the binary and returns the max entrywise
/// deviation from the input.
pub fn pipeline_deviation(doc: &MatrixDocument) -> Result<f64, String> {
    let purified = run_bin(&["purify".into()], doc.to_line().as_bytes());
    if !purified.status.success() {
        return Err(format!("purify failed: {}", String::from_utf8_lossy(&purified.stderr)));
    }
    let traced = run_bin(&["trace".into()], &purified.stdout);
    if !traced.status.success() {
        return Err(format!("trace failed: {}", String::from_utf8_lossy(&traced.stderr)));
    }
    let back = MatrixDocument::parse(std::str::from_utf8(&traced.stdout).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if back.n != doc.n {
        return Err(format!("size changed from {} to {}", doc.n, back.n));
    }
    Ok(back.entries.iter().zip(&doc.entries).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
}
