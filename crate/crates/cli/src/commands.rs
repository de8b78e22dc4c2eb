//! One function per subcommand. Each returns the full output text.

use std::io::Read;
use std::path::{Path, PathBuf};

use dmstrata::sampling::{random_density, random_generic_density, random_pure, random_unitary};
use dmstrata::strata::TangentAnalysis;
use dmstrata::tol::{DEFAULT_RANK_TOL, TANGENT_GAP_RATIO};
use dmstrata::{
    apply_local_b, bloch_vector, classify, connecting_unitary, convex_split, density_from_bloch, partial_trace_b,
    purify, ray_distance, spectral_decompose, stratum_dimension, tangent_space_analysis, BlochVector, Complex64,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::document::MatrixDocument;
use crate::error::CliError;
use crate::json::to_line;
use crate::{Command, SampleKind};

/// Largest residual `connect` accepts.
pub const CONNECT_RESIDUAL_MAX: f64 = 1e-9;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub tolerances: Value,
    pub status: String,
}

impl Report {
    fn ok(command: &'static str, inputs: Value, results: Value, tolerances: Value) -> Self {
        Self {
            command,
            inputs,
            results,
            tolerances,
            status: "ok".into(),
        }
    }

    fn to_line(&self) -> String {
        to_line(self)
    }
}

pub(crate) fn out_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::Purify { io, .. }
        | Command::Trace { io, .. }
        | Command::Classify { io, .. }
        | Command::Split { io, .. }
        | Command::Bloch { io, .. } => io.out.as_ref(),
        Command::Connect { out, .. } | Command::VerifyDimension { out, .. } | Command::Sample { out, .. } => {
            out.as_ref()
        }
    }
}

fn read_document(path: Option<&Path>, stdin: &mut dyn Read) -> Result<MatrixDocument, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", p.display())))?
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| CliError::Parse(format!("cannot read stdin: {e}")))?;
        }
    }
    MatrixDocument::parse(&text)
}

pub(crate) fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<String, CliError> {
    match cmd {
        Command::Purify { io, tol } => {
            let rho = read_document(io.input.as_deref(), stdin)?.to_density(tol.tol)?;
            Ok(MatrixDocument::from_pure(&purify(&rho)?).to_line())
        }
        Command::Trace { io, tol } => {
            let psi = read_document(io.input.as_deref(), stdin)?.to_pure(tol.tol)?;
            Ok(MatrixDocument::from_density(&partial_trace_b(&psi)).to_line())
        }
        Command::Connect { psi, phi, tol, .. } => {
            let a = read_document(Some(psi), stdin)?;
            let b = read_document(Some(phi), stdin)?;
            connect(&a, &b, tol.tol)
        }
        Command::Classify { io, tol } => classify_cmd(&read_document(io.input.as_deref(), stdin)?, tol.tol),
        Command::Split { io, tol } => split(&read_document(io.input.as_deref(), stdin)?, tol.tol),
        Command::Bloch { io, tol, from } => match from {
            Some(r) => bloch_from(r),
            None => bloch_of(&read_document(io.input.as_deref(), stdin)?, tol.tol),
        },
        Command::VerifyDimension {
            n,
            mu,
            samples,
            seed,
            gap,
            tol,
            ..
        } => verify_dimension(*n, *mu, *samples, *seed, *gap, tol.tol),
        Command::Sample { kind, n, mu, seed, .. } => sample(*kind, *n, *mu, *seed),
    }
}

fn complex_pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn connect(a: &MatrixDocument, b: &MatrixDocument, tol: f64) -> Result<String, CliError> {
    let psi = a.to_pure(tol)?;
    let phi = b.to_pure(tol)?;
    let v = connecting_unitary(&psi, &phi, tol)?;
    let residual = ray_distance(&apply_local_b(&psi, &v)?, &phi)?;
    let passed = residual <= CONNECT_RESIDUAL_MAX;
    let mut report = Report::ok(
        "connect",
        json!([a.digest(), b.digest()]),
        json!({
            "unitary": MatrixDocument::from_unitary(&v).to_value(),
            "residual": residual,
            "determinant": complex_pair(v.determinant()),
        }),
        json!({"tol": tol, "residual_max": CONNECT_RESIDUAL_MAX}),
    );
    if passed {
        Ok(report.to_line())
    } else {
        report.status = "ResidualTooLarge".into();
        Err(CliError::Failed {
            code: "ResidualTooLarge",
            message: format!("residual {residual:e} exceeds {CONNECT_RESIDUAL_MAX:e}"),
            report: report.to_line(),
        })
    }
}

pub fn classify_cmd(doc: &MatrixDocument, tol: f64) -> Result<String, CliError> {
    let rho = doc.to_density(tol)?;
    let info = classify(&rho, tol)?;
    let spectral = spectral_decompose(&rho)?;
    let results = json!({
        "n": info.n,
        "mu": info.mu,
        "stratum_dim": info.stratum_dim,
        "stabilizer_dim": info.stabilizer_dim,
        "is_pure": info.is_pure,
        "is_full_rank": info.is_full_rank,
        "purity": rho.purity(),
        "eigenvalues": spectral.eigenvalues,
    });
    Ok(Report::ok("classify", json!([doc.digest()]), results, json!({"tol": tol})).to_line())
}

pub fn split(doc: &MatrixDocument, tol: f64) -> Result<String, CliError> {
    let rho = doc.to_density(tol)?;
    let info = classify(&rho, tol)?;
    let s = convex_split(&rho, tol)?;
    let components: Vec<Value> = s.components.iter().map(|c| MatrixDocument::from_density(c).to_value()).collect();
    let results = json!({"mu": info.mu, "weights": s.weights, "components": components});
    Ok(Report::ok("split", json!([doc.digest()]), results, json!({"tol": tol})).to_line())
}

pub fn bloch_of(doc: &MatrixDocument, tol: f64) -> Result<String, CliError> {
    let rho = doc.to_density(tol)?;
    let r = bloch_vector(&rho)?;
    let results = json!({"bloch_vector": r.to_array(), "norm": r.norm()});
    Ok(Report::ok("bloch", json!([doc.digest()]), results, json!({"tol": tol})).to_line())
}

pub fn bloch_from(r: &[f64]) -> Result<String, CliError> {
    let v = BlochVector::new(r[0], r[1], r[2])?;
    let rho = density_from_bloch(&v)?;
    let results = json!({
        "bloch_vector": v.to_array(),
        "density": MatrixDocument::from_density(&rho).to_value(),
    });
    let tolerances = json!({"ball": dmstrata::tol::BLOCH_BALL});
    Ok(Report::ok("bloch", json!({"from": r}), results, tolerances).to_line())
}

fn sample_entry(index: usize, seed: u64, expected: usize, outcome: dmstrata::Result<TangentAnalysis>) -> (Value, bool) {
    match outcome {
        Ok(a) => {
            let kept_min = a.rank.checked_sub(1).map(|k| a.singular_values[k]);
            let discarded_max = a.singular_values.get(a.rank).copied();
            let ok = a.rank == expected;
            let entry = json!({
                "index": index,
                "seed": seed,
                "rank": a.rank,
                "kept_min": kept_min,
                "discarded_max": discarded_max,
                "matches": ok,
            });
            (entry, ok)
        }
        Err(e) => (json!({"index": index, "seed": seed, "error": e.code(), "matches": false}), false),
    }
}

/// Samples use seeds `seed, seed + 1, ...` (wrapping), one per index.
pub fn verify_dimension(n: usize, mu: usize, samples: usize, seed: u64, gap: f64, tol: f64) -> Result<String, CliError> {
    let expected = stratum_dimension(n, mu)?;
    let mut entries = Vec::with_capacity(samples);
    let mut all_match = true;
    for index in 0..samples {
        let s = seed.wrapping_add(index as u64);
        let outcome = random_generic_density(n, mu, s, gap).and_then(|rho| tangent_space_analysis(&rho, tol));
        let (entry, ok) = sample_entry(index, s, expected, outcome);
        all_match &= ok;
        entries.push(entry);
    }
    let mut report = Report::ok(
        "verify-dimension",
        json!({"n": n, "mu": mu, "samples": samples, "seed": seed}),
        json!({"formula": expected, "samples": entries, "passed": all_match}),
        json!({"tol": tol, "gap": gap, "rank_tol": DEFAULT_RANK_TOL, "gap_ratio_min": TANGENT_GAP_RATIO}),
    );
    if all_match {
        Ok(report.to_line())
    } else {
        report.status = "RankMismatch".into();
        Err(CliError::Failed {
            code: "RankMismatch",
            message: format!("some tangent ranks differ from the formula value {expected}"),
            report: report.to_line(),
        })
    }
}

pub fn sample(kind: SampleKind, n: usize, mu: Option<usize>, seed: u64) -> Result<String, CliError> {
    if n == 0 {
        return Err(dmstrata::Error::RankOutOfRange { n, mu: mu.unwrap_or(0) }.into());
    }
    let doc = match kind {
        SampleKind::Pure => MatrixDocument::from_pure(&random_pure(n, seed)),
        SampleKind::Unitary => MatrixDocument::from_unitary(&random_unitary(n, seed)),
        SampleKind::Density => MatrixDocument::from_density(&random_density(n, mu.unwrap_or(n), seed)?),
    };
    Ok(doc.to_line())
}
