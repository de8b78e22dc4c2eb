//! `{"kind", "n", "data"}` documents holding matrices and pure states.
//!
//! Complex numbers are `[re, im]` pairs. Matrices are `n` rows of `n`
//! entries; pure states are a flat list of `n^2` amplitudes indexed `i*n + j`.

use dmstrata::{validate_density, Complex64, ComplexMatrix, DensityMatrix, PureState, Unitary};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::CliError;
use crate::json::to_line;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Density,
    PureState,
    Unitary,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Density => "density",
            Kind::PureState => "pure_state",
            Kind::Unitary => "unitary",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "density" => Some(Kind::Density),
            "pure_state" => Some(Kind::PureState),
            "unitary" => Some(Kind::Unitary),
            _ => None,
        }
    }
}

/// `entries` always has `n^2` elements: row-major for matrices, amplitudes
/// for pure states.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixDocument {
    pub kind: Kind,
    pub n: usize,
    pub entries: Vec<Complex64>,
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn complex(v: &Value) -> Result<Complex64, CliError> {
    let pair = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| parse_err("entry is not an [re, im] pair"))?;
    let part = |x: &Value| x.as_f64().filter(|f| f.is_finite()).ok_or_else(|| parse_err("entry part is not a finite number"));
    Ok(Complex64::new(part(&pair[0])?, part(&pair[1])?))
}

fn pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

impl MatrixDocument {
    pub fn from_density(rho: &DensityMatrix) -> Self {
        Self::from_matrix(Kind::Density, &rho.to_complex_matrix())
    }

    pub fn from_unitary(u: &Unitary) -> Self {
        Self::from_matrix(Kind::Unitary, &u.to_complex_matrix())
    }

    pub fn from_pure(psi: &PureState) -> Self {
        Self {
            kind: Kind::PureState,
            n: psi.n(),
            entries: psi.amplitudes().to_vec(),
        }
    }

    fn from_matrix(kind: Kind, m: &ComplexMatrix) -> Self {
        Self {
            kind,
            n: m.rows(),
            entries: m.to_row_major(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let value: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("malformed JSON: {e}")))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self, CliError> {
        let obj = value.as_object().ok_or_else(|| parse_err("document is not a JSON object"))?;
        let kind_name = obj.get("kind").and_then(Value::as_str).ok_or_else(|| parse_err("missing string field \"kind\""))?;
        let kind = Kind::parse(kind_name).ok_or_else(|| parse_err(format!("unknown kind {kind_name:?}")))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .filter(|&n| n > 0)
            .ok_or_else(|| parse_err("field \"n\" must be a positive integer"))? as usize;
        let data = obj.get("data").and_then(Value::as_array).ok_or_else(|| parse_err("missing array field \"data\""))?;

        let entries = match kind {
            Kind::PureState => {
                if data.len() != n * n {
                    return Err(parse_err(format!(
                        "pure_state with n = {n} needs {} amplitudes, found {}",
                        n * n,
                        data.len()
                    )));
                }
                data.iter().map(complex).collect::<Result<Vec<_>, _>>()?
            }
            Kind::Density | Kind::Unitary => {
                if data.len() != n {
                    return Err(parse_err(format!("expected {n} rows, found {}", data.len())));
                }
                let mut entries = Vec::with_capacity(n * n);
                for (i, row) in data.iter().enumerate() {
                    let row = row.as_array().ok_or_else(|| parse_err(format!("row {i} is not an array")))?;
                    if row.len() != n {
                        return Err(parse_err(format!("row {i} has {} entries, expected {n}", row.len())));
                    }
                    for z in row {
                        entries.push(complex(z)?);
                    }
                }
                entries
            }
        };
        Ok(Self { kind, n, entries })
    }

    pub fn to_value(&self) -> Value {
        let data: Vec<Value> = match self.kind {
            Kind::PureState => self.entries.iter().copied().map(pair).collect(),
            Kind::Density | Kind::Unitary => self
                .entries
                .chunks(self.n)
                .map(|row| Value::Array(row.iter().copied().map(pair).collect()))
                .collect(),
        };
        let mut obj = Map::new();
        obj.insert("kind".into(), json!(self.kind.name()));
        obj.insert("n".into(), json!(self.n));
        obj.insert("data".into(), Value::Array(data));
        Value::Object(obj)
    }

    pub fn to_line(&self) -> String {
        to_line(&self.to_value())
    }

    /// Kind, size and the SHA-256 of the canonical serialization.
    pub fn digest(&self) -> Value {
        let hash = Sha256::digest(self.to_line().as_bytes());
        let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
        json!({"kind": self.kind.name(), "n": self.n, "sha256": hex})
    }

    fn expect(&self, kind: Kind) -> Result<(), CliError> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(parse_err(format!("expected a {} document, got {}", kind.name(), self.kind.name())))
        }
    }

    pub fn to_density(&self, tol: f64) -> Result<DensityMatrix, CliError> {
        self.expect(Kind::Density)?;
        let m = ComplexMatrix::from_row_major(self.n, self.n, &self.entries)?;
        Ok(validate_density(&m, tol)?)
    }

    pub fn to_pure(&self, tol: f64) -> Result<PureState, CliError> {
        self.expect(Kind::PureState)?;
        Ok(PureState::with_tolerance(self.entries.clone(), tol)?)
    }

    pub fn to_unitary(&self) -> Result<Unitary, CliError> {
        self.expect(Kind::Unitary)?;
        Ok(Unitary::new(ComplexMatrix::from_row_major(self.n, self.n, &self.entries)?)?)
    }
}
