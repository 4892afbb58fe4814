//! Polynomial input documents.
//!
//! Two encodings are accepted: a coefficient list (ascending degree,
//! whitespace-separated decimal integers) and a JSON object
//! `{"degree": n, "coefficients": ["a0", ..., "an"]}`.

use std::fmt;
use std::str::FromStr;

use dsc2::BigIntPoly;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Coeffs,
    Json,
}

/// Coefficients exactly as written, ascending degree. Leading zeros are
/// preserved so that serialization round-trips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialDocument {
    pub coefficients: Vec<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct JsonDocument {
    degree: usize,
    coefficients: Vec<String>,
}

impl PolynomialDocument {
    pub fn from_poly(f: &BigIntPoly) -> Self {
        PolynomialDocument {
            coefficients: f.coeffs().to_vec(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn to_poly(&self) -> BigIntPoly {
        BigIntPoly::new(self.coefficients.clone())
    }

    pub fn parse(text: &str, format: InputFormat) -> Result<Self, CliError> {
        match format {
            InputFormat::Coeffs => Self::parse_coeffs(text),
            InputFormat::Json => Self::parse_json(text),
        }
    }

    fn parse_coeffs(text: &str) -> Result<Self, CliError> {
        let coefficients = text
            .split_whitespace()
            .map(parse_integer)
            .collect::<Result<Vec<_>, _>>()?;
        if coefficients.is_empty() {
            return Err(CliError::Input("no coefficients given".into()));
        }
        Ok(PolynomialDocument { coefficients })
    }

    fn parse_json(text: &str) -> Result<Self, CliError> {
        let doc: JsonDocument = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed JSON document: {e}")))?;
        if doc.coefficients.len() != doc.degree + 1 {
            return Err(CliError::Input(format!(
                "degree {} needs {} coefficients, found {}",
                doc.degree,
                doc.degree + 1,
                doc.coefficients.len()
            )));
        }
        let coefficients = doc
            .coefficients
            .iter()
            .map(|s| parse_integer(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolynomialDocument { coefficients })
    }

    pub fn serialize(&self, format: InputFormat) -> String {
        match format {
            InputFormat::Coeffs => {
                let mut s = self.to_string();
                s.push('\n');
                s
            }
            InputFormat::Json => {
                let doc = JsonDocument {
                    degree: self.degree(),
                    coefficients: self.coefficients.iter().map(BigInt::to_string).collect(),
                };
                let mut s = serde_json::to_string(&doc).expect("document serializes");
                s.push('\n');
                s
            }
        }
    }
}

/// Coefficient-list form.
impl fmt::Display for PolynomialDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn parse_integer(s: &str) -> Result<BigInt, CliError> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::Input(format!("`{s}` is not a decimal integer")));
    }
    BigInt::from_str(s).map_err(|e| CliError::Input(format!("`{s}`: {e}")))
}
