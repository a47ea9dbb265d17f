//! JSON representation of polynomials.
//!
//! A polynomial object carries either ascending coefficients or a root
//! multiset with an overall scale:
//!
//! ```json
//! {"coeffs": ["-1", "0", "1"]}
//! {"roots": [["1/2", 1], ["-3", 2]], "factor": "2"}
//! ```
//!
//! All scalars are `"p/q"` strings.  Unknown fields are rejected.

use serde_json::Value;

use super::poly::Poly;
use super::roots::{roots_rational, RootMultiset};

/// Error reading a polynomial object.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyFileError {
    #[error("polynomial object must be a JSON object with \"coeffs\", or \"roots\" plus optional \"factor\"")]
    BadShape,
    #[error("unknown field {0:?} in polynomial object")]
    UnknownField(String),
    #[error("invalid polynomial entry: {0}")]
    BadEntry(String),
}

/// Parse a polynomial from its JSON object form.
pub fn poly_from_json(value: &Value) -> Result<Poly, PolyFileError> {
    let obj = value.as_object().ok_or(PolyFileError::BadShape)?;
    let has_coeffs = obj.contains_key("coeffs");
    let has_roots = obj.contains_key("roots");
    for key in obj.keys() {
        let known = match key.as_str() {
            "coeffs" => has_coeffs && !has_roots,
            "roots" => has_roots && !has_coeffs,
            "factor" => has_roots && !has_coeffs,
            _ => false,
        };
        if !known {
            return Err(PolyFileError::UnknownField(key.clone()));
        }
    }
    if has_coeffs {
        let coeffs = serde_json::from_value(obj["coeffs"].clone())
            .map_err(|e| PolyFileError::BadEntry(e.to_string()))?;
        Ok(Poly::from_coeffs(coeffs))
    } else if has_roots {
        let rm: RootMultiset = serde_json::from_value(value.clone())
            .map_err(|e| PolyFileError::BadEntry(e.to_string()))?;
        Ok(rm.to_poly())
    } else {
        Err(PolyFileError::BadShape)
    }
}

/// Serialize in root form when the polynomial splits over the rationals,
/// otherwise in coefficient form.
pub fn poly_to_json(p: &Poly) -> Value {
    match roots_rational(p) {
        Ok(rm) => serde_json::to_value(&rm).expect("serializable"),
        Err(_) => serde_json::json!({ "coeffs": p.coeffs() }),
    }
}
