//! Bit-exact file formats: pyramid and polynomial JSON, CSV lines.
//!
//! ```json
//! {"n": 2, "entries": ["1/4", "1/2", "1/4"]}
//! {"coeffs": ["-1/4", "0", "1"]}
//! ```
//!
//! Entries use the canonical Gaussian-rational text form, coefficients are
//! ascending in degree. Parsing and printing round-trip exactly.

use serde::{Deserialize, Serialize};

use crate::exact::{ExactError, GaussRat, ZPoly};
use crate::transforms::{PyramidRow, TransformError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error(transparent)]
    Literal(#[from] ExactError),
    #[error(transparent)]
    Row(#[from] TransformError),
}

/// JSON schema for a pyramid row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PyramidJson {
    pub n: usize,
    pub entries: Vec<String>,
}

impl PyramidJson {
    pub fn from_row(row: &PyramidRow) -> Self {
        PyramidJson {
            n: row.n(),
            entries: row.entry_strings(),
        }
    }

    pub fn to_row(&self) -> Result<PyramidRow, FormatError> {
        let entries = self
            .entries
            .iter()
            .map(|s| s.parse::<GaussRat>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PyramidRow::new(self.n, entries)?)
    }
}

/// JSON schema for a polynomial, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl PolyJson {
    pub fn from_poly(p: &ZPoly) -> Self {
        PolyJson {
            coeffs: p.coeff_strings(),
        }
    }

    pub fn to_poly(&self) -> Result<ZPoly, FormatError> {
        Ok(ZPoly::from_coeff_strings(&self.coeffs)?)
    }
}

/// One CSV line: entries in textual form, comma-separated.
pub fn csv_line(values: &[String]) -> String {
    values.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pyramid_json_round_trip() {
        let row = PyramidRow::new(
            2,
            vec![
                GaussRat::frac(1, 4),
                GaussRat::frac(1, 2),
                GaussRat::frac(1, 4),
            ],
        )
        .unwrap();
        let json = PyramidJson::from_row(&row);
        assert_eq!(json.entries, vec!["1/4", "1/2", "1/4"]);
        assert_eq!(json.to_row().unwrap(), row);
    }

    #[test]
    fn poly_json_round_trip() {
        let p = ZPoly::from_coeff_strings(&["-1/4".into(), "0".into(), "1".into()]).unwrap();
        let json = PolyJson::from_poly(&p);
        assert_eq!(json.coeffs, vec!["-1/4", "0", "1"]);
        assert_eq!(json.to_poly().unwrap(), p);
    }

    #[test]
    fn bad_literals_are_reported() {
        let json = PyramidJson {
            n: 1,
            entries: vec!["1/2".into(), "oops".into()],
        };
        assert!(json.to_row().is_err());
        let wrong_len = PyramidJson {
            n: 3,
            entries: vec!["1".into()],
        };
        assert!(matches!(wrong_len.to_row(), Err(FormatError::Row(_))));
    }

    #[test]
    fn csv_is_plain_join() {
        assert_eq!(csv_line(&["1/4".into(), "1/2 i".into()]), "1/4,1/2 i");
    }
}
