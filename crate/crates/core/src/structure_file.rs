//! Structure-definition files: either an SRMI presentation
//! `{n, alpha, frame}` with row-major matrices of rational strings, or a bare
//! bivector `{n, bivector: [{indices, poly}, ...]}` (1-based indices).

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::Error;
use crate::frame::{LinFrame, SrmiStructure};
use crate::linalg::Matrix;
use crate::multivector::MultiVec;
use crate::scalar::{parse_rational, Rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStructure {
    n: usize,
    #[serde(default)]
    alpha: Option<Vec<String>>,
    #[serde(default)]
    frame: Option<Vec<Vec<String>>>,
    #[serde(default)]
    bivector: Option<Vec<RawRecord>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    indices: Vec<usize>,
    poly: BTreeMap<String, String>,
}

/// A structure read from a file.
#[derive(Clone, Debug)]
pub enum LoadedStructure {
    Srmi(Box<SrmiStructure<Rational>>),
    Bivector(MultiVec<Rational>),
}

impl LoadedStructure {
    pub fn lambda(&self) -> &MultiVec<Rational> {
        match self {
            LoadedStructure::Srmi(s) => s.lambda(),
            LoadedStructure::Bivector(b) => b,
        }
    }

    pub fn srmi(&self) -> Option<&SrmiStructure<Rational>> {
        match self {
            LoadedStructure::Srmi(s) => Some(s),
            LoadedStructure::Bivector(_) => None,
        }
    }
}

fn square(n: usize, entries: &[String], what: &str) -> Result<Matrix<Rational>, Error> {
    if entries.len() != n * n {
        return Err(Error::Parse(format!("{what} needs {} entries, found {}", n * n, entries.len())));
    }
    let vals = entries.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_fn(n, n, |i, j| vals[i * n + j].clone()))
}

/// Parses and validates a structure file (JSON text).
pub fn parse_structure(text: &str) -> Result<LoadedStructure, Error> {
    let raw: RawStructure = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let n = raw.n;
    if n == 0 {
        return Err(Error::Parse("n must be positive".into()));
    }
    match (raw.alpha, raw.frame, raw.bivector) {
        (Some(alpha), Some(frame), None) => {
            let alpha = square(n, &alpha, "alpha")?;
            if alpha.is_zero() {
                return Err(Error::Degenerate("alpha = 0 gives the zero structure".into()));
            }
            if frame.len() != n {
                return Err(Error::Parse(format!("frame needs {n} matrices, found {}", frame.len())));
            }
            let mats = frame
                .iter()
                .enumerate()
                .map(|(i, m)| square(n, m, &format!("frame matrix {}", i + 1)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(LoadedStructure::Srmi(Box::new(SrmiStructure::new(alpha, LinFrame::new(mats)?)?)))
        }
        (None, None, Some(records)) => {
            let recs: Vec<(Vec<usize>, BTreeMap<String, String>)> = records.into_iter().map(|r| (r.indices, r.poly)).collect();
            let b = MultiVec::from_records(n, 2, &recs)?;
            if b.is_zero() {
                return Err(Error::Degenerate("the bivector is zero".into()));
            }
            if b.degree() != 2 {
                return Err(Error::Parse("the bivector must have quadratic coefficients".into()));
            }
            if !b.is_poisson() {
                return Err(Error::NotPoisson);
            }
            Ok(LoadedStructure::Bivector(b))
        }
        _ => Err(Error::Parse("give either `alpha` and `frame`, or `bivector`".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn srmi_file() {
        let text = r#"{"n": 3, "alpha": ["0","1","0", "-1","0","0", "0","0","0"],
            "frame": [["1","0","0","0","0","0","0","0","0"],
                      ["0","0","0","0","1","0","0","0","0"],
                      ["0","0","0","0","0","0","0","0","1"]]}"#;
        let s = parse_structure(text).unwrap();
        assert!(s.srmi().is_some());
        assert!(s.lambda().is_poisson());
    }

    #[test]
    fn zero_alpha_and_bad_bivector() {
        let text = r#"{"n": 2, "alpha": ["0","0","0","0"], "frame": [["1","0","0","0"],["0","0","0","1"]]}"#;
        assert!(matches!(parse_structure(text), Err(Error::Degenerate(_))));
        let text = r#"{"n": 3, "bivector": [{"indices": [1,2], "poly": {"1,0,0": "1"}}]}"#;
        assert!(matches!(parse_structure(text), Err(Error::Parse(_))));
        let text = r#"{"n": 3, "bivector": [{"indices": [1,2], "poly": {"0,0,2": "1"}}]}"#;
        assert!(parse_structure(text).is_ok());
    }
}
