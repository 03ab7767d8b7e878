//! JSON file formats for polytopes, Gram matrices and torus curves.
//!
//! ```text
//! {"vertices": [[-1,-1,1], [-1,1,-1], [1,-1,-1], [5,-1,-1], [-1,5,-1]]}
//! {"gram": [[-2,2],[2,0]]}
//! {"f2": "Y*Z - X^2", "f3": "Y^3 + t5*X*Y^2 - X^2*Z + Y*Z^2",
//!  "params": {"t5": 1}, "points": [[0,0,1], ["-1",1,1]]}
//! ```
//!
//! Parameter values and point coordinates are integers or strings `"p/q"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{fmt_rat, parse_rat, Rat};
use crate::curve::{CurveError, ProjPoint, TorusCurve};
use crate::lattice::{GramMatrix, LatticeError};
use crate::polytope::{convex_hull, LatticePoint, Polytope, PolytopeError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub type Result<T> = std::result::Result<T, InputError>;

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })
}

/// serde_json appends " at line L column C"; the position is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| InputError::Read { path: path.display().to_string(), message: e.to_string() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    pub vertices: Vec<[i64; 3]>,
}

impl PolytopeFile {
    pub fn parse(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn polytope(&self) -> Result<Polytope> {
        let pts: Vec<LatticePoint> = self.vertices.iter().map(|v| LatticePoint::new(v[0], v[1], v[2])).collect();
        Ok(convex_hull(&pts)?)
    }

    /// Vertices of an integral polytope; `None` if some vertex is not integral.
    pub fn from_polytope(p: &Polytope) -> Option<Self> {
        Some(PolytopeFile { vertices: p.lattice_vertices()?.iter().map(LatticePoint::to_i64).collect() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GramFile {
    pub gram: Vec<Vec<i64>>,
}

impl GramFile {
    pub fn parse(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn gram(&self) -> Result<GramMatrix> {
        let n = self.gram.len();
        if let Some(row) = self.gram.iter().find(|r| r.len() != n) {
            return Err(LatticeError::NotSquare { rows: n, cols: row.len() }.into());
        }
        Ok(GramMatrix::from_i64(&self.gram)?)
    }

    /// `None` if an entry does not fit in `i64`.
    pub fn from_gram(g: &GramMatrix) -> Option<Self> {
        Some(GramFile { gram: g.to_i64_rows()? })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

/// An integer or a string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatValue {
    Int(i64),
    Str(String),
}

impl RatValue {
    pub fn value(&self, field: &str) -> Result<Rat> {
        match self {
            RatValue::Int(v) => Ok(Rat::from_integer((*v).into())),
            RatValue::Str(s) => parse_rat(s).ok_or_else(|| InputError::Field {
                field: field.to_string(),
                message: format!("'{s}' is not a rational number"),
            }),
        }
    }

    pub fn from_rat(r: &Rat) -> Self {
        match (r.is_integer(), i64::try_from(r.numer())) {
            (true, Ok(v)) => RatValue::Int(v),
            _ => RatValue::Str(fmt_rat(r)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub f2: String,
    pub f3: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, RatValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<[RatValue; 3]>,
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self> {
        from_json(text)
    }

    pub fn param_values(&self) -> Result<BTreeMap<String, Rat>> {
        self.params.iter().map(|(k, v)| Ok((k.clone(), v.value(&format!("params.{k}"))?))).collect()
    }

    pub fn curve(&self) -> Result<TorusCurve> {
        let params = self.param_values()?;
        let f2 = crate::curve::parse_hom(&self.f2, &params, 2).map_err(|e| curve_field("f2", e))?;
        let f3 = crate::curve::parse_hom(&self.f3, &params, 3).map_err(|e| curve_field("f3", e))?;
        Ok(TorusCurve::new(f2, f3).expect("degrees checked"))
    }

    pub fn proj_points(&self) -> Result<Vec<ProjPoint>> {
        self.points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let field = format!("points[{i}]");
                let c = [p[0].value(&field)?, p[1].value(&field)?, p[2].value(&field)?];
                ProjPoint::new(c).map_err(|e| InputError::Field { field, message: e.to_string() })
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

fn curve_field(name: &str, e: CurveError) -> InputError {
    InputError::Field { field: name.to_string(), message: e.to_string() }
}

impl From<&crate::fixtures::CurveFixture> for CurveFile {
    fn from(c: &crate::fixtures::CurveFixture) -> Self {
        CurveFile {
            f2: c.f2.to_string(),
            f3: c.f3.to_string(),
            params: c.params_map().iter().map(|(k, v)| (k.clone(), RatValue::from_rat(v))).collect(),
            points: c.points.iter().map(|p| p.point.map(RatValue::Int)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntax_errors_have_positions() {
        let e = PolytopeFile::parse("{\"vertices\": [[1, 2, 3],\n [1, 2.5, 3]]}").unwrap_err();
        match e {
            InputError::Syntax { line, column, .. } => assert_eq!((line, column), (2, 8)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(GramFile::parse("{\"gram\": [[1]], \"x\": 1}"), Err(InputError::Syntax { .. })));
    }

    #[test]
    fn non_square_gram() {
        let g = GramFile::parse("{\"gram\": [[1, 0], [0]]}").unwrap();
        assert!(matches!(g.gram(), Err(InputError::Lattice(LatticeError::NotSquare { .. }))));
    }

    #[test]
    fn curve_fields() {
        let c = CurveFile::parse(r#"{"f2": "Y*Z - X^2", "f3": "Y^3 + t*X^3", "params": {"t": "-1/2"}, "points": [[0, 0, 1], ["1/2", 1, 0]]}"#)
            .unwrap();
        let curve = c.curve().unwrap();
        assert_eq!(curve.f.degree(), 6);
        assert_eq!(c.proj_points().unwrap()[1].to_string(), "(1/2:1:0)");
        let bad = CurveFile { f3: "Y^3 + u*X^3".into(), ..c };
        let e = bad.curve().unwrap_err();
        assert_eq!(e.to_string(), "f3: 1:7: unknown parameter 'u'");
    }
}
