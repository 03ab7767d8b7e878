//! Plane sextics of (2,3)-torus type `F = F2^3 + F3^2`.
//!
//! Singular points are supplied (or found on a small rational grid) and then
//! verified and classified locally. Non-rational configurations are handled
//! through the intersection of the conic and the cubic.

mod classify;
mod parse;
mod poly;
mod resultant;
mod singularity;
mod support;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{fmt_rat, Rat};

pub use classify::{classify_curve, CurveClassification};
pub use parse::{parameter_names, params_from_strs, parse_hom, parse_poly};
pub use poly::{expand, monomial_string, HomPoly, Poly2, Poly3, SparsePoly};
pub use resultant::{intersection_report, transversal_intersection_count, IntersectionReport, Projection, UniPoly};
pub use singularity::{
    classify_ade, classify_germ, find_rational_singular_points, germ_milnor, hessian_corank, local_germ, milnor_number,
    milnor_number_capped, verify_singular, AdeType, SingularPointReport, DEFAULT_CAP,
};
pub use support::{support_polytope_membership, MembershipReport, MonomialMembership};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("expected degree {expected}, found a term of degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("Milnor number did not stabilize below jet degree {cap}")]
    NotIsolated { cap: u32 },
    #[error("point is a smooth point of the curve")]
    NotSingular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("conic and cubic share a component")]
    CommonComponent,
    #[error("projective point with all coordinates zero")]
    ZeroPoint,
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, CurveError>;

/// A point of the projective plane scaled so its last nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [Rat; 3],
}

impl ProjPoint {
    pub fn new(c: [Rat; 3]) -> Result<Self> {
        let k = (0..3).rev().find(|&i| !c[i].is_zero()).ok_or(CurveError::ZeroPoint)?;
        let s = Rat::one() / &c[k];
        Ok(ProjPoint { coords: c.map(|v| v * &s) })
    }

    pub fn from_i64(c: [i64; 3]) -> Result<Self> {
        Self::new(c.map(|v| Rat::from_integer(v.into())))
    }

    pub fn coords(&self) -> &[Rat; 3] {
        &self.coords
    }

    /// Index of the normalized coordinate.
    pub fn chart(&self) -> usize {
        (0..3).rev().find(|&i| !self.coords[i].is_zero()).expect("normalized")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(fmt_rat).collect();
        write!(f, "({})", c.join(":"))
    }
}

/// `F = f2^3 + f3^2` with the expansion cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCurve {
    pub f2: HomPoly,
    pub f3: HomPoly,
    pub f: HomPoly,
}

impl TorusCurve {
    pub fn new(f2: HomPoly, f3: HomPoly) -> Result<Self> {
        let f = expand(&f2, &f3)?;
        Ok(TorusCurve { f2, f3, f })
    }

    /// Parse `f2` and `f3` after substituting `params`.
    pub fn parse(f2: &str, f3: &str, params: &BTreeMap<String, Rat>) -> Result<Self> {
        Self::new(parse_hom(f2, params, 2)?, parse_hom(f3, params, 3)?)
    }
}

/// Sorted multiset of singularity types, e.g. `2A2+A5+E6`.
pub fn configuration_name(types: &[AdeType]) -> String {
    let mut counts: BTreeMap<&AdeType, usize> = BTreeMap::new();
    for t in types {
        *counts.entry(t).or_default() += 1;
    }
    let parts: Vec<String> =
        counts.into_iter().map(|(t, n)| if n == 1 { t.to_string() } else { format!("{n}{t}") }).collect();
    parts.join("+")
}

/// Parse a configuration such as `2A2+A5+E6` into a sorted multiset.
pub fn parse_configuration(s: &str) -> Option<Vec<AdeType>> {
    let mut out = Vec::new();
    for part in s.split('+').map(str::trim) {
        let split = part.find(|c: char| !c.is_ascii_digit())?;
        let count: usize = if split == 0 { 1 } else { part[..split].parse().ok()? };
        let name = &part[split..];
        let t = match name {
            "E6" => AdeType::E6,
            _ => AdeType::A(name.strip_prefix('A')?.parse().ok()?),
        };
        out.extend(std::iter::repeat_n(t, count));
    }
    out.sort();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn normalization() {
        let p = ProjPoint::new([rat(2, 1), rat(-4, 1), rat(2, 1)]).unwrap();
        assert_eq!(p.to_string(), "(1:-2:1)");
        let q = ProjPoint::new([rat(3, 1), rat(0, 1), rat(0, 1)]).unwrap();
        assert_eq!(q.to_string(), "(1:0:0)");
        assert_eq!(q.chart(), 0);
        assert_eq!(ProjPoint::from_i64([0, 0, 0]), Err(CurveError::ZeroPoint));
    }

    #[test]
    fn configuration_names() {
        let c = parse_configuration("2A2+A5+E6").unwrap();
        assert_eq!(c, vec![AdeType::A(2), AdeType::A(2), AdeType::A(5), AdeType::E6]);
        assert_eq!(configuration_name(&c), "2A2+A5+E6");
        assert_eq!(parse_configuration("E6+A11").unwrap(), vec![AdeType::A(11), AdeType::E6]);
    }
}
