//! Whether `W^2 - F(X, Y, Z)` lives in the family of a given polytope.

use super::poly::HomPoly;
use super::{CurveError, Result};
use crate::monomial::{monomial_to_point, WeightedMonomial};
use crate::polytope::{LatticePoint, Polytope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMembership {
    pub monomial: WeightedMonomial,
    pub point: LatticePoint,
    pub inside: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    /// `W^2` first, then the monomials of `F` in descending order.
    pub entries: Vec<MonomialMembership>,
    pub all_inside: bool,
}

impl MembershipReport {
    pub fn outside(&self) -> Vec<&MonomialMembership> {
        self.entries.iter().filter(|e| !e.inside).collect()
    }
}

pub fn support_polytope_membership(f: &HomPoly, delta: &Polytope) -> Result<MembershipReport> {
    if f.degree() != 6 {
        return Err(CurveError::DegreeMismatch { expected: 6, found: f.degree() });
    }
    let mut monos = vec![WeightedMonomial::new(0, 0, 0, 2).expect("W^2 has degree 6")];
    for e in f.terms().keys().rev() {
        monos.push(WeightedMonomial::new(e[0], e[1], e[2], 0).expect("sextic monomial"));
    }
    let entries: Vec<MonomialMembership> = monos
        .into_iter()
        .map(|m| {
            let point = monomial_to_point(&m).expect("degree-6 monomials lie in M");
            MonomialMembership { inside: delta.contains(&point), monomial: m, point }
        })
        .collect();
    let all_inside = entries.iter().all(|e| e.inside);
    Ok(MembershipReport { entries, all_inside })
}
