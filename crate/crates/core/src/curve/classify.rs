//! Whole-curve classification: stated points, a rational grid search and the
//! conic-cubic intersection.

use super::resultant::{intersection_report, IntersectionReport};
use super::singularity::{classify_ade, find_rational_singular_points, SingularPointReport};
use super::{configuration_name, CurveError, ProjPoint, Result, TorusCurve};

#[derive(Clone, Debug)]
pub struct CurveClassification {
    /// Each supplied point with its report or the reason it was rejected.
    pub stated: Vec<(ProjPoint, std::result::Result<SingularPointReport, CurveError>)>,
    /// Singular stated points together with grid hits, sorted by point.
    pub singular_points: Vec<SingularPointReport>,
    pub intersection: IntersectionReport,
}

impl CurveClassification {
    /// Configuration of the rational singular points, e.g. `2A2+A11`.
    pub fn configuration(&self) -> String {
        let types: Vec<_> = self.singular_points.iter().map(|r| r.ade_type.clone()).collect();
        configuration_name(&types)
    }

    /// The six conic-cubic intersection points are distinct and transversal.
    pub fn six_transversal(&self) -> bool {
        self.intersection.transversal && self.intersection.distinct_points == 6
    }
}

/// Classify the supplied points and every singular point on the grid of
/// radius `grid` (see [`find_rational_singular_points`]).
pub fn classify_curve(c: &TorusCurve, stated: &[ProjPoint], grid: i64) -> Result<CurveClassification> {
    let intersection = intersection_report(&c.f2, &c.f3)?;
    let stated: Vec<_> = stated.iter().map(|p| (p.clone(), classify_ade(&c.f, p))).collect();
    let mut singular_points: Vec<SingularPointReport> =
        stated.iter().filter_map(|(_, r)| r.as_ref().ok().cloned()).collect();
    for p in find_rational_singular_points(&c.f, grid) {
        if !singular_points.iter().any(|r| r.point == p) {
            singular_points.push(classify_ade(&c.f, &p)?);
        }
    }
    singular_points.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(CurveClassification { stated, singular_points, intersection })
}
