//! Local analysis at rational points: singularity test, Milnor number by
//! truncated jets, Hessian corank and ADE type.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::{HomPoly, Poly2};
use super::{CurveError, ProjPoint, Result};
use crate::arith::{rat, Rat};

/// Hard cap for the jet degree in [`milnor_number`].
pub const DEFAULT_CAP: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(u32),
    E6,
    Unclassified { milnor: u32, corank: u32 },
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A{n}"),
            AdeType::E6 => write!(f, "E6"),
            AdeType::Unclassified { milnor, corank } => write!(f, "unclassified(mu={milnor},corank={corank})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPointReport {
    pub point: ProjPoint,
    pub milnor: u32,
    pub hessian_corank: u32,
    pub ade_type: AdeType,
}

/// `f(p) = 0` and all three partials vanish at `p`.
pub fn verify_singular(f: &HomPoly, p: &ProjPoint) -> bool {
    let c = p.coords();
    f.eval(c).is_zero() && f.gradient().iter().all(|g| g.eval(c).is_zero())
}

/// Dehomogenize in the chart of `p`'s last nonzero coordinate and move `p`
/// to the origin.
pub fn local_germ(f: &HomPoly, p: &ProjPoint) -> Poly2 {
    let k = p.chart();
    let c = p.coords();
    let mut free = (0..3).filter(|&i| i != k);
    let (i, j) = (free.next().expect("two free"), free.next().expect("two free"));
    let mut images: [Poly2; 3] = Default::default();
    images[k] = Poly2::constant(Rat::one());
    images[i] = Poly2::var(0) + Poly2::constant(c[i].clone());
    images[j] = Poly2::var(1) + Poly2::constant(c[j].clone());
    f.poly().compose(&images)
}

fn check_singular_germ(g: &Poly2) -> Result<()> {
    let zero = [Rat::zero(), Rat::zero()];
    if !g.eval(&zero).is_zero() {
        return Err(CurveError::NotOnCurve);
    }
    if !g.derivative(0).eval(&zero).is_zero() || !g.derivative(1).eval(&zero).is_zero() {
        return Err(CurveError::NotSingular);
    }
    Ok(())
}

/// Milnor number of `f` at `p`.
///
/// `mu_N = dim O / (J + m^{N+1})` is computed by linear algebra on jets of
/// degree at most `N`, starting from `degree_bound`. When `mu_N = mu_{N+1}`,
/// Nakayama's lemma gives `m^{N+1} ⊆ J` and `mu = mu_N`.
pub fn milnor_number(f: &HomPoly, p: &ProjPoint, degree_bound: u32) -> Result<u32> {
    milnor_number_capped(f, p, degree_bound, DEFAULT_CAP)
}

pub fn milnor_number_capped(f: &HomPoly, p: &ProjPoint, degree_bound: u32, cap: u32) -> Result<u32> {
    let g = local_germ(f, p);
    check_singular_germ(&g)?;
    germ_milnor(&g, degree_bound, cap)
}

/// Milnor number at the origin of an affine germ with a singular point there.
pub fn germ_milnor(g: &Poly2, degree_bound: u32, cap: u32) -> Result<u32> {
    let jac = [g.derivative(0), g.derivative(1)];
    let mut n = degree_bound.max(1);
    while n < cap {
        let a = truncated_colength(&jac, n);
        let b = truncated_colength(&jac, n + 1);
        if a == b {
            return Ok(a as u32);
        }
        // An ideal of colength mu contains m^mu, so mu_N stabilizes by N = mu.
        n = (n + 1).max(b as u32);
    }
    Err(CurveError::NotIsolated { cap })
}

/// `dim O / (J + m^{n+1})`.
fn truncated_colength(jac: &[Poly2; 2], n: u32) -> usize {
    let monos: Vec<[u32; 2]> = (0..=n).flat_map(|d| (0..=d).map(move |a| [a, d - a])).collect();
    let index: HashMap<[u32; 2], usize> = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut echelon = Echelon::default();
    for h in jac {
        let Some(ord) = h.order() else { continue };
        if ord > n {
            continue;
        }
        let h = h.truncate(n);
        for m in monos.iter().filter(|m| m[0] + m[1] + ord <= n) {
            let mut row: Vec<(usize, Rat)> = h
                .terms()
                .iter()
                .filter(|(e, _)| e[0] + e[1] + m[0] + m[1] <= n)
                .map(|(e, c)| (index[&[e[0] + m[0], e[1] + m[1]]], c.clone()))
                .collect();
            row.sort_by_key(|(i, _)| *i);
            echelon.insert(row);
        }
    }
    monos.len() - echelon.rank()
}

/// Sparse rows kept in semi-echelon form keyed by leading column.
#[derive(Default)]
struct Echelon {
    rows: HashMap<usize, Vec<(usize, Rat)>>,
}

impl Echelon {
    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut row: Vec<(usize, Rat)>) {
        while let Some((lead, c)) = row.first().cloned() {
            match self.rows.get(&lead) {
                None => {
                    let inv = Rat::one() / c;
                    let normalized = row.into_iter().map(|(i, v)| (i, v * &inv)).collect();
                    self.rows.insert(lead, normalized);
                    return;
                }
                Some(pivot) => row = axpy(&row, pivot, &c),
            }
        }
    }
}

/// `row - c * pivot` on sorted sparse vectors.
fn axpy(row: &[(usize, Rat)], pivot: &[(usize, Rat)], c: &Rat) -> Vec<(usize, Rat)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let ia = row.get(a).map_or(usize::MAX, |x| x.0);
        let ib = pivot.get(b).map_or(usize::MAX, |x| x.0);
        if ia < ib {
            out.push(row[a].clone());
            a += 1;
        } else if ib < ia {
            out.push((ib, -(&pivot[b].1 * c)));
            b += 1;
        } else {
            let v = &row[a].1 - &pivot[b].1 * c;
            if !v.is_zero() {
                out.push((ia, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

/// Corank of the 2x2 Hessian of a germ at the origin.
pub fn hessian_corank(g: &Poly2) -> u32 {
    let two = rat(2, 1);
    let a = g.coeff(&[2, 0]) * &two;
    let b = g.coeff(&[1, 1]);
    let c = g.coeff(&[0, 2]) * &two;
    if a.is_zero() && b.is_zero() && c.is_zero() {
        2
    } else if (&a * &c - &b * &b).is_zero() {
        1
    } else {
        0
    }
}

/// Whether a binary cubic `a u^3 + 3b u^2 v + 3c u v^2 + d v^3` is the cube of
/// a linear form: its Hessian covariant vanishes.
fn is_perfect_cube(cubic: &Poly2) -> bool {
    if cubic.is_zero() {
        return false;
    }
    let three = rat(3, 1);
    let a = cubic.coeff(&[3, 0]);
    let b = cubic.coeff(&[2, 1]) / &three;
    let c = cubic.coeff(&[1, 2]) / &three;
    let d = cubic.coeff(&[0, 3]);
    (&b * &b - &a * &c).is_zero() && (&b * &c - &a * &d).is_zero() && (&c * &c - &b * &d).is_zero()
}

/// Type of a germ from `(mu, corank)` and, in corank 2, the cubic part.
pub fn classify_germ(g: &Poly2, milnor: u32) -> AdeType {
    let corank = hessian_corank(g);
    match corank {
        0 | 1 => AdeType::A(milnor),
        _ if milnor == 6 && is_perfect_cube(&g.part(3)) => AdeType::E6,
        _ => AdeType::Unclassified { milnor, corank },
    }
}

pub fn classify_ade(f: &HomPoly, p: &ProjPoint) -> Result<SingularPointReport> {
    let g = local_germ(f, p);
    check_singular_germ(&g)?;
    let milnor = germ_milnor(&g, 2, DEFAULT_CAP)?;
    Ok(SingularPointReport {
        point: p.clone(),
        milnor,
        hessian_corank: hessian_corank(&g),
        ade_type: classify_germ(&g, milnor),
    })
}

/// Rationals `p/q` with `|p| <= r` and `1 <= q <= r`, without repeats.
fn grid(r: i64) -> Vec<Rat> {
    let mut v: Vec<Rat> = (1..=r).flat_map(|q| (-r..=r).map(move |p| rat(p, q))).collect();
    v.sort();
    v.dedup();
    v
}

/// All singular points with coordinates in the grid `p/q`, `|p|, q <= r`,
/// in every chart.
pub fn find_rational_singular_points(f: &HomPoly, r: i64) -> Vec<ProjPoint> {
    let grad = f.gradient();
    let vals = grid(r);
    let (zero, one) = (Rat::zero(), Rat::one());
    let mut candidates: Vec<[Rat; 3]> = vec![[one.clone(), zero.clone(), zero.clone()]];
    candidates.extend(vals.iter().map(|x| [x.clone(), one.clone(), zero.clone()]));
    for x in &vals {
        for y in &vals {
            candidates.push([x.clone(), y.clone(), one.clone()]);
        }
    }
    candidates
        .into_iter()
        .filter(|c| grad.iter().all(|g| g.eval(c).is_zero()) && f.eval(c).is_zero())
        .map(|c| ProjPoint::new(c).expect("nonzero"))
        .collect()
}
