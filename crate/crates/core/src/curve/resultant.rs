//! Intersection of the conic and cubic of a torus curve via resultants.
//!
//! Eliminating one coordinate from `f2` and `f3` leaves a binary sextic whose
//! roots are the projections of the intersection points, counted with
//! intersection multiplicity. The sextic is recovered by evaluating the
//! Sylvester determinant at seven points and interpolating.

use num_traits::{One, Zero};

use super::poly::{HomPoly, Poly3};
use super::{CurveError, Result};
use crate::arith::{rat, Rat};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Rat>);

impl UniPoly {
    fn trim(mut v: Vec<Rat>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        UniPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::trim(
            self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer((i as i64).into())).collect(),
        )
    }

    fn rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("nonzero divisor");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let q = &r[k] / &lead;
            for i in 0..=dd {
                let t = &d.0[i] * &q;
                r[k - dd + i] -= t;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UniPoly::trim(r)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Number of distinct complex roots.
    pub fn distinct_roots(&self) -> usize {
        match self.degree() {
            None | Some(0) => 0,
            Some(d) => d - self.gcd(&self.derivative()).degree().unwrap_or(0),
        }
    }

    /// Interpolate through `(x_i, y_i)` by Newton's divided differences.
    pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Self {
        let n = xs.len();
        let mut coef = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        // Expand the Newton form into the monomial basis.
        let mut out = vec![Rat::zero(); n];
        for i in (0..n).rev() {
            // out = out * (x - xs[i]) + coef[i]
            let mut next = vec![Rat::zero(); n];
            for k in 0..n {
                if out[k].is_zero() {
                    continue;
                }
                if k + 1 < n {
                    next[k + 1] += &out[k];
                }
                next[k] -= &out[k] * &xs[i];
            }
            next[0] += &coef[i];
            out = next;
        }
        UniPoly::trim(out)
    }
}

fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return Rat::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let t = &m[c][k] * &f;
                m[r][k] -= t;
            }
        }
    }
    d
}

/// Coefficients in `Z` (formal degree `deg`) after setting `X = x, Y = 1`.
fn z_coefficients(f: &Poly3, deg: u32, x: &Rat) -> Vec<Rat> {
    let mut c = vec![Rat::zero(); deg as usize + 1];
    for (e, v) in f.terms() {
        c[e[2] as usize] += v * num_traits::pow(x.clone(), e[0] as usize);
    }
    c
}

/// `Res_Z(f2, f3)` as the dehomogenized sextic `r(x) = R(x, 1)`; a degree
/// drop means roots at `Y = 0`.
fn resultant_z(f2: &HomPoly, f3: &HomPoly) -> UniPoly {
    let (m, n) = (f2.degree() as usize, f3.degree() as usize);
    let xs: Vec<Rat> = (0..=(m * n) as i64).map(|i| rat(i, 1)).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|x| {
            let a = z_coefficients(f2.poly(), m as u32, x);
            let b = z_coefficients(f3.poly(), n as u32, x);
            det(sylvester(&a, &b))
        })
        .collect();
    UniPoly::interpolate(&xs, &ys)
}

/// Sylvester matrix of two polynomials given lowest degree first.
fn sylvester(a: &[Rat], b: &[Rat]) -> Vec<Vec<Rat>> {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![Rat::zero(); size];
        for (i, c) in a.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![Rat::zero(); size];
        for (i, c) in b.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    rows
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    /// Rows of the coordinate change applied before eliminating `Z`.
    pub change: [[i64; 3]; 3],
    pub resultant: UniPoly,
    /// Distinct roots of the binary sextic, including `Y = 0`.
    pub distinct: usize,
    /// The binary sextic has six simple roots.
    pub squarefree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    /// Largest distinct-root count over the projections tried.
    pub distinct_points: usize,
    /// Some projection gave a squarefree sextic: six transversal points.
    pub transversal: bool,
    pub projections: Vec<Projection>,
}

/// Coordinate changes: eliminate `Z`, `Y`, `X`, then a few skew projections.
const CHANGES: [[[i64; 3]; 3]; 6] = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    [[1, 0, 0], [0, 1, 0], [1, 1, 1]],
    [[1, 0, 0], [0, 1, 0], [2, -3, 1]],
    [[1, 0, 0], [0, 1, 0], [-1, 5, 3]],
];

fn substitute(f: &HomPoly, m: &[[i64; 3]; 3]) -> HomPoly {
    // Columns of m^T: old coordinate i becomes sum_j m[j][i] * new_j.
    let t = std::array::from_fn(|i| std::array::from_fn(|j| rat(m[j][i], 1)));
    f.linear_substitute(&t)
}

pub fn intersection_report(f2: &HomPoly, f3: &HomPoly) -> Result<IntersectionReport> {
    let expected = (f2.degree() * f3.degree()) as usize;
    let mut projections = Vec::new();
    for change in CHANGES {
        let (g2, g3) = (substitute(f2, &change), substitute(f3, &change));
        let pole = [Rat::zero(), Rat::zero(), Rat::one()];
        if g2.eval(&pole).is_zero() && g3.eval(&pole).is_zero() {
            continue;
        }
        let r = resultant_z(&g2, &g3);
        if r.is_zero() {
            return Err(CurveError::CommonComponent);
        }
        let d = r.degree().expect("nonzero");
        let at_infinity = expected - d;
        let distinct = r.distinct_roots() + usize::from(at_infinity > 0);
        let squarefree = at_infinity <= 1 && r.distinct_roots() == d;
        projections.push(Projection { change, resultant: r, distinct, squarefree });
    }
    if projections.is_empty() {
        // Every centre lay on both curves; all six centres cannot, unless
        // the curves share a component.
        return Err(CurveError::CommonComponent);
    }
    Ok(IntersectionReport {
        distinct_points: projections.iter().map(|p| p.distinct).max().unwrap_or(0),
        transversal: projections.iter().any(|p| p.squarefree),
        projections,
    })
}

/// Number of distinct intersection points of the conic and the cubic.
pub fn transversal_intersection_count(f2: &HomPoly, f3: &HomPoly) -> Result<usize> {
    Ok(intersection_report(f2, f3)?.distinct_points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UniPoly {
        UniPoly::trim(v.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = up(&[3, 0, -2, 1]);
        let xs: Vec<Rat> = (0..5).map(|i| rat(i, 1)).collect();
        let ys: Vec<Rat> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(&xs, &ys), p);
    }

    #[test]
    fn distinct_roots_of_square() {
        // (x - 1)^2 (x + 2)
        let p = up(&[2, -3, 0, 1]);
        assert_eq!(p.distinct_roots(), 2);
    }
}
