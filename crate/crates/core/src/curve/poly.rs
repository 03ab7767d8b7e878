//! Sparse polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{CurveError, Result};
use crate::arith::{fmt_rat, Rat};

/// A polynomial in `N` variables, stored as exponent vector to nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly<const N: usize> {
    terms: BTreeMap<[u32; N], Rat>,
}

pub type Poly2 = SparsePoly<2>;
pub type Poly3 = SparsePoly<3>;

impl<const N: usize> SparsePoly<N> {
    pub fn zero() -> Self {
        SparsePoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn monomial(e: [u32; N], c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn add_term(&mut self, e: [u32; N], c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<[u32; N], Rat> {
        &self.terms
    }

    pub fn coeff(&self, e: &[u32; N]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Lowest total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::constant(Rat::one());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                out.add_term(f, c * Rat::from_integer(e[i].into()));
            }
        }
        out
    }

    pub fn eval(&self, x: &[Rat; N]) -> Rat {
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(xi.clone(), k as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Terms of total degree at most `d`.
    pub fn truncate(&self, d: u32) -> Self {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Homogeneous part of total degree `d`.
    pub fn part(&self, d: u32) -> Self {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Substitute a polynomial in `M` variables for each variable.
    pub fn compose<const M: usize>(&self, images: &[SparsePoly<M>; N]) -> SparsePoly<M> {
        let mut powers: Vec<Vec<SparsePoly<M>>> =
            images.iter().map(|p| vec![SparsePoly::<M>::constant(Rat::one()), p.clone()]).collect();
        let mut out = SparsePoly::<M>::zero();
        for (e, c) in &self.terms {
            let mut t = SparsePoly::<M>::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = out + t;
        }
        out
    }
}

impl<const N: usize> Add for SparsePoly<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<const N: usize> Sub for SparsePoly<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const N: usize> Neg for SparsePoly<N> {
    type Output = Self;
    fn neg(self) -> Self {
        SparsePoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<const N: usize> Mul for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn mul(self, rhs: Self) -> SparsePoly<N> {
        let mut out = SparsePoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut e = [0; N];
                for i in 0..N {
                    e[i] = a[i] + b[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

const VARS: [&str; 3] = ["X", "Y", "Z"];

impl fmt::Display for SparsePoly<3> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest X power first, then Y: the usual lexicographic reading.
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono = monomial_string(e);
            let neg = c < &Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            let sign = match (first, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let body = match (abs.is_one(), mono.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => mono,
                (false, true) => fmt_rat(&abs),
                (false, false) => format!("{}*{}", fmt_rat(&abs), mono),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// `X^2*Y*Z^3`; empty for the constant monomial.
pub fn monomial_string(e: &[u32; 3]) -> String {
    let parts: Vec<String> = e
        .iter()
        .zip(VARS)
        .filter(|(k, _)| **k > 0)
        .map(|(k, v)| if *k == 1 { v.to_string() } else { format!("{v}^{k}") })
        .collect();
    parts.join("*")
}

/// A homogeneous polynomial in `X, Y, Z` of fixed degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoly {
    poly: Poly3,
    degree: u32,
}

impl HomPoly {
    pub fn new(poly: Poly3, degree: u32) -> Result<Self> {
        if let Some((e, _)) = poly.terms().iter().find(|(e, _)| e.iter().sum::<u32>() != degree) {
            return Err(CurveError::DegreeMismatch { expected: degree, found: e.iter().sum() });
        }
        Ok(HomPoly { poly, degree })
    }

    /// Degree read off from the terms; the zero polynomial needs [`HomPoly::new`].
    pub fn from_poly(poly: Poly3) -> Result<Self> {
        let degree = poly.total_degree().ok_or(CurveError::ZeroPolynomial)?;
        Self::new(poly, degree)
    }

    pub fn zero(degree: u32) -> Self {
        HomPoly { poly: Poly3::zero(), degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> &Poly3 {
        &self.poly
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 3], Rat> {
        self.poly.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn eval(&self, p: &[Rat; 3]) -> Rat {
        self.poly.eval(p)
    }

    pub fn gradient(&self) -> [Poly3; 3] {
        [0, 1, 2].map(|i| self.poly.derivative(i))
    }

    pub fn mul(&self, other: &HomPoly) -> HomPoly {
        HomPoly { poly: &self.poly * &other.poly, degree: self.degree + other.degree }
    }

    pub fn add(&self, other: &HomPoly) -> Result<HomPoly> {
        if self.degree != other.degree {
            return Err(CurveError::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(HomPoly { poly: self.poly.clone() + other.poly.clone(), degree: self.degree })
    }

    pub fn pow(&self, k: u32) -> HomPoly {
        HomPoly { poly: self.poly.pow(k), degree: self.degree * k }
    }

    /// `f(M (X, Y, Z)^T)`: substitute the rows of `m` as linear forms.
    pub fn linear_substitute(&self, m: &[[Rat; 3]; 3]) -> HomPoly {
        let images = m.clone().map(|row| {
            let mut p = Poly3::zero();
            for (i, c) in row.into_iter().enumerate() {
                let mut e = [0; 3];
                e[i] = 1;
                p.add_term(e, c);
            }
            p
        });
        HomPoly { poly: self.poly.compose(&images), degree: self.degree }
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// `f2^3 + f3^2`.
pub fn expand(f2: &HomPoly, f3: &HomPoly) -> Result<HomPoly> {
    if f2.degree() != 2 {
        return Err(CurveError::DegreeMismatch { expected: 2, found: f2.degree() });
    }
    if f3.degree() != 3 {
        return Err(CurveError::DegreeMismatch { expected: 3, found: f3.degree() });
    }
    f2.pow(3).add(&f3.pow(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn xyz(e: [u32; 3], c: i64) -> Poly3 {
        Poly3::monomial(e, rat(c, 1))
    }

    #[test]
    fn expansion_of_square() {
        let f3 = HomPoly::new(xyz([0, 3, 0], 1), 3).unwrap();
        let f = expand(&HomPoly::zero(2), &f3).unwrap();
        assert_eq!(f.terms().len(), 1);
        assert_eq!(f.poly().coeff(&[0, 6, 0]), rat(1, 1));
    }

    #[test]
    fn degree_checked() {
        let f2 = HomPoly::new(xyz([0, 1, 1], 1), 2).unwrap();
        assert!(matches!(expand(&f2, &f2), Err(CurveError::DegreeMismatch { expected: 3, found: 2 })));
        assert!(HomPoly::new(xyz([0, 1, 0], 1) + xyz([0, 1, 1], 1), 2).is_err());
    }

    #[test]
    fn display_round() {
        let p = xyz([2, 0, 0], -1) + xyz([0, 1, 1], 1) + Poly3::monomial([0, 0, 2], rat(-3, 2));
        assert_eq!(p.to_string(), "-X^2 + Y*Z - 3/2*Z^2");
    }

    #[test]
    fn compose_shifts() {
        // (u + 1)^2 = u^2 + 2u + 1
        let p = SparsePoly::<1>::monomial([2], rat(1, 1));
        let img = [SparsePoly::<1>::var(0) + SparsePoly::<1>::constant(rat(1, 1))];
        let q = p.compose(&img);
        assert_eq!(q.coeff(&[1]), rat(2, 1));
        assert_eq!(q.coeff(&[0]), rat(1, 1));
    }
}
