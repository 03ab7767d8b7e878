//! Weighted-degree monomials and the lattice M they span.
//!
//! A monomial `X^a Y^b Z^c W^d` of weighted degree 6 in weights (1,1,1,3)
//! corresponds to the vector `(a-1, b-1, c-1, d-1)` of
//! `M = { v in Z^4 : v0 + v1 + v2 + 3 v3 = 0 mod 6 }`, and that vector is
//! written in the basis `e1 = (1,0,-1,0)`, `e2 = (0,1,-1,0)`, `e3 = (0,0,-3,1)`.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{int, Int};
use crate::polytope::LatticePoint;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonomialError {
    #[error("{0:?} is not in the lattice (congruence fails or coordinates non-integral)")]
    NotInLattice([i64; 4]),
    #[error("point {0} corresponds to a Laurent monomial with a negative exponent")]
    NegativeExponent(String),
    #[error("monomial has weighted degree {got}, expected {expected}")]
    WrongDegree { got: i64, expected: i64 },
    #[error("cannot parse monomial {input:?} at column {column}: {reason}")]
    Parse { input: String, column: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, MonomialError>;

/// Weights and target degree; only (1,1,1,3; 6) is wired to a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub weights: [i64; 4],
    pub degree: i64,
    pub basis: [[i64; 4]; 3],
}

impl WeightSystem {
    pub fn p1113() -> Self {
        WeightSystem { weights: [1, 1, 1, 3], degree: 6, basis: [[1, 0, -1, 0], [0, 1, -1, 0], [0, 0, -3, 1]] }
    }

    pub fn in_lattice(&self, raw: &[i64; 4]) -> bool {
        let s: i64 = raw.iter().zip(self.weights.iter()).map(|(a, w)| a * w).sum();
        s.rem_euclid(self.degree) == 0
    }

    /// Solve `raw = x e1 + y e2 + z e3` exactly. `None` when inconsistent or non-integral.
    pub fn coordinates(&self, raw: &[i64; 4]) -> Option<[i64; 3]> {
        // Exact elimination on the 4x3 system [basis^T | raw] over the rationals,
        // carried as integer rows with a common denominator per row.
        let mut rows: Vec<[i128; 4]> = (0..4)
            .map(|r| [self.basis[0][r] as i128, self.basis[1][r] as i128, self.basis[2][r] as i128, raw[r] as i128])
            .collect();
        let mut pivot_row = 0;
        let mut pivots = [usize::MAX; 3];
        for col in 0..3 {
            let Some(pr) = (pivot_row..4).find(|&r| rows[r][col] != 0) else {
                return None;
            };
            rows.swap(pivot_row, pr);
            for r in 0..4 {
                if r != pivot_row && rows[r][col] != 0 {
                    let (a, b) = (rows[pivot_row][col], rows[r][col]);
                    for k in 0..4 {
                        rows[r][k] = rows[r][k] * a - rows[pivot_row][k] * b;
                    }
                }
            }
            pivots[col] = pivot_row;
            pivot_row += 1;
        }
        if rows[3..].iter().any(|r| r[3] != 0) {
            return None;
        }
        let mut out = [0i64; 3];
        for col in 0..3 {
            let r = rows[pivots[col]];
            if r[3] % r[col] != 0 {
                return None;
            }
            out[col] = (r[3] / r[col]) as i64;
        }
        Some(out)
    }

    pub fn combine(&self, c: &[i64; 3]) -> [i64; 4] {
        let mut out = [0i64; 4];
        for (k, b) in self.basis.iter().enumerate() {
            for r in 0..4 {
                out[r] += c[k] * b[r];
            }
        }
        out
    }
}

/// `X^a Y^b Z^c W^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedMonomial {
    pub exponents: [u32; 4],
}

impl WeightedMonomial {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Result<Self> {
        let m = WeightedMonomial { exponents: [a, b, c, d] };
        let deg = m.weighted_degree(&WeightSystem::p1113());
        if deg != 6 {
            return Err(MonomialError::WrongDegree { got: deg, expected: 6 });
        }
        Ok(m)
    }

    pub fn weighted_degree(&self, ws: &WeightSystem) -> i64 {
        self.exponents.iter().zip(ws.weights.iter()).map(|(&e, w)| e as i64 * w).sum()
    }

    /// Parse `X^2*Z^4`, `Y^3Z^3`, `W^2`, `1` ...
    pub fn parse(s: &str) -> Result<Self> {
        let err = |column: usize, reason: &str| MonomialError::Parse {
            input: s.to_string(),
            column,
            reason: reason.to_string(),
        };
        let mut exps = [0u32; 4];
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        let mut seen_any = false;
        while i < chars.len() {
            let ch = chars[i];
            match ch {
                ' ' | '*' => {
                    i += 1;
                }
                'X' | 'Y' | 'Z' | 'W' => {
                    let idx = "XYZW".find(ch).unwrap();
                    i += 1;
                    let mut e = 1u32;
                    if i < chars.len() && chars[i] == '^' {
                        i += 1;
                        let start = i;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                        if start == i {
                            return Err(err(start + 1, "expected exponent after '^'"));
                        }
                        let txt: String = chars[start..i].iter().collect();
                        e = txt.parse().map_err(|_| err(start + 1, "exponent too large"))?;
                    }
                    exps[idx] += e;
                    seen_any = true;
                }
                '1' if !seen_any => {
                    i += 1;
                    seen_any = true;
                }
                _ => return Err(err(i + 1, &format!("unexpected character {ch:?}"))),
            }
        }
        if !seen_any {
            return Err(err(1, "empty monomial"));
        }
        let m = WeightedMonomial { exponents: exps };
        let deg = m.weighted_degree(&WeightSystem::p1113());
        if deg != 6 {
            return Err(MonomialError::WrongDegree { got: deg, expected: 6 });
        }
        Ok(m)
    }

    /// All monomials of weighted degree 6 in weights (1,1,1,3).
    pub fn all_degree_six() -> Vec<WeightedMonomial> {
        let mut out = Vec::new();
        for d in 0..=2u32 {
            let rest = 6 - 3 * d;
            for a in 0..=rest {
                for b in 0..=rest - a {
                    out.push(WeightedMonomial { exponents: [a, b, rest - a - b, d] });
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for WeightedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, v) in self.exponents.iter().zip(["X", "Y", "Z", "W"]) {
            match e {
                0 => {}
                1 => parts.push(v.to_string()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A vector of M in raw Z^4 coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MLatticeVector {
    pub raw: [i64; 4],
}

impl MLatticeVector {
    pub fn new(raw: [i64; 4]) -> Result<Self> {
        if !WeightSystem::p1113().in_lattice(&raw) {
            return Err(MonomialError::NotInLattice(raw));
        }
        Ok(MLatticeVector { raw })
    }
}

/// Lattice point (basis coordinates) of a weighted-degree-6 monomial.
pub fn monomial_to_point(m: &WeightedMonomial) -> Result<LatticePoint> {
    let ws = WeightSystem::p1113();
    let deg = m.weighted_degree(&ws);
    if deg != ws.degree {
        return Err(MonomialError::WrongDegree { got: deg, expected: ws.degree });
    }
    let raw = m.exponents.map(|e| e as i64 - 1);
    let v = MLatticeVector::new(raw)?;
    raw_to_point(&v)
}

pub fn raw_to_point(v: &MLatticeVector) -> Result<LatticePoint> {
    let c = WeightSystem::p1113().coordinates(&v.raw).ok_or(MonomialError::NotInLattice(v.raw))?;
    Ok(LatticePoint::new(c[0], c[1], c[2]))
}

/// Raw M-vector of a lattice point given in basis coordinates.
pub fn point_to_raw(p: &LatticePoint) -> MLatticeVector {
    let c = p.to_i64();
    MLatticeVector { raw: WeightSystem::p1113().combine(&c) }
}

/// Inverse of [`monomial_to_point`].
pub fn point_to_monomial(p: &LatticePoint) -> Result<WeightedMonomial> {
    let raw = point_to_raw(p).raw;
    let exps: Vec<Int> = raw.iter().map(|&a| int(a + 1)).collect();
    if exps.iter().any(|e| e.is_negative()) {
        return Err(MonomialError::NegativeExponent(p.to_string()));
    }
    let e = |i: usize| u32::try_from(&exps[i]).expect("small exponent");
    let m = WeightedMonomial { exponents: [e(0), e(1), e(2), e(3)] };
    debug_assert!(!exps.iter().all(Zero::is_zero));
    Ok(m)
}
