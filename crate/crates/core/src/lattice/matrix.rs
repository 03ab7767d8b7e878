//! Dense integer and rational matrices with the exact routines the lattice
//! code needs: determinant, rank, inverse, characteristic polynomial and the
//! Smith normal form with unimodular transforms.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, rat_int, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = int(v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|v| i64::try_from(v).ok()).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| self.row(i).iter().zip(v).fold(Int::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    /// `x^T self y`.
    pub fn bilinear(&self, x: &[Int], y: &[Int]) -> Int {
        x.iter().zip(self.mul_vec(y)).fold(Int::zero(), |acc, (a, b)| acc + a * b)
    }

    /// `P self P^T`.
    pub fn congruent(&self, p: &IntMatrix) -> IntMatrix {
        p.mul(self).mul(&p.transpose())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn block_diag(blocks: &[&IntMatrix]) -> IntMatrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|&i| cols.iter().map(|&j| self[(i, j)].clone()).collect()).collect())
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(rat_int).collect() }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return Int::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// col[dst] += k * col[src]
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }

    /// Characteristic polynomial `det(tI - A)` as integer coefficients, lowest
    /// degree first (Faddeev-LeVerrier; every division is exact).
    pub fn char_poly(&self) -> Vec<Int> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Int::zero(); n + 1];
        coeffs[n] = Int::one();
        let mut m = IntMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m);
            for i in 0..n {
                next[(i, i)] += &coeffs[n - k + 1];
            }
            m = next;
            let am = self.mul(&m);
            let tr = (0..n).fold(Int::zero(), |acc, i| acc + &am[(i, i)]);
            let (q, r) = (-tr).div_rem(&int(k as i64));
            debug_assert!(r.is_zero());
            coeffs[n - k] = q;
        }
        coeffs
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_string()).collect()).collect();
        let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
            writeln!(f, "[{}]", padded.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul_vec_int(&self, v: &[Int]) -> Vec<Rat> {
        (0..self.rows)
            .map(|i| (0..self.cols).fold(Rat::zero(), |acc, j| acc + &self[(i, j)] * rat_int(&v[j])))
            .collect()
    }

    /// `x^T self y` for integer vectors.
    pub fn bilinear_int(&self, x: &[Int], y: &[Int]) -> Rat {
        x.iter().zip(self.mul_vec_int(y)).fold(Rat::zero(), |acc, (a, b)| acc + rat_int(a) * b)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let piv = a[(rank, col)].clone();
            for r in rank + 1..a.rows {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &piv;
                for c in col..a.cols {
                    let v = &f * &a[(rank, c)];
                    a[(r, c)] -= v;
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix {
            rows: n,
            cols: n,
            data: (0..n * n).map(|k| if k / n == k % n { Rat::one() } else { Rat::zero() }).collect(),
        };
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let piv = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = &a[(col, c)] / &piv;
                inv[(col, c)] = &inv[(col, c)] / &piv;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let v = &f * &a[(col, c)];
                    a[(r, c)] -= v;
                    let w = &f * &inv[(col, c)];
                    inv[(r, c)] -= w;
                }
            }
        }
        Some(inv)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal, `d_i | d_{i+1}`, `d_i >= 0`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // Smallest non-zero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..m {
            if d[(i, t)].is_zero() {
                continue;
            }
            let q = d[(i, t)].div_floor(&d[(t, t)]);
            let k = -q;
            d.add_row_multiple(i, t, &k);
            u.add_row_multiple(i, t, &k);
            if !d[(i, t)].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..n {
            if d[(t, j)].is_zero() {
                continue;
            }
            let q = d[(t, j)].div_floor(&d[(t, t)]);
            let k = -q;
            d.add_col_multiple(j, t, &k);
            v.add_col_multiple(j, t, &k);
            if !d[(t, j)].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Enforce divisibility by the pivot on the trailing block.
        let piv = d[(t, t)].clone();
        let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&piv)));
        if let Some(i) = bad {
            let one = Int::one();
            d.add_row_multiple(t, i, &one);
            u.add_row_multiple(t, i, &one);
            continue;
        }
        if piv.is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    SmithForm { u, v, d }
}

/// Signature `(n_plus, n_minus)` of a symmetric integer matrix from the sign
/// changes of its characteristic polynomial. All roots are real, so
/// Descartes' rule is exact.
pub fn signature_char_poly(g: &IntMatrix) -> (usize, usize) {
    let coeffs = g.char_poly();
    let zero_mult = coeffs.iter().take_while(|c| c.is_zero()).count();
    let changes = |cs: &[Int]| {
        let signs: Vec<bool> = cs.iter().filter(|c| !c.is_zero()).map(Signed::is_positive).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let pos = changes(&coeffs);
    let flipped: Vec<Int> = coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect();
    let neg = changes(&flipped);
    debug_assert_eq!(pos + neg + zero_mult, g.rows());
    (pos, neg)
}

/// Signature by symmetric Gaussian elimination over the rationals (Sylvester's
/// law of inertia). Independent of [`signature_char_poly`].
pub fn signature_congruence(g: &IntMatrix) -> (usize, usize) {
    let n = g.rows();
    let mut a = g.to_rational();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        // Pick a non-zero diagonal pivot; if none, combine two indices.
        let piv = active.iter().copied().find(|&i| !a[(i, i)].is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                let pair = active
                    .iter()
                    .copied()
                    .find_map(|i| active.iter().copied().find(|&j| j != i && !a[(i, j)].is_zero()).map(|j| (i, j)));
                let Some((i, j)) = pair else { break };
                // e_i <- e_i + e_j makes the (i,i) entry 2 a_ij != 0.
                for k in 0..n {
                    let v = a[(j, k)].clone();
                    a[(i, k)] += v;
                }
                for k in 0..n {
                    let v = a[(k, j)].clone();
                    a[(k, i)] += v;
                }
                i
            }
        };
        let d = a[(p, p)].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&k| k != p);
        for &r in &active {
            if a[(r, p)].is_zero() {
                continue;
            }
            let f = &a[(r, p)] / &d;
            for &c in &active {
                let v = &f * &a[(p, c)];
                a[(r, c)] -= v;
            }
        }
        for &r in &active {
            a[(r, p)] = Rat::zero();
            a[(p, r)] = Rat::zero();
        }
    }
    (pos, neg)
}
