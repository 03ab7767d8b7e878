//! Integral congruences `P S P^T = T` with `det P = ±1`.

use num_traits::{One, Signed, Zero};

use super::matrix::{smith_normal_form, IntMatrix};
use super::GramMatrix;
use crate::arith::{int, Int};

/// Vectors in the search box above this count make the box search skip.
const MAX_BOX: u64 = 2_000_000;
const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub p: IntMatrix,
    pub source: GramMatrix,
    pub target: GramMatrix,
}

impl CongruenceWitness {
    pub fn new(p: IntMatrix, source: GramMatrix, target: GramMatrix) -> Self {
        CongruenceWitness { p, source, target }
    }
}

/// Exact check of `P source P^T = target` and `|det P| = 1`.
pub fn verify_congruence(w: &CongruenceWitness) -> bool {
    let n = w.source.dim();
    if w.p.rows() != w.target.dim() || w.p.cols() != n || w.target.dim() != n {
        return false;
    }
    w.p.det().abs().is_one() && &w.source.matrix().congruent(&w.p) == w.target.matrix()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(CongruenceWitness),
    /// Rank, determinant or signature differ; no congruence exists.
    InvariantMismatch,
    /// The box was searched exhaustively without success.
    NotFound,
    /// The node budget ran out before the box was exhausted.
    BudgetExhausted,
    /// The box is too large to enumerate.
    TooLarge,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&CongruenceWitness> {
        match self {
            SearchOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

pub fn find_congruence(source: &GramMatrix, target: &GramMatrix, bound: u32) -> SearchOutcome {
    find_congruence_with_budget(source, target, bound, DEFAULT_BUDGET)
}

/// Row-by-row backtracking over vectors with entries in `[-bound, bound]`.
/// Smaller boxes are exhausted first, so small witnesses are preferred.
pub fn find_congruence_with_budget(source: &GramMatrix, target: &GramMatrix, bound: u32, budget: u64) -> SearchOutcome {
    let n = source.dim();
    if n != target.dim() || source.det() != target.det() || source.signature() != target.signature() {
        return SearchOutcome::InvariantMismatch;
    }
    if source == target {
        return SearchOutcome::Found(CongruenceWitness::new(IntMatrix::identity(n), source.clone(), target.clone()));
    }
    let (Some(s), Some(t)) = (source.to_i64_rows(), target.to_i64_rows()) else {
        return SearchOutcome::TooLarge;
    };
    let mut result = SearchOutcome::TooLarge;
    let mut remaining = budget;
    for b in 1..=bound as i64 {
        if (2 * b as u64 + 1).checked_pow(n as u32).is_none_or(|c| c > MAX_BOX) {
            break;
        }
        let mut search = BoxSearch::new(&s, &t, b, remaining);
        match search.run() {
            Some(rows) => {
                let p = IntMatrix::from_i64(&rows);
                let w = CongruenceWitness::new(p, source.clone(), target.clone());
                if verify_congruence(&w) {
                    return SearchOutcome::Found(w);
                }
                result = SearchOutcome::NotFound;
            }
            None if search.exhausted => return SearchOutcome::BudgetExhausted,
            None => result = SearchOutcome::NotFound,
        }
        remaining = search.budget;
    }
    result
}

struct Candidate {
    v: Vec<i64>,
    sv: Vec<i64>,
}

struct BoxSearch<'a> {
    t: &'a [Vec<i64>],
    by_norm: std::collections::HashMap<i64, Vec<Candidate>>,
    budget: u64,
    exhausted: bool,
}

impl<'a> BoxSearch<'a> {
    fn new(s: &[Vec<i64>], t: &'a [Vec<i64>], bound: i64, budget: u64) -> Self {
        let n = s.len();
        let wanted: std::collections::HashSet<i64> = (0..n).map(|i| t[i][i]).collect();
        let mut by_norm: std::collections::HashMap<i64, Vec<Candidate>> = Default::default();
        let mut v = vec![-bound; n];
        loop {
            if v.iter().any(|&x| x != 0) {
                let sv: Vec<i64> = (0..n).map(|i| (0..n).map(|j| s[i][j] * v[j]).sum()).collect();
                let norm: i64 = v.iter().zip(&sv).map(|(a, b)| a * b).sum();
                if wanted.contains(&norm) {
                    by_norm.entry(norm).or_default().push(Candidate { v: v.clone(), sv });
                }
            }
            // odometer increment
            let mut k = 0;
            while k < n && v[k] == bound {
                v[k] = -bound;
                k += 1;
            }
            if k == n {
                break;
            }
            v[k] += 1;
        }
        for list in by_norm.values_mut() {
            list.sort_by_key(|c| {
                let linf = c.v.iter().map(|x| x.abs()).max();
                let l1: i64 = c.v.iter().map(|x| x.abs()).sum();
                (linf, l1, c.v.clone())
            });
        }
        BoxSearch { t, by_norm, budget, exhausted: false }
    }

    fn run(&mut self) -> Option<Vec<Vec<i64>>> {
        let mut chosen: Vec<usize> = Vec::new();
        if self.extend(&mut chosen) {
            let n = self.t.len();
            Some((0..n).map(|i| self.by_norm[&self.t[i][i]][chosen[i]].v.clone()).collect())
        } else {
            None
        }
    }

    fn extend(&mut self, chosen: &mut Vec<usize>) -> bool {
        let i = chosen.len();
        let n = self.t.len();
        if i == n {
            return true;
        }
        let Some(list) = self.by_norm.get(&self.t[i][i]) else {
            return false;
        };
        let len = list.len();
        for idx in 0..len {
            if self.budget == 0 {
                self.exhausted = true;
                return false;
            }
            self.budget -= 1;
            let ok = {
                let list = &self.by_norm[&self.t[i][i]];
                let c = &list[idx];
                (0..i).all(|j| {
                    let prev = &self.by_norm[&self.t[j][j]][chosen[j]];
                    let dot: i64 = prev.v.iter().zip(&c.sv).map(|(a, b)| a * b).sum();
                    dot == self.t[j][i]
                })
            };
            if !ok {
                continue;
            }
            chosen.push(idx);
            if self.extend(chosen) {
                return true;
            }
            chosen.pop();
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

/// Look for `x, y` with `x^2 = y^2 = 0`, `x.y = 1` and split `g = U ⊕ W`.
///
/// Isotropic `x` with entries in `[-bound, bound]` are tried in order of size.
/// For an even lattice, `x` extends to a hyperbolic pair iff the functional
/// `G x` is primitive: pick `z` with `(Gx).z = 1` and set `y = z - (z^2 / 2) x`.
/// The returned witness has target `[[0,1],[1,0]] ⊕ W`. `None` means nothing
/// was found in the box, not that no summand exists.
pub fn detect_u_summand(g: &GramMatrix, bound: u32) -> Option<CongruenceWitness> {
    let n = g.dim();
    if n < 2 || !g.is_even() || g.is_degenerate() {
        return None;
    }
    let b = bound as i64;
    if (2 * b as u64 + 1).checked_pow(n as u32).is_none_or(|c| c > MAX_BOX) {
        return None;
    }
    let mut isotropic: Vec<Vec<i64>> = Vec::new();
    let mut v = vec![-b; n];
    loop {
        if v.iter().any(|&x| x != 0) {
            let x: Vec<Int> = v.iter().map(|&c| int(c)).collect();
            if g.pair(&x, &x).is_zero() {
                isotropic.push(v.clone());
            }
        }
        let mut k = 0;
        while k < n && v[k] == b {
            v[k] = -b;
            k += 1;
        }
        if k == n {
            break;
        }
        v[k] += 1;
    }
    isotropic.sort_by_key(|v| (v.iter().map(|x| x.abs()).max(), v.iter().map(|x| x.abs()).sum::<i64>()));
    for xv in isotropic {
        let x: Vec<Int> = xv.iter().map(|&c| int(c)).collect();
        let gx = g.matrix().mul_vec(&x);
        let row = IntMatrix::from_rows(vec![gx.clone()]);
        let snf = smith_normal_form(&row);
        if !snf.d[(0, 0)].is_one() {
            continue;
        }
        // u (gx) V e_0 = 1 with u = ±1
        let u = snf.u[(0, 0)].clone();
        let z: Vec<Int> = (0..n).map(|r| &snf.v[(r, 0)] * &u).collect();
        let half = g.pair(&z, &z) / int(2);
        let y: Vec<Int> = z.iter().zip(&x).map(|(zi, xi)| zi - &half * xi).collect();
        let gy = g.matrix().mul_vec(&y);
        let two_rows = IntMatrix::from_rows(vec![gx, gy]);
        let k = smith_normal_form(&two_rows);
        if k.rank() != 2 {
            continue;
        }
        let mut rows = vec![x, y];
        for c in 2..n {
            rows.push((0..n).map(|r| k.v[(r, c)].clone()).collect());
        }
        let p = IntMatrix::from_rows(rows);
        let target = GramMatrix::new(g.matrix().congruent(&p)).ok()?;
        let w = CongruenceWitness::new(p, g.clone(), target);
        if verify_congruence(&w) && has_u_block(&w.target) {
            return Some(w);
        }
    }
    None
}

fn has_u_block(t: &GramMatrix) -> bool {
    let n = t.dim();
    let e = |i, j| t.entry(i, j).clone();
    e(0, 0).is_zero() && e(1, 1).is_zero() && e(0, 1).is_one() && (2..n).all(|j| e(0, j).is_zero() && e(1, j).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_is_found() {
        let s = GramMatrix::diagonal(&[2, -2]);
        let t = GramMatrix::diagonal(&[-2, 2]);
        let out = find_congruence(&s, &t, 1);
        let w = out.witness().expect("swap witness");
        assert!(verify_congruence(w));
    }

    #[test]
    fn determinant_mismatch_short_circuits() {
        let s = GramMatrix::diagonal(&[-2, -2]);
        let t = GramMatrix::diagonal(&[-2, -4]);
        assert_eq!(find_congruence(&s, &t, 3), SearchOutcome::InvariantMismatch);
    }

    #[test]
    fn u_summand_of_u_plus_a1() {
        let g = GramMatrix::from_i64(&[vec![0, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]).unwrap();
        let w = detect_u_summand(&g, 1).expect("U summand");
        assert!(verify_congruence(&w));
        assert!(detect_u_summand(&GramMatrix::diagonal(&[-2, 2]), 3).is_none());
    }
}
