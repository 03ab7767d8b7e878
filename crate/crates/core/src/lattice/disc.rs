//! Discriminant groups `Z^n / G Z^n` and their finite quadratic forms.

use num_traits::{One, Signed, Zero};

use super::matrix::{smith_normal_form, IntMatrix, RatMatrix};
use super::{GramMatrix, LatticeError, Result};
use crate::arith::{int, rat, rat_int, rat_mod, Int, Rat};

/// The discriminant form of an even non-degenerate lattice.
///
/// An element is stored as an integer vector `x` standing for the dual vector
/// `G^{-1} x`; then `q(x) = x^T G^{-1} x mod 2` and `b(x, y) = x^T G^{-1} y mod 1`.
#[derive(Clone, Debug)]
pub struct DiscriminantForm {
    /// Elementary divisors greater than 1, in Smith order.
    pub orders: Vec<Int>,
    /// One representative per cyclic factor.
    pub generators: Vec<Vec<Int>>,
    /// `q(g_i)` reduced into `[0, 2)`.
    pub q: Vec<Rat>,
    /// `b(g_i, g_j)` reduced into `[0, 1)`.
    pub b: Vec<Vec<Rat>>,
    gram_inv: RatMatrix,
    u: IntMatrix,
    diag: Vec<Int>,
}

impl DiscriminantForm {
    pub fn of(g: &GramMatrix) -> Result<Self> {
        let n = g.dim();
        let gram_inv = g.matrix().to_rational().inverse().ok_or(LatticeError::Degenerate)?;
        let snf = smith_normal_form(g.matrix());
        let diag = snf.diagonal();
        let u_inv = snf.u.to_rational().inverse().expect("unimodular");
        let mut orders = Vec::new();
        let mut generators = Vec::new();
        for (i, d) in diag.iter().enumerate() {
            if d > &Int::one() {
                orders.push(d.clone());
                generators.push((0..n).map(|r| u_inv[(r, i)].to_integer()).collect());
            }
        }
        let mut form = DiscriminantForm { orders, generators, q: Vec::new(), b: Vec::new(), gram_inv, u: snf.u, diag };
        form.q = form.generators.iter().map(|x| form.q_of(x)).collect();
        form.b = form.generators.iter().map(|x| form.generators.iter().map(|y| form.b_of(x, y)).collect()).collect();
        Ok(form)
    }

    pub fn order(&self) -> Int {
        self.orders.iter().fold(Int::one(), |acc, d| acc * d)
    }

    pub fn dim(&self) -> usize {
        self.u.rows()
    }

    pub fn q_of(&self, x: &[Int]) -> Rat {
        rat_mod(&self.gram_inv.bilinear_int(x, x), &rat(2, 1))
    }

    pub fn b_of(&self, x: &[Int], y: &[Int]) -> Rat {
        rat_mod(&self.gram_inv.bilinear_int(x, y), &Rat::one())
    }

    /// Canonical coordinates of the class of `x`.
    pub fn key(&self, x: &[Int]) -> Vec<Int> {
        let ux = self.u.mul_vec(x);
        ux.iter()
            .zip(&self.diag)
            .filter(|(_, d)| *d > &Int::one())
            .map(|(v, d)| num_integer::Integer::mod_floor(v, d))
            .collect()
    }

    pub fn is_zero(&self, x: &[Int]) -> bool {
        self.key(x).iter().all(Zero::is_zero)
    }

    /// All group elements `sum c_i g_i`, `0 <= c_i < d_i`.
    pub fn elements(&self) -> Vec<Vec<Int>> {
        let mut out = vec![vec![Int::zero(); self.dim()]];
        for (gen, d) in self.generators.iter().zip(&self.orders) {
            let d = i64::try_from(d).expect("discriminant group too large to enumerate");
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for base in &out {
                for c in 0..d {
                    next.push(add_scaled(base, gen, &int(c)));
                }
            }
            out = next;
        }
        out
    }

    /// `-q`: the form on the same group with negated values.
    pub fn negated_q(&self) -> Vec<Rat> {
        self.q.iter().map(|v| rat_mod(&-v, &rat(2, 1))).collect()
    }
}

fn add_scaled(a: &[Int], b: &[Int], k: &Int) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x + y * k).collect()
}

/// Search for a group isomorphism `phi: A -> B` with `q_B(phi x) = sign * q_A(x)`.
/// `sign = -1` asks for an anti-isometry. Returns the images of `A`'s generators.
pub fn disc_forms_isomorphic(a: &DiscriminantForm, b: &DiscriminantForm, sign: i64) -> Option<Vec<Vec<Int>>> {
    assert!(sign == 1 || sign == -1);
    if a.order() != b.order() {
        return None;
    }
    let two = rat(2, 1);
    let s = rat(sign, 1);
    let targets_q: Vec<Rat> = a.q.iter().map(|v| rat_mod(&(v * &s), &two)).collect();
    let elems: Vec<(Vec<Int>, Rat)> = b
        .elements()
        .into_iter()
        .map(|e| {
            let q = b.q_of(&e);
            (e, q)
        })
        .collect();
    let mut chosen: Vec<Vec<Int>> = Vec::new();
    if search(a, b, &elems, &targets_q, &s, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn search(
    a: &DiscriminantForm,
    b: &DiscriminantForm,
    elems: &[(Vec<Int>, Rat)],
    targets_q: &[Rat],
    s: &Rat,
    chosen: &mut Vec<Vec<Int>>,
) -> bool {
    let i = chosen.len();
    if i == a.generators.len() {
        return is_injective(a, b, chosen);
    }
    let d = &a.orders[i];
    for (e, q) in elems {
        if q != &targets_q[i] {
            continue;
        }
        let de: Vec<Int> = e.iter().map(|v| v * d).collect();
        if !b.is_zero(&de) {
            continue;
        }
        let compatible =
            chosen.iter().enumerate().all(|(j, c)| b.b_of(e, c) == rat_mod(&(&a.b[i][j] * s), &Rat::one()));
        if !compatible {
            continue;
        }
        chosen.push(e.clone());
        if search(a, b, elems, targets_q, s, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn is_injective(a: &DiscriminantForm, b: &DiscriminantForm, images: &[Vec<Int>]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    let mut combos: Vec<Vec<Int>> = vec![vec![Int::zero(); b.dim()]];
    for (img, d) in images.iter().zip(&a.orders) {
        let d = i64::try_from(d).expect("small group");
        let mut next = Vec::new();
        for base in &combos {
            for c in 0..d {
                next.push(add_scaled(base, img, &int(c)));
            }
        }
        combos = next;
    }
    combos.iter().all(|v| seen.insert(b.key(v)))
}

/// Check `q(x + y) = q(x) + q(y) + 2 b(x, y)` on all pairs of generators.
pub fn is_consistent(form: &DiscriminantForm) -> bool {
    let two = rat(2, 1);
    form.generators.iter().enumerate().all(|(i, x)| {
        form.generators.iter().enumerate().all(|(j, y)| {
            let sum: Vec<Int> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            let lhs = form.q_of(&sum);
            let raw = &form.q[i] + &form.q[j] + rat_int(&int(2)) * &form.b[i][j];
            lhs == rat_mod(&raw, &two)
        })
    }) && form.q.iter().all(|v| !v.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_two_against_angle_minus_two() {
        let a = DiscriminantForm::of(&GramMatrix::diagonal(&[2])).unwrap();
        let b = DiscriminantForm::of(&GramMatrix::diagonal(&[-2])).unwrap();
        assert_eq!(a.q, vec![rat(1, 2)]);
        assert_eq!(b.q, vec![rat(3, 2)]);
        assert!(disc_forms_isomorphic(&a, &b, 1).is_none());
        assert!(disc_forms_isomorphic(&a, &b, -1).is_some());
    }

    #[test]
    fn a2_has_order_three() {
        let g = GramMatrix::from_i64(&[vec![-2, 1], vec![1, -2]]).unwrap();
        let f = DiscriminantForm::of(&g).unwrap();
        assert_eq!(f.orders, vec![int(3)]);
        // q = -2/3 = 4/3 mod 2
        assert_eq!(f.q, vec![rat(4, 3)]);
        assert!(is_consistent(&f));
        assert_eq!(f.elements().len(), 3);
    }
}
