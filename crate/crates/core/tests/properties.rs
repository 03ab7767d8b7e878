mod common;

use common::*;
use k3toric::arith::{int, rat, Int, Rat};
use k3toric::curve::{classify_ade, classify_germ, germ_milnor, AdeType, Poly2, ProjPoint};
use k3toric::fixtures::{a_b1, a_b2, a_b3, b_b, curve_fixture, CURVES};
use k3toric::io::{CurveFile, GramFile, PolytopeFile};
use k3toric::lattice::{invariants, is_consistent, smith_normal_form, DiscriminantForm, GramMatrix, IntMatrix};
use k3toric::monomial::{monomial_to_point, point_to_monomial, WeightedMonomial};
use k3toric::polytope::{polar_dual, Polytope};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn germ(terms: &[([u32; 2], i64)]) -> Poly2 {
    let mut g = Poly2::zero();
    for (e, c) in terms {
        g.add_term(*e, rat(*c, 1));
    }
    g
}

#[test]
fn milnor_of_a_n_normal_forms() {
    for n in 1..=17u32 {
        let g = germ(&[([2, 0], 1), ([0, n + 1], 1)]);
        let mu = germ_milnor(&g, 1, 40).unwrap();
        assert_eq!(mu, n);
        assert_eq!(classify_germ(&g, mu), AdeType::A(n));
    }
}

/// `g(a x + b y, c x + d y)` for an invertible integer matrix.
fn linear_change(g: &Poly2, m: [[i64; 2]; 2]) -> Poly2 {
    let x = Poly2::var(0);
    let y = Poly2::var(1);
    let u = x.scale(&rat(m[0][0], 1)) + y.scale(&rat(m[0][1], 1));
    let v = x.scale(&rat(m[1][0], 1)) + y.scale(&rat(m[1][1], 1));
    g.compose(&[u, v])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn e6_under_linear_changes(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3, k in 1i64..=4) {
        prop_assume!(a * d - b * c != 0);
        // x^3 + k y^4 plus a higher term stays E6.
        let g = germ(&[([3, 0], 1), ([0, 4], k), ([2, 2], 1)]);
        let h = linear_change(&g, [[a, b], [c, d]]);
        let mu = germ_milnor(&h, 1, 40).unwrap();
        prop_assert_eq!(mu, 6);
        prop_assert_eq!(classify_germ(&h, mu), AdeType::E6);
    }

    #[test]
    fn types_invariant_under_projective_changes(seed in any::<u64>(), which in 0usize..3) {
        let config = ["3E6", "A2+A5+A8", "2A2+2A5"][which];
        let c = curve_fixture(config).unwrap();
        let t = c.curve();
        let mut r = rng(seed);
        let u = random_unimodular(&mut r, 3, 6);
        let m: [[Rat; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| Rat::from_integer(u[(i, j)].clone())));
        let f = t.f.linear_substitute(&m);
        let inv = u.to_rational().inverse().unwrap();
        for sp in c.points {
            let p: Vec<Int> = sp.point.iter().map(|&v| int(v)).collect();
            let q: Vec<Rat> = inv.mul_vec_int(&p);
            let q = ProjPoint::new([q[0].clone(), q[1].clone(), q[2].clone()]).unwrap();
            let before = classify_ade(&t.f, &ProjPoint::from_i64(sp.point).unwrap()).unwrap();
            let after = classify_ade(&f, &q).unwrap();
            prop_assert_eq!(before.ade_type, after.ade_type);
            prop_assert_eq!(before.milnor, after.milnor);
        }
    }

    #[test]
    fn expansion_agrees_pointwise(which in 0usize..19, x in -5i64..=5, y in -5i64..=5, z in 1i64..=5, dz in 1i64..=3) {
        let t = CURVES[which].curve();
        let p = [rat(x, 1), rat(y, dz), rat(z, 1)];
        let f2 = t.f2.eval(&p);
        let f3 = t.f3.eval(&p);
        prop_assert_eq!(t.f.eval(&p), &f2 * &f2 * &f2 + &f3 * &f3);
    }

    #[test]
    fn invariants_under_congruence(seed in any::<u64>(), which in 0usize..3) {
        let g = [a_b1(), a_b2(), a_b3()][which].clone();
        let mut r = rng(seed);
        let p = random_unimodular(&mut r, g.dim(), 8);
        let h = g.transform(&p).unwrap();
        prop_assert!(invariants(&g).unwrap().equivalent(&invariants(&h).unwrap()));
    }

    #[test]
    fn discriminant_values_ignore_the_lift(seed in any::<u64>(), which in 0usize..4) {
        let g = [a_b1(), a_b2(), a_b3(), b_b()][which].clone();
        let form = DiscriminantForm::of(&g).unwrap();
        prop_assert!(is_consistent(&form));
        let mut r = rng(seed);
        let n = g.dim();
        let x: Vec<Int> = (0..n).map(|_| int(r.gen_range(-3..=3))).collect();
        let y: Vec<Int> = (0..n).map(|_| int(r.gen_range(-3..=3))).collect();
        let gy = g.matrix().mul_vec(&y);
        let lifted: Vec<Int> = x.iter().zip(&gy).map(|(a, b)| a + b).collect();
        prop_assert_eq!(form.q_of(&x), form.q_of(&lifted));
        prop_assert_eq!(form.key(&x), form.key(&lifted));
    }
}

#[test]
fn dual_is_an_involution_on_perturbations() {
    let ps = reflexive_perturbations(7);
    assert!(ps.len() >= 20, "only {} reflexive perturbations", ps.len());
    for p in ps.iter().take(20) {
        let dd: Polytope = polar_dual(&polar_dual(p).unwrap()).unwrap();
        assert_eq!(sorted_vertices(&dd), sorted_vertices(p));
    }
}

fn check_smith(a: &IntMatrix) {
    let s = smith_normal_form(a);
    assert_eq!(s.u.mul(a).mul(&s.v), s.d);
    assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one());
    let n = a.rows();
    for i in 0..n {
        for j in 0..a.cols() {
            if i != j {
                assert!(s.d[(i, j)].is_zero());
            }
        }
    }
    let diag = s.diagonal();
    assert!(diag.iter().all(|d| !d.is_negative()));
    for w in diag.windows(2) {
        assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
    }
}

#[test]
fn smith_form_on_random_symmetric_matrices() {
    let mut r = rng(11);
    for _ in 0..100 {
        let n = r.gen_range(1..=5);
        let m = random_symmetric(&mut r, n, 6);
        check_smith(&IntMatrix::from_i64(&m));
    }
}

#[test]
fn every_degree_six_monomial_round_trips() {
    let all = WeightedMonomial::all_degree_six();
    // W^0: C(8,2) monomials in X, Y, Z of degree 6; W^1: C(5,2) of degree 3; W^2.
    assert_eq!(all.len(), 28 + 10 + 1);
    for m in all {
        let p = monomial_to_point(&m).unwrap();
        assert_eq!(point_to_monomial(&p).unwrap(), m);
    }
}

#[test]
fn fixture_files_round_trip() {
    for v in [k3toric::fixtures::DELTA1, k3toric::fixtures::DELTA2, k3toric::fixtures::DELTA3] {
        let f = PolytopeFile { vertices: v.to_vec() };
        let back = PolytopeFile::parse(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(sorted_vertices(&back.polytope().unwrap()), sorted_vertices(&hull(&v)));
    }
    for g in [a_b1(), a_b2(), a_b3(), b_b()] {
        let f = GramFile::from_gram(&g).unwrap();
        let back = GramFile::parse(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.gram().unwrap(), g);
    }
    for c in &CURVES {
        let f = CurveFile::from(c);
        let back = CurveFile::parse(&f.to_json()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.curve().unwrap(), c.curve());
    }
}

#[test]
fn random_grams_round_trip() {
    let mut r = rng(3);
    for _ in 0..20 {
        let n = r.gen_range(1..=6);
        let m = random_symmetric(&mut r, n, 9);
        let g = GramMatrix::from_i64(&m).unwrap();
        let back = GramFile::parse(&GramFile::from_gram(&g).unwrap().to_json()).unwrap().gram().unwrap();
        assert_eq!(back, g);
    }
}
