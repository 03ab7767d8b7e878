use k3toric::arith::{rat, Rat};
use k3toric::curve::{
    classify_ade, classify_curve, configuration_name, hessian_corank, local_germ, parse_configuration, AdeType,
    CurveError, ProjPoint, TorusCurve,
};
use k3toric::fixtures::{curve_fixture, CURVES};
use k3toric::monomial::WeightedMonomial;
use k3toric::report::{generic_support, GRID_RADIUS};
use num_traits::{One, Zero};

fn pt(c: [i64; 3]) -> ProjPoint {
    ProjPoint::from_i64(c).unwrap()
}

fn computed_configuration(config: &str) -> String {
    let c = curve_fixture(config).unwrap();
    let stated: Vec<ProjPoint> = c.points.iter().map(|p| pt(p.point)).collect();
    classify_curve(&c.curve(), &stated, GRID_RADIUS).unwrap().configuration()
}

fn canonical(config: &str) -> String {
    configuration_name(&parse_configuration(config).unwrap())
}

#[test]
fn configurations_matching_their_headings() {
    for config in [
        "A17",
        "A2+A14",
        "2A2+A11",
        "A2+A5+A8",
        "3A5",
        "3A2+A8",
        "2A2+2A5",
        "4A2+A5",
        "2A5+E6",
        "A5+2E6",
        "3E6",
        "2A2+A5+E6",
        "2A2+2E6",
        "A2+E6+A8",
        "4A2+E6",
    ] {
        assert_eq!(computed_configuration(config), canonical(config), "{config}");
    }
}

#[test]
fn configurations_that_differ_from_their_headings() {
    assert_eq!(computed_configuration("A5+A11"), "A8");
    assert_eq!(computed_configuration("E6+A11"), "A8");
    assert_eq!(computed_configuration("2A8"), "A2+A8");
}

/// `F(1,1,1)` for the A5+A11 template evaluated by hand: the conic vanishes
/// and the cubic equals `-t2`.
#[test]
fn stated_point_off_the_curve() {
    let c = curve_fixture("A5+A11").unwrap();
    let t = c.curve();
    let one = [Rat::one(), Rat::one(), Rat::one()];
    assert!(t.f2.eval(&one).is_zero());
    assert_eq!(t.f3.eval(&one), rat(-1, 1));
    assert_eq!(classify_ade(&t.f, &pt([1, 1, 1])), Err(CurveError::NotOnCurve));

    // t2 = 0 puts (1:1:1) back on the curve.
    let mut params = c.params_map();
    params.insert("t2".into(), Rat::zero());
    let t0 = TorusCurve::parse(c.f2, c.f3, &params).unwrap();
    assert!(t0.f.eval(&one).is_zero());

    let r = classify_ade(&curve_fixture("2A2+A11").unwrap().curve().f, &pt([-1, 1, 1]));
    assert_eq!(r, Err(CurveError::NotOnCurve));
}

#[test]
fn stated_types_in_the_inconsistent_cases() {
    let t = curve_fixture("A5+2E6").unwrap().curve();
    let types: Vec<AdeType> =
        [[0, 0, 1], [1, 1, 1], [-1, 1, 1]].iter().map(|&p| classify_ade(&t.f, &pt(p)).unwrap().ade_type).collect();
    assert_eq!(types, [AdeType::E6, AdeType::E6, AdeType::A(5)]);

    let t = curve_fixture("3A5").unwrap().curve();
    assert_eq!(classify_ade(&t.f, &pt([0, 0, 1])).unwrap().ade_type, AdeType::A(5));
}

/// On the conic `YZ = X^2`, parametrized by `(s : s^2 : 1)`, the cubic
/// `X^3 + Y^3 + Z^3` becomes `s^6 + s^3 + 1`. Its derivative
/// `3 s^2 (2 s^3 + 1)` vanishes only at `s = 0` and `s^3 = -1/2`, where the
/// sextic takes the values 1 and 3/4, so the six roots are simple.
#[test]
fn six_transversal_points() {
    let c = curve_fixture("6A2").unwrap();
    let t = c.curve();
    for s in -3..=3 {
        let s = rat(s, 1);
        let p = [s.clone(), &s * &s, Rat::one()];
        let expect = num_traits::pow(s.clone(), 6) + num_traits::pow(s.clone(), 3) + Rat::one();
        assert!(t.f2.eval(&p).is_zero());
        assert_eq!(t.f3.eval(&p), expect);
    }
    let k = classify_curve(&t, &[], GRID_RADIUS).unwrap();
    assert!(k.six_transversal());
    assert_eq!(k.intersection.distinct_points, 6);
}

/// At `(1:0:0)` the conic is `-1` and the cubic `1`, so `F = 0`; with `X = 1`
/// the quadratic part of `F` is `3yz`, which is nondegenerate.
#[test]
fn extra_node_of_the_transversal_case() {
    let t = curve_fixture("6A2").unwrap().curve();
    let p = pt([1, 0, 0]);
    let g = local_germ(&t.f, &p);
    assert_eq!(g.part(2).terms().len(), 1);
    assert_eq!(g.part(2).coeff(&[1, 1]), rat(3, 1));
    assert_eq!(hessian_corank(&g), 0);
    let r = classify_ade(&t.f, &p).unwrap();
    assert_eq!(r.ade_type, AdeType::A(1));
    let k = classify_curve(&t, &[], GRID_RADIUS).unwrap();
    assert_eq!(k.configuration(), "A1");
}

fn exps(m: &str) -> [u32; 3] {
    let e = WeightedMonomial::parse(m).unwrap().exponents;
    [e[0], e[1], e[2]]
}

#[test]
fn listed_monomials_in_generic_support() {
    for c in CURVES.iter().filter(|c| c.config != "6A2") {
        let s = generic_support(c).unwrap();
        for m in c.monomials {
            assert!(s.contains(&exps(m)), "{}: {m}", c.config);
        }
    }
    // -X^6 from the cube of the conic cancels X^6 from the square of the cubic.
    let s = generic_support(curve_fixture("6A2").unwrap()).unwrap();
    assert!(!s.contains(&[6, 0, 0]));
}

/// At the stated values the X^6 coefficient `-1 + t^2` of some templates
/// vanishes, so the instance support is smaller than the template's.
#[test]
fn instance_support_can_drop_monomials() {
    let c = curve_fixture("A5+A11").unwrap();
    assert!(!c.curve().f.terms().contains_key(&[6, 0, 0]));
    assert!(generic_support(c).unwrap().contains(&[6, 0, 0]));
}
