//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use common::*;
use k3toric::arith::int;
use k3toric::curve::{
    classify_curve, configuration_name, germ_milnor, parse_configuration, support_polytope_membership, Poly2, ProjPoint,
};
use k3toric::fixtures::*;
use k3toric::lattice::{
    check_duality, detect_u_summand, invariants, recognize, smith_normal_form, verify_congruence, CongruenceWitness,
    GramMatrix, IntMatrix, LatticeName, MatchLevel, Summand,
};
use k3toric::monomial::WeightedMonomial;
use k3toric::picard::{build_intersection_graph, build_intersection_graph_labeled, picard_gram, picard_rank, rank_l0};
use k3toric::polytope::{is_reflexive, polar_dual, Polytope};
use k3toric::report::{generic_support, support_polynomial, GRID_RADIUS};
use k3toric::Rat;
use num_traits::{One, Signed, Zero};
use rand::Rng;

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String, problems: &mut Vec<String>) {
    if !ok {
        problems.push(msg());
    }
}

fn finish(problems: Vec<String>) -> Outcome {
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

fn polytopes() -> [Polytope; 3] {
    [delta1(), delta2(), delta3()]
}

fn pic(d: &Polytope) -> GramMatrix {
    picard_gram(&build_intersection_graph(d).unwrap(), d).unwrap().gram
}

fn reflexivity() -> Outcome {
    let mut p = Vec::new();
    let duals = [DELTA1_DUAL, DELTA2_DUAL, DELTA3_DUAL];
    for (i, (d, expect)) in polytopes().iter().zip(duals).enumerate() {
        ensure(is_reflexive(d), || format!("delta{} not reflexive", i + 1), &mut p);
        let mut e = expect.to_vec();
        e.sort();
        let got = sorted_vertices(&polar_dual(d).unwrap());
        ensure(got == e, || format!("dual of delta{}: {got:?}", i + 1), &mut p);
    }
    finish(p)
}

fn ranks() -> Outcome {
    let mut p = Vec::new();
    let expect = [(1, 4, 17), (2, 7, 15), (0, 2, 18)];
    for (i, (d, (l0, rho, rho_d))) in polytopes().iter().zip(expect).enumerate() {
        let got = (rank_l0(d).unwrap(), picard_rank(d).unwrap(), picard_rank(&polar_dual(d).unwrap()).unwrap());
        ensure(got == (l0, rho, rho_d), || format!("delta{}: {got:?}", i + 1), &mut p);
        ensure(got.1 + got.2 == [21, 22, 20][i], || format!("delta{} sum {}", i + 1, got.1 + got.2), &mut p);
    }
    finish(p)
}

fn self_intersections() -> Outcome {
    let mut p = Vec::new();
    let cases: [(Polytope, k3toric::picard::Labeling, Vec<i64>, &str); 4] = [
        (delta1(), labeling1(), vec![14, 2, -2, -2, 0, -2, -2], "delta1"),
        (delta2(), labeling2(), vec![14, 2, -2, -2, 0, -2, -2, -2, -2, -2], "delta2"),
        (delta3(), labeling3(), vec![16, 4, 0, -2, 0], "delta3"),
        (
            delta3_dual(),
            labeling3_dual(),
            std::iter::once(0).chain(std::iter::repeat_n(-2, 20)).collect(),
            "delta3*",
        ),
    ];
    for (d, lab, expect, name) in cases {
        let got = build_intersection_graph_labeled(&d, Some(&lab)).unwrap().self_intersections();
        ensure(got == expect, || format!("{name}: computed {got:?}, expected {expect:?}"), &mut p);
    }
    finish(p)
}

fn gram_matrices() -> Outcome {
    let mut p = Vec::new();
    let cases = [
        (delta1(), labeling1(), a_b1(), "delta1"),
        (delta2(), labeling2(), a_b2(), "delta2"),
        (delta3(), labeling3(), a_b3(), "delta3"),
        (delta3_dual(), labeling3_dual(), b_b(), "delta3*"),
    ];
    for (d, lab, expect, name) in cases {
        let g = build_intersection_graph_labeled(&d, Some(&lab)).unwrap();
        let got = picard_gram(&g, &d).unwrap().gram;
        ensure(got == expect, || format!("{name}: Gram differs"), &mut p);
    }
    finish(p)
}

fn congruences() -> Outcome {
    let mut p = Vec::new();
    let name = |v: Vec<Summand>| LatticeName::new(v).gram();
    let cases = [
        (p1(), a_b1(), a_b1_prime(), name(vec![Summand::U, Summand::Angle(-2), Summand::Angle(-4)])),
        (p2(), a_b2(), a_b2_prime(), name(vec![Summand::U, Summand::A(5)])),
        (p3(), a_b3(), a_b3_prime(), GramMatrix::diagonal(&[-2, 2])),
    ];
    for (i, (pm, a, t, block)) in cases.into_iter().enumerate() {
        ensure(verify_congruence(&CongruenceWitness::new(pm, a, t.clone())), || format!("P{} fails", i + 1), &mut p);
        ensure(t == block, || format!("target {} is not the block form", i + 1), &mut p);
    }
    finish(p)
}

fn b_b_invariants() -> Outcome {
    let inv = invariants(&b_b()).map_err(|e| e.to_string())?;
    let got = (inv.rank, inv.signature, inv.determinant.clone(), inv.disc_group.clone());
    if got == (18, (1, 17), int(-4), vec![int(2), int(2)]) {
        Ok(())
    } else {
        Err(format!("{got:?}"))
    }
}

fn duality() -> Outcome {
    let mut p = Vec::new();
    let r = check_duality(&pic(&delta3()), &pic(&delta3_dual()));
    ensure(r.all_pass(), || format!("delta3 pair: {:?}", r.failed_stage()), &mut p);
    for (i, d) in [delta1(), delta2()].iter().enumerate() {
        let r = check_duality(&pic(d), &pic(&polar_dual(d).unwrap()));
        let rho_sum = r.rank_s + r.rank_t_prime - 2;
        ensure(
            r.failed_stage() == Some("rank") && rho_sum == [21, 22][i],
            || format!("delta{}: stage {:?}, rank sum {rho_sum}", i + 1, r.failed_stage()),
            &mut p,
        );
    }
    finish(p)
}

fn recognition() -> Outcome {
    let mut p = Vec::new();
    for (d, name) in [(delta1(), "U+<-2>+<-4>"), (delta2(), "U+A5"), (delta3(), "<-2>+<2>")] {
        let r = recognize(&pic(&d));
        let got = r.name.map(|n| n.to_string()).unwrap_or_default();
        ensure(r.level == MatchLevel::VerifiedIsometric && got == name, || format!("{name}: got {got}"), &mut p);
    }
    for (i, d) in [delta1(), delta2()].iter().enumerate() {
        ensure(detect_u_summand(&pic(d), 2).is_some(), || format!("no U in delta{}", i + 1), &mut p);
    }
    finish(p)
}

fn support_membership() -> Outcome {
    let mut p = Vec::new();
    let polys = polytopes();
    for c in CURVES.iter() {
        let support = generic_support(c).map_err(|e| e.to_string())?;
        let missing: Vec<&str> = c
            .monomials
            .iter()
            .copied()
            .filter(|m| {
                let e = WeightedMonomial::parse(m).unwrap().exponents;
                !support.contains(&[e[0], e[1], e[2]])
            })
            .collect();
        ensure(missing.is_empty(), || format!("{}: {} not in support", c.config, missing.join(",")), &mut p);
        let f = support_polynomial(&support).unwrap();
        let inside: Vec<bool> = polys.iter().map(|d| support_polytope_membership(&f, d).unwrap().all_inside).collect();
        let ok = match c.family {
            Some(i) => inside[i as usize - 1],
            None => inside.iter().all(|b| !b),
        };
        ensure(ok, || format!("{}: membership {inside:?}", c.config), &mut p);
    }
    finish(p)
}

fn configurations() -> Outcome {
    let mut p = Vec::new();
    for c in CURVES.iter() {
        let stated: Vec<ProjPoint> = c.points.iter().map(|s| ProjPoint::from_i64(s.point).unwrap()).collect();
        let k = classify_curve(&c.curve(), &stated, GRID_RADIUS).map_err(|e| e.to_string())?;
        if c.note.is_some() {
            // Accepted as computed-with-note.
            continue;
        }
        if c.is_transversal_case() {
            ensure(k.six_transversal(), || format!("{}: not six transversal points", c.config), &mut p);
        } else {
            let heading = configuration_name(&parse_configuration(c.config).unwrap());
            let got = k.configuration();
            ensure(got == heading, || format!("{}: computed {got}", c.config), &mut p);
        }
    }
    finish(p)
}

fn property_suites() -> Outcome {
    let mut p = Vec::new();
    for n in 1..=17u32 {
        let mut g = Poly2::zero();
        g.add_term([2, 0], Rat::one());
        g.add_term([0, n + 1], Rat::one());
        let mu = germ_milnor(&g, 1, 40).map_err(|e| e.to_string())?;
        ensure(mu == n, || format!("mu(x^2+y^{}) = {mu}", n + 1), &mut p);
    }
    let perturbed = reflexive_perturbations(7);
    ensure(perturbed.len() >= 20, || format!("{} perturbations", perturbed.len()), &mut p);
    for d in perturbed.iter().take(20) {
        let dd = polar_dual(&polar_dual(d).unwrap()).unwrap();
        ensure(sorted_vertices(&dd) == sorted_vertices(d), || "dual not an involution".into(), &mut p);
    }
    let mut r = rng(11);
    for _ in 0..100 {
        let n = r.gen_range(1..=5);
        let a = IntMatrix::from_i64(&random_symmetric(&mut r, n, 6));
        let s = smith_normal_form(&a);
        let diag_ok = (0..n).all(|i| (0..n).all(|j| i == j || s.d[(i, j)].is_zero()));
        let unimodular = s.u.det().abs().is_one() && s.v.det().abs().is_one();
        ensure(s.u.mul(&a).mul(&s.v) == s.d && diag_ok && unimodular, || "Smith form check".into(), &mut p);
    }
    for g in [a_b1(), a_b2(), a_b3(), b_b()] {
        for _ in 0..5 {
            let u = random_unimodular(&mut r, g.dim(), 8);
            let h = g.transform(&u).unwrap();
            let same = invariants(&g).unwrap().equivalent(&invariants(&h).unwrap());
            ensure(same, || "invariants changed under congruence".into(), &mut p);
        }
    }
    finish(p)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("reflexivity and polar duals", reflexivity),
        ("toric correction terms and Picard ranks", ranks),
        ("divisor self-intersection vectors", self_intersections),
        ("Picard Gram matrices", gram_matrices),
        ("congruence witnesses and block targets", congruences),
        ("invariants of B_B", b_b_invariants),
        ("discriminant-form duality", duality),
        ("lattice recognition and U summands", recognition),
        ("curve support and family membership", support_membership),
        ("singularity configurations", configurations),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
