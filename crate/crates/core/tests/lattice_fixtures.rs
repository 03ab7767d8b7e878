use k3toric::arith::int;
use k3toric::fixtures::*;
use k3toric::lattice::{check_duality, detect_u_summand, invariants, recognize, verify_congruence, MatchLevel};
use k3toric::picard::{build_intersection_graph, picard_gram};
use k3toric::polytope::{polar_dual, Polytope};

fn pic(d: &Polytope) -> k3toric::lattice::GramMatrix {
    picard_gram(&build_intersection_graph(d).unwrap(), d).unwrap().gram
}

#[test]
fn b_b_invariants() {
    let inv = invariants(&b_b()).unwrap();
    assert_eq!(inv.rank, 18);
    assert_eq!(inv.signature, (1, 17));
    assert_eq!(inv.determinant, int(-4));
    assert_eq!(inv.disc_group, vec![int(2), int(2)]);
}

#[test]
fn paper_pairs_share_invariants() {
    for (a, b) in [(a_b1(), a_b1_prime()), (a_b2(), a_b2_prime()), (a_b3(), a_b3_prime())] {
        assert!(invariants(&a).unwrap().equivalent(&invariants(&b).unwrap()));
    }
}

#[test]
fn duality_third_pair_passes() {
    let r = check_duality(&a_b3(), &b_b());
    assert!(r.all_pass(), "{r:?}");
}

#[test]
fn duality_first_two_fail_at_rank() {
    for d in [delta1(), delta2()] {
        let s = pic(&d);
        let t = pic(&polar_dual(&d).unwrap());
        let r = check_duality(&s, &t);
        assert!(!r.rank_ok);
        assert_eq!(r.failed_stage(), Some("rank"));
        assert_eq!(r.rank_s + r.rank_t_prime, s.dim() + t.dim() + 2);
    }
}

#[test]
fn signatures_are_hyperbolic() {
    for d in [delta1(), delta2(), delta3(), delta3_dual()] {
        let g = pic(&d);
        assert_eq!(g.signature(), (1, g.dim() - 1));
        let gd = pic(&polar_dual(&d).unwrap());
        assert_eq!(gd.signature(), (1, gd.dim() - 1));
    }
}

#[test]
fn recognition_of_picard_lattices() {
    for (g, name) in [(a_b1(), "U+<-2>+<-4>"), (a_b2(), "U+A5"), (a_b3(), "<-2>+<2>")] {
        let r = recognize(&g);
        assert_eq!(r.level, MatchLevel::VerifiedIsometric);
        assert_eq!(r.name.unwrap().to_string(), name);
        assert!(verify_congruence(&r.witness.unwrap()));
    }
    assert!(detect_u_summand(&a_b1(), 2).is_some());
    assert!(detect_u_summand(&a_b2(), 1).is_some());
}
