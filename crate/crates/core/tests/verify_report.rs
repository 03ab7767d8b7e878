use k3toric::report::{verify, verify_paper, ClaimStatus, FixtureSet, OPERATIONS};

#[test]
fn reference_run() {
    let r = verify_paper();
    assert!(r.summary.total >= 40);
    assert_eq!(r.summary.skipped, 0);
    assert!(r.missing_operations().is_empty(), "{:?}", r.missing_operations());
    assert_eq!(r.coverage.len(), OPERATIONS.len());

    let noted: Vec<&str> = r.with_status(ClaimStatus::ComputedWithNote).iter().map(|c| c.id.as_str()).collect();
    assert!(noted.contains(&"curve/3A5/configuration"));
    assert!(noted.contains(&"curve/A5+2E6/configuration"));
    assert!(noted.iter().all(|id| id.starts_with("curve/3A5/") || id.starts_with("curve/A5+2E6/")));

    // Defects of the reference data; see the curve and Picard fixture tests.
    let failed: Vec<&str> = r.with_status(ClaimStatus::Fail).iter().map(|c| c.id.as_str()).collect();
    assert_eq!(
        failed,
        [
            "self-intersections/delta2",
            "self-intersections/delta3",
            "curve/A5+A11/point(0:0:1)",
            "curve/A5+A11/point(1:1:1)",
            "curve/A5+A11/configuration",
            "curve/E6+A11/point(0:0:1)",
            "curve/E6+A11/point(1:1:1)",
            "curve/E6+A11/configuration",
            "curve/2A8/point(1:1:1)",
            "curve/2A8/configuration",
            "curve/2A2+A11/point(-1:1:1)",
            "curve/A2+E6+A8/family",
            "curve/6A2/monomials",
        ]
    );
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn pass_means_equal() {
    let r = verify_paper();
    for c in &r.claims {
        match c.status {
            ClaimStatus::Pass => assert_eq!(c.expected, c.computed, "{}", c.id),
            ClaimStatus::Fail => assert_ne!(c.expected, c.computed, "{}", c.id),
            _ => {}
        }
    }
}

#[test]
fn corrupted_third_polytope() {
    let fx = FixtureSet::reference().with_vertex_replaced(2, [1, -1, -1], [2, -1, -1]);
    let r = verify(&fx);
    assert_eq!(r.claim("reflexive/delta3").unwrap().status, ClaimStatus::Fail);
    for id in
        ["dual/delta3", "rankL0/delta3", "gram/delta3", "gram/delta3-dual", "duality/delta3", "curve/4A2+E6/family"]
    {
        assert_eq!(r.claim(id).unwrap().status, ClaimStatus::Skipped, "{id}");
    }
    assert_eq!(r.claim("reflexive/delta1").unwrap().status, ClaimStatus::Pass);
    assert_eq!(r.claim("congruence/delta3").unwrap().status, ClaimStatus::Pass);
    assert!(r.summary.skipped >= 10);
}

#[test]
fn output_is_deterministic() {
    let (a, b) = (verify_paper(), verify_paper());
    assert_eq!(a.to_text(), b.to_text());
    assert_eq!(a.to_json(), b.to_json());
    let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(v["claims"][0]["id"], "reflexive/delta1");
    assert_eq!(v["claims"][0]["status"], "pass");
}
