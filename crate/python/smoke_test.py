"""Smoke test for the k3toric Python extension.

Build and install it first:

    pip install --no-build-isolation -e crates/python
"""

import json
from fractions import Fraction

import k3toric

DELTA3 = [(-1, -1, 1), (-1, 1, -1), (1, -1, -1), (5, -1, -1), (-1, 5, -1)]


def main():
    p = k3toric.Polytope(DELTA3)
    assert p.is_reflexive()
    assert (p.rank_l0(), p.picard_rank()) == (0, 2)
    dual = p.polar_dual()
    assert dual.picard_rank() == 18
    assert dual.interior_points() == [(0, 0, 0)]

    pic = p.picard()
    assert pic["gram"].rows() == [[-2, 2], [2, 0]]
    assert pic["gram"].recognize() == ("<-2>+<2>", "verified-isometric")
    b = dual.picard()["gram"]
    inv = b.invariants()
    assert (inv["rank"], inv["signature"], inv["determinant"]) == (18, (1, 17), -4)
    assert k3toric.duality(pic["gram"], b)["all_pass"]

    target = k3toric.GramMatrix([[-2, 0], [0, 2]])
    witness = pic["gram"].find_congruence(target)
    assert witness is not None and pic["gram"].verify_congruence(witness, target)

    pyramid = k3toric.Polytope([(1, 1, -1), (1, -1, -1), (-1, 1, -1), (-1, -1, -1), (0, 0, 2)])
    assert not pyramid.polar_dual().is_integral()
    assert (Fraction(3, 2), 0, Fraction(-1, 2)) in pyramid.polar_dual().vertices()

    assert k3toric.monomial_to_point("X^2*Z^4") == (1, -1, -1)
    assert k3toric.point_to_monomial((-1, 2, -1)) == "Y^3*Z^3"

    c = k3toric.TorusSextic("Y*Z - X^2", "X^3 + Y^3 + Z^3")
    k = c.classify()
    assert k["transversal"] and k["conic_cubic_points"] == 6
    assert c.classify_point((1, 0, 0)) == "A1"
    try:
        c.classify_point((0, 0, 1))
    except ValueError as e:
        assert "not on the curve" in str(e)
    else:
        raise AssertionError("expected ValueError")

    code, report = k3toric.verify_paper(json=True)
    summary = json.loads(report)["summary"]
    assert summary["total"] >= 40 and summary["skipped"] == 0
    print(f"ok (verify-paper: {summary['pass']} pass, {summary['fail']} fail, exit {code})")


if __name__ == "__main__":
    main()
