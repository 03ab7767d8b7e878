//! Reference data: the three polytopes and their duals, divisor labelings,
//! the printed Gram matrices and congruence transforms, and the torus-type
//! sextic templates with their parameter values and singular points.

use crate::lattice::{GramMatrix, IntMatrix};
use crate::picard::Labeling;
use crate::polytope::{convex_hull, LatticePoint, Polytope};

pub const DELTA1: [[i64; 3]; 5] = [[-1, -1, 1], [-1, 1, -1], [3, -1, -1], [5, -1, -1], [-1, 5, -1]];
pub const DELTA2: [[i64; 3]; 5] = [[-1, -1, 1], [-1, 2, -1], [3, -1, -1], [5, -1, -1], [-1, 5, -1]];
pub const DELTA3: [[i64; 3]; 5] = [[-1, -1, 1], [-1, 1, -1], [1, -1, -1], [5, -1, -1], [-1, 5, -1]];

pub const DELTA1_DUAL: [[i64; 3]; 5] = [[0, 0, 1], [-1, -1, -3], [0, 1, 0], [1, 2, 2], [1, 0, 0]];
pub const DELTA2_DUAL: [[i64; 3]; 5] = [[0, 0, 1], [-1, -1, -3], [0, 1, 0], [3, 4, 6], [1, 0, 0]];
pub const DELTA3_DUAL: [[i64; 3]; 5] = [[0, 0, 1], [-1, -1, -3], [0, 1, 0], [1, 1, 1], [1, 0, 0]];

/// Lattice points of the third polytope in the order `m1, ..., m21`.
pub const DELTA3_POINTS: [[i64; 3]; 21] = [
    [-1, -1, 1],
    [0, -1, 0],
    [2, -1, 0],
    [-1, 2, 0],
    [-1, 0, 0],
    [1, -1, -1],
    [2, -1, -1],
    [3, -1, -1],
    [4, -1, -1],
    [5, -1, -1],
    [4, 0, -1],
    [3, 1, -1],
    [2, 2, -1],
    [1, 3, -1],
    [0, 4, -1],
    [-1, 5, -1],
    [-1, 4, -1],
    [-1, 3, -1],
    [-1, 2, -1],
    [-1, 1, -1],
    [0, 0, -1],
];

/// `rank L0`, Picard rank and dual Picard rank for the three polytopes.
pub const RANK_L0: [usize; 3] = [1, 2, 0];
pub const RHO: [usize; 3] = [4, 7, 2];
pub const RHO_DUAL: [usize; 3] = [17, 15, 18];

/// Monomials of weighted degree 6 and the lattice points they label.
pub const MONOMIAL_TABLE: [(&str, [i64; 3]); 8] = [
    ("W^2", [-1, -1, 1]),
    ("Y^6", [-1, 5, -1]),
    ("X^6", [5, -1, -1]),
    ("Z^6", [-1, -1, -1]),
    ("Y^3*Z^3", [-1, 2, -1]),
    ("Y^2*Z^4", [-1, 1, -1]),
    ("X^4*Z^2", [3, -1, -1]),
    ("X^2*Z^4", [1, -1, -1]),
];

fn hull(v: &[[i64; 3]]) -> Polytope {
    let pts: Vec<LatticePoint> = v.iter().map(|c| LatticePoint::new(c[0], c[1], c[2])).collect();
    convex_hull(&pts).expect("fixture polytope is full-dimensional")
}

pub fn delta1() -> Polytope {
    hull(&DELTA1)
}

pub fn delta2() -> Polytope {
    hull(&DELTA2)
}

pub fn delta3() -> Polytope {
    hull(&DELTA3)
}

pub fn delta3_dual() -> Polytope {
    hull(&DELTA3_DUAL)
}

fn lp(c: [i64; 3]) -> LatticePoint {
    LatticePoint::new(c[0], c[1], c[2])
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

/// `v1..v6` of the first dual; `v6` splits into `D6, D7`.
pub fn labeling1() -> Labeling {
    Labeling::new(vec![
        (lp([0, 0, 1]), names(&["D1"])),
        (lp([-1, -1, -3]), names(&["D2"])),
        (lp([0, 1, 0]), names(&["D3"])),
        (lp([1, 2, 2]), names(&["D4"])),
        (lp([1, 0, 0]), names(&["D5"])),
        (lp([1, 1, 1]), names(&["D6", "D7"])),
    ])
}

/// `v1..v8` of the second dual; `v7` and `v8` split into primed pairs.
pub fn labeling2() -> Labeling {
    Labeling::new(vec![
        (lp([0, 0, 1]), names(&["D1"])),
        (lp([-1, -1, -3]), names(&["D2"])),
        (lp([0, 1, 0]), names(&["D3"])),
        (lp([3, 4, 6]), names(&["D4"])),
        (lp([1, 0, 0]), names(&["D5"])),
        (lp([2, 2, 3]), names(&["D6"])),
        (lp([1, 2, 2]), names(&["D7", "D7'"])),
        (lp([2, 3, 4]), names(&["D8", "D8'"])),
    ])
}

pub fn labeling3() -> Labeling {
    Labeling::numbered("D", &[[0, 0, 1], [-1, -1, -3], [0, 1, 0], [1, 1, 1], [1, 0, 0]])
}

pub fn labeling3_dual() -> Labeling {
    Labeling::numbered("M", &DELTA3_POINTS)
}

/// The reference labeling when `p` has the vertex set of a reference
/// polytope, with its name.
pub fn reference_labeling(p: &Polytope) -> Option<(&'static str, Labeling)> {
    let cases: [(&str, Polytope, fn() -> Labeling); 4] = [
        ("delta1", delta1(), labeling1),
        ("delta2", delta2(), labeling2),
        ("delta3", delta3(), labeling3),
        ("delta3-dual", delta3_dual(), labeling3_dual),
    ];
    let mut v = p.vertices().to_vec();
    v.sort();
    cases.into_iter().find_map(|(name, q, lab)| {
        let mut w = q.vertices().to_vec();
        w.sort();
        (v == w).then(|| (name, lab()))
    })
}

pub const SELF_INT1: [i64; 7] = [14, 2, -2, -2, 0, -2, -2];
pub const SELF_INT2: [i64; 10] = [14, 2, -2, -2, 0, -2, -2, -2, -2, -2];
pub const SELF_INT3: [i64; 5] = [16, 4, 0, -2, 0];

pub fn self_int3_dual() -> Vec<i64> {
    let mut v = vec![-2; 21];
    v[0] = 0;
    v
}

fn gram(rows: &[&[i64]]) -> GramMatrix {
    GramMatrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("symmetric fixture")
}

fn mat(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Basis `D4, D5, D6, D7`.
pub fn a_b1() -> GramMatrix {
    gram(&[&[-2, 0, 1, 1], &[0, 0, 1, 1], &[1, 1, -2, 0], &[1, 1, 0, -2]])
}

pub fn p1() -> IntMatrix {
    mat(&[&[0, 1, 1, 0], &[0, 1, 0, 0], &[1, -1, 0, 0], &[0, -2, -1, 1]])
}

/// `U ⊕ <-2> ⊕ <-4>`.
pub fn a_b1_prime() -> GramMatrix {
    gram(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, -2, 0], &[0, 0, 0, -4]])
}

/// Basis `D4, D5, D6, D7, D7', D8, D8'`.
pub fn a_b2() -> GramMatrix {
    gram(&[
        &[-2, 0, 1, 0, 0, 1, 1],
        &[0, 0, 1, 0, 0, 0, 0],
        &[1, 1, -2, 0, 0, 0, 0],
        &[0, 0, 0, -2, 0, 1, 0],
        &[0, 0, 0, 0, -2, 0, 1],
        &[1, 0, 0, 1, 0, -2, 0],
        &[1, 0, 0, 0, 1, 0, -2],
    ])
}

pub fn p2() -> IntMatrix {
    mat(&[
        &[0, 1, 1, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 0, 0, 1],
        &[1, -1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1, 0],
        &[0, 0, 0, 1, 0, 0, 0],
    ])
}

/// `U ⊕ A5`.
pub fn a_b2_prime() -> GramMatrix {
    gram(&[
        &[0, 1, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0, 0],
        &[0, 0, -2, 1, 0, 0, 0],
        &[0, 0, 1, -2, 1, 0, 0],
        &[0, 0, 0, 1, -2, 1, 0],
        &[0, 0, 0, 0, 1, -2, 1],
        &[0, 0, 0, 0, 0, 1, -2],
    ])
}

/// Basis `D4, D5`.
pub fn a_b3() -> GramMatrix {
    gram(&[&[-2, 2], &[2, 0]])
}

pub fn p3() -> IntMatrix {
    mat(&[&[1, 0], &[1, 1]])
}

pub fn a_b3_prime() -> GramMatrix {
    gram(&[&[-2, 0], &[0, 2]])
}

/// Basis `M1, ..., M18`.
pub fn b_b() -> GramMatrix {
    GramMatrix::from_i64(&B_B.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("symmetric fixture")
}

pub const B_B: [[i64; 18]; 18] = [
    [0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, -2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -2],
];

/// A singular point as stated in the reference text.
#[derive(Clone, Copy, Debug)]
pub struct StatedPoint {
    pub ade: &'static str,
    pub point: [i64; 3],
}

const fn pt(ade: &'static str, point: [i64; 3]) -> StatedPoint {
    StatedPoint { ade, point }
}

/// A torus-type sextic template with the suggested parameter values.
#[derive(Clone, Copy, Debug)]
pub struct CurveFixture {
    /// Configuration as a sum, e.g. `2A2+A5+E6`.
    pub config: &'static str,
    pub f2: &'static str,
    pub f3: &'static str,
    pub params: &'static [(&'static str, &'static str)],
    pub points: &'static [StatedPoint],
    /// Monomials the text lists as occurring in `F`.
    pub monomials: &'static [&'static str],
    /// Index (1, 2 or 3) of the polytope whose family contains the surface.
    pub family: Option<u8>,
    /// The text is internally inconsistent for this case.
    pub note: Option<&'static str>,
}

const CONIC: &str = "Y*Z - X^2";

pub const CURVES: [CurveFixture; 19] = [
    CurveFixture {
        config: "A17",
        f2: CONIC,
        f3: "-X^2*Z + Y*Z^2 + Y^3",
        params: &[],
        points: &[pt("A17", [0, 0, 1])],
        monomials: &["X^6", "Y^6", "X^4*Z^2", "Y^4*Z^2", "Y^3*Z^3", "Y^2*Z^4"],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "A2+A14",
        f2: CONIC,
        f3: "Y^3 + t5*X*Y^2 - X^2*Z + Y*Z^2",
        params: &[("t5", "1")],
        points: &[pt("A14", [0, 0, 1]), pt("A2", [-1, 1, 1])],
        monomials: &["X^6", "Y^6", "X^2*Y^4", "X^4*Z^2", "X*Y^5", "Y^4*Z^2", "Y^3*Z^3", "Y^2*Z^4"],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "A5+A11",
        f2: CONIC,
        f3: "-t2*X^3 - (t1 + t2 - s - 1)*Y^3 + X^2*Y - t1*X^2*Z + 2*(t1 + t2 - s - 1)*X*Y^2 + t1*Y*Z^2 - (t1 + t2 - s)*Y^2*Z",
        params: &[("t1", "1"), ("t2", "1"), ("s", "0")],
        points: &[pt("A11", [0, 0, 1]), pt("A5", [1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^4*Y^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "X^4*Z^2", "X^5*Z", "Y^5*Z",
            "Y^4*Z^2", "Y^3*Z^3", "Y^2*Z^4",
        ],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "E6+A11",
        f2: CONIC,
        f3: "-t2*X^3 + (-t1 - t2 + 1)*Y^3 + X^2*Y + 2*(t1 + t2 - 1)*X*Y^2 + t1*Y*Z^2 + (t1 + t2)*Y^2*Z - t1*X^2*Z",
        params: &[("t1", "-1"), ("t2", "1")],
        points: &[pt("A11", [0, 0, 1]), pt("E6", [1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "Y^5*Z",
            "Y^4*Z^2", "Y^3*Z^3", "Y^2*Z^4",
        ],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "2A8",
        f2: CONIC,
        f3: "-(t2 + 1)*X^3 + t2*Y^3 + 3*t2*X^2*Y - 3*t2*X*Y^2 - t1*X^2*Z + t1*Y*Z^2",
        params: &[("t1", "1"), ("t2", "1")],
        points: &[pt("A8", [0, 0, 1]), pt("A8", [1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "X^5*Z", "Y^4*Z^2",
            "Y^3*Z^3",
        ],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "2A2+A11",
        f2: CONIC,
        f3: "Y^3 + t4*X^2*Y - X^2*Z + t5*X*Y^2 + Y*Z^2",
        params: &[("t4", "-2"), ("t5", "1")],
        points: &[pt("A11", [0, 0, 1]), pt("A2", [-1, 1, 1]), pt("A2", [-2, 4, 1])],
        monomials: &[
            "X^6", "Y^6", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "Y^4*Z^2", "Y^3*Z^3", "Y^2*Z^4",
        ],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "A2+A5+A8",
        f2: CONIC,
        f3: "(-t2 - 23/27)*X^3 - (t2 - 4/27)*Y^3 + (t1 + t2 + 23/27 - s)*X^2*Y + (t2 - 4/27)*X*Y^2 - t1*X^2*Z + X*Y*Z + t1*Y*Z^2 + (-t1 - 1 + s)*Y^2*Z",
        params: &[("t1", "1"), ("t2", "1"), ("s", "1")],
        points: &[pt("A8", [0, 0, 1]), pt("A2", [-1, 1, 1]), pt("A5", [1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^4*Y^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "X^5*Z", "X^4*Z^2", "Y^5*Z",
            "Y^4*Z^2", "Y^3*Z^3", "Y^2*Z^4",
        ],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "3A5",
        f2: CONIC,
        f3: "-t3*X^3 + X^2*Y + (-t1 - t2/2 + t3 - 1)*X^2*Z + t3*X*Y*Z + (-t2/2 - 1 + t3)*Y^3 + (t2 + 1 - 2*t3)*Y^2*Z + t1*Y*Z^2",
        params: &[("t1", "1"), ("t2", "1"), ("t3", "1")],
        points: &[pt("A5", [0, 0, 1]), pt("A5", [1, 1, 1]), pt("A5", [-1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "Y^5*Z", "Y^4*Z^2",
            "Y^3*Z^3", "Y^2*Z^4",
        ],
        family: Some(1),
        note: Some("the text also names type A8 at (0:0:1)"),
    },
    CurveFixture {
        config: "3A2+A8",
        f2: CONIC,
        f3: "t3*X^3 + Y^3 + t4*X^2*Y - X^2*Z + Y*Z^2 + t5*X*Y^2",
        params: &[("t3", "-4"), ("t4", "-4"), ("t5", "1")],
        points: &[pt("A8", [0, 0, 1]), pt("A2", [-1, 1, 1]), pt("A2", [-2, 4, 1]), pt("A2", [2, 4, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "Y^4*Z^2",
            "Y^3*Z^3", "Y^2*Z^4",
        ],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "2A2+2A5",
        f2: CONIC,
        f3: "3*X^3 + Y^3 - (t1 + 2)*X^2*Z + (t1 - t2 - 1)*X^2*Y - 3*X*Y^2 + t1*Y*Z^2 + (-t1 + 2 + t2)*Y^2*Z",
        params: &[("t1", "1"), ("t2", "1")],
        points: &[pt("A5", [0, 0, 1]), pt("A5", [1, 1, 1]), pt("A2", [-1, 1, 1]), pt("A2", [2, 4, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "Y^5*Z",
            "Y^4*Z^2", "Y^2*Z^4",
        ],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "4A2+A5",
        f2: CONIC,
        f3: "t3*X^3 + Y^3 + t4*X^2*Y + (t2 - 1)*X^2*Z + t5*X*Y^2 + Y*Z^2",
        params: &[("t2", "4"), ("t3", "0"), ("t4", "-5"), ("t5", "0")],
        points: &[
            pt("A5", [0, 0, 1]),
            pt("A2", [-1, 1, 1]),
            pt("A2", [1, 1, 1]),
            pt("A2", [-2, 4, 1]),
            pt("A2", [2, 4, 1]),
        ],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "Y^4*Z^2",
            "Y^3*Z^3", "Y^2*Z^4",
        ],
        family: Some(1),
        note: None,
    },
    CurveFixture {
        config: "2A5+E6",
        f2: CONIC,
        f3: "-t3*X^3 + X^2*Y - (1 + t2/2 - t3)*X^2*Z + t3*X*Y*Z - (1 + t2/2 - t3)*Y^3 + (1 + t2 - 2*t3)*Y^2*Z",
        params: &[("t2", "1"), ("t3", "1")],
        points: &[pt("E6", [0, 0, 1]), pt("A5", [1, 1, 1]), pt("A5", [-1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "Y^5*Z", "Y^4*Z^2",
            "Y^3*Z^3",
        ],
        family: Some(2),
        note: None,
    },
    CurveFixture {
        config: "A5+2E6",
        f2: CONIC,
        f3: "-t3*X^3 - (1 - t3)*Y^3 + X^2*Y - (1 - t3)*X^2*Z + (1 - 2*t3)*Y^2*Z + t3*X*Y*Z",
        params: &[("t3", "-1")],
        points: &[pt("A5", [0, 0, 1]), pt("A5", [1, 1, 1]), pt("A5", [-1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^3*Y^3", "X^4*Z^2", "X^2*Y^4", "Y^3*Z^3", "Y^5*Z",
        ],
        family: Some(2),
        note: Some("the text names type A5 at all three points, against the heading A5+2E6"),
    },
    CurveFixture {
        config: "3E6",
        f2: CONIC,
        f3: "X^2*Y - X^2*Z - Y^3 + Y^2*Z",
        params: &[],
        points: &[pt("E6", [0, 0, 1]), pt("E6", [1, 1, 1]), pt("E6", [-1, 1, 1])],
        monomials: &["X^6", "Y^6", "X^4*Y^2", "X^4*Z^2", "X^2*Y^4", "Y^5*Z", "Y^4*Z^2", "Y^3*Z^3"],
        family: Some(2),
        note: None,
    },
    CurveFixture {
        config: "2A2+A5+E6",
        f2: CONIC,
        f3: "3*X^3 + Y^3 - (1 + t2)*X^2*Y - 3*X*Y^2 - 2*X^2*Z + (2 + t2)*Y^2*Z",
        params: &[("t2", "1")],
        points: &[pt("E6", [0, 0, 1]), pt("A2", [-1, 1, 1]), pt("A2", [2, 4, 1]), pt("A5", [1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "Y^5*Z",
            "Y^4*Z^2", "Y^3*Z^3",
        ],
        family: Some(2),
        note: None,
    },
    CurveFixture {
        config: "2A2+2E6",
        f2: CONIC,
        f3: "3*X^3 + Y^3 - X^2*Y - 3*X*Y^2 - 2*X^2*Z + 2*Y^2*Z",
        params: &[],
        points: &[pt("E6", [0, 0, 1]), pt("E6", [1, 1, 1]), pt("A2", [-1, 1, 1]), pt("A2", [2, 4, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^5*Z", "X^4*Y^2", "X^4*Z^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "Y^5*Z",
            "Y^4*Z^2", "Y^3*Z^3",
        ],
        family: Some(2),
        note: None,
    },
    CurveFixture {
        config: "A2+E6+A8",
        f2: CONIC,
        f3: "-(t2 + 23/27)*X^3 + (4/27 - t2)*Y^3 + (t1 + t2 + 23/27)*X^2*Y + (t2 - 4/27)*X*Y^2 - t1*X^2*Z - (t1 + 1)*Y^2*Z + t1*Y*Z^2 + X*Y*Z",
        params: &[("t1", "1"), ("t2", "1")],
        points: &[pt("A8", [0, 0, 1]), pt("A2", [-1, 1, 1]), pt("E6", [1, 1, 1])],
        monomials: &[
            "X^6", "Y^6", "X^5*Y", "X^4*Y^2", "X^3*Y^3", "X^2*Y^4", "X*Y^5", "X^5*Z", "X^4*Z^2", "Y^5*Z",
            "Y^4*Z^2", "Y^3*Z^3",
        ],
        family: Some(2),
        note: None,
    },
    CurveFixture {
        config: "4A2+E6",
        f2: CONIC,
        f3: "Y^3 - X*Y^2 - 4*X*Z^2 - 5*Y^2*Z + 4*Y*Z^2 + 5*X*Y*Z",
        params: &[],
        points: &[
            pt("E6", [1, 1, 1]),
            pt("A2", [0, 0, 1]),
            pt("A2", [-1, 1, 1]),
            pt("A2", [-2, 4, 1]),
            pt("A2", [2, 4, 1]),
        ],
        monomials: &["X^6", "Y^6", "X^2*Y^4", "X^2*Z^4", "X*Y^5", "Y^5*Z", "Y^4*Z^2", "Y^3*Z^3", "Y^2*Z^4"],
        family: Some(3),
        note: None,
    },
    CurveFixture {
        config: "6A2",
        f2: CONIC,
        f3: "X^3 + Y^3 + Z^3",
        params: &[],
        points: &[],
        monomials: &["X^6", "Y^6", "Z^6", "X^3*Y^3", "X^3*Z^3", "Y^3*Z^3"],
        family: None,
        note: None,
    },
];

impl CurveFixture {
    pub fn params_map(&self) -> std::collections::BTreeMap<String, crate::Rat> {
        crate::curve::params_from_strs(self.params.iter().copied()).expect("fixture parameters are rationals")
    }

    pub fn curve(&self) -> crate::curve::TorusCurve {
        crate::curve::TorusCurve::parse(self.f2, self.f3, &self.params_map()).expect("fixture curve parses")
    }

    /// The six singular points lie off the rational grid.
    pub fn is_transversal_case(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn curve_fixture(config: &str) -> Option<&'static CurveFixture> {
    CURVES.iter().find(|c| c.config == config)
}
