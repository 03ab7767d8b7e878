//! Helpers shared by the property and acceptance tests.
#![allow(dead_code)]

use k3toric::arith::int;
use k3toric::fixtures::{DELTA1, DELTA1_DUAL, DELTA2, DELTA2_DUAL, DELTA3, DELTA3_DUAL};
use k3toric::lattice::IntMatrix;
use k3toric::polytope::{convex_hull, is_reflexive, LatticePoint, Polytope};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn hull(v: &[[i64; 3]]) -> Polytope {
    let pts: Vec<LatticePoint> = v.iter().map(|c| LatticePoint::new(c[0], c[1], c[2])).collect();
    convex_hull(&pts).unwrap()
}

pub fn sorted_vertices(p: &Polytope) -> Vec<[i64; 3]> {
    let mut v: Vec<[i64; 3]> = p.lattice_vertices().unwrap().iter().map(LatticePoint::to_i64).collect();
    v.sort();
    v
}

/// Reflexive polytopes obtained from the six fixtures by moving one vertex
/// to a neighbouring lattice point, in random order.
pub fn reflexive_perturbations(seed: u64) -> Vec<Polytope> {
    let mut found: Vec<(Vec<[i64; 3]>, Polytope)> = Vec::new();
    for base in [DELTA1, DELTA2, DELTA3, DELTA1_DUAL, DELTA2_DUAL, DELTA3_DUAL] {
        for i in 0..base.len() {
            for step in (0..27).map(|k| [k % 3 - 1, k / 3 % 3 - 1, k / 9 - 1]).filter(|s| *s != [0, 0, 0]) {
                let mut v = base.to_vec();
                for a in 0..3 {
                    v[i][a] += step[a];
                }
                let pts: Vec<LatticePoint> = v.iter().map(|c| LatticePoint::new(c[0], c[1], c[2])).collect();
                let Ok(p) = convex_hull(&pts) else { continue };
                if !is_reflexive(&p) {
                    continue;
                }
                let key = sorted_vertices(&p);
                if !found.iter().any(|(k, _)| *k == key) {
                    found.push((key, p));
                }
            }
        }
    }
    let mut out: Vec<Polytope> = found.into_iter().map(|(_, p)| p).collect();
    out.shuffle(&mut rng(seed));
    out
}

/// A product of random elementary matrices.
pub fn random_unimodular<R: Rng>(r: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        if r.gen_bool(0.5) {
            m.negate_row(0);
        }
        return m;
    }
    for _ in 0..steps {
        let a = r.gen_range(0..n);
        let b = (a + r.gen_range(1..n)) % n;
        match r.gen_range(0..3) {
            0 => m.add_row_multiple(a, b, &int(r.gen_range(-2..=2))),
            1 => m.swap_rows(a, b),
            _ => m.negate_row(a),
        }
    }
    m
}

pub fn random_symmetric<R: Rng>(r: &mut R, n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = r.gen_range(-max..=max);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}
