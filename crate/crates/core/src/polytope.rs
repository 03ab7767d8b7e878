//! Exact geometry of convex polytopes in a rank-3 lattice.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals: hulls, facet inequalities, the face lattice, polar duals and
//! lattice-point enumeration. Vertices are kept in lexicographic order so
//! that two polytopes with the same vertex set compare equal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{denom_lcm, gcd_all, int, rat_int, Int, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("the origin is not strictly inside the polytope")]
    OriginNotInterior,
    #[error("not a face of the polytope: dim {dim}, vertices {vertices:?}")]
    NotAFace { dim: u8, vertices: Vec<usize> },
}

pub type Result<T> = std::result::Result<T, PolytopeError>;

/// An integral point of M or N.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub [Int; 3]);

impl LatticePoint {
    pub fn new(x: i64, y: i64, z: i64) -> Self {
        LatticePoint([int(x), int(y), int(z)])
    }

    pub fn origin() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn coords(&self) -> &[Int; 3] {
        &self.0
    }

    pub fn dot(&self, other: &LatticePoint) -> Int {
        dot_int(&self.0, &other.0)
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint([rat_int(&self.0[0]), rat_int(&self.0[1]), rat_int(&self.0[2])])
    }

    /// Coordinates narrowed to i64 (panics on overflow; only used for display paths).
    pub fn to_i64(&self) -> [i64; 3] {
        let f = |v: &Int| i64::try_from(v).expect("coordinate exceeds i64");
        [f(&self.0[0]), f(&self.0[1]), f(&self.0[2])]
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint([&self.0[0] - &other.0[0], &self.0[1] - &other.0[1], &self.0[2] - &other.0[2]])
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// A point with exact rational coordinates (reduced, positive denominators).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(pub [Rat; 3]);

impl RationalPoint {
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_lattice(&self) -> Option<LatticePoint> {
        if !self.is_integral() {
            return None;
        }
        Some(LatticePoint([self.0[0].to_integer(), self.0[1].to_integer(), self.0[2].to_integer()]))
    }

    pub fn dot_int(&self, n: &[Int; 3]) -> Rat {
        self.0.iter().zip(n.iter()).fold(Rat::zero(), |acc, (a, b)| acc + a * rat_int(b))
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(crate::arith::fmt_rat).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// `{ x : <normal, x> >= -offset }` with a primitive integral normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    pub normal: LatticePoint,
    pub offset: Rat,
}

impl HalfSpace {
    /// `<normal, x> + offset`; zero on the boundary, positive inside.
    pub fn slack(&self, x: &RationalPoint) -> Rat {
        x.dot_int(&self.normal.0) + &self.offset
    }

    pub fn slack_lattice(&self, x: &LatticePoint) -> Rat {
        rat_int(&x.dot(&self.normal)) + &self.offset
    }
}

/// A face given by its dimension and a sorted set of vertex indices into the parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceRef {
    pub dim: u8,
    pub vertices: Vec<usize>,
}

impl FaceRef {
    pub fn vertex(i: usize) -> Self {
        FaceRef { dim: 0, vertices: vec![i] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub inequality: HalfSpace,
    pub vertices: Vec<usize>,
}

#[derive(Debug)]
pub struct Polytope {
    vertices: Vec<RationalPoint>,
    facets: Vec<Facet>,
    edges: Vec<[usize; 2]>,
    lattice_points: OnceLock<Vec<LatticePoint>>,
}

impl Clone for Polytope {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(v) = self.lattice_points.get() {
            let _ = cache.set(v.clone());
        }
        Polytope {
            vertices: self.vertices.clone(),
            facets: self.facets.clone(),
            edges: self.edges.clone(),
            lattice_points: cache,
        }
    }
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

fn dot_int(a: &[Int; 3], b: &[Int; 3]) -> Int {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn cross(a: &[Int; 3], b: &[Int; 3]) -> [Int; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn sub3(a: &[Int; 3], b: &[Int; 3]) -> [Int; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn det3(rows: [&[Int; 3]; 3]) -> Int {
    dot_int(rows[0], &cross(rows[1], rows[2]))
}

/// Rank of a set of integer 3-vectors.
fn rank3(vs: &[&[Int; 3]]) -> usize {
    if vs.iter().all(|v| v.iter().all(Zero::is_zero)) {
        return 0;
    }
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if !cross(vs[i], vs[j]).iter().all(Zero::is_zero) {
                for k in j + 1..vs.len() {
                    if !det3([vs[i], vs[j], vs[k]]).is_zero() {
                        return 3;
                    }
                }
                return 2;
            }
        }
    }
    1
}

fn primitive(v: [Int; 3]) -> ([Int; 3], Int) {
    let g = gcd_all(v.iter());
    if g.is_zero() {
        return (v, g);
    }
    ([&v[0] / &g, &v[1] / &g, &v[2] / &g], g)
}

/// Convex hull of integral points.
pub fn convex_hull(points: &[LatticePoint]) -> Result<Polytope> {
    let pts: Vec<RationalPoint> = points.iter().map(LatticePoint::to_rational).collect();
    convex_hull_rational(&pts)
}

/// Convex hull of rational points. Brute force over point triples, which is
/// adequate for the few dozen points this crate deals with.
pub fn convex_hull_rational(points: &[RationalPoint]) -> Result<Polytope> {
    let uniq: BTreeSet<RationalPoint> = points.iter().cloned().collect();
    let pts: Vec<RationalPoint> = uniq.into_iter().collect();
    if pts.len() < 4 {
        return Err(PolytopeError::DegenerateInput(format!("need at least 4 distinct points, got {}", pts.len())));
    }
    // Scale to integers: hull combinatorics are invariant under scaling.
    let scale = denom_lcm(pts.iter().flat_map(|p| p.0.iter()));
    let ipts: Vec<[Int; 3]> = pts
        .iter()
        .map(|p| {
            let s = rat_int(&scale);
            let c = |r: &Rat| (r * &s).to_integer();
            [c(&p.0[0]), c(&p.0[1]), c(&p.0[2])]
        })
        .collect();

    let diffs: Vec<[Int; 3]> = ipts[1..].iter().map(|p| sub3(p, &ipts[0])).collect();
    let refs: Vec<&[Int; 3]> = diffs.iter().collect();
    if rank3(&refs) < 3 {
        return Err(PolytopeError::DegenerateInput("points do not span a 3-dimensional affine space".into()));
    }

    // Supporting planes, keyed by (primitive inward normal, scaled offset).
    let mut planes: BTreeSet<([Int; 3], Int)> = BTreeSet::new();
    let n = ipts.len();
    for i in 0..n {
        for j in i + 1..n {
            let a = sub3(&ipts[j], &ipts[i]);
            for k in j + 1..n {
                let b = sub3(&ipts[k], &ipts[i]);
                let nrm = cross(&a, &b);
                if nrm.iter().all(Zero::is_zero) {
                    continue;
                }
                let (nrm, _) = primitive(nrm);
                let base = dot_int(&nrm, &ipts[i]);
                let mut pos = false;
                let mut neg = false;
                for p in &ipts {
                    let s = dot_int(&nrm, p) - &base;
                    if s.is_positive() {
                        pos = true;
                    } else if s.is_negative() {
                        neg = true;
                    }
                    if pos && neg {
                        break;
                    }
                }
                if pos && neg {
                    continue;
                }
                let (nrm, base) = if neg { ([-&nrm[0], -&nrm[1], -&nrm[2]], -base) } else { (nrm, base) };
                // <nrm, p> >= base  <=>  <nrm, p> >= -offset with offset = -base.
                planes.insert((nrm, -base));
            }
        }
    }

    // Vertices: points lying on facets whose normals span R^3.
    let on_plane = |p: &[Int; 3], pl: &([Int; 3], Int)| (dot_int(&pl.0, p) + &pl.1).is_zero();
    let mut vertex_ids = Vec::new();
    for (idx, p) in ipts.iter().enumerate() {
        let normals: Vec<&[Int; 3]> = planes.iter().filter(|pl| on_plane(p, pl)).map(|pl| &pl.0).collect();
        if rank3(&normals) == 3 {
            vertex_ids.push(idx);
        }
    }
    let vertices: Vec<RationalPoint> = vertex_ids.iter().map(|&i| pts[i].clone()).collect();

    let scale_r = rat_int(&scale);
    let facets: Vec<Facet> = planes
        .iter()
        .map(|pl| {
            let vs: Vec<usize> =
                vertex_ids.iter().enumerate().filter(|(_, &pi)| on_plane(&ipts[pi], pl)).map(|(vi, _)| vi).collect();
            Facet {
                inequality: HalfSpace { normal: LatticePoint(pl.0.clone()), offset: rat_int(&pl.1) / &scale_r },
                vertices: vs,
            }
        })
        .collect();
    Ok(Polytope::from_parts(vertices, facets))
}

impl Polytope {
    /// Assemble from vertices (any order) and facets referencing them; derives edges.
    fn from_parts(vertices: Vec<RationalPoint>, facets: Vec<Facet>) -> Polytope {
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        let mut remap = vec![0usize; vertices.len()];
        for (new, &old) in order.iter().enumerate() {
            remap[old] = new;
        }
        let vertices: Vec<RationalPoint> = order.iter().map(|&i| vertices[i].clone()).collect();
        let mut facets: Vec<Facet> = facets
            .into_iter()
            .map(|f| {
                let mut vs: Vec<usize> = f.vertices.iter().map(|&v| remap[v]).collect();
                vs.sort_unstable();
                Facet { inequality: f.inequality, vertices: vs }
            })
            .collect();
        facets.sort_by(|a, b| a.inequality.cmp(&b.inequality));

        let mut edges = BTreeSet::new();
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                let common: Vec<usize> = facets[i]
                    .vertices
                    .iter()
                    .filter(|v| facets[j].vertices.binary_search(v).is_ok())
                    .copied()
                    .collect();
                if common.len() == 2 {
                    edges.insert([common[0], common[1]]);
                }
            }
        }
        Polytope { vertices, facets, edges: edges.into_iter().collect(), lattice_points: OnceLock::new() }
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Vertices as lattice points, when every vertex is integral.
    pub fn lattice_vertices(&self) -> Option<Vec<LatticePoint>> {
        self.vertices.iter().map(RationalPoint::to_lattice).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(RationalPoint::is_integral)
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn vertex_index(&self, p: &RationalPoint) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    pub fn edge_faces(&self) -> Vec<FaceRef> {
        self.edges.iter().map(|e| FaceRef { dim: 1, vertices: e.to_vec() }).collect()
    }

    pub fn facet_faces(&self) -> Vec<FaceRef> {
        self.facets.iter().map(|f| FaceRef { dim: 2, vertices: f.vertices.clone() }).collect()
    }

    /// Whole face lattice except the empty face and the polytope itself.
    pub fn faces(&self) -> Vec<FaceRef> {
        let mut out: Vec<FaceRef> = (0..self.vertices.len()).map(FaceRef::vertex).collect();
        out.extend(self.edge_faces());
        out.extend(self.facet_faces());
        out
    }

    pub fn contains_face(&self, face: &FaceRef) -> bool {
        match face.dim {
            0 => face.vertices.len() == 1 && face.vertices[0] < self.vertices.len(),
            1 => face.vertices.len() == 2 && self.edges.binary_search(&[face.vertices[0], face.vertices[1]]).is_ok(),
            2 => self.facets.iter().any(|f| f.vertices == face.vertices),
            _ => false,
        }
    }

    fn check_face(&self, face: &FaceRef) -> Result<()> {
        if self.contains_face(face) {
            Ok(())
        } else {
            Err(PolytopeError::NotAFace { dim: face.dim, vertices: face.vertices.clone() })
        }
    }

    /// Indices of the facets containing every vertex of `face`.
    pub fn facets_containing(&self, face: &FaceRef) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| face.vertices.iter().all(|v| f.vertices.binary_search(v).is_ok()))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn contains_rational(&self, x: &RationalPoint) -> bool {
        self.facets.iter().all(|f| !f.inequality.slack(x).is_negative())
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        self.facets.iter().all(|f| !f.inequality.slack_lattice(x).is_negative())
    }

    pub fn strictly_contains(&self, x: &LatticePoint) -> bool {
        self.facets.iter().all(|f| f.inequality.slack_lattice(x).is_positive())
    }

    pub fn origin_is_interior(&self) -> bool {
        self.facets.iter().all(|f| f.inequality.offset.is_positive())
    }

    /// Facets on which `x` is tight.
    pub fn tight_facets(&self, x: &LatticePoint) -> Vec<usize> {
        self.facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.inequality.slack_lattice(x).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// All lattice points, sorted lexicographically. Bounding-box scan.
    pub fn lattice_points(&self) -> &[LatticePoint] {
        self.lattice_points.get_or_init(|| {
            let lo: Vec<Int> =
                (0..3).map(|k| self.vertices.iter().map(|v| v.0[k].floor().to_integer()).min().unwrap()).collect();
            let hi: Vec<Int> =
                (0..3).map(|k| self.vertices.iter().map(|v| v.0[k].ceil().to_integer()).max().unwrap()).collect();
            let mut out = Vec::new();
            let mut x = lo[0].clone();
            while x <= hi[0] {
                let mut y = lo[1].clone();
                while y <= hi[1] {
                    let mut z = lo[2].clone();
                    while z <= hi[2] {
                        let p = LatticePoint([x.clone(), y.clone(), z.clone()]);
                        if self.contains(&p) {
                            out.push(p);
                        }
                        z += 1;
                    }
                    y += 1;
                }
                x += 1;
            }
            out
        })
    }

    pub fn interior_lattice_points(&self) -> Vec<LatticePoint> {
        self.lattice_points().iter().filter(|p| self.strictly_contains(p)).cloned().collect()
    }

    /// Lattice points in the closed face (l(F)).
    pub fn face_lattice_points(&self, face: &FaceRef) -> Vec<LatticePoint> {
        let containing = self.facets_containing(face);
        self.lattice_points()
            .iter()
            .filter(|p| containing.iter().all(|&f| self.facets[f].inequality.slack_lattice(p).is_zero()))
            .cloned()
            .collect()
    }

    /// Lattice points in the relative interior of the face (l*(F)).
    pub fn relative_interior_points(&self, face: &FaceRef) -> Vec<LatticePoint> {
        if face.dim == 0 {
            return Vec::new();
        }
        let containing = self.facets_containing(face);
        self.lattice_points().iter().filter(|p| self.tight_facets(p) == containing).cloned().collect()
    }

    /// l*(F): number of lattice points in the relative interior of `face`.
    pub fn count_interior(&self, face: &FaceRef) -> Result<usize> {
        self.check_face(face)?;
        Ok(self.relative_interior_points(face).len())
    }

    /// Lattice points lying on some edge (vertices included), sorted.
    pub fn edge_lattice_points(&self) -> Vec<LatticePoint> {
        let mut set = BTreeSet::new();
        for e in self.edge_faces() {
            set.extend(self.face_lattice_points(&e));
        }
        set.into_iter().collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.facets.len() as i64
    }
}

/// `{ y : <y, x> >= -1 for all x in p }`.
///
/// Dual vertices come from the facets of `p` (normal / offset), dual facets from
/// the vertices of `p`. Vertices stay rational; use [`Polytope::is_integral`]
/// to see whether the dual is a lattice polytope.
pub fn polar_dual(p: &Polytope) -> Result<Polytope> {
    if !p.origin_is_interior() {
        return Err(PolytopeError::OriginNotInterior);
    }
    let dual_vertices: Vec<RationalPoint> = p
        .facets
        .iter()
        .map(|f| {
            let c = &f.inequality.offset;
            let n = &f.inequality.normal.0;
            RationalPoint([rat_int(&n[0]) / c, rat_int(&n[1]) / c, rat_int(&n[2]) / c])
        })
        .collect();
    let dual_facets: Vec<Facet> = p
        .vertices
        .iter()
        .enumerate()
        .map(|(vi, v)| {
            let l = denom_lcm(v.0.iter());
            let lr = rat_int(&l);
            let w = [(&v.0[0] * &lr).to_integer(), (&v.0[1] * &lr).to_integer(), (&v.0[2] * &lr).to_integer()];
            let (normal, g) = primitive(w);
            let offset = Rat::new(l, g);
            let vertices = p
                .facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.vertices.binary_search(&vi).is_ok())
                .map(|(fi, _)| fi)
                .collect();
            Facet { inequality: HalfSpace { normal: LatticePoint(normal), offset }, vertices }
        })
        .collect();
    Ok(Polytope::from_parts(dual_vertices, dual_facets))
}

/// Origin is the only interior lattice point and the polar dual is integral.
pub fn is_reflexive(p: &Polytope) -> bool {
    if !p.is_integral() || !p.origin_is_interior() {
        return false;
    }
    let interior = p.interior_lattice_points();
    if interior.len() != 1 || !interior[0].is_origin() {
        return false;
    }
    match polar_dual(p) {
        Ok(d) => d.is_integral(),
        Err(_) => false,
    }
}

/// The face of `p_dual` polar to `face`: `{ y in p_dual : <y, x> = -1 for all x in face }`.
pub fn dual_face(face: &FaceRef, p: &Polytope, p_dual: &Polytope) -> Result<FaceRef> {
    p.check_face(face)?;
    let mut vs: Vec<usize> = p
        .facets_containing(face)
        .into_iter()
        .map(|fi| {
            let f = &p.facets[fi].inequality;
            let c = &f.offset;
            let n = &f.normal.0;
            let y = RationalPoint([rat_int(&n[0]) / c, rat_int(&n[1]) / c, rat_int(&n[2]) / c]);
            p_dual.vertex_index(&y).ok_or_else(|| PolytopeError::NotAFace { dim: 2 - face.dim, vertices: Vec::new() })
        })
        .collect::<Result<_>>()?;
    vs.sort_unstable();
    let out = FaceRef { dim: 2 - face.dim, vertices: vs };
    p_dual.check_face(&out)?;
    Ok(out)
}

/// Map from lattice point to the lowest-dimensional face containing it in its
/// relative interior (vertex / edge / facet), or `None` for interior points.
pub fn carrier_faces(p: &Polytope) -> BTreeMap<LatticePoint, Option<FaceRef>> {
    let faces = p.faces();
    let mut out = BTreeMap::new();
    for pt in p.lattice_points() {
        let tight = p.tight_facets(pt);
        let carrier =
            if tight.is_empty() { None } else { faces.iter().find(|f| p.facets_containing(f) == tight).cloned() };
        out.insert(pt.clone(), carrier);
    }
    out
}

/// Exact integer interior count on a segment between two lattice points.
pub fn segment_interior_count(a: &LatticePoint, b: &LatticePoint) -> Int {
    let d = a.sub(b);
    let g = gcd_all(d.0.iter());
    if g.is_zero() {
        Int::zero()
    } else {
        g - Int::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: &[[i64; 3]]) -> Vec<LatticePoint> {
        v.iter().map(|c| LatticePoint::new(c[0], c[1], c[2])).collect()
    }

    #[test]
    fn hull_drops_interior_and_duplicate_points() {
        let pts = lp(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0]]);
        let p = convex_hull(&pts).unwrap();
        assert_eq!(p.vertices().len(), 4);
        let pts = lp(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1], [0, 0, 0]]);
        let p = convex_hull(&pts).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert!(p.vertex_index(&LatticePoint::origin().to_rational()).is_none());
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let flat = lp(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        assert!(matches!(convex_hull(&flat), Err(PolytopeError::DegenerateInput(_))));
        let few = lp(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
        assert!(matches!(convex_hull(&few), Err(PolytopeError::DegenerateInput(_))));
    }

    #[test]
    fn simplex_dual_is_integral() {
        let p = convex_hull(&lp(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]])).unwrap();
        assert!(is_reflexive(&p));
        let d = polar_dual(&p).unwrap();
        assert!(d.is_integral());
        let expect: BTreeSet<LatticePoint> =
            lp(&[[-1, -1, -1], [-1, -1, 3], [-1, 3, -1], [3, -1, -1]]).into_iter().collect();
        let got: BTreeSet<LatticePoint> = d.lattice_vertices().unwrap().into_iter().collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn scaled_simplex_is_not_reflexive() {
        let p = convex_hull(&lp(&[[2, 0, 0], [0, 2, 0], [0, 0, 2], [-2, -2, -2]])).unwrap();
        assert!(p.interior_lattice_points().len() > 1);
        assert!(!is_reflexive(&p));
    }

    #[test]
    fn origin_outside_has_no_dual() {
        let p = convex_hull(&lp(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap();
        assert_eq!(polar_dual(&p).unwrap_err(), PolytopeError::OriginNotInterior);
    }

    #[test]
    fn square_pyramid_dual_is_rational() {
        // Apex (0,0,1), base square at z = -2: dual has non-integral vertices.
        let p = convex_hull(&lp(&[[1, 1, -2], [1, -1, -2], [-1, 1, -2], [-1, -1, -2], [0, 0, 1]])).unwrap();
        let d = polar_dual(&p).unwrap();
        assert!(!d.is_integral());
        assert!(d.vertices().iter().any(|v| v.0[2] == Rat::new(int(1), int(2))));
        assert!(!is_reflexive(&p));
    }

    #[test]
    fn not_a_face_is_reported() {
        let p = convex_hull(&lp(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]])).unwrap();
        let bogus = FaceRef { dim: 1, vertices: vec![0, 7] };
        let d = polar_dual(&p).unwrap();
        assert!(matches!(dual_face(&bogus, &p, &d), Err(PolytopeError::NotAFace { .. })));
        assert!(matches!(p.count_interior(&bogus), Err(PolytopeError::NotAFace { .. })));
    }

    #[test]
    fn segment_gcd_count() {
        let a = LatticePoint::new(3, 4, 6);
        let b = LatticePoint::new(0, 1, 0);
        assert_eq!(segment_interior_count(&a, &b), int(2));
    }
}
