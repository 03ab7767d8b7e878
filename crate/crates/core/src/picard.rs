//! Divisor intersection graphs on a generic anticanonical K3 section of the
//! toric Fano threefold of a reflexive polytope, and the resulting Picard
//! lattice.
//!
//! Nodes come from the lattice points of the dual polytope that lie on its
//! vertices or edges. A vertex gives one divisor with self-intersection
//! `2 l*(F) - 2` (`F` its dual facet). A point inside an edge `Γ*` whose dual
//! edge is `Γ` gives `l*(Γ) + 1` disjoint `(-2)`-curves, and the points of
//! `Γ*` form that many parallel chains between the two end vertices.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{to_i64, Int};
use crate::lattice::{GramMatrix, IntMatrix};
use crate::polytope::{dual_face, is_reflexive, polar_dual, FaceRef, LatticePoint, Polytope, PolytopeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PicardError {
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("Picard rank {0} outside [1, 20]")]
    RankOutOfRange(i64),
    #[error("independent divisor classes: {basis}, rank formula: {formula}")]
    RankMismatch { basis: usize, formula: usize },
    #[error("no three nodes with unimodular source vectors")]
    NoUnimodularTriple,
    #[error("labeling: {0}")]
    Labeling(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

pub type Result<T> = std::result::Result<T, PicardError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceKind {
    Vertex,
    EdgeInterior,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorNode {
    /// Lattice point of the dual polytope generating the ray.
    pub source: LatticePoint,
    pub kind: SourceKind,
    /// 0 for an unsplit divisor; 0..k for the components of a split one.
    pub component_index: usize,
    pub self_int: i64,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    pub nodes: Vec<DivisorNode>,
    /// Intersection numbers among all nodes. Degenerate in general.
    pub gram_full: IntMatrix,
    /// `relations[j][i] = <source_i, e_j>`.
    pub relations: [Vec<i64>; 3],
}

impl IntersectionGraph {
    pub fn self_intersections(&self) -> Vec<i64> {
        self.nodes.iter().map(|n| n.self_int).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.nodes.iter().map(|n| n.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.label == label)
    }

    pub fn intersection(&self, a: &str, b: &str) -> Option<Int> {
        Some(self.gram_full[(self.index_of(a)?, self.index_of(b)?)].clone())
    }

    /// `gram_full * r = 0` for each relation vector.
    pub fn relations_in_radical(&self) -> bool {
        self.relations.iter().all(|r| {
            let rv: Vec<Int> = r.iter().map(|&c| Int::from(c)).collect();
            self.gram_full.mul_vec(&rv).iter().all(Zero::is_zero)
        })
    }
}

/// Names for the divisors, in the order they should appear. Each source point
/// carries either one name (extra components get primes appended) or one
/// name per component.
#[derive(Clone, Debug, Default)]
pub struct Labeling {
    pub entries: Vec<(LatticePoint, Vec<String>)>,
}

impl Labeling {
    pub fn new(entries: Vec<(LatticePoint, Vec<String>)>) -> Self {
        Labeling { entries }
    }

    /// `prefix1, prefix2, ...` for the given points in order.
    pub fn numbered(prefix: &str, points: &[[i64; 3]]) -> Self {
        Labeling {
            entries: points
                .iter()
                .enumerate()
                .map(|(i, p)| (LatticePoint::new(p[0], p[1], p[2]), vec![format!("{prefix}{}", i + 1)]))
                .collect(),
        }
    }

    fn component_name(names: &[String], c: usize) -> String {
        match names.get(c) {
            Some(n) => n.clone(),
            None => format!("{}{}", names[0], "'".repeat(c)),
        }
    }
}

/// `sum over edges Γ of l*(Γ) l*(Γ*)`.
pub fn rank_l0(delta: &Polytope) -> Result<usize> {
    if !is_reflexive(delta) {
        return Err(PicardError::NotReflexive);
    }
    let dual = polar_dual(delta)?;
    let mut total = 0;
    for e in delta.edge_faces() {
        let de = dual_face(&e, delta, &dual)?;
        total += delta.count_interior(&e)? * dual.count_interior(&de)?;
    }
    Ok(total)
}

/// Number of distinct lattice points of the dual polytope on its edges,
/// plus `rank L0`, minus 3.
pub fn picard_rank(delta: &Polytope) -> Result<usize> {
    let l0 = rank_l0(delta)?;
    let dual = polar_dual(delta)?;
    let rho = dual.edge_lattice_points().len() as i64 + l0 as i64 - 3;
    if !(1..=20).contains(&rho) {
        return Err(PicardError::RankOutOfRange(rho));
    }
    Ok(rho as usize)
}

/// `sum over edges Γ* of the dual of l(Γ*)`, with shared vertices counted
/// once per incident edge.
pub fn edge_point_incidences(delta: &Polytope) -> Result<usize> {
    let dual = polar_dual(delta)?;
    Ok(dual.edge_faces().iter().map(|e| dual.face_lattice_points(e).len()).sum())
}

pub fn build_intersection_graph(delta: &Polytope) -> Result<IntersectionGraph> {
    build_intersection_graph_labeled(delta, None)
}

pub fn build_intersection_graph_labeled(delta: &Polytope, labeling: Option<&Labeling>) -> Result<IntersectionGraph> {
    if !is_reflexive(delta) {
        return Err(PicardError::NotReflexive);
    }
    let dual = polar_dual(delta)?;
    let back = polar_dual(&dual)?;
    let dual_vertices = dual.lattice_vertices().expect("reflexive dual is integral");

    // Sources in default order: dual vertices, then edge-interior points by edge.
    struct Source {
        point: LatticePoint,
        kind: SourceKind,
        self_int: i64,
        components: usize,
    }
    let mut sources: Vec<Source> = Vec::new();
    for (vi, v) in dual_vertices.iter().enumerate() {
        let facet = dual_face(&FaceRef::vertex(vi), &dual, &back)?;
        let l = back.count_interior(&facet)? as i64;
        sources.push(Source { point: v.clone(), kind: SourceKind::Vertex, self_int: 2 * l - 2, components: 1 });
    }
    // Per dual edge: end vertices, ordered interior points, multiplicity k.
    let mut chains: Vec<(usize, usize, Vec<LatticePoint>, usize)> = Vec::new();
    for e in dual.edge_faces() {
        let (a, b) = (e.vertices[0], e.vertices[1]);
        let gamma = dual_face(&e, &dual, &back)?;
        let k = back.count_interior(&gamma)? + 1;
        let dir = dual_vertices[b].sub(&dual_vertices[a]);
        let mut inner = dual.relative_interior_points(&e);
        inner.sort_by_key(|p| p.sub(&dual_vertices[a]).dot(&dir));
        for p in &inner {
            sources.push(Source { point: p.clone(), kind: SourceKind::EdgeInterior, self_int: -2, components: k });
        }
        chains.push((a, b, inner, k));
    }

    // Order and name the sources.
    let order: Vec<(usize, Vec<String>)> = match labeling {
        None => sources.iter().enumerate().map(|(i, _)| (i, vec![format!("D{}", i + 1)])).collect(),
        Some(lab) => {
            if lab.entries.len() != sources.len() {
                return Err(PicardError::Labeling(format!(
                    "{} labels for {} divisor sources",
                    lab.entries.len(),
                    sources.len()
                )));
            }
            lab.entries
                .iter()
                .map(|(p, names)| {
                    sources
                        .iter()
                        .position(|s| &s.point == p)
                        .filter(|_| !names.is_empty())
                        .map(|i| (i, names.clone()))
                        .ok_or_else(|| PicardError::Labeling(format!("{p} is not a divisor source")))
                })
                .collect::<Result<_>>()?
        }
    };

    let mut nodes = Vec::new();
    let mut node_of: BTreeMap<(LatticePoint, usize), usize> = BTreeMap::new();
    for (si, names) in &order {
        let s = &sources[*si];
        for c in 0..s.components {
            node_of.insert((s.point.clone(), c), nodes.len());
            nodes.push(DivisorNode {
                source: s.point.clone(),
                kind: s.kind,
                component_index: c,
                self_int: s.self_int,
                label: Labeling::component_name(names, c),
            });
        }
    }

    let n = nodes.len();
    let mut gram = IntMatrix::zeros(n, n);
    for (i, node) in nodes.iter().enumerate() {
        gram[(i, i)] = Int::from(node.self_int);
    }
    let add = |g: &mut IntMatrix, i: usize, j: usize, v: i64| {
        g[(i, j)] += v;
        g[(j, i)] += v;
    };
    for (a, b, inner, k) in &chains {
        let na = node_of[&(dual_vertices[*a].clone(), 0)];
        let nb = node_of[&(dual_vertices[*b].clone(), 0)];
        if inner.is_empty() {
            add(&mut gram, na, nb, *k as i64);
            continue;
        }
        for c in 0..*k {
            let mut path = vec![na];
            path.extend(inner.iter().map(|p| node_of[&(p.clone(), c)]));
            path.push(nb);
            for w in path.windows(2) {
                add(&mut gram, w[0], w[1], 1);
            }
        }
    }

    let relations =
        [0, 1, 2].map(|j| nodes.iter().map(|nd| to_i64(&nd.source.0[j]).expect("small coordinates")).collect());
    Ok(IntersectionGraph { nodes, gram_full: gram, relations })
}

#[derive(Clone, Debug)]
pub struct PicardBasis {
    pub node_indices: Vec<usize>,
    pub labels: Vec<String>,
    /// Nodes eliminated through the three relations.
    pub dropped: Vec<usize>,
    pub gram: GramMatrix,
}

fn triple_det(g: &IntersectionGraph, t: [usize; 3]) -> Int {
    let rows: Vec<Vec<Int>> = t.iter().map(|&i| g.nodes[i].source.0.to_vec()).collect();
    IntMatrix::from_rows(rows).det()
}

/// Choose three nodes whose source vectors form a basis of the lattice; the
/// relations then express each of them through the others, and the remaining
/// nodes form a basis of the Picard lattice. The first three nodes are tried,
/// then the last three, then all triples in lexicographic order.
pub fn picard_gram(g: &IntersectionGraph, delta: &Polytope) -> Result<PicardBasis> {
    let n = g.nodes.len();
    if n < 4 {
        return Err(PicardError::NoUnimodularTriple);
    }
    let mut tries = vec![[0, 1, 2], [n - 3, n - 2, n - 1]];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                tries.push([a, b, c]);
            }
        }
    }
    let drop =
        tries.into_iter().find(|t| triple_det(g, *t).abs() == Int::from(1)).ok_or(PicardError::NoUnimodularTriple)?;
    let keep: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
    let formula = picard_rank(delta)?;
    if keep.len() != formula {
        return Err(PicardError::RankMismatch { basis: keep.len(), formula });
    }
    let gram = GramMatrix::new(g.gram_full.submatrix(&keep, &keep)).expect("symmetric");
    Ok(PicardBasis {
        labels: keep.iter().map(|&i| g.nodes[i].label.clone()).collect(),
        node_indices: keep,
        dropped: drop.to_vec(),
        gram,
    })
}
