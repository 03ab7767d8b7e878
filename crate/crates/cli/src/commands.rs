//! Command implementations. Each returns a JSON document for stdout and a
//! short summary for stderr.

use std::path::Path;

use k3toric::arith::{fmt_rat, Int};
use k3toric::curve::{classify_curve, CurveError, ProjPoint, SingularPointReport};
use k3toric::fixtures::reference_labeling;
use k3toric::io::{read_text, CurveFile, GramFile, InputError, PolytopeFile};
use k3toric::lattice::{check_duality, invariants, recognize, DualityReport, GramMatrix, IntMatrix, LatticeError};
use k3toric::picard::{
    build_intersection_graph_labeled, picard_gram, picard_rank, rank_l0, IntersectionGraph, PicardError, SourceKind,
};
use k3toric::polytope::{is_reflexive, polar_dual, LatticePoint, Polytope, PolytopeError, RationalPoint};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<PolytopeError> for CliError {
    fn from(e: PolytopeError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<PicardError> for CliError {
    fn from(e: PicardError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        CliError::Compute(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

pub struct Output {
    pub doc: Value,
    pub summary: String,
}

fn with_path(path: &Path, e: InputError) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn load_polytope(path: &Path) -> Result<Polytope> {
    let file = read_text(path).and_then(|t| PolytopeFile::parse(&t)).map_err(|e| with_path(path, e))?;
    file.polytope().map_err(|e| with_path(path, e))
}

fn load_gram(path: &Path) -> Result<GramMatrix> {
    let file = read_text(path).and_then(|t| GramFile::parse(&t)).map_err(|e| with_path(path, e))?;
    file.gram().map_err(|e| with_path(path, e))
}

fn int_json(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(int_json).collect())).collect())
}

fn point_json(p: &LatticePoint) -> Value {
    Value::Array(p.0.iter().map(int_json).collect())
}

fn points_json(ps: &[LatticePoint]) -> Value {
    Value::Array(ps.iter().map(point_json).collect())
}

/// Integral coordinates as numbers, otherwise every coordinate as a `"p/q"` string.
fn rational_point_json(p: &RationalPoint) -> Value {
    match p.to_lattice() {
        Some(l) => point_json(&l),
        None => Value::Array(p.0.iter().map(|c| json!(fmt_rat(c))).collect()),
    }
}

fn sorted_vertices(p: &Polytope) -> Vec<RationalPoint> {
    let mut v = p.vertices().to_vec();
    v.sort();
    v
}

pub fn polytope_dual(path: &Path) -> Result<Output> {
    let p = load_polytope(path)?;
    let d = polar_dual(&p)?;
    let vertices = sorted_vertices(&d);
    let integral = d.is_integral();
    let non_integral: Vec<Value> = vertices.iter().filter(|v| !v.is_integral()).map(rational_point_json).collect();
    let summary = if integral {
        format!("dual: {} vertices, integral", vertices.len())
    } else {
        format!("dual: {} vertices, {} non-integral", vertices.len(), non_integral.len())
    };
    let doc = json!({
        "vertices": vertices.iter().map(rational_point_json).collect::<Vec<_>>(),
        "integral": integral,
        "non_integral_vertices": non_integral,
        "facets": d.facets().len(),
    });
    Ok(Output { doc, summary })
}

pub fn polytope_reflexive(path: &Path) -> Result<Output> {
    let p = load_polytope(path)?;
    let reflexive = is_reflexive(&p);
    let dual_integral = polar_dual(&p).map(|d| d.is_integral()).ok();
    let doc = json!({
        "reflexive": reflexive,
        "origin_interior": p.origin_is_interior(),
        "dual_integral": dual_integral,
    });
    let summary = format!("reflexive: {reflexive}");
    Ok(Output { doc, summary })
}

pub fn polytope_points(path: &Path) -> Result<Output> {
    let p = load_polytope(path)?;
    let all = p.lattice_points();
    let interior = p.interior_lattice_points();
    let doc = json!({
        "count": all.len(),
        "interior_count": interior.len(),
        "boundary_count": all.len() - interior.len(),
        "points": points_json(all),
        "interior": points_json(&interior),
    });
    let summary = format!("{} lattice points, {} interior", all.len(), interior.len());
    Ok(Output { doc, summary })
}

fn recognition_json(g: &GramMatrix) -> Value {
    let r = recognize(g);
    json!({
        "level": r.level.to_string(),
        "name": r.name.as_ref().map(|n| n.to_string()),
        "witness": r.witness.as_ref().map(|w| matrix_json(&w.p)),
        "candidates": r.candidates.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
    })
}

/// The intersection graph, with reference labels for the reference polytopes.
fn graph_of(p: &Polytope) -> Result<(IntersectionGraph, Option<&'static str>)> {
    let reference = reference_labeling(p);
    let graph = build_intersection_graph_labeled(p, reference.as_ref().map(|r| &r.1))?;
    Ok((graph, reference.map(|r| r.0)))
}

pub fn k3_picard(path: &Path) -> Result<Output> {
    let p = load_polytope(path)?;
    let (graph, reference) = graph_of(&p)?;
    let basis = picard_gram(&graph, &p)?;
    let rho = picard_rank(&p)?;
    let rho_dual = picard_rank(&polar_dual(&p)?)?;
    let nodes: Vec<Value> = graph
        .nodes
        .iter()
        .map(|n| {
            json!({
                "label": n.label,
                "source": point_json(&n.source),
                "kind": match n.kind {
                    SourceKind::Vertex => "vertex",
                    SourceKind::EdgeInterior => "edge-interior",
                },
                "component": n.component_index,
                "self_intersection": n.self_int,
            })
        })
        .collect();
    let recognition = recognition_json(&basis.gram);
    let mut summary = format!(
        "rank L0 = {}, rho = {rho}, rho* = {rho_dual}, basis {}, lattice {}",
        rank_l0(&p)?,
        basis.labels.join(" "),
        recognition["name"].as_str().unwrap_or("unrecognized"),
    );
    if let Some(name) = reference {
        summary.push_str(&format!(" (labels of {name})"));
    }
    let doc = json!({
        "reference": reference,
        "nodes": nodes,
        "intersection_matrix": matrix_json(&graph.gram_full),
        "relations": graph.relations,
        "basis": basis.labels,
        "gram": matrix_json(basis.gram.matrix()),
        "rank_l0": rank_l0(&p)?,
        "rho": rho,
        "rho_dual": rho_dual,
        "rho_sum": rho + rho_dual,
        "recognition": recognition,
    });
    Ok(Output { doc, summary })
}

fn duality_json(r: &DualityReport) -> Value {
    json!({
        "rank_s": r.rank_s,
        "rank_t_prime": r.rank_t_prime,
        "rank_ok": r.rank_ok,
        "signature_s": [r.signature_s.0, r.signature_s.1],
        "signature_t_prime": [r.signature_t_prime.0, r.signature_t_prime.1],
        "signature_ok": r.signature_ok,
        "disc_anti_isometric": r.disc_anti_isometric,
        "anti_isometry": r.anti_isometry.as_ref().map(|m| {
            m.iter().map(|row| row.iter().map(int_json).collect::<Vec<_>>()).collect::<Vec<_>>()
        }),
        "criterion_holds": r.criterion_holds(),
        "all_pass": r.all_pass(),
        "failed_stage": r.failed_stage(),
        "notes": r.notes,
    })
}

fn duality_summary(r: &DualityReport) -> String {
    match r.failed_stage() {
        None => format!("duality holds: rank {} + {} = 22", r.rank_s, r.rank_t_prime),
        Some(stage) => format!("duality fails at {stage}: rank {} + {}", r.rank_s, r.rank_t_prime),
    }
}

/// Picard lattices of two polytopes compared by [`check_duality`].
pub fn k3_duality(s: &Path, t: &Path) -> Result<Output> {
    let gram = |path: &Path| -> Result<GramMatrix> {
        let p = load_polytope(path)?;
        Ok(picard_gram(&graph_of(&p)?.0, &p)?.gram)
    };
    let (gs, gt) = (gram(s)?, gram(t)?);
    let r = check_duality(&gs, &gt);
    let mut doc = duality_json(&r);
    doc["gram_s"] = matrix_json(gs.matrix());
    doc["gram_t"] = matrix_json(gt.matrix());
    Ok(Output { summary: duality_summary(&r), doc })
}

pub fn lattice_duality(s: &Path, t: &Path) -> Result<Output> {
    let r = check_duality(&load_gram(s)?, &load_gram(t)?);
    Ok(Output { summary: duality_summary(&r), doc: duality_json(&r) })
}

pub fn lattice_invariants(path: &Path) -> Result<Output> {
    let g = load_gram(path)?;
    let inv = invariants(&g)?;
    let form = &inv.disc_form;
    let rats = |v: &[k3toric::Rat]| v.iter().map(fmt_rat).collect::<Vec<_>>();
    let doc = json!({
        "rank": inv.rank,
        "signature": [inv.signature.0, inv.signature.1],
        "determinant": int_json(&inv.determinant),
        "even": g.is_even(),
        "disc_group": inv.disc_group.iter().map(int_json).collect::<Vec<_>>(),
        "disc_form": {
            "generators": form.generators.iter().map(|x| x.iter().map(int_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "q": rats(&form.q),
            "b": form.b.iter().map(|row| rats(row)).collect::<Vec<_>>(),
        },
    });
    let group: Vec<String> = inv.disc_group.iter().map(|d| format!("Z/{d}")).collect();
    let summary = format!(
        "rank {}, signature ({}, {}), det {}, discriminant group {}",
        inv.rank,
        inv.signature.0,
        inv.signature.1,
        inv.determinant,
        if group.is_empty() { "0".to_string() } else { group.join("+") },
    );
    Ok(Output { doc, summary })
}

pub fn lattice_recognize(path: &Path) -> Result<Output> {
    let g = load_gram(path)?;
    if g.is_degenerate() {
        return Err(LatticeError::Degenerate.into());
    }
    let doc = recognition_json(&g);
    let summary = match doc["name"].as_str() {
        Some(name) => format!("{name} ({})", doc["level"].as_str().unwrap_or_default()),
        None => "not recognized".to_string(),
    };
    Ok(Output { doc, summary })
}

fn proj_point_json(p: &ProjPoint) -> Value {
    Value::Array(p.coords().iter().map(|c| json!(fmt_rat(c))).collect())
}

fn point_report_json(r: &SingularPointReport) -> Value {
    json!({
        "point": proj_point_json(&r.point),
        "type": r.ade_type.to_string(),
        "milnor": r.milnor,
        "hessian_corank": r.hessian_corank,
    })
}

pub fn curve_classify(path: &Path, grid: i64) -> Result<Output> {
    let file = read_text(path).and_then(|t| CurveFile::parse(&t)).map_err(|e| with_path(path, e))?;
    let curve = file.curve().map_err(|e| with_path(path, e))?;
    let points = file.proj_points().map_err(|e| with_path(path, e))?;
    let k = classify_curve(&curve, &points, grid)?;
    let stated: Vec<Value> = k
        .stated
        .iter()
        .map(|(p, r)| match r {
            Ok(r) => point_report_json(r),
            Err(e) => json!({ "point": proj_point_json(p), "error": e.to_string() }),
        })
        .collect();
    let configuration = k.configuration();
    let doc = json!({
        "f": curve.f.to_string(),
        "stated": stated,
        "singular_points": k.singular_points.iter().map(point_report_json).collect::<Vec<_>>(),
        "configuration": configuration,
        "grid_radius": grid,
        "conic_cubic": {
            "distinct_points": k.intersection.distinct_points,
            "transversal": k.intersection.transversal,
        },
    });
    let rejected = k.stated.iter().filter(|(_, r)| r.is_err()).count();
    let mut summary = format!(
        "configuration {}, conic and cubic meet in {} points{}",
        if configuration.is_empty() { "(none)" } else { &configuration },
        k.intersection.distinct_points,
        if k.six_transversal() { " transversally" } else { "" },
    );
    if rejected > 0 {
        summary.push_str(&format!(", {rejected} stated point(s) rejected"));
    }
    Ok(Output { doc, summary })
}
