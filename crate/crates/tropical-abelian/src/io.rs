//! JSON file formats. Rationals are `"p/q"` strings and big integers are
//! decimal strings, so every value round-trips exactly.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::curve::{CurveGraph, Edge, Mark, MarkedCurve, ParamCurve};
use crate::enumerate::{InvariantTable, Solution, SolutionSet};
use crate::exactmath::{format_rational, parse_rational, LaurentHalf, Rational};
use crate::lifting::PlanarCurve;
use crate::multiplicity::MultiplicityReport;
use crate::plane::{IVec, Point};
use crate::torus::{CurveClass, TorusPoint, TropicalTorus};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TorusFile {
    period: [[String; 2]; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    class: Option<[[i64; 2]; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    tail: usize,
    head: usize,
    weight: i64,
    primitive_slope: IVec,
    length: String,
    winding: IVec,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MarkFile {
    edge: usize,
    t: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveFile {
    torus: TorusFile,
    vertices: BTreeMap<usize, [String; 2]>,
    edges: Vec<EdgeFile>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    marks: Vec<MarkFile>,
}

fn fmt_pair(p: &Point) -> [String; 2] {
    [format_rational(&p[0]), format_rational(&p[1])]
}

fn parse_pair(p: &[String; 2]) -> Result<Point> {
    Ok([parse_rational(&p[0])?, parse_rational(&p[1])?])
}

fn torus_to_file(t: &TropicalTorus, class: Option<&CurveClass>) -> TorusFile {
    TorusFile { period: t.period().clone().map(|r| r.map(|x| format_rational(&x))), class: class.map(|c| c.m) }
}

fn torus_from_file(f: &TorusFile) -> Result<TropicalTorus> {
    let row = |r: &[String; 2]| -> Result<[Rational; 2]> { Ok([parse_rational(&r[0])?, parse_rational(&r[1])?]) };
    let s = [row(&f.period[0])?, row(&f.period[1])?];
    TropicalTorus::new(s).map_err(|e| Error::Parse(e.to_string()))
}

/// Torus and optional class from `{"period": [["p/q", ..], ..], "class": [[a, b], [c, d]]}`.
pub fn parse_torus(text: &str) -> Result<(TropicalTorus, Option<CurveClass>)> {
    let f: TorusFile = serde_json::from_str(text)?;
    Ok((torus_from_file(&f)?, f.class.map(CurveClass::new)))
}

pub fn torus_to_json(t: &TropicalTorus, class: Option<&CurveClass>) -> String {
    pretty(&torus_to_file(t, class))
}

/// `"a,b,c,d"` is the row-major matrix `[[a, b], [c, d]]`.
pub fn parse_class(s: &str) -> Result<CurveClass> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad class entry {x:?}"))))
        .collect::<Result<_>>()?;
    let flat: [i64; 4] = v.try_into().map_err(|_| Error::Parse("a class has four entries".into()))?;
    Ok(CurveClass::from_flat(flat))
}

pub fn parse_curve(text: &str) -> Result<MarkedCurve> {
    let f: CurveFile = serde_json::from_str(text)?;
    let torus = torus_from_file(&f.torus)?;
    let n = f.vertices.len();
    if f.vertices.keys().copied().ne(0..n) {
        return Err(Error::Parse("vertex ids must be 0..n".into()));
    }
    let positions = f
        .vertices
        .values()
        .map(|p| TorusPoint::new(parse_pair(p)?).map_err(|e| Error::Parse(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::with_capacity(f.edges.len());
    for (i, e) in f.edges.iter().enumerate() {
        if e.tail >= n || e.head >= n {
            return Err(Error::Parse(format!("edge {i} references a missing vertex")));
        }
        edges.push(Edge {
            tail: e.tail,
            head: e.head,
            weight: e.weight,
            primitive_slope: e.primitive_slope,
            length: parse_rational(&e.length)?,
            winding: e.winding,
        });
    }
    let marks =
        f.marks.iter().map(|m| Ok(Mark { edge: m.edge, t: parse_rational(&m.t)? })).collect::<Result<Vec<_>>>()?;
    let curve = ParamCurve { torus, graph: CurveGraph { num_vertices: n, edges }, positions };
    Ok(MarkedCurve { curve, marks })
}

pub fn curve_to_json(mc: &MarkedCurve) -> String {
    let c = &mc.curve;
    let f = CurveFile {
        torus: torus_to_file(&c.torus, None),
        vertices: c.positions.iter().enumerate().map(|(i, p)| (i, fmt_pair(p.coords()))).collect(),
        edges: c
            .edges()
            .iter()
            .map(|e| EdgeFile {
                tail: e.tail,
                head: e.head,
                weight: e.weight,
                primitive_slope: e.primitive_slope,
                length: format_rational(&e.length),
                winding: e.winding,
            })
            .collect(),
        marks: mc.marks.iter().map(|m| MarkFile { edge: m.edge, t: format_rational(&m.t) }).collect(),
    };
    pretty(&f)
}

pub fn read_curve(path: &Path) -> Result<MarkedCurve> {
    parse_curve(&std::fs::read_to_string(path)?)
}

pub fn write_curve(path: &Path, mc: &MarkedCurve) -> Result<()> {
    Ok(std::fs::write(path, curve_to_json(mc))?)
}

/// `{"terms": {"<doubled exponent>": "<coefficient>"}, "pretty": ".."}`.
pub fn laurent_value(p: &LaurentHalf) -> Value {
    let terms: serde_json::Map<String, Value> =
        p.terms().map(|(e, c)| (e.to_string(), Value::String(c.to_string()))).collect();
    json!({ "terms": terms, "pretty": p.to_string() })
}

pub fn parse_laurent(v: &Value) -> Result<LaurentHalf> {
    let bad = || Error::Parse("malformed Laurent polynomial".into());
    let terms = v.get("terms").and_then(Value::as_object).ok_or_else(bad)?;
    let mut out = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        let e: i64 = e.parse().map_err(|_| bad())?;
        let c: BigInt = c.as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        out.push((e, c));
    }
    Ok(LaurentHalf::from_terms(out))
}

/// Positions in N coordinates, bounded edges, and ends with their pairing.
pub fn planar_curve_value(pc: &PlanarCurve) -> Value {
    json!({
        "positions": pc.positions.iter().map(fmt_pair).collect::<Vec<_>>(),
        "edges": pc.edges.iter().map(|e| json!({
            "source": e.source,
            "tail": e.tail,
            "head": e.head,
            "weight": e.weight,
            "primitive_slope": e.primitive_slope,
            "length": format_rational(&e.length),
        })).collect::<Vec<_>>(),
        "ends": pc.ends.iter().map(|e| json!({
            "vertex": e.vertex,
            "slope": e.slope,
            "base": fmt_pair(&e.base),
            "partner": e.partner,
            "source": e.source,
        })).collect::<Vec<_>>(),
    })
}

pub fn report_value(r: &MultiplicityReport) -> Value {
    let theta = r.theta.as_ref().map(|t| {
        json!({
            "torsion": t.torsion.to_string(),
            "torsion_by_minors": t.torsion_by_minors.to_string(),
            "weight_product": t.weight_product,
            "by_theta": t.by_theta.to_string(),
            "by_product": t.by_product,
            "agrees": t.agrees(),
        })
    });
    json!({
        "vertex_multiplicities": r.vertex_multiplicities,
        "classical": r.classical,
        "refined": laurent_value(&r.refined),
        "gcd": r.gcd,
        "complex_by_product": r.complex_by_product,
        "parity_ok": r.parity_ok,
        "theta": theta,
    })
}

/// File name of solution `i` inside an output directory.
pub fn solution_file_name(i: usize) -> String {
    format!("solution_{i:03}.json")
}

fn solution_value(i: usize, s: &Solution) -> Value {
    json!({
        "file": solution_file_name(i),
        "shape": s.shape,
        "gcd": s.gcd,
        "vertex_multiplicity": s.vertex_multiplicity,
        "classical": s.classical,
        "complex": s.complex(),
        "refined": laurent_value(&s.refined),
        "automorphisms": s.automorphisms,
        "marks": s.marked.marks.iter().map(|m| json!({"edge": m.edge, "t": format_rational(&m.t)})).collect::<Vec<_>>(),
    })
}

pub fn solution_set_value(set: &SolutionSet) -> Value {
    let c = &set.certificate;
    json!({
        "torus": torus_to_file(&set.torus, None).period,
        "class": set.class.m,
        "genus": set.genus,
        "points": set.points.iter().map(|p| fmt_pair(p.coords())).collect::<Vec<_>>(),
        "bound": set.bound,
        "certified_bound": set.certified_bound,
        "shapes": set.shapes.len(),
        "certificate": {
            "torus_generic": c.torus_generic,
            "points_distinct": c.points_distinct,
            "marks_interior": c.marks_interior,
            "no_edge_families": c.no_edge_families,
            "no_duplicates": c.no_duplicates,
        },
        "solutions": set.solutions.iter().enumerate().map(|(i, s)| solution_value(i, s)).collect::<Vec<_>>(),
    })
}

pub fn invariant_table_value(t: &InvariantTable) -> Value {
    json!({
        "genus": t.genus,
        "class": t.class.m,
        "per_gcd": t.per_gcd.iter().map(|r| json!({
            "gcd": r.gcd,
            "solutions": r.solutions,
            "N": r.classical.to_string(),
            "BG": laurent_value(&r.refined),
        })).collect::<Vec<_>>(),
        "M": t.m.to_string(),
        "N": t.n.to_string(),
        "BG": laurent_value(&t.bg),
        "R": laurent_value(&t.r),
    })
}

/// Writes every solution as a standalone curve file plus `solutions.json`.
pub fn write_solution_set(dir: &Path, set: &SolutionSet) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    for (i, s) in set.solutions.iter().enumerate() {
        write_curve(&dir.join(solution_file_name(i)), &s.marked)?;
    }
    std::fs::write(dir.join("solutions.json"), pretty(&solution_set_value(set)))?;
    Ok(())
}

pub fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
