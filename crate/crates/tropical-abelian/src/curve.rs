//! Parametrized tropical curves in a tropical torus.
//!
//! A curve is a finite graph whose vertices sit in the fundamental
//! parallelogram and whose edges are straight segments in the universal cover.
//! Every edge carries a weight, a primitive slope, a length and a winding
//! `λ_e ∈ Λ`, tied together by
//!
//! ```text
//! S (x_head + λ_e - x_tail) = l_e * w_e * u'_e
//! ```
//!
//! where `x` are Λ-coordinates of the vertices.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactmath::{format_rational, int, Rational};
use crate::plane::{self, IVec, Point};
use crate::torus::{reduce_to_fundamental, CurveClass, TorusPoint, TropicalTorus};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub weight: i64,
    pub primitive_slope: IVec,
    pub length: Rational,
    pub winding: IVec,
}

impl Edge {
    /// `w_e * u'_e`.
    pub fn slope(&self) -> IVec {
        plane::iscale(self.weight, self.primitive_slope)
    }

    /// Same edge traversed backwards.
    pub fn reversed(&self) -> Edge {
        Edge {
            tail: self.head,
            head: self.tail,
            weight: self.weight,
            primitive_slope: plane::ineg(self.primitive_slope),
            length: self.length.clone(),
            winding: plane::ineg(self.winding),
        }
    }

    /// Displacement `l_e w_e u'_e` in N.
    pub fn displacement(&self) -> Point {
        plane::scale(&self.length, &plane::ipoint(self.slope()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveGraph {
    pub num_vertices: usize,
    pub edges: Vec<Edge>,
}

impl CurveGraph {
    /// Outgoing weighted slopes at `v`, one per edge end (loops count twice).
    pub fn outgoing(&self, v: usize) -> Vec<(usize, IVec)> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.tail == v {
                out.push((i, e.slope()));
            }
            if e.head == v {
                out.push((i, plane::ineg(e.slope())));
            }
        }
        out
    }

    pub fn valence(&self, v: usize) -> usize {
        self.outgoing(v).len()
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(None)
    }

    fn components_without(&self, skip: Option<usize>) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.num_vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (i, e) in self.edges.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.num_vertices {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Edges whose removal increases the number of components.
    pub fn bridges(&self) -> Vec<usize> {
        let base = self.components().len();
        (0..self.edges.len()).filter(|&i| self.components_without(Some(i)).len() > base).collect()
    }
}

/// A graph mapped into a torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamCurve {
    pub torus: TropicalTorus,
    pub graph: CurveGraph,
    pub positions: Vec<TorusPoint>,
}

/// Marked point on an edge at parameter `t`, `0 < t < l_e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mark {
    pub edge: usize,
    pub t: Rational,
}

/// A curve with labeled marks; mark order is significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedCurve {
    pub curve: ParamCurve,
    pub marks: Vec<Mark>,
}

/// Edge description for [`ParamCurve::from_cover`].
#[derive(Clone, Debug)]
pub struct CoverEdge {
    pub tail: usize,
    pub head: usize,
    /// Weighted slope `w u'`.
    pub slope: IVec,
    /// The segment ends at `lift(head) + S * shift`.
    pub shift: IVec,
}

impl CoverEdge {
    pub fn new(tail: usize, head: usize, slope: IVec, shift: IVec) -> Self {
        CoverEdge { tail, head, slope, shift }
    }
}

impl ParamCurve {
    /// Builds a curve from vertex lifts anywhere in `N_R` and edges joining
    /// them in the cover. Lengths and windings are derived; positions are
    /// reduced to the fundamental parallelogram.
    pub fn from_cover(torus: &TropicalTorus, lifts: &[Point], edges: &[CoverEdge]) -> Result<Self> {
        let reduced: Vec<(TorusPoint, IVec)> = lifts.iter().map(|p| reduce_to_fundamental(p, torus)).collect();
        let mut out = Vec::with_capacity(edges.len());
        for (i, ce) in edges.iter().enumerate() {
            let (Some(from), Some(to)) = (lifts.get(ce.tail), lifts.get(ce.head)) else {
                return Err(Error::Invalid(format!("edge {i} references a missing vertex")));
            };
            let end = plane::add(to, &torus.period_vector(ce.shift));
            let d = plane::sub(&end, from);
            let Some((weight, primitive_slope)) = plane::split_weight(ce.slope) else {
                return Err(Error::Invalid(format!("edge {i} has zero slope")));
            };
            let s = plane::ipoint(ce.slope);
            if !plane::det(&s, &d).is_zero() {
                return Err(Error::Invalid(format!("edge {i} is not parallel to its slope")));
            }
            let length = if !s[0].is_zero() { &d[0] / &s[0] } else { &d[1] / &s[1] };
            if !length.is_positive() {
                return Err(Error::Invalid(format!("edge {i} has non-positive length")));
            }
            let winding = plane::isub(plane::iadd(ce.shift, reduced[ce.head].1), reduced[ce.tail].1);
            out.push(Edge { tail: ce.tail, head: ce.head, weight, primitive_slope, length, winding });
        }
        let curve = ParamCurve {
            torus: torus.clone(),
            graph: CurveGraph { num_vertices: lifts.len(), edges: out },
            positions: reduced.into_iter().map(|(p, _)| p).collect(),
        };
        Ok(curve)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.graph.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.graph.num_vertices
    }

    /// Position of vertex `v` in N, inside the fundamental parallelogram.
    pub fn vertex_point(&self, v: usize) -> Point {
        self.positions[v].in_plane(&self.torus)
    }

    /// Point at parameter `t` along edge `e`, measured from the tail's
    /// representative in the fundamental parallelogram.
    pub fn edge_point(&self, e: usize, t: &Rational) -> Point {
        let edge = &self.graph.edges[e];
        let u = plane::ipoint(edge.slope());
        plane::add(&self.vertex_point(edge.tail), &plane::scale(t, &u))
    }
}

impl MarkedCurve {
    /// Marked point images, reduced into the torus.
    pub fn mark_points(&self) -> Vec<TorusPoint> {
        self.marks
            .iter()
            .map(|m| reduce_to_fundamental(&self.curve.edge_point(m.edge, &m.t), &self.curve.torus).0)
            .collect()
    }
}

/// Nonzero balancing defects per vertex.
pub fn balance_defects(c: &ParamCurve) -> Vec<(usize, IVec)> {
    (0..c.num_vertices())
        .filter_map(|v| {
            let s = c.graph.outgoing(v).into_iter().fold([0, 0], |acc, (_, u)| plane::iadd(acc, u));
            (s != [0, 0]).then_some((v, s))
        })
        .collect()
}

pub fn check_balanced(c: &ParamCurve) -> bool {
    balance_defects(c).is_empty()
}

/// First Betti number `|E| - |V| + #components`.
pub fn genus(c: &ParamCurve) -> usize {
    let comps = c.graph.components().len();
    c.edges().len() + comps - c.num_vertices()
}

/// First Betti number of each connected component.
pub fn component_genera(c: &ParamCurve) -> Vec<usize> {
    c.graph
        .components()
        .iter()
        .map(|vs| {
            let e = c.edges().iter().filter(|e| vs.contains(&e.tail)).count();
            e + 1 - vs.len()
        })
        .collect()
}

/// gcd of the edge weights.
pub fn curve_gcd(c: &ParamCurve) -> Result<i64> {
    if c.edges().is_empty() {
        return Err(Error::Domain("edgeless curve has no gcd".into()));
    }
    Ok(c.edges().iter().fold(0i64, |g, e| g.gcd(&e.weight)))
}

fn class_from_columns(cols: [[i64; 2]; 2]) -> CurveClass {
    CurveClass::new([[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]])
}

/// Degree by the holonomy pairing: `C = Σ_e u_e ⊗ (x_head + λ_e - x_tail)`.
pub fn degree_class(c: &ParamCurve) -> Result<CurveClass> {
    if !check_balanced(c) {
        return Err(Error::Invalid("degree of an unbalanced curve".into()));
    }
    let mut acc: [[Rational; 2]; 2] = Default::default();
    for e in c.edges() {
        let x = plane::add(
            &plane::sub(c.positions[e.head].coords(), c.positions[e.tail].coords()),
            &plane::ipoint(e.winding),
        );
        let u = plane::ipoint(e.slope());
        for (j, xj) in x.iter().enumerate() {
            for (i, ui) in u.iter().enumerate() {
                acc[j][i] += ui * xj;
            }
        }
    }
    let mut cols = [[0i64; 2]; 2];
    for j in 0..2 {
        for i in 0..2 {
            if !acc[j][i].is_integer() {
                return Err(Error::Invalid("holonomy pairing is not integral".into()));
            }
            cols[j][i] = acc[j][i].to_integer().to_i64().expect("class fits in i64");
        }
    }
    Ok(class_from_columns(cols))
}

/// Signed number of lattice lines `{x_j = n}` crossed by the segment
/// `a -> b` (Λ-coordinates), counting a crossing at the far endpoint but not
/// at the near one.
fn signed_crossings(a: &Rational, b: &Rational) -> i64 {
    let (lo, hi, sign) = if a <= b { (a, b, 1) } else { (b, a, -1) };
    // integers n with lo < n <= hi going up; lo <= n < hi going down
    let mut n = lo.floor();
    let mut count = 0;
    loop {
        let inside = if sign > 0 { &n > lo && &n <= hi } else { &n >= lo && &n < hi };
        if inside {
            count += 1;
        }
        if &n > hi {
            break;
        }
        n += int(1);
    }
    sign * count
}

/// Degree by counting signed crossings of each edge segment with the sides
/// of the fundamental parallelogram. Uses lengths and slopes, not windings.
pub fn degree_class_by_crossings(c: &ParamCurve) -> Result<CurveClass> {
    if !check_balanced(c) {
        return Err(Error::Invalid("degree of an unbalanced curve".into()));
    }
    let mut cols = [[0i64; 2]; 2];
    for e in c.edges() {
        let start = c.positions[e.tail].coords().clone();
        let end = plane::add(&start, &c.torus.to_lattice_coords(&e.displacement()));
        let u = e.slope();
        for j in 0..2 {
            let k = signed_crossings(&start[j], &end[j]);
            cols[j][0] += k * u[0];
            cols[j][1] += k * u[1];
        }
    }
    Ok(class_from_columns(cols))
}

/// Outcome of [`is_simple`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplicity {
    pub simple: bool,
    pub reason: Option<String>,
}

impl Simplicity {
    fn fail(reason: String) -> Self {
        Simplicity { simple: false, reason: Some(reason) }
    }
}

/// Trivalent, no contracted edge, pairwise independent slopes at each vertex.
pub fn is_simple(c: &ParamCurve) -> Simplicity {
    for (i, e) in c.edges().iter().enumerate() {
        if e.primitive_slope == [0, 0] || e.weight == 0 {
            return Simplicity::fail(format!("edge {i} is contracted"));
        }
    }
    for v in 0..c.num_vertices() {
        let out = c.graph.outgoing(v);
        if out.len() != 3 {
            return Simplicity::fail(format!("vertex {v} has valence {}", out.len()));
        }
        for a in 0..3 {
            for b in a + 1..3 {
                if plane::idet(out[a].1, out[b].1) == 0 {
                    return Simplicity::fail(format!("vertex {v} has collinear edges"));
                }
            }
        }
    }
    Simplicity { simple: true, reason: None }
}

/// Weights times `k`, lengths divided by `k`; the image is unchanged.
pub fn scale_curve(c: &ParamCurve, k: i64) -> ParamCurve {
    assert!(k >= 1, "scale factor must be positive");
    let mut out = c.clone();
    for e in &mut out.graph.edges {
        e.weight *= k;
        e.length = &e.length / int(k);
    }
    out
}

/// One broken invariant of a [`ParamCurve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub edge: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edge {
            Some(e) => write!(f, "edge {e}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

/// Checks every stored invariant; an empty list means well formed.
pub fn validate(c: &ParamCurve) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut bad = |edge: Option<usize>, message: String| out.push(Violation { edge, message });
    if c.positions.len() != c.num_vertices() {
        bad(None, format!("{} positions for {} vertices", c.positions.len(), c.num_vertices()));
        return out;
    }
    for (i, e) in c.edges().iter().enumerate() {
        if e.tail >= c.num_vertices() || e.head >= c.num_vertices() {
            bad(Some(i), "endpoint out of range".into());
            continue;
        }
        if e.weight < 1 {
            bad(Some(i), format!("weight {} is not positive", e.weight));
        }
        if plane::content(e.primitive_slope) != 1 {
            bad(Some(i), format!("slope {:?} is not primitive", e.primitive_slope));
        }
        if !e.length.is_positive() {
            bad(Some(i), format!("length {} is not positive", format_rational(&e.length)));
        }
        let lhs = c.torus.to_plane(&plane::add(
            &plane::sub(c.positions[e.head].coords(), c.positions[e.tail].coords()),
            &plane::ipoint(e.winding),
        ));
        if lhs != e.displacement() {
            bad(Some(i), "segment does not join its endpoints with the stated slope and length".into());
        }
    }
    if check_balanced(c) && is_simple(c).simple {
        for b in c.graph.bridges() {
            bad(Some(b), "disconnecting edge with nonzero slope".into());
        }
    }
    out
}

/// Isomorphism-invariant key of a marked curve.
///
/// Minimises over vertex relabelings and per-edge orientation flips; marks
/// keep their labels. Exhaustive over permutations, so meant for small graphs.
pub fn canonical_key(mc: &MarkedCurve) -> String {
    let c = &mc.curve;
    let n = c.num_vertices();
    let mut best: Option<String> = None;
    for perm in permutations(n) {
        let key = relabeled_key(mc, &perm);
        if best.as_ref().is_none_or(|b| &key < b) {
            best = Some(key);
        }
    }
    best.unwrap_or_default()
}

/// Number of relabelings fixing the marked curve, including the identity.
pub fn automorphism_count(mc: &MarkedCurve) -> usize {
    let n = mc.curve.num_vertices();
    let id: Vec<usize> = (0..n).collect();
    let base = relabeled_key(mc, &id);
    permutations(n).iter().filter(|p| relabeled_key(mc, p) == base).count()
}

fn edge_repr(e: &Edge, perm: &[usize]) -> (String, bool) {
    let fwd = Edge { tail: perm[e.tail], head: perm[e.head], ..e.clone() };
    let back = fwd.reversed();
    let f = |x: &Edge| {
        format!(
            "{}>{}|w{}|u{},{}|l{}|λ{},{}",
            x.tail,
            x.head,
            x.weight,
            x.primitive_slope[0],
            x.primitive_slope[1],
            format_rational(&x.length),
            x.winding[0],
            x.winding[1]
        )
    };
    let (a, b) = (f(&fwd), f(&back));
    if a <= b {
        (a, false)
    } else {
        (b, true)
    }
}

fn relabeled_key(mc: &MarkedCurve, perm: &[usize]) -> String {
    let c = &mc.curve;
    let mut inv = vec![0; perm.len()];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let verts: Vec<String> = inv
        .iter()
        .map(|&v| {
            let x = c.positions[v].coords();
            format!("({},{})", format_rational(&x[0]), format_rational(&x[1]))
        })
        .collect();
    let reprs: Vec<(String, bool)> = c.edges().iter().map(|e| edge_repr(e, perm)).collect();
    let mut edges: Vec<&String> = reprs.iter().map(|r| &r.0).collect();
    edges.sort();
    let marks: Vec<String> = mc
        .marks
        .iter()
        .map(|m| {
            let (r, flipped) = &reprs[m.edge];
            let e = &c.edges()[m.edge];
            let t = if *flipped { &e.length - &m.t } else { m.t.clone() };
            format!("{r}@{}", format_rational(&t))
        })
        .collect();
    format!(
        "V[{}]E[{}]M[{}]",
        verts.join(";"),
        edges.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(";"),
        marks.join(";")
    )
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::torus::is_realizable;

    fn p(x: i64, y: i64) -> Point {
        [int(x), int(y)]
    }

    #[test]
    fn balanced_theta() {
        // lifts chosen so that every slope sum vanishes
        let t = TropicalTorus::from_i64([[8, 2], [2, 8]]).unwrap();
        let c = ParamCurve::from_cover(
            &t,
            &[p(6, 6), p(4, 4)],
            &[
                CoverEdge::new(0, 1, [1, 0], [0, 0]),
                CoverEdge::new(0, 1, [0, 1], [0, 0]),
                CoverEdge::new(1, 0, [1, 1], [0, 0]),
            ],
        );
        assert!(c.is_err(), "(1,0) from (6,6) cannot reach (4,4)");
        let c = ParamCurve::from_cover(
            &t,
            &[p(4, 4), p(6, 6)],
            &[
                CoverEdge::new(1, 0, [1, 0], [1, 0]),
                CoverEdge::new(1, 0, [0, 1], [0, 1]),
                CoverEdge::new(0, 1, [1, 1], [0, 0]),
            ],
        )
        .unwrap();
        assert!(check_balanced(&c));
        assert_eq!(genus(&c), 2);
        assert_eq!(curve_gcd(&c).unwrap(), 1);
        assert_eq!(degree_class(&c).unwrap(), CurveClass::new([[1, 0], [0, 1]]));
        assert_eq!(degree_class_by_crossings(&c).unwrap(), CurveClass::new([[1, 0], [0, 1]]));
        assert!(is_simple(&c).simple);
        assert!(is_realizable(&degree_class(&c).unwrap(), &c.torus));

        let mut heavy = c.clone();
        heavy.graph.edges[0].weight = 2;
        assert!(!check_balanced(&heavy));
        assert!(degree_class(&heavy).is_err());
    }

    #[test]
    fn loops_and_components() {
        let t = TropicalTorus::from_i64([[3, 0], [0, 5]]).unwrap();
        let c = ParamCurve::from_cover(
            &t,
            &[p(1, 1), p(1, 2)],
            &[CoverEdge::new(0, 0, [1, 0], [1, 0]), CoverEdge::new(1, 1, [1, 0], [1, 0])],
        )
        .unwrap();
        assert!(check_balanced(&c));
        assert_eq!(genus(&c), 2);
        assert_eq!(component_genera(&c), vec![1, 1]);
        assert_eq!(degree_class(&c).unwrap(), CurveClass::new([[2, 0], [0, 0]]));
        assert_eq!(degree_class_by_crossings(&c).unwrap(), degree_class(&c).unwrap());
        let s = is_simple(&c);
        assert!(!s.simple);
        assert!(s.reason.unwrap().contains("valence 2"));
    }

    #[test]
    fn validate_catches_perturbations() {
        let t = TropicalTorus::from_i64([[8, 2], [2, 8]]).unwrap();
        let c = ParamCurve::from_cover(
            &t,
            &[p(4, 4), p(6, 6)],
            &[
                CoverEdge::new(1, 0, [1, 0], [1, 0]),
                CoverEdge::new(1, 0, [0, 1], [0, 1]),
                CoverEdge::new(0, 1, [1, 1], [0, 0]),
            ],
        )
        .unwrap();
        let mut bad = c.clone();
        bad.graph.edges[2].length += rat(1, 1000);
        let v = validate(&bad);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].edge, Some(2));
        let mut bad = c.clone();
        bad.graph.edges[1].winding[0] += 1;
        assert_eq!(validate(&bad).len(), 1);
        let mut bad = c;
        bad.graph.edges[0].primitive_slope = [2, 0];
        assert!(!validate(&bad).is_empty());
    }

    #[test]
    fn flat_and_four_valent_vertices_are_not_simple() {
        let t = TropicalTorus::from_i64([[4, 0], [0, 4]]).unwrap();
        // vertex 0 is four-valent: two loops
        let c = ParamCurve::from_cover(
            &t,
            &[p(1, 1)],
            &[CoverEdge::new(0, 0, [1, 0], [1, 0]), CoverEdge::new(0, 0, [0, 1], [0, 1])],
        )
        .unwrap();
        assert!(is_simple(&c).reason.unwrap().contains("valence 4"));
        // flat vertex: slopes (1,0), (2,0) and (-3,0)
        let mut g = c.clone();
        g.graph = CurveGraph {
            num_vertices: 2,
            edges: vec![
                Edge { tail: 0, head: 1, weight: 1, primitive_slope: [1, 0], length: int(1), winding: [0, 0] },
                Edge { tail: 0, head: 1, weight: 2, primitive_slope: [1, 0], length: int(1), winding: [0, 0] },
                Edge { tail: 0, head: 1, weight: 3, primitive_slope: [-1, 0], length: int(1), winding: [0, 0] },
            ],
        };
        g.positions.push(g.positions[0].clone());
        assert!(is_simple(&g).reason.unwrap().contains("collinear"));
    }

    #[test]
    fn scaling() {
        let t = TropicalTorus::from_i64([[8, 2], [2, 8]]).unwrap();
        let c = ParamCurve::from_cover(
            &t,
            &[p(4, 4), p(6, 6)],
            &[
                CoverEdge::new(1, 0, [1, 0], [1, 0]),
                CoverEdge::new(1, 0, [0, 1], [0, 1]),
                CoverEdge::new(0, 1, [1, 1], [0, 0]),
            ],
        )
        .unwrap();
        assert_eq!(scale_curve(&c, 1), c);
        let c3 = scale_curve(&c, 3);
        assert!(validate(&c3).is_empty());
        assert_eq!(curve_gcd(&c3).unwrap(), 3);
        assert_eq!(degree_class(&scale_curve(&c, 2)).unwrap(), CurveClass::new([[2, 0], [0, 2]]));
        assert_eq!(scale_curve(&scale_curve(&c, 2), 3), scale_curve(&c, 6));
    }

    #[test]
    fn canonical_key_ignores_labels_and_orientation() {
        let t = TropicalTorus::from_i64([[8, 2], [2, 8]]).unwrap();
        let c = ParamCurve::from_cover(
            &t,
            &[p(4, 4), p(6, 6)],
            &[
                CoverEdge::new(1, 0, [1, 0], [1, 0]),
                CoverEdge::new(1, 0, [0, 1], [0, 1]),
                CoverEdge::new(0, 1, [1, 1], [0, 0]),
            ],
        )
        .unwrap();
        let mc = MarkedCurve { curve: c.clone(), marks: vec![Mark { edge: 0, t: int(1) }] };
        let mut flipped = c.clone();
        flipped.graph.edges[0] = flipped.graph.edges[0].reversed();
        flipped.graph.edges.swap(0, 2);
        let l = flipped.graph.edges[2].length.clone();
        let mf = MarkedCurve { curve: flipped, marks: vec![Mark { edge: 2, t: l - int(1) }] };
        assert_eq!(canonical_key(&mc), canonical_key(&mf));
        assert_eq!(automorphism_count(&mc), 1);
        let other = MarkedCurve { curve: c, marks: vec![Mark { edge: 0, t: rat(1, 2) }] };
        assert_ne!(canonical_key(&mc), canonical_key(&other));
    }
}
