//! Cutting a curve along finitely many points and lifting the complement to
//! the plane.
//!
//! Each cut point becomes a pair of unbounded ends with opposite slopes. The
//! lift is anchored at vertex 0, placed at its representative in the
//! fundamental parallelogram.

use std::collections::VecDeque;

use num_traits::{Signed, Zero};

use crate::curve::{Edge, Mark, ParamCurve, Simplicity};
use crate::exactmath::{IntMatrix, Rational};
use crate::plane::{self, IVec, Point};
use crate::torus::reduce_to_fundamental;
use crate::{Error, Result};

/// Cut points `(edge, parameter)`.
pub type LiftingSet = Vec<Mark>;

/// Bounded edge of a lifted curve; `source` is the edge it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEdge {
    pub source: usize,
    pub tail: usize,
    pub head: usize,
    pub weight: i64,
    pub primitive_slope: IVec,
    pub length: Rational,
}

/// Unbounded end leaving `vertex` along `slope` through `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct End {
    pub vertex: usize,
    /// Weighted direction pointing away from the vertex.
    pub slope: IVec,
    pub base: Point,
    /// Index of the paired end (same cut point).
    pub partner: usize,
    /// Edge of the original curve that was cut.
    pub source: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarCurve {
    pub positions: Vec<Point>,
    pub edges: Vec<PlanarEdge>,
    pub ends: Vec<End>,
}

impl PlanarCurve {
    /// First Betti number of the bounded part (assumed connected).
    pub fn genus(&self) -> usize {
        self.edges.len() + 1 - self.positions.len()
    }

    /// Bounded edges join their endpoints with the stated slope and length.
    pub fn is_consistent(&self) -> bool {
        self.edges.iter().all(|e| {
            let d = plane::sub(&self.positions[e.head], &self.positions[e.tail]);
            let u = plane::ipoint(plane::iscale(e.weight, e.primitive_slope));
            d == plane::scale(&e.length, &u)
        }) && self.ends.iter().enumerate().all(|(i, end)| {
            let p = &self.ends[end.partner];
            p.partner == i && p.slope == plane::ineg(end.slope)
        })
    }

    /// Outgoing slopes at every vertex sum to zero, ends included.
    pub fn is_balanced(&self) -> bool {
        let mut sums = vec![[0i64, 0]; self.positions.len()];
        for e in &self.edges {
            let u = plane::iscale(e.weight, e.primitive_slope);
            sums[e.tail] = plane::iadd(sums[e.tail], u);
            sums[e.head] = plane::isub(sums[e.head], u);
        }
        for end in &self.ends {
            sums[end.vertex] = plane::iadd(sums[end.vertex], end.slope);
        }
        sums.iter().all(|s| *s == [0, 0])
    }
}

/// Spanning data of the uncut graph: Λ-offsets `κ_v` from windings, geometric
/// lifts `X_v`, and whether every uncut cycle has zero holonomy.
struct CutLift {
    kappa: Vec<Option<IVec>>,
    lift: Vec<Option<Point>>,
    consistent: bool,
}

fn cut_counts(c: &ParamCurve, q: &[Mark]) -> Result<Vec<usize>> {
    let mut counts = vec![0; c.edges().len()];
    for (i, m) in q.iter().enumerate() {
        let Some(e) = c.edges().get(m.edge) else {
            return Err(Error::Invalid(format!("cut {i} names missing edge {}", m.edge)));
        };
        if !m.t.is_positive() || m.t >= e.length {
            return Err(Error::Invalid(format!("cut {i} is not interior to edge {}", m.edge)));
        }
        counts[m.edge] += 1;
    }
    Ok(counts)
}

/// Breadth-first walk over uncut edges from every unvisited vertex in index
/// order. Vertex 0 is placed at its fundamental representative.
fn walk(c: &ParamCurve, counts: &[usize]) -> CutLift {
    let n = c.num_vertices();
    let mut kappa: Vec<Option<IVec>> = vec![None; n];
    let mut lift: Vec<Option<Point>> = vec![None; n];
    let mut consistent = true;
    let mut adj: Vec<Vec<(usize, &Edge, bool)>> = vec![Vec::new(); n];
    for (i, e) in c.edges().iter().enumerate() {
        if counts[i] == 0 {
            adj[e.tail].push((e.head, e, true));
            adj[e.head].push((e.tail, e, false));
        }
    }
    for root in 0..n {
        if kappa[root].is_some() {
            continue;
        }
        kappa[root] = Some([0, 0]);
        lift[root] = Some(c.vertex_point(root));
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let kv = kappa[v].expect("visited");
            let xv = lift[v].clone().expect("visited");
            for &(w, e, forward) in &adj[v] {
                let (k, x) = if forward {
                    (plane::iadd(kv, e.winding), plane::add(&xv, &e.displacement()))
                } else {
                    (plane::isub(kv, e.winding), plane::sub(&xv, &e.displacement()))
                };
                match kappa[w] {
                    None => {
                        kappa[w] = Some(k);
                        lift[w] = Some(x);
                        queue.push_back(w);
                    }
                    Some(existing) => consistent &= existing == k,
                }
            }
        }
    }
    CutLift { kappa, lift, consistent }
}

/// Every cycle of the complement of the cut points has zero Λ-holonomy.
pub fn is_lifting_set(c: &ParamCurve, q: &[Mark]) -> bool {
    match cut_counts(c, q) {
        Ok(counts) => walk(c, &counts).consistent,
        Err(_) => false,
    }
}

fn connected_walk(c: &ParamCurve, q: &[Mark]) -> Result<(CutLift, Vec<usize>)> {
    let counts = cut_counts(c, q)?;
    if counts.iter().any(|&k| k > 1) {
        return Err(Error::Invalid("an edge is cut twice; the complement is disconnected".into()));
    }
    let w = walk(c, &counts);
    if !w.consistent {
        return Err(Error::Invalid("not a lifting set: an uncut cycle winds around the torus".into()));
    }
    // a second root means a vertex unreachable from vertex 0
    let reach = {
        let probe = walk_from_zero_only(c, &counts);
        probe.iter().all(|&r| r)
    };
    if !reach {
        return Err(Error::Invalid("the complement of the cut points is disconnected".into()));
    }
    Ok((w, counts))
}

fn walk_from_zero_only(c: &ParamCurve, counts: &[usize]) -> Vec<bool> {
    let n = c.num_vertices();
    let mut seen = vec![false; n];
    if n == 0 {
        return seen;
    }
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for (i, e) in c.edges().iter().enumerate() {
            if counts[i] > 0 {
                continue;
            }
            for (a, b) in [(e.tail, e.head), (e.head, e.tail)] {
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    seen
}

/// Lifts the complement of `q` to the plane.
pub fn cut_and_lift(c: &ParamCurve, q: &[Mark]) -> Result<PlanarCurve> {
    let (w, counts) = connected_walk(c, q)?;
    let positions: Vec<Point> = w.lift.into_iter().map(|p| p.expect("connected")).collect();
    let edges = c
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| counts[*i] == 0)
        .map(|(i, e)| PlanarEdge {
            source: i,
            tail: e.tail,
            head: e.head,
            weight: e.weight,
            primitive_slope: e.primitive_slope,
            length: e.length.clone(),
        })
        .collect();
    let mut ends = Vec::with_capacity(2 * q.len());
    for m in q {
        let e = &c.edges()[m.edge];
        let u = e.slope();
        let up = plane::ipoint(u);
        let a = plane::add(&positions[e.tail], &plane::scale(&m.t, &up));
        let b = plane::sub(&positions[e.head], &plane::scale(&(&e.length - &m.t), &up));
        let i = ends.len();
        ends.push(End { vertex: e.tail, slope: u, base: a, partner: i + 1, source: m.edge });
        ends.push(End { vertex: e.head, slope: plane::ineg(u), base: b, partner: i, source: m.edge });
    }
    Ok(PlanarCurve { positions, edges, ends })
}

/// Loop classes `γ_i ∈ Λ` closed by reinserting each cut point, from windings.
pub fn cut_loops(c: &ParamCurve, q: &[Mark]) -> Result<Vec<IVec>> {
    let (w, _) = connected_walk(c, q)?;
    Ok(q.iter()
        .map(|m| {
            let e = &c.edges()[m.edge];
            let kt = w.kappa[e.tail].expect("connected");
            let kh = w.kappa[e.head].expect("connected");
            plane::isub(plane::iadd(kt, e.winding), kh)
        })
        .collect())
}

/// `det(slope, base)`.
pub fn end_moment(pc: &PlanarCurve, end: usize) -> Rational {
    let e = &pc.ends[end];
    plane::det(&plane::ipoint(e.slope), &e.base)
}

/// Moments of all unbounded ends sum to zero.
pub fn check_menelaus(pc: &PlanarCurve) -> bool {
    (0..pc.ends.len()).map(|i| end_moment(pc, i)).sum::<Rational>().is_zero()
}

/// For every cut `i` with slope `n_i`:
/// `det(n_i, e_i) + det(-n_i, f_i) = det(n_i, S γ_i)`, where the ends come
/// from the metric lift and `γ_i` from the windings; and the lift of every
/// vertex lies over its stated position with the winding offset.
pub fn check_gluing(c: &ParamCurve, q: &[Mark]) -> bool {
    let (Ok(pc), Ok(loops)) = (cut_and_lift(c, q), cut_loops(c, q)) else {
        return false;
    };
    let Ok((w, _)) = connected_walk(c, q) else {
        return false;
    };
    let covers = (0..c.num_vertices()).all(|v| {
        let k = w.kappa[v].expect("connected");
        let expected = c.torus.to_plane(&plane::add(c.positions[v].coords(), &plane::ipoint(k)));
        pc.positions[v] == expected
    });
    covers
        && loops.iter().enumerate().all(|(i, gamma)| {
            let n = plane::ipoint(pc.ends[2 * i].slope);
            let lhs = end_moment(&pc, 2 * i) + end_moment(&pc, 2 * i + 1);
            lhs == plane::det(&n, &c.torus.period_vector(*gamma))
        })
}

/// Glues paired ends back together and projects to the torus.
///
/// Returns the curve and the cut points; inverse of [`cut_and_lift`].
pub fn reglue(pc: &PlanarCurve, template: &ParamCurve) -> Result<(ParamCurve, LiftingSet)> {
    let torus = &template.torus;
    let reduced: Vec<_> = pc.positions.iter().map(|p| reduce_to_fundamental(p, torus)).collect();
    let n_edges = pc.edges.len() + pc.ends.len() / 2;
    let mut edges: Vec<Option<Edge>> = vec![None; n_edges];
    for e in &pc.edges {
        let winding = plane::isub(reduced[e.head].1, reduced[e.tail].1);
        edges[e.source] = Some(Edge {
            tail: e.tail,
            head: e.head,
            weight: e.weight,
            primitive_slope: e.primitive_slope,
            length: e.length.clone(),
            winding,
        });
    }
    let mut cuts = Vec::new();
    for (i, a) in pc.ends.iter().enumerate() {
        if a.partner < i {
            continue;
        }
        let b = &pc.ends[a.partner];
        let (weight, primitive_slope) =
            plane::split_weight(a.slope).ok_or_else(|| Error::Invalid("end with zero slope".into()))?;
        let u = plane::ipoint(a.slope);
        let coord = |v: &Point| if !u[0].is_zero() { &v[0] / &u[0] } else { &v[1] / &u[1] };
        let t = coord(&plane::sub(&a.base, &pc.positions[a.vertex]));
        let rest = coord(&plane::sub(&pc.positions[b.vertex], &b.base));
        let gamma = torus.to_lattice_coords(&plane::sub(&a.base, &b.base));
        let gamma = plane::to_ivec(&gamma).ok_or_else(|| Error::Invalid("paired ends do not glue".into()))?;
        let winding = plane::iadd(plane::isub(reduced[b.vertex].1, reduced[a.vertex].1), gamma);
        edges[a.source] =
            Some(Edge { tail: a.vertex, head: b.vertex, weight, primitive_slope, length: &t + &rest, winding });
        cuts.push(Mark { edge: a.source, t });
    }
    let edges = edges
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invalid("edge sources are not a permutation".into()))?;
    let curve = ParamCurve {
        torus: torus.clone(),
        graph: crate::curve::CurveGraph { num_vertices: pc.positions.len(), edges },
        positions: reduced.into_iter().map(|r| r.0).collect(),
    };
    Ok((curve, cuts))
}

/// Collinearity rows `det(u'_e, δp_head - δp_tail)`, one per edge.
fn collinearity_matrix(c: &ParamCurve) -> IntMatrix {
    let n = c.num_vertices();
    let mut m = IntMatrix::zeros(c.edges().len(), 2 * n);
    for (i, e) in c.edges().iter().enumerate() {
        let [ux, uy] = e.primitive_slope;
        m[(i, 2 * e.head)] += -uy;
        m[(i, 2 * e.head + 1)] += ux;
        m[(i, 2 * e.tail)] += uy;
        m[(i, 2 * e.tail + 1)] += -ux;
    }
    m
}

/// Dimension of the space of first-order deformations with fixed windings
/// and slopes: vertex motions `δp` keeping every edge parallel to itself.
pub fn deformation_dimension(c: &ParamCurve) -> Result<usize> {
    let Simplicity { simple, reason } = crate::curve::is_simple(c);
    if !simple {
        return Err(Error::Invalid(format!("not simple: {}", reason.unwrap_or_default())));
    }
    Ok(2 * c.num_vertices() - collinearity_matrix(c).rank())
}

/// Same dimension with edge lengths kept as unknowns:
/// `δp_head - δp_tail - δl_e u_e = 0`.
pub fn deformation_dimension_explicit(c: &ParamCurve) -> usize {
    let n = c.num_vertices();
    let m_edges = c.edges().len();
    let mut m = IntMatrix::zeros(2 * m_edges, 2 * n + m_edges);
    for (i, e) in c.edges().iter().enumerate() {
        let u = e.slope();
        for k in 0..2 {
            let r = 2 * i + k;
            m[(r, 2 * e.head + k)] += 1;
            m[(r, 2 * e.tail + k)] += -1;
            m[(r, 2 * n + i)] += -u[k];
        }
    }
    2 * n + m_edges - m.rank()
}
