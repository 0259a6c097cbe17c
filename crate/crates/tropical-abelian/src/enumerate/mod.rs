//! Exhaustive enumeration of genus-2 curves through two points, and the
//! invariants assembled from it.
//!
//! A simple trivalent genus-2 curve with nonzero edge slopes is a theta
//! graph, so the search runs over theta shapes (see [`shapes`]) and then
//! places the two labeled points on two distinct edges.

mod closed_form;
mod invariants;
pub mod shapes;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

pub use closed_form::{
    closed_form_bg_1n, closed_form_n_1n, eisenstein_series_check, eisenstein_series_check_with, eisenstein_table,
    series_coefficients, EisensteinRow,
};
pub use invariants::{
    assemble_invariants, invariance_regression, per_gcd_scaling_holds, GcdRow, InvarianceReport, InvariantTable,
    RunOutcome,
};
pub use shapes::{certified_winding_bound, theta_shapes, ThetaShape};

use crate::curve::{self, CoverEdge, Mark, MarkedCurve, ParamCurve};
use crate::exactmath::{int, LaurentHalf, Rational};
use crate::lifting;
use crate::multiplicity;
use crate::plane::{self, Point};
use crate::torus::{is_realizable, splitting_classes, CurveClass, TorusPoint, TropicalTorus};
use crate::{Error, Result};

/// One marked curve through the two points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub marked: MarkedCurve,
    /// Index into [`SolutionSet::shapes`].
    pub shape: usize,
    pub gcd: i64,
    pub vertex_multiplicity: i64,
    pub classical: i64,
    pub refined: LaurentHalf,
    pub automorphisms: usize,
}

impl Solution {
    /// `δ_Γ m_Γ`.
    pub fn complex(&self) -> i64 {
        self.gcd * self.classical
    }
}

/// Which genericity checks were run and what they found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityCertificate {
    /// No class splits `C` into two nonzero effective realizable pieces.
    pub torus_generic: bool,
    pub points_distinct: bool,
    pub marks_interior: bool,
    /// No edge of any shape can carry both points at once.
    pub no_edge_families: bool,
    pub no_duplicates: bool,
}

impl GenericityCertificate {
    pub fn all(&self) -> bool {
        self.torus_generic && self.points_distinct && self.marks_interior && self.no_edge_families && self.no_duplicates
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub torus: TropicalTorus,
    pub class: CurveClass,
    pub genus: usize,
    pub points: Vec<TorusPoint>,
    /// Winding box actually searched.
    pub bound: [i64; 2],
    /// Box that provably contains every solution.
    pub certified_bound: [i64; 2],
    pub shapes: Vec<ThetaShape>,
    /// Sorted by [`curve::canonical_key`].
    pub solutions: Vec<Solution>,
    pub certificate: GenericityCertificate,
}

fn floor_i64(r: &Rational) -> i64 {
    num_traits::ToPrimitive::to_i64(&r.floor().to_integer()).expect("fits in i64")
}

fn ceil_i64(r: &Rational) -> i64 {
    num_traits::ToPrimitive::to_i64(&r.ceil().to_integer()).expect("fits in i64")
}

/// Integer box containing `S^{-1}(v - d)` for every corner `v`.
fn kappa_box(t: &TropicalTorus, corners: &[Point], d: &Point) -> [(i64, i64); 2] {
    let images: Vec<Point> = corners.iter().map(|c| t.to_lattice_coords(&plane::sub(c, d))).collect();
    let mut out = [(0, 0); 2];
    for (k, slot) in out.iter_mut().enumerate() {
        let lo = images.iter().map(|p| floor_i64(&p[k])).min().expect("corners");
        let hi = images.iter().map(|p| ceil_i64(&p[k])).max().expect("corners");
        *slot = (lo, hi);
    }
    out
}

fn lattice_translates(t: &TropicalTorus, corners: &[Point], d: &Point) -> Vec<Point> {
    let [(a0, b0), (a1, b1)] = kappa_box(t, corners, d);
    let mut out = Vec::new();
    for k0 in a0..=b0 {
        for k1 in a1..=b1 {
            out.push(plane::add(d, &t.period_vector([k0, k1])));
        }
    }
    out
}

fn non_generic(msg: impl Into<String>) -> Error {
    Error::NonGeneric(format!("{}; resample the points", msg.into()))
}

/// Fails when some translate of an edge passes through both points.
fn check_edge_families(t: &TropicalTorus, shape: &ThetaShape, dp: &Point) -> Result<()> {
    for e in &shape.edges {
        let u = plane::ipoint(e.slope);
        let reach = plane::scale(&e.length, &u);
        let corners = [reach.clone(), plane::neg(&reach)];
        for r in lattice_translates(t, &corners, dp) {
            if plane::det(&u, &r).is_zero() {
                let s = if !u[0].is_zero() { &r[0] / &u[0] } else { &r[1] / &u[1] };
                if s.abs() <= e.length {
                    return Err(non_generic(format!(
                        "both points lie on one line of slope ({}, {}) within an edge length",
                        e.slope[0], e.slope[1]
                    )));
                }
            }
        }
    }
    Ok(())
}

fn build_solution(
    t: &TropicalTorus,
    shape: &ThetaShape,
    index: usize,
    p1: &Point,
    (a, sa): (usize, Rational),
    (b, sb): (usize, Rational),
) -> Result<Solution> {
    let ua = plane::ipoint(shape.edges[a].slope);
    let x_a = plane::sub(p1, &plane::scale(&sa, &ua));
    let x_b = plane::add(&x_a, &shape.vertex_offset());
    let edges: Vec<CoverEdge> = shape.edges.iter().map(|e| CoverEdge::new(0, 1, e.slope, e.winding)).collect();
    let curve = ParamCurve::from_cover(t, &[x_a, x_b], &edges)?;
    let marked = MarkedCurve { curve, marks: vec![Mark { edge: a, t: sa }, Mark { edge: b, t: sb }] };
    let c = &marked.curve;
    Ok(Solution {
        shape: index,
        gcd: curve::curve_gcd(c)?,
        vertex_multiplicity: shape.vertex_multiplicity(),
        classical: multiplicity::classical_multiplicity(c)?,
        refined: multiplicity::refined_multiplicity(c)?,
        automorphisms: curve::automorphism_count(&marked),
        marked,
    })
}

/// All simple genus-2 curves of class `C` through `pts[0]`, `pts[1]`, with
/// labeled marks. `bound` overrides the certified winding box.
pub fn enumerate_genus2(
    t: &TropicalTorus,
    c: &CurveClass,
    pts: &[TorusPoint],
    bound: Option<[i64; 2]>,
) -> Result<SolutionSet> {
    if pts.len() != 2 {
        return Err(Error::Invalid(format!("genus 2 needs 2 points, got {}", pts.len())));
    }
    if !is_realizable(c, t) {
        return Err(Error::Domain("the class is not realizable on this torus".into()));
    }
    if pts[0] == pts[1] {
        return Err(non_generic("the two points coincide"));
    }
    let certified_bound = certified_winding_bound(c, t);
    let bound = bound.unwrap_or(certified_bound);
    let shapes = theta_shapes(c, t, bound);
    let p1 = pts[0].in_plane(t);
    let p2 = pts[1].in_plane(t);
    let dp = plane::sub(&p2, &p1);

    let mut found: BTreeMap<String, Solution> = BTreeMap::new();
    for (index, shape) in shapes.iter().enumerate() {
        check_edge_families(t, shape, &dp)?;
        for a in 0..3 {
            for b in 0..3 {
                if a == b {
                    continue;
                }
                let (ea, eb) = (&shape.edges[a], &shape.edges[b]);
                let ua = plane::ipoint(ea.slope);
                let ub = plane::ipoint(eb.slope);
                let reach_b = plane::scale(&eb.length, &ub);
                let back_a = plane::neg(&plane::scale(&ea.length, &ua));
                let corners = [[int(0), int(0)], reach_b.clone(), back_a.clone(), plane::add(&reach_b, &back_a)];
                // s_b u_b - s_a u_a = r
                let neg_ua = plane::neg(&ua);
                let d = plane::det(&ub, &neg_ua);
                for r in lattice_translates(t, &corners, &dp) {
                    let sb = plane::det(&r, &neg_ua) / &d;
                    let sa = plane::det(&ub, &r) / &d;
                    let closed = !sa.is_negative() && sa <= ea.length && !sb.is_negative() && sb <= eb.length;
                    if !closed {
                        continue;
                    }
                    let open = sa.is_positive() && sa < ea.length && sb.is_positive() && sb < eb.length;
                    if !open {
                        return Err(non_generic("a point lies on a vertex of a solution"));
                    }
                    let sol = build_solution(t, shape, index, &p1, (a, sa), (b, sb))?;
                    let key = curve::canonical_key(&sol.marked);
                    if found.insert(key, sol).is_some() {
                        return Err(non_generic("two incidence solutions give the same marked curve"));
                    }
                }
            }
        }
    }
    Ok(SolutionSet {
        torus: t.clone(),
        class: *c,
        genus: 2,
        points: pts.to_vec(),
        bound,
        certified_bound,
        shapes,
        solutions: found.into_values().collect(),
        certificate: GenericityCertificate {
            torus_generic: splitting_classes(c, t).is_empty(),
            points_distinct: true,
            marks_interior: true,
            no_edge_families: true,
            no_duplicates: true,
        },
    })
}

/// Per-solution verdicts of every structural check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionAudit {
    pub balanced: bool,
    pub simple: bool,
    pub class_matches: bool,
    pub through_points: bool,
    pub tree_complement: bool,
    pub parity: bool,
    pub lattice_product: bool,
    pub deformation_dimension: Option<usize>,
}

impl SolutionAudit {
    pub fn passed(&self) -> bool {
        self.balanced
            && self.simple
            && self.class_matches
            && self.through_points
            && self.tree_complement
            && self.parity
            && self.lattice_product
            && self.deformation_dimension == Some(2)
    }
}

pub fn audit_solution(set: &SolutionSet, sol: &Solution) -> SolutionAudit {
    let mc = &sol.marked;
    let c = &mc.curve;
    let class_matches =
        curve::degree_class(c).ok() == Some(set.class) && curve::degree_class_by_crossings(c).ok() == Some(set.class);
    SolutionAudit {
        balanced: curve::check_balanced(c),
        simple: curve::is_simple(c).simple,
        class_matches,
        through_points: mc.mark_points() == set.points,
        tree_complement: lifting::cut_and_lift(c, &mc.marks).map(|pc| pc.genus() == 0).unwrap_or(false),
        parity: multiplicity::check_parity(c).unwrap_or(false),
        lattice_product: multiplicity::lattice_matches_product(mc),
        deformation_dimension: lifting::deformation_dimension(c).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, sigma1};
    use crate::torus::sample_generic_points;

    fn hexagon() -> TropicalTorus {
        TropicalTorus::from_i64([[9, 1], [1, 7]]).unwrap()
    }

    #[test]
    fn class_2i_counts() {
        let t = hexagon();
        let c = CurveClass::new([[2, 0], [0, 2]]);
        let set = enumerate_genus2(&t, &c, &sample_generic_points(&t, 2, 1), None).unwrap();
        assert!(set.certificate.all());
        assert_eq!(set.solutions.len(), 22);
        let n: i64 = set.solutions.iter().map(Solution::complex).sum();
        let m: i64 = set.solutions.iter().map(|s| s.classical).sum();
        assert_eq!((n, m), (120, 88));
        let mut by_type: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for s in &set.solutions {
            *by_type.entry((s.gcd, s.classical)).or_default() += 1;
            assert_eq!(s.automorphisms, 1);
            assert!(audit_solution(&set, s).passed());
        }
        assert_eq!(by_type, BTreeMap::from([((1, 1), 8), ((1, 4), 12), ((2, 16), 2)]));
    }

    #[test]
    fn class_1n_matches_divisor_sums() {
        for n in 1..=4i64 {
            let t = TropicalTorus::from_i64([[11, 2], [2 * n, 7]]).unwrap();
            let c = CurveClass::new([[1, 0], [0, n]]);
            let set = enumerate_genus2(&t, &c, &sample_generic_points(&t, 2, 7), None).unwrap();
            let total: i64 = set.solutions.iter().map(Solution::complex).sum();
            assert_eq!(total, 2 * n * sigma1(n).unwrap() as i64, "n = {n}");
        }
    }

    #[test]
    fn unit_class_has_one_curve_in_two_labelings() {
        let t = TropicalTorus::from_i64([[11, 2], [2, 7]]).unwrap();
        let c = CurveClass::new([[1, 0], [0, 1]]);
        let set = enumerate_genus2(&t, &c, &sample_generic_points(&t, 2, 3), None).unwrap();
        assert_eq!(set.shapes.len(), 1);
        assert_eq!(set.solutions.len(), 2);
        assert!(set.solutions.iter().all(|s| s.classical == 1 && s.gcd == 1));
    }

    #[test]
    fn degenerate_points_are_rejected() {
        let t = hexagon();
        let c = CurveClass::new([[2, 0], [0, 2]]);
        let p = TorusPoint::new([rat(1, 3), rat(2, 5)]).unwrap();
        let err = enumerate_genus2(&t, &c, &[p.clone(), p.clone()], None).unwrap_err();
        assert!(matches!(err, Error::NonGeneric(_)));
        // S^{-1} (62/1000, 0): a short horizontal step
        let q = TorusPoint::new([rat(1, 3) + rat(7, 1000), rat(2, 5) - rat(1, 1000)]).unwrap();
        assert!(matches!(enumerate_genus2(&t, &c, &[p, q], None), Err(Error::NonGeneric(_))));
        let r = CurveClass::new([[1, 1], [1, 1]]);
        assert!(matches!(enumerate_genus2(&t, &r, &sample_generic_points(&t, 2, 1), None), Err(Error::Domain(_))));
    }
}
