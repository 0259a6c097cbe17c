//! Hand-built reference curves.
//!
//! Each constructor returns a validated curve assembled from vertex lifts in
//! the plane; tests pin their classes and multiplicities.

use crate::curve::{CoverEdge, Mark, MarkedCurve, ParamCurve};
use crate::exactmath::{rat, Rational};
use crate::plane::Point;
use crate::torus::{CurveClass, TropicalTorus};

fn pt(x: Rational, y: Rational) -> Point {
    [x, y]
}

fn ip(x: i64, y: i64) -> Point {
    [rat(x, 1), rat(y, 1)]
}

fn half(x2: i64, y2: i64) -> Point {
    [rat(x2, 2), rat(y2, 2)]
}

fn build(s: [[i64; 2]; 2], lifts: &[Point], edges: &[CoverEdge]) -> ParamCurve {
    let t = TropicalTorus::from_i64(s).expect("catalog period is invertible");
    ParamCurve::from_cover(&t, lifts, edges).expect("catalog curve is consistent")
}

fn e(tail: usize, head: usize, slope: [i64; 2], shift: [i64; 2]) -> CoverEdge {
    CoverEdge::new(tail, head, slope, shift)
}

fn marked(curve: ParamCurve, marks: &[(usize, Rational)]) -> MarkedCurve {
    let marks = marks.iter().map(|(edge, t)| Mark { edge: *edge, t: t.clone() }).collect();
    MarkedCurve { curve, marks }
}

/// Theta curve of class `I` on the torus `[[8,2],[2,8]]`, all weights 1.
pub fn unit_theta() -> ParamCurve {
    build(
        [[8, 2], [2, 8]],
        &[ip(4, 4), ip(6, 6)],
        &[e(1, 0, [1, 0], [1, 0]), e(1, 0, [0, 1], [0, 1]), e(0, 1, [1, 1], [0, 0])],
    )
}

/// The same shape with every weight 2, in class `2I` on `[[8,2],[2,8]]`.
/// Vertex multiplicities 4 and 4, gcd 2.
pub fn double_theta() -> ParamCurve {
    build(
        [[8, 2], [2, 8]],
        &[ip(6, 3), ip(8, 5)],
        &[e(1, 0, [2, 0], [1, 0]), e(1, 0, [0, 2], [0, 1]), e(0, 1, [2, 2], [0, 0])],
    )
}

/// [`double_theta`] through `(3,3)` on the horizontal edge and `(7,4)` on
/// the diagonal one.
pub fn double_theta_marked() -> MarkedCurve {
    marked(double_theta(), &[(0, rat(3, 2)), (2, rat(1, 2))])
}

/// Genus-5 curve of class `diag(2,3)` on `[[12,2],[3,8]]`, all weights 1.
pub fn genus_five_diag23() -> ParamCurve {
    let v = [ip(3, 2), ip(4, 3), ip(4, 5), ip(6, 3), ip(8, 5), ip(5, 6), ip(9, 6), ip(11, 8)];
    let [a, b, c, d, ee, f, g, h] = [0, 1, 2, 3, 4, 5, 6, 7];
    build(
        [[12, 2], [3, 8]],
        &v,
        &[
            e(a, b, [1, 1], [0, 0]),
            e(b, c, [0, 1], [0, 0]),
            e(b, d, [1, 0], [0, 0]),
            e(d, ee, [1, 1], [0, 0]),
            e(c, f, [1, 1], [0, 0]),
            e(f, g, [1, 0], [0, 0]),
            e(g, h, [1, 1], [0, 0]),
            e(ee, a, [1, 0], [1, 0]),
            e(h, c, [1, 0], [1, 0]),
            e(f, a, [0, 1], [0, 1]),
            e(ee, d, [0, 1], [0, 1]),
            e(h, g, [0, 1], [0, 1]),
        ],
    )
}

/// Theta curve of class `[[2,1],[0,1]]` on `[[4,-1],[-2,3]]` with one
/// weight-2 edge (edge 1). Vertex multiplicities 2 and 2, gcd 1.
pub fn skew_theta() -> ParamCurve {
    build(
        [[4, -1], [-2, 3]],
        &[ip(2, 3), ip(4, 1)],
        &[e(0, 1, [1, -1], [0, 0]), e(1, 0, [2, 0], [1, 0]), e(0, 1, [1, 1], [0, 1])],
    )
}

/// [`skew_theta`] marked on the weight-2 edge and on the direct edge.
pub fn skew_theta_heavy_mark() -> MarkedCurve {
    marked(skew_theta(), &[(1, rat(1, 2)), (0, rat(1, 1))])
}

/// [`skew_theta`] marked on the two weight-1 edges.
pub fn skew_theta_light_marks() -> MarkedCurve {
    marked(skew_theta(), &[(2, rat(1, 2)), (0, rat(1, 1))])
}

/// Genus-5 curve of class `2I` on the square torus `5I`, with a lifting set
/// of five points (edge, parameter).
pub fn genus_five_square() -> (ParamCurve, Vec<Mark>) {
    let v = [ip(1, 2), ip(2, 1), ip(3, 1), ip(4, 2), ip(1, 3), ip(2, 4), ip(3, 4), ip(4, 3)];
    let [a, b, c, d, ee, f, g, h] = [0, 1, 2, 3, 4, 5, 6, 7];
    let curve = build(
        [[5, 0], [0, 5]],
        &v,
        &[
            e(d, a, [1, 0], [1, 0]),
            e(a, b, [1, -1], [0, 0]),
            e(b, c, [1, 0], [0, 0]),
            e(c, d, [1, 1], [0, 0]),
            e(h, ee, [1, 0], [1, 0]),
            e(ee, f, [1, 1], [0, 0]),
            e(f, g, [1, 0], [0, 0]),
            e(g, h, [1, -1], [0, 0]),
            e(a, ee, [0, 1], [0, 0]),
            e(f, b, [0, 1], [0, 1]),
            e(g, c, [0, 1], [0, 1]),
            e(d, h, [0, 1], [0, 0]),
        ],
    );
    let cuts = [(0, rat(3, 2)), (8, rat(1, 2)), (10, rat(3, 2)), (6, rat(1, 2)), (9, rat(1, 2))];
    (curve, cuts.into_iter().map(|(edge, t)| Mark { edge, t }).collect())
}

/// Genus-3 curve on `5I`: two circles joined by two rungs.
pub fn genus_three_ladder() -> ParamCurve {
    build(
        [[5, 0], [0, 5]],
        &[ip(1, 1), ip(3, 2), ip(2, 4), pt(rat(16, 3), rat(7, 3))],
        &[
            e(0, 1, [2, 1], [0, 0]),
            e(1, 0, [3, -1], [1, 0]),
            e(0, 2, [1, -2], [0, -1]),
            e(1, 3, [-1, 2], [-1, 1]),
            e(2, 3, [2, -1], [0, 0]),
            e(3, 2, [1, 1], [1, 0]),
        ],
    )
}

/// Torus used for the class-`2I` catalog below.
pub fn hexagon_torus() -> TropicalTorus {
    TropicalTorus::from_i64([[9, 1], [1, 7]]).expect("invertible")
}

/// One combinatorial type of genus-2 curve in class `2I` on
/// [`hexagon_torus`], with the number of labeled markings it receives from a
/// generic pair of points.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub curve: ParamCurve,
    pub markings: u64,
}

/// The five types of genus-2 curves in class `2I` on [`hexagon_torus`].
pub fn class_2i_catalog() -> Vec<CatalogEntry> {
    let s = [[9, 1], [1, 7]];
    vec![
        CatalogEntry {
            name: "all weights 2",
            curve: build(
                s,
                &[ip(3, 3), ip(4, 4)],
                &[e(1, 0, [2, 0], [1, 0]), e(1, 0, [0, 2], [0, 1]), e(0, 1, [2, 2], [0, 0])],
            ),
            markings: 2,
        },
        CatalogEntry {
            name: "heavy horizontal edge",
            curve: build(
                s,
                &[half(5, 6), half(9, 8)],
                &[e(0, 1, [2, 1], [0, 0]), e(1, 0, [2, 0], [1, 0]), e(1, 0, [0, 1], [0, 2])],
            ),
            markings: 4,
        },
        CatalogEntry {
            name: "heavy vertical edge",
            curve: build(
                s,
                &[pt(rat(3, 1), rat(5, 2)), pt(rat(4, 1), rat(9, 2))],
                &[e(0, 1, [1, 2], [0, 0]), e(1, 0, [0, 2], [0, 1]), e(1, 0, [1, 0], [2, 0])],
            ),
            markings: 4,
        },
        CatalogEntry {
            name: "doubly wound",
            curve: build(
                s,
                &[half(5, 5), half(9, 9)],
                &[e(0, 1, [1, 1], [0, 0]), e(1, 0, [1, 0], [2, 0]), e(1, 0, [0, 1], [0, 2])],
            ),
            markings: 8,
        },
        CatalogEntry {
            name: "diagonal windings",
            curve: build(
                s,
                &[ip(3, 4), ip(5, 4)],
                &[e(0, 1, [2, 0], [0, 0]), e(0, 1, [-1, -1], [-1, -1]), e(0, 1, [-1, 1], [-1, 1])],
            ),
            markings: 4,
        },
    ]
}

/// Class `2I`, the class of every curve in [`class_2i_catalog`].
pub fn class_2i() -> CurveClass {
    CurveClass::new([[2, 0], [0, 2]])
}

/// Every ordered pair of distinct edges, the first marked at half its
/// length and the second at a third.
pub fn midpoint_markings(c: &ParamCurve) -> Vec<MarkedCurve> {
    let n = c.edges().len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b {
                let ta = &c.edges()[a].length / rat(2, 1);
                let tb = &c.edges()[b].length / rat(3, 1);
                out.push(marked(c.clone(), &[(a, ta), (b, tb)]));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{
        check_balanced, curve_gcd, degree_class, degree_class_by_crossings, genus, is_simple, validate,
    };
    use crate::torus::{is_realizable, reduce_to_fundamental};

    fn well_formed(c: &ParamCurve) {
        assert!(validate(c).is_empty(), "{:?}", validate(c));
        assert!(check_balanced(c));
        let d = degree_class(c).unwrap();
        assert_eq!(d, degree_class_by_crossings(c).unwrap());
        assert!(is_realizable(&d, &c.torus));
    }

    #[test]
    fn theta_curves() {
        for c in [unit_theta(), double_theta(), skew_theta()] {
            well_formed(&c);
            assert_eq!(genus(&c), 2);
            assert!(is_simple(&c).simple);
        }
        assert_eq!(degree_class(&unit_theta()).unwrap(), CurveClass::new([[1, 0], [0, 1]]));
        assert_eq!(degree_class(&double_theta()).unwrap(), class_2i());
        assert_eq!(curve_gcd(&double_theta()).unwrap(), 2);
        assert_eq!(degree_class(&skew_theta()).unwrap(), CurveClass::new([[2, 1], [0, 1]]));
    }

    #[test]
    fn double_theta_marks_hit_the_drawn_points() {
        let mc = double_theta_marked();
        let t = &mc.curve.torus;
        let pts = mc.mark_points();
        assert_eq!(pts[0], reduce_to_fundamental(&ip(3, 3), t).0);
        assert_eq!(pts[1], reduce_to_fundamental(&ip(7, 4), t).0);
    }

    #[test]
    fn skew_marks_hit_the_drawn_points() {
        let t = skew_theta().torus;
        let a = skew_theta_heavy_mark().mark_points();
        assert_eq!(a[0], reduce_to_fundamental(&ip(1, 3), &t).0);
        assert_eq!(a[1], reduce_to_fundamental(&ip(3, 2), &t).0);
        let b = skew_theta_light_marks().mark_points();
        assert_eq!(b[0], reduce_to_fundamental(&half(5, 7), &t).0);
    }

    #[test]
    fn genus_five_curves() {
        let c = genus_five_diag23();
        well_formed(&c);
        assert_eq!(genus(&c), 5);
        assert_eq!(degree_class(&c).unwrap(), CurveClass::new([[2, 0], [0, 3]]));
        let c = genus_three_ladder();
        well_formed(&c);
        assert_eq!(genus(&c), 3);
        assert!(is_simple(&c).simple);
        let (c, _) = genus_five_square();
        well_formed(&c);
        assert_eq!(genus(&c), 5);
        assert_eq!(degree_class(&c).unwrap(), class_2i());
    }

    #[test]
    fn class_2i_catalog_is_consistent() {
        for entry in class_2i_catalog() {
            well_formed(&entry.curve);
            assert_eq!(genus(&entry.curve), 2, "{}", entry.name);
            assert!(is_simple(&entry.curve).simple, "{}", entry.name);
            assert_eq!(degree_class(&entry.curve).unwrap(), class_2i(), "{}", entry.name);
        }
        let total: u64 = class_2i_catalog().iter().map(|e| e.markings).sum();
        assert_eq!(total, 22);
    }
}
