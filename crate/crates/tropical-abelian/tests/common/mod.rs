#![allow(dead_code)]

use tropical_abelian::catalog;
use tropical_abelian::curve::{MarkedCurve, ParamCurve};
use tropical_abelian::torus::{CurveClass, TropicalTorus};

/// Generic tori for class 2I.
pub fn tori_2i() -> Vec<TropicalTorus> {
    [[[9, 1], [1, 7]], [[13, 2], [2, 11]], [[17, -3], [-3, 12]]]
        .into_iter()
        .map(|s| TropicalTorus::from_i64(s).unwrap())
        .collect()
}

pub fn class(m: [[i64; 2]; 2]) -> CurveClass {
    CurveClass::new(m)
}

/// Torus on which class `(1, n)` is realizable and generic.
pub fn torus_1n(n: i64) -> TropicalTorus {
    TropicalTorus::from_i64([[11, 2], [2 * n, 7]]).unwrap()
}

/// Every simple hand-built curve.
pub fn corpus_curves() -> Vec<(String, ParamCurve)> {
    let mut out = vec![
        ("unit theta".to_string(), catalog::unit_theta()),
        ("double theta".to_string(), catalog::double_theta()),
        ("skew theta".to_string(), catalog::skew_theta()),
        ("genus three ladder".to_string(), catalog::genus_three_ladder()),
        ("genus five diag(2,3)".to_string(), catalog::genus_five_diag23()),
        ("genus five square".to_string(), catalog::genus_five_square().0),
    ];
    for e in catalog::class_2i_catalog() {
        out.push((e.name.to_string(), e.curve));
    }
    out
}

/// Hand-built curve and marking pairs.
pub fn corpus_markings() -> Vec<(String, MarkedCurve)> {
    let mut out = vec![
        ("double theta, drawn marks".to_string(), catalog::double_theta_marked()),
        ("skew theta, heavy mark".to_string(), catalog::skew_theta_heavy_mark()),
        ("skew theta, light marks".to_string(), catalog::skew_theta_light_marks()),
    ];
    let (c, cuts) = catalog::genus_five_square();
    out.push(("genus five square, drawn cuts".to_string(), MarkedCurve { curve: c, marks: cuts }));
    for (name, c) in corpus_curves() {
        if tropical_abelian::curve::genus(&c) == 2 {
            for (i, mc) in catalog::midpoint_markings(&c).into_iter().enumerate() {
                out.push((format!("{name}, marking {i}"), mc));
            }
        }
    }
    out
}
