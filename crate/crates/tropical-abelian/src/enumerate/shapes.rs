//! Metric theta graphs of a given class, up to translation.
//!
//! Put the winding of one edge to zero. The other two windings form an
//! integer matrix `Λ = [λ1 λ2]`, and then everything else is forced:
//! `C = U Λ^T` gives the slopes `U = [u1 u2]`, `u3 = -u1 - u2`, and
//! `S Λ = U [[l1 + l3, l3], [l3, l2 + l3]]` gives the lengths.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::exactmath::{int, Rational};
use crate::plane::IVec;
use crate::torus::{CurveClass, TropicalTorus};

/// One edge of a shape, oriented from vertex A to vertex B:
/// `X_B + S λ - X_A = l u`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShapeEdge {
    pub slope: IVec,
    pub winding: IVec,
    pub length: Rational,
}

/// A theta graph up to translation, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaShape {
    pub edges: [ShapeEdge; 3],
}

impl ThetaShape {
    /// `X_B - X_A`, read off the edge with zero winding.
    pub fn vertex_offset(&self) -> [Rational; 2] {
        let e = self.edges.iter().find(|e| e.winding == [0, 0]).expect("canonical shapes have a zero winding");
        [&e.length * int(e.slope[0]), &e.length * int(e.slope[1])]
    }

    /// `|det(u1, u2)|`, the multiplicity of both vertices.
    pub fn vertex_multiplicity(&self) -> i64 {
        let [a, b] = [self.edges[0].slope, self.edges[1].slope];
        (a[0] * b[1] - a[1] * b[0]).abs()
    }

    pub fn gcd(&self) -> i64 {
        self.edges.iter().fold(0i64, |g, e| num_integer::gcd(g, num_integer::gcd(e.slope[0], e.slope[1])))
    }
}

/// Minimum over the vertex swap and over the choice of zero-winding edge.
fn canonical(edges: [ShapeEdge; 3]) -> ThetaShape {
    let mut best: Option<[ShapeEdge; 3]> = None;
    for sign in [1i64, -1] {
        for k in 0..3 {
            let mu = edges[k].winding;
            let mut rep = edges.clone().map(|e| ShapeEdge {
                slope: [sign * e.slope[0], sign * e.slope[1]],
                winding: [sign * (e.winding[0] - mu[0]), sign * (e.winding[1] - mu[1])],
                length: e.length,
            });
            rep.sort();
            if best.as_ref().is_none_or(|b| &rep < b) {
                best = Some(rep);
            }
        }
    }
    ThetaShape { edges: best.expect("six candidates") }
}

/// Box `|λ_{i,j}| <= bound[j]` that provably contains the windings of every
/// theta curve of class `C` (in the gauge where one winding is zero).
///
/// From `C S^T = Σ l_e u_e u_e^T =: Q` one gets
/// `|l_e u_{e,k}| <= sqrt(tr Q * Q_kk)`, and `S λ_i = l_i u_i - l_3 u_3`.
pub fn certified_winding_bound(c: &CurveClass, t: &TropicalTorus) -> [i64; 2] {
    let q = c.gram(t);
    let tr = &q[0][0] + &q[1][1];
    // R_k >= 2 sqrt(tr Q * Q_kk), as an integer
    let r: Vec<BigInt> = (0..2)
        .map(|k| {
            let sq = (int(4) * &tr * &q[k][k]).ceil().to_integer();
            let s = if sq.is_negative() { BigInt::from(0) } else { sq.sqrt() };
            s + 1
        })
        .collect();
    let s = t.period();
    let det = t.det();
    let inv = [[&s[1][1] / &det, -&s[0][1] / &det], [-&s[1][0] / &det, &s[0][0] / &det]];
    let mut out = [0i64; 2];
    for (j, slot) in out.iter_mut().enumerate() {
        let b: Rational = (0..2).map(|k| inv[j][k].abs() * BigRational::from_integer(r[k].clone())).sum();
        *slot = b.ceil().to_integer().to_i64().expect("bound fits in i64");
    }
    out
}

/// All theta shapes of class `C` with windings in the given box.
pub fn theta_shapes(c: &CurveClass, t: &TropicalTorus, bound: [i64; 2]) -> Vec<ThetaShape> {
    if c.det() == 0 {
        return Vec::new();
    }
    let cm = c.m;
    let [b0, b1] = bound;
    let found: BTreeSet<ThetaShape> = (-b0..=b0)
        .into_par_iter()
        .flat_map_iter(|l11| {
            let mut local = Vec::new();
            for l21 in -b1..=b1 {
                for l12 in -b0..=b0 {
                    for l22 in -b1..=b1 {
                        // Λ = [[l11, l12], [l21, l22]], columns λ1 = (l11, l21), λ2 = (l12, l22)
                        if let Some(shape) = shape_for(&cm, t, [[l11, l12], [l21, l22]]) {
                            local.push(shape);
                        }
                    }
                }
            }
            local
        })
        .collect();
    found.into_iter().collect()
}

fn shape_for(cm: &[[i64; 2]; 2], t: &TropicalTorus, lam: [[i64; 2]; 2]) -> Option<ThetaShape> {
    let d = lam[0][0] * lam[1][1] - lam[0][1] * lam[1][0];
    if d == 0 {
        return None;
    }
    // U * d = C * adj(Λ)^T, adj(Λ)^T = [[l22, -l21], [-l12, l11]]
    let adj_t = [[lam[1][1], -lam[1][0]], [-lam[0][1], lam[0][0]]];
    let mut u = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let v = cm[i][0] * adj_t[0][j] + cm[i][1] * adj_t[1][j];
            if v % d != 0 {
                return None;
            }
            u[i][j] = v / d;
        }
    }
    let du = u[0][0] * u[1][1] - u[0][1] * u[1][0];
    if du == 0 {
        return None;
    }
    // L = U^{-1} S Λ
    let s = t.period();
    let mut sl: [[Rational; 2]; 2] = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            sl[i][j] = &s[i][0] * int(lam[0][j]) + &s[i][1] * int(lam[1][j]);
        }
    }
    let uinv = [[int(u[1][1]), int(-u[0][1])], [int(-u[1][0]), int(u[0][0])]];
    let mut l: [[Rational; 2]; 2] = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            l[i][j] = (&uinv[i][0] * &sl[0][j] + &uinv[i][1] * &sl[1][j]) / int(du);
        }
    }
    if l[0][1] != l[1][0] {
        return None;
    }
    let l3 = l[0][1].clone();
    let l1 = &l[0][0] - &l3;
    let l2 = &l[1][1] - &l3;
    if !(l1.is_positive() && l2.is_positive() && l3.is_positive()) {
        return None;
    }
    let u1 = [u[0][0], u[1][0]];
    let u2 = [u[0][1], u[1][1]];
    let u3 = [-u1[0] - u2[0], -u1[1] - u2[1]];
    Some(canonical([
        ShapeEdge { slope: u1, winding: [lam[0][0], lam[1][0]], length: l1 },
        ShapeEdge { slope: u2, winding: [lam[0][1], lam[1][1]], length: l2 },
        ShapeEdge { slope: u3, winding: [0, 0], length: l3 },
    ]))
}
