//! Multiplicities of simple curves.
//!
//! Two independent routes to the complex multiplicity are kept side by side:
//! the product `δ_Γ ∏ m_V`, and the lattice route through the map `Θ` of a
//! marked curve, whose cokernel torsion times the product of the subdivided
//! edge weights gives the same number.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::curve::{curve_gcd, genus, is_simple, MarkedCurve, ParamCurve};
use crate::exactmath::{maximal_minor_gcd_bruteforce, quantum_integer, smith_normal_form, IntMatrix, LaurentHalf};
use crate::plane::{self, IVec};
use crate::{Error, Result};

/// `|det|` of two outgoing slopes at a trivalent vertex.
pub fn vertex_multiplicity(c: &ParamCurve, v: usize) -> Result<i64> {
    let out = c.graph.outgoing(v);
    if out.len() != 3 {
        return Err(Error::Invalid(format!("vertex {v} has valence {}", out.len())));
    }
    Ok(plane::idet(out[0].1, out[1].1).abs())
}

fn require_simple(c: &ParamCurve) -> Result<()> {
    let s = is_simple(c);
    if s.simple {
        Ok(())
    } else {
        Err(Error::Invalid(format!("not simple: {}", s.reason.unwrap_or_default())))
    }
}

pub fn vertex_multiplicities(c: &ParamCurve) -> Result<Vec<i64>> {
    (0..c.num_vertices()).map(|v| vertex_multiplicity(c, v)).collect()
}

/// `∏ m_V`.
pub fn classical_multiplicity(c: &ParamCurve) -> Result<i64> {
    require_simple(c)?;
    Ok(vertex_multiplicities(c)?.into_iter().product())
}

/// `∏ [m_V]_q`.
pub fn refined_multiplicity(c: &ParamCurve) -> Result<LaurentHalf> {
    require_simple(c)?;
    let mut acc = LaurentHalf::one();
    for m in vertex_multiplicities(c)? {
        acc = &acc * &quantum_integer(m)?;
    }
    Ok(acc)
}

/// `δ_Γ ∏ m_V`.
pub fn complex_multiplicity(c: &ParamCurve) -> Result<i64> {
    Ok(curve_gcd(c)? * classical_multiplicity(c)?)
}

/// `Σ m_V / δ_Γ` is even.
pub fn check_parity(c: &ParamCurve) -> Result<bool> {
    let d = curve_gcd(c)?;
    require_simple(c)?;
    let total: i64 = vertex_multiplicities(c)?.iter().map(|m| m / d).sum();
    Ok(total % 2 == 0)
}

/// Edge of the curve subdivided at its marks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubEdge {
    /// Endpoints in the stored direction of `primitive_slope`.
    pub tail: usize,
    pub head: usize,
    pub weight: i64,
    pub primitive_slope: IVec,
    /// Original edge this piece belongs to.
    pub source: usize,
}

/// What a row of `Θ` measures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowTag {
    /// `det(u'_e, φ_to - φ_from)` for the sub-edge, traversed `from -> to`.
    Edge { sub_edge: usize, from: usize, to: usize },
    /// Coordinate `coord` of the vertex sitting at mark `mark`.
    Mark { mark: usize, coord: usize },
}

/// Matrix of `Θ` with its bookkeeping. Columns are `(vertex, coordinate)` of
/// the subdivided graph, in vertex-major order.
#[derive(Clone, Debug)]
pub struct ThetaMatrix {
    pub matrix: IntMatrix,
    pub rows: Vec<RowTag>,
    pub sub_edges: Vec<SubEdge>,
    pub num_vertices: usize,
}

impl ThetaMatrix {
    /// Product of the weights of the subdivided edges.
    pub fn weight_product(&self) -> i64 {
        self.sub_edges.iter().map(|e| e.weight).product()
    }

    /// Row functional with coefficient `±w_e / δ` on edge rows, sign matching
    /// the traversal; it annihilates every column when the curve is balanced.
    pub fn phi(&self) -> Vec<BigInt> {
        let delta = self.sub_edges.iter().fold(0i64, |g, e| num_integer::gcd(g, e.weight));
        self.rows
            .iter()
            .map(|r| match r {
                RowTag::Edge { sub_edge, from, .. } => {
                    let e = &self.sub_edges[*sub_edge];
                    let sign = if *from == e.tail { 1 } else { -1 };
                    BigInt::from(sign * e.weight / delta)
                }
                RowTag::Mark { .. } => BigInt::zero(),
            })
            .collect()
    }

    /// `φ · Θ`, one entry per column.
    pub fn phi_times_theta(&self) -> Vec<BigInt> {
        let phi = self.phi();
        (0..self.matrix.cols()).map(|j| (0..self.matrix.rows()).map(|i| &phi[i] * &self.matrix[(i, j)]).sum()).collect()
    }
}

/// Subdivides at the marks; the complement of the marks must be a spanning
/// tree and there must be exactly `genus` marks.
fn subdivide(mc: &MarkedCurve) -> Result<(Vec<SubEdge>, usize)> {
    let c = &mc.curve;
    require_simple(c)?;
    let g = genus(c);
    if mc.marks.len() != g {
        return Err(Error::Invalid(format!("{} marks on a genus-{g} curve", mc.marks.len())));
    }
    let mut marked = vec![None; c.edges().len()];
    for (i, m) in mc.marks.iter().enumerate() {
        let e =
            c.edges().get(m.edge).ok_or_else(|| Error::Invalid(format!("mark {i} names missing edge {}", m.edge)))?;
        if m.t <= num_traits::zero() || m.t >= e.length {
            return Err(Error::Invalid(format!("mark {i} is not interior to edge {}", m.edge)));
        }
        if marked[m.edge].replace(i).is_some() {
            return Err(Error::Invalid("two marks on one edge: complement is not a tree".into()));
        }
    }
    let n = c.num_vertices();
    let unmarked: Vec<(usize, usize)> =
        c.edges().iter().enumerate().filter(|(i, _)| marked[*i].is_none()).map(|(_, e)| (e.tail, e.head)).collect();
    if !is_spanning_tree(n, &unmarked) {
        return Err(Error::Invalid("complement of the marks is not a tree".into()));
    }
    let mut subs = Vec::new();
    for (i, e) in c.edges().iter().enumerate() {
        let piece =
            |tail, head| SubEdge { tail, head, weight: e.weight, primitive_slope: e.primitive_slope, source: i };
        match marked[i] {
            None => subs.push(piece(e.tail, e.head)),
            Some(k) => {
                subs.push(piece(e.tail, n + k));
                subs.push(piece(n + k, e.head));
            }
        }
    }
    Ok((subs, n + mc.marks.len()))
}

fn is_spanning_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    if edges.len() + 1 != n {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// `Θ` with canonical traversal: every sub-edge from its lower to its higher
/// vertex index.
pub fn build_theta(mc: &MarkedCurve) -> Result<ThetaMatrix> {
    build_theta_oriented(mc, &[])
}

/// `Θ` with sub-edge `i` traversed against the canonical direction when
/// `flips[i]` is set (missing entries count as unset).
pub fn build_theta_oriented(mc: &MarkedCurve, flips: &[bool]) -> Result<ThetaMatrix> {
    let (sub_edges, nv) = subdivide(mc)?;
    let n_rows = sub_edges.len() + 2 * mc.marks.len();
    let mut m = IntMatrix::zeros(n_rows, 2 * nv);
    let mut rows = Vec::with_capacity(n_rows);
    for (i, e) in sub_edges.iter().enumerate() {
        let (lo, hi) = (e.tail.min(e.head), e.tail.max(e.head));
        let (from, to) = if flips.get(i).copied().unwrap_or(false) { (hi, lo) } else { (lo, hi) };
        // det(u', p) = u'_x p_y - u'_y p_x
        let [ux, uy] = e.primitive_slope;
        m[(i, 2 * to)] += -uy;
        m[(i, 2 * to + 1)] += ux;
        m[(i, 2 * from)] += uy;
        m[(i, 2 * from + 1)] += -ux;
        rows.push(RowTag::Edge { sub_edge: i, from, to });
    }
    let base_vertices = nv - mc.marks.len();
    for k in 0..mc.marks.len() {
        for coord in 0..2 {
            let r = rows.len();
            m[(r, 2 * (base_vertices + k) + coord)] = BigInt::one();
            rows.push(RowTag::Mark { mark: k, coord });
        }
    }
    Ok(ThetaMatrix { matrix: m, rows, sub_edges, num_vertices: nv })
}

/// Both lattice routes and the product route for one marked curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCheck {
    /// Order of the torsion of `coker Θ`, from the Smith form.
    pub torsion: BigInt,
    /// Same order from the gcd of maximal minors.
    pub torsion_by_minors: BigInt,
    pub weight_product: i64,
    pub by_theta: BigInt,
    pub by_product: i64,
}

impl LatticeCheck {
    pub fn agrees(&self) -> bool {
        self.torsion == self.torsion_by_minors && self.by_theta == BigInt::from(self.by_product)
    }
}

fn theta_torsion(theta: &ThetaMatrix) -> Result<BigInt> {
    let snf = smith_normal_form(&theta.matrix);
    if snf.rank != theta.matrix.cols() {
        return Err(Error::Invalid(format!("Θ is not injective: rank {} < {}", snf.rank, theta.matrix.cols())));
    }
    Ok(snf.torsion_order())
}

/// `|tors coker Θ| * ∏_{e ∈ E(Γ')} w_e`.
pub fn lattice_multiplicity(mc: &MarkedCurve) -> Result<BigInt> {
    let theta = build_theta(mc)?;
    Ok(theta_torsion(&theta)? * BigInt::from(theta.weight_product()))
}

/// Runs every route; errors only when the marking is invalid.
pub fn lattice_check(mc: &MarkedCurve) -> Result<LatticeCheck> {
    let theta = build_theta(mc)?;
    let torsion = theta_torsion(&theta)?;
    let torsion_by_minors = maximal_minor_gcd_bruteforce(&theta.matrix);
    let weight_product = theta.weight_product();
    Ok(LatticeCheck {
        by_theta: &torsion * BigInt::from(weight_product),
        torsion,
        torsion_by_minors,
        weight_product,
        by_product: complex_multiplicity(&mc.curve)?,
    })
}

/// Lattice route equals `δ_Γ ∏ m_V`.
pub fn lattice_matches_product(mc: &MarkedCurve) -> bool {
    lattice_check(mc).map(|c| c.agrees()).unwrap_or(false)
}

/// Everything the `mult` command prints for one curve.
#[derive(Clone, Debug)]
pub struct MultiplicityReport {
    pub vertex_multiplicities: Vec<i64>,
    pub classical: i64,
    pub refined: LaurentHalf,
    pub gcd: i64,
    pub complex_by_product: i64,
    pub parity_ok: bool,
    pub theta: Option<LatticeCheck>,
}

pub fn report(mc: &MarkedCurve) -> Result<MultiplicityReport> {
    let c = &mc.curve;
    Ok(MultiplicityReport {
        vertex_multiplicities: vertex_multiplicities(c)?,
        classical: classical_multiplicity(c)?,
        refined: refined_multiplicity(c)?,
        gcd: curve_gcd(c)?,
        complex_by_product: complex_multiplicity(c)?,
        parity_ok: check_parity(c)?,
        theta: if mc.marks.is_empty() { None } else { Some(lattice_check(mc)?) },
    })
}
