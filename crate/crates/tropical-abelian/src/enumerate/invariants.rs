use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{enumerate_genus2, SolutionSet};
use crate::exactmath::{laurent_eval_one, laurent_substitute, quantum_integer, LaurentHalf};
use crate::torus::{is_generic_for, sample_generic_points, CurveClass, TropicalTorus};
use crate::{Error, Result};

/// Contribution of the solutions with curve gcd `gcd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdRow {
    pub gcd: i64,
    pub solutions: usize,
    /// `N_k`: sum of `m_Γ`.
    pub classical: BigInt,
    /// `BG_k`: sum of `m^q_Γ`.
    pub refined: LaurentHalf,
}

/// Counts of one enumeration. `m = Σ N_k`, `n = Σ k N_k`,
/// `bg = Σ BG_k`, `r = Σ k BG_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub genus: usize,
    pub class: CurveClass,
    /// Ascending by gcd.
    pub per_gcd: Vec<GcdRow>,
    pub m: BigInt,
    pub n: BigInt,
    pub bg: LaurentHalf,
    pub r: LaurentHalf,
}

impl InvariantTable {
    pub fn row(&self, gcd: i64) -> Option<&GcdRow> {
        self.per_gcd.iter().find(|r| r.gcd == gcd)
    }

    /// The four aggregates agree with the rows, and each row agrees with
    /// itself at `q = 1`.
    pub fn is_consistent(&self) -> bool {
        let k = |r: &GcdRow| BigInt::from(r.gcd);
        let m: BigInt = self.per_gcd.iter().map(|r| r.classical.clone()).sum();
        let n: BigInt = self.per_gcd.iter().map(|r| k(r) * &r.classical).sum();
        let bg: LaurentHalf = self.per_gcd.iter().map(|r| r.refined.clone()).sum();
        let rr: LaurentHalf = self.per_gcd.iter().map(|r| r.refined.scale(&k(r))).sum();
        m == self.m
            && n == self.n
            && bg == self.bg
            && rr == self.r
            && self.per_gcd.iter().all(|r| laurent_eval_one(&r.refined) == r.classical)
    }
}

pub fn assemble_invariants(set: &SolutionSet) -> InvariantTable {
    let mut rows: BTreeMap<i64, GcdRow> = BTreeMap::new();
    for s in &set.solutions {
        let row = rows.entry(s.gcd).or_insert_with(|| GcdRow {
            gcd: s.gcd,
            solutions: 0,
            classical: BigInt::from(0),
            refined: LaurentHalf::zero(),
        });
        row.solutions += 1;
        row.classical += BigInt::from(s.classical);
        row.refined = &row.refined + &s.refined;
    }
    let per_gcd: Vec<GcdRow> = rows.into_values().collect();
    let m = per_gcd.iter().map(|r| r.classical.clone()).sum();
    let n = per_gcd.iter().map(|r| BigInt::from(r.gcd) * &r.classical).sum();
    let bg = per_gcd.iter().map(|r| r.refined.clone()).sum();
    let r = per_gcd.iter().map(|r| r.refined.scale(&BigInt::from(r.gcd))).sum();
    InvariantTable { genus: set.genus, class: set.class, per_gcd, m, n, bg, r }
}

/// `N_{C,k} = k^{2(2g-2)} N_{C/k,1}` and
/// `BG_{C,k} = [k^2]^{2g-2} BG_{C/k,1}(q^{k^2})`, where `small` is the table
/// of `C/k`. Missing rows count as zero.
pub fn per_gcd_scaling_holds(big: &InvariantTable, small: &InvariantTable, k: i64) -> bool {
    let vertices = 2 * big.genus as u32 - 2;
    let zero = (BigInt::from(0), LaurentHalf::zero());
    let pick = |t: &InvariantTable, g: i64| {
        t.row(g).map(|r| (r.classical.clone(), r.refined.clone())).unwrap_or_else(|| zero.clone())
    };
    let (nb, bgb) = pick(big, k);
    let (ns, bgs) = pick(small, 1);
    let k2 = (k * k) as u64;
    let factor = quantum_integer(k2 as i64).expect("positive").pow(vertices);
    nb == BigInt::from(k2).pow(vertices) * ns && bgb == &factor * &laurent_substitute(&bgs, k2)
}

/// Result of one (torus, seed) run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    Table(InvariantTable),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    /// `(torus index, seed, outcome)` in input order.
    pub runs: Vec<(usize, u64, RunOutcome)>,
    pub identical: bool,
}

impl InvarianceReport {
    pub fn tables(&self) -> impl Iterator<Item = &InvariantTable> {
        self.runs.iter().filter_map(|(_, _, o)| match o {
            RunOutcome::Table(t) => Some(t),
            RunOutcome::Skipped(_) => None,
        })
    }
}

/// Enumerates for every torus and seed and compares the tables. Runs whose
/// points turn out non-generic are skipped; at least two must succeed.
pub fn invariance_regression(tori: &[TropicalTorus], c: &CurveClass, seeds: &[u64]) -> Result<InvarianceReport> {
    let mut runs = Vec::new();
    for (i, t) in tori.iter().enumerate() {
        if !is_generic_for(c, t) {
            return Err(Error::Domain(format!("torus {i} is not generic for the class")));
        }
        for &seed in seeds {
            let pts = sample_generic_points(t, 2, seed);
            let outcome = match enumerate_genus2(t, c, &pts, None) {
                Ok(set) => RunOutcome::Table(assemble_invariants(&set)),
                Err(Error::NonGeneric(msg)) => RunOutcome::Skipped(msg),
                Err(e) => return Err(e),
            };
            runs.push((i, seed, outcome));
        }
    }
    let report = InvarianceReport { runs, identical: false };
    let tables: Vec<&InvariantTable> = report.tables().collect();
    if tables.len() < 2 {
        return Err(Error::NonGeneric("fewer than two runs succeeded".into()));
    }
    let identical = tables.windows(2).all(|w| w[0] == w[1]);
    Ok(InvarianceReport { identical, ..report })
}
