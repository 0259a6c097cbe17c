// The invariant table does not move with the points or the torus, and the
// gcd-2 part of 2I is determined by class I.

use tropical_abelian::enumerate::{
    assemble_invariants, enumerate_genus2, invariance_regression, per_gcd_scaling_holds, RunOutcome,
};
use tropical_abelian::torus::{sample_generic_points, CurveClass, TropicalTorus};
use tropical_abelian::Result;

pub fn run_example() -> Result<()> {
    let tori = [TropicalTorus::from_i64([[9, 1], [1, 7]])?, TropicalTorus::from_i64([[13, 2], [2, 11]])?];
    let c = CurveClass::new([[2, 0], [0, 2]]);
    let report = invariance_regression(&tori, &c, &[1, 2, 3])?;
    for (torus, seed, outcome) in &report.runs {
        match outcome {
            RunOutcome::Table(t) => println!("torus {torus}, seed {seed}: N = {}, BG = {}", t.n, t.bg),
            RunOutcome::Skipped(why) => println!("torus {torus}, seed {seed}: skipped ({why})"),
        }
    }
    println!("all tables identical: {}", report.identical);

    let t = &tori[0];
    let pts = sample_generic_points(t, 2, 9);
    let big = assemble_invariants(&enumerate_genus2(t, &c, &pts, None)?);
    let small = assemble_invariants(&enumerate_genus2(t, &CurveClass::new([[1, 0], [0, 1]]), &pts, None)?);
    println!("gcd-2 part of 2I from class I: {}", per_gcd_scaling_holds(&big, &small, 2));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
