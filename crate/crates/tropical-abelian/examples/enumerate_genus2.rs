// All genus-2 curves of class 2I through two sampled points, and the
// invariants they add up to.

use tropical_abelian::enumerate::{assemble_invariants, audit_solution, enumerate_genus2};
use tropical_abelian::torus::sample_generic_points;
use tropical_abelian::{catalog, Result};

pub fn run_example() -> Result<()> {
    let t = catalog::hexagon_torus();
    let c = catalog::class_2i();
    let pts = sample_generic_points(&t, 2, 2024);
    let set = enumerate_genus2(&t, &c, &pts, None)?;
    println!(
        "searched windings within {:?}; {} shapes, {} solutions",
        set.bound,
        set.shapes.len(),
        set.solutions.len()
    );
    for (i, shape) in set.shapes.iter().enumerate() {
        let count = set.solutions.iter().filter(|s| s.shape == i).count();
        let slopes: Vec<_> = shape.edges.iter().map(|e| e.slope).collect();
        println!("  shape {i}: slopes {slopes:?}  markings {count}");
    }
    let audited = set.solutions.iter().all(|s| audit_solution(&set, s).passed());
    println!("every solution passes the structural audit: {audited}");
    let table = assemble_invariants(&set);
    println!("M = {}, N = {}", table.m, table.n);
    println!("BG = {}", table.bg);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
