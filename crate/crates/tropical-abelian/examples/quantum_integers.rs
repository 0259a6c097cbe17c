// Quantum integers and the refined vertex multiplicities built from them.

use tropical_abelian::exactmath::{laurent_eval_one, laurent_substitute, quantum_integer};
use tropical_abelian::{catalog, multiplicity, Result};

pub fn run_example() -> Result<()> {
    for a in 1..=5 {
        let q = quantum_integer(a)?;
        println!("[{a}]_q = {q}    at q = 1: {}", laurent_eval_one(&q));
    }

    // [ab]_q = [a]_q * [b]_{q^a}
    let lhs = quantum_integer(12)?;
    let rhs = &quantum_integer(4)? * &laurent_substitute(&quantum_integer(3)?, 4);
    println!("[12]_q == [4]_q [3]_(q^4): {}", lhs == rhs);

    let c = catalog::double_theta();
    println!(
        "double theta: m = {}, m^q = {}",
        multiplicity::classical_multiplicity(&c)?,
        multiplicity::refined_multiplicity(&c)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
