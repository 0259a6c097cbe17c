// Smith normal form and the gcd of maximal minors, two ways to read off the
// torsion of a cokernel.

use tropical_abelian::exactmath::{maximal_minor_gcd, maximal_minor_gcd_bruteforce, smith_normal_form, IntMatrix};
use tropical_abelian::Result;

pub fn run_example() -> Result<()> {
    let m = IntMatrix::from_rows(&[vec![2i64, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("invariant factors: {:?}", snf.divisors.iter().map(|d| d.to_string()).collect::<Vec<_>>());
    println!("rank {}, torsion {}", snf.rank, snf.torsion_order());

    let tall = IntMatrix::from_rows(&[vec![2i64, 0], vec![0, 3], vec![4, 6], vec![1, 1]]);
    println!(
        "4x2 maximal minors: gcd {} (smith) = {} (all minors)",
        maximal_minor_gcd(&tall),
        maximal_minor_gcd_bruteforce(&tall)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
