// The lattice multiplicity of a marked curve against the product of vertex
// multiplicities.

use tropical_abelian::curve::MarkedCurve;
use tropical_abelian::multiplicity::{build_theta, lattice_check};
use tropical_abelian::{catalog, Result};

fn show(name: &str, mc: &MarkedCurve) -> Result<()> {
    let theta = build_theta(mc)?;
    let check = lattice_check(mc)?;
    println!(
        "{name:<22} Θ {}x{}  torsion {} (minors {})  weights {}  lattice {}  product {}  agree {}",
        theta.matrix.rows(),
        theta.matrix.cols(),
        check.torsion,
        check.torsion_by_minors,
        check.weight_product,
        check.by_theta,
        check.by_product,
        check.agrees()
    );
    Ok(())
}

pub fn run_example() -> Result<()> {
    show("double theta", &catalog::double_theta_marked())?;
    show("skew theta, heavy mark", &catalog::skew_theta_heavy_mark())?;
    show("skew theta, light marks", &catalog::skew_theta_light_marks())?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
