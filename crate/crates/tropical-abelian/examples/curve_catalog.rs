// The hand-built curves of the catalog, with both routes to the degree class.

use tropical_abelian::curve::{self, ParamCurve};
use tropical_abelian::{catalog, Result};

fn describe(name: &str, c: &ParamCurve) -> Result<()> {
    let a = curve::degree_class(c)?;
    let b = curve::degree_class_by_crossings(c)?;
    println!(
        "{name:<28} genus {}  class {:?}  crossings agree {}  gcd {}  simple {}  violations {}",
        curve::genus(c),
        a.m,
        a == b,
        curve::curve_gcd(c)?,
        curve::is_simple(c).simple,
        curve::validate(c).len()
    );
    Ok(())
}

pub fn run_example() -> Result<()> {
    describe("unit theta", &catalog::unit_theta())?;
    describe("double theta", &catalog::double_theta())?;
    describe("skew theta", &catalog::skew_theta())?;
    describe("genus three ladder", &catalog::genus_three_ladder())?;
    describe("genus five, class diag(2,3)", &catalog::genus_five_diag23())?;
    describe("genus five, square torus", &catalog::genus_five_square().0)?;
    for entry in catalog::class_2i_catalog() {
        describe(entry.name, &entry.curve)?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
