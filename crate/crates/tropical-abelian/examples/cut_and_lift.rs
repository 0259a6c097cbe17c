// Cutting a genus-5 curve at five points, lifting it to the plane, checking
// the moment identities and gluing it back.

use tropical_abelian::exactmath::format_rational;
use tropical_abelian::lifting::{
    check_gluing, check_menelaus, cut_and_lift, cut_loops, deformation_dimension, end_moment, reglue,
};
use tropical_abelian::{catalog, Result};

pub fn run_example() -> Result<()> {
    let (c, cuts) = catalog::genus_five_square();
    let pc = cut_and_lift(&c, &cuts)?;
    println!(
        "lift: {} vertices, {} bounded edges, {} ends, genus {}",
        pc.positions.len(),
        pc.edges.len(),
        pc.ends.len(),
        pc.genus()
    );
    for (i, end) in pc.ends.iter().enumerate() {
        println!(
            "  end {i}: vertex {} slope {:?} moment {}",
            end.vertex,
            end.slope,
            format_rational(&end_moment(&pc, i))
        );
    }
    println!("moments sum to zero: {}", check_menelaus(&pc));
    println!("loop classes: {:?}", cut_loops(&c, &cuts)?);
    println!("gluing identity: {}", check_gluing(&c, &cuts));
    let (back, _) = reglue(&pc, &c)?;
    println!("reglued curve equals the original: {}", back == c);
    println!("deformation dimension: {}", deformation_dimension(&c)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
