// Writes a picture of the marked double theta curve.

use tropical_abelian::{catalog, svg, Result};

pub fn run_example() -> Result<()> {
    let mc = catalog::double_theta_marked();
    let picture = svg::render(&mc, &mc.mark_points());
    let path = std::env::temp_dir().join("double_theta.svg");
    std::fs::write(&path, &picture)?;
    println!("wrote {} ({} bytes)", path.display(), picture.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
