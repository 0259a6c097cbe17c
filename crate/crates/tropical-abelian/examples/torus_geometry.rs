// Period matrices, realizable classes, genericity and reduction to the
// fundamental parallelogram.

use tropical_abelian::exactmath::{format_rational, rat};
use tropical_abelian::torus::{
    is_generic_for, is_realizable, reduce_to_fundamental, sample_generic_points, splitting_classes, CurveClass,
    TropicalTorus,
};
use tropical_abelian::Result;

pub fn run_example() -> Result<()> {
    let t = TropicalTorus::from_i64([[9, 1], [1, 7]])?;
    for m in [[[2, 0], [0, 2]], [[1, 0], [0, 1]], [[1, 0], [0, 2]], [[1, 1], [0, 1]]] {
        let c = CurveClass::new(m);
        println!("class {m:?}: realizable {}, generic {}", is_realizable(&c, &t), is_generic_for(&c, &t));
    }
    // [[11, 2], [4, 7]] carries (1, 2) but splits 2I into two copies of (1, 2)
    let s = TropicalTorus::from_i64([[11, 2], [4, 7]])?;
    let splits = splitting_classes(&CurveClass::new([[2, 0], [0, 2]]), &s);
    println!("splitting classes of 2I on [[11, 2], [4, 7]]: {:?}", splits.iter().map(|c| c.m).collect::<Vec<_>>());

    let (p, w) = reduce_to_fundamental(&[rat(25, 2), rat(-3, 1)], &t);
    let x = p.coords();
    println!("(25/2, -3) = S(({}, {}) + {w:?})", format_rational(&x[0]), format_rational(&x[1]));

    for (i, p) in sample_generic_points(&t, 2, 42).iter().enumerate() {
        let x = p.coords();
        println!("sampled point {i}: ({}, {})", format_rational(&x[0]), format_rational(&x[1]));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
