// Counts for classes (1, n) from divisor sums, checked against the power
// series identity.

use tropical_abelian::enumerate::{closed_form_bg_1n, closed_form_n_1n, eisenstein_table};
use tropical_abelian::Result;

pub fn run_example() -> Result<()> {
    for n in 1..=4 {
        println!("g = 2, n = {n}: N = {}  BG = {}", closed_form_n_1n(2, n), closed_form_bg_1n(2, n));
    }
    for g in 3..=5 {
        let rows = eisenstein_table(g, 8);
        let ok = rows.iter().all(|r| r.closed_form == r.series);
        let values: Vec<String> = rows.iter().map(|r| r.closed_form.to_string()).collect();
        println!("g = {g}: {}  series agrees: {ok}", values.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
