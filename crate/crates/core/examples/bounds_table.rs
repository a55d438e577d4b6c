// Distance upper bounds at one parameter set, and the trade-off lines for
// every admissible locality pair at l = 8.

use tower_lrc::bounds::{all_bounds, gs_line_any_case, regimes, sig12};
use tower_lrc::Result;

fn run() -> Result<()> {
    let table = all_bounds(18, 8, 2, &[2, 2])?;
    for (name, value) in table.labeled() {
        println!("{name:>9}: d <= {value}");
    }

    let line = gs_line_any_case(8, 3, 1, "thm35")?;
    println!(
        "{}: delta + {} R >= {} = {}",
        line.theorem,
        line.slope,
        line.intercept,
        sig12(line.intercept)
    );

    for row in regimes(8)? {
        match row.line {
            Some(l) => println!("{:>8} ({}, {}) intercept {}", row.theorem, row.r1, row.r2, sig12(l.intercept)),
            None => println!("{:>8} ({}, {}) no line", row.theorem, row.r1, row.r2),
        }
    }
    Ok(())
}

fn main() {
    run().expect("bounds example");
}
