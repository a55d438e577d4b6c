// Two recovery groups on the GS96 tower over GF(9), how they combine, and
// the orbits that become recovery sets.

use std::sync::Arc;

use tower_lrc::field::square_field;
use tower_lrc::group::{combine, orbit};
use tower_lrc::{build_recovery_group, GroupParams, Result, TowerSpec, Variant};

fn run() -> Result<()> {
    let spec = TowerSpec::new(Variant::Gs96, Arc::new(square_field(3)?), 2)?;
    let h1 = build_recovery_group(&spec, &GroupParams::AdditiveKernel)?;
    let h2 = build_recovery_group(&spec, &GroupParams::Multiplicative { order: 2 })?;
    println!("H1 shifts {:?}, locality {}", h1.descriptor(), h1.locality());
    println!("H2 scalars {:?}, locality {}", h2.descriptor(), h2.locality());

    let g = combine(&spec, &h1, &h2)?;
    println!("|H1 H2| = {}, structure {:?}", g.order(), g.structure);

    let place = &spec.enumerate_places()[0];
    let fmt = |pts: Vec<Vec<tower_lrc::FieldElement>>| {
        pts.iter()
            .map(|c| format!("{:?}", c.iter().map(|x| x.value()).collect::<Vec<_>>()))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("orbit under H1: {}", fmt(orbit(&spec, &h1, place)));
    println!("orbit under H2: {}", fmt(orbit(&spec, &h2, place)));

    // Both groups additive on the same coordinate: they meet in more than
    // the identity and are rejected.
    match combine(&spec, &h1, &h1) {
        Err(e) => println!("H1 with itself: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

fn main() {
    run().expect("group example");
}
