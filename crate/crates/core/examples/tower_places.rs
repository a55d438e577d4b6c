// Rational places of both towers: counts, genus and a few sample tuples.

use std::sync::Arc;

use tower_lrc::field::square_field;
use tower_lrc::{Result, TowerSpec, Variant};

fn run() -> Result<()> {
    for ell in [2u32, 3, 4] {
        let field = Arc::new(square_field(ell)?);
        for variant in [Variant::Gs96, Variant::Gs95] {
            for m in 1..=variant.max_depth() {
                let spec = TowerSpec::new(variant, field.clone(), m)?;
                let places = spec.enumerate_places();
                assert_eq!(places.len(), spec.expected_place_count());
                println!(
                    "{variant} l={ell} m={m}: {} places, genus {}, generator poles {:?}",
                    places.len(),
                    spec.genus(),
                    spec.generator_pole_degrees()
                );
            }
        }
    }

    let spec = TowerSpec::new(Variant::Gs96, Arc::new(square_field(3)?), 2)?;
    for p in spec.enumerate_places().iter().take(4) {
        let coords: Vec<u32> = p.coords.iter().map(|x| x.value()).collect();
        println!("place {}: {:?}", p.index, coords);
    }
    Ok(())
}

fn main() {
    run().expect("tower example");
}
