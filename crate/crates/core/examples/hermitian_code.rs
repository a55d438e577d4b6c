// A length-120 code over GF(25) from the second tower, with scalar
// recovery groups of orders 2 and 3.

use std::sync::Arc;

use tower_lrc::field::square_field;
use tower_lrc::verify::{verify, DistanceResult, VerifyOptions};
use tower_lrc::{build_recovery_group, construct_lrc, ConstructOptions, GroupParams, Result, TowerSpec, Variant};

fn run() -> Result<()> {
    let spec = TowerSpec::new(Variant::Gs95, Arc::new(square_field(5)?), 2)?;
    let h1 = build_recovery_group(&spec, &GroupParams::Multiplicative { order: 2 })?;
    let h2 = build_recovery_group(&spec, &GroupParams::Multiplicative { order: 3 })?;
    let code = construct_lrc(&spec, &h1, &h2, 100, &ConstructOptions::default())?;
    let info = code.construction.as_ref().unwrap();
    println!("{:?}, pole budget {}", code.params, info.budget);

    let report = verify(&code, &VerifyOptions::default())?;
    assert!(report.passed);
    if let DistanceResult::Exact { value, .. } = report.distance {
        println!("minimum distance {value} over {} codewords", 25u64.pow(code.k() as u32));
    }
    Ok(())
}

fn main() {
    run().expect("hermitian example");
}
