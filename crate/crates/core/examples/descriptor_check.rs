// Writes a code descriptor, reads it back, and shows that a single corrupted
// recovery index is caught by verification.

use std::sync::Arc;

use tower_lrc::field::square_field;
use tower_lrc::verify::{verify, VerifyOptions};
use tower_lrc::{build_recovery_group, construct_lrc, ConstructOptions, GroupParams, LrcCode, Result, TowerSpec, Variant};

fn run() -> Result<()> {
    let spec = TowerSpec::new(Variant::Gs96, Arc::new(square_field(3)?), 1)?;
    let h1 = build_recovery_group(&spec, &GroupParams::AdditiveKernel)?;
    let h2 = build_recovery_group(&spec, &GroupParams::Multiplicative { order: 2 })?;
    let code = construct_lrc(&spec, &h1, &h2, 2, &ConstructOptions::default())?;

    let json = code.to_json();
    println!("{json}");
    let loaded = LrcCode::from_json(&json)?;
    assert_eq!(loaded.to_json(), json);
    assert!(verify(&loaded, &VerifyOptions::default())?.passed);

    let mut bad = loaded.descriptor();
    bad.recovery_sets[2].set1[0] = 1;
    let report = verify(&LrcCode::from_descriptor(&bad)?, &VerifyOptions::default())?;
    println!("after corruption: {}", report.first_failure().unwrap());
    assert!(!report.passed);
    Ok(())
}

fn main() {
    run().expect("descriptor example");
}
