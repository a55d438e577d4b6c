// The smallest code: length 6 over GF(9) with localities (2, 1). Builds it,
// checks every recovery set, measures the distance and repairs a symbol.

use std::sync::Arc;

use tower_lrc::field::square_field;
use tower_lrc::repair::{repair, ErasurePattern};
use tower_lrc::verify::{brute_force_distance, dimension_report, verify, VerifyOptions, DEFAULT_ENUM_CAP};
use tower_lrc::{build_recovery_group, construct_lrc, ConstructOptions, GroupParams, Result, TowerSpec, Variant};

fn run() -> Result<()> {
    let spec = TowerSpec::new(Variant::Gs96, Arc::new(square_field(3)?), 1)?;
    let h1 = build_recovery_group(&spec, &GroupParams::AdditiveKernel)?;
    let h2 = build_recovery_group(&spec, &GroupParams::Multiplicative { order: 2 })?;
    let code = construct_lrc(&spec, &h1, &h2, 2, &ConstructOptions::default())?;
    println!("{:?}", code.params);

    let dims = dimension_report(&code).unwrap();
    println!(
        "dim V1 = {}, dim V2 = {}, dim(V1 + V2) = {}, k = {}",
        dims.dim_v1, dims.dim_v2, dims.dim_sum, dims.k
    );
    for i in 0..code.k() {
        let row: Vec<u32> = code.generator.row(i).iter().map(|x| x.value()).collect();
        println!("g{i} = {row:?}");
    }

    let d = brute_force_distance(&code, DEFAULT_ENUM_CAP)?;
    println!("minimum distance {d}");
    assert_eq!(d, 4);

    let report = verify(&code, &VerifyOptions::default())?;
    assert!(report.passed);
    println!("verification passed ({} repair attempts)", report.repair.attempts);

    let f = code.spec.field();
    let word = code.encode(&[f.el(1), f.el(1)]);
    let mut received = word.clone();
    received[3] = tower_lrc::FieldElement::ZERO;
    for set in [1, 2] {
        let p = ErasurePattern { received: received.clone(), erased: 3, set };
        let got = repair(&code, &p, true)?;
        println!("set {set}: {:?} -> {got}", code.recovery_sets[3].set(set));
        assert_eq!(got, word[3]);
    }
    Ok(())
}

fn main() {
    run().expect("golden example");
}
