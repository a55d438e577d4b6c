// Arithmetic in GF(9) and the subgroups the recovery groups are built from.

use tower_lrc::field::square_field;
use tower_lrc::Result;

fn run() -> Result<()> {
    let f = square_field(3)?;
    println!("GF({}) modulus (low first): {:?}", f.order(), f.modulus());
    println!("primitive element: {}", f.generator());

    let t = f.el(3);
    println!("t^2 = {}", f.mul(t, t));
    println!("1/(1+t) = {}", f.inv(f.el(4)).unwrap());

    for x in f.elements() {
        print!("{}:{} ", x, f.trace(x)?);
    }
    println!("  <- x:trace(x)");

    let show = |v: Vec<_>| v.iter().map(|x: &tower_lrc::FieldElement| x.to_string()).collect::<Vec<_>>().join(",");
    println!("kernel of x^3 + x: {}", show(f.artin_schreier_kernel()?));
    println!("GF(3)^*: {}", show(f.subfield_units()?));
    println!("norm-one group: {}", show(f.norm_one_group()?));
    Ok(())
}

fn main() {
    run().expect("field example");
}
