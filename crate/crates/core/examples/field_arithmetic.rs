//! Arithmetic in small prime-power fields: defining polynomials, inverses,
//! Frobenius and the norm to the square-root subfield.

use fqsurf::{FieldCtx, Result};

pub fn run() -> Result<()> {
    for q in [4u64, 8, 9, 16] {
        let f = FieldCtx::of_order(q)?;
        let t = f.generator();
        println!("F_{q}: defining polynomial coefficients {:?}", f.defining_poly());
        let inv = f.inv(t)?;
        println!("  t^-1 = {}, t * t^-1 = {}", f.render(inv), f.render(f.mul(t, inv)));
        println!("  frobenius(t) = {}", f.render(f.frobenius(t, 1)));
        if f.sqrt_q().is_some() {
            let n = f.sqrt_q_norm(t)?;
            println!("  N(t) = {} lies in the subfield: {}", f.render(n), f.in_subfield(n, f.e() / 2));
        }
    }
    let f9 = FieldCtx::of_order(9)?;
    let a = f9.parse("2*t + 1")?;
    println!("in F_9, (2*t + 1)^4 = {}", f9.render(f9.pow(a, 4)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
