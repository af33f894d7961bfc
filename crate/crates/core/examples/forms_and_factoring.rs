//! Parsing forms, restricting them to planes and lines, and splitting off
//! rational linear factors.

use fqsurf::poly;
use fqsurf::projgeom::ProjPlane;
use fqsurf::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let f = FieldCtx::of_order(5)?;
    let s = poly::parse_form(&f, "X0*X1 - X2*X3")?;
    for dual in [[0, 0, 0, 1], [1, 1, 1, 1], [1, 2, 0, 0]] {
        let h = ProjPlane::from_ints(&f, &dual)?;
        let g = poly::restrict_to_plane(&f, &s, &h)?;
        let (factors, rest) = poly::fq_linear_factorization(&f, &g)?;
        let factors: Vec<String> = factors.iter().map(|l| l.render(&f)).collect();
        println!(
            "on {}: {}  factors [{}]  cofactor {}",
            h.render(&f),
            g.render(&f),
            factors.join(", "),
            rest.render(&f)
        );
    }
    let cubic = poly::parse_form(&f, "U^2*V + U*V^2")?;
    let comps: Vec<String> = poly::fq_linear_components(&f, &cubic)?.iter().map(|l| l.render(&f)).collect();
    println!("{} = product of {}", cubic.render(&f), comps.join(", "));

    let f4 = FieldCtx::of_order(4)?;
    let g = poly::parse_form(&f4, "(t+1)*X0^2 + t*X1*X2 + X3^2")?;
    println!("over F_4: {} has {} rational points", g.render(&f4), poly::count_zeros(&f4, &g)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
