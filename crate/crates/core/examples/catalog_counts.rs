//! The hyperbolic quadric, the Hermitian surface and the full-space surface
//! reach the elementary bound `(d-1)q^2 + dq + 1`.

use fqsurf::catalog::{self, CatalogId};
use fqsurf::sections;
use fqsurf::{Error, FieldCtx, Result};

pub fn run() -> Result<()> {
    println!("{:>3} {:>11} {:>3} {:>5} {:>5}", "q", "surface", "d", "N", "bound");
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = FieldCtx::of_order(q)?;
        for id in CatalogId::ALL {
            if id == CatalogId::FullSpace && q > 5 {
                continue;
            }
            let s = match id.build(&f) {
                Ok(s) => s,
                Err(Error::QNotSquare(_)) => continue,
                Err(e) => return Err(e),
            };
            let d = s.degree() as u64;
            let n = sections::count_points(&f, &s)?;
            println!("{q:>3} {:>11} {d:>3} {n:>5} {:>5}", id.name(), catalog::elementary_bound(d, q));
        }
    }
    let hw = catalog::hasse_weil_bound(4, 9);
    println!("Hasse-Weil for d=4, q=9: {:.3} (floor {})", hw.value, hw.floor);
    println!("plane-curve bound minus Hasse-Weil at d=3, q=9: {:?}", catalog::sziklai_hasse_weil_gap(3, 9));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
