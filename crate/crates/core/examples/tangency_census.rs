//! Line census of plane curves with `(d-1)q + 1` rational points, compared
//! with the closed forms for x_0, x_1 and x_d.

use fqsurf::catalog::{self, CatalogId};
use fqsurf::poly;
use fqsurf::sections::{self, SectionClass, SectionTable};
use fqsurf::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let f4 = FieldCtx::of_order(4)?;
    let conic = poly::parse_form(&f4, "U*V - W^2")?;
    let t = sections::tangency_census(&f4, &conic)?;
    println!("conic over F_4: x0={} x1={} x2={} ok={}", t.x0, t.x1, t.xd, t.identities().all());

    for (q, id) in [(4, CatalogId::Hermitian), (9, CatalogId::Hermitian), (5, CatalogId::Hyperbolic)] {
        let f = FieldCtx::of_order(q)?;
        let s = id.build(&f)?;
        let table = SectionTable::build(&f, &s)?;
        let curves = table
            .iter()
            .filter(|(_, c)| matches!(c, SectionClass::ExtremalCurve { .. }))
            .take(3);
        for (h, _) in curves {
            let c = poly::restrict_to_plane(&f, &s, h)?;
            let t = sections::tangency_census(&f, &c)?;
            let x0 = catalog::x0_expression(t.d, q);
            println!(
                "{id} q={q} plane {}: x0={} (formula {x0}) x1={} xd={} identities={}",
                h.render(&f),
                t.x0,
                t.x1,
                t.xd,
                t.identities().all()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
