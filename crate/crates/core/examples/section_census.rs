//! Every plane section of an extremal surface is a pencil of lines or a
//! curve with `(d-1)q + 1` points, and pencil vertices biject with `S(F_q)`.

use fqsurf::catalog::CatalogId;
use fqsurf::projgeom;
use fqsurf::sections::{self, SectionClass, SectionTable};
use fqsurf::{FieldCtx, Result};

pub fn run() -> Result<()> {
    for (q, id) in [(3, CatalogId::Hyperbolic), (4, CatalogId::Hermitian), (3, CatalogId::FullSpace)] {
        let f = FieldCtx::of_order(q)?;
        let s = id.build(&f)?;
        let table = SectionTable::build(&f, &s)?;
        let census = table.census();
        let n = sections::count_points(&f, &s)?;
        println!(
            "{id} q={q}: N={n} nu1={} nu2={} other={} (planes {})",
            census.nu1,
            census.nu2,
            census.other,
            projgeom::theta(q, 3)
        );
        let map = sections::vertex_bijection_with(&f, &s, &table)?;
        println!("  vertex map covers {} points", map.len());
        let first = table.iter().find(|(_, c)| c.is_pencil());
        if let Some((h, SectionClass::PlanarPencil { vertex, lines, .. })) = first {
            let factors: Vec<String> = lines.iter().map(|l| l.factor.render(&f)).collect();
            println!("  e.g. {} is a pencil at {}: {}", h.render(&f), vertex.render(&f), factors.join(" * "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
