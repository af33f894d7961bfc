//! Intersection sizes of all lines of P^3 with an extremal surface, and the
//! per-line identity between points on the line and pencil planes through it.

use fqsurf::catalog::CatalogId;
use fqsurf::sections::{self, SectionTable};
use fqsurf::{Error, FieldCtx, Result};

pub fn run() -> Result<()> {
    for q in [2u64, 3, 4] {
        let f = FieldCtx::of_order(q)?;
        for id in CatalogId::ALL {
            let s = match id.build(&f) {
                Ok(s) => s,
                Err(Error::QNotSquare(_)) => continue,
                Err(e) => return Err(e),
            };
            let table = SectionTable::build(&f, &s)?;
            let r = sections::line_report(&f, &s, &table)?;
            println!(
                "{id:>10} q={q}: {} lines, spectrum {:?}, alpha!=beta on {} lines, {} lines on S",
                r.lines, r.spectrum, r.alpha_beta_mismatches, r.lines_on_surface
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
