//! Exhaustive search over all quadrics in P^3(F_2) and P^3(F_3): the most
//! points a quadric without a rational plane can have is (q+1)^2, and only
//! hyperbolic quadrics get there.

use fqsurf::audit;
use fqsurf::{FieldCtx, Result};

pub fn run() -> Result<()> {
    for q in [2u64, 3] {
        let f = FieldCtx::of_order(q)?;
        let c = audit::quadric_census(&f)?;
        println!(
            "q={q}: {} forms, {} without a plane, max {} reached by {} (hyperbolic: {})",
            c.total_forms, c.plane_free, c.max_count, c.achievers, c.all_achievers_hyperbolic
        );
        println!("  counts: {:?}", c.count_histogram);
        if let Some(size) = c.hyperbolic_orbit_size {
            println!("  orbit of X0*X1 - X2*X3 under GL(4,2): {size}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
