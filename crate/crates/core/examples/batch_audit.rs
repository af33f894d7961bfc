//! A small batch audit driven by a JSON config, printed as a JSON report.

use fqsurf::audit::{self, AuditConfig};
use fqsurf::Result;

pub fn run() -> Result<()> {
    let cfg = AuditConfig::from_json(
        r#"{
            "q_list": [2, 3, 4],
            "surfaces": ["hyperbolic", "hermitian", "fullspace", "X0^2 + X1*X2 + X3^2"],
            "checks": ["bounds", "sections", "tangency"]
        }"#,
    )?;
    let report = audit::run_audit(&cfg)?;
    println!("{}", report.to_json());
    for g in &report.degree_gates {
        println!("q={}: admissible degrees {:?}", g.q, g.admissible);
    }
    println!("all checks passed: {}", report.passed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
