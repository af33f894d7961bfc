//! The plane quartic over F_4 with 14 points, its seven bitangents, and the
//! count showing it cannot be a section of a quartic surface with 65 points.

use fqsurf::sections;
use fqsurf::{poly, FieldCtx, Result};

pub fn run() -> Result<()> {
    let f = FieldCtx::of_order(4)?;
    let c = sections::exceptional_quartic(&f);
    println!("C: {}", c.render(&f));
    println!("rational points: {}", poly::count_zeros(&f, &c)?);
    for b in sections::bitangents(&f, &c)? {
        let contacts: Vec<String> = b.contacts.iter().map(|p| p.render(&f)).collect();
        println!("bitangent {} touching at {}", b.line.render(&f), contacts.join(" and "));
    }
    let ex = sections::exceptional_exclusion(&f)?;
    println!(
        "{} planes x ({} - {}) + {} = {} < {}: {}",
        ex.planes_through_bitangent,
        ex.curve_points,
        ex.points_on_bitangent,
        ex.points_on_bitangent,
        ex.upper_bound,
        ex.required,
        ex.excluded
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
