//! Points, lines and planes of P^3(F_q) and their incidences.

use fqsurf::projgeom::{self, ProjLine, ProjPlane, ProjPoint};
use fqsurf::{FieldCtx, Result};

pub fn run() -> Result<()> {
    let f = FieldCtx::of_order(3)?;
    let points = projgeom::enumerate_points(&f, 3)?;
    let lines = projgeom::enumerate_lines(&f, 3)?;
    println!("P^3(F_3): {} points, {} lines", points.len(), lines.len());
    println!("expected: theta = {}, lines = {}", projgeom::theta(3, 3), projgeom::line_count_p3(3));

    let a = ProjPoint::from_ints(&f, &[1, 0, 0, 0])?;
    let b = ProjPoint::from_ints(&f, &[0, 1, 2, 0])?;
    let l = ProjLine::through(&f, &a, &b)?;
    println!("line {} has points:", l.render(&f));
    for p in l.points(&f) {
        println!("  {}", p.render(&f));
    }
    for h in projgeom::planes_through_line(&f, &l)? {
        let frame = projgeom::plane_coordinate_frame(&f, &h);
        let frame: Vec<String> = frame.iter().map(|p| p.render(&f)).collect();
        println!("plane {} with frame {}", h.render(&f), frame.join(" "));
    }
    let h = ProjPlane::from_ints(&f, &[0, 0, 0, 1])?;
    println!("(1:0:0:0) on X3 = 0: {}", projgeom::incident(&f, &a, &h)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
