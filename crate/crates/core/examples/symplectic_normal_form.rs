//! Alternating matrices, their normal form under congruence, and the
//! surfaces `X A (X^q)^T = 0` containing all of P^3(F_q).

use fqsurf::altform::{self, AlternatingMatrix};
use fqsurf::{poly, FieldCtx, Result};

pub fn run() -> Result<()> {
    let f = FieldCtx::of_order(3)?;
    for text in ["[1,2,0,1,1,2]", "[0,1,2,2,0,1]", "[0,0,0,0,0,1]"] {
        let a = AlternatingMatrix::parse(&f, text)?;
        let nf = altform::symplectic_normal_form(&f, &a)?;
        let s = altform::surface_from_alternating(&f, &a)?;
        println!("A = {text} has rank {} -> {:?}", nf.rank, altform::rank_classify(&f, &a)?);
        println!("  G^T A G = {} verified: {}", nf.canonical.render(&f), a.congruence(&f, &nf.g) == nf.canonical);
        println!(
            "  surface: {} points, {} rational plane components",
            poly::count_zeros(&f, &s)?,
            poly::fq_linear_components(&f, &s)?.len()
        );
    }
    let f2 = FieldCtx::of_order(2)?;
    let all = altform::all_nonzero(&f2);
    let rank4 = all.iter().filter(|a| a.rank(&f2) == 4).count();
    println!("over F_2: {} nonzero alternating matrices, {rank4} of rank 4", all.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("example failed");
}
