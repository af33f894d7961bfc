#![allow(dead_code)]

pub mod oracle;

use fqsurf::poly::HomogeneousForm;
use fqsurf::FieldCtx;

/// Terms of a form whose coefficients lie in the prime field, as integers.
pub fn integer_terms(field: &FieldCtx, f: &HomogeneousForm) -> Vec<(Vec<u32>, i64)> {
    f.terms()
        .map(|(e, c)| {
            assert!(c.index() < field.p() as usize, "coefficient outside the prime field");
            (e[..f.nvars()].iter().map(|&k| k as u32).collect(), c.index() as i64)
        })
        .collect()
}
