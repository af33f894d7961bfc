//! The three surfaces attaining the elementary bound, and the closed-form
//! bounds and tangency counts they are checked against.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{exact_sqrt, isqrt, FieldCtx, FieldElement};
use crate::poly::HomogeneousForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalogId {
    Hyperbolic,
    Hermitian,
    #[serde(rename = "fullspace")]
    FullSpace,
}

impl CatalogId {
    pub const ALL: [CatalogId; 3] = [CatalogId::Hyperbolic, CatalogId::Hermitian, CatalogId::FullSpace];

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::Hyperbolic => "hyperbolic",
            CatalogId::Hermitian => "hermitian",
            CatalogId::FullSpace => "fullspace",
        }
    }

    pub fn degree(self, q: u64) -> Result<u64> {
        match self {
            CatalogId::Hyperbolic => Ok(2),
            CatalogId::Hermitian => exact_sqrt(q).map(|s| s + 1).ok_or(Error::QNotSquare(q)),
            CatalogId::FullSpace => Ok(q + 1),
        }
    }

    pub fn build(self, field: &FieldCtx) -> Result<HomogeneousForm> {
        match self {
            CatalogId::Hyperbolic => Ok(hyperbolic(field)),
            CatalogId::Hermitian => hermitian(field),
            CatalogId::FullSpace => Ok(full_space(field)),
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hyperbolic" => Ok(CatalogId::Hyperbolic),
            "hermitian" => Ok(CatalogId::Hermitian),
            "fullspace" => Ok(CatalogId::FullSpace),
            other => Err(Error::Config(format!("unknown catalog surface {other:?}"))),
        }
    }
}

/// `X0 X1 - X2 X3`.
pub fn hyperbolic(field: &FieldCtx) -> HomogeneousForm {
    HomogeneousForm::from_terms(
        field,
        4,
        [
            ([1, 1, 0, 0], FieldElement::ONE),
            ([0, 0, 1, 1], field.neg(FieldElement::ONE)),
        ],
    )
    .expect("valid form")
}

/// `Σ X_i^{sqrt(q)+1}`; requires `q` to be a square.
pub fn hermitian(field: &FieldCtx) -> Result<HomogeneousForm> {
    let s = field.sqrt_q().ok_or(Error::QNotSquare(field.q()))?;
    let k = (s + 1) as u16;
    HomogeneousForm::from_terms(
        field,
        4,
        (0..4).map(|i| {
            let mut e = [0u16; 4];
            e[i] = k;
            (e, FieldElement::ONE)
        }),
    )
}

/// `X0 X1^q - X0^q X1 + X2 X3^q - X2^q X3` with `q = #field`.
pub fn full_space(field: &FieldCtx) -> HomogeneousForm {
    full_space_with_exponent(field, field.q())
}

/// The same shape with an explicit Frobenius exponent; over an extension
/// `F_{q^k}` this is the full-space form of the subfield `F_q`.
pub fn full_space_with_exponent(field: &FieldCtx, q: u64) -> HomogeneousForm {
    let q = q as u16;
    let one = FieldElement::ONE;
    let minus = field.neg(one);
    HomogeneousForm::from_terms(
        field,
        4,
        [
            ([1, q, 0, 0], one),
            ([q, 1, 0, 0], minus),
            ([0, 0, 1, q], one),
            ([0, 0, q, 1], minus),
        ],
    )
    .expect("valid form")
}

/// `(d-1) q^2 + d q + 1`.
pub fn elementary_bound(d: u64, q: u64) -> u64 {
    (d - 1) * q * q + d * q + 1
}

/// `(d-1) q + 1`.
pub fn sziklai_bound(d: u64, q: u64) -> u64 {
    (d - 1) * q + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HasseWeil {
    pub value: f64,
    pub floor: u64,
}

/// `q + 1 + (d-1)(d-2) sqrt(q)`; the floor is computed exactly.
pub fn hasse_weil_bound(d: u64, q: u64) -> HasseWeil {
    let k = (d - 1) * d.saturating_sub(2);
    HasseWeil {
        value: (q + 1) as f64 + k as f64 * (q as f64).sqrt(),
        floor: q + 1 + isqrt(k * k * q),
    }
}

/// Exact test of `n <= q + 1 + (d-1)(d-2) sqrt(q)`.
pub fn within_hasse_weil(n: u64, d: u64, q: u64) -> bool {
    let k = (d - 1) * d.saturating_sub(2);
    n <= q + 1 || (n - q - 1).pow(2) <= k * k * q
}

/// `sziklai_bound - hasse_weil_bound` for square `q`, which is the integer
/// `(d-2)(sqrt(q)+1-d) sqrt(q)`.
pub fn sziklai_hasse_weil_gap(d: u64, q: u64) -> Option<i64> {
    let s = exact_sqrt(q)? as i64;
    let (d, q) = (d as i64, q as i64);
    let sziklai = (d - 1) * q + 1;
    let hw = q + 1 + (d - 1) * (d - 2) * s;
    Some(sziklai - hw)
}

/// Degrees that can attain the elementary bound: `2`, `q+1`, and
/// `sqrt(q)+1` when `q` is a square.
pub fn admissible_degrees(q: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::from([2, q + 1]);
    if let Some(s) = exact_sqrt(q) {
        out.insert(s + 1);
    }
    out
}

/// Closed forms for the line census of a plane curve of degree `d` with
/// `(d-1)q + 1` rational points: `x_1`, `x_d` and
/// `x_0 = -(q/d)(d - (sqrt(q)+1))(d + sqrt(q) - 1)`. The last factor pair
/// multiplies out to `(d-1)^2 - q`, so everything stays rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TangencyFormulas {
    pub x1: u64,
    pub xd: Ratio<i64>,
    pub x0: Ratio<i64>,
}

pub fn tangency_formulas(d: u64, q: u64) -> TangencyFormulas {
    let (di, qi) = (d as i64, q as i64);
    let n = (di - 1) * qi + 1;
    TangencyFormulas {
        x1: n as u64,
        xd: Ratio::new(n * qi, di),
        x0: x0_expression(d, q),
    }
}

/// `-(q/d)(d - (sqrt(q)+1))(d + sqrt(q) - 1) = q (q - (d-1)^2) / d`.
pub fn x0_expression(d: u64, q: u64) -> Ratio<i64> {
    let (d, q) = (d as i64, q as i64);
    Ratio::new(q * (q - (d - 1) * (d - 1)), d)
}
