//! Alternating 4x4 matrices, the twisted surfaces `X A (X^q)^T = 0` they
//! define, and their symplectic normal form.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg::{self, Matrix};
use crate::poly::HomogeneousForm;

/// Index pairs of the strictly upper triangle, in serialization order.
pub const UPPER: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// `A^T = -A` with zero diagonal (the zero diagonal matters in characteristic 2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternatingMatrix {
    m: [[FieldElement; 4]; 4],
}

impl AlternatingMatrix {
    pub fn from_upper(field: &FieldCtx, upper: [FieldElement; 6]) -> Result<Self> {
        let mut m = [[FieldElement::ZERO; 4]; 4];
        for (&(i, j), &a) in UPPER.iter().zip(&upper) {
            field.check(a)?;
            m[i][j] = a;
            m[j][i] = field.neg(a);
        }
        Ok(AlternatingMatrix { m })
    }

    pub fn from_entries(field: &FieldCtx, rows: &[Vec<FieldElement>]) -> Result<Self> {
        if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
            return Err(Error::NotAlternating);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                field.check(a)?;
                if a != field.neg(rows[j][i]) {
                    return Err(Error::NotAlternating);
                }
            }
            if !row[i].is_zero() {
                return Err(Error::NotAlternating);
            }
        }
        Self::from_upper(field, UPPER.map(|(i, j)| rows[i][j]))
    }

    /// Parses `[a01,a02,a03,a12,a13,a23]`.
    pub fn parse(field: &FieldCtx, text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Syntax(format!("expected [a01,...,a23], got {text:?}")))?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 6 {
            return Err(Error::Syntax(format!("expected 6 entries, got {}", parts.len())));
        }
        let mut upper = [FieldElement::ZERO; 6];
        for (slot, p) in upper.iter_mut().zip(&parts) {
            *slot = field.parse(p)?;
        }
        Self::from_upper(field, upper)
    }

    pub fn render(&self, field: &FieldCtx) -> String {
        let entries: Vec<String> = self.upper().iter().map(|&a| field.render(a)).collect();
        format!("[{}]", entries.join(","))
    }

    /// One hyperbolic block in the top-left corner.
    pub fn canonical_rank2(field: &FieldCtx) -> Self {
        let one = FieldElement::ONE;
        let z = FieldElement::ZERO;
        Self::from_upper(field, [one, z, z, z, z, z]).expect("valid entries")
    }

    /// Two hyperbolic blocks on the diagonal.
    pub fn canonical_rank4(field: &FieldCtx) -> Self {
        let one = FieldElement::ONE;
        let z = FieldElement::ZERO;
        Self::from_upper(field, [one, z, z, z, z, one]).expect("valid entries")
    }

    pub fn upper(&self) -> [FieldElement; 6] {
        UPPER.map(|(i, j)| self.m[i][j])
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.m[i][j]
    }

    pub fn to_matrix(&self) -> Matrix {
        self.m.iter().map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.upper().iter().all(|a| a.is_zero())
    }

    pub fn rank(&self, field: &FieldCtx) -> usize {
        linalg::rank(field, &self.to_matrix())
    }

    /// `G^T A G`.
    pub fn congruence(&self, field: &FieldCtx, g: &[Vec<FieldElement>]) -> Self {
        let prod = linalg::mat_mul(field, &linalg::transpose(g), &linalg::mat_mul(field, &self.to_matrix(), g));
        Self::from_entries(field, &prod).expect("congruence preserves alternation")
    }

    /// Bilinear form `x^T A y`.
    fn pairing(&self, field: &FieldCtx, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let ay: Vec<FieldElement> = self.m.iter().map(|row| linalg::dot(field, row, y)).collect();
        linalg::dot(field, x, &ay)
    }
}

impl fmt::Display for AlternatingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.upper().iter().map(|a| a.index().to_string()).collect();
        write!(f, "[{}]", idx.join(","))
    }
}

fn require_nonzero(a: &AlternatingMatrix) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroMatrix)
    } else {
        Ok(())
    }
}

/// `sum_{i,j} a_ij X_i X_j^q` with `q = #field`, which equals
/// `sum_{i<j} a_ij (X_i X_j^q - X_i^q X_j)`.
pub fn surface_from_alternating(field: &FieldCtx, a: &AlternatingMatrix) -> Result<HomogeneousForm> {
    surface_from_alternating_with_exponent(field, a, field.q())
}

pub fn surface_from_alternating_with_exponent(
    field: &FieldCtx,
    a: &AlternatingMatrix,
    q: u64,
) -> Result<HomogeneousForm> {
    require_nonzero(a)?;
    let q = q as u16;
    let mut terms = Vec::new();
    for (i, j) in UPPER {
        let c = a.get(i, j);
        if c.is_zero() {
            continue;
        }
        let mut e1 = [0u16; 4];
        e1[i] += 1;
        e1[j] += q;
        let mut e2 = [0u16; 4];
        e2[i] += q;
        e2[j] += 1;
        terms.push((e1, c));
        terms.push((e2, field.neg(c)));
    }
    HomogeneousForm::from_terms(field, 4, terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    /// Invertible, with `G^T A G = canonical`.
    pub g: Matrix,
    pub canonical: AlternatingMatrix,
    pub rank: usize,
}

fn unit(i: usize) -> Vec<FieldElement> {
    let mut v = vec![FieldElement::ZERO; 4];
    v[i] = FieldElement::ONE;
    v
}

/// Constructive symplectic basis. The first pair comes from the first
/// nonzero entry in row-major order; the remaining basis vectors are
/// projected onto its orthogonal complement by
/// `x ↦ x - B(x,w) u + B(x,u) w` and the 2x2 complement is normalized the
/// same way when it is nondegenerate.
pub fn symplectic_normal_form(field: &FieldCtx, a: &AlternatingMatrix) -> Result<NormalForm> {
    require_nonzero(a)?;
    let (i, j) = UPPER
        .into_iter()
        .find(|&(i, j)| !a.get(i, j).is_zero())
        .expect("nonzero matrix");
    let u1 = unit(i);
    let w1 = linalg::scale(field, field.inv(a.get(i, j))?, &unit(j));

    let project = |x: Vec<FieldElement>| {
        let bxw = a.pairing(field, &x, &w1);
        let bxu = a.pairing(field, &x, &u1);
        let x = linalg::axpy(field, &x, field.neg(bxw), &u1);
        linalg::axpy(field, &x, bxu, &w1)
    };
    let rest: Vec<Vec<FieldElement>> = (0..4).filter(|&k| k != i && k != j).map(|k| project(unit(k))).collect();
    let b = a.pairing(field, &rest[0], &rest[1]);
    let (cols, canonical, rank) = if b.is_zero() {
        (
            vec![u1, w1, rest[0].clone(), rest[1].clone()],
            AlternatingMatrix::canonical_rank2(field),
            2,
        )
    } else {
        let w2 = linalg::scale(field, field.inv(b)?, &rest[1]);
        (
            vec![u1, w1, rest[0].clone(), w2],
            AlternatingMatrix::canonical_rank4(field),
            4,
        )
    };
    let g = linalg::transpose(&cols);
    debug_assert_eq!(a.congruence(field, &g), canonical);
    Ok(NormalForm { g, canonical, rank })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RankClass {
    /// The surface is a union of `q+1` rational planes.
    Rank2Split,
    /// No rational plane component; every rational point lies on the surface.
    Rank4Extremal,
}

pub fn rank_classify(field: &FieldCtx, a: &AlternatingMatrix) -> Result<RankClass> {
    require_nonzero(a)?;
    match a.rank(field) {
        2 => Ok(RankClass::Rank2Split),
        4 => Ok(RankClass::Rank4Extremal),
        r => unreachable!("alternating matrices have even rank, got {r}"),
    }
}

/// Whether `x ↦ x^q` fixes every entry of `g`, i.e. `g` is defined over `F_q`.
pub fn frobenius_matrix_check(field: &FieldCtx, g: &[Vec<FieldElement>], q: u64) -> bool {
    g.iter().flatten().all(|&x| field.pow(x, q) == x)
}

/// Every nonzero alternating matrix over the field, in serialization order
/// of the six upper entries.
pub fn all_nonzero(field: &FieldCtx) -> Vec<AlternatingMatrix> {
    let q = field.q();
    (1..q.pow(6))
        .map(|mut k| {
            let mut upper = [FieldElement::ZERO; 6];
            for slot in upper.iter_mut().rev() {
                *slot = field.element(k % q).expect("in range");
                k /= q;
            }
            AlternatingMatrix::from_upper(field, upper).expect("valid entries")
        })
        .collect()
}
