//! Dense exact linear algebra over a [`FieldCtx`].

use crate::gf::{FieldCtx, FieldElement};

pub type Matrix = Vec<Vec<FieldElement>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { FieldElement::ONE } else { FieldElement::ZERO })
                .collect()
        })
        .collect()
}

pub fn transpose(m: &[Vec<FieldElement>]) -> Matrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

pub fn mat_mul(field: &FieldCtx, a: &[Vec<FieldElement>], b: &[Vec<FieldElement>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(FieldElement::ZERO, |acc, k| {
                        field.add(acc, field.mul(row[k], b[k][j]))
                    })
                })
                .collect()
        })
        .collect()
}

pub fn dot(field: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter()
        .zip(b)
        .fold(FieldElement::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

pub fn scale(field: &FieldCtx, c: FieldElement, v: &[FieldElement]) -> Vec<FieldElement> {
    v.iter().map(|&x| field.mul(c, x)).collect()
}

/// `a + c*b`
pub fn axpy(
    field: &FieldCtx,
    a: &[FieldElement],
    c: FieldElement,
    b: &[FieldElement],
) -> Vec<FieldElement> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| field.add(x, field.mul(c, y)))
        .collect()
}

/// Scales `v` so that its first nonzero entry is 1; `None` for the zero vector.
pub fn normalize(field: &FieldCtx, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let lead = v.iter().copied().find(|x| !x.is_zero())?;
    let inv = field.inv(lead).expect("lead is nonzero");
    Some(scale(field, inv, v))
}

/// Reduced row echelon form, returning the pivot columns.
pub fn rref(field: &FieldCtx, m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        m[r] = scale(field, inv, &m[r]);
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = field.neg(m[i][c]);
                m[i] = axpy(field, &m[i], f, &m[r]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(field: &FieldCtx, m: &[Vec<FieldElement>]) -> usize {
    let mut work = m.to_vec();
    rref(field, &mut work).len()
}

/// Basis of `{x : m x = 0}`, one vector per free column in increasing order.
pub fn nullspace(field: &FieldCtx, m: &[Vec<FieldElement>], ncols: usize) -> Matrix {
    let mut work = m.to_vec();
    let pivots = rref(field, &mut work);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![FieldElement::ZERO; ncols];
            v[free] = FieldElement::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(work[row][free]);
            }
            v
        })
        .collect()
}

pub fn inverse(field: &FieldCtx, m: &[Vec<FieldElement>]) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().copied().chain(id).collect())
        .collect();
    let pivots = rref(field, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let f = FieldCtx::new(3, 1).unwrap();
        let m: Matrix = [[1, 2, 0], [0, 1, 1], [2, 0, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| f.from_int(x)).collect())
            .collect();
        let inv = inverse(&f, &m).expect("invertible");
        assert_eq!(mat_mul(&f, &m, &inv), identity(3));
        assert_eq!(rank(&f, &m), 3);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let f = FieldCtx::new(2, 2).unwrap();
        let t = f.generator();
        let m = vec![vec![FieldElement::ONE, t, FieldElement::ZERO, t]];
        let ns = nullspace(&f, &m, 4);
        assert_eq!(ns.len(), 3);
        for v in &ns {
            assert!(dot(&f, &m[0], v).is_zero());
        }
        assert_eq!(rank(&f, &ns), 3);
    }
}
