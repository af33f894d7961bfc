//! Exhaustive census of quadric surfaces over `F_2` and `F_3`, and the
//! degree gate on the admissible degrees.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, CatalogId};
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg::{self, Matrix};
use crate::poly::{self, Exponents, HomogeneousForm};
use crate::projgeom;

/// The ten degree-2 monomials in `X0..X3`: `X_i X_j` for `i <= j`.
pub fn quadric_monomials() -> Vec<(usize, usize)> {
    (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).collect()
}

fn exponents(i: usize, j: usize) -> Exponents {
    let mut e = [0u16; 4];
    e[i] += 1;
    e[j] += 1;
    e
}

pub fn quadric_from_coeffs(field: &FieldCtx, coeffs: &[FieldElement]) -> Result<HomogeneousForm> {
    let terms = quadric_monomials()
        .into_iter()
        .zip(coeffs)
        .map(|((i, j), &c)| (exponents(i, j), c));
    HomogeneousForm::from_terms(field, 4, terms)
}

pub fn quadric_coeffs(f: &HomogeneousForm) -> Vec<FieldElement> {
    quadric_monomials().into_iter().map(|(i, j)| f.coefficient(&exponents(i, j))).collect()
}

/// The `k`-th normalized vector of length `n` (first nonzero entry 1), with
/// vectors grouped by the position of that entry from the last slot down.
fn projective_vector(field: &FieldCtx, n: usize, mut k: u64) -> Vec<FieldElement> {
    let q = field.q();
    for lead in (0..n).rev() {
        let tail = (n - lead - 1) as u32;
        let block = q.pow(tail);
        if k < block {
            let mut v = vec![FieldElement::ZERO; n];
            v[lead] = FieldElement::ONE;
            for slot in (lead + 1..n).rev() {
                v[slot] = field.element(k % q).expect("in range");
                k /= q;
            }
            return v;
        }
        k -= block;
    }
    unreachable!("index beyond the projective space")
}

fn normalized(field: &FieldCtx, v: &[FieldElement]) -> Vec<FieldElement> {
    linalg::normalize(field, v).expect("nonzero coefficient vector")
}

/// Symmetric matrix of the polarization `f(x+y) - f(x) - f(y)`.
fn polar_matrix(field: &FieldCtx, coeffs: &[FieldElement]) -> Matrix {
    let mut m = vec![vec![FieldElement::ZERO; 4]; 4];
    for ((i, j), &c) in quadric_monomials().into_iter().zip(coeffs) {
        if i == j {
            m[i][i] = field.add(c, c);
        } else {
            m[i][j] = c;
            m[j][i] = c;
        }
    }
    m
}

fn determinant(field: &FieldCtx, m: &[Vec<FieldElement>]) -> FieldElement {
    let mut a = m.to_vec();
    let n = a.len();
    let mut det = FieldElement::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return FieldElement::ZERO;
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(det);
        }
        det = field.mul(det, a[c][c]);
        let inv = field.inv(a[c][c]).expect("nonzero pivot");
        for r in c + 1..n {
            let f = field.neg(field.mul(a[r][c], inv));
            a[r] = linalg::axpy(field, &a[r], f, &a[c]);
        }
    }
    det
}

/// Whether the quadric has a singular point over `F_q` or `F_{q^2}`
/// (characteristic 2, where the polar form carries too little information).
fn has_singular_point(field: &FieldCtx, f: &HomogeneousForm) -> Result<bool> {
    let big = FieldCtx::of_order(field.q() * field.q())?;
    let lifted = quadric_from_coeffs(
        &big,
        &quadric_coeffs(f)
            .iter()
            .map(|c| big.from_int(c.index() as i64))
            .collect::<Vec<_>>(),
    )?;
    let partials: Vec<HomogeneousForm> =
        (0..4).filter_map(|i| lifted.partial_derivative(&big, i)).collect();
    let singular = projgeom::enumerate_points(&big, 3)?.into_iter().any(|p| {
        lifted.vanishes_at(&big, &p) && partials.iter().all(|d| d.vanishes_at(&big, &p))
    });
    Ok(singular)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadricCensus {
    pub q: u64,
    pub total_forms: u64,
    pub plane_free: u64,
    pub with_plane_component: u64,
    pub max_count: u64,
    pub expected_max: u64,
    pub achievers: u64,
    pub all_achievers_nonsingular: bool,
    pub all_achievers_hyperbolic: bool,
    /// Histogram of point counts over plane-free quadrics.
    pub count_histogram: BTreeMap<u64, u64>,
    /// Size of the orbit of `X0 X1 - X2 X3` (only computed for q = 2).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hyperbolic_orbit_size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_equals_achievers: Option<bool>,
    pub passed: bool,
}

/// All invertible 4x4 matrices over the field. Only sensible for q = 2.
pub fn general_linear_group(field: &FieldCtx) -> Vec<Matrix> {
    let q = field.q();
    (0..q.pow(16))
        .into_par_iter()
        .filter_map(|mut k| {
            let mut m = vec![vec![FieldElement::ZERO; 4]; 4];
            for slot in m.iter_mut().flatten() {
                *slot = field.element(k % q).expect("in range");
                k /= q;
            }
            (linalg::rank(field, &m) == 4).then_some(m)
        })
        .collect()
}

/// Normalized coefficient vectors of `f(G X)` over a group of matrices.
pub fn orbit(field: &FieldCtx, f: &HomogeneousForm, group: &[Matrix]) -> HashSet<Vec<FieldElement>> {
    group
        .par_iter()
        .map(|g| {
            let cols = linalg::transpose(g);
            let frame: Vec<&[FieldElement]> = cols.iter().map(|c| c.as_slice()).collect();
            let moved = f.substitute(field, &frame).expect("invertible change of coordinates");
            normalized(field, &quadric_coeffs(&moved))
        })
        .collect()
}

/// Enumerates every quadric form up to scalars, drops those with a rational
/// plane component, and checks that the largest point count is `(q+1)^2`
/// and is only reached by nonsingular hyperbolic quadrics.
pub fn quadric_census(field: &FieldCtx) -> Result<QuadricCensus> {
    let q = field.q();
    if !(q == 2 || q == 3) {
        return Err(Error::Config(format!("quadric census is limited to q in {{2, 3}}, got {q}")));
    }
    let points = projgeom::enumerate_points(field, 3)?;
    let monomials = quadric_monomials();
    // values of the ten monomials at every rational point
    let table: Vec<Vec<FieldElement>> = points
        .iter()
        .map(|p| {
            let x = p.coords();
            monomials.iter().map(|&(i, j)| field.mul(x[i], x[j])).collect()
        })
        .collect();
    let plane_size = projgeom::theta(q, 2);
    let total_forms = projgeom::theta(q, 9);

    // (coefficients, count) for plane-free forms; None for forms with a plane
    let rows: Vec<Option<(Vec<FieldElement>, u64)>> = (0..total_forms)
        .into_par_iter()
        .map(|k| {
            let coeffs = projective_vector(field, 10, k);
            let count = table
                .iter()
                .filter(|vals| linalg::dot(field, vals, &coeffs).is_zero())
                .count() as u64;
            // a plane component contributes a whole plane of zeros
            if count >= plane_size {
                let f = quadric_from_coeffs(field, &coeffs).expect("nonzero");
                if !poly::fq_linear_components(field, &f).expect("in budget").is_empty() {
                    return None;
                }
            }
            Some((coeffs, count))
        })
        .collect();

    let plane_free: Vec<&(Vec<FieldElement>, u64)> = rows.iter().flatten().collect();
    let mut count_histogram = BTreeMap::new();
    for (_, n) in &plane_free {
        *count_histogram.entry(*n).or_insert(0u64) += 1;
    }
    let max_count = plane_free.iter().map(|(_, n)| *n).max().unwrap_or(0);
    let achievers: Vec<&Vec<FieldElement>> =
        plane_free.iter().filter(|(_, n)| *n == max_count).map(|(c, _)| c).collect();
    let expected_max = (q + 1) * (q + 1);

    let (all_nonsingular, all_hyperbolic, orbit_size, orbit_eq) = if field.p() == 2 {
        let mut nonsingular = true;
        for c in &achievers {
            if has_singular_point(field, &quadric_from_coeffs(field, c)?)? {
                nonsingular = false;
            }
        }
        let group = general_linear_group(field);
        let orb = orbit(field, &catalog::hyperbolic(field), &group);
        let achiever_set: HashSet<Vec<FieldElement>> = achievers.iter().map(|c| (*c).clone()).collect();
        let eq = orb == achiever_set;
        (nonsingular, eq, Some(orb.len() as u64), Some(eq))
    } else {
        let mut nonsingular = true;
        let mut hyperbolic = true;
        for c in &achievers {
            let m = polar_matrix(field, c);
            let det = determinant(field, &m);
            if det.is_zero() {
                nonsingular = false;
            }
            // hyperbolic type: discriminant a nonzero square, and (q+1)^2 points
            if det.is_zero() || !field.is_square(det) || max_count != expected_max {
                hyperbolic = false;
            }
        }
        (nonsingular, hyperbolic, None, None)
    };

    let plane_free_count = plane_free.len() as u64;
    let passed = max_count == expected_max && all_nonsingular && all_hyperbolic && !achievers.is_empty();
    Ok(QuadricCensus {
        q,
        total_forms,
        plane_free: plane_free_count,
        with_plane_component: total_forms - plane_free_count,
        max_count,
        expected_max,
        achievers: achievers.len() as u64,
        all_achievers_nonsingular: all_nonsingular,
        all_achievers_hyperbolic: all_hyperbolic,
        count_histogram,
        hyperbolic_orbit_size: orbit_size,
        orbit_equals_achievers: orbit_eq,
        passed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogDegree {
    pub surface: CatalogId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct X0Sign {
    pub d: u64,
    /// Exact value as a reduced fraction.
    pub x0: String,
    pub nonnegative: bool,
    /// `(d-1)^2 <= q`, i.e. `d <= sqrt(q) + 1`.
    pub below_sqrt_gate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeGate {
    pub q: u64,
    pub admissible: BTreeSet<u64>,
    pub catalog: Vec<CatalogDegree>,
    pub x0_signs: Vec<X0Sign>,
    pub sign_rule_ok: bool,
    pub passed: bool,
}

/// Checks that catalog degrees are admissible and that the `x_0` closed form
/// is nonnegative for exactly the degrees `d <= sqrt(q) + 1`, over `2..=q+1`.
pub fn degree_gate_check(q: u64) -> DegreeGate {
    let admissible = catalog::admissible_degrees(q);
    let catalog = CatalogId::ALL
        .iter()
        .map(|&id| {
            let d = id.degree(q).ok();
            CatalogDegree {
                surface: id,
                d,
                admissible: d.is_none_or(|d| admissible.contains(&d)),
            }
        })
        .collect::<Vec<_>>();
    let x0_signs: Vec<X0Sign> = (2..=q + 1)
        .map(|d| {
            let x0 = catalog::x0_expression(d, q);
            X0Sign {
                d,
                x0: x0.to_string(),
                nonnegative: x0 >= num_rational::Ratio::from_integer(0),
                below_sqrt_gate: (d - 1) * (d - 1) <= q,
            }
        })
        .collect();
    let sign_rule_ok = x0_signs.iter().all(|s| s.nonnegative == s.below_sqrt_gate);
    let passed = sign_rule_ok && catalog.iter().all(|c| c.admissible);
    DegreeGate {
        q,
        admissible,
        catalog,
        x0_signs,
        sign_rule_ok,
        passed,
    }
}
