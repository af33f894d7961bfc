//! Brute-force reference implementation used to cross-check the library.
//!
//! Shares no code with the crate: the field is built from its own search for
//! an irreducible modulus, elements are plain coefficient vectors, and point
//! counts come from affine enumeration, `(#zeros in F_q^n - 1) / (q - 1)`.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub struct OField {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    /// Monic modulus, low coefficient first, length e+1.
    modulus: Vec<u64>,
    mul_table: Vec<u64>,
}

fn to_vec(p: u64, e: u32, mut x: u64) -> Vec<u64> {
    (0..e)
        .map(|_| {
            let c = x % p;
            x /= p;
            c
        })
        .collect()
}

fn from_vec(p: u64, v: &[u64]) -> u64 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn poly_mul_mod(p: u64, modulus: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (e..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &m) in modulus[..e].iter().enumerate() {
            prod[k - e + i] = (prod[k - e + i] + p * p - c * m % p) % p;
        }
    }
    prod.truncate(e);
    prod
}

impl OField {
    pub fn new(q: u64) -> Self {
        let (p, e) = (2..=q)
            .find(|p| q.is_multiple_of(*p))
            .map(|p| {
                let mut e = 0;
                let mut r = q;
                while r.is_multiple_of(p) {
                    r /= p;
                    e += 1;
                }
                assert_eq!(r, 1, "{q} is not a prime power");
                (p, e)
            })
            .unwrap();
        // try monic moduli until multiplication has no zero divisors
        for tail in 0..p.pow(e) {
            let mut modulus = to_vec(p, e, tail);
            modulus.push(1);
            let mut table = vec![0u64; (q * q) as usize];
            let mut ok = true;
            for a in 0..q {
                for b in 0..q {
                    let c = from_vec(p, &poly_mul_mod(p, &modulus, &to_vec(p, e, a), &to_vec(p, e, b)));
                    if a != 0 && b != 0 && c == 0 {
                        ok = false;
                    }
                    table[(a * q + b) as usize] = c;
                }
            }
            if ok {
                return OField { p, e, q, modulus, mul_table: table };
            }
        }
        unreachable!("no irreducible modulus found")
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (va, vb) = (to_vec(self.p, self.e, a), to_vec(self.p, self.e, b));
        let s: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % self.p).collect();
        from_vec(self.p, &s)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let v: Vec<u64> = to_vec(self.p, self.e, a).iter().map(|x| (self.p - x) % self.p).collect();
        from_vec(self.p, &v)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul_table[(a * self.q + b) as usize]
    }

    pub fn pow(&self, a: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, _| self.mul(acc, a))
    }

    /// Image of an integer in the prime field.
    pub fn int(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    pub fn is_prime_field_elem(&self, a: u64) -> bool {
        a < self.p
    }
}

/// All vectors of `F_q^n`.
pub fn affine(field: &OField, n: usize) -> impl Iterator<Item = Vec<u64>> + '_ {
    let q = field.q;
    (0..q.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let c = k % q;
                k /= q;
                c
            })
            .collect()
    })
}

/// Representatives of `P^{n-1}(F_q)`: first nonzero coordinate 1.
pub fn projective(field: &OField, n: usize) -> Vec<Vec<u64>> {
    affine(field, n)
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect()
}

pub fn count_projective(field: &OField, n: usize, f: impl Fn(&[u64]) -> u64) -> u64 {
    let affine_zeros = affine(field, n).filter(|v| f(v) == 0).count() as u64;
    (affine_zeros - 1) / (field.q - 1)
}

/// A form given by terms `(exponents, integer coefficient)`.
pub fn eval_terms(field: &OField, terms: &[(Vec<u32>, i64)], x: &[u64]) -> u64 {
    terms.iter().fold(0, |acc, (exps, c)| {
        let mono = exps
            .iter()
            .zip(x)
            .fold(field.int(*c), |m, (&k, &xi)| field.mul(m, field.pow(xi, k as u64)));
        field.add(acc, mono)
    })
}

pub fn hyperbolic_terms() -> Vec<(Vec<u32>, i64)> {
    vec![(vec![1, 1, 0, 0], 1), (vec![0, 0, 1, 1], -1)]
}

pub fn hermitian_terms(sqrt_q: u32) -> Vec<(Vec<u32>, i64)> {
    (0..4)
        .map(|i| {
            let mut e = vec![0; 4];
            e[i] = sqrt_q + 1;
            (e, 1)
        })
        .collect()
}

pub fn full_space_terms(q: u32) -> Vec<(Vec<u32>, i64)> {
    vec![
        (vec![1, q, 0, 0], 1),
        (vec![q, 1, 0, 0], -1),
        (vec![0, 0, 1, q], 1),
        (vec![0, 0, q, 1], -1),
    ]
}

fn dot(field: &OField, a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

/// For every plane of `P^3`, the number of rational points of `S` on it.
pub fn plane_section_sizes(field: &OField, terms: &[(Vec<u32>, i64)]) -> BTreeMap<Vec<u64>, u64> {
    let pts: Vec<Vec<u64>> = projective(field, 4)
        .into_iter()
        .filter(|x| eval_terms(field, terms, x) == 0)
        .collect();
    projective(field, 4)
        .into_iter()
        .map(|h| {
            let k = pts.iter().filter(|x| dot(field, &h, x) == 0).count() as u64;
            (h, k)
        })
        .collect()
}

/// Section census by point counts alone: a pencil of `d` distinct rational
/// lines has `dq + 1` points, a curve attaining the plane bound `(d-1)q + 1`.
pub fn census_by_sizes(field: &OField, terms: &[(Vec<u32>, i64)], d: u64) -> (u64, u64, u64) {
    let q = field.q;
    let (mut nu1, mut nu2, mut other) = (0, 0, 0);
    for k in plane_section_sizes(field, terms).into_values() {
        if k == d * q + 1 {
            nu1 += 1;
        } else if k == (d - 1) * q + 1 {
            nu2 += 1;
        } else {
            other += 1;
        }
    }
    (nu1, nu2, other)
}

/// Histogram of `#(l ∩ S(F_q))` over all lines of `P^3`, lines being the
/// distinct zero sets of pairs of independent planes (as sorted point sets).
pub fn line_histogram(field: &OField, terms: &[(Vec<u32>, i64)]) -> BTreeMap<u64, u64> {
    let pts = projective(field, 4);
    let on: Vec<bool> = pts.iter().map(|x| eval_terms(field, terms, x) == 0).collect();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    let planes = projective(field, 4);
    for (i, a) in planes.iter().enumerate() {
        for b in &planes[i + 1..] {
            let l: Vec<usize> = (0..pts.len())
                .filter(|&k| dot(field, a, &pts[k]) == 0 && dot(field, b, &pts[k]) == 0)
                .collect();
            lines.insert(l);
        }
    }
    let mut hist = BTreeMap::new();
    for l in &lines {
        let k = l.iter().filter(|&&i| on[i]).count() as u64;
        *hist.entry(k).or_insert(0) += 1;
    }
    hist
}

/// Histogram of line intersection sizes for a plane curve given by
/// `f(x, y, z)`.
pub fn plane_line_histogram(field: &OField, f: impl Fn(&[u64]) -> u64) -> BTreeMap<u64, u64> {
    let pts: Vec<Vec<u64>> = projective(field, 3).into_iter().filter(|x| f(x) == 0).collect();
    let mut hist = BTreeMap::new();
    for l in projective(field, 3) {
        let k = pts.iter().filter(|x| dot(field, &l, x) == 0).count() as u64;
        *hist.entry(k).or_insert(0) += 1;
    }
    hist
}
