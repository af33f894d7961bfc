//! Finite fields `F_q` with `q = p^e`.
//!
//! A [`FieldCtx`] fixes the characteristic, the extension degree and the
//! defining polynomial, and owns addition and multiplication tables. Elements
//! are small [`Copy`] handles ([`FieldElement`]) that only make sense together
//! with the context that produced them.
//!
//! An element with coefficient vector `(c_0, …, c_{e-1})` in the basis
//! `1, t, …, t^{e-1}` is stored as the integer `c_0 + c_1 p + … + c_{e-1} p^{e-1}`,
//! so equality of handles is equality of coefficient vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Enumeration caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Budget {
    /// Largest field order accepted by [`FieldCtx::with_budget`].
    pub field_max_q: u64,
    /// Largest field order for which full `P^3(F_q)` enumerations are allowed.
    pub space_max_q: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            field_max_q: 64,
            space_max_q: 16,
        }
    }
}

impl Budget {
    pub fn check_space(&self, q: u64, what: &'static str) -> Result<()> {
        if q > self.space_max_q {
            return Err(Error::BudgetExceeded {
                what,
                q,
                limit: self.space_max_q,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^e`, or `None` if it is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Exact integer square root, if `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

pub fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

// Dense polynomials over F_p, coefficients low-to-high.
fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &mi) in m.iter().enumerate() {
            let sub = (c as u64 * mi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p)
        .find(|&x| (a as u64 * x as u64) % p as u64 == 1)
        .expect("nonzero residue mod a prime is invertible")
}

fn digits(mut n: u64, base: u64, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for d in out.iter_mut() {
        *d = (n % base) as u32;
        n /= base;
    }
    out
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for k in 1..=deg / 2 {
        let count = (p as u64).pow(k as u32);
        for n in 0..count {
            let mut g = digits(n, p as u64, k);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree `e`, comparing
/// coefficient vectors `(c_0, c_1, …)` with `c_0` most significant.
fn least_irreducible(p: u32, e: u32) -> Vec<u32> {
    let e = e as usize;
    let count = (p as u64).pow(e as u32);
    for n in 0..count {
        // most significant digit first
        let mut f: Vec<u32> = digits(n, p as u64, e).into_iter().rev().collect();
        f.push(1);
        if e == 1 || is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Description and arithmetic tables of `F_q`.
#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    e: u32,
    q: u32,
    defining_poly: Vec<u32>,
    budget: Budget,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("defining_poly", &self.defining_poly)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.defining_poly == other.defining_poly
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        Self::with_budget(p, e, Budget::default())
    }

    /// Field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        Self::of_order_with_budget(q, Budget::default())
    }

    pub fn of_order_with_budget(q: u64, budget: Budget) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::with_budget(p, e, budget)
    }

    pub fn with_budget(p: u64, e: u32, budget: Budget) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::DegreeZero);
        }
        let q = p.checked_pow(e).filter(|&q| q <= budget.field_max_q).ok_or(
            Error::BudgetExceeded {
                what: "field construction",
                q: p.saturating_pow(e),
                limit: budget.field_max_q,
            },
        )?;
        let (p, q) = (p as u32, q as u32);
        let defining_poly = least_irreducible(p, e);
        let n = q as usize;
        let elems: Vec<Vec<u32>> = (0..q as u64)
            .map(|i| digits(i, p as u64, e as usize))
            .collect();
        let encode = |c: &[u32]| -> u32 {
            c.iter()
                .rev()
                .fold(0u64, |acc, &d| acc * p as u64 + d as u64) as u32
        };

        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let s: Vec<u32> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add[i * n + j] = encode(&s);

                let mut prod = vec![0u32; 2 * e as usize - 1];
                for (k, &x) in a.iter().enumerate() {
                    for (l, &y) in b.iter().enumerate() {
                        prod[k + l] = ((prod[k + l] as u64 + x as u64 * y as u64) % p as u64) as u32;
                    }
                }
                let mut r = poly_rem(&prod, &defining_poly, p);
                r.resize(e as usize, 0);
                mul[i * n + j] = encode(&r);
            }
        }
        let neg = (0..n)
            .map(|i| (0..n).find(|&j| add[i * n + j] == 0).unwrap() as u32)
            .collect();
        let inv = (0..n)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    (1..n).find(|&j| mul[i * n + j] == 1).unwrap() as u32
                }
            })
            .collect();

        Ok(FieldCtx {
            p,
            e,
            q,
            defining_poly,
            budget,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn p(&self) -> u64 {
        self.p as u64
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q as u64
    }

    /// Monic defining polynomial, coefficients low-to-high.
    pub fn defining_poly(&self) -> &[u32] {
        &self.defining_poly
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// `sqrt(q)` when `q` is a square.
    pub fn sqrt_q(&self) -> Option<u64> {
        self.e.is_multiple_of(2).then(|| (self.p as u64).pow(self.e / 2))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q
    }

    pub fn check(&self, a: FieldElement) -> Result<FieldElement> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::FieldMismatch(format!(
                "element index {} outside F_{}",
                a.0, self.q
            )))
        }
    }

    pub fn element(&self, index: u64) -> Result<FieldElement> {
        self.check(FieldElement(u32::try_from(index).unwrap_or(u32::MAX)))
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.e as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch(format!(
                "coefficients {coeffs:?} do not describe an element of F_{}",
                self.q
            )));
        }
        let idx = coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.p as u64 + d as u64);
        Ok(FieldElement(idx as u32))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits(a.0 as u64, self.p as u64, self.e as usize)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    /// The generator `t` of the polynomial basis (equal to 0 for a prime field,
    /// where the defining polynomial is `t`).
    pub fn generator(&self) -> FieldElement {
        if self.e == 1 {
            FieldElement::ZERO
        } else {
            FieldElement(self.p)
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.index() * self.q as usize + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.index() * self.q as usize + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElement(self.inv[a.index()]))
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: FieldElement, k: u32) -> FieldElement {
        (0..k % self.e).fold(a, |x, _| self.pow(x, self.p as u64))
    }

    /// Membership in the subfield of order `p^k` (`k` must divide `e` for this
    /// to be a subfield).
    pub fn in_subfield(&self, a: FieldElement, k: u32) -> bool {
        self.frobenius(a, k) == a
    }

    /// `a^(sqrt(q)+1)`, the norm down to `F_sqrt(q)`.
    pub fn sqrt_q_norm(&self, a: FieldElement) -> Result<FieldElement> {
        let s = self.sqrt_q().ok_or(Error::QNotSquare(self.q()))?;
        Ok(self.pow(a, s + 1))
    }

    /// Nonzero squares and zero. Every element is a square in characteristic 2.
    pub fn is_square(&self, a: FieldElement) -> bool {
        a.is_zero() || self.p == 2 || self.pow(a, (self.q as u64 - 1) / 2) == FieldElement::ONE
    }

    /// Text form: decimal for prime-subfield elements, otherwise a
    /// parenthesized polynomial in `t` such as `(t+1)` or `(2*t^2+1)`.
    pub fn render(&self, a: FieldElement) -> String {
        let c = self.coeffs(a);
        if c.iter().skip(1).all(|&x| x == 0) {
            return c[0].to_string();
        }
        let mut terms = Vec::new();
        for (k, &ck) in c.iter().enumerate().rev() {
            if ck == 0 {
                continue;
            }
            let term = match (k, ck) {
                (0, _) => ck.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{ck}*t"),
                (_, 1) => format!("t^{k}"),
                _ => format!("{ck}*t^{k}"),
            };
            terms.push(term);
        }
        format!("({})", terms.join("+"))
    }

    /// Inverse of [`FieldCtx::render`]; also accepts `+`/`-` separated
    /// polynomials in `t` with or without parentheses and explicit `t^1`.
    pub fn parse(&self, text: &str) -> Result<FieldElement> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = match s.strip_prefix('(') {
            Some(rest) => rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Syntax(format!("unbalanced parentheses in {text:?}")))?,
            None => s.as_str(),
        };
        if body.is_empty() {
            return Err(Error::Syntax("empty field element".into()));
        }
        let mut acc = FieldElement::ZERO;
        let mut rest = body;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = self.parse_gf_term(&rest[..end], text)?;
            acc = if negative {
                self.sub(acc, term)
            } else {
                self.add(acc, term)
            };
            if end == rest.len() {
                break;
            }
            negative = rest.as_bytes()[end] == b'-';
            rest = &rest[end + 1..];
        }
        Ok(acc)
    }

    fn parse_gf_term(&self, term: &str, whole: &str) -> Result<FieldElement> {
        let bad = || Error::Syntax(format!("malformed field element {whole:?}"));
        if term.is_empty() {
            return Err(bad());
        }
        let (coeff, power) = match term.split_once('*') {
            Some((c, t)) => (Some(c), Some(t)),
            None if term.starts_with('t') => (None, Some(term)),
            None => (Some(term), None),
        };
        let c = match coeff {
            Some(c) => {
                let n: u64 = c.parse().map_err(|_| bad())?;
                self.from_int((n % self.p as u64) as i64)
            }
            None => FieldElement::ONE,
        };
        let t_pow = match power {
            None => FieldElement::ONE,
            Some(t) => {
                if self.e == 1 {
                    return Err(Error::Syntax(format!(
                        "{whole:?} uses t in the prime field F_{}",
                        self.p
                    )));
                }
                let k: u64 = match t.strip_prefix('t').ok_or_else(bad)? {
                    "" => 1,
                    exp => exp
                        .strip_prefix('^')
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(bad)?,
                };
                self.pow(self.generator(), k)
            }
        };
        Ok(self.mul(c, t_pow))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_defining_poly_is_t() {
        let f = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f.defining_poly(), &[0, 1]);
        assert_eq!(f.q(), 2);
    }

    #[test]
    fn f4_and_f9_defining_polys() {
        // Oracle: list all monic quadratics and test for roots (degree 2 is
        // irreducible iff rootless), pick the lex-least by (c0, c1).
        fn least_rootless_quadratic(p: u32) -> Vec<u32> {
            let mut found = Vec::new();
            for c0 in 0..p {
                for c1 in 0..p {
                    if (0..p).all(|x| (x * x + c1 * x + c0) % p != 0) {
                        found.push(vec![c0, c1, 1]);
                    }
                }
            }
            found.into_iter().next().unwrap()
        }
        assert_eq!(least_rootless_quadratic(2), vec![1, 1, 1]);
        assert_eq!(FieldCtx::new(2, 2).unwrap().defining_poly(), &[1, 1, 1]);
        assert_eq!(least_rootless_quadratic(3), vec![1, 0, 1]);
        assert_eq!(FieldCtx::new(3, 2).unwrap().defining_poly(), &[1, 0, 1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldCtx::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldCtx::new(2, 0).unwrap_err(), Error::DegreeZero);
        assert!(matches!(
            FieldCtx::new(2, 7),
            Err(Error::BudgetExceeded { q: 128, .. })
        ));
        let big = Budget {
            field_max_q: 256,
            ..Budget::default()
        };
        assert_eq!(FieldCtx::with_budget(2, 7, big).unwrap().q(), 128);
    }

    #[test]
    fn f4_products() {
        let f = FieldCtx::new(2, 2).unwrap();
        let t = f.generator();
        let t_plus_1 = f.add(t, FieldElement::ONE);
        assert_eq!(f.mul(t, t), t_plus_1);
        assert_eq!(f.frobenius(t, 1), t_plus_1);
        assert_eq!(f.sqrt_q_norm(t).unwrap(), FieldElement::ONE);
        assert_eq!(f.sqrt_q_norm(FieldElement::ZERO).unwrap(), FieldElement::ZERO);
        assert_eq!(f.sqrt_q_norm(FieldElement::ONE).unwrap(), FieldElement::ONE);
    }

    #[test]
    fn inverse_and_zero_division() {
        let f = FieldCtx::new(3, 2).unwrap();
        for a in f.nonzero_elements() {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
        }
        assert_eq!(f.inv(FieldElement::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn norm_requires_square_order() {
        let f = FieldCtx::new(3, 1).unwrap();
        assert_eq!(f.sqrt_q_norm(FieldElement::ONE), Err(Error::QNotSquare(3)));
    }

    #[test]
    fn fermat_and_group_order_exhaustive() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2)] {
            let f = FieldCtx::new(p, e).unwrap();
            for a in f.elements() {
                assert_eq!(f.pow(a, f.q()), a);
                assert_eq!(f.frobenius(a, e), a);
                if !a.is_zero() {
                    assert_eq!(f.pow(a, f.q() - 1), FieldElement::ONE);
                }
            }
            for a in f.elements().filter(|a| f.coeffs(*a)[1..].iter().all(|&c| c == 0)) {
                assert_eq!(f.frobenius(a, 1), a);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FieldCtx::of_order(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn norm_is_multiplicative_and_lands_in_subfield() {
        for q in [4u64, 9, 16] {
            let f = FieldCtx::of_order(q).unwrap();
            let half = f.e() / 2;
            for a in f.elements() {
                let na = f.sqrt_q_norm(a).unwrap();
                assert!(f.in_subfield(na, half));
                for b in f.elements() {
                    assert_eq!(
                        f.sqrt_q_norm(f.mul(a, b)).unwrap(),
                        f.mul(na, f.sqrt_q_norm(b).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn render_examples() {
        let f4 = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f4.render(f4.add(f4.generator(), FieldElement::ONE)), "(t+1)");
        assert_eq!(f4.render(FieldElement::ONE), "1");
        let f9 = FieldCtx::new(3, 2).unwrap();
        let x = f9.from_coeffs(&[1, 2]).unwrap();
        assert_eq!(f9.render(x), "(2*t+1)");
        assert_eq!(f9.parse("(2*t^1+1)").unwrap(), x);
        assert_eq!(f9.parse("2*t - 2").unwrap(), x);
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(f5.render(f5.from_int(-1)), "4");
        assert!(matches!(f5.parse("t"), Err(Error::Syntax(_))));
        assert!(matches!(f9.parse("(t+1"), Err(Error::Syntax(_))));
    }

    #[test]
    fn render_parse_round_trip_exhaustive() {
        for q in [2u64, 3, 4, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = FieldCtx::of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.parse(&f.render(a)).unwrap(), a, "q={q}");
            }
        }
    }

    #[test]
    fn prime_power_helper() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(exact_sqrt(49), Some(7));
        assert_eq!(exact_sqrt(8), None);
    }
}
