//! Sparse homogeneous forms over `F_q` in 2 to 4 variables.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors, so iteration is
//! in ascending graded-lexicographic order (all terms share one degree).
//! Rendering walks the map backwards, so `X0*X1 - X2*X3` prints as written.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::projgeom::{self, ProjLine, ProjPlane, ProjPoint};

pub const MAX_VARS: usize = 4;

/// Exponent vector; slots past `nvars` are always zero.
pub type Exponents = [u16; MAX_VARS];

type Terms = BTreeMap<Exponents, FieldElement>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousForm {
    nvars: usize,
    degree: u32,
    terms: Terms,
}

fn exp_degree(e: &Exponents) -> u32 {
    e.iter().map(|&a| a as u32).sum()
}

fn unit(i: usize) -> Exponents {
    let mut e = [0; MAX_VARS];
    e[i] = 1;
    e
}

fn exp_add(a: &Exponents, b: &Exponents) -> Exponents {
    let mut e = *a;
    for (x, y) in e.iter_mut().zip(b) {
        *x += y;
    }
    e
}

fn accumulate(field: &FieldCtx, terms: &mut Terms, e: Exponents, c: FieldElement) {
    if c.is_zero() {
        return;
    }
    let entry = terms.entry(e).or_insert(FieldElement::ZERO);
    *entry = field.add(*entry, c);
    if entry.is_zero() {
        terms.remove(&e);
    }
}

fn terms_mul(field: &FieldCtx, a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ea, &ca) in a {
        for (eb, &cb) in b {
            accumulate(field, &mut out, exp_add(ea, eb), field.mul(ca, cb));
        }
    }
    out
}

impl HomogeneousForm {
    /// Builds a form from `(exponents, coefficient)` pairs, summing repeats
    /// and dropping zero coefficients.
    pub fn from_terms(
        field: &FieldCtx,
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponents, FieldElement)>,
    ) -> Result<Self> {
        if !(2..=MAX_VARS).contains(&nvars) {
            return Err(Error::FieldMismatch(format!("forms need 2 to 4 variables, got {nvars}")));
        }
        let mut map = Terms::new();
        let mut degree = None;
        for (e, c) in terms {
            field.check(c)?;
            if e[nvars..].iter().any(|&a| a != 0) {
                return Err(Error::FieldMismatch(format!(
                    "exponent vector {e:?} uses more than {nvars} variables"
                )));
            }
            if c.is_zero() {
                continue;
            }
            let d = exp_degree(&e);
            if *degree.get_or_insert(d) != d {
                return Err(Error::NotHomogeneous);
            }
            accumulate(field, &mut map, e, c);
        }
        Self::from_map(nvars, map).ok_or(Error::ZeroForm)
    }

    fn from_map(nvars: usize, terms: Terms) -> Option<Self> {
        let degree = exp_degree(terms.keys().next()?);
        Some(HomogeneousForm {
            nvars,
            degree,
            terms,
        })
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars && nvars <= MAX_VARS);
        HomogeneousForm {
            nvars,
            degree: 1,
            terms: Terms::from([(unit(i), FieldElement::ONE)]),
        }
    }

    pub fn constant(nvars: usize, c: FieldElement) -> Option<Self> {
        (!c.is_zero()).then(|| HomogeneousForm {
            nvars,
            degree: 0,
            terms: Terms::from([([0; MAX_VARS], c)]),
        })
    }

    /// `c_0 X_0 + … + c_{n-1} X_{n-1}`.
    pub fn linear(field: &FieldCtx, coeffs: &[FieldElement]) -> Result<Self> {
        Self::from_terms(
            field,
            coeffs.len(),
            coeffs.iter().enumerate().map(|(i, &c)| (unit(i), c)),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponents) -> FieldElement {
        self.terms.get(e).copied().unwrap_or(FieldElement::ZERO)
    }

    /// Sum, or `None` when the terms cancel.
    ///
    /// Panics if the forms differ in degree or number of variables.
    pub fn add(&self, field: &FieldCtx, other: &Self) -> Option<Self> {
        assert_eq!((self.nvars, self.degree), (other.nvars, other.degree));
        let mut terms = self.terms.clone();
        for (&e, &c) in &other.terms {
            accumulate(field, &mut terms, e, c);
        }
        Self::from_map(self.nvars, terms)
    }

    pub fn sub(&self, field: &FieldCtx, other: &Self) -> Option<Self> {
        self.add(field, &other.neg(field))
    }

    pub fn neg(&self, field: &FieldCtx) -> Self {
        self.map_coefficients(|c| field.neg(c))
    }

    /// Multiplies every coefficient by the nonzero scalar `c`.
    pub fn scale(&self, field: &FieldCtx, c: FieldElement) -> Self {
        assert!(!c.is_zero(), "scaling by zero");
        self.map_coefficients(|x| field.mul(c, x))
    }

    pub fn mul(&self, field: &FieldCtx, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        HomogeneousForm {
            nvars: self.nvars,
            degree: self.degree + other.degree,
            terms: terms_mul(field, &self.terms, &other.terms),
        }
    }

    pub fn pow(&self, field: &FieldCtx, k: u32) -> Self {
        let mut acc = HomogeneousForm::constant(self.nvars, FieldElement::ONE).unwrap();
        for _ in 0..k {
            acc = acc.mul(field, self);
        }
        acc
    }

    /// Applies `f` to each coefficient. `f` must map nonzero elements to
    /// nonzero elements (a scalar multiple or a field automorphism).
    pub fn map_coefficients(&self, f: impl Fn(FieldElement) -> FieldElement) -> Self {
        let terms = self.terms.iter().map(|(&e, &c)| (e, f(c))).collect();
        HomogeneousForm {
            nvars: self.nvars,
            degree: self.degree,
            terms,
        }
    }

    /// Representative scaled so that the coefficient of the
    /// graded-lexicographically least term is 1.
    pub fn monic_scaled(&self, field: &FieldCtx) -> Self {
        let (_, &lead) = self.terms.iter().next().expect("forms are nonzero");
        self.scale(field, field.inv(lead).expect("nonzero"))
    }

    pub fn evaluate(&self, field: &FieldCtx, x: &[FieldElement]) -> FieldElement {
        debug_assert_eq!(x.len(), self.nvars);
        self.terms.iter().fold(FieldElement::ZERO, |acc, (e, &c)| {
            let m = x
                .iter()
                .zip(e)
                .fold(c, |m, (&xi, &a)| if a == 0 { m } else { field.mul(m, field.pow(xi, a as u64)) });
            field.add(acc, m)
        })
    }

    pub fn evaluate_point(&self, field: &FieldCtx, p: &ProjPoint) -> Result<FieldElement> {
        if p.coords().len() != self.nvars {
            return Err(Error::FieldMismatch(format!(
                "form in {} variables evaluated at a point of P^{}",
                self.nvars,
                p.dim()
            )));
        }
        Ok(self.evaluate(field, p.coords()))
    }

    #[inline]
    pub fn vanishes_at(&self, field: &FieldCtx, p: &ProjPoint) -> bool {
        self.evaluate(field, p.coords()).is_zero()
    }

    /// Linear substitution `X_i ↦ Σ_j frame[j][i] Y_j`, giving a form in
    /// `frame.len()` variables; `None` if the result is identically zero.
    pub fn substitute(&self, field: &FieldCtx, frame: &[&[FieldElement]]) -> Option<Self> {
        let m = frame.len();
        assert!((2..=MAX_VARS).contains(&m));
        let images: Vec<Terms> = (0..self.nvars)
            .map(|i| {
                let mut t = Terms::new();
                for (j, pt) in frame.iter().enumerate() {
                    accumulate(field, &mut t, unit(j), pt[i]);
                }
                t
            })
            .collect();
        let max_exp = self.terms.keys().flat_map(|e| e.iter()).copied().max().unwrap_or(0) as usize;
        let one = Terms::from([([0; MAX_VARS], FieldElement::ONE)]);
        let powers: Vec<Vec<Terms>> = images
            .iter()
            .map(|img| {
                let mut ps = vec![one.clone()];
                for k in 1..=max_exp {
                    let next = terms_mul(field, &ps[k - 1], img);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut out = Terms::new();
        for (e, &c) in &self.terms {
            let mut prod = Terms::from([([0; MAX_VARS], c)]);
            for (i, &a) in e.iter().enumerate().take(self.nvars) {
                if a > 0 {
                    prod = terms_mul(field, &prod, &powers[i][a as usize]);
                }
            }
            for (ep, cp) in prod {
                accumulate(field, &mut out, ep, cp);
            }
        }
        Self::from_map(m, out)
    }

    /// Formal partial derivative in `X_i`; `None` if it vanishes.
    pub fn partial_derivative(&self, field: &FieldCtx, i: usize) -> Option<Self> {
        let mut out = Terms::new();
        for (e, &c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = *e;
            d[i] -= 1;
            accumulate(field, &mut out, d, field.mul(field.from_int(e[i] as i64), c));
        }
        Self::from_map(self.nvars, out)
    }

    pub fn render(&self, field: &FieldCtx) -> String {
        render_form(field, self)
    }
}

/// A nonzero linear form, scaled so that its first nonzero coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coeffs: Vec<FieldElement>,
}

impl LinearForm {
    pub fn new(field: &FieldCtx, coeffs: &[FieldElement]) -> Result<Self> {
        Ok(LinearForm {
            coeffs: ProjPoint::new(field, coeffs)?.coords().to_vec(),
        })
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn to_form(&self, field: &FieldCtx) -> HomogeneousForm {
        HomogeneousForm::linear(field, &self.coeffs).expect("linear forms are nonzero")
    }

    pub fn render(&self, field: &FieldCtx) -> String {
        self.to_form(field).render(field)
    }
}

/// All normalized linear forms in `nvars` variables.
pub fn linear_forms(field: &FieldCtx, nvars: usize) -> Result<Vec<LinearForm>> {
    Ok(projgeom::enumerate_points(field, nvars as u32 - 1)?
        .into_iter()
        .map(|p| LinearForm {
            coeffs: p.coords().to_vec(),
        })
        .collect())
}

/// Exact division by a linear form. Returns the quotient and whether the
/// remainder is zero; the quotient is only meaningful when it is.
pub fn divide_by_linear(
    field: &FieldCtx,
    f: &HomogeneousForm,
    l: &LinearForm,
) -> (Option<HomogeneousForm>, bool) {
    assert_eq!(f.nvars, l.coeffs.len());
    if f.degree == 0 {
        return (None, false);
    }
    // Under lex order the leading term of l is its first variable with a
    // nonzero coefficient.
    let pivot = l.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    let pivot_inv = field.inv(l.coeffs[pivot]).expect("nonzero");
    let mut rem = f.terms.clone();
    let mut quot = Terms::new();
    while let Some((&m, &c)) = rem.iter().next_back() {
        if m[pivot] == 0 {
            return (HomogeneousForm::from_map(f.nvars, quot), false);
        }
        let mut t = m;
        t[pivot] -= 1;
        let qc = field.mul(c, pivot_inv);
        accumulate(field, &mut quot, t, qc);
        for (j, &lj) in l.coeffs.iter().enumerate() {
            if !lj.is_zero() {
                accumulate(field, &mut rem, exp_add(&t, &unit(j)), field.neg(field.mul(qc, lj)));
            }
        }
    }
    (HomogeneousForm::from_map(f.nvars, quot), true)
}

/// Rational linear factors of `f` (with multiplicity, in the order of
/// [`linear_forms`]) and the remaining cofactor.
pub fn fq_linear_factorization(
    field: &FieldCtx,
    f: &HomogeneousForm,
) -> Result<(Vec<LinearForm>, HomogeneousForm)> {
    let mut rest = f.clone();
    let mut found = Vec::new();
    if rest.degree == 0 {
        return Ok((found, rest));
    }
    for l in linear_forms(field, f.nvars)? {
        while let (Some(q), true) = divide_by_linear(field, &rest, &l) {
            found.push(l.clone());
            rest = q;
            if rest.degree == 0 {
                return Ok((found, rest));
            }
        }
    }
    Ok((found, rest))
}

/// All rational linear factors of `f`, found by trial division against every
/// normalized linear form; repeated factors appear repeatedly.
pub fn fq_linear_components(field: &FieldCtx, f: &HomogeneousForm) -> Result<Vec<LinearForm>> {
    Ok(fq_linear_factorization(field, f)?.0)
}

/// Rational zeros of `f` in `P^{n-1}(F_q)`.
pub fn rational_zeros(field: &FieldCtx, f: &HomogeneousForm) -> Result<Vec<ProjPoint>> {
    Ok(projgeom::enumerate_points(field, f.nvars as u32 - 1)?
        .into_iter()
        .filter(|p| f.vanishes_at(field, p))
        .collect())
}

pub fn count_zeros(field: &FieldCtx, f: &HomogeneousForm) -> Result<u64> {
    Ok(projgeom::enumerate_points(field, f.nvars as u32 - 1)?
        .iter()
        .filter(|p| f.vanishes_at(field, p))
        .count() as u64)
}

/// The ternary form `g(u,v,w) = f(u P_0 + v P_1 + w P_2)` for the canonical
/// frame of `h`.
pub fn restrict_to_plane(
    field: &FieldCtx,
    f: &HomogeneousForm,
    h: &ProjPlane,
) -> Result<HomogeneousForm> {
    if f.nvars != 4 {
        return Err(Error::FieldMismatch("restrict_to_plane needs a quaternary form".into()));
    }
    let frame = projgeom::plane_coordinate_frame(field, h);
    let cols: Vec<&[FieldElement]> = frame.iter().map(|p| p.coords()).collect();
    f.substitute(field, &cols)
        .ok_or_else(|| Error::IdenticallyZeroOnPlane(h.render(field)))
}

/// Binary form `f(s A + t B)` for the canonical spanning pair `(A, B)` of the
/// line, or `None` if the line lies on `f = 0`.
pub fn restrict_to_line(
    field: &FieldCtx,
    f: &HomogeneousForm,
    line: &ProjLine,
) -> Option<HomogeneousForm> {
    assert_eq!(f.nvars, line.dim() + 1);
    let (a, b) = line.spanning_points();
    f.substitute(field, &[a.coords(), b.coords()])
}

fn var_name(nvars: usize, i: usize) -> String {
    match nvars {
        4 => format!("X{i}"),
        3 => ["U", "V", "W"][i].to_string(),
        _ => format!("Y{i}"),
    }
}

/// Text form: terms in descending graded-lex order, `±c*X0^a0*…`, with unit
/// coefficients and unit exponents omitted.
pub fn render_form(field: &FieldCtx, f: &HomogeneousForm) -> String {
    let p = field.p() as u32;
    let mut out = String::new();
    for (k, (e, &c)) in f.terms.iter().rev().enumerate() {
        let coeffs = field.coeffs(c);
        let prime_sub = coeffs[1..].iter().all(|&x| x == 0);
        let (negative, mag) = if prime_sub && p > 2 && coeffs[0] > p / 2 {
            (true, field.neg(c))
        } else {
            (false, c)
        };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .take(f.nvars)
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    var_name(f.nvars, i)
                } else {
                    format!("{}^{a}", var_name(f.nvars, i))
                }
            })
            .collect();
        if vars.is_empty() {
            out.push_str(&field.render(mag));
        } else {
            if mag != FieldElement::ONE {
                let _ = write!(out, "{}*", field.render(mag));
            }
            out.push_str(&vars.join("*"));
        }
    }
    out
}

fn split_top_level(s: &str, seps: &[char]) -> Result<Vec<(char, String)>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = '+';
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Syntax(format!("unbalanced parentheses in {s:?}")));
        }
        if depth == 0 && seps.contains(&ch) {
            if !cur.is_empty() || !parts.is_empty() {
                parts.push((sign, std::mem::take(&mut cur)));
            }
            sign = ch;
        } else {
            cur.push(ch);
        }
    }
    if depth != 0 {
        return Err(Error::Syntax(format!("unbalanced parentheses in {s:?}")));
    }
    parts.push((sign, cur));
    Ok(parts)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum VarFamily {
    Indexed,
    Uvw,
    Xyz,
    Binary,
}

fn parse_var(name: &str) -> Option<(VarFamily, usize)> {
    match name {
        "X0" | "X1" | "X2" | "X3" => Some((VarFamily::Indexed, name[1..].parse().ok()?)),
        "U" => Some((VarFamily::Uvw, 0)),
        "V" => Some((VarFamily::Uvw, 1)),
        "W" => Some((VarFamily::Uvw, 2)),
        "X" => Some((VarFamily::Xyz, 0)),
        "Y" => Some((VarFamily::Xyz, 1)),
        "Z" => Some((VarFamily::Xyz, 2)),
        "Y0" | "Y1" => Some((VarFamily::Binary, name[1..].parse().ok()?)),
        _ => None,
    }
}

/// Parses `±c*X0^a0*X1^a1*…` terms joined by `+`/`-`. Quaternary forms use
/// `X0..X3`; ternary forms use `U,V,W` (or `X,Y,Z`). The number of variables
/// is inferred from the names used.
pub fn parse_form(field: &FieldCtx, text: &str) -> Result<HomogeneousForm> {
    parse_form_with(field, text, None)
}

/// As [`parse_form`], forcing the number of variables (needed when the
/// highest-index variables do not occur, e.g. a ternary form in `X0, X1`).
pub fn parse_form_with(
    field: &FieldCtx,
    text: &str,
    nvars: Option<usize>,
) -> Result<HomogeneousForm> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Syntax("empty form".into()));
    }
    let mut family: Option<VarFamily> = None;
    let mut max_index = 0;
    let mut parsed = Vec::new();
    for (sign, term) in split_top_level(&s, &['+', '-'])? {
        if term.is_empty() {
            return Err(Error::Syntax(format!("empty term in {text:?}")));
        }
        let mut coeff = if sign == '-' {
            field.neg(FieldElement::ONE)
        } else {
            FieldElement::ONE
        };
        let mut exps = [0u16; MAX_VARS];
        for (_, factor) in split_top_level(&term, &['*'])? {
            let (base, exp) = match factor.rsplit_once('^') {
                Some((b, x)) if !factor.ends_with(')') => {
                    let x: u16 = x
                        .parse()
                        .map_err(|_| Error::Syntax(format!("bad exponent in {factor:?}")))?;
                    (b, x)
                }
                _ => (factor.as_str(), 1),
            };
            if let Some((fam, idx)) = parse_var(base) {
                if *family.get_or_insert(fam) != fam {
                    return Err(Error::Syntax(format!("mixed variable names in {text:?}")));
                }
                max_index = max_index.max(idx);
                exps[idx] += exp;
            } else {
                let c = field.pow(field.parse(base)?, exp as u64);
                coeff = field.mul(coeff, c);
            }
        }
        parsed.push((exps, coeff));
    }
    let inferred = match family {
        Some(VarFamily::Indexed) => 4,
        Some(VarFamily::Uvw | VarFamily::Xyz) => 3,
        Some(VarFamily::Binary) => 2,
        None => nvars.ok_or_else(|| Error::Syntax(format!("no variables in {text:?}")))?,
    };
    let n = nvars.unwrap_or(inferred);
    if max_index >= n {
        return Err(Error::Syntax(format!("{text:?} uses more than {n} variables")));
    }
    HomogeneousForm::from_terms(field, n, parsed)
}
