//! Points, lines and planes of `P^r(F_q)` for `r <= 3`.
//!
//! Every object is stored in a canonical form so that derived equality and
//! ordering are geometric equality and the lexicographic enumeration order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg;

/// `θ_q(r) = #P^r(F_q) = (q^{r+1} - 1)/(q - 1)`, with `θ_q(0) = 1`.
pub fn theta(q: u64, r: u32) -> u64 {
    (0..=r).map(|i| q.pow(i)).sum()
}

/// Number of lines of `P^3(F_q)`.
pub fn line_count_p3(q: u64) -> u64 {
    (q * q + 1) * (q * q + q + 1)
}

/// A point of `P^r` whose first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
}

impl ProjPoint {
    pub fn new(field: &FieldCtx, coords: &[FieldElement]) -> Result<Self> {
        for &c in coords {
            field.check(c)?;
        }
        let coords = linalg::normalize(field, coords).ok_or(Error::ZeroVector)?;
        Ok(ProjPoint { coords })
    }

    /// From small integers, reduced into the prime subfield.
    pub fn from_ints(field: &FieldCtx, coords: &[i64]) -> Result<Self> {
        let c: Vec<_> = coords.iter().map(|&x| field.from_int(x)).collect();
        Self::new(field, &c)
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    /// Ambient dimension `r`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn render(&self, field: &FieldCtx) -> String {
        let parts: Vec<_> = self.coords.iter().map(|&c| field.render(c)).collect();
        format!("({})", parts.join(":"))
    }

    /// Parses `(1:0:(t+1):1)`.
    pub fn parse(field: &FieldCtx, text: &str) -> Result<Self> {
        let s = text.trim();
        let body = s
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Syntax(format!("expected (x0:…:xr), got {text:?}")))?;
        let coords = body
            .split(':')
            .map(|c| field.parse(c))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() < 2 {
            return Err(Error::Syntax(format!("{text:?} has fewer than two coordinates")));
        }
        Self::new(field, &coords)
    }
}

/// A plane `a_0 X_0 + … + a_3 X_3 = 0`, stored by normalized dual coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPlane(ProjPoint);

impl ProjPlane {
    pub fn new(field: &FieldCtx, dual_coords: &[FieldElement]) -> Result<Self> {
        if dual_coords.len() != 4 {
            return Err(Error::FieldMismatch(format!(
                "a plane of P^3 needs 4 dual coordinates, got {}",
                dual_coords.len()
            )));
        }
        Ok(ProjPlane(ProjPoint::new(field, dual_coords)?))
    }

    pub fn from_ints(field: &FieldCtx, dual_coords: &[i64]) -> Result<Self> {
        let c: Vec<_> = dual_coords.iter().map(|&x| field.from_int(x)).collect();
        Self::new(field, &c)
    }

    pub fn dual_coords(&self) -> &[FieldElement] {
        self.0.coords()
    }

    pub fn as_point(&self) -> &ProjPoint {
        &self.0
    }

    #[inline]
    pub fn contains(&self, field: &FieldCtx, p: &ProjPoint) -> bool {
        linalg::dot(field, self.dual_coords(), p.coords()).is_zero()
    }

    pub fn render(&self, field: &FieldCtx) -> String {
        self.0.render(field)
    }

    pub fn parse(field: &FieldCtx, text: &str) -> Result<Self> {
        let p = ProjPoint::parse(field, text)?;
        Self::new(field, p.coords())
    }
}

/// A line, stored as the two lexicographically least of its rational points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjLine {
    a: ProjPoint,
    b: ProjPoint,
}

impl ProjLine {
    pub fn through(field: &FieldCtx, p: &ProjPoint, r: &ProjPoint) -> Result<Self> {
        if p.dim() != r.dim() {
            return Err(Error::FieldMismatch("points live in different spaces".into()));
        }
        if p == r {
            return Err(Error::DegenerateLine);
        }
        let pts = span_points(field, p.coords(), r.coords());
        Ok(ProjLine {
            a: pts[0].clone(),
            b: pts[1].clone(),
        })
    }

    /// The line `c_0 x_0 + c_1 x_1 + c_2 x_2 = 0` of `P^2`.
    pub fn from_dual(field: &FieldCtx, dual: &[FieldElement]) -> Result<Self> {
        if dual.len() != 3 {
            return Err(Error::FieldMismatch("dual line coordinates must have length 3".into()));
        }
        if dual.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let basis = linalg::nullspace(field, &[dual.to_vec()], 3);
        let p = ProjPoint::new(field, &basis[0])?;
        let r = ProjPoint::new(field, &basis[1])?;
        Self::through(field, &p, &r)
    }

    pub fn spanning_points(&self) -> (&ProjPoint, &ProjPoint) {
        (&self.a, &self.b)
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// All `q + 1` rational points, sorted.
    pub fn points(&self, field: &FieldCtx) -> Vec<ProjPoint> {
        span_points(field, self.a.coords(), self.b.coords())
    }

    pub fn contains(&self, field: &FieldCtx, p: &ProjPoint) -> bool {
        p.dim() == self.dim()
            && linalg::rank(
                field,
                &[self.a.coords().to_vec(), self.b.coords().to_vec(), p.coords().to_vec()],
            ) == 2
    }

    pub fn render(&self, field: &FieldCtx) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}{}", self.a.render(field), self.b.render(field));
        s
    }
}

fn span_points(field: &FieldCtx, p: &[FieldElement], r: &[FieldElement]) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = field
        .elements()
        .map(|lambda| {
            ProjPoint::new(field, &linalg::axpy(field, r, lambda, p)).expect("independent points")
        })
        .collect();
    pts.push(ProjPoint::new(field, p).expect("nonzero"));
    pts.sort();
    pts
}

fn check_dimension(field: &FieldCtx, r: u32) -> Result<()> {
    if r > 3 {
        return Err(Error::FieldMismatch(format!("P^{r} is outside the supported range r <= 3")));
    }
    if r == 3 {
        field.budget().check_space(field.q(), "enumeration of P^3")?;
    }
    Ok(())
}

/// All normalized points of `P^r(F_q)` in lexicographic order.
pub fn enumerate_points(field: &FieldCtx, r: u32) -> Result<Vec<ProjPoint>> {
    check_dimension(field, r)?;
    let n = r as usize + 1;
    let q = field.q();
    let mut out = Vec::with_capacity(theta(q, r) as usize);
    for lead in (0..n).rev() {
        let tail = n - lead - 1;
        for k in 0..q.pow(tail as u32) {
            let mut coords = vec![FieldElement::ZERO; n];
            coords[lead] = FieldElement::ONE;
            let mut rest = k;
            for slot in (lead + 1..n).rev() {
                coords[slot] = field.element(rest % q)?;
                rest /= q;
            }
            out.push(ProjPoint { coords });
        }
    }
    Ok(out)
}

pub fn enumerate_planes(field: &FieldCtx) -> Result<Vec<ProjPlane>> {
    Ok(enumerate_points(field, 3)?.into_iter().map(ProjPlane).collect())
}

/// All lines of `P^r(F_q)`, built from point pairs with deduplication.
pub fn enumerate_lines(field: &FieldCtx, r: u32) -> Result<Vec<ProjLine>> {
    let pts = enumerate_points(field, r)?;
    let mut seen: BTreeSet<ProjLine> = BTreeSet::new();
    let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
    let index: std::collections::HashMap<&ProjPoint, usize> =
        pts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if covered.contains(&(i, j)) {
                continue;
            }
            let line = ProjLine::through(field, &pts[i], &pts[j])?;
            let on: Vec<usize> = line.points(field).iter().map(|p| index[p]).collect();
            for (x, &a) in on.iter().enumerate() {
                for &b in &on[x + 1..] {
                    covered.insert((a.min(b), a.max(b)));
                }
            }
            seen.insert(line);
        }
    }
    Ok(seen.into_iter().collect())
}

/// The `q + 1` planes containing a line of `P^3`, sorted.
pub fn planes_through_line(field: &FieldCtx, line: &ProjLine) -> Result<Vec<ProjPlane>> {
    if line.dim() != 3 {
        return Err(Error::FieldMismatch("planes_through_line needs a line of P^3".into()));
    }
    let (a, b) = line.spanning_points();
    let basis = linalg::nullspace(field, &[a.coords().to_vec(), b.coords().to_vec()], 4);
    let mut planes: Vec<ProjPlane> = span_points(field, &basis[0], &basis[1])
        .into_iter()
        .map(ProjPlane)
        .collect();
    planes.sort();
    Ok(planes)
}

pub fn planes_through_point(field: &FieldCtx, p: &ProjPoint) -> Result<Vec<ProjPlane>> {
    Ok(enumerate_planes(field)?
        .into_iter()
        .filter(|h| h.contains(field, p))
        .collect())
}

pub fn incident(field: &FieldCtx, p: &ProjPoint, h: &ProjPlane) -> Result<bool> {
    if p.dim() != 3 {
        return Err(Error::FieldMismatch(format!(
            "point of P^{} tested against a plane of P^3",
            p.dim()
        )));
    }
    for &c in p.coords().iter().chain(h.dual_coords()) {
        field.check(c)?;
    }
    Ok(h.contains(field, p))
}

pub fn line_points(field: &FieldCtx, line: &ProjLine) -> Vec<ProjPoint> {
    line.points(field)
}

/// Three independent points spanning `h`: the normalized kernel basis of the
/// dual vector, one per free coordinate in increasing order. The plane is
/// parametrized by `(u:v:w) ↦ u P_0 + v P_1 + w P_2`.
pub fn plane_coordinate_frame(field: &FieldCtx, h: &ProjPlane) -> [ProjPoint; 3] {
    let basis = linalg::nullspace(field, &[h.dual_coords().to_vec()], 4);
    let pts: Vec<ProjPoint> = basis
        .iter()
        .map(|v| ProjPoint::new(field, v).expect("kernel vectors are nonzero"))
        .collect();
    [pts[0].clone(), pts[1].clone(), pts[2].clone()]
}

/// Image of `(u:v:w)` under a plane frame.
pub fn frame_map(field: &FieldCtx, frame: &[ProjPoint], local: &[FieldElement]) -> Result<ProjPoint> {
    let n = frame[0].coords().len();
    let mut v = vec![FieldElement::ZERO; n];
    for (pt, &c) in frame.iter().zip(local) {
        v = linalg::axpy(field, &v, c, pt.coords());
    }
    ProjPoint::new(field, &v)
}
