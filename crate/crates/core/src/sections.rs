//! Plane sections of surfaces in `P^3(F_q)`.
//!
//! Every rational plane `H` cuts a surface `S` in a plane curve. For a
//! surface attaining the elementary bound that curve is either a planar
//! pencil of `d` concurrent rational lines or a curve without rational line
//! components carrying exactly `(d-1)q + 1` points. This module classifies
//! sections, tallies them over all planes, audits every line against the
//! pencil planes through it, and computes the line census of plane curves.
//!
//! Classification works on the ternary form obtained by restricting `S` to
//! the canonical frame of `H` (see [`projgeom::plane_coordinate_frame`]);
//! lines and vertices are mapped back to `P^3` through the same frame.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::Add;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, HasseWeil};
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg;
use crate::poly::{self, HomogeneousForm, LinearForm};
use crate::projgeom::{self, ProjLine, ProjPlane, ProjPoint};

/// One rational line of a pencil section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilLine {
    /// Linear factor in the frame coordinates `(u, v, w)` of the plane.
    pub factor: LinearForm,
    /// The same line in `P^3`.
    pub line: ProjLine,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionClass {
    /// The section splits into rational lines through a common point.
    PlanarPencil {
        vertex: ProjPoint,
        lines: Vec<PencilLine>,
        /// Some line occurs with multiplicity above one.
        repeated: bool,
    },
    /// No rational line component and exactly `(d-1)q + 1` rational points.
    ExtremalCurve { count: u64 },
    Other {
        count: u64,
        line_components: Vec<LinearForm>,
    },
}

impl SectionClass {
    pub fn is_pencil(&self) -> bool {
        matches!(self, SectionClass::PlanarPencil { .. })
    }

    pub fn vertex(&self) -> Option<&ProjPoint> {
        match self {
            SectionClass::PlanarPencil { vertex, .. } => Some(vertex),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SectionClass::PlanarPencil { .. } => "pencil",
            SectionClass::ExtremalCurve { .. } => "extremal_curve",
            SectionClass::Other { .. } => "other",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SectionCensus {
    pub nu1: u64,
    pub nu2: u64,
    pub other: u64,
}

impl SectionCensus {
    pub fn total(&self) -> u64 {
        self.nu1 + self.nu2 + self.other
    }

    fn tally(class: &SectionClass) -> Self {
        match class {
            SectionClass::PlanarPencil { .. } => SectionCensus { nu1: 1, ..Default::default() },
            SectionClass::ExtremalCurve { .. } => SectionCensus { nu2: 1, ..Default::default() },
            SectionClass::Other { .. } => SectionCensus { other: 1, ..Default::default() },
        }
    }
}

impl Add for SectionCensus {
    type Output = SectionCensus;

    fn add(self, rhs: Self) -> Self {
        SectionCensus {
            nu1: self.nu1 + rhs.nu1,
            nu2: self.nu2 + rhs.nu2,
            other: self.other + rhs.other,
        }
    }
}

impl std::iter::Sum for SectionCensus {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(SectionCensus::default(), Add::add)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineAudit {
    /// Rational points of the line on the surface.
    pub alpha: u64,
    /// Planes through the line whose section is a pencil.
    pub beta: u64,
}

fn require_surface(s: &HomogeneousForm) -> Result<()> {
    if s.nvars() != 4 {
        return Err(Error::FieldMismatch(format!(
            "expected a surface in 4 variables, got {} variables",
            s.nvars()
        )));
    }
    Ok(())
}

/// `N_q(S)`, by enumeration of `P^3(F_q)`.
pub fn count_points(field: &FieldCtx, s: &HomogeneousForm) -> Result<u64> {
    require_surface(s)?;
    poly::count_zeros(field, s)
}

fn line_in_plane(field: &FieldCtx, frame: &[ProjPoint; 3], factor: &LinearForm) -> Result<ProjLine> {
    let local = linalg::nullspace(field, &[factor.coeffs().to_vec()], 3);
    let a = projgeom::frame_map(field, frame, &local[0])?;
    let b = projgeom::frame_map(field, frame, &local[1])?;
    ProjLine::through(field, &a, &b)
}

/// Groups consecutive equal factors (trial division returns repeats together).
fn with_multiplicity(factors: &[LinearForm]) -> Vec<(LinearForm, u32)> {
    let mut out: Vec<(LinearForm, u32)> = Vec::new();
    for f in factors {
        match out.last_mut() {
            Some((g, m)) if g == f => *m += 1,
            _ => out.push((f.clone(), 1)),
        }
    }
    out
}

/// Classifies `S ∩ H`. Fails with [`Error::PlaneComponent`] when `H` is a
/// component of `S`.
pub fn classify_section(field: &FieldCtx, s: &HomogeneousForm, h: &ProjPlane) -> Result<SectionClass> {
    require_surface(s)?;
    let g = match poly::restrict_to_plane(field, s, h) {
        Ok(g) => g,
        Err(Error::IdenticallyZeroOnPlane(_)) => {
            return Err(Error::PlaneComponent(h.render(field)))
        }
        Err(e) => return Err(e),
    };
    let (factors, cofactor) = poly::fq_linear_factorization(field, &g)?;
    if cofactor.degree() == 0 && g.degree() >= 2 {
        let grouped = with_multiplicity(&factors);
        if grouped.len() >= 2 {
            let first_two = [grouped[0].0.coeffs().to_vec(), grouped[1].0.coeffs().to_vec()];
            let meet = linalg::nullspace(field, &first_two, 3);
            let concurrent = grouped
                .iter()
                .all(|(l, _)| linalg::dot(field, l.coeffs(), &meet[0]).is_zero());
            if concurrent {
                let frame = projgeom::plane_coordinate_frame(field, h);
                let vertex = projgeom::frame_map(field, &frame, &meet[0])?;
                let lines = grouped
                    .iter()
                    .map(|(l, m)| {
                        Ok(PencilLine {
                            factor: l.clone(),
                            line: line_in_plane(field, &frame, l)?,
                            multiplicity: *m,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let repeated = lines.iter().any(|l| l.multiplicity > 1);
                return Ok(SectionClass::PlanarPencil {
                    vertex,
                    lines,
                    repeated,
                });
            }
        }
    }
    let count = poly::count_zeros(field, &g)?;
    if factors.is_empty() && count == catalog::sziklai_bound(g.degree() as u64, field.q()) {
        Ok(SectionClass::ExtremalCurve { count })
    } else {
        Ok(SectionClass::Other {
            count,
            line_components: factors,
        })
    }
}

/// Classification of every rational plane, in enumeration order.
#[derive(Clone, Debug)]
pub struct SectionTable {
    planes: Vec<ProjPlane>,
    classes: Vec<SectionClass>,
    index: HashMap<ProjPlane, usize>,
}

impl SectionTable {
    pub fn build(field: &FieldCtx, s: &HomogeneousForm) -> Result<Self> {
        require_surface(s)?;
        let planes = projgeom::enumerate_planes(field)?;
        let classes = planes
            .par_iter()
            .map(|h| classify_section(field, s, h))
            .collect::<Result<Vec<_>>>()?;
        let index = planes.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        Ok(SectionTable {
            planes,
            classes,
            index,
        })
    }

    pub fn planes(&self) -> &[ProjPlane] {
        &self.planes
    }

    pub fn classes(&self) -> &[SectionClass] {
        &self.classes
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ProjPlane, &SectionClass)> {
        self.planes.iter().zip(&self.classes)
    }

    pub fn class_of(&self, h: &ProjPlane) -> Option<&SectionClass> {
        self.index.get(h).map(|&i| &self.classes[i])
    }

    pub fn census(&self) -> SectionCensus {
        self.classes.iter().map(SectionCensus::tally).sum()
    }

    pub fn vertex_map(&self) -> BTreeMap<ProjPlane, ProjPoint> {
        self.iter()
            .filter_map(|(h, c)| c.vertex().map(|v| (h.clone(), v.clone())))
            .collect()
    }

    pub fn line_audit(&self, field: &FieldCtx, s: &HomogeneousForm, l: &ProjLine) -> Result<LineAudit> {
        let alpha = l.points(field).iter().filter(|p| s.vanishes_at(field, p)).count() as u64;
        let mut beta = 0;
        for h in projgeom::planes_through_line(field, l)? {
            if self.class_of(&h).is_some_and(SectionClass::is_pencil) {
                beta += 1;
            }
        }
        Ok(LineAudit { alpha, beta })
    }
}

/// Tallies the sections over the given planes. Any partition of the plane
/// set gives tallies summing to the full census.
pub fn section_census_over(
    field: &FieldCtx,
    s: &HomogeneousForm,
    planes: &[ProjPlane],
) -> Result<SectionCensus> {
    planes
        .par_iter()
        .map(|h| classify_section(field, s, h).map(|c| SectionCensus::tally(&c)))
        .try_reduce(SectionCensus::default, |a, b| Ok(a + b))
}

pub fn section_census(field: &FieldCtx, s: &HomogeneousForm) -> Result<SectionCensus> {
    require_surface(s)?;
    section_census_over(field, s, &projgeom::enumerate_planes(field)?)
}

fn bijection_from_table(
    field: &FieldCtx,
    s: &HomogeneousForm,
    table: &SectionTable,
) -> Result<BTreeMap<ProjPlane, ProjPoint>> {
    let map = table.vertex_map();
    let image: BTreeSet<&ProjPoint> = map.values().collect();
    if image.len() != map.len() {
        return Err(Error::NotBijective(format!(
            "{} pencil planes share {} vertices",
            map.len(),
            image.len()
        )));
    }
    let points: BTreeSet<ProjPoint> = poly::rational_zeros(field, s)?.into_iter().collect();
    if image.len() != points.len() || image.iter().any(|v| !points.contains(*v)) {
        return Err(Error::NotBijective(format!(
            "{} vertices against {} rational points",
            image.len(),
            points.len()
        )));
    }
    Ok(map)
}

/// The vertex map from pencil planes to `S(F_q)`, checked to be a bijection.
pub fn pencil_vertex_bijection(
    field: &FieldCtx,
    s: &HomogeneousForm,
) -> Result<BTreeMap<ProjPlane, ProjPoint>> {
    let table = SectionTable::build(field, s)?;
    bijection_from_table(field, s, &table)
}

pub fn vertex_bijection_with(
    field: &FieldCtx,
    s: &HomogeneousForm,
    table: &SectionTable,
) -> Result<BTreeMap<ProjPlane, ProjPoint>> {
    bijection_from_table(field, s, table)
}

/// `α = #(l ∩ S(F_q))` and `β = #{H ⊃ l : S ∩ H is a pencil}`.
pub fn line_audit(field: &FieldCtx, s: &HomogeneousForm, l: &ProjLine) -> Result<LineAudit> {
    require_surface(s)?;
    field.budget().check_space(field.q(), "line audit")?;
    let alpha = l.points(field).iter().filter(|p| s.vanishes_at(field, p)).count() as u64;
    let mut beta = 0;
    for h in projgeom::planes_through_line(field, l)? {
        if classify_section(field, s, &h)?.is_pencil() {
            beta += 1;
        }
    }
    Ok(LineAudit { alpha, beta })
}

/// Values of `#(l ∩ S(F_q))` over all lines of `P^3(F_q)`.
pub fn line_spectrum(field: &FieldCtx, s: &HomogeneousForm) -> Result<BTreeSet<u64>> {
    require_surface(s)?;
    let lines = projgeom::enumerate_lines(field, 3)?;
    Ok(lines
        .par_iter()
        .map(|l| l.points(field).iter().filter(|p| s.vanishes_at(field, p)).count() as u64)
        .collect::<BTreeSet<_>>())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineReport {
    pub lines: u64,
    pub spectrum: BTreeSet<u64>,
    /// Lines where `α ≠ β`.
    pub alpha_beta_mismatches: u64,
    /// Rational lines contained in the surface.
    pub lines_on_surface: u64,
    /// Every line on the surface has the vertex map `ľ(F_q) → l(F_q)` as a bijection.
    pub line_vertex_bijections_ok: bool,
    /// Every line on the surface through a pencil vertex lies in that pencil's plane.
    pub lines_through_vertices_ok: bool,
}

/// Audits every line of `P^3(F_q)` against a section table: the spectrum of
/// `α`, the identity `α = β`, and the behaviour of lines contained in `S`
/// with respect to pencil planes and vertices.
pub fn line_report(field: &FieldCtx, s: &HomogeneousForm, table: &SectionTable) -> Result<LineReport> {
    require_surface(s)?;
    let lines = projgeom::enumerate_lines(field, 3)?;
    if lines.len() as u64 != projgeom::line_count_p3(field.q()) {
        return Err(Error::PreconditionViolated(format!(
            "enumerated {} lines, expected {}",
            lines.len(),
            projgeom::line_count_p3(field.q())
        )));
    }
    let audits = lines
        .par_iter()
        .map(|l| table.line_audit(field, s, l))
        .collect::<Result<Vec<_>>>()?;
    let spectrum = audits.iter().map(|a| a.alpha).collect();
    let alpha_beta_mismatches = audits.iter().filter(|a| a.alpha != a.beta).count() as u64;

    let on_surface: Vec<&ProjLine> = lines
        .iter()
        .filter(|l| poly::restrict_to_line(field, s, l).is_none())
        .collect();

    let mut line_vertex_bijections_ok = true;
    for l in &on_surface {
        let mut vertices = BTreeSet::new();
        for h in projgeom::planes_through_line(field, l)? {
            match table.class_of(&h).and_then(SectionClass::vertex) {
                Some(v) => {
                    vertices.insert(v.clone());
                }
                None => line_vertex_bijections_ok = false,
            }
        }
        let points: BTreeSet<ProjPoint> = l.points(field).into_iter().collect();
        if vertices != points {
            line_vertex_bijections_ok = false;
        }
    }

    let mut lines_through_vertices_ok = true;
    for (h, class) in table.iter() {
        let Some(v) = class.vertex() else { continue };
        for l in on_surface.iter().filter(|l| l.contains(field, v)) {
            let (a, b) = l.spanning_points();
            if !(h.contains(field, a) && h.contains(field, b)) {
                lines_through_vertices_ok = false;
            }
        }
    }

    Ok(LineReport {
        lines: lines.len() as u64,
        spectrum,
        alpha_beta_mismatches,
        lines_on_surface: on_surface.len() as u64,
        line_vertex_bijections_ok,
        lines_through_vertices_ok,
    })
}

/// Counts of lines of a plane meeting a curve in 0, 1 and `d` rational points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangencyCensus {
    pub q: u64,
    pub d: u64,
    pub x0: u64,
    pub x1: u64,
    pub xd: u64,
    /// Full histogram: intersection size → number of lines.
    pub histogram: BTreeMap<u64, u64>,
    /// Only the sizes 0, 1 and `d` occur.
    pub spectrum_ok: bool,
    /// Each line meeting the curve in one rational point is tangent there.
    pub one_point_lines_tangent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TangencyIdentities {
    pub x1_ok: bool,
    pub xd_ok: bool,
    pub x0_ok: bool,
    pub total_ok: bool,
}

impl TangencyIdentities {
    pub fn all(&self) -> bool {
        self.x1_ok && self.xd_ok && self.x0_ok && self.total_ok
    }
}

impl TangencyCensus {
    /// Compares against the closed forms for `x_1`, `x_d`, `x_0` and
    /// `x_0 + x_1 + x_d = θ_q(2)`.
    pub fn identities(&self) -> TangencyIdentities {
        let f = catalog::tangency_formulas(self.d, self.q);
        let as_ratio = |x: u64| num_rational::Ratio::from_integer(x as i64);
        TangencyIdentities {
            x1_ok: self.x1 == f.x1,
            xd_ok: as_ratio(self.xd) == f.xd,
            x0_ok: as_ratio(self.x0) == f.x0,
            total_ok: self.x0 + self.x1 + self.xd == projgeom::theta(self.q, 2),
        }
    }
}

/// Parameter `(s:t)` of `p` on the line through the canonical pair `(a, b)`.
fn line_parameter(field: &FieldCtx, line: &ProjLine, p: &ProjPoint) -> Option<[FieldElement; 2]> {
    let (a, b) = line.spanning_points();
    projgeom::enumerate_points(field, 1).ok()?.into_iter().find_map(|st| {
        let v = linalg::axpy(field, &linalg::scale(field, st.coords()[0], a.coords()), st.coords()[1], b.coords());
        (ProjPoint::new(field, &v).ok()? == *p).then(|| [st.coords()[0], st.coords()[1]])
    })
}

/// Contact multiplicity of the curve with `line` at `p` is at least 2.
pub fn is_tangent_at(field: &FieldCtx, c: &HomogeneousForm, line: &ProjLine, p: &ProjPoint) -> bool {
    let Some(g) = poly::restrict_to_line(field, c, line) else {
        return true;
    };
    let Some([s0, t0]) = line_parameter(field, line, p) else {
        return false;
    };
    // (s0:t0) is a root of t0*s - s0*t
    let root = LinearForm::new(field, &[t0, field.neg(s0)]).expect("nonzero parameter");
    match poly::divide_by_linear(field, &g, &root) {
        (Some(q1), true) => poly::divide_by_linear(field, &q1, &root).1,
        _ => false,
    }
}

fn require_ternary(c: &HomogeneousForm) -> Result<()> {
    if c.nvars() != 3 {
        return Err(Error::FieldMismatch(format!(
            "expected a plane curve in 3 variables, got {}",
            c.nvars()
        )));
    }
    Ok(())
}

/// Line census of a plane curve of degree `d` without rational line
/// components and with exactly `(d-1)q + 1` rational points.
///
/// Intersection sizes other than 0, 1, `d` are reported through
/// `spectrum_ok` and the histogram rather than rejected: excluding them
/// needs the ambient surface.
pub fn tangency_census(field: &FieldCtx, c: &HomogeneousForm) -> Result<TangencyCensus> {
    require_ternary(c)?;
    let (q, d) = (field.q(), c.degree() as u64);
    if !poly::fq_linear_components(field, c)?.is_empty() {
        return Err(Error::PreconditionViolated("curve has a rational line component".into()));
    }
    let points = poly::rational_zeros(field, c)?;
    if points.len() as u64 != catalog::sziklai_bound(d, q) {
        return Err(Error::PreconditionViolated(format!(
            "curve has {} rational points, not (d-1)q+1 = {}",
            points.len(),
            catalog::sziklai_bound(d, q)
        )));
    }
    let duals = projgeom::enumerate_points(field, 2)?;
    let rows: Vec<(u64, bool)> = duals
        .par_iter()
        .map(|dual| {
            let on: Vec<&ProjPoint> = points
                .iter()
                .filter(|p| linalg::dot(field, dual.coords(), p.coords()).is_zero())
                .collect();
            let tangent = on.len() != 1 || {
                let line = ProjLine::from_dual(field, dual.coords()).expect("nonzero dual");
                is_tangent_at(field, c, &line, on[0])
            };
            (on.len() as u64, tangent)
        })
        .collect();
    let mut histogram = BTreeMap::new();
    for (k, _) in &rows {
        *histogram.entry(*k).or_insert(0) += 1;
    }
    let get = |k: u64| histogram.get(&k).copied().unwrap_or(0);
    let spectrum_ok = histogram.keys().all(|&k| k == 0 || k == 1 || k == d);
    Ok(TangencyCensus {
        q,
        d,
        x0: get(0),
        x1: get(1),
        xd: get(d),
        spectrum_ok,
        one_point_lines_tangent: rows.iter().all(|(_, t)| *t),
        histogram,
    })
}

/// `(X+Y+Z)^4 + (XY+YZ+ZX)^2 + XYZ(X+Y+Z)` in the variables `U, V, W`.
pub fn exceptional_quartic(field: &FieldCtx) -> HomogeneousForm {
    let v = |i| HomogeneousForm::variable(3, i);
    let (x, y, z) = (v(0), v(1), v(2));
    let sum = x.add(field, &y).unwrap().add(field, &z).unwrap();
    let sigma2 = x
        .mul(field, &y)
        .add(field, &y.mul(field, &z))
        .unwrap()
        .add(field, &z.mul(field, &x))
        .unwrap();
    let xyz_sum = x.mul(field, &y).mul(field, &z).mul(field, &sum);
    sum.pow(field, 4)
        .add(field, &sigma2.pow(field, 2))
        .and_then(|f| f.add(field, &xyz_sum))
        .expect("the quartic is nonzero")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bitangent {
    /// Dual coordinates of the line.
    pub line: LinearForm,
    pub contacts: Vec<ProjPoint>,
}

/// Rational lines meeting `C(F_q)` in exactly two points with contact
/// multiplicity at least 2 at each.
pub fn bitangents(field: &FieldCtx, c: &HomogeneousForm) -> Result<Vec<Bitangent>> {
    require_ternary(c)?;
    let points = poly::rational_zeros(field, c)?;
    let mut out = Vec::new();
    for dual in projgeom::enumerate_points(field, 2)? {
        let on: Vec<ProjPoint> = points
            .iter()
            .filter(|p| linalg::dot(field, dual.coords(), p.coords()).is_zero())
            .cloned()
            .collect();
        if on.len() != 2 {
            continue;
        }
        let line = ProjLine::from_dual(field, dual.coords())?;
        if poly::restrict_to_line(field, c, &line).is_none() {
            continue;
        }
        if on.iter().all(|p| is_tangent_at(field, c, &line, p)) {
            out.push(Bitangent {
                line: LinearForm::new(field, dual.coords())?,
                contacts: on,
            });
        }
    }
    Ok(out)
}

/// The count that rules out the exceptional quartic as a section of a
/// surface attaining the bound at `d = q = 4`: through a bitangent `l` of a
/// section, `N(S) <= #ľ · (14 - 2) + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalExclusion {
    pub curve_points: u64,
    pub bitangents: u64,
    pub planes_through_bitangent: u64,
    pub points_on_bitangent: u64,
    pub upper_bound: u64,
    pub required: u64,
    pub excluded: bool,
}

pub fn exceptional_exclusion(field: &FieldCtx) -> Result<ExceptionalExclusion> {
    let c = exceptional_quartic(field);
    let curve_points = poly::count_zeros(field, &c)?;
    let bts = bitangents(field, &c)?;
    let bt = bts
        .first()
        .ok_or_else(|| Error::PreconditionViolated("the quartic has no rational bitangent".into()))?;
    // Place the curve in the plane X3 = 0 of P^3.
    let h0 = ProjPlane::new(
        field,
        &[FieldElement::ZERO, FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE],
    )?;
    let frame = projgeom::plane_coordinate_frame(field, &h0);
    let a = projgeom::frame_map(field, &frame, bt.contacts[0].coords())?;
    let b = projgeom::frame_map(field, &frame, bt.contacts[1].coords())?;
    let l = ProjLine::through(field, &a, &b)?;
    let planes = projgeom::planes_through_line(field, &l)?.len() as u64;
    let alpha = bt.contacts.len() as u64;
    let upper_bound = planes * (curve_points - alpha) + alpha;
    let required = catalog::elementary_bound(c.degree() as u64, field.q());
    Ok(ExceptionalExclusion {
        curve_points,
        bitangents: bts.len() as u64,
        planes_through_bitangent: planes,
        points_on_bitangent: alpha,
        upper_bound,
        required,
        excluded: upper_bound < required,
    })
}

/// Point count against the applicable bounds: the elementary bound for
/// surfaces, the Sziklai and Hasse–Weil bounds for plane curves.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub kind: &'static str,
    pub q: u64,
    pub d: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub bound: u64,
    pub attains: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hasse_weil: Option<HasseWeil>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub within_hasse_weil: Option<bool>,
}

pub fn bound_check(field: &FieldCtx, f: &HomogeneousForm) -> Result<BoundReport> {
    let q = field.q();
    let d = f.degree() as u64;
    if let Some(l) = poly::fq_linear_components(field, f)?.first() {
        return Err(Error::ComponentPresent(l.render(field)));
    }
    let n = poly::count_zeros(field, f)?;
    match f.nvars() {
        4 => {
            let bound = catalog::elementary_bound(d, q);
            Ok(BoundReport {
                kind: "surface",
                q,
                d,
                n,
                bound,
                attains: n == bound,
                hasse_weil: None,
                within_hasse_weil: None,
            })
        }
        3 => {
            let bound = catalog::sziklai_bound(d, q);
            Ok(BoundReport {
                kind: "curve",
                q,
                d,
                n,
                bound,
                attains: n == bound,
                hasse_weil: Some(catalog::hasse_weil_bound(d, q)),
                within_hasse_weil: Some(catalog::within_hasse_weil(n, d, q)),
            })
        }
        k => Err(Error::FieldMismatch(format!("bound_check needs 3 or 4 variables, got {k}"))),
    }
}
