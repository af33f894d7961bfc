//! Batch verification: runs the selected checks over a list of fields and
//! surfaces and collects the results in a deterministic JSON report.

pub mod census;
pub mod config;
pub mod report;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::altform::{self, AlternatingMatrix, RankClass};
use crate::catalog;
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElement};
use crate::linalg;
use crate::poly::{self, HomogeneousForm};
use crate::projgeom;
use crate::sections::{self, SectionClass, SectionTable};

pub use census::{degree_gate_check, quadric_census, DegreeGate, QuadricCensus};
pub use config::{AuditConfig, Check, SurfaceSpec};
pub use report::{AltformRecord, AuditReport, Status, SurfaceRecord, TangencyRecord};

/// Number of random alternating matrices sampled per field when the full
/// set is too large to enumerate.
pub const ALTFORM_SAMPLES: usize = 200;

/// Number of extremal-curve sections per surface fed to the tangency census.
pub const TANGENCY_SECTIONS: usize = 3;

pub fn run_audit(config: &AuditConfig) -> Result<AuditReport> {
    config.validate()?;
    let checks = &config.checks;
    let mut surfaces = Vec::new();
    let mut degree_gates = Vec::new();
    let mut altform = Vec::new();
    let mut quadric = Vec::new();
    for &q in &config.q_list {
        let field = FieldCtx::of_order_with_budget(q, config.budget)?;
        for spec in &config.surfaces {
            if checks.iter().any(|c| matches!(c, Check::Bounds | Check::Sections | Check::Lines | Check::Tangency)) {
                surfaces.push(audit_surface(&field, spec, checks));
            }
        }
        if checks.contains(&Check::Bounds) {
            degree_gates.push(degree_gate_check(q));
        }
        if checks.contains(&Check::Altform) {
            altform.push(altform_check(&field)?);
        }
        if checks.contains(&Check::QuadricCensus) {
            quadric.push(quadric_census(&field)?);
        }
    }
    let passed = surfaces.iter().all(|s| s.passed)
        && degree_gates.iter().all(|g| g.passed)
        && altform.iter().all(|a| a.passed)
        && quadric.iter().all(|c| c.passed);
    Ok(AuditReport {
        passed,
        surfaces,
        degree_gates,
        altform,
        quadric_census: quadric,
    })
}

/// Audits one surface over one field. Failures become part of the record:
/// a Hermitian surface at non-square `q` is skipped, anything else that
/// prevents the audit marks the record as an error.
pub fn audit_surface(field: &FieldCtx, spec: &SurfaceSpec, checks: &BTreeSet<Check>) -> SurfaceRecord {
    let mut rec = SurfaceRecord::new(field.q(), spec.label());
    let result = spec
        .build(field)
        .and_then(|s| fill_surface(field, &s, spec.is_catalog(), checks, &mut rec));
    match result {
        Ok(()) => {}
        Err(e @ Error::QNotSquare(_)) => {
            rec.status = Status::Skipped;
            rec.error = Some(e.to_string());
        }
        Err(e) => {
            rec.status = Status::Error;
            rec.error = Some(e.to_string());
            rec.passed = false;
        }
    }
    rec
}

fn fill_surface(
    field: &FieldCtx,
    s: &HomogeneousForm,
    is_catalog: bool,
    checks: &BTreeSet<Check>,
    rec: &mut SurfaceRecord,
) -> Result<()> {
    let q = field.q();
    let theta3 = projgeom::theta(q, 3);
    let report = sections::bound_check(field, s)?;
    let (d, n) = (report.d, report.n);
    let attains = report.attains;
    rec.d = Some(d);
    rec.n = Some(n);
    rec.bound = Some(report.bound);
    rec.attains = Some(attains);

    let mut passed = true;
    let mut identities = true;

    if checks.contains(&Check::Bounds) {
        passed &= n <= report.bound;
        if is_catalog {
            passed &= attains;
        }
        if attains {
            let admissible = catalog::admissible_degrees(q).contains(&d);
            rec.degree_admissible = Some(admissible);
            identities &= admissible;
        }
    }

    let needs_table = checks.iter().any(|c| matches!(c, Check::Sections | Check::Lines | Check::Tangency));
    let table = if needs_table { Some(SectionTable::build(field, s)?) } else { None };

    if let (true, Some(table)) = (checks.contains(&Check::Sections), &table) {
        let census = table.census();
        let bijection = sections::vertex_bijection_with(field, s, table).is_ok();
        rec.census = Some(census);
        rec.vertex_bijection_ok = Some(bijection);
        identities &= census.total() == theta3;
        if attains {
            identities &= census.nu1 == n && census.nu2 == theta3 - n && census.other == 0 && bijection;
        }
    }

    if let (true, Some(table)) = (checks.contains(&Check::Lines), &table) {
        let lines = sections::line_report(field, s, table)?;
        if attains {
            let allowed = BTreeSet::from([0, 1, d, q + 1]);
            identities &= lines.spectrum.is_subset(&allowed)
                && lines.alpha_beta_mismatches == 0
                && lines.line_vertex_bijections_ok
                && lines.lines_through_vertices_ok;
        }
        rec.spectrum = Some(lines.spectrum.clone());
        rec.lines = Some(lines);
    }

    if let (true, Some(table)) = (checks.contains(&Check::Tangency), &table) {
        let mut records = Vec::new();
        for (h, class) in table.iter() {
            if records.len() == TANGENCY_SECTIONS {
                break;
            }
            if !matches!(class, SectionClass::ExtremalCurve { .. }) {
                continue;
            }
            let c = poly::restrict_to_plane(field, s, h)?;
            let census = sections::tangency_census(field, &c)?;
            let ids = census.identities();
            if attains {
                identities &= ids.all() && census.spectrum_ok && census.one_point_lines_tangent;
            }
            records.push(TangencyRecord {
                plane: h.render(field),
                census,
                identities: ids,
            });
        }
        rec.tangency = Some(records);
    }

    rec.identities_ok = Some(identities);
    rec.passed = passed && identities;
    Ok(())
}

fn random_alternating(field: &FieldCtx, rng: &mut ChaCha8Rng) -> AlternatingMatrix {
    loop {
        let upper = [(); 6].map(|_| field.element(rng.gen_range(0..field.q())).expect("in range"));
        let a = AlternatingMatrix::from_upper(field, upper).expect("valid entries");
        if !a.is_zero() {
            return a;
        }
    }
}

/// The alternating matrices examined at this field: all of them at q = 2,
/// a seeded sample otherwise.
pub fn altform_matrices(field: &FieldCtx) -> Vec<AlternatingMatrix> {
    if field.q() == 2 {
        return altform::all_nonzero(field);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(field.q());
    (0..ALTFORM_SAMPLES).map(|_| random_alternating(field, &mut rng)).collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct AltTally {
    rank2: u64,
    rank4: u64,
    normal_bad: u64,
    split_bad: u64,
    extremal_bad: u64,
    coherence_bad: u64,
}

impl std::ops::Add for AltTally {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        AltTally {
            rank2: self.rank2 + o.rank2,
            rank4: self.rank4 + o.rank4,
            normal_bad: self.normal_bad + o.normal_bad,
            split_bad: self.split_bad + o.split_bad,
            extremal_bad: self.extremal_bad + o.extremal_bad,
            coherence_bad: self.coherence_bad + o.coherence_bad,
        }
    }
}

fn check_one_alternating(field: &FieldCtx, a: &AlternatingMatrix) -> Result<AltTally> {
    let q = field.q();
    let mut t = AltTally::default();
    let nf = altform::symplectic_normal_form(field, a)?;
    if a.congruence(field, &nf.g) != nf.canonical || linalg::rank(field, &nf.g) != 4 {
        t.normal_bad += 1;
    }
    let s = altform::surface_from_alternating(field, a)?;
    match altform::rank_classify(field, a)? {
        RankClass::Rank2Split => {
            t.rank2 += 1;
            let factors = poly::fq_linear_components(field, &s)?;
            let distinct: BTreeSet<_> = factors.iter().collect();
            if factors.len() as u64 != q + 1 || distinct.len() != factors.len() {
                t.split_bad += 1;
            }
        }
        RankClass::Rank4Extremal => {
            t.rank4 += 1;
            let plane_free = poly::fq_linear_components(field, &s)?.is_empty();
            if !plane_free || poly::count_zeros(field, &s)? != projgeom::theta(q, 3) {
                t.extremal_bad += 1;
            }
        }
    }
    let cols = linalg::transpose(&nf.g);
    let frame: Vec<&[FieldElement]> = cols.iter().map(|c| c.as_slice()).collect();
    let moved = s.substitute(field, &frame);
    let target = altform::surface_from_alternating(field, &nf.canonical)?;
    if !altform::frobenius_matrix_check(field, &nf.g, q) || moved.as_ref() != Some(&target) {
        t.coherence_bad += 1;
    }
    Ok(t)
}

pub fn altform_check(field: &FieldCtx) -> Result<AltformRecord> {
    field.budget().check_space(field.q(), "altform check")?;
    let matrices = altform_matrices(field);
    let t = matrices
        .par_iter()
        .map(|a| check_one_alternating(field, a))
        .try_reduce(AltTally::default, |a, b| Ok(a + b))?;
    let normal_form_ok = t.normal_bad == 0;
    let rank2_split_ok = t.split_bad == 0;
    let rank4_extremal_ok = t.extremal_bad == 0;
    let coherence_ok = t.coherence_bad == 0;
    Ok(AltformRecord {
        q: field.q(),
        matrices: matrices.len() as u64,
        exhaustive: field.q() == 2,
        rank2: t.rank2,
        rank4: t.rank4,
        normal_form_ok,
        rank2_split_ok,
        rank4_extremal_ok,
        coherence_ok,
        passed: normal_form_ok && rank2_split_ok && rank4_extremal_ok && coherence_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbolic_small_audit() {
        let cfg = AuditConfig::from_json(
            r#"{"q_list":[2,3,4],"surfaces":["hyperbolic"],"checks":["bounds","sections"]}"#,
        )
        .unwrap();
        let report = run_audit(&cfg).unwrap();
        assert!(report.passed);
        for rec in &report.surfaces {
            assert_eq!(rec.attains, Some(true));
            assert_eq!(rec.census.unwrap().other, 0);
        }
    }

    #[test]
    fn hermitian_at_non_square_q_is_skipped() {
        let cfg = AuditConfig::from_json(r#"{"q_list":[5],"surfaces":["hermitian"]}"#).unwrap();
        let report = run_audit(&cfg).unwrap();
        assert_eq!(report.surfaces[0].status, Status::Skipped);
        assert!(report.passed);
    }

    #[test]
    fn non_extremal_inline_surface_passes_consistency_only() {
        let cfg = AuditConfig::from_json(
            r#"{"q_list":[3],"surfaces":["X0^2 + X1^2 + X2^2 - X3^2"],"checks":["bounds","sections","lines"]}"#,
        )
        .unwrap();
        let report = run_audit(&cfg).unwrap();
        let rec = &report.surfaces[0];
        assert_eq!((rec.n, rec.attains), (Some(10), Some(false)));
        assert!(rec.passed);
    }

    #[test]
    fn plane_component_is_an_error_record() {
        let cfg = AuditConfig::from_json(r#"{"q_list":[2],"surfaces":["X0*X1"]}"#).unwrap();
        let report = run_audit(&cfg).unwrap();
        assert_eq!(report.surfaces[0].status, Status::Error);
        assert!(!report.passed);
    }

    #[test]
    fn report_is_deterministic() {
        let cfg = AuditConfig::from_json(
            r#"{"q_list":[2,4],"surfaces":["hermitian","fullspace"],"checks":["bounds","sections","lines","tangency","altform"]}"#,
        )
        .unwrap();
        let a = run_audit(&cfg).unwrap().to_json();
        let b = run_audit(&cfg).unwrap().to_json();
        assert_eq!(a, b);
        assert!(run_audit(&cfg).unwrap().passed, "{a}");
    }
}
