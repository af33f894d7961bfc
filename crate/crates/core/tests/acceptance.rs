//! Acceptance gate: one line per criterion, exact comparisons, wall-clock
//! limits included. Exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::oracle::{self, OField};
use fqsurf::audit;
use fqsurf::catalog::{self, CatalogId};
use fqsurf::gf::exact_sqrt;
use fqsurf::poly;
use fqsurf::projgeom;
use fqsurf::sections::{self, SectionClass, SectionTable};
use fqsurf::{FieldCtx, Result};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { ok, detail: detail.into() })
}

fn catalog_surfaces(q: u64) -> Vec<CatalogId> {
    CatalogId::ALL
        .into_iter()
        .filter(|id| *id != CatalogId::Hermitian || exact_sqrt(q).is_some())
        .collect()
}

fn oracle_terms(id: CatalogId, q: u64) -> Vec<(Vec<u32>, i64)> {
    match id {
        CatalogId::Hyperbolic => oracle::hyperbolic_terms(),
        CatalogId::Hermitian => oracle::hermitian_terms(exact_sqrt(q).unwrap() as u32),
        CatalogId::FullSpace => oracle::full_space_terms(q as u32),
    }
}

fn oracle_count(id: CatalogId, q: u64) -> u64 {
    let of = OField::new(q);
    let terms = oracle_terms(id, q);
    oracle::count_projective(&of, 4, |x| oracle::eval_terms(&of, &terms, x))
}

fn c1_hyperbolic() -> Result<Outcome> {
    let mut bad = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let f = FieldCtx::of_order(q)?;
        let n = sections::count_points(&f, &catalog::hyperbolic(&f))?;
        let expected = (q + 1) * (q + 1);
        if n != expected || n != catalog::elementary_bound(2, q) || n != oracle_count(CatalogId::Hyperbolic, q) {
            bad.push(format!("q={q}: N={n}"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "N = (q+1)^2 for q in {2,3,4,5,7,8,9}".to_string() } else { bad.join("; ") })
}

fn c2_hermitian() -> Result<Outcome> {
    let mut seen = Vec::new();
    let mut ok = true;
    for (q, expected) in [(4u64, 45u64), (9, 280)] {
        let f = FieldCtx::of_order(q)?;
        let n = sections::count_points(&f, &catalog::hermitian(&f)?)?;
        let d = exact_sqrt(q).unwrap() + 1;
        ok &= n == expected && n == catalog::elementary_bound(d, q) && n == oracle_count(CatalogId::Hermitian, q);
        seen.push(format!("q={q}: N={n}"));
    }
    outcome(ok, seen.join(", "))
}

fn c3_full_space() -> Result<Outcome> {
    let mut ok = true;
    let mut seen = Vec::new();
    for q in [2u64, 3, 4, 5] {
        let f = FieldCtx::of_order(q)?;
        let s = catalog::full_space(&f);
        let n = sections::count_points(&f, &s)?;
        let comps = poly::fq_linear_components(&f, &s)?.len();
        ok &= n == projgeom::theta(q, 3) && comps == 0 && n == oracle_count(CatalogId::FullSpace, q);
        seen.push(format!("q={q}: N={n} components={comps}"));
    }
    outcome(ok, seen.join(", "))
}

fn census_targets() -> Vec<(u64, CatalogId)> {
    let mut v: Vec<(u64, CatalogId)> = [2u64, 3, 4, 5]
        .into_iter()
        .flat_map(|q| catalog_surfaces(q).into_iter().map(move |id| (q, id)))
        .collect();
    v.push((9, CatalogId::Hermitian));
    v
}

fn c4_dichotomy() -> Result<Outcome> {
    let mut bad = Vec::new();
    for (q, id) in census_targets() {
        let f = FieldCtx::of_order(q)?;
        let s = id.build(&f)?;
        let n = sections::count_points(&f, &s)?;
        let c = sections::section_census(&f, &s)?;
        let theta = projgeom::theta(q, 3);
        if c.nu1 != n || c.nu2 != theta - n || c.other != 0 {
            bad.push(format!("{id} q={q}: {c:?}"));
        }
        if q <= 4 {
            let d = id.degree(q)?;
            let of = OField::new(q);
            let (nu1, nu2, other) = oracle::census_by_sizes(&of, &oracle_terms(id, q), d);
            if (nu1, nu2, other) != (c.nu1, c.nu2, c.other) {
                bad.push(format!("{id} q={q}: oracle disagrees"));
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("{} surfaces, other = 0 everywhere", census_targets().len()) } else { bad.join("; ") })
}

fn c5_vertex_bijection() -> Result<Outcome> {
    let mut bad = Vec::new();
    for (q, id) in census_targets() {
        let f = FieldCtx::of_order(q)?;
        let s = id.build(&f)?;
        match sections::pencil_vertex_bijection(&f, &s) {
            Ok(map) if map.len() as u64 == sections::count_points(&f, &s)? => {}
            Ok(map) => bad.push(format!("{id} q={q}: {} vertices", map.len())),
            Err(e) => bad.push(format!("{id} q={q}: {e}")),
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "injective and onto S(F_q) for all targets".to_string() } else { bad.join("; ") })
}

fn c6_lines() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut lines_checked = 0;
    for q in [2u64, 3, 4] {
        let f = FieldCtx::of_order(q)?;
        for id in catalog_surfaces(q) {
            let s = id.build(&f)?;
            let d = id.degree(q)?;
            let table = SectionTable::build(&f, &s)?;
            let r = sections::line_report(&f, &s, &table)?;
            lines_checked += r.lines;
            let allowed = BTreeSet::from([0, 1, d, q + 1]);
            if r.lines != projgeom::line_count_p3(q)
                || !r.spectrum.is_subset(&allowed)
                || r.alpha_beta_mismatches != 0
            {
                bad.push(format!("{id} q={q}: spectrum {:?}, {} mismatches", r.spectrum, r.alpha_beta_mismatches));
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("{lines_checked} line audits, alpha = beta on each") } else { bad.join("; ") })
}

fn c7_tangency() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut curves = 0;
    let mut hermitian_x0_zero = true;
    let targets: Vec<(u64, CatalogId)> = [2u64, 3, 4, 5, 9]
        .into_iter()
        .flat_map(|q| catalog_surfaces(q).into_iter().map(move |id| (q, id)))
        .filter(|&(q, id)| id != CatalogId::FullSpace && !(q == 9 && id == CatalogId::Hyperbolic))
        .collect();
    for (q, id) in targets {
        let f = FieldCtx::of_order(q)?;
        let s = id.build(&f)?;
        let table = SectionTable::build(&f, &s)?;
        let planes: Vec<_> = table
            .iter()
            .filter(|(_, c)| matches!(c, SectionClass::ExtremalCurve { .. }))
            .map(|(h, _)| h.clone())
            .take(3)
            .collect();
        if planes.len() < 3 {
            bad.push(format!("{id} q={q}: only {} extremal sections", planes.len()));
        }
        for h in planes {
            let c = poly::restrict_to_plane(&f, &s, &h)?;
            let t = sections::tangency_census(&f, &c)?;
            curves += 1;
            if !(t.identities().all() && t.spectrum_ok) {
                bad.push(format!("{id} q={q} {}: {:?}", h.render(&f), t.identities()));
            }
            if id == CatalogId::Hermitian {
                hermitian_x0_zero &= t.x0 == 0;
            }
        }
    }
    let ok = bad.is_empty() && hermitian_x0_zero;
    outcome(ok, if ok { format!("{curves} sections, x0 = 0 on every Hermitian section") } else { bad.join("; ") })
}

fn c8_quartic() -> Result<Outcome> {
    let f = FieldCtx::of_order(4)?;
    let c = sections::exceptional_quartic(&f);
    let n = poly::count_zeros(&f, &c)?;
    let bts = sections::bitangents(&f, &c)?;
    let f2_rational = bts.iter().all(|b| b.line.coeffs().iter().all(|&x| f.in_subfield(x, 1)));
    let ex = sections::exceptional_exclusion(&f)?;
    let ok = n == 14
        && bts.len() == 7
        && f2_rational
        && ex.planes_through_bitangent == 5
        && ex.upper_bound == 62
        && ex.required == 65
        && ex.excluded;
    outcome(ok, format!("N={n}, {} bitangents (F_2-rational: {f2_rational}), {} < {}", bts.len(), ex.upper_bound, ex.required))
}

fn c9_normal_form() -> Result<Outcome> {
    let mut ok = true;
    let mut seen = Vec::new();
    for q in [2u64, 3, 4] {
        let f = FieldCtx::of_order(q)?;
        let r = audit::altform_check(&f)?;
        let enough = if q == 2 { r.matrices == 63 && r.exhaustive } else { r.matrices >= 200 };
        ok &= r.passed && enough;
        seen.push(format!("q={q}: {} matrices ({} rank 2, {} rank 4)", r.matrices, r.rank2, r.rank4));
    }
    outcome(ok, seen.join(", "))
}

fn c10_quadric_census() -> Result<Outcome> {
    let f2 = FieldCtx::of_order(2)?;
    let c2 = audit::quadric_census(&f2)?;
    let f3 = FieldCtx::of_order(3)?;
    let c3 = audit::quadric_census(&f3)?;
    let ok = c2.total_forms == 1023
        && c2.max_count == 9
        && c2.orbit_equals_achievers == Some(true)
        && c3.total_forms == 29524
        && c3.max_count == 16
        && c3.all_achievers_nonsingular
        && c3.all_achievers_hyperbolic;
    outcome(
        ok,
        format!(
            "q=2: max {} by {} = orbit {:?}; q=3: max {} by {} hyperbolic",
            c2.max_count, c2.achievers, c2.hyperbolic_orbit_size, c3.max_count, c3.achievers
        ),
    )
}

fn c11_degree_gate() -> Result<Outcome> {
    let mut ok = true;
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let s = (1..=q).find(|s| s * s == q);
        let mut expected = BTreeSet::from([2, q + 1]);
        expected.extend(s.map(|s| s + 1));
        let g = audit::degree_gate_check(q);
        ok &= g.admissible == expected && g.passed;
        for d in 2..=q + 1 {
            // compare against the real inequality d <= sqrt(q) + 1
            let gate = (d as f64) <= (q as f64).sqrt() + 1.0 + 1e-12;
            let x0 = catalog::x0_expression(d, q);
            ok &= (x0 >= num_rational::Ratio::from_integer(0)) == gate;
        }
    }
    outcome(ok, "q in {2,3,4,5,7,8,9}, d in 2..=q+1")
}

type Criterion = (u32, &'static str, fn() -> Result<Outcome>, Duration);

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "hyperbolic quadric counts", c1_hyperbolic, Duration::from_secs(5)),
        (2, "Hermitian surface counts", c2_hermitian, Duration::from_secs(5)),
        (3, "full-space surface counts and plane-freeness", c3_full_space, Duration::from_secs(10)),
        (4, "section dichotomy", c4_dichotomy, Duration::from_secs(60)),
        (5, "pencil vertex bijection", c5_vertex_bijection, Duration::from_secs(60)),
        (6, "line spectrum and alpha = beta", c6_lines, Duration::from_secs(60)),
        (7, "tangency census identities", c7_tangency, Duration::from_secs(60)),
        (8, "exceptional quartic and exclusion count", c8_quartic, Duration::from_secs(1)),
        (9, "symplectic normal form", c9_normal_form, Duration::from_secs(30)),
        (10, "quadric census", c10_quadric_census, Duration::from_secs(300)),
        (11, "degree gate", c11_degree_gate, Duration::from_secs(5)),
    ];
    let mut failures = 0;
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = elapsed <= limit;
        let pass = ok && in_time;
        if !pass {
            failures += 1;
        }
        println!(
            "{} [{id:>2}] {name}: {detail} ({:.3}s, limit {}s{})",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs(),
            if in_time { "" } else { ", over time" }
        );
    }
    println!("{} of 11 criteria passed", 11 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
