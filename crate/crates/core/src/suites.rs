//! Property suites exercising the library's theorems on seeded generated
//! configurations. Each suite reports one pass/fail line; the `verify`
//! subcommand and the acceptance tests both run them.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::curves::{check_intersection_characterization, min_containing_degree};
use crate::generators::{generate, ConicKind, CubicKind, GenKind, GenSpec, Generated};
use crate::independence::{
    extract_essential_core, is_essentially_dependent, is_independent, is_solvable,
};
use crate::polyspace::{d_gap, dim_pi, eval_poly, Point, PointSet};
use crate::scale::{
    classify, max_applicable_size, verify_witness, ScaleParams, ScaleVerdict, SpecialCaseLabel,
};

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl SuiteResult {
    fn pass(name: &'static str, detail: String) -> Self {
        SuiteResult { name, passed: true, detail }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        SuiteResult { name, passed: false, detail }
    }
}

fn mix(seed: u64, tag: u64) -> u64 {
    let mut z = seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn gen_points(kind: GenKind, count: usize, seed: u64) -> PointSet {
    generate(&GenSpec { kind, count, seed })
        .expect("generator retries exhausted")
        .points
}

/// A dependent instance recorded by the scale round-trip suite, reused by
/// the core and containing-curve suites.
#[derive(Debug, Clone)]
pub struct DependentRecord {
    pub x: PointSet,
    pub m: u32,
    pub n: u32,
    pub core: Vec<usize>,
}

/// Theorem on small sets: any set of at most n+1 distinct points is
/// n-independent.
pub fn suite_small_sets(seed: u64) -> SuiteResult {
    let name = "theorem-small-sets";
    let mut checked = 0usize;
    for n in 1..=6u32 {
        for i in 0..200usize {
            let size = i % (n as usize + 1) + 1;
            let s = mix(seed, (n as u64) << 32 | i as u64);
            let kind = if i % 2 == 0 {
                GenKind::Random { bound: 30 }
            } else {
                GenKind::Collinear
            };
            let x = gen_points(kind, size, s);
            if !is_independent(&x, n) {
                return SuiteResult::fail(
                    name,
                    format!("set of {size} points not {n}-independent (seed {s})"),
                );
            }
            checked += 1;
        }
    }
    SuiteResult::pass(name, format!("{checked} sets of size <= n+1 independent"))
}

fn corollary_19_configs(n: u32, seed: u64) -> Vec<(PointSet, &'static str)> {
    let k = |i: u64| mix(seed, (n as u64) << 16 | i);
    vec![
        (gen_points(GenKind::Collinear, n as usize + 2, k(0)), "line"),
        (
            gen_points(GenKind::Conic(ConicKind::Parabola), 2 * n as usize + 2, k(1)),
            "parabola",
        ),
        (
            gen_points(GenKind::Conic(ConicKind::Hyperbola), 2 * n as usize + 2, k(2)),
            "hyperbola",
        ),
        (
            gen_points(GenKind::Conic(ConicKind::TwoLines), 2 * n as usize + 2, k(3)),
            "two lines",
        ),
        (
            gen_points(GenKind::Cubic(CubicKind::Graph), 3 * n as usize + 1, k(4)),
            "graph cubic",
        ),
        (
            gen_points(GenKind::Cubic(CubicKind::Nodal), 3 * n as usize + 1, k(5)),
            "nodal cubic",
        ),
    ]
}

/// Overloaded curves force dependence: n+2 on a line, 2n+2 on a conic,
/// 3n+1 on a cubic.
pub fn suite_overloaded_curves(seed: u64) -> SuiteResult {
    let name = "overloaded-curves-dependent";
    let mut checked = 0usize;
    for n in 2..=6u32 {
        for (x, label) in corollary_19_configs(n, seed) {
            if is_independent(&x, n) {
                return SuiteResult::fail(
                    name,
                    format!("{} points on a {label} are {n}-independent", x.len()),
                );
            }
            checked += 1;
        }
    }
    SuiteResult::pass(name, format!("{checked} overloaded configurations dependent"))
}

/// Solvability and independence always agree.
pub fn suite_solvable_equals_independent(seed: u64) -> SuiteResult {
    let name = "solvable-equals-independent";
    let kinds = [
        GenKind::Random { bound: 12 },
        GenKind::Collinear,
        GenKind::Conic(ConicKind::Parabola),
        GenKind::Conic(ConicKind::TwoLines),
        GenKind::Cubic(CubicKind::Graph),
    ];
    for i in 0..200usize {
        let s = mix(seed, 0x50_1000 + i as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let n: u32 = rng.random_range(1..=5);
        let size = rng.random_range(1..=12usize);
        let x = gen_points(kinds[i % kinds.len()], size, mix(s, 1));
        if is_solvable(&x, n) != is_independent(&x, n) {
            return SuiteResult::fail(
                name,
                format!("disagreement on {size} points at degree {n} (seed {s})"),
            );
        }
    }
    SuiteResult::pass(name, "200 mixed instances agree".into())
}

/// Single-pass essential cores of dependent sets are nonempty and
/// essentially dependent.
pub fn suite_essential_cores(seed: u64, records: &[DependentRecord]) -> SuiteResult {
    let name = "essential-core-extraction";
    let mut checked = 0usize;
    // dependent configurations from the overloaded-curve suite
    for n in 2..=6u32 {
        for (x, label) in corollary_19_configs(n, seed) {
            let core = match extract_essential_core(&x, n) {
                Ok(c) => c,
                Err(e) => return SuiteResult::fail(name, format!("{label}: {e}")),
            };
            if core.is_empty() {
                return SuiteResult::fail(name, format!("{label}: empty core at degree {n}"));
            }
            match is_essentially_dependent(&x.subset(&core), n) {
                Ok(true) => checked += 1,
                _ => {
                    return SuiteResult::fail(
                        name,
                        format!("{label}: core not essentially {n}-dependent"),
                    )
                }
            }
        }
    }
    // dependent instances recorded by the scale round-trip suite
    for rec in records {
        let kappa = rec.m + rec.n - 3;
        if rec.core.is_empty() {
            return SuiteResult::fail(name, "recorded dependent instance with empty core".into());
        }
        match is_essentially_dependent(&rec.x.subset(&rec.core), kappa) {
            Ok(true) => checked += 1,
            _ => {
                return SuiteResult::fail(
                    name,
                    format!("scale core not essentially {kappa}-dependent"),
                )
            }
        }
    }
    // intersection grids
    for (g, (r, s)) in intersection_grids(seed) {
        let g = g.points;
        let kappa = r + s - 3;
        let core = match extract_essential_core(&g, kappa) {
            Ok(c) => c,
            Err(e) => return SuiteResult::fail(name, format!("grid: {e}")),
        };
        if core.is_empty()
            || !matches!(is_essentially_dependent(&g.subset(&core), kappa), Ok(true))
        {
            return SuiteResult::fail(name, format!("grid {r}x{s} core check failed"));
        }
        checked += 1;
    }
    SuiteResult::pass(name, format!("{checked} cores nonempty and essentially dependent"))
}

/// The structured instance families used by the scale round-trip suite.
fn scale_instance(m: u32, n: u32, idx: usize, seed: u64) -> PointSet {
    let kappa = (m + n - 3) as usize;
    let max_size = (m as usize) * (n as usize) - 1;
    let mut variants: Vec<(GenKind, usize)> = vec![(GenKind::Collinear, kappa + 2)];
    if m >= 3 && 2 * kappa + 2 <= max_size {
        variants.push((GenKind::Conic(ConicKind::Parabola), 2 * kappa + 2));
        variants.push((GenKind::Conic(ConicKind::Hyperbola), 2 * kappa + 2));
        variants.push((GenKind::Conic(ConicKind::TwoLines), 2 * kappa + 2));
    }
    if m >= 4 && 3 * kappa + 1 <= max_size {
        variants.push((GenKind::Cubic(CubicKind::Graph), 3 * kappa + 1));
        variants.push((GenKind::Cubic(CubicKind::Nodal), 3 * kappa + 1));
    }
    for r0 in 1..m {
        let s0 = kappa as u32 + 3 - r0;
        if r0 <= s0 && (r0 as usize) * (s0 as usize) <= max_size {
            variants.push((
                GenKind::Grid { r_lines: r0, s_lines: s0 },
                (r0 as usize) * (s0 as usize),
            ));
        }
    }
    // every third instance is purely generic
    let s = mix(seed, ((m as u64) << 48) | ((n as u64) << 40) | idx as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    if idx % 3 == 2 {
        let size = rng.random_range(1..=max_size);
        return gen_points(GenKind::Random { bound: 25 }, size, mix(s, 2));
    }
    let (kind, count) = variants[idx % variants.len()];
    let base = gen_points(kind, count, mix(s, 3));
    // structured core plus generic noise, within the size bound
    let room = max_size - base.len();
    let noise = if room == 0 { 0 } else { rng.random_range(0..=room.min(3)) };
    let mut pts: Vec<Point> = base.points().to_vec();
    let mut guard = 0;
    while pts.len() < base.len() + noise && guard < 1000 {
        guard += 1;
        let p = Point::from_ints(rng.random_range(-30..=30), rng.random_range(-30..=30));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new(pts).expect("noise points checked for distinctness")
}

/// Scale-criterion round trip: classify agrees with the direct rank test
/// and every dependent witness re-verifies.
pub fn suite_scale_roundtrip(seed: u64) -> (SuiteResult, Vec<DependentRecord>) {
    let name = "scale-criterion-roundtrip";
    let pairs = [(2u32, 3u32), (2, 4), (3, 3), (3, 4), (4, 4), (4, 5)];
    let mut records = Vec::new();
    let mut dependent = 0usize;
    let mut independent = 0usize;
    for &(m, n) in &pairs {
        let params = ScaleParams::new(m, n).expect("valid split");
        for idx in 0..100usize {
            let x = scale_instance(m, n, idx, seed);
            let direct = is_independent(&x, params.kappa());
            let verdict = match classify(&x, &params) {
                Ok(v) => v,
                Err(e) => {
                    return (
                        SuiteResult::fail(name, format!("classify failed (m={m},n={n},idx={idx}): {e}")),
                        records,
                    )
                }
            };
            match verdict {
                ScaleVerdict::Independent => {
                    if !direct {
                        return (
                            SuiteResult::fail(
                                name,
                                format!("verdict Independent but rank test dependent (m={m},n={n},idx={idx})"),
                            ),
                            records,
                        );
                    }
                    independent += 1;
                }
                ScaleVerdict::Dependent { witness, .. } => {
                    if direct {
                        return (
                            SuiteResult::fail(
                                name,
                                format!("verdict Dependent but rank test independent (m={m},n={n},idx={idx})"),
                            ),
                            records,
                        );
                    }
                    if !verify_witness(&x, &params, &witness) {
                        return (
                            SuiteResult::fail(
                                name,
                                format!("witness failed re-verification (m={m},n={n},idx={idx})"),
                            ),
                            records,
                        );
                    }
                    dependent += 1;
                    records.push(DependentRecord { x, m, n, core: witness.subset });
                }
            }
        }
    }
    (
        SuiteResult::pass(
            name,
            format!("600 instances, {dependent} dependent witnesses verified, {independent} independent"),
        ),
        records,
    )
}

fn intersection_grids(seed: u64) -> Vec<(Generated, (u32, u32))> {
    [(1u32, 3u32), (2, 3), (2, 4), (3, 4), (3, 5)]
        .iter()
        .map(|&(r, s)| {
            (
                generate(&GenSpec {
                    kind: GenKind::Grid { r_lines: r, s_lines: s },
                    count: 0,
                    seed: mix(seed, 0x60_0000 + ((r as u64) << 8 | s as u64)),
                })
                .expect("grid generation"),
                (r, s),
            )
        })
        .collect()
}

/// Replaces the last point with a seeded point off the low-degree
/// provenance curve, which hands that point a fundamental polynomial and
/// breaks essential dependence.
fn spoil_one_point(g: &Generated, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let off_curve = &g.provenance[0];
    loop {
        let p = Point::from_ints(rng.random_range(-40..=40), rng.random_range(-40..=40));
        if g.points.points().contains(&p) || eval_poly(off_curve, &p).is_zero() {
            continue;
        }
        let mut pts: Vec<Point> = g.points.points()[..g.points.len() - 1].to_vec();
        pts.push(p);
        return PointSet::new(pts).expect("distinctness checked");
    }
}

/// Intersection characterization on grids and the parabola, with spoiled
/// counterexamples.
pub fn suite_intersection_characterization(seed: u64) -> SuiteResult {
    let name = "intersection-characterization";
    let mut checked = 0usize;
    for (g, (r, s)) in intersection_grids(seed) {
        match check_intersection_characterization(&g.points, r, s) {
            Ok(true) => checked += 1,
            other => {
                return SuiteResult::fail(name, format!("grid {r}x{s} gave {other:?}"));
            }
        }
        let spoiled = spoil_one_point(&g, mix(seed, 0x61_0000 + ((r as u64) << 8 | s as u64)));
        match check_intersection_characterization(&spoiled, r, s) {
            Ok(false) => checked += 1,
            other => {
                return SuiteResult::fail(name, format!("spoiled grid {r}x{s} gave {other:?}"));
            }
        }
    }
    let parabola = generate(&GenSpec {
        kind: GenKind::Conic(ConicKind::Parabola),
        count: 8,
        seed: mix(seed, 0x62_0000),
    })
    .expect("parabola generation");
    match check_intersection_characterization(&parabola.points, 2, 4) {
        Ok(true) => checked += 1,
        other => return SuiteResult::fail(name, format!("parabola-8 gave {other:?}")),
    }
    let spoiled = spoil_one_point(&parabola, mix(seed, 0x63_0000));
    match check_intersection_characterization(&spoiled, 2, 4) {
        Ok(false) => checked += 1,
        other => return SuiteResult::fail(name, format!("spoiled parabola-8 gave {other:?}")),
    }
    SuiteResult::pass(name, format!("{checked} characterization checks"))
}

/// Small-set dependence disjunction: a dependent set of at most 2k+2
/// points has k+2 on a line or is 2k+2 on a conic, read off the witness.
pub fn suite_small_dependence_disjunction(seed: u64) -> SuiteResult {
    let name = "small-dependence-disjunction";
    let mut checked = 0usize;
    for kappa in 3..=5u32 {
        let params = ScaleParams::new(3, kappa).expect("valid split");
        let limit = 2 * kappa as usize + 2;
        for idx in 0..60usize {
            let s = mix(seed, 0x70_0000 + ((kappa as u64) << 16) + idx as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            // structured instances within the 2*kappa+2 size budget
            let x = match idx % 4 {
                0 => {
                    let base = gen_points(GenKind::Collinear, kappa as usize + 2, mix(s, 1));
                    let noise = rng.random_range(0..=(limit - base.len()).min(3));
                    add_noise(base, noise, mix(s, 2))
                }
                1 => gen_points(GenKind::Conic(ConicKind::Parabola), limit, mix(s, 3)),
                2 => gen_points(GenKind::Conic(ConicKind::TwoLines), limit, mix(s, 4)),
                _ => gen_points(GenKind::Random { bound: 20 }, rng.random_range(1..=limit), mix(s, 5)),
            };
            let direct = is_independent(&x, kappa);
            match classify(&x, &params) {
                Ok(ScaleVerdict::Independent) => {
                    if !direct {
                        return SuiteResult::fail(name, format!("round-trip mismatch (seed {s})"));
                    }
                    if idx % 4 <= 2 {
                        return SuiteResult::fail(
                            name,
                            format!("structured dependent instance classified independent (seed {s})"),
                        );
                    }
                }
                Ok(ScaleVerdict::Dependent { witness, .. }) => {
                    let y_len = witness.subset.len();
                    let line_case = witness.r == 1 && y_len >= kappa as usize + 2;
                    let conic_case = witness.r == 2 && y_len == 2 * kappa as usize + 2;
                    if !(line_case || conic_case) {
                        return SuiteResult::fail(
                            name,
                            format!(
                                "witness r={}, #Y={y_len} outside the disjunction (kappa={kappa}, seed {s})",
                                witness.r
                            ),
                        );
                    }
                    checked += 1;
                }
                Err(e) => return SuiteResult::fail(name, format!("classify failed: {e}")),
            }
        }
    }
    SuiteResult::pass(name, format!("{checked} dependent witnesses match the disjunction"))
}

fn add_noise(base: PointSet, noise: usize, seed: u64) -> PointSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point> = base.points().to_vec();
    let mut guard = 0;
    while pts.len() < base.len() + noise && guard < 1000 {
        guard += 1;
        let p = Point::from_ints(rng.random_range(-30..=30), rng.random_range(-30..=30));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new(pts).expect("distinctness checked")
}

/// Cubic-grid instances classify to the intersection case with the cubic
/// label.
pub fn suite_cubic_grid_label(seed: u64) -> SuiteResult {
    let name = "cubic-grid-intersection-label";
    let mut checked = 0usize;
    for kappa in 5..=6u32 {
        let params = ScaleParams::new(4, kappa - 1).expect("valid split");
        for trial in 0..3u64 {
            let g = gen_points(
                GenKind::Grid { r_lines: 3, s_lines: kappa },
                0,
                mix(seed, 0x80_0000 + ((kappa as u64) << 8) + trial),
            );
            match classify(&g, &params) {
                Ok(ScaleVerdict::Dependent { witness, label }) => {
                    let ok = witness.r == 3
                        && witness.subset.len() == 3 * kappa as usize
                        && witness.intersection_case
                        && label == SpecialCaseLabel::CubicIntersection;
                    if !ok {
                        return SuiteResult::fail(
                            name,
                            format!(
                                "3x{kappa} grid gave r={}, #Y={}, case={}, label={label:?}",
                                witness.r,
                                witness.subset.len(),
                                witness.intersection_case
                            ),
                        );
                    }
                    checked += 1;
                }
                other => {
                    return SuiteResult::fail(name, format!("3x{kappa} grid gave {other:?}"))
                }
            }
        }
    }
    SuiteResult::pass(name, format!("{checked} cubic grids labeled CubicIntersection"))
}

/// Essential cores lie on a curve of degree below m, and essentially
/// dependent grid subsets carry at least r*s points.
pub fn suite_containing_curves(seed: u64, records: &[DependentRecord]) -> SuiteResult {
    let name = "containing-curve-bounds";
    let mut checked = 0usize;
    for rec in records {
        let y = rec.x.subset(&rec.core);
        match min_containing_degree(&y, rec.m - 1) {
            Some(w) if w.degree <= rec.m - 1 => checked += 1,
            other => {
                return SuiteResult::fail(
                    name,
                    format!("core of {} points has no curve of degree < m={} ({other:?})", y.len(), rec.m),
                )
            }
        }
    }
    for (g, (r, s)) in intersection_grids(seed) {
        let g = g.points;
        let kappa = r + s - 3;
        let core = match extract_essential_core(&g, kappa) {
            Ok(c) => c,
            Err(e) => return SuiteResult::fail(name, format!("grid core: {e}")),
        };
        if core.len() < (r as usize) * (s as usize) {
            return SuiteResult::fail(
                name,
                format!("essentially {kappa}-dependent grid subset has {} < {} points", core.len(), r * s),
            );
        }
        checked += 1;
    }
    SuiteResult::pass(name, format!("{checked} containing-curve bounds hold"))
}

/// Dimension formulas, the curve-capacity gap in both closed forms, and
/// the applicability bound with its exhaustive split check.
pub fn suite_formula_table(_seed: u64) -> SuiteResult {
    let name = "formula-table";
    for n in 0..=12u32 {
        let binom = ((n as usize + 2) * (n as usize + 1)) / 2;
        if dim_pi(n) != binom {
            return SuiteResult::fail(name, format!("dim mismatch at n={n}"));
        }
    }
    for n in 1..=12u32 {
        for k in 1..=n {
            let closed = (k as usize) * (2 * n as usize - k as usize + 3) / 2;
            if d_gap(n, k) != Ok(closed) {
                return SuiteResult::fail(name, format!("d({n},{k}) != {closed}"));
            }
        }
    }
    for kappa in 1..=12u32 {
        let bound = max_applicable_size(kappa);
        let splits: Vec<(u32, u32)> = (1..=(kappa + 3) / 2)
            .map(|m| (m, kappa + 3 - m))
            .collect();
        for size in 1..=bound {
            if !splits.iter().any(|&(m, n)| size <= (m as usize) * (n as usize)) {
                return SuiteResult::fail(
                    name,
                    format!("size {size} <= bound {bound} has no split at kappa={kappa}"),
                );
            }
        }
        let above = bound + 1;
        if splits.iter().any(|&(m, n)| above <= (m as usize) * (n as usize)) {
            return SuiteResult::fail(
                name,
                format!("size {above} above the bound admits a split at kappa={kappa}"),
            );
        }
    }
    SuiteResult::pass(name, "all formulas agree for n, k, kappa <= 12".into())
}

/// Runs every suite in order; suites that share instances are threaded
/// through the scale round-trip records.
pub fn run_all(seed: u64) -> Vec<SuiteResult> {
    let mut out = Vec::new();
    out.push(suite_small_sets(seed));
    out.push(suite_overloaded_curves(seed));
    out.push(suite_solvable_equals_independent(seed));
    let (scale_result, records) = suite_scale_roundtrip(seed);
    out.push(suite_essential_cores(seed, &records));
    out.push(scale_result);
    out.push(suite_intersection_characterization(seed));
    out.push(suite_small_dependence_disjunction(seed));
    out.push(suite_cubic_grid_label(seed));
    out.push(suite_containing_curves(seed, &records));
    out.push(suite_formula_table(seed));
    out
}
