//! Command-line surface: JSON point-set documents, analysis reports and
//! the subcommands wrapping the library operations.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::curves::check_intersection_characterization;
use crate::error::{Error, Result};
use crate::generators::{generate, ConicKind, CubicKind, GenKind, GenSpec, Generated};
use crate::independence::{
    fundamental_polynomial, is_essentially_dependent, is_independent, is_poised, is_solvable,
};
use crate::polyspace::{monomials, Point, PointSet, Poly2};
use crate::scale::{classify, verify_witness, ScaleParams, ScaleVerdict, SpecialCaseLabel};
use crate::suites;

pub const MONOMIAL_ORDER: &str = "grlex-x-first";

/// On-disk point set: coordinates as exact decimal or fraction strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSetDocument {
    pub points: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl PointSetDocument {
    pub fn from_pointset(x: &PointSet) -> Self {
        PointSetDocument {
            points: x
                .points()
                .iter()
                .map(|p| [p.x.to_string(), p.y.to_string()])
                .collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn to_pointset(&self) -> Result<PointSet> {
        let mut pts = Vec::with_capacity(self.points.len());
        for (i, [x, y]) in self.points.iter().enumerate() {
            let parse = |s: &str| -> Result<Rational> {
                s.parse().map_err(|e| match e {
                    Error::ZeroDenominator(_) => e,
                    _ => Error::ParseError {
                        at: format!("points[{i}]"),
                        msg: format!("bad rational {s:?}"),
                    },
                })
            };
            pts.push(Point::new(parse(x)?, parse(y)?));
        }
        PointSet::new(pts)
    }
}

/// Parses a UTF-8 JSON document into a point set.
pub fn parse_pointset(text: &[u8]) -> Result<PointSet> {
    let doc: PointSetDocument = serde_json::from_slice(text).map_err(|e| Error::ParseError {
        at: format!("line {} column {}", e.line(), e.column()),
        msg: e.to_string(),
    })?;
    doc.to_pointset()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FundamentalStatus {
    pub point_index: usize,
    pub has_fundamental: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub degree: u32,
    pub count: usize,
    pub independent: bool,
    pub poised: bool,
    pub solvable: bool,
    pub essentially_dependent: Option<bool>,
    pub monomial_order: String,
    pub fundamentals: Vec<FundamentalStatus>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub r: u32,
    pub s: u32,
    pub subset_indices: Vec<usize>,
    pub curve_coefficients: Vec<Vec<String>>,
    pub intersection_case: bool,
    pub special_case_label: SpecialCaseLabel,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportDocument {
    pub verdict: String,
    pub kappa: u32,
    pub m: u32,
    pub n: u32,
    pub monomial_order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDocument>,
    pub checks: Vec<NamedCheck>,
}

fn coeff_strings(p: &Poly2) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

/// Renders a polynomial as human-readable terms, e.g. "x^2 - x".
pub fn poly_display(p: &Poly2) -> String {
    let mut out = String::new();
    for (m, c) in monomials(p.degree_bound()).iter().zip(p.coeffs()).rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match (m.xexp, m.yexp) {
            (0, 0) => String::new(),
            (x, 0) if x == 1 => "x".into(),
            (x, 0) => format!("x^{x}"),
            (0, y) if y == 1 => "y".into(),
            (0, y) => format!("y^{y}"),
            (x, y) => {
                let xs = if x == 1 { "x".into() } else { format!("x^{x}") };
                let ys = if y == 1 { "y".into() } else { format!("y^{y}") };
                format!("{xs}*{ys}")
            }
        };
        if mono.is_empty() {
            let _ = write!(out, "{mag}");
        } else if mag == Rational::one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{mag}*{mono}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Parser)]
#[command(name = "poisekit", about = "Exact analysis of planar interpolation point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArg {
    /// Path to a point-set JSON document
    #[arg(long, short = 'i')]
    input: PathBuf,
    /// Emit the machine-readable JSON document
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Independence, poisedness and per-point fundamental status
    Analyze {
        #[command(flatten)]
        input: InputArg,
        /// Interpolation degree n
        #[arg(long, short = 'd')]
        degree: u32,
    },
    /// Scale-criterion classification with a dependence witness
    Classify {
        #[command(flatten)]
        input: InputArg,
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
    },
    /// Intersection-configuration characterization for r*s points
    CheckIntersection {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
    },
    /// Seeded structured configurations
    Generate {
        /// collinear | parabola | hyperbola | two-lines | cubic-graph |
        /// cubic-nodal | grid | random
        kind: String,
        #[arg(long, default_value_t = 6)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        r_lines: u32,
        #[arg(long, default_value_t = 3)]
        s_lines: u32,
        #[arg(long, default_value_t = 20)]
        bound: i64,
        #[arg(long)]
        seed: Option<u64>,
        /// Output path (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Runs the property suites and prints a pass/fail table
    Verify {
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ParseError { .. } | Error::ZeroDenominator(_) | Error::DuplicatePoints(_, _) => 2,
        Error::TheoremViolation(_) => 3,
        _ => 1,
    }
}

fn load_pointset(path: &PathBuf) -> Result<PointSet> {
    let bytes = fs::read(path).map_err(|e| Error::ParseError {
        at: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_pointset(&bytes)
}

/// Seed precedence: flag, then POISEKIT_SEED, then 0.
fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("POISEKIT_SEED")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

fn analyze_report(x: &PointSet, degree: u32) -> AnalyzeReport {
    let fundamentals = (0..x.len())
        .map(|i| match fundamental_polynomial(x, i, degree) {
            Ok(p) => FundamentalStatus {
                point_index: i,
                has_fundamental: true,
                coefficients: Some(coeff_strings(&p)),
            },
            Err(_) => FundamentalStatus {
                point_index: i,
                has_fundamental: false,
                coefficients: None,
            },
        })
        .collect();
    AnalyzeReport {
        degree,
        count: x.len(),
        independent: is_independent(x, degree),
        poised: is_poised(x, degree),
        solvable: is_solvable(x, degree),
        essentially_dependent: is_essentially_dependent(x, degree).ok(),
        monomial_order: MONOMIAL_ORDER.into(),
        fundamentals,
    }
}

fn classify_report(x: &PointSet, params: &ScaleParams) -> Result<ReportDocument> {
    let verdict = classify(x, params)?;
    let kappa = params.kappa();
    let mut checks = vec![NamedCheck {
        name: "verdict-matches-rank-test".into(),
        passed: matches!(verdict, ScaleVerdict::Independent) == is_independent(x, kappa),
    }];
    let witness = match &verdict {
        ScaleVerdict::Independent => None,
        ScaleVerdict::Dependent { witness, label } => {
            checks.push(NamedCheck {
                name: "witness-reverified".into(),
                passed: verify_witness(x, params, witness),
            });
            Some(WitnessDocument {
                r: witness.r,
                s: witness.s,
                subset_indices: witness.subset.clone(),
                curve_coefficients: witness.curve.basis.iter().map(coeff_strings).collect(),
                intersection_case: witness.intersection_case,
                special_case_label: *label,
            })
        }
    };
    Ok(ReportDocument {
        verdict: if witness.is_some() {
            "dependent".into()
        } else {
            "independent".into()
        },
        kappa,
        m: params.m(),
        n: params.n(),
        monomial_order: MONOMIAL_ORDER.into(),
        witness,
        checks,
    })
}

fn generated_document(g: &Generated, seed: u64) -> PointSetDocument {
    let mut doc = PointSetDocument::from_pointset(&g.points);
    doc.metadata.insert("description".into(), g.description.clone());
    doc.metadata.insert("monomial_order".into(), MONOMIAL_ORDER.into());
    doc.metadata.insert("seed".into(), seed.to_string());
    for (i, p) in g.provenance.iter().enumerate() {
        doc.metadata.insert(format!("curve_{i}"), poly_display(p));
        doc.metadata.insert(
            format!("curve_{i}_coefficients"),
            coeff_strings(p).join(","),
        );
    }
    doc
}

fn emit(json: String, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, json + "\n").map_err(|e| Error::ParseError {
            at: path.display().to_string(),
            msg: e.to_string(),
        }),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn run_command(cmd: Command) -> Result<()> {
    match cmd {
        Command::Analyze { input, degree } => {
            let x = load_pointset(&input.input)?;
            let report = analyze_report(&x, degree);
            if input.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                println!("degree {} on {} points", report.degree, report.count);
                println!("independent:            {}", report.independent);
                println!("poised:                 {}", report.poised);
                println!("solvable:               {}", report.solvable);
                println!(
                    "essentially dependent:  {}",
                    report
                        .essentially_dependent
                        .map_or("n/a (empty set)".into(), |b| b.to_string())
                );
                for f in &report.fundamentals {
                    println!(
                        "point {}: {}",
                        f.point_index,
                        if f.has_fundamental {
                            "has a fundamental polynomial"
                        } else {
                            "no fundamental polynomial"
                        }
                    );
                }
            }
            Ok(())
        }
        Command::Classify { input, m, n } => {
            let x = load_pointset(&input.input)?;
            let params = ScaleParams::new(m, n)?;
            let report = classify_report(&x, &params)?;
            if input.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                println!(
                    "verdict: {} (kappa = {}, m = {}, n = {})",
                    report.verdict, report.kappa, report.m, report.n
                );
                if let Some(w) = &report.witness {
                    println!(
                        "witness: r = {}, s = {}, #Y = {}, intersection case: {}",
                        w.r,
                        w.s,
                        w.subset_indices.len(),
                        w.intersection_case
                    );
                    println!("subset indices: {:?}", w.subset_indices);
                    println!("label: {:?}", w.special_case_label);
                }
                for c in &report.checks {
                    println!("check {}: {}", c.name, if c.passed { "ok" } else { "FAILED" });
                }
            }
            Ok(())
        }
        Command::CheckIntersection { input, r, s } => {
            let x = load_pointset(&input.input)?;
            let holds = check_intersection_characterization(&x, r, s)?;
            if input.json {
                println!(
                    "{}",
                    serde_json::json!({ "r": r, "s": s, "holds": holds })
                );
            } else {
                println!(
                    "{} points {} the degree-({r},{s}) intersection characterization",
                    x.len(),
                    if holds { "satisfy" } else { "do not satisfy" }
                );
            }
            Ok(())
        }
        Command::Generate {
            kind,
            count,
            r_lines,
            s_lines,
            bound,
            seed,
            output,
        } => {
            let seed = resolve_seed(seed);
            let gen_kind = match kind.as_str() {
                "collinear" => GenKind::Collinear,
                "parabola" => GenKind::Conic(ConicKind::Parabola),
                "hyperbola" => GenKind::Conic(ConicKind::Hyperbola),
                "two-lines" => GenKind::Conic(ConicKind::TwoLines),
                "cubic-graph" => GenKind::Cubic(CubicKind::Graph),
                "cubic-nodal" => GenKind::Cubic(CubicKind::Nodal),
                "grid" => GenKind::Grid { r_lines, s_lines },
                "random" => GenKind::Random { bound },
                other => {
                    return Err(Error::InvalidParams(format!(
                        "unknown generator kind {other:?}"
                    )))
                }
            };
            let g = generate(&GenSpec { kind: gen_kind, count, seed })?;
            let doc = generated_document(&g, seed);
            emit(
                serde_json::to_string_pretty(&doc).expect("serializable"),
                output.as_ref(),
            )
        }
        Command::Verify { seed } => {
            let seed = resolve_seed(seed);
            let results = suites::run_all(seed);
            let mut all_ok = true;
            for r in &results {
                println!(
                    "{} {:<34} {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
                all_ok &= r.passed;
            }
            if all_ok {
                println!("all {} suites passed (seed {seed})", results.len());
                Ok(())
            } else {
                Err(Error::TheoremViolation("property suite failure".into()))
            }
        }
    }
}

/// Entry point shared by the binary and tests; returns the process exit
/// code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match run_command(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_triangle() {
        let text = br#"{"points": [["0","0"],["1","0"],["0","1"]]}"#;
        let x = parse_pointset(text).unwrap();
        assert_eq!(x.len(), 3);
        assert_eq!(x.point(1), &Point::from_ints(1, 0));
    }

    #[test]
    fn parse_duplicate_after_canonicalization() {
        let text = br#"{"points": [["1/2","3"],["2/4","3"]]}"#;
        assert_eq!(parse_pointset(text).unwrap_err(), Error::DuplicatePoints(0, 1));
    }

    #[test]
    fn parse_zero_denominator() {
        let text = br#"{"points": [["1/0","2"]]}"#;
        assert!(matches!(parse_pointset(text), Err(Error::ZeroDenominator(_))));
    }

    #[test]
    fn parse_malformed_json() {
        assert!(matches!(
            parse_pointset(b"{nope"),
            Err(Error::ParseError { .. })
        ));
    }

    #[test]
    fn roundtrip_document() {
        let text = br#"{"points": [["-7","22/7"],["1","0"]]}"#;
        let x = parse_pointset(text).unwrap();
        let doc = PointSetDocument::from_pointset(&x);
        let json = serde_json::to_vec(&doc).unwrap();
        assert_eq!(parse_pointset(&json).unwrap(), x);
    }

    #[test]
    fn poly_display_examples() {
        let p = Poly2::from_terms(
            2,
            &[(2, 0, Rational::from_int(1)), (1, 0, Rational::from_int(-1))],
        );
        assert_eq!(poly_display(&p), "x^2 - x");
        assert_eq!(poly_display(&Poly2::zero(1)), "0");
        let q = Poly2::from_terms(
            2,
            &[(1, 1, Rational::from_int(3)), (0, 0, "-1/2".parse().unwrap())],
        );
        assert_eq!(poly_display(&q), "3*x*y - 1/2");
    }
}
