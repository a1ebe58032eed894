//! Python bindings exposing the point-set analysis operations. Rational
//! coordinates and coefficients cross the boundary as strings ("7",
//! "-3", "22/7") to keep everything exact.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use poisekit::cli;
use poisekit::{
    classify, check_intersection_characterization, extract_essential_core,
    fundamental_polynomial, generate, interpolate, is_essentially_dependent, is_independent,
    is_poised, is_solvable, min_containing_degree, ConicKind, CubicKind, GenKind, GenSpec, Point,
    PointSet, Poly2, Rational, ScaleParams,
};

fn to_py_err(e: poisekit::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_points(points: Vec<Vec<String>>) -> PyResult<PointSet> {
    let mut pts = Vec::with_capacity(points.len());
    for (i, row) in points.iter().enumerate() {
        let [x, y] = row.as_slice() else {
            return Err(PyValueError::new_err(format!(
                "point {i} must be a pair of rational strings"
            )));
        };
        let px: Rational = x.parse().map_err(to_py_err)?;
        let py: Rational = y.parse().map_err(to_py_err)?;
        pts.push(Point::new(px, py));
    }
    PointSet::new(pts).map_err(to_py_err)
}

fn coeff_strings(p: &Poly2) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

#[pyfunction]
#[pyo3(name = "dim_pi")]
fn dim_pi_py(n: u32) -> usize {
    poisekit::dim_pi(n)
}

#[pyfunction]
#[pyo3(name = "d_gap")]
fn d_gap_py(n: u32, k: u32) -> PyResult<usize> {
    poisekit::d_gap(n, k).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(name = "max_applicable_size")]
fn max_applicable_size_py(kappa: u32) -> usize {
    poisekit::max_applicable_size(kappa)
}

#[pyfunction]
#[pyo3(name = "is_independent")]
fn is_independent_py(points: Vec<Vec<String>>, n: u32) -> PyResult<bool> {
    Ok(is_independent(&parse_points(points)?, n))
}

#[pyfunction]
#[pyo3(name = "is_poised")]
fn is_poised_py(points: Vec<Vec<String>>, n: u32) -> PyResult<bool> {
    Ok(is_poised(&parse_points(points)?, n))
}

#[pyfunction]
#[pyo3(name = "is_solvable")]
fn is_solvable_py(points: Vec<Vec<String>>, n: u32) -> PyResult<bool> {
    Ok(is_solvable(&parse_points(points)?, n))
}

#[pyfunction]
#[pyo3(name = "is_essentially_dependent")]
fn is_essentially_dependent_py(points: Vec<Vec<String>>, n: u32) -> PyResult<bool> {
    is_essentially_dependent(&parse_points(points)?, n).map_err(to_py_err)
}

/// Coefficient vector in graded-lex order, or None when the point has no
/// fundamental polynomial.
#[pyfunction]
#[pyo3(name = "fundamental_polynomial")]
fn fundamental_polynomial_py(
    points: Vec<Vec<String>>,
    index: usize,
    n: u32,
) -> PyResult<Option<Vec<String>>> {
    let x = parse_points(points)?;
    if index >= x.len() {
        return Err(PyValueError::new_err("point index out of range"));
    }
    match fundamental_polynomial(&x, index, n) {
        Ok(p) => Ok(Some(coeff_strings(&p))),
        Err(poisekit::Error::NoFundamental) => Ok(None),
        Err(e) => Err(to_py_err(e)),
    }
}

#[pyfunction]
#[pyo3(name = "interpolate")]
fn interpolate_py(
    points: Vec<Vec<String>>,
    data: Vec<String>,
    n: u32,
) -> PyResult<Option<Vec<String>>> {
    let x = parse_points(points)?;
    if data.len() != x.len() {
        return Err(PyValueError::new_err("data length must match point count"));
    }
    let values: Vec<Rational> = data
        .iter()
        .map(|s| s.parse().map_err(to_py_err))
        .collect::<PyResult<_>>()?;
    match interpolate(&x, &values, n) {
        Ok(p) => Ok(Some(coeff_strings(&p))),
        Err(poisekit::Error::NotSolvable) => Ok(None),
        Err(e) => Err(to_py_err(e)),
    }
}

#[pyfunction]
#[pyo3(name = "extract_essential_core")]
fn extract_essential_core_py(points: Vec<Vec<String>>, n: u32) -> PyResult<Vec<usize>> {
    extract_essential_core(&parse_points(points)?, n).map_err(to_py_err)
}

/// (degree, basis coefficient vectors) of the minimal containing curve up
/// to max_r, or None.
#[pyfunction]
#[pyo3(name = "min_containing_degree")]
fn min_containing_degree_py(
    points: Vec<Vec<String>>,
    max_r: u32,
) -> PyResult<Option<(u32, Vec<Vec<String>>)>> {
    let x = parse_points(points)?;
    Ok(min_containing_degree(&x, max_r)
        .map(|w| (w.degree, w.basis.iter().map(coeff_strings).collect())))
}

#[pyfunction]
#[pyo3(name = "check_intersection")]
fn check_intersection_py(points: Vec<Vec<String>>, r: u32, s: u32) -> PyResult<bool> {
    check_intersection_characterization(&parse_points(points)?, r, s).map_err(to_py_err)
}

/// Scale-criterion report as a JSON string (same schema as the CLI's
/// classify --json output).
#[pyfunction]
#[pyo3(name = "classify")]
fn classify_py(points: Vec<Vec<String>>, m: u32, n: u32) -> PyResult<String> {
    let x = parse_points(points)?;
    let params = ScaleParams::new(m, n).map_err(to_py_err)?;
    let verdict = classify(&x, &params).map_err(to_py_err)?;
    let kappa = params.kappa();
    let report = match &verdict {
        poisekit::ScaleVerdict::Independent => serde_json::json!({
            "verdict": "independent",
            "kappa": kappa, "m": m, "n": n,
            "monomial_order": cli::MONOMIAL_ORDER,
        }),
        poisekit::ScaleVerdict::Dependent { witness, label } => serde_json::json!({
            "verdict": "dependent",
            "kappa": kappa, "m": m, "n": n,
            "monomial_order": cli::MONOMIAL_ORDER,
            "witness": {
                "r": witness.r,
                "s": witness.s,
                "subset_indices": witness.subset,
                "curve_coefficients": witness.curve.basis.iter()
                    .map(coeff_strings).collect::<Vec<_>>(),
                "intersection_case": witness.intersection_case,
                "special_case_label": format!("{label:?}"),
            },
        }),
    };
    Ok(report.to_string())
}

/// Seeded structured configurations; returns point coordinate pairs.
#[pyfunction]
#[pyo3(name = "generate", signature = (kind, count, seed, r_lines=2, s_lines=3, bound=20))]
fn generate_py(
    kind: &str,
    count: usize,
    seed: u64,
    r_lines: u32,
    s_lines: u32,
    bound: i64,
) -> PyResult<Vec<Vec<String>>> {
    let gen_kind = match kind {
        "collinear" => GenKind::Collinear,
        "parabola" => GenKind::Conic(ConicKind::Parabola),
        "hyperbola" => GenKind::Conic(ConicKind::Hyperbola),
        "two-lines" => GenKind::Conic(ConicKind::TwoLines),
        "cubic-graph" => GenKind::Cubic(CubicKind::Graph),
        "cubic-nodal" => GenKind::Cubic(CubicKind::Nodal),
        "grid" => GenKind::Grid { r_lines, s_lines },
        "random" => GenKind::Random { bound },
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown generator kind {other:?}"
            )))
        }
    };
    let g = generate(&GenSpec { kind: gen_kind, count, seed }).map_err(to_py_err)?;
    Ok(g
        .points
        .points()
        .iter()
        .map(|p| vec![p.x.to_string(), p.y.to_string()])
        .collect())
}

#[pymodule]
fn poisekit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(dim_pi_py, m)?)?;
    m.add_function(wrap_pyfunction!(d_gap_py, m)?)?;
    m.add_function(wrap_pyfunction!(max_applicable_size_py, m)?)?;
    m.add_function(wrap_pyfunction!(is_independent_py, m)?)?;
    m.add_function(wrap_pyfunction!(is_poised_py, m)?)?;
    m.add_function(wrap_pyfunction!(is_solvable_py, m)?)?;
    m.add_function(wrap_pyfunction!(is_essentially_dependent_py, m)?)?;
    m.add_function(wrap_pyfunction!(fundamental_polynomial_py, m)?)?;
    m.add_function(wrap_pyfunction!(interpolate_py, m)?)?;
    m.add_function(wrap_pyfunction!(extract_essential_core_py, m)?)?;
    m.add_function(wrap_pyfunction!(min_containing_degree_py, m)?)?;
    m.add_function(wrap_pyfunction!(check_intersection_py, m)?)?;
    m.add_function(wrap_pyfunction!(classify_py, m)?)?;
    m.add_function(wrap_pyfunction!(generate_py, m)?)?;
    Ok(())
}
