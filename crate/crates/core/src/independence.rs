//! Decision procedures on point sets: independence, poisedness,
//! solvability, fundamental polynomials, essential dependence and
//! extraction of essentially dependent cores.

use crate::arith::{rank_nullspace, solve, Rational};
use crate::error::{Error, Result};
use crate::polyspace::{collocation_matrix, dim_pi, Poly2, PointSet};

/// Fundamental-polynomial status of one point of a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalResult {
    pub point_index: usize,
    pub polynomial: Option<Poly2>,
}

/// True iff the collocation matrix at degree n has full row rank,
/// i.e. every point has a fundamental polynomial.
pub fn is_independent(x: &PointSet, n: u32) -> bool {
    let (rank, _) = rank_nullspace(&collocation_matrix(x, n));
    rank == x.len()
}

/// True iff the set carries a unique interpolant for every data vector.
pub fn is_poised(x: &PointSet, n: u32) -> bool {
    x.len() == dim_pi(n) && is_independent(x, n)
}

/// True iff every data vector admits an interpolant. Decided by solving
/// the unit-data system for every point, which is a route independent of
/// the rank test behind `is_independent`; the two must always agree.
pub fn is_solvable(x: &PointSet, n: u32) -> bool {
    (0..x.len()).all(|i| fundamental_polynomial(x, i, n).is_ok())
}

/// Canonical fundamental polynomial of the point at index `a`: value 1
/// there, 0 on the rest of the set, free variables zeroed.
pub fn fundamental_polynomial(x: &PointSet, a: usize, n: u32) -> Result<Poly2> {
    assert!(a < x.len(), "point index out of range");
    let m = collocation_matrix(x, n);
    let data: Vec<Rational> = (0..x.len())
        .map(|i| {
            if i == a {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    match solve(&m, &data) {
        Ok(coeffs) => Ok(Poly2::new(n, coeffs)),
        Err(Error::Inconsistent) => Err(Error::NoFundamental),
        Err(e) => Err(e),
    }
}

/// True iff no point of the set has a fundamental polynomial.
pub fn is_essentially_dependent(x: &PointSet, n: u32) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok((0..x.len()).all(|i| fundamental_polynomial(x, i, n).is_err()))
}

/// Indices of the points left after removing every point that has a
/// fundamental polynomial with respect to the full set. Empty iff the set
/// is n-independent; otherwise the remainder is asserted to be
/// essentially n-dependent.
pub fn extract_essential_core(x: &PointSet, n: u32) -> Result<Vec<usize>> {
    let core: Vec<usize> = (0..x.len())
        .filter(|&i| fundamental_polynomial(x, i, n).is_err())
        .collect();
    if !core.is_empty() {
        let sub = x.subset(&core);
        if !is_essentially_dependent(&sub, n)? {
            return Err(Error::TheoremViolation(
                "single-pass core is not essentially dependent".into(),
            ));
        }
    }
    Ok(core)
}

/// Canonical interpolant matching `data` at every point of `x`.
pub fn interpolate(x: &PointSet, data: &[Rational], n: u32) -> Result<Poly2> {
    assert_eq!(data.len(), x.len(), "data length mismatch");
    match solve(&collocation_matrix(x, n), data) {
        Ok(coeffs) => Ok(Poly2::new(n, coeffs)),
        Err(Error::Inconsistent) => Err(Error::NotSolvable),
        Err(e) => Err(e),
    }
}
