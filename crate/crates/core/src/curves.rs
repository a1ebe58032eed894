//! Curve-side analysis: minimal-degree containing curves and the
//! intersection-configuration characterization for rs-point sets.

use crate::error::{Error, Result};
use crate::independence::{is_essentially_dependent, is_independent};
use crate::polyspace::{d_gap, dim_pi, vanishing_space, Poly2, PointSet};

/// A degree-r curve (as a vanishing-space basis) containing a point set,
/// with r minimal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveWitness {
    pub degree: u32,
    pub basis: Vec<Poly2>,
}

/// Smallest degree r <= max_r whose vanishing space on `x` is nontrivial,
/// with that space as the witness basis. `None` if no curve of degree up
/// to max_r contains the set.
pub fn min_containing_degree(x: &PointSet, max_r: u32) -> Option<CurveWitness> {
    assert!(!x.is_empty(), "empty set has no containing curve");
    assert!(max_r >= 1);
    for r in 1..=max_r {
        let basis = vanishing_space(x, r);
        if !basis.is_empty() {
            return Some(CurveWitness { degree: r, basis });
        }
    }
    None
}

/// For a set of exactly d(n,k) points on a degree-k curve without multiple
/// components: n-independence decided by the dimension of the vanishing
/// space (it equals dim of the degree n-k space exactly when every
/// vanishing polynomial is divisible by the curve).
pub fn check_dnk_independence_on_curve(x: &PointSet, k: u32, n: u32) -> Result<bool> {
    let expected = d_gap(n, k)?;
    if x.len() != expected {
        return Err(Error::InvalidParams(format!(
            "expected exactly d({n},{k}) = {expected} points, got {}",
            x.len()
        )));
    }
    Ok(vanishing_space(x, n).len() == dim_pi(n - k))
}

/// True iff `y` is the intersection configuration of a degree-r and a
/// degree-s curve: essentially (r+s-3)-dependent and on no curve of
/// degree below r.
pub fn check_intersection_characterization(y: &PointSet, r: u32, s: u32) -> Result<bool> {
    if r < 1 || r > s {
        return Err(Error::InvalidParams(format!(
            "need 1 <= r <= s, got r={r}, s={s}"
        )));
    }
    if y.len() != (r as usize) * (s as usize) {
        return Err(Error::InvalidParams(format!(
            "expected r*s = {} points, got {}",
            (r as usize) * (s as usize),
            y.len()
        )));
    }
    let kappa = r + s - 3;
    if !is_essentially_dependent(y, kappa)? {
        return Ok(false);
    }
    if r > 1 && !vanishing_space(y, r - 1).is_empty() {
        return Ok(false);
    }
    Ok(true)
}

/// Convenience used by property suites: a set of more than d(n,k) points
/// on a degree-k square-free curve must be n-dependent.
pub fn overloaded_curve_is_dependent(x: &PointSet, k: u32, n: u32) -> Result<bool> {
    let gap = d_gap(n, k)?;
    if x.len() <= gap {
        return Err(Error::InvalidParams(format!(
            "need more than d({n},{k}) = {gap} points, got {}",
            x.len()
        )));
    }
    Ok(!is_independent(x, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::polyspace::{Monomial, Point};

    fn pts(coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    fn grid23() -> PointSet {
        pts(&[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)])
    }

    #[test]
    fn min_degree_two_points() {
        let w = min_containing_degree(&pts(&[(0, 0), (1, 1)]), 3).unwrap();
        assert_eq!(w.degree, 1);
        assert!(!w.basis.is_empty());
    }

    #[test]
    fn min_degree_grid() {
        let w = min_containing_degree(&grid23(), 3).unwrap();
        assert_eq!(w.degree, 2);
        assert_eq!(w.basis.len(), 1);
        // proportional to x^2 - x
        let v = &w.basis[0];
        let cx2 = v.coeff(Monomial { xexp: 2, yexp: 0 });
        let cx = v.coeff(Monomial { xexp: 1, yexp: 0 });
        assert!(!cx2.is_zero());
        assert_eq!(cx, -&cx2);
    }

    #[test]
    fn min_degree_generic_six() {
        // generic six points lie on no conic, only on cubics
        let x = pts(&[(0, 0), (1, 0), (0, 1), (2, 3), (5, 1), (3, 7)]);
        let w = min_containing_degree(&x, 3).unwrap();
        assert_eq!(w.degree, 3);
    }

    #[test]
    fn dnk_check_on_line_degree3() {
        // 4 = d(3,1) points on the line y = 0
        let x = pts(&[(0, 0), (1, 0), (2, 0), (3, 0)]);
        assert_eq!(check_dnk_independence_on_curve(&x, 1, 3), Ok(true));
        assert_eq!(is_independent(&x, 3), true);
    }

    #[test]
    fn dnk_check_on_two_lines() {
        // 5 = d(2,2) points on y(y-1), with 4 collinear: dependent
        let x = pts(&[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1)]);
        assert_eq!(check_dnk_independence_on_curve(&x, 2, 2), Ok(false));
        assert_eq!(is_independent(&x, 2), false);
    }

    #[test]
    fn dnk_check_three_on_line_degree2() {
        let x = pts(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(check_dnk_independence_on_curve(&x, 1, 2), Ok(true));
    }

    #[test]
    fn dnk_check_wrong_cardinality() {
        let x = pts(&[(0, 0), (1, 0)]);
        assert!(matches!(
            check_dnk_independence_on_curve(&x, 1, 3),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn intersection_grid() {
        assert_eq!(check_intersection_characterization(&grid23(), 2, 3), Ok(true));
    }

    #[test]
    fn intersection_parabola8() {
        let x: Vec<Point> = (0..8)
            .map(|t| Point::new(Rational::from_int(t), Rational::from_int(t * t)))
            .collect();
        let x = PointSet::new(x).unwrap();
        assert_eq!(check_intersection_characterization(&x, 2, 4), Ok(true));
    }

    #[test]
    fn intersection_rejects_line_plus_point() {
        let x = pts(&[(0, 0), (1, 0), (2, 0), (3, 0), (5, 7)]);
        assert_eq!(check_intersection_characterization(&x, 1, 5), Ok(false));
    }

    #[test]
    fn intersection_invalid_params() {
        assert!(matches!(
            check_intersection_characterization(&grid23(), 3, 2),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            check_intersection_characterization(&grid23(), 2, 4),
            Err(Error::InvalidParams(_))
        ));
    }
}
