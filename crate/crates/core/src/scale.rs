//! The scale criterion: classifying kappa-dependence of sets of at most
//! m*n-1 points via an essentially dependent core on a minimal-degree
//! curve, with independently re-checkable witnesses and the special-case
//! labels for small m.

use serde::{Deserialize, Serialize};

use crate::curves::{check_intersection_characterization, min_containing_degree, CurveWitness};
use crate::error::{Error, Result};
use crate::independence::{
    extract_essential_core, fundamental_polynomial, is_independent,
};
use crate::polyspace::{eval_poly, vanishing_space, PointSet};

/// Degree split (m, n) with the derived kappa = m + n - 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScaleParams {
    m: u32,
    n: u32,
}

impl ScaleParams {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m < 1 || m > n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= m <= n, got m={m}, n={n}"
            )));
        }
        if m + n < 4 {
            return Err(Error::InvalidParams(format!(
                "kappa = m+n-3 must be at least 1, got m={m}, n={n}"
            )));
        }
        Ok(ScaleParams { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kappa(&self) -> u32 {
        self.m + self.n - 3
    }

    pub fn max_size(&self) -> usize {
        (self.m as usize) * (self.n as usize) - 1
    }
}

/// Certificate for a Dependent verdict.
#[derive(Debug, Clone)]
pub struct Witness {
    pub subset: Vec<usize>,
    pub r: u32,
    pub s: u32,
    pub curve: CurveWitness,
    pub intersection_case: bool,
}

/// Special-case labels for the small-m instances of the criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialCaseLabel {
    CollinearKappaPlus2,
    ConicTwoKappaPlus2,
    CubicIntersection,
    MoreThan3KappaOnCubic,
    GenericScaleCase(u32),
}

#[derive(Debug, Clone)]
pub enum ScaleVerdict {
    Independent,
    Dependent {
        witness: Witness,
        label: SpecialCaseLabel,
    },
}

/// Largest set size the criterion can cover for a given kappa:
/// floor((kappa+3)^2 / 4), attained at the balanced split.
pub fn max_applicable_size(kappa: u32) -> usize {
    assert!(kappa >= 1);
    let k = kappa as usize + 3;
    k * k / 4
}

/// Decides kappa-dependence of `x` under the split `params` and, when
/// dependent, produces the constructive witness: the essential core, its
/// minimal containing curve of degree r <= m-1, and the intersection-case
/// flag for #Y = rs.
pub fn classify(x: &PointSet, params: &ScaleParams) -> Result<ScaleVerdict> {
    if x.len() > params.max_size() {
        return Err(Error::OutOfScope(x.len(), params.max_size()));
    }
    let kappa = params.kappa();
    if is_independent(x, kappa) {
        return Ok(ScaleVerdict::Independent);
    }
    let subset = extract_essential_core(x, kappa)?;
    if subset.is_empty() {
        return Err(Error::TheoremViolation(
            "dependent set produced an empty essential core".into(),
        ));
    }
    let y = x.subset(&subset);
    let Some(curve) = min_containing_degree(&y, params.m - 1) else {
        return Err(Error::TheoremViolation(format!(
            "essential core lies on no curve of degree <= m-1 = {}",
            params.m - 1
        )));
    };
    let r = curve.degree;
    let s = kappa + 3 - r;
    if y.len() < (r as usize) * (s as usize) {
        return Err(Error::TheoremViolation(format!(
            "essential core has {} points, below the r*s bound {}",
            y.len(),
            (r as usize) * (s as usize)
        )));
    }
    let intersection_case = y.len() == (r as usize) * (s as usize);
    if intersection_case && !check_intersection_characterization(&y, r, s)? {
        return Err(Error::TheoremViolation(
            "core of size r*s fails the intersection characterization".into(),
        ));
    }
    let witness = Witness {
        subset,
        r,
        s,
        curve,
        intersection_case,
    };
    let label = special_case_label(&witness, params)?;
    Ok(ScaleVerdict::Dependent { witness, label })
}

/// Re-derives every witness invariant from scratch; `false` means the
/// witness does not certify dependence of `x` under `params`.
pub fn verify_witness(x: &PointSet, params: &ScaleParams, w: &Witness) -> bool {
    let kappa = params.kappa();
    if w.r < 1 || w.r > params.m - 1 || w.r + w.s != kappa + 3 {
        return false;
    }
    if w.subset.iter().any(|&i| i >= x.len()) {
        return false;
    }
    let mut sorted = w.subset.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != w.subset.len() {
        return false;
    }
    let y = x.subset(&w.subset);
    if y.is_empty() || y.len() < (w.r as usize) * (w.s as usize) {
        return false;
    }
    // essential dependence, point by point
    if (0..y.len()).any(|i| fundamental_polynomial(&y, i, kappa).is_ok()) {
        return false;
    }
    // curve basis vanishes on Y and is nonempty with the claimed degree
    if w.curve.degree != w.r || w.curve.basis.is_empty() {
        return false;
    }
    for p in &w.curve.basis {
        if p.degree_bound() != w.r {
            return false;
        }
        if y.points().iter().any(|pt| !eval_poly(p, pt).is_zero()) {
            return false;
        }
    }
    if !w.curve.basis.iter().any(|p| p.effective_degree() == w.r) {
        return false;
    }
    // minimality: no curve of degree below r
    if w.r > 1 && !vanishing_space(&y, w.r - 1).is_empty() {
        return false;
    }
    if w.intersection_case != (y.len() == (w.r as usize) * (w.s as usize)) {
        return false;
    }
    if w.intersection_case {
        match check_intersection_characterization(&y, w.r, w.s) {
            Ok(true) => {}
            _ => return false,
        }
    }
    true
}

/// Labels a verified witness with the matching special case of the
/// criterion for m <= 4, or the generic label beyond.
pub fn special_case_label(w: &Witness, params: &ScaleParams) -> Result<SpecialCaseLabel> {
    if params.m == 1 {
        return Err(Error::InvalidParams(
            "no dependent witnesses exist for m = 1".into(),
        ));
    }
    if params.m > 4 {
        return Ok(SpecialCaseLabel::GenericScaleCase(w.r));
    }
    let kappa = params.kappa() as usize;
    Ok(match w.r {
        1 => SpecialCaseLabel::CollinearKappaPlus2,
        2 => SpecialCaseLabel::ConicTwoKappaPlus2,
        3 if w.subset.len() == 3 * kappa => SpecialCaseLabel::CubicIntersection,
        3 => SpecialCaseLabel::MoreThan3KappaOnCubic,
        r => SpecialCaseLabel::GenericScaleCase(r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyspace::Point;

    fn pts(coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    fn parabola8() -> PointSet {
        pts(&(0..8).map(|t| (t, t * t)).collect::<Vec<_>>())
    }

    #[test]
    fn max_applicable_size_values() {
        assert_eq!(max_applicable_size(3), 9);
        assert_eq!(max_applicable_size(2), 6);
        assert_eq!(max_applicable_size(4), 12);
    }

    #[test]
    fn classify_parabola8() {
        let params = ScaleParams::new(3, 3).unwrap();
        assert_eq!(params.kappa(), 3);
        let verdict = classify(&parabola8(), &params).unwrap();
        let ScaleVerdict::Dependent { witness, label } = verdict else {
            panic!("expected a dependent verdict");
        };
        assert_eq!(witness.r, 2);
        assert_eq!(witness.s, 4);
        assert_eq!(witness.subset.len(), 8);
        assert!(witness.intersection_case);
        assert_eq!(label, SpecialCaseLabel::ConicTwoKappaPlus2);
        assert!(verify_witness(&parabola8(), &params, &witness));
    }

    #[test]
    fn classify_line_plus_offline() {
        let x = pts(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (1, 3), (2, 5)]);
        let params = ScaleParams::new(2, 4).unwrap();
        let verdict = classify(&x, &params).unwrap();
        let ScaleVerdict::Dependent { witness, label } = verdict else {
            panic!("expected a dependent verdict");
        };
        assert_eq!(witness.r, 1);
        assert_eq!(witness.s, 5);
        assert_eq!(witness.subset, vec![0, 1, 2, 3, 4]);
        assert!(witness.intersection_case);
        assert_eq!(label, SpecialCaseLabel::CollinearKappaPlus2);
        assert!(verify_witness(&x, &params, &witness));
    }

    #[test]
    fn classify_generic_independent() {
        let x = pts(&[(0, 0), (1, 0), (0, 1), (2, 3)]);
        let params = ScaleParams::new(2, 3).unwrap();
        assert!(matches!(
            classify(&x, &params).unwrap(),
            ScaleVerdict::Independent
        ));
    }

    #[test]
    fn classify_m1_always_independent() {
        let params = ScaleParams::new(1, 5).unwrap();
        // any set of at most n-1 = kappa+1 points
        let x = pts(&[(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert!(matches!(
            classify(&x, &params).unwrap(),
            ScaleVerdict::Independent
        ));
    }

    #[test]
    fn classify_out_of_scope() {
        let params = ScaleParams::new(2, 3).unwrap();
        let x = pts(&[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (5, 0)]);
        assert_eq!(
            classify(&x, &params).unwrap_err(),
            Error::OutOfScope(6, 5)
        );
    }

    #[test]
    fn invalid_params() {
        assert!(ScaleParams::new(3, 2).is_err());
        assert!(ScaleParams::new(0, 4).is_err());
        assert!(ScaleParams::new(1, 2).is_err());
        assert!(ScaleParams::new(1, 3).is_ok());
    }

    #[test]
    fn tampered_witness_fails_verification() {
        let params = ScaleParams::new(3, 3).unwrap();
        let x = parabola8();
        let ScaleVerdict::Dependent { witness, .. } = classify(&x, &params).unwrap() else {
            panic!("expected dependent");
        };
        // wrong degree claim
        let mut bad = witness.clone();
        bad.r += 1;
        bad.s -= 1;
        assert!(!verify_witness(&x, &params, &bad));
        // dropped subset index
        let mut bad = witness.clone();
        bad.subset.pop();
        assert!(!verify_witness(&x, &params, &bad));
    }

    #[test]
    fn label_requires_m_at_least_2() {
        let params3 = ScaleParams::new(3, 3).unwrap();
        let x = parabola8();
        let ScaleVerdict::Dependent { witness, .. } = classify(&x, &params3).unwrap() else {
            panic!("expected dependent");
        };
        let params1 = ScaleParams::new(1, 5).unwrap();
        assert!(matches!(
            special_case_label(&witness, &params1),
            Err(Error::InvalidParams(_))
        ));
    }
}
