//! The space of bivariate polynomials of bounded total degree: monomial
//! basis in graded lexicographic order (x before y), dimension formulas,
//! evaluation, collocation matrices and vanishing spaces.

use crate::arith::{rank_nullspace, RatMatrix, Rational};
use crate::error::{Error, Result};

/// A monomial x^xexp * y^yexp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub xexp: u32,
    pub yexp: u32,
}

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.xexp + self.yexp
    }

    /// Position in the graded-lex basis.
    pub fn index(&self) -> usize {
        let d = self.total_degree() as usize;
        d * (d + 1) / 2 + self.yexp as usize
    }
}

/// dim of the degree-n space: (n+1)(n+2)/2.
pub fn dim_pi(n: u32) -> usize {
    let n = n as usize;
    (n + 1) * (n + 2) / 2
}

/// dim_pi(n) - dim_pi(n-k), the capacity gap of a degree-k curve.
pub fn d_gap(n: u32, k: u32) -> Result<usize> {
    if k < 1 || k > n {
        return Err(Error::InvalidParams(format!(
            "d_gap requires 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    Ok(dim_pi(n) - dim_pi(n - k))
}

/// All monomials of total degree <= n: degree ascending, x-exponent
/// descending within a degree.
pub fn monomials(n: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(dim_pi(n));
    for d in 0..=n {
        for yexp in 0..=d {
            out.push(Monomial { xexp: d - yexp, yexp });
        }
    }
    out
}

/// A rational plane point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from_int(x), Rational::from_int(y))
    }
}

/// An ordered set of pairwise distinct points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoints(i, j));
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn empty() -> Self {
        PointSet { points: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    /// Sub-set given by indices into this set's order.
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet {
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }

    /// All points except the one at `skip`.
    pub fn without(&self, skip: usize) -> PointSet {
        PointSet {
            points: self
                .points
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, p)| p.clone())
                .collect(),
        }
    }
}

/// Bivariate polynomial of total degree <= degree_bound, stored as a
/// graded-lex coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly2 {
    degree_bound: u32,
    coeffs: Vec<Rational>,
}

impl Poly2 {
    pub fn new(degree_bound: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), dim_pi(degree_bound), "coefficient length");
        Poly2 { degree_bound, coeffs }
    }

    pub fn zero(degree_bound: u32) -> Self {
        Poly2 {
            degree_bound,
            coeffs: vec![Rational::zero(); dim_pi(degree_bound)],
        }
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.coeffs
            .get(m.index())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set_coeff(&mut self, m: Monomial, v: Rational) {
        let idx = m.index();
        assert!(idx < self.coeffs.len(), "monomial exceeds degree bound");
        self.coeffs[idx] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Largest total degree carrying a nonzero coefficient; 0 for the zero
    /// polynomial.
    pub fn effective_degree(&self) -> u32 {
        monomials(self.degree_bound)
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Same polynomial re-indexed with a larger degree bound.
    pub fn raise_bound(&self, new_bound: u32) -> Poly2 {
        assert!(new_bound >= self.degree_bound);
        let mut out = Poly2::zero(new_bound);
        for (m, c) in monomials(self.degree_bound).iter().zip(&self.coeffs) {
            if !c.is_zero() {
                out.set_coeff(*m, c.clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let bound = self.degree_bound + other.degree_bound;
        let mut out = Poly2::zero(bound);
        let lhs = monomials(self.degree_bound);
        let rhs = monomials(other.degree_bound);
        for (ma, ca) in lhs.iter().zip(&self.coeffs) {
            if ca.is_zero() {
                continue;
            }
            for (mb, cb) in rhs.iter().zip(&other.coeffs) {
                if cb.is_zero() {
                    continue;
                }
                let m = Monomial {
                    xexp: ma.xexp + mb.xexp,
                    yexp: ma.yexp + mb.yexp,
                };
                let v = out.coeff(m) + &(ca * cb);
                out.set_coeff(m, v);
            }
        }
        out
    }

    /// Builds c00 + cx*x + cy*y + ... from (xexp, yexp, coeff) triples.
    pub fn from_terms(degree_bound: u32, terms: &[(u32, u32, Rational)]) -> Poly2 {
        let mut p = Poly2::zero(degree_bound);
        for (xe, ye, c) in terms {
            let m = Monomial { xexp: *xe, yexp: *ye };
            let v = p.coeff(m) + c;
            p.set_coeff(m, v);
        }
        p
    }
}

/// Exact evaluation at a point.
pub fn eval_poly(p: &Poly2, a: &Point) -> Rational {
    let mut acc = Rational::zero();
    for (m, c) in monomials(p.degree_bound()).iter().zip(p.coeffs()) {
        if c.is_zero() {
            continue;
        }
        acc += &(c * &(a.x.pow(m.xexp) * a.y.pow(m.yexp)));
    }
    acc
}

/// Matrix of monomial evaluations: one row per point, one column per basis
/// monomial in graded-lex order.
pub fn collocation_matrix(x: &PointSet, n: u32) -> RatMatrix {
    let basis = monomials(n);
    let mut m = RatMatrix::zero(x.len(), basis.len());
    for (i, p) in x.points().iter().enumerate() {
        for (j, mono) in basis.iter().enumerate() {
            m.set(i, j, p.x.pow(mono.xexp) * p.y.pow(mono.yexp));
        }
    }
    m
}

/// Canonical basis of all degree-<=n polynomials vanishing on every point
/// of `x`.
pub fn vanishing_space(x: &PointSet, n: u32) -> Vec<Poly2> {
    let (_, basis) = rank_nullspace(&collocation_matrix(x, n));
    basis.into_iter().map(|v| Poly2::new(n, v)).collect()
}
