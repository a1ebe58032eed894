//! Exact rational scalars and dense rational matrices with rank, nullspace
//! and linear-system solving.
//!
//! Elimination is fraction-free (Bareiss): each row is scaled to integers,
//! the forward pass works on arbitrary-precision integers, and a final
//! normalization pass produces the reduced row echelon form over rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar, always in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator(format!("{}/{}", numer, denom)));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn from_int(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator("1/0".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc *= self;
        }
        acc
    }

}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            BigInt::from_str(t.trim()).map_err(|e| Error::ParseError {
                at: t.to_string(),
                msg: e.to_string(),
            })
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let numer = parse_int(n)?;
                let denom = parse_int(d)?;
                if denom.is_zero() {
                    return Err(Error::ZeroDenominator(s.to_string()));
                }
                Rational::new(numer, denom)
            }
            None => Ok(Rational::from_bigint(parse_int(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        RatMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix-vector product; `v` must have `cols` entries.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    let e = self.get(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc += &(e * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Appends `b` as an extra column.
    pub fn augment(&self, b: &[Rational]) -> RatMatrix {
        assert_eq!(b.len(), self.rows);
        let mut m = RatMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            m.set(r, self.cols, b[r].clone());
        }
        m
    }
}

/// Result of `rref`: the reduced row echelon form and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduced row echelon form by fraction-free forward elimination followed
/// by a rational normalization pass. Pivot choice is the first nonzero
/// entry scanning top-to-bottom in the current column.
pub fn rref(m: &RatMatrix) -> Rref {
    let rows = m.rows;
    let cols = m.cols;

    // Scale each row to integers; row scaling does not change the rref.
    let mut a: Vec<BigInt> = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let mut lcm = BigInt::one();
        for c in 0..cols {
            lcm = lcm.lcm(m.get(r, c).denom());
        }
        for c in 0..cols {
            let e = m.get(r, c);
            a.push(e.numer() * (&lcm / e.denom()));
        }
    }

    // Bareiss forward elimination.
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut pr = 0usize;
    for pc in 0..cols {
        if pr == rows {
            break;
        }
        let Some(found) = (pr..rows).find(|&i| !a[i * cols + pc].is_zero()) else {
            continue;
        };
        if found != pr {
            for c in 0..cols {
                a.swap(found * cols + c, pr * cols + c);
            }
        }
        for i in pr + 1..rows {
            let head = std::mem::replace(&mut a[i * cols + pc], BigInt::zero());
            for c in pc + 1..cols {
                let num = &a[pr * cols + pc] * &a[i * cols + c] - &head * &a[pr * cols + c];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i * cols + c] = q;
            }
        }
        prev = a[pr * cols + pc].clone();
        pivots.push(pc);
        pr += 1;
    }

    // Normalization pass: scale pivots to 1 and clear above, over rationals.
    let mut r = RatMatrix::zero(rows, cols);
    for i in 0..rows {
        for c in 0..cols {
            r.set(i, c, Rational::from_bigint(a[i * cols + c].clone()));
        }
    }
    for (k, &pc) in pivots.iter().enumerate().rev() {
        let inv = r.get(k, pc).recip().expect("pivot is nonzero");
        for c in pc..cols {
            let v = r.get(k, c) * &inv;
            r.set(k, c, v);
        }
        for i in 0..k {
            let factor = r.get(i, pc).clone();
            if factor.is_zero() {
                continue;
            }
            for c in pc..cols {
                let v = r.get(i, c) - &(&factor * r.get(k, c));
                r.set(i, c, v);
            }
        }
    }

    Rref { matrix: r, pivots }
}

/// Rank and the canonical nullspace basis (one vector per free column,
/// with that free coordinate set to 1 and the others to 0).
pub fn rank_nullspace(m: &RatMatrix) -> (usize, Vec<Vec<Rational>>) {
    let red = rref(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in 0..cols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (k, &p) in red.pivots.iter().enumerate() {
            v[p] = -red.matrix.get(k, f);
        }
        basis.push(v);
    }
    (red.pivots.len(), basis)
}

/// Canonical solution of `M x = b` with all free variables zeroed.
pub fn solve(m: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    assert_eq!(b.len(), m.rows, "right-hand side length mismatch");
    let red = rref(&m.augment(b));
    if red.pivots.last() == Some(&m.cols) {
        return Err(Error::Inconsistent);
    }
    let mut x = vec![Rational::zero(); m.cols];
    for (k, &p) in red.pivots.iter().enumerate() {
        x[p] = red.matrix.get(k, m.cols).clone();
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn rational_canonical_form() {
        let a = Rational::new(BigInt::from(2), BigInt::from(4)).unwrap();
        let b = Rational::new(BigInt::from(-1), BigInt::from(-2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1/2");
        let c = Rational::new(BigInt::from(1), BigInt::from(-3)).unwrap();
        assert_eq!(c.to_string(), "-1/3");
        assert!(c.denom() > &BigInt::zero());
    }

    #[test]
    fn rational_parse() {
        assert_eq!("22/7".parse::<Rational>().unwrap().to_string(), "22/7");
        assert_eq!("-3".parse::<Rational>().unwrap(), rat(-3));
        assert_eq!(" 2/4 ".parse::<Rational>().unwrap().to_string(), "1/2");
        assert!(matches!(
            "1/0".parse::<Rational>(),
            Err(Error::ZeroDenominator(_))
        ));
        assert!(matches!(
            "x".parse::<Rational>(),
            Err(Error::ParseError { .. })
        ));
    }

    #[test]
    fn rref_identity() {
        let m = RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]);
        let red = rref(&m);
        assert_eq!(red.matrix, m);
        assert_eq!(red.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_proportional_rows() {
        let m = RatMatrix::from_i64_rows(&[vec![1, 1], vec![2, 2]]);
        let red = rref(&m);
        assert_eq!(red.matrix, RatMatrix::from_i64_rows(&[vec![1, 1], vec![0, 0]]));
        assert_eq!(red.pivots, vec![0]);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = RatMatrix::zero(2, 2);
        let red = rref(&m);
        assert_eq!(red.matrix, m);
        assert!(red.pivots.is_empty());
    }

    #[test]
    fn nullspace_cases() {
        let (rank, basis) = rank_nullspace(&RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]));
        assert_eq!((rank, basis.len()), (2, 0));

        let (rank, basis) = rank_nullspace(&RatMatrix::from_i64_rows(&[vec![1, 2]]));
        assert_eq!(rank, 1);
        assert_eq!(basis, vec![vec![rat(-2), rat(1)]]);

        let (rank, basis) = rank_nullspace(&RatMatrix::zero(0, 3));
        assert_eq!(rank, 0);
        assert_eq!(basis.len(), 3);
        for (i, v) in basis.iter().enumerate() {
            for (j, e) in v.iter().enumerate() {
                assert_eq!(e, &rat((i == j) as i64));
            }
        }
    }

    #[test]
    fn solve_cases() {
        let id = RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(solve(&id, &[rat(3), rat(5)]).unwrap(), vec![rat(3), rat(5)]);

        let m = RatMatrix::from_i64_rows(&[vec![1, 1], vec![2, 2]]);
        assert_eq!(solve(&m, &[rat(1), rat(3)]), Err(Error::Inconsistent));

        let m = RatMatrix::from_i64_rows(&[vec![1, 1]]);
        assert_eq!(solve(&m, &[rat(4)]).unwrap(), vec![rat(4), rat(0)]);
    }

    #[test]
    fn rref_with_fractions() {
        let half = Rational::new(BigInt::from(1), BigInt::from(2)).unwrap();
        let third = Rational::new(BigInt::from(1), BigInt::from(3)).unwrap();
        let m = RatMatrix::from_rows(vec![
            vec![half.clone(), rat(1)],
            vec![third.clone(), rat(1)],
        ]);
        let red = rref(&m);
        assert_eq!(red.pivots, vec![0, 1]);
        assert_eq!(red.matrix, RatMatrix::from_i64_rows(&[vec![1, 0], vec![0, 1]]));
    }
}
