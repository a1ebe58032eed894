//! Property tests: the elimination kernel against a naive textbook
//! oracle, and the structural invariants of the interpolation operations.

use proptest::collection::vec;
use proptest::prelude::*;

use poisekit::{
    collocation_matrix, dim_pi, eval_poly, fundamental_polynomial, is_independent,
    rank_nullspace, rref, solve, vanishing_space, Point, PointSet, Poly2, RatMatrix, Rational,
};

/// Textbook rational Gauss-Jordan, deliberately independent of the
/// fraction-free path in the library.
fn naive_rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut pr = 0usize;
    for pc in 0..m.cols() {
        if pr == a.len() {
            break;
        }
        let Some(found) = (pr..a.len()).find(|&i| !a[i][pc].is_zero()) else {
            continue;
        };
        a.swap(found, pr);
        let inv = a[pr][pc].recip().unwrap();
        for c in 0..m.cols() {
            a[pr][c] = &a[pr][c] * &inv;
        }
        for i in 0..a.len() {
            if i == pr || a[i][pc].is_zero() {
                continue;
            }
            let f = a[i][pc].clone();
            for c in 0..m.cols() {
                a[i][c] = &a[i][c] - &(&f * &a[pr][c]);
            }
        }
        pivots.push(pc);
        pr += 1;
    }
    if a.is_empty() {
        return (RatMatrix::zero(0, m.cols()), pivots);
    }
    (RatMatrix::from_rows(a), pivots)
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| {
        Rational::new(n.into(), d.into()).unwrap()
    })
}

fn matrix_strategy() -> impl Strategy<Value = RatMatrix> {
    (0usize..=5, 1usize..=6).prop_flat_map(|(rows, cols)| {
        vec(vec(rational_strategy(), cols), rows)
            .prop_map(move |rws| {
                if rws.is_empty() {
                    RatMatrix::zero(0, cols)
                } else {
                    RatMatrix::from_rows(rws)
                }
            })
    })
}

fn pointset_strategy(max_len: usize) -> impl Strategy<Value = PointSet> {
    vec((-8i64..=8, -8i64..=8), 1..=max_len).prop_map(|coords| {
        let mut seen = std::collections::HashSet::new();
        let pts: Vec<Point> = coords
            .into_iter()
            .filter(|c| seen.insert(*c))
            .map(|(x, y)| Point::from_ints(x, y))
            .collect();
        PointSet::new(pts).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_matches_naive_oracle(m in matrix_strategy()) {
        let red = rref(&m);
        let (naive, naive_pivots) = naive_rref(&m);
        prop_assert_eq!(red.pivots, naive_pivots);
        prop_assert_eq!(red.matrix, naive);
    }

    #[test]
    fn rank_equals_transpose_rank(m in matrix_strategy()) {
        let (r1, _) = rank_nullspace(&m);
        let (r2, _) = rank_nullspace(&m.transpose());
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn nullspace_vectors_annihilate(m in matrix_strategy()) {
        let (rank, basis) = rank_nullspace(&m);
        prop_assert_eq!(rank + basis.len(), m.cols());
        for v in &basis {
            prop_assert!(m.mul_vec(v).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix_strategy()) {
        let once = rref(&m);
        let twice = rref(&once.matrix);
        prop_assert_eq!(&once.matrix, &twice.matrix);
        prop_assert_eq!(&once.pivots, &twice.pivots);
    }

    #[test]
    fn solve_reproduces_rhs(m in matrix_strategy(), seedvals in vec(rational_strategy(), 6)) {
        let b: Vec<Rational> = seedvals.into_iter().take(m.rows())
            .chain(std::iter::repeat(Rational::zero()))
            .take(m.rows())
            .collect();
        match solve(&m, &b) {
            Ok(x) => prop_assert_eq!(m.mul_vec(&x), b),
            Err(_) => {
                // oracle: inconsistency means the augmented rank grows
                let (aug, _) = rank_nullspace(&m.augment(&b));
                let (plain, _) = rank_nullspace(&m);
                prop_assert_eq!(aug, plain + 1);
            }
        }
    }

    #[test]
    fn collocation_row_is_evaluation_functional(
        x in pointset_strategy(6),
        coeffs in vec(rational_strategy(), 10),
    ) {
        let n = 3u32;
        let p = Poly2::new(n, coeffs);
        let m = collocation_matrix(&x, n);
        for (i, pt) in x.points().iter().enumerate() {
            let dot = m.row(i).iter().zip(p.coeffs())
                .fold(Rational::zero(), |acc, (a, b)| acc + &(a * b));
            prop_assert_eq!(dot, eval_poly(&p, pt));
        }
    }

    #[test]
    fn rank_plus_vanishing_dim_is_full(x in pointset_strategy(8), n in 1u32..=4) {
        let (rank, _) = rank_nullspace(&collocation_matrix(&x, n));
        let vs = vanishing_space(&x, n);
        prop_assert_eq!(rank + vs.len(), dim_pi(n));
        for p in &vs {
            for pt in x.points() {
                prop_assert!(eval_poly(p, pt).is_zero());
            }
        }
    }

    #[test]
    fn independence_is_monotone(x in pointset_strategy(7), n in 1u32..=3) {
        if is_independent(&x, n) {
            for drop in 0..x.len() {
                prop_assert!(is_independent(&x.without(drop), n));
            }
        } else {
            // a strict superset of a dependent set stays dependent
            let mut pts = x.points().to_vec();
            let extra = (0..).map(|i| Point::from_ints(50 + i, 31))
                .find(|p| !pts.contains(p)).unwrap();
            pts.push(extra);
            let bigger = PointSet::new(pts).unwrap();
            prop_assert!(!is_independent(&bigger, n));
        }
    }

    #[test]
    fn fundamental_exists_iff_rank_drops(x in pointset_strategy(6), n in 1u32..=3) {
        for a in 0..x.len() {
            let (full, _) = rank_nullspace(&collocation_matrix(&x, n));
            let (without, _) = rank_nullspace(&collocation_matrix(&x.without(a), n));
            let has = fundamental_polynomial(&x, a, n).is_ok();
            prop_assert_eq!(has, full == without + 1);
        }
    }
}

/// Frozen expectations for the nullspace-derived examples, computed with
/// the naive oracle.
#[test]
fn derived_vanishing_examples_via_oracle() {
    let line = PointSet::new(vec![
        Point::from_ints(0, 0),
        Point::from_ints(1, 0),
        Point::from_ints(2, 0),
    ])
    .unwrap();
    let (_, pivots) = naive_rref(&collocation_matrix(&line, 1));
    assert_eq!(pivots.len(), 2);
    assert_eq!(vanishing_space(&line, 1).len(), 3 - 2);

    let mut grid = Vec::new();
    for x in 0..=1 {
        for y in 0..=2 {
            grid.push(Point::from_ints(x, y));
        }
    }
    let grid = PointSet::new(grid).unwrap();
    let (_, pivots) = naive_rref(&collocation_matrix(&grid, 2));
    assert_eq!(pivots.len(), 5);
    assert_eq!(vanishing_space(&grid, 2).len(), 6 - 5);
}
