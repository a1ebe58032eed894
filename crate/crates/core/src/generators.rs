//! Seeded constructors of structured point configurations: collinear sets,
//! rationally parametrized conics and cubics, line-grid intersections and
//! generic random sets. Every output carries provenance polynomials that
//! vanish on all returned points, checked at construction time.
//!
//! Randomness comes from ChaCha8 seeded with the spec's 64-bit seed, so
//! identical specs reproduce identical outputs on any platform.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::polyspace::{eval_poly, Point, PointSet, Poly2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConicKind {
    Parabola,
    Hyperbola,
    TwoLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicKind {
    Graph,
    Nodal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Collinear,
    Conic(ConicKind),
    Cubic(CubicKind),
    Grid { r_lines: u32, s_lines: u32 },
    Random { bound: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub count: usize,
    pub seed: u64,
}

/// A generated configuration with the curve(s) it lies on.
#[derive(Debug, Clone)]
pub struct Generated {
    pub points: PointSet,
    pub provenance: Vec<Poly2>,
    pub description: String,
}

const RETRY_BUDGET: u64 = 32;

fn sub_seed(seed: u64, attempt: u64) -> u64 {
    seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Distinct integers from a window sized to the request.
fn distinct_ints(rng: &mut ChaCha8Rng, count: usize, exclude_zero: bool) -> Vec<i64> {
    let half = (2 * count as i64).max(8);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = rng.random_range(-half..=half);
        if exclude_zero && v == 0 {
            continue;
        }
        if seen.insert(v) {
            out.push(v);
        }
    }
    out
}

fn line_poly(a: i64, b: i64, c: i64) -> Poly2 {
    // a*x + b*y + c
    Poly2::from_terms(
        1,
        &[
            (1, 0, Rational::from_int(a)),
            (0, 1, Rational::from_int(b)),
            (0, 0, Rational::from_int(c)),
        ],
    )
}

fn assert_provenance(points: &PointSet, provenance: &[Poly2]) {
    for p in provenance {
        for pt in points.points() {
            assert!(
                eval_poly(p, pt).is_zero(),
                "provenance polynomial must vanish on every generated point"
            );
        }
    }
}

/// Generates the configuration described by `spec`. Pure in the spec:
/// identical seeds give identical outputs.
pub fn generate(spec: &GenSpec) -> Result<Generated> {
    match spec.kind {
        GenKind::Grid { r_lines, s_lines } => {
            if r_lines < 1 || s_lines < 1 {
                return Err(Error::InvalidParams("grid needs at least one line per family".into()));
            }
        }
        _ => {
            if spec.count < 1 {
                return Err(Error::InvalidParams("count must be at least 1".into()));
            }
        }
    }
    let mut last_err = None;
    for attempt in 0..RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(spec.seed, attempt));
        match try_generate(spec, &mut rng) {
            Ok(g) => {
                assert_provenance(&g.points, &g.provenance);
                return Ok(g);
            }
            Err(e @ Error::DegenerateConfiguration(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or_else(|| {
        Error::DegenerateConfiguration("retry budget exhausted".into())
    }))
}

fn degenerate<T>(msg: &str) -> Result<T> {
    Err(Error::DegenerateConfiguration(msg.into()))
}

fn try_generate(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Result<Generated> {
    match spec.kind {
        GenKind::Collinear => {
            let x0 = rng.random_range(-5i64..=5);
            let y0 = rng.random_range(-5i64..=5);
            let (dx, dy) = loop {
                let dx = rng.random_range(-4i64..=4);
                let dy = rng.random_range(-4i64..=4);
                if (dx, dy) != (0, 0) {
                    break (dx, dy);
                }
            };
            let ts = distinct_ints(rng, spec.count, false);
            let points = PointSet::new(
                ts.iter()
                    .map(|&t| Point::from_ints(x0 + t * dx, y0 + t * dy))
                    .collect(),
            )
            .map_err(|_| Error::DegenerateConfiguration("collinear points collided".into()))?;
            // dy*(x - x0) - dx*(y - y0)
            let line = line_poly(dy, -dx, dx * y0 - dy * x0);
            Ok(Generated {
                points,
                provenance: vec![line],
                description: format!("line through ({x0},{y0}) with direction ({dx},{dy})"),
            })
        }
        GenKind::Conic(kind) => match kind {
            ConicKind::Parabola => {
                let ts = distinct_ints(rng, spec.count, false);
                let points = PointSet::new(
                    ts.iter().map(|&t| Point::from_ints(t, t * t)).collect(),
                )
                .expect("distinct parameters give distinct parabola points");
                // y - x^2
                let conic = Poly2::from_terms(
                    2,
                    &[(0, 1, Rational::one()), (2, 0, -Rational::one())],
                );
                Ok(Generated {
                    points,
                    provenance: vec![conic],
                    description: "parabola y = x^2".into(),
                })
            }
            ConicKind::Hyperbola => {
                let ts = distinct_ints(rng, spec.count, true);
                let points = PointSet::new(
                    ts.iter()
                        .map(|&t| {
                            Point::new(
                                Rational::from_int(t),
                                Rational::from_int(t).recip().expect("t is nonzero"),
                            )
                        })
                        .collect(),
                )
                .expect("distinct parameters give distinct hyperbola points");
                // x*y - 1
                let conic = Poly2::from_terms(
                    2,
                    &[(1, 1, Rational::one()), (0, 0, -Rational::one())],
                );
                Ok(Generated {
                    points,
                    provenance: vec![conic],
                    description: "hyperbola x*y = 1".into(),
                })
            }
            ConicKind::TwoLines => {
                // two distinct non-parallel lines y = m_i*x + c_i
                let m1 = rng.random_range(-3i64..=3);
                let c1 = rng.random_range(-5i64..=5);
                let (m2, c2) = loop {
                    let m2 = rng.random_range(-3i64..=3);
                    let c2 = rng.random_range(-5i64..=5);
                    if m2 != m1 {
                        break (m2, c2);
                    }
                };
                let n1 = spec.count / 2 + spec.count % 2;
                let n2 = spec.count / 2;
                let t1 = distinct_ints(rng, n1, false);
                let t2 = distinct_ints(rng, n2, false);
                let mut pts: Vec<Point> = t1
                    .iter()
                    .map(|&t| Point::from_ints(t, m1 * t + c1))
                    .collect();
                pts.extend(t2.iter().map(|&t| Point::from_ints(t, m2 * t + c2)));
                let points = match PointSet::new(pts) {
                    Ok(p) => p,
                    Err(_) => return degenerate("two-lines sample hit the intersection twice"),
                };
                let l1 = line_poly(m1, -1, c1);
                let l2 = line_poly(m2, -1, c2);
                Ok(Generated {
                    points,
                    provenance: vec![l1.mul(&l2)],
                    description: format!("line pair y={m1}x+{c1} and y={m2}x+{c2}"),
                })
            }
        },
        GenKind::Cubic(kind) => match kind {
            CubicKind::Graph => {
                let ts = distinct_ints(rng, spec.count, false);
                let points = PointSet::new(
                    ts.iter().map(|&t| Point::from_ints(t, t * t * t)).collect(),
                )
                .expect("distinct parameters give distinct graph-cubic points");
                // y - x^3
                let cubic = Poly2::from_terms(
                    3,
                    &[(0, 1, Rational::one()), (3, 0, -Rational::one())],
                );
                Ok(Generated {
                    points,
                    provenance: vec![cubic],
                    description: "cubic y = x^3".into(),
                })
            }
            CubicKind::Nodal => {
                let ts = distinct_ints(rng, spec.count, false);
                let pts: Vec<Point> = ts
                    .iter()
                    .map(|&t| Point::from_ints(t * t - 1, t * (t * t - 1)))
                    .collect();
                let points = match PointSet::new(pts) {
                    Ok(p) => p,
                    Err(_) => return degenerate("nodal-cubic parameters collided at the node"),
                };
                // y^2 - x^3 - x^2
                let cubic = Poly2::from_terms(
                    3,
                    &[
                        (0, 2, Rational::one()),
                        (3, 0, -Rational::one()),
                        (2, 0, -Rational::one()),
                    ],
                );
                Ok(Generated {
                    points,
                    provenance: vec![cubic],
                    description: "nodal cubic y^2 = x^2(x+1)".into(),
                })
            }
        },
        GenKind::Grid { r_lines, s_lines } => {
            // family A: vertical lines x = a_i; family B: lines y = m_j*x + c_j
            let a = distinct_ints(rng, r_lines as usize, false);
            let mut blines: Vec<(i64, i64)> = Vec::new();
            let mut guard = 0;
            while blines.len() < s_lines as usize {
                guard += 1;
                if guard > 1000 {
                    return degenerate("could not draw distinct cross-family lines");
                }
                let m = rng.random_range(-3i64..=3);
                let c = rng.random_range(-9i64..=9);
                if !blines.contains(&(m, c)) {
                    blines.push((m, c));
                }
            }
            let mut pts = Vec::new();
            for &ai in &a {
                for &(m, c) in &blines {
                    pts.push(Point::from_ints(ai, m * ai + c));
                }
            }
            let points = match PointSet::new(pts) {
                Ok(p) => p,
                Err(_) => return degenerate("grid lines are concurrent at a sample column"),
            };
            let sigma_r = a
                .iter()
                .map(|&ai| line_poly(1, 0, -ai))
                .reduce(|acc, l| acc.mul(&l))
                .expect("at least one vertical line");
            let sigma_s = blines
                .iter()
                .map(|&(m, c)| line_poly(m, -1, c))
                .reduce(|acc, l| acc.mul(&l))
                .expect("at least one cross line");
            Ok(Generated {
                points,
                provenance: vec![sigma_r, sigma_s],
                description: format!("{r_lines}x{s_lines} line grid"),
            })
        }
        GenKind::Random { bound } => {
            if bound < 1 {
                return Err(Error::InvalidParams("random bound must be positive".into()));
            }
            let mut seen = HashSet::new();
            let mut pts = Vec::new();
            let mut guard = 0;
            while pts.len() < spec.count {
                guard += 1;
                if guard > 100_000 {
                    return degenerate("random point space exhausted");
                }
                let x = rng.random_range(-bound..=bound);
                let y = rng.random_range(-bound..=bound);
                if seen.insert((x, y)) {
                    pts.push(Point::from_ints(x, y));
                }
            }
            Ok(Generated {
                points: PointSet::new(pts).expect("hash set guarantees distinctness"),
                provenance: Vec::new(),
                description: format!("random integer points in [-{bound},{bound}]^2"),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_2x3_shape() {
        let g = generate(&GenSpec {
            kind: GenKind::Grid { r_lines: 2, s_lines: 3 },
            count: 0,
            seed: 42,
        })
        .unwrap();
        assert_eq!(g.points.len(), 6);
        assert_eq!(g.provenance.len(), 2);
        assert_eq!(g.provenance[0].effective_degree(), 2);
        assert_eq!(g.provenance[1].effective_degree(), 3);
    }

    #[test]
    fn parabola_points_satisfy_curve() {
        let g = generate(&GenSpec {
            kind: GenKind::Conic(ConicKind::Parabola),
            count: 8,
            seed: 7,
        })
        .unwrap();
        assert_eq!(g.points.len(), 8);
        for p in g.points.points() {
            assert_eq!(p.y, p.x.pow(2));
        }
    }

    #[test]
    fn nodal_cubic_parametrization() {
        // t = 2 gives (3, 6) and 6^2 = 27 + 9
        let p = Point::from_ints(2 * 2 - 1, 2 * (2 * 2 - 1));
        assert_eq!(p, Point::from_ints(3, 6));
        let g = generate(&GenSpec {
            kind: GenKind::Cubic(CubicKind::Nodal),
            count: 7,
            seed: 3,
        })
        .unwrap();
        assert_eq!(g.points.len(), 7);
    }

    #[test]
    fn generation_is_pure_in_seed() {
        let spec = GenSpec {
            kind: GenKind::Random { bound: 20 },
            count: 10,
            seed: 123,
        };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a.points, b.points);
        let c = generate(&GenSpec { seed: 124, ..spec }).unwrap();
        assert_ne!(a.points, c.points);
    }

    #[test]
    fn every_kind_generates_with_valid_provenance() {
        let kinds = [
            GenKind::Collinear,
            GenKind::Conic(ConicKind::Parabola),
            GenKind::Conic(ConicKind::Hyperbola),
            GenKind::Conic(ConicKind::TwoLines),
            GenKind::Cubic(CubicKind::Graph),
            GenKind::Cubic(CubicKind::Nodal),
            GenKind::Grid { r_lines: 3, s_lines: 4 },
            GenKind::Random { bound: 15 },
        ];
        for (i, kind) in kinds.into_iter().enumerate() {
            let g = generate(&GenSpec { kind, count: 9, seed: 1000 + i as u64 }).unwrap();
            assert!(g.points.len() >= 9 || matches!(kind, GenKind::Grid { .. }));
            // provenance vanishing is asserted inside generate; re-check here
            for prov in &g.provenance {
                for pt in g.points.points() {
                    assert!(eval_poly(prov, pt).is_zero());
                }
            }
        }
    }

    #[test]
    fn hyperbola_has_rational_points() {
        let g = generate(&GenSpec {
            kind: GenKind::Conic(ConicKind::Hyperbola),
            count: 6,
            seed: 9,
        })
        .unwrap();
        for p in g.points.points() {
            assert_eq!(&p.x * &p.y, Rational::one());
        }
    }
}
