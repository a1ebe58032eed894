//! Exact-arithmetic analysis of planar interpolation point sets:
//! independence and poisedness decisions, fundamental polynomials,
//! essentially dependent cores, minimal containing curves and the scale
//! criterion with verifiable dependence witnesses.

pub mod arith;
pub mod cli;
pub mod curves;
pub mod error;
pub mod generators;
pub mod independence;
pub mod polyspace;
pub mod scale;
pub mod suites;

pub use arith::{rank_nullspace, rref, solve, RatMatrix, Rational};
pub use curves::{
    check_dnk_independence_on_curve, check_intersection_characterization, min_containing_degree,
    CurveWitness,
};
pub use error::{Error, Result};
pub use generators::{generate, ConicKind, CubicKind, GenKind, GenSpec, Generated};
pub use independence::{
    extract_essential_core, fundamental_polynomial, interpolate, is_essentially_dependent,
    is_independent, is_poised, is_solvable,
};
pub use polyspace::{
    collocation_matrix, d_gap, dim_pi, eval_poly, monomials, vanishing_space, Monomial, Point,
    PointSet, Poly2,
};
pub use scale::{
    classify, max_applicable_size, special_case_label, verify_witness, ScaleParams, ScaleVerdict,
    SpecialCaseLabel, Witness,
};
