//! Flexes of smooth plane quartics, their tangent lines, and the residual
//! points where those tangents meet the curve again.
//!
//! Exact work happens over `ℤ`/`ℚ` (the flex form and the residual eliminant);
//! point-level verification happens after reduction modulo good primes, over
//! finite fields `F_{p^k}` large enough to hold every flex.

mod chart;
mod curve;
mod eliminant;
mod flexes;
mod geometry;
mod smooth;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use chart::{
    chart_at, coordinate_changes, det_int, inverse_unimodular, find_chart, find_chart_with, flex_form, smoothness_witness, Chart,
    ChartAttempt, IntMatrix, IDENTITY, RETRY_BUDGET,
};
pub use curve::{hessian, CurveSpec, PlaneCurve};
pub use eliminant::{
    check_against_residuals, eliminant_mod_p, rational_reconstruction, reconstruct_eliminant, residual_eliminant,
    EliminantReport, ResidualCheck,
};
pub use flexes::{
    check_prime, default_primes, flex_report, flexes_in_chart, flexes_over, galois_field, good_primes, lift_matrix,
    lift_zpoly, residual_distinctness, residual_report, residuals, splitting_degree, verdict, FieldInfo, Flex,
    FlexCounts, FlexData, FlexEntry, FlexOptions, FlexReport, FlexSet, GfElem, GfPoint, Inconclusive, PointJson,
    ResidualVerdict, DEFAULT_PRIME_COUNT, PRIME_FLOOR,
};
pub use geometry::{
    apply_matrix, cross, dot, eval_form, gradient, intersection_multiplicity, line_expansion, residual_point,
    residual_vector, tangent_line, Line, ProjectivePoint,
};
pub use smooth::{has_common_zero, smoothness_check_mod_p};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuarticError {
    #[error("curve parse error: {0}")]
    Parse(String),
    #[error("the zero form does not define a curve")]
    ZeroForm,
    #[error("form is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("degree {0} is too small (flexes need degree at least 3)")]
    DegreeTooSmall(u32),
    #[error("this operation is specific to quartics")]
    NotQuartic,
    #[error("curve is singular (no prime of good reduction found)")]
    Singular,
    #[error("prime {0} divides every coefficient")]
    PrimeDividesContent(u64),
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is a singular point of the curve")]
    SingularPoint,
    #[error("line does not pass through the point")]
    LineMissesPoint,
    #[error("degenerate line")]
    DegenerateLine,
    #[error("line is a component of the curve")]
    LineInCurve,
    #[error("point is not a flex")]
    NotAFlex,
    #[error("prime {prime} is not good for this curve: {reason}")]
    BadPrime { prime: u64, reason: String },
    #[error("only {found} of {expected} flexes (with multiplicity) are defined over F_{{p^{k}}}")]
    FlexesNotRealized { found: usize, expected: usize, k: usize },
    #[error("no usable coordinate change among {} attempts", attempts.len())]
    ChartSearchFailed { attempts: Vec<ChartAttempt> },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
