use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::QuarticError;
use crate::algebra::{hessian as form_hessian, parse_rational, Exponent, Integers, MultiPoly, Ring};

/// A plane curve given by a nonzero homogeneous form of degree `d` with
/// integer coefficients. Rational input is scaled to a primitive integer form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    form: MultiPoly<BigInt>,
    degree: u32,
}

/// JSON form: `{"degree": 4, "terms": [[[4,0,0], "1"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub degree: u32,
    pub terms: Vec<(Exponent, String)>,
}

impl PlaneCurve {
    /// Builds a curve from an integer form, dividing out the content.
    pub fn new(form: MultiPoly<BigInt>, degree: u32) -> Result<Self, QuarticError> {
        if form.is_zero() {
            return Err(QuarticError::ZeroForm);
        }
        if form.homogeneous_degree() != Some(degree) {
            return Err(QuarticError::NotHomogeneous(degree));
        }
        let content = form.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        let form = if content.is_one() {
            form
        } else {
            MultiPoly::from_terms(&Integers, form.terms().map(|(e, c)| (*e, c / &content)))
        };
        Ok(PlaneCurve { form, degree })
    }

    pub fn from_i64_terms(degree: u32, terms: &[(Exponent, i64)]) -> Result<Self, QuarticError> {
        let form = MultiPoly::from_terms(&Integers, terms.iter().map(|(e, c)| (*e, BigInt::from(*c))));
        Self::new(form, degree)
    }

    pub fn from_spec(spec: &CurveSpec) -> Result<Self, QuarticError> {
        let mut rational = Vec::with_capacity(spec.terms.len());
        for (e, c) in &spec.terms {
            let q = parse_rational(c).ok_or_else(|| QuarticError::Parse(format!("bad coefficient {c:?}")))?;
            rational.push((*e, q));
        }
        let denom = rational
            .iter()
            .fold(BigInt::one(), |acc, (_, q)| acc.lcm(q.denom()));
        let form = MultiPoly::from_terms(
            &Integers,
            rational
                .into_iter()
                .map(|(e, q)| (e, (q * BigRational::from_integer(denom.clone())).to_integer())),
        );
        Self::new(form, spec.degree)
    }

    pub fn from_json(text: &str) -> Result<Self, QuarticError> {
        let spec: CurveSpec = serde_json::from_str(text).map_err(|e| QuarticError::Parse(e.to_string()))?;
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> CurveSpec {
        CurveSpec {
            degree: self.degree,
            terms: self.form.terms().map(|(e, c)| (*e, c.to_string())).collect(),
        }
    }

    /// `x⁴ + y⁴ + z⁴`.
    pub fn fermat_quartic() -> Self {
        Self::from_i64_terms(4, &[([4, 0, 0], 1), ([0, 4, 0], 1), ([0, 0, 4], 1)]).expect("valid")
    }

    /// `x³y + y³z + z³x`.
    pub fn klein_quartic() -> Self {
        Self::from_i64_terms(4, &[([3, 1, 0], 1), ([0, 3, 1], 1), ([1, 0, 3], 1)]).expect("valid")
    }

    pub fn form(&self) -> &MultiPoly<BigInt> {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The form with coefficients mapped into `ring`.
    pub fn form_over<R: Ring>(&self, ring: &R) -> MultiPoly<R::Elem> {
        self.form.map(ring, |c| ring.from_bigint(c))
    }

    /// `C(M·v)` for an integer matrix `M`.
    pub fn transformed(&self, m: &[[i64; 3]; 3]) -> Result<Self, QuarticError> {
        let mz = m.map(|r| r.map(BigInt::from));
        Self::new(self.form.linear_substitution(&Integers, &mz), self.degree)
    }

    /// Largest absolute coefficient, for diagnostics.
    pub fn height(&self) -> BigInt {
        self.form.terms().map(|(_, c)| c.abs()).max().unwrap_or_default()
    }
}

/// Determinant of the matrix of second partial derivatives, homogeneous of
/// degree `3(d − 2)` (zero or constant for `d ≤ 2`).
pub fn hessian(curve: &PlaneCurve) -> MultiPoly<BigInt> {
    form_hessian(&Integers, curve.form())
}
