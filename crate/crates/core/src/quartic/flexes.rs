//! Flexes over finite fields, their residual points, and the distinctness verdict.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::chart::{find_chart, Chart, IntMatrix};
use super::curve::CurveSpec;
use super::geometry::{
    apply_matrix, eval_form, intersection_multiplicity, residual_point, tangent_line, ProjectivePoint,
};
use super::smooth::smoothness_check_mod_p;
use super::{PlaneCurve, QuarticError};
use crate::algebra::{
    bigint_mod, certify_irreducible_over_q, coeff_strings, degree_pattern_mod_p, find_irreducible, hessian,
    is_prime, primes_after, reduce_mod, roots, ExtField, Field, GaloisField, IrreducibilityCertificate, MultiPoly,
    PolyRing, PrimeField, Ring, UniPoly, ZPoly, PRIME_LIMIT,
};

/// Good primes are searched above this bound.
pub const PRIME_FLOOR: u64 = 100;

/// Number of good primes used by default.
pub const DEFAULT_PRIME_COUNT: usize = 3;

/// Primes handed to the irreducibility certificate of the flex form.
const CERTIFICATE_PRIMES: usize = 30;

pub type GfElem = UniPoly<u64>;
pub type GfPoint = ProjectivePoint<GfElem>;

fn bad(prime: u64, reason: &str) -> QuarticError {
    QuarticError::BadPrime {
        prime,
        reason: reason.into(),
    }
}

fn leading_z(form: &MultiPoly<BigInt>, d: u32) -> BigInt {
    form.coeff(&[0, 0, d]).cloned().unwrap_or_default()
}

/// Checks that reduction mod `p` preserves the flexes of the chart: the
/// eliminant keeps its degree and its squarefree part stays squarefree,
/// distinct flexes keep distinct x-coordinates, and the curve stays smooth.
pub fn check_prime(chart: &Chart, p: u64) -> Result<(), QuarticError> {
    if p <= 3 {
        return Err(bad(p, "primes up to 3 are excluded"));
    }
    if p >= PRIME_LIMIT || !is_prime(p) {
        return Err(bad(p, "not a supported prime"));
    }
    let field = PrimeField::new(p)?;
    let d = chart.curve.degree();
    let lcs = [
        chart.flex_form.lc().cloned().unwrap_or_default(),
        leading_z(chart.curve.form(), d),
        leading_z(&chart.hessian, 3 * (d - 2)),
    ];
    if lcs.iter().any(|c| bigint_mod(c, p) == 0) {
        return Err(bad(p, "divides a leading coefficient"));
    }
    let r = PolyRing::new(field);
    let fsq = reduce_mod(&chart.flex_squarefree, &field);
    if !crate::algebra::is_squarefree(&r, &fsq) {
        return Err(bad(p, "divides the discriminant of the flex form"));
    }
    if r.gcd(&fsq, &reduce_mod(&chart.s11, &field)).degree() != Some(0) {
        return Err(bad(p, "two flexes share an x-coordinate"));
    }
    if !smoothness_check_mod_p(&chart.curve, p)? {
        return Err(bad(p, "curve is singular"));
    }
    Ok(())
}

/// Good primes above [`PRIME_FLOOR`], ascending.
pub fn good_primes(chart: &Chart) -> impl Iterator<Item = u64> + '_ {
    primes_after(PRIME_FLOOR).filter(|&p| check_prime(chart, p).is_ok())
}

/// Degree of the smallest field holding every flex mod `p`.
pub fn splitting_degree(chart: &Chart, p: u64) -> Result<usize, QuarticError> {
    let pattern = degree_pattern_mod_p(&chart.flex_squarefree, &PrimeField::new(p)?)?;
    Ok(pattern.into_iter().fold(1, |a, b| a.lcm(&b)))
}

/// A flex with its multiplicity as a root of the flex form.
#[derive(Clone, Debug, PartialEq)]
pub struct Flex {
    pub point: GfPoint,
    pub multiplicity: usize,
}

/// Flexes of a curve found in `F_{p^k}`, in original coordinates.
#[derive(Clone, Debug)]
pub struct FlexSet {
    pub field: GaloisField,
    pub prime: u64,
    pub flexes: Vec<Flex>,
    /// `3d(d − 2)`.
    pub expected: usize,
}

impl FlexSet {
    pub fn ext_degree(&self) -> usize {
        self.field.degree()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.flexes.iter().map(|f| f.multiplicity).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.total_multiplicity() == self.expected
    }
}

/// `F_{p^k}` with its defining polynomial chosen from `seed`.
pub fn galois_field(p: u64, k: usize, seed: u64) -> Result<GaloisField, QuarticError> {
    let fp = PrimeField::new(p)?;
    Ok(ExtField::new(fp, find_irreducible(&fp, k, seed)?)?)
}

pub fn lift_zpoly(field: &GaloisField, f: &ZPoly) -> UniPoly<GfElem> {
    let p = field.base().p();
    PolyRing::new(field.clone()).from_coeffs(f.coeffs().iter().map(|c| field.embed(&bigint_mod(c, p))).collect())
}

pub fn lift_matrix(field: &GaloisField, m: &IntMatrix) -> [[GfElem; 3]; 3] {
    m.map(|row| row.map(|c| field.from_i64(c)))
}

fn point_key(p: &GfPoint) -> Vec<Vec<u64>> {
    p.coords().iter().map(|c| c.coeffs().to_vec()).collect()
}

/// Flexes of the curve with coordinates in `F_{p^k}`, using the given chart.
/// `k` defaults to the degree of the splitting field of the flex form mod `p`.
pub fn flexes_in_chart(
    curve: &PlaneCurve,
    chart: &Chart,
    p: u64,
    k: Option<usize>,
    seed: u64,
) -> Result<FlexSet, QuarticError> {
    check_prime(chart, p)?;
    let k = match k {
        Some(k) => k,
        None => splitting_degree(chart, p)?,
    };
    let gf = galois_field(p, k, seed)?;
    let ring = PolyRing::new(gf.clone());
    let f = lift_zpoly(&gf, &chart.flex_form);
    let (s11, s10) = (lift_zpoly(&gf, &chart.s11), lift_zpoly(&gf, &chart.s10));
    let m = lift_matrix(&gf, &chart.matrix);
    let form = curve.form_over(&gf);
    let hess = hessian(&gf, &form);
    let mut flexes = Vec::new();
    for (x, multiplicity) in roots(&ring, &f, seed)? {
        let den = ring.eval(&s11, &x);
        let inv = gf
            .inv(&den)
            .ok_or_else(|| QuarticError::InvariantViolation("subresultant vanishes at a flex".into()))?;
        let z = gf.neg(&gf.mul(&ring.eval(&s10, &x), &inv));
        let v = apply_matrix(&gf, &m, &[x, gf.one(), z]);
        let point = ProjectivePoint::new(&gf, v).expect("M is invertible");
        if !gf.is_zero(&eval_form(&gf, &form, point.coords())) || !gf.is_zero(&eval_form(&gf, &hess, point.coords())) {
            return Err(QuarticError::InvariantViolation("computed flex is off the curve or Hessian".into()));
        }
        flexes.push(Flex { point, multiplicity });
    }
    flexes.sort_by_key(|f| point_key(&f.point));
    let d = curve.degree() as usize;
    Ok(FlexSet {
        field: gf,
        prime: p,
        flexes,
        expected: 3 * d * (d - 2),
    })
}

/// Flexes over `F_{p^k}` in the chart chosen by `seed`.
pub fn flexes_over(curve: &PlaneCurve, p: u64, k: Option<usize>, seed: u64) -> Result<FlexSet, QuarticError> {
    flexes_in_chart(curve, &find_chart(curve, seed)?, p, k, seed)
}

/// A flex with its tangent contact and residual point, checked for consistency.
#[derive(Clone, Debug)]
pub struct FlexData {
    pub flex: Flex,
    pub contact: usize,
    pub residual: GfPoint,
}

/// Residual points of every flex in the set, with post-hoc checks.
pub fn residuals(curve: &PlaneCurve, set: &FlexSet) -> Result<Vec<FlexData>, QuarticError> {
    if curve.degree() != 4 {
        return Err(QuarticError::NotQuartic);
    }
    let gf = &set.field;
    let form = curve.form_over(gf);
    let mut out = Vec::with_capacity(set.flexes.len());
    for flex in &set.flexes {
        let line = tangent_line(gf, &form, &flex.point)?;
        let contact = intersection_multiplicity(gf, &form, &line, &flex.point)?;
        let residual = residual_point(gf, &form, &flex.point)?;
        let on_line = gf.is_zero(&super::geometry::dot(gf, &line, residual.coords()));
        let on_curve = gf.is_zero(&eval_form(gf, &form, residual.coords()));
        if contact < 3 || !on_line || !on_curve {
            return Err(QuarticError::InvariantViolation("residual point is inconsistent".into()));
        }
        if (contact == 4) != (residual == flex.point) {
            return Err(QuarticError::InvariantViolation("hyperflex contact disagrees with residual".into()));
        }
        out.push(FlexData {
            flex: flex.clone(),
            contact,
            residual,
        });
    }
    Ok(out)
}

/// Why pairwise distinctness could not be certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Inconclusive {
    /// Some flexes are hyperflexes, whose residual is the flex itself.
    Hyperflexes {
        count: usize,
        distinct_flexes: usize,
        distinct_residuals: usize,
    },
    /// Two residuals coincide mod `p`; possibly only after reduction.
    Collision {
        distinct_flexes: usize,
        distinct_residuals: usize,
    },
}

/// Distinct mod a good prime implies distinct in characteristic zero; the
/// converse is never claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ResidualVerdict {
    Distinct {
        prime: u64,
        ext_degree: usize,
    },
    Inconclusive {
        prime: u64,
        ext_degree: usize,
        reason: Inconclusive,
    },
}

impl ResidualVerdict {
    pub fn is_distinct(&self) -> bool {
        matches!(self, ResidualVerdict::Distinct { .. })
    }
}

/// The verdict for a complete set of flexes with their residuals.
pub fn verdict(set: &FlexSet, data: &[FlexData]) -> Result<ResidualVerdict, QuarticError> {
    if !set.is_complete() {
        return Err(QuarticError::FlexesNotRealized {
            found: set.total_multiplicity(),
            expected: set.expected,
            k: set.ext_degree(),
        });
    }
    let (prime, ext_degree) = (set.prime, set.ext_degree());
    let hyper = data.iter().filter(|d| d.contact == 4).count();
    let distinct_flexes = data.len();
    let distinct_residuals = data.iter().map(|d| point_key(&d.residual)).collect::<BTreeSet<_>>().len();
    let reason = if hyper > 0 {
        Inconclusive::Hyperflexes {
            count: hyper,
            distinct_flexes,
            distinct_residuals,
        }
    } else if distinct_residuals < set.expected {
        Inconclusive::Collision {
            distinct_flexes,
            distinct_residuals,
        }
    } else {
        return Ok(ResidualVerdict::Distinct { prime, ext_degree });
    };
    Ok(ResidualVerdict::Inconclusive {
        prime,
        ext_degree,
        reason,
    })
}

/// Whether the residual points of the flexes are pairwise distinct, decided mod `p`.
pub fn residual_distinctness(
    curve: &PlaneCurve,
    p: u64,
    k: Option<usize>,
    seed: u64,
) -> Result<ResidualVerdict, QuarticError> {
    let set = flexes_over(curve, p, k, seed)?;
    let data = residuals(curve, &set)?;
    verdict(&set, &data)
}

/// Knobs shared by the report builders.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FlexOptions {
    pub prime: Option<u64>,
    pub ext: Option<usize>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldInfo {
    pub prime: u64,
    pub ext_degree: usize,
    /// Defining polynomial of `F_{p^k}` over `F_p`, ascending.
    pub modulus: Vec<u64>,
}

/// Field elements are written as coefficient vectors in the power basis.
pub type PointJson = [Vec<u64>; 3];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlexEntry {
    pub point: PointJson,
    pub multiplicity: usize,
    pub contact: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlexCounts {
    pub with_multiplicity: usize,
    pub distinct: usize,
    pub hyperflexes: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlexReport {
    pub curve: CurveSpec,
    pub coordinate_change: IntMatrix,
    pub flex_form: Vec<String>,
    pub degree: usize,
    pub squarefree_degree: usize,
    /// Factor degrees of the squarefree flex form modulo good primes.
    pub patterns: BTreeMap<u64, Vec<usize>>,
    pub flex_irreducibility: IrreducibilityCertificate,
    pub field: FieldInfo,
    pub flexes: Vec<FlexEntry>,
    pub residuals: Vec<PointJson>,
    pub counts: FlexCounts,
    /// `None` when some flexes lie outside the chosen field.
    pub distinct_residuals: Option<ResidualVerdict>,
}

fn point_json(field: &GaloisField, p: &GfPoint) -> PointJson {
    p.coords().clone().map(|c| {
        let mut v = c.into_coeffs();
        v.resize(field.degree(), 0);
        v
    })
}

/// Default primes for a chart: among the first good primes, the one needing
/// the smallest extension comes first.
pub fn default_primes(chart: &Chart) -> Result<Vec<(u64, usize)>, QuarticError> {
    let mut out = Vec::new();
    for p in good_primes(chart).take(DEFAULT_PRIME_COUNT) {
        out.push((p, splitting_degree(chart, p)?));
    }
    out.sort_by_key(|&(p, k)| (k, p));
    Ok(out)
}

fn build_report(
    curve: &PlaneCurve,
    chart: &Chart,
    set: &FlexSet,
    patterns: BTreeMap<u64, Vec<usize>>,
) -> Result<FlexReport, QuarticError> {
    let data = if curve.degree() == 4 { residuals(curve, set)? } else { Vec::new() };
    let distinct_residuals = if curve.degree() == 4 && set.is_complete() {
        Some(verdict(set, &data)?)
    } else {
        None
    };
    let gf = &set.field;
    let certificate_primes: Vec<u64> = primes_after(3).take(CERTIFICATE_PRIMES).collect();
    Ok(FlexReport {
        curve: curve.to_spec(),
        coordinate_change: chart.matrix,
        flex_form: coeff_strings(&chart.flex_form),
        degree: chart.flex_form.deg0(),
        squarefree_degree: chart.flex_squarefree.deg0(),
        patterns,
        flex_irreducibility: certify_irreducible_over_q(&chart.flex_squarefree, &certificate_primes)?,
        field: FieldInfo {
            prime: set.prime,
            ext_degree: gf.degree(),
            modulus: gf.modulus().coeffs().to_vec(),
        },
        flexes: set
            .flexes
            .iter()
            .enumerate()
            .map(|(i, f)| FlexEntry {
                point: point_json(gf, &f.point),
                multiplicity: f.multiplicity,
                contact: data.get(i).map_or(0, |d| d.contact),
            })
            .collect(),
        residuals: data.iter().map(|d| point_json(gf, &d.residual)).collect(),
        counts: FlexCounts {
            with_multiplicity: set.total_multiplicity(),
            distinct: set.flexes.len(),
            hyperflexes: data.iter().filter(|d| d.contact == 4).count(),
            expected: set.expected,
        },
        distinct_residuals,
    })
}

fn patterns_for(chart: &Chart, primes: impl IntoIterator<Item = u64>) -> Result<BTreeMap<u64, Vec<usize>>, QuarticError> {
    let mut out = BTreeMap::new();
    for p in primes {
        out.insert(p, degree_pattern_mod_p(&chart.flex_squarefree, &PrimeField::new(p)?)?);
    }
    Ok(out)
}

/// Flexes, residuals and verdict at one prime: the given one, or the default
/// prime needing the smallest extension.
pub fn flex_report(curve: &PlaneCurve, opts: FlexOptions) -> Result<FlexReport, QuarticError> {
    let chart = find_chart(curve, opts.seed)?;
    let defaults = default_primes(&chart)?;
    let prime = match opts.prime {
        Some(p) => p,
        None => defaults.first().map(|&(p, _)| p).ok_or(QuarticError::Singular)?,
    };
    let set = flexes_in_chart(curve, &chart, prime, opts.ext, opts.seed)?;
    let patterns = patterns_for(&chart, defaults.iter().map(|&(p, _)| p).chain([prime]))?;
    build_report(curve, &chart, &set, patterns)
}

/// Searches good primes below `limit` for a distinctness certificate. Stops at
/// the first `Distinct` verdict, or at the first hyperflex verdict, since
/// flex multiplicities at good primes are those over `ℚ`.
pub fn residual_report(curve: &PlaneCurve, opts: FlexOptions, limit: u64) -> Result<FlexReport, QuarticError> {
    if opts.prime.is_some() {
        return flex_report(curve, opts);
    }
    let chart = find_chart(curve, opts.seed)?;
    let defaults = default_primes(&chart)?;
    let candidates: Vec<u64> = defaults
        .iter()
        .map(|&(p, _)| p)
        .chain(good_primes(&chart).take_while(|&p| p < limit))
        .collect();
    let mut seen = BTreeSet::new();
    let mut last = None;
    for p in candidates.into_iter().filter(|p| seen.insert(*p)) {
        let set = flexes_in_chart(curve, &chart, p, opts.ext, opts.seed)?;
        let patterns = patterns_for(&chart, defaults.iter().map(|&(q, _)| q).chain([p]))?;
        let report = build_report(curve, &chart, &set, patterns)?;
        let stop = match &report.distinct_residuals {
            Some(ResidualVerdict::Distinct { .. }) => true,
            Some(ResidualVerdict::Inconclusive { reason, .. }) => matches!(reason, Inconclusive::Hyperflexes { .. }),
            None => false,
        };
        if stop {
            return Ok(report);
        }
        last = Some(report);
    }
    last.ok_or(QuarticError::Singular)
}
