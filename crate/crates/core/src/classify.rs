//! General-type decision for `Cⁿ/G` and the Kodaira trichotomy of `SymⁿC`.
//!
//! `Cⁿ/G` is of general type exactly when `g > m + 1`, where `m` counts the
//! transpositions of the transitive group `G` moving a given point. Results that
//! depend on conjectures or genericity hypotheses are attached as
//! [`Advisory`] records and never affect the computed verdict.

use serde::Serialize;

use crate::perm::{transposition_count_m, PermError, PermGroup};

/// Kodaira type of the symmetric power `SymⁿC` for a curve of genus `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KodairaKind {
    /// `n < g`.
    GeneralType,
    /// `n = g`: birational to the Jacobian.
    BirationalAbelian,
    /// `n > g`.
    Uniruled,
}

pub fn sym_power_kind(genus: u64, n: u64) -> KodairaKind {
    use std::cmp::Ordering::*;
    match n.cmp(&genus) {
        Less => KodairaKind::GeneralType,
        Equal => KodairaKind::BirationalAbelian,
        Greater => KodairaKind::Uniruled,
    }
}

/// A tagged statement attached to a report. Conditional statements carry text
/// starting with `CONDITIONAL:`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Advisory {
    pub tag: &'static str,
    pub conditional: bool,
    pub text: String,
}

impl Advisory {
    fn fact(tag: &'static str, text: impl Into<String>) -> Self {
        Advisory {
            tag,
            conditional: false,
            text: text.into(),
        }
    }

    fn conditional(tag: &'static str, text: impl AsRef<str>) -> Self {
        Advisory {
            tag,
            conditional: true,
            text: format!("CONDITIONAL: {}", text.as_ref()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub n: usize,
    pub m: usize,
    pub n_prime: usize,
    pub solvable: bool,
    pub transitive: bool,
    pub genus: u64,
    pub is_general_type: bool,
    pub threshold_genus: u64,
    pub advisories: Vec<Advisory>,
}

/// Classifies `Cⁿ/G` for a transitive `G` and a curve of the given genus.
pub fn classify_quotient(g: &PermGroup, genus: u64) -> Result<QuotientReport, PermError> {
    let m = transposition_count_m(g)?;
    let n = g.degree();
    let solvable = g.is_solvable();
    let threshold_genus = m as u64 + 2;
    let is_general_type = genus > m as u64 + 1;
    let mut advisories = Vec::new();

    if genus <= 1 {
        advisories.push(Advisory::fact(
            "low_genus",
            format!(
                "genus {genus} is below 2; the criterion g > m + 1 is meant for curves of genus at least 2"
            ),
        ));
    }
    if m + 1 == n {
        // G = S_n, so the quotient is the symmetric power itself.
        let kind = sym_power_kind(genus, n as u64);
        advisories.push(Advisory::fact(
            "symmetric_power",
            format!("G is the full symmetric group, so the quotient is Sym^{n} C, which is {kind:?} for g = {genus}"),
        ));
        if n == 2 && genus == 2 {
            advisories.push(Advisory::fact(
                "genus_two_hyperelliptic",
                "Sym^2 C of a genus-2 curve is birational to its Jacobian (points over quadratic fields from the hyperelliptic double cover); not of general type",
            ));
        }
        if n == 4 && genus == 3 {
            advisories.push(Advisory::fact(
                "genus_three_plane_quartic",
                "Sym^4 C of a genus-3 curve is uniruled over its Jacobian (points from lines meeting a plane quartic have Galois group S_4); Kodaira dimension is -infinity",
            ));
        }
    }
    if solvable && genus >= 5 {
        advisories.push(Advisory::fact(
            "solvable_general_type",
            format!("G is solvable, so m + 1 <= 4 < {genus} = g and C^{n}/G is of general type"),
        ));
        advisories.push(Advisory::conditional(
            "bombieri_lang",
            format!("assuming the Bombieri-Lang conjecture, the rational points of C^{n}/G are not Zariski dense"),
        ));
    }

    Ok(QuotientReport {
        n,
        m,
        n_prime: n / (m + 1),
        solvable,
        transitive: true,
        genus,
        is_general_type,
        threshold_genus,
        advisories,
    })
}

/// Result of checking `m + 1 ≤ 4` for solvable groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolvableBound {
    pub m: usize,
    pub solvable: bool,
    /// `m + 1 ≤ 4` for solvable groups; vacuously true otherwise.
    pub bound_satisfied: bool,
    /// False for non-solvable groups.
    pub applicable: bool,
}

pub fn solvable_transposition_bound(g: &PermGroup) -> Result<SolvableBound, PermError> {
    let m = transposition_count_m(g)?;
    let solvable = g.is_solvable();
    Ok(SolvableBound {
        m,
        solvable,
        bound_satisfied: !solvable || m < 4,
        applicable: solvable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ZariskiVerdict {
    Obstruction { advisory: Advisory },
    NoConclusion { reason: String },
}

/// Obstruction to fibre-type curves with dense rational points, for solvable
/// transitive `G` on sufficiently generic curves of genus at least 7.
pub fn zariski_obstruction(g: &PermGroup, genus: u64) -> ZariskiVerdict {
    let reason = if !g.is_transitive() {
        Some("G is not transitive".to_string())
    } else if !g.is_solvable() {
        Some("G is not solvable".to_string())
    } else if genus < 7 {
        Some(format!("genus {genus} is below 7"))
    } else {
        None
    };
    match reason {
        Some(reason) => ZariskiVerdict::NoConclusion { reason },
        None => ZariskiVerdict::Obstruction {
            advisory: Advisory::conditional(
                "zariski_generic",
                format!(
                    "for sufficiently generic C of genus {genus}, no morphism C -> P^1 has solvable Galois group, so no curve of fibre type in C^{}/G has Zariski dense rational points",
                    g.degree()
                ),
            ),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn group(gens: &[&str], n: usize) -> PermGroup {
        PermGroup::new(gens.iter().map(|g| Permutation::parse(g, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn genus_two_symmetric_square() {
        let r = classify_quotient(&PermGroup::symmetric(2), 2).unwrap();
        assert_eq!((r.m, r.threshold_genus, r.is_general_type), (1, 3, false));
        assert!(r.advisories.iter().any(|a| a.tag == "genus_two_hyperelliptic"));
    }

    #[test]
    fn genus_three_s4() {
        let r = classify_quotient(&PermGroup::symmetric(4), 3).unwrap();
        assert_eq!((r.m, r.threshold_genus, r.is_general_type), (3, 5, false));
        assert!(r.advisories.iter().any(|a| a.tag == "genus_three_plane_quartic"));
    }

    #[test]
    fn dihedral_genus_five() {
        let r = classify_quotient(&group(&["(1 2 3 4)", "(1 3)"], 4), 5).unwrap();
        assert_eq!((r.m, r.n_prime), (1, 2));
        assert!(r.is_general_type && r.solvable);
        let bl = r.advisories.iter().find(|a| a.tag == "bombieri_lang").unwrap();
        assert!(bl.conditional && bl.text.starts_with("CONDITIONAL:"));
    }

    #[test]
    fn non_transitive_rejected() {
        assert_eq!(
            classify_quotient(&group(&["(1 2)"], 3), 5).unwrap_err(),
            PermError::NotTransitive
        );
    }

    #[test]
    fn low_genus_warned() {
        let r = classify_quotient(&PermGroup::cyclic(3), 1).unwrap();
        assert!(!r.is_general_type);
        assert!(r.advisories.iter().any(|a| a.tag == "low_genus"));
    }

    #[test]
    fn trichotomy() {
        assert_eq!(sym_power_kind(3, 2), KodairaKind::GeneralType);
        assert_eq!(sym_power_kind(3, 3), KodairaKind::BirationalAbelian);
        assert_eq!(sym_power_kind(3, 4), KodairaKind::Uniruled);
    }

    #[test]
    fn solvable_bounds() {
        let b = solvable_transposition_bound(&PermGroup::symmetric(4)).unwrap();
        assert_eq!((b.m, b.bound_satisfied, b.applicable), (3, true, true));
        let b = solvable_transposition_bound(&PermGroup::symmetric(5)).unwrap();
        assert!(!b.applicable && b.bound_satisfied);
        let b = solvable_transposition_bound(&PermGroup::cyclic(4)).unwrap();
        assert_eq!((b.m, b.bound_satisfied), (0, true));
    }

    #[test]
    fn zariski_cases() {
        let d4 = group(&["(1 2 3 4)", "(1 3)"], 4);
        match zariski_obstruction(&d4, 7) {
            ZariskiVerdict::Obstruction { advisory } => {
                assert!(advisory.text.contains("sufficiently generic"))
            }
            v => panic!("{v:?}"),
        }
        assert!(matches!(
            zariski_obstruction(&PermGroup::symmetric(5), 9),
            ZariskiVerdict::NoConclusion { .. }
        ));
        assert!(matches!(zariski_obstruction(&d4, 5), ZariskiVerdict::NoConclusion { .. }));
    }
}
