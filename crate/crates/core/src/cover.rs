//! Riemann–Hurwitz bookkeeping: `2g_src − 2 = d(2g_base − 2) + R`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("cover degree must be at least 1")]
    ZeroDegree,
    #[error("no such cover: 2*g_src - 2 = {lhs} < d*(2*g_base - 2) = {rhs}, so R would be negative")]
    NegativeRamification { lhs: i64, rhs: i64 },
    #[error("parity: d*(2*g_base - 2) + R = {0} is odd, but 2*g_src - 2 is even")]
    Parity(i64),
    #[error("genus would be negative: 2*g_src - 2 = {0}")]
    NegativeGenus(i64),
}

/// A finite cover of curves with its total ramification degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverData {
    pub degree: u64,
    pub genus_source: u64,
    pub genus_base: u64,
    pub ramification_degree: u64,
}

impl CoverData {
    pub fn is_valid(&self) -> bool {
        self.degree >= 1
            && 2 * self.genus_source as i64 - 2
                == self.degree as i64 * (2 * self.genus_base as i64 - 2)
                    + self.ramification_degree as i64
    }
}

/// `R = 2g_src − 2 − d(2g_base − 2)`.
pub fn ramification_degree(d: u64, genus_source: u64, genus_base: u64) -> Result<u64, CoverError> {
    if d == 0 {
        return Err(CoverError::ZeroDegree);
    }
    let lhs = 2 * genus_source as i64 - 2;
    let rhs = d as i64 * (2 * genus_base as i64 - 2);
    if lhs < rhs {
        return Err(CoverError::NegativeRamification { lhs, rhs });
    }
    Ok((lhs - rhs) as u64)
}

/// The genus of a degree-`d` cover of a genus-`genus_base` curve with total ramification `r`.
pub fn genus_from_cover(d: u64, genus_base: u64, r: u64) -> Result<u64, CoverError> {
    if d == 0 {
        return Err(CoverError::ZeroDegree);
    }
    let rhs = d as i64 * (2 * genus_base as i64 - 2) + r as i64;
    if rhs.rem_euclid(2) != 0 {
        return Err(CoverError::Parity(rhs));
    }
    if rhs < -2 {
        return Err(CoverError::NegativeGenus(rhs));
    }
    Ok(((rhs + 2) / 2) as u64)
}

pub fn validate_cover(c: &CoverData) -> bool {
    c.is_valid()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_cover_of_line_by_genus_three() {
        assert_eq!(ramification_degree(3, 3, 0), Ok(10));
        assert_eq!(ramification_degree(2, 3, 0), Ok(8));
        assert_eq!(ramification_degree(1, 4, 4), Ok(0));
    }

    #[test]
    fn genus_from_double_covers() {
        assert_eq!(genus_from_cover(2, 0, 8), Ok(3));
        assert_eq!(genus_from_cover(2, 0, 10), Ok(4));
        assert_eq!(genus_from_cover(2, 0, 7), Err(CoverError::Parity(3)));
        assert_eq!(genus_from_cover(3, 0, 2), Err(CoverError::NegativeGenus(-4)));
        assert_eq!(genus_from_cover(0, 0, 2), Err(CoverError::ZeroDegree));
    }

    #[test]
    fn impossible_cover() {
        // a genus-1 curve cannot cover a genus-2 curve
        assert!(matches!(
            ramification_degree(2, 1, 2),
            Err(CoverError::NegativeRamification { lhs: 0, rhs: 4 })
        ));
    }

    #[test]
    fn validation() {
        let c = |d, s, b, r| CoverData {
            degree: d,
            genus_source: s,
            genus_base: b,
            ramification_degree: r,
        };
        assert!(validate_cover(&c(3, 3, 0, 10)));
        assert!(!validate_cover(&c(2, 3, 0, 9)));
        assert!(validate_cover(&c(1, 2, 2, 0)));
    }
}
