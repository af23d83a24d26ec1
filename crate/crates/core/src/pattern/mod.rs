//! Linear homogeneous patterns `a₁x₁ + … + aₙxₙ` and the classification
//! that depends on the coefficients alone.
//!
//! Patterns are evaluated on non-increasing tuples `s₁ ≥ … ≥ sₙ`. All the
//! classification predicates are statements about the prefix sums
//! `σ_m = a₁ + … + a_m`:
//!
//! * admissible: every `σ_m ≥ 0` (equivalently, `ℕ` admits the pattern);
//! * premonic: some `σ_m = 1`;
//! * strongly admissible: admissible with an admissible derived pattern.
//!
//! Conventions for the zero pattern (`n = 0`): it is admissible and
//! strongly admissible, not premonic, and its admissibility degree is
//! infinite. "Monic" patterns (leading coefficient 1) are premonic; there
//! is no separate predicate for them.

mod boolean;
mod parse;

pub use boolean::BooleanDecomposition;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A pattern, stored as its coefficient vector. Every coefficient is
/// nonzero; the zero pattern is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Pattern {
    coeffs: Vec<i64>,
}

/// Least `k` with `p^(k)` not admissible, or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AdmissibilityDegree {
    Finite(u64),
    Infinite,
}

impl fmt::Display for AdmissibilityDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdmissibilityDegree::Finite(k) => write!(f, "{k}"),
            AdmissibilityDegree::Infinite => f.write_str("infinity"),
        }
    }
}

fn min_prefix_sum(coeffs: &[i64]) -> Option<i128> {
    coeffs
        .iter()
        .scan(0i128, |acc, &a| {
            *acc += a as i128;
            Some(*acc)
        })
        .min()
}

impl Pattern {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if let Some(i) = coeffs.iter().position(|&a| a == 0) {
            return Err(Error::ZeroCoefficient(i + 1));
        }
        Ok(Self { coeffs })
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `x₁ + … + x_k - x_{k+1}`.
    pub fn subtraction(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameters(
                "subtraction pattern degree must be at least 1".into(),
            ));
        }
        let mut coeffs = vec![1; k];
        coeffs.push(-1);
        Ok(Self { coeffs })
    }

    /// `x₁ + x₂ - x₃`.
    pub fn arf() -> Self {
        Self {
            coeffs: vec![1, 1, -1],
        }
    }

    /// `x₁ - x₂`, admitted only by `ℕ`.
    pub fn trivializing() -> Self {
        Self {
            coeffs: vec![1, -1],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `σ₁, …, σₙ`.
    pub fn prefix_sums(&self) -> Vec<i128> {
        self.coeffs
            .iter()
            .scan(0i128, |acc, &a| {
                *acc += a as i128;
                Some(*acc)
            })
            .collect()
    }

    /// `S = σₙ`, zero for the zero pattern.
    pub fn total(&self) -> i128 {
        self.coeffs.iter().map(|&a| a as i128).sum()
    }

    /// `p(s₁, …, sₙ)` for a non-increasing tuple.
    pub fn evaluate(&self, s: &[u32]) -> Result<i128> {
        if s.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: s.len(),
            });
        }
        if s.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSorted);
        }
        Ok(self.eval_unchecked(s))
    }

    pub(crate) fn eval_unchecked(&self, s: &[u32]) -> i128 {
        self.coeffs
            .iter()
            .zip(s)
            .map(|(&a, &x)| a as i128 * x as i128)
            .sum()
    }

    pub fn is_admissible(&self) -> bool {
        min_prefix_sum(&self.coeffs).is_none_or(|m| m >= 0)
    }

    /// `p - x₁` if `a₁ > 1`, otherwise `p(0, x₁, …, x_{n-1})`.
    pub fn derived(&self) -> Result<Self> {
        match self.coeffs.first() {
            None => Err(Error::EmptyPattern),
            Some(&a1) if a1 > 1 => {
                let mut coeffs = self.coeffs.clone();
                coeffs[0] -= 1;
                Ok(Self { coeffs })
            }
            Some(_) => Ok(Self {
                coeffs: self.coeffs[1..].to_vec(),
            }),
        }
    }

    pub fn is_strongly_admissible(&self) -> bool {
        self.is_admissible() && self.derived().map_or(true, |d| d.is_admissible())
    }

    pub fn is_premonic(&self) -> bool {
        self.prefix_sums().contains(&1)
    }

    pub fn is_boolean(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 1 || a == -1)
    }

    /// Least `k` such that `p^(k)` is not admissible.
    ///
    /// A leading coefficient `t > 1` is decremented `t - 1` times before the
    /// first shift; those steps are skipped in one go, since decrementing
    /// `a₁` lowers every prefix sum by one.
    pub fn admissibility_degree(&self) -> AdmissibilityDegree {
        let mut steps: u64 = 0;
        let mut rest: &[i64] = &self.coeffs;
        // current pattern is [lead, rest[1..]]
        let mut lead = match rest.first() {
            Some(&a) => a as i128,
            None => return AdmissibilityDegree::Infinite,
        };
        loop {
            let tail_min = rest[1..]
                .iter()
                .scan(lead, |acc, &a| {
                    *acc += a as i128;
                    Some(*acc)
                })
                .min()
                .unwrap_or(lead)
                .min(lead);
            if tail_min < 0 {
                return AdmissibilityDegree::Finite(steps);
            }
            if lead > 1 {
                // [lead - j, ...] is admissible exactly for j <= tail_min
                let decrements = lead - 1;
                if tail_min < decrements {
                    return AdmissibilityDegree::Finite(steps + tail_min as u64 + 1);
                }
                steps += decrements as u64;
            }
            // lead is now 1 (or less, which cannot happen for an admissible
            // pattern); shift
            steps += 1;
            rest = &rest[1..];
            lead = match rest.first() {
                Some(&a) => a as i128,
                None => return AdmissibilityDegree::Infinite,
            };
        }
    }

    /// Drops the positive coefficients after the last negative one.
    pub fn normalize_tail(&self) -> Self {
        match self.coeffs.iter().rposition(|&a| a < 0) {
            Some(i) => Self {
                coeffs: self.coeffs[..=i].to_vec(),
            },
            None => self.clone(),
        }
    }

    /// `a₁x₁ + … + a_{n'}x_{n'}`.
    pub fn prefix(&self, n: usize) -> Result<Self> {
        if n > self.len() {
            return Err(Error::IndexOutOfRange {
                index: n,
                max: self.len(),
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..n].to_vec(),
        })
    }

    /// Inserts a `+1` coefficient at (1-based) slot `j`, `1 ≤ j ≤ n+1`.
    pub fn interleave(&self, j: usize) -> Result<Self> {
        if j == 0 || j > self.len() + 1 {
            return Err(Error::IndexOutOfRange {
                index: j,
                max: self.len() + 1,
            });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.insert(j - 1, 1);
        Ok(Self { coeffs })
    }
}

impl TryFrom<Vec<i64>> for Pattern {
    type Error = Error;

    fn try_from(coeffs: Vec<i64>) -> Result<Self> {
        Self::new(coeffs)
    }
}

impl From<Pattern> for Vec<i64> {
    fn from(p: Pattern) -> Self {
        p.coeffs
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a < 0 {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = a.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Pattern {
        Pattern::new(c.to_vec()).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[1, 1, -1]).evaluate(&[8, 8, 6]).unwrap(), 10);
        assert_eq!(Pattern::zero().evaluate(&[]).unwrap(), 0);
        // q = 5: four copies of q+1 minus q is c - 1 = 19
        assert_eq!(p(&[1, 1, 1, 1, -1]).evaluate(&[6, 6, 6, 6, 5]).unwrap(), 19);
        assert_eq!(p(&[1, -1]).evaluate(&[3, 4]), Err(Error::NotSorted));
        assert_eq!(
            p(&[1, -1]).evaluate(&[3]),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn zero_coefficients_are_rejected() {
        assert_eq!(Pattern::new(vec![1, 0, -1]), Err(Error::ZeroCoefficient(2)));
    }

    #[test]
    fn admissibility() {
        assert!(p(&[1, 1, -1]).is_admissible());
        assert!(!p(&[1, -2]).is_admissible());
        assert!(p(&[1, -1]).is_admissible());
        assert!(Pattern::zero().is_admissible());
    }

    #[test]
    fn derived_examples() {
        assert_eq!(p(&[1, 1, -1]).derived().unwrap(), p(&[1, -1]));
        assert_eq!(p(&[10, -7]).derived().unwrap(), p(&[9, -7]));
        assert_eq!(p(&[2, -1]).derived().unwrap(), p(&[1, -1]));
        assert_eq!(p(&[1]).derived().unwrap(), Pattern::zero());
        assert_eq!(Pattern::zero().derived(), Err(Error::EmptyPattern));
    }

    #[test]
    fn strong_admissibility() {
        assert!(p(&[1, 1, -1]).is_strongly_admissible());
        assert!(!p(&[1, -1]).is_strongly_admissible());
        assert!(p(&[10, -9]).is_strongly_admissible());
        assert!(!p(&[1, -2]).is_strongly_admissible());
        assert!(Pattern::zero().is_strongly_admissible());
    }

    #[test]
    fn premonic() {
        assert!(p(&[1, 1, -1]).is_premonic());
        assert!(p(&[2, -1]).is_premonic());
        assert!(!p(&[2, 2, -2]).is_premonic());
        assert!(!Pattern::zero().is_premonic());
    }

    #[test]
    fn degree_examples() {
        use AdmissibilityDegree::*;
        assert_eq!(p(&[10, -7]).admissibility_degree(), Finite(4));
        assert_eq!(
            p(&[10, -7])
                .derived()
                .unwrap()
                .derived()
                .unwrap()
                .derived()
                .unwrap(),
            p(&[7, -7])
        );
        assert_eq!(p(&[1, 1, 1, -1]).admissibility_degree(), Finite(3));
        assert_eq!(p(&[1, -2]).admissibility_degree(), Finite(0));
        assert_eq!(p(&[5, -5]).admissibility_degree(), Finite(1));
        assert_eq!(p(&[10, -9]).admissibility_degree(), Finite(2));
        assert_eq!(p(&[3, 2]).admissibility_degree(), Infinite);
        assert_eq!(Pattern::zero().admissibility_degree(), Infinite);
    }

    #[test]
    fn degree_with_huge_leading_coefficient() {
        let q = p(&[i64::MAX, -(i64::MAX - 1)]);
        assert_eq!(q.admissibility_degree(), AdmissibilityDegree::Finite(2));
    }

    #[test]
    fn normalize_tail_examples() {
        assert_eq!(p(&[1, 1, -1, 1, 2]).normalize_tail(), p(&[1, 1, -1]));
        assert_eq!(p(&[1, 1, -1]).normalize_tail(), p(&[1, 1, -1]));
        assert_eq!(p(&[3, 2]).normalize_tail(), p(&[3, 2]));
    }

    #[test]
    fn constructors() {
        assert_eq!(Pattern::subtraction(2).unwrap(), Pattern::arf());
        assert_eq!(Pattern::arf().interleave(3).unwrap(), p(&[1, 1, 1, -1]));
        assert_eq!(Pattern::arf().prefix(2).unwrap(), p(&[1, 1]));
        assert_eq!(
            Pattern::arf().prefix(4),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        );
        assert_eq!(
            Pattern::arf().interleave(0),
            Err(Error::IndexOutOfRange { index: 0, max: 4 })
        );
        assert!(Pattern::subtraction(0).is_err());
        assert_eq!(Pattern::trivializing(), p(&[1, -1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 1, -1]).to_string(), "x1+x2-x3");
        assert_eq!(p(&[10, -7]).to_string(), "10x1-7x2");
        assert_eq!(p(&[-1, 3]).to_string(), "-x1+3x2");
        assert_eq!(Pattern::zero().to_string(), "0");
    }
}
