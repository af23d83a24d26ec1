use serde::Serialize;

use super::{AdmissibilityDegree, Pattern};
use crate::error::{Error, Result};

/// Splitting of a boolean pattern of finite positive admissibility degree
/// `k` as `f(x₁..x_{k-1}) + g(x_k..x_l) + h(x_{l+1}..x_n)`.
///
/// `f` has all coefficients `+1`, `g` has coefficient sum zero, `h` has
/// strictly positive prefix sums (or is empty). `l` is the largest index
/// with `a_{k+1} + … + a_l = -1`.
///
/// `d` is the largest partial sum `a_k + … + a_j` over `k ≤ j ≤ l`, i.e.
/// over the `g` block. Partial sums reaching into `h` are not counted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanDecomposition {
    pub k: usize,
    pub l: usize,
    pub d: i64,
    #[serde(skip)]
    coeffs: Vec<i64>,
}

impl BooleanDecomposition {
    pub fn f(&self) -> Pattern {
        Pattern {
            coeffs: self.coeffs[..self.k - 1].to_vec(),
        }
    }

    pub fn g(&self) -> Pattern {
        Pattern {
            coeffs: self.coeffs[self.k - 1..self.l].to_vec(),
        }
    }

    pub fn h(&self) -> Pattern {
        Pattern {
            coeffs: self.coeffs[self.l..].to_vec(),
        }
    }
}

impl Pattern {
    pub fn boolean_decomposition(&self) -> Result<BooleanDecomposition> {
        if !self.is_boolean() {
            return Err(Error::NotBoolean);
        }
        let k = match self.admissibility_degree() {
            AdmissibilityDegree::Finite(0) => return Err(Error::DegreeZero),
            AdmissibilityDegree::Finite(k) => k as usize,
            AdmissibilityDegree::Infinite => return Err(Error::DegreeInfinite),
        };
        let a = &self.coeffs;
        // p^(k) = a_{k+1}..a_n is the first non-admissible derived pattern,
        // so its partial sums dip to exactly -1 (and never lower)
        let mut sum = 0i64;
        let mut l = None;
        for (i, &ai) in a.iter().enumerate().skip(k) {
            sum += ai;
            if sum == -1 {
                l = Some(i + 1);
            }
        }
        let l = l.ok_or_else(|| {
            Error::VerificationFailed("no index l with partial sum -1 after position k".into())
        })?;
        let d = a[k - 1..l]
            .iter()
            .scan(0i64, |acc, &ai| {
                *acc += ai;
                Some(*acc)
            })
            .max()
            .unwrap_or(0);
        Ok(BooleanDecomposition {
            k,
            l,
            d,
            coeffs: a.clone(),
        })
    }
}
