//! Subtraction degree and the semigroup family that separates boolean
//! patterns by their `d` invariant.

use crate::admits::admits;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::semigroup::NumericalSemigroup;

/// `(apery_depth, ⌈c/m⌉ + 1)`, the lower and upper bounds on the
/// subtraction degree. Both are 1 for `ℕ`.
pub fn subtraction_degree_bounds(s: &NumericalSemigroup) -> (u32, u32) {
    let c = s.conductor();
    let m = s.multiplicity();
    (s.apery_depth(), c.div_ceil(m) + 1)
}

/// Least `k` such that `s` admits `x₁ + … + x_k - x_{k+1}`.
pub fn subtraction_degree(s: &NumericalSemigroup) -> u32 {
    // only N admits the trivializing pattern
    if s.is_natural() {
        return 1;
    }
    let (lower, upper) = subtraction_degree_bounds(s);
    // degree >= 2 patterns are strongly admissible, so admits is exact;
    // admitted degrees are upward closed
    (lower.max(2)..upper)
        .find(|&k| admits(s, &Pattern::subtraction(k as usize).unwrap()).is_admits())
        .unwrap_or(upper)
}

/// `⟨q, q+1⟩ ∪ {(k-1)(q+1)+1, …, (k-1)(q+1)+(q-k-1)} ∪ [kq, ∞)`.
///
/// For `k > 2` and `q > k + 1` it admits a boolean pattern of
/// admissibility degree `k` exactly when the pattern's `d ≤ q - k - 1`.
pub fn witness_family(q: u32, k: u32) -> Result<NumericalSemigroup> {
    if k <= 2 {
        return Err(Error::InvalidParameters(format!("need k > 2, got k = {k}")));
    }
    if q <= k + 1 {
        return Err(Error::InvalidParameters(format!(
            "need q > k + 1 so that the middle block is nonempty, got q = {q}, k = {k}"
        )));
    }
    let conductor = k
        .checked_mul(q)
        .filter(|&c| c <= crate::semigroup::MAX_CONDUCTOR)
        .ok_or(Error::TooLarge(crate::semigroup::MAX_CONDUCTOR))?;
    let hermitian = NumericalSemigroup::from_generators(&[q, q + 1])?;
    let base = (k - 1) * (q + 1);
    let block = base + 1..=base + (q - k - 1);
    let mask: Vec<bool> = (0..conductor)
        .map(|x| hermitian.contains(x as i64) || block.contains(&x))
        .collect();
    let s = NumericalSemigroup::from_mask(mask)?;
    if s.conductor() != conductor {
        return Err(Error::NotASemigroup(format!(
            "conductor is {}, expected kq = {conductor}",
            s.conductor()
        )));
    }
    Ok(s)
}
