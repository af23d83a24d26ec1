//! Pattern × semigroup: the admits decision, the image `p(Λ)`, closures and
//! minimal p-systems of generators.
//!
//! `admits` is exact for strongly admissible patterns: their values satisfy
//! `p(s₁, …, sₙ) ≥ s₁`, so only tuples with `s₁` below the conductor can
//! fail. For admissible patterns that are not strongly admissible no such
//! reduction is known and the check is a bounded search.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::semigroup::NumericalSemigroup;
use crate::tuples::TupleSearch;

/// Outcome of an admits check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum AdmitsVerdict {
    Admits,
    /// `witness` is a non-increasing tuple of members whose value is not a
    /// member.
    Rejects {
        witness: Vec<u32>,
        value: i128,
    },
    /// No failing tuple with `s₁ ≤ bound`; the pattern is not strongly
    /// admissible so this is not a proof.
    UnknownUpToBound {
        bound: u32,
    },
}

impl AdmitsVerdict {
    pub fn is_admits(&self) -> bool {
        matches!(self, AdmitsVerdict::Admits)
    }

    pub fn is_rejects(&self) -> bool {
        matches!(self, AdmitsVerdict::Rejects { .. })
    }
}

fn member(s: &NumericalSemigroup, v: i128) -> bool {
    v >= 0 && (v >= s.conductor() as i128 || s.contains(v as i64))
}

/// Default search bound for patterns that are admissible but not strongly
/// admissible: `c + n·m`.
pub fn default_search_bound(s: &NumericalSemigroup, p: &Pattern) -> u32 {
    let b = s.conductor() as u64 + p.len() as u64 * s.multiplicity() as u64;
    b.min(u32::MAX as u64) as u32
}

/// Does `s` admit `p`? Uses [`default_search_bound`] when a bounded search
/// is needed.
pub fn admits(s: &NumericalSemigroup, p: &Pattern) -> AdmitsVerdict {
    admits_with_bound(s, p, None)
}

pub fn admits_with_bound(s: &NumericalSemigroup, p: &Pattern, bound: Option<u32>) -> AdmitsVerdict {
    if !p.is_admissible() {
        // (m, …, m, 0, …, 0) up to the first negative prefix sum
        let m = s.multiplicity();
        let cut = p.prefix_sums().iter().position(|&x| x < 0).unwrap() + 1;
        let mut witness = vec![m; cut];
        witness.resize(p.len(), 0);
        let value = p.eval_unchecked(&witness);
        return AdmitsVerdict::Rejects { witness, value };
    }
    if s.is_natural() {
        return AdmitsVerdict::Admits;
    }
    if p.is_strongly_admissible() {
        let search = TupleSearch::new(p.coeffs(), s.small_elements());
        return match search.first_failure(|v| member(s, v)) {
            None => AdmitsVerdict::Admits,
            Some((witness, value)) => AdmitsVerdict::Rejects { witness, value },
        };
    }
    let bound = bound.unwrap_or_else(|| default_search_bound(s, p));
    let candidates: Vec<u32> = s.elements_up_to(bound).collect();
    let search = TupleSearch::new(p.coeffs(), &candidates);
    match search.first_failure(|v| member(s, v)) {
        None => AdmitsVerdict::UnknownUpToBound { bound },
        Some((witness, value)) => AdmitsVerdict::Rejects { witness, value },
    }
}

fn require_closure_pattern(p: &Pattern) -> Result<()> {
    if !p.is_premonic() {
        return Err(Error::NotPremonic);
    }
    if !p.is_strongly_admissible() {
        return Err(Error::NotStronglyAdmissible);
    }
    Ok(())
}

/// `p(Λ) = { p(s₁, …, sₙ) : s₁ ≥ … ≥ sₙ ∈ Λ }` for a premonic strongly
/// admissible pattern.
///
/// Only tuples with `s₁ < c` can produce values below `c`, and everything
/// from `c` on is already in `Λ ⊆ p(Λ)`.
pub fn image(s: &NumericalSemigroup, p: &Pattern) -> Result<NumericalSemigroup> {
    require_closure_pattern(p)?;
    image_unchecked(s, p)
}

fn image_unchecked(s: &NumericalSemigroup, p: &Pattern) -> Result<NumericalSemigroup> {
    let c = s.conductor();
    let mut mask: Vec<bool> = (0..c).map(|x| s.contains(x as i64)).collect();
    let search = TupleSearch::new(p.coeffs(), s.small_elements());
    for v in search.values_below(c as i128) {
        mask[v as usize] = true;
    }
    NumericalSemigroup::from_mask(mask)
        .map_err(|e| Error::VerificationFailed(format!("p(Λ) is not a semigroup: {e}")))
}

/// The chain `Λ₀ ⊊ p(Λ₀) ⊊ … ⊊ p^k(Λ₀) = p^{k+1}(Λ₀)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureTrace {
    steps: Vec<NumericalSemigroup>,
}

impl ClosureTrace {
    pub fn steps(&self) -> &[NumericalSemigroup] {
        &self.steps
    }

    /// Index of the fixpoint.
    pub fn k(&self) -> usize {
        self.steps.len() - 1
    }

    /// The p-closure.
    pub fn last(&self) -> &NumericalSemigroup {
        self.steps.last().unwrap()
    }

    pub fn into_last(mut self) -> NumericalSemigroup {
        self.steps.pop().unwrap()
    }
}

/// The p-closure of `s`: the smallest semigroup containing `s` that admits
/// `p`, reached by iterating the image to a fixpoint.
pub fn closure(s: &NumericalSemigroup, p: &Pattern) -> Result<ClosureTrace> {
    require_closure_pattern(p)?;
    let mut steps = vec![s.clone()];
    loop {
        let current = steps.last().unwrap();
        let next = image_unchecked(current, p)?;
        if &next == current {
            return Ok(ClosureTrace { steps });
        }
        steps.push(next);
    }
}

/// The unique minimal p-system of generators of `s`: the minimal
/// generators `a` with `Λ ∖ {a}` still admitting `p`.
///
/// The answer is re-verified by recomputing the closure of the semigroup
/// it generates.
pub fn minimal_p_system(s: &NumericalSemigroup, p: &Pattern) -> Result<Vec<u32>> {
    require_closure_pattern(p)?;
    if !admits(s, p).is_admits() {
        return Err(Error::DoesNotAdmit);
    }
    let system = p_system_unchecked(s, p);
    let generated = NumericalSemigroup::from_generators(&system).map_err(|e| {
        Error::VerificationFailed(format!(
            "p-system {system:?} does not generate a semigroup: {e}"
        ))
    })?;
    if closure(&generated, p)?.last() != s {
        return Err(Error::VerificationFailed(format!(
            "closure of <{system:?}> is not {s}"
        )));
    }
    if !system.contains(&s.multiplicity()) {
        return Err(Error::VerificationFailed(
            "multiplicity missing from the p-system".into(),
        ));
    }
    Ok(system)
}

pub(crate) fn p_system_unchecked(s: &NumericalSemigroup, p: &Pattern) -> Vec<u32> {
    s.minimal_generators()
        .into_iter()
        .filter(|&a| {
            let smaller = s.remove_element(a).expect("minimal generator");
            admits(&smaller, p).is_admits()
        })
        .collect()
}
