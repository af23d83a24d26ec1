//! Bounded search for a semigroup that tells two patterns apart.
//!
//! Boolean patterns carry two invariants shared by equivalent patterns: the
//! admissibility degree, and for degree `k > 2` the value `d`. When they
//! differ a separating semigroup is constructed directly. Otherwise the
//! census up to a genus bound is scanned. A positive equivalence is never
//! claimed.

use serde::Serialize;

use crate::admits::{admits, AdmitsVerdict};
use crate::degree::witness_family;
use crate::enumerate::enumerate_all;
use crate::error::{Error, Result};
use crate::pattern::{AdmissibilityDegree, Pattern};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum EquivalenceVerdict {
    /// `separator` admits exactly one of the two patterns.
    Separated {
        separator: NumericalSemigroup,
        first: AdmitsVerdict,
        second: AdmitsVerdict,
    },
    IndistinguishableUpToGenus {
        genus_bound: u32,
    },
}

fn separates(
    s: &NumericalSemigroup,
    p1: &Pattern,
    p2: &Pattern,
) -> Option<(AdmitsVerdict, AdmitsVerdict)> {
    let v1 = admits(s, p1);
    let v2 = admits(s, p2);
    (v1.is_admits() != v2.is_admits()).then_some((v1, v2))
}

/// A semigroup built from the boolean invariants, if they differ.
fn boolean_certificate(p1: &Pattern, p2: &Pattern) -> Result<Option<NumericalSemigroup>> {
    if !p1.is_boolean() || !p2.is_boolean() {
        return Ok(None);
    }
    let (k1, k2) = (p1.admissibility_degree(), p2.admissibility_degree());
    if k1 != k2 {
        // <q,q+1> admits a boolean pattern iff its degree is >= q
        let low = match k1.min(k2) {
            AdmissibilityDegree::Finite(k) => k,
            AdmissibilityDegree::Infinite => unreachable!("degrees differ"),
        };
        let q =
            u32::try_from(low + 1).map_err(|_| Error::TooLarge(crate::semigroup::MAX_CONDUCTOR))?;
        return NumericalSemigroup::from_generators(&[q, q + 1]).map(Some);
    }
    let k = match k1 {
        AdmissibilityDegree::Finite(k) if k > 2 => k,
        _ => return Ok(None),
    };
    let d1 = p1.boolean_decomposition()?.d;
    let d2 = p2.boolean_decomposition()?.d;
    if d1 == d2 {
        return Ok(None);
    }
    // the family with q - k - 1 = min(d) admits the smaller d only
    let q = k as i64 + 1 + d1.min(d2);
    let q = u32::try_from(q).map_err(|_| Error::TooLarge(crate::semigroup::MAX_CONDUCTOR))?;
    witness_family(q, k as u32).map(Some)
}

pub fn equivalence_check(p1: &Pattern, p2: &Pattern, max_genus: u32) -> Result<EquivalenceVerdict> {
    if !p1.is_strongly_admissible() || !p2.is_strongly_admissible() {
        return Err(Error::NotStronglyAdmissible);
    }
    if let Some(separator) = boolean_certificate(p1, p2)? {
        return match separates(&separator, p1, p2) {
            Some((first, second)) => Ok(EquivalenceVerdict::Separated {
                separator,
                first,
                second,
            }),
            None => Err(Error::VerificationFailed(format!(
                "constructed separator {separator} does not separate {p1} and {p2}"
            ))),
        };
    }
    let census = enumerate_all(max_genus);
    for s in census.semigroups() {
        if let Some((first, second)) = separates(s, p1, p2) {
            return Ok(EquivalenceVerdict::Separated {
                separator: s.clone(),
                first,
                second,
            });
        }
    }
    Ok(EquivalenceVerdict::IndistinguishableUpToGenus {
        genus_bound: max_genus,
    })
}
