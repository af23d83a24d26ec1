use serde::Serialize;

use super::NumericalSemigroup;

/// `Ap(Λ, λ)`: for each residue `i` mod `λ`, the least member of `Λ`
/// congruent to `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AperySet {
    modulus: u32,
    witnesses: Vec<u32>,
}

impl AperySet {
    pub(super) fn compute(s: &NumericalSemigroup, lambda: u32) -> Self {
        let mut witnesses = vec![None; lambda as usize];
        let mut missing = lambda as usize;
        let mut x: u32 = 0;
        while missing > 0 {
            let slot = &mut witnesses[(x % lambda) as usize];
            if slot.is_none() && s.contains(x as i64) {
                *slot = Some(x);
                missing -= 1;
            }
            x += 1;
        }
        Self {
            modulus: lambda,
            witnesses: witnesses.into_iter().map(Option::unwrap).collect(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `w(0), …, w(λ-1)`, indexed by residue.
    pub fn witnesses(&self) -> &[u32] {
        &self.witnesses
    }

    /// The witnesses in increasing order.
    pub fn sorted(&self) -> Vec<u32> {
        let mut w = self.witnesses.clone();
        w.sort_unstable();
        w
    }
}
