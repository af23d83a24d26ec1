//! Numerical semigroups in canonical form.
//!
//! A numerical semigroup `Λ ⊆ ℕ` is stored as its conductor `c` together with
//! the sorted list of its members below `c`. Everything at or above the
//! conductor is a member, so this pair determines `Λ` completely and gives a
//! unique key for equality, ordering and hashing. `ℕ` itself is `(0, [])`.

mod apery;
mod parse;

pub use apery::AperySet;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest conductor we are willing to materialise.
pub const MAX_CONDUCTOR: u32 = 1 << 24;

/// A numerical semigroup in canonical form.
///
/// The derived `Ord` compares conductors first and then the small elements
/// lexicographically; enumeration output is sorted by it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SemigroupRepr", into = "SemigroupRepr")]
pub struct NumericalSemigroup {
    conductor: u32,
    small: Vec<u32>,
    // member[x] for x < conductor; derived from `small`.
    member: Vec<bool>,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl NumericalSemigroup {
    /// The semigroup `ℕ` of all nonnegative integers.
    pub fn natural() -> Self {
        Self {
            conductor: 0,
            small: Vec::new(),
            member: Vec::new(),
        }
    }

    /// The smallest numerical semigroup containing `gens`.
    ///
    /// Membership is sieved upward; the conductor is declared at the first
    /// run of `m` consecutive members, `m` being the least generator.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::NonPositiveGenerator(0));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(sorted, g));
        }
        let m = sorted[0] as usize;
        let mut member: Vec<bool> = Vec::new();
        let mut run = 0usize;
        let mut x = 0usize;
        loop {
            let is_member = x == 0
                || sorted
                    .iter()
                    .take_while(|&&g| g as usize <= x)
                    .any(|&g| member[x - g as usize]);
            member.push(is_member);
            if is_member {
                run += 1;
                if run == m {
                    let conductor = x + 1 - m;
                    member.truncate(conductor);
                    return Ok(Self::from_mask_unchecked(member));
                }
            } else {
                run = 0;
                if x >= MAX_CONDUCTOR as usize {
                    return Err(Error::TooLarge(MAX_CONDUCTOR));
                }
            }
            x += 1;
        }
    }

    /// Builds a semigroup from its conductor and the members below it,
    /// checking every invariant of the canonical form.
    pub fn from_small_elements(conductor: u32, small: &[u32]) -> Result<Self> {
        if conductor > MAX_CONDUCTOR {
            return Err(Error::TooLarge(MAX_CONDUCTOR));
        }
        if !small.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NotASemigroup(
                "elements are not strictly increasing".into(),
            ));
        }
        if small.last().is_some_and(|&x| x >= conductor) {
            return Err(Error::NotASemigroup(
                "element at or above the conductor".into(),
            ));
        }
        if conductor > 0 && small.first() != Some(&0) {
            return Err(Error::NotASemigroup("0 is missing".into()));
        }
        if conductor > 0 && small.last() == Some(&(conductor - 1)) {
            return Err(Error::NotASemigroup(format!(
                "{} is a member, so {conductor} is not the conductor",
                conductor - 1
            )));
        }
        let mut member = vec![false; conductor as usize];
        for &x in small {
            member[x as usize] = true;
        }
        let s = Self::from_mask_unchecked(member);
        s.check_closed()?;
        Ok(s)
    }

    /// Canonicalises a membership mask: indices `< mask.len()` as given,
    /// everything at or beyond `mask.len()` a member. Additive closure is
    /// not checked.
    pub(crate) fn from_mask_unchecked(mut mask: Vec<bool>) -> Self {
        let conductor = mask.iter().rposition(|&b| !b).map_or(0, |i| i + 1);
        mask.truncate(conductor);
        let small = mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as u32)
            .collect();
        Self {
            conductor: conductor as u32,
            small,
            member: mask,
        }
    }

    /// Like [`Self::from_mask_unchecked`] but rejects masks that are not
    /// closed under addition or miss 0.
    pub(crate) fn from_mask(mask: Vec<bool>) -> Result<Self> {
        let s = Self::from_mask_unchecked(mask);
        if s.conductor > 0 && s.small.first() != Some(&0) {
            return Err(Error::NotASemigroup("0 is missing".into()));
        }
        s.check_closed()?;
        Ok(s)
    }

    fn check_closed(&self) -> Result<()> {
        for (i, &a) in self.small.iter().enumerate() {
            for &b in &self.small[i..] {
                if !self.contains(a as i64 + b as i64) {
                    return Err(Error::NotASemigroup(format!(
                        "{a} + {b} = {} is missing",
                        a + b
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `c - 1`, which is `-1` for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    /// Least nonzero member; `1` for `ℕ`.
    pub fn multiplicity(&self) -> u32 {
        match self.small.get(1) {
            Some(&m) => m,
            None if self.conductor == 0 => 1,
            None => self.conductor,
        }
    }

    pub fn genus(&self) -> u32 {
        self.conductor - self.small.len() as u32
    }

    /// Members strictly below the conductor, ascending.
    pub fn small_elements(&self) -> &[u32] {
        &self.small
    }

    pub fn is_natural(&self) -> bool {
        self.conductor == 0
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x >= self.conductor as i64 {
            return true;
        }
        self.member[x as usize]
    }

    /// Members `<= bound`, ascending.
    pub fn elements_up_to(&self, bound: u32) -> impl Iterator<Item = u32> + '_ {
        (0..=bound).filter(move |&x| self.contains(x as i64))
    }

    /// The gaps `ℕ ∖ Λ`, ascending.
    pub fn gaps(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.conductor).filter(move |&x| !self.member[x as usize])
    }

    /// The unique minimal system of generators.
    ///
    /// Besides the multiplicity `m`, the minimal generators are the minimal
    /// elements of `Ap(Λ, m) ∖ {0}` under `≤_Λ`.
    pub fn minimal_generators(&self) -> Vec<u32> {
        if self.is_natural() {
            return vec![1];
        }
        let m = self.multiplicity();
        let ap = self.apery_unchecked(m);
        let nonzero: Vec<u32> = ap.witnesses().iter().copied().filter(|&w| w != 0).collect();
        let mut gens = vec![m];
        for &w in &nonzero {
            let decomposable = nonzero
                .iter()
                .any(|&v| v < w && self.contains(w as i64 - v as i64));
            if !decomposable {
                gens.push(w);
            }
        }
        gens.sort_unstable();
        gens
    }

    pub fn is_minimal_generator(&self, a: u32) -> bool {
        self.minimal_generators().binary_search(&a).is_ok()
    }

    /// The Apéry set of `lambda`, which must be a positive member.
    pub fn apery(&self, lambda: i64) -> Result<AperySet> {
        if lambda <= 0 || !self.contains(lambda) || lambda > u32::MAX as i64 {
            return Err(Error::NotAMember(lambda));
        }
        Ok(self.apery_unchecked(lambda as u32))
    }

    fn apery_unchecked(&self, lambda: u32) -> AperySet {
        AperySet::compute(self, lambda)
    }

    /// Longest `<_Λ`-chain in `Ap(Λ, m)`, counted in elements.
    pub fn apery_depth(&self) -> u32 {
        let mut w = self
            .apery_unchecked(self.multiplicity())
            .witnesses()
            .to_vec();
        w.sort_unstable();
        let mut longest = vec![1u32; w.len()];
        for j in 0..w.len() {
            for i in 0..j {
                if self.contains(w[j] as i64 - w[i] as i64) && longest[i] + 1 > longest[j] {
                    longest[j] = longest[i] + 1;
                }
            }
        }
        longest.into_iter().max().unwrap_or(1)
    }

    /// `a ≤_Λ b`, i.e. `b - a ∈ Λ`. Both arguments must be members.
    pub fn leq_in(&self, a: i64, b: i64) -> Result<bool> {
        for x in [a, b] {
            if !self.contains(x) {
                return Err(Error::NotAMember(x));
            }
        }
        Ok(self.contains(b - a))
    }

    /// `Λ ∖ {a}` for a minimal generator `a`.
    pub fn remove_element(&self, a: u32) -> Result<Self> {
        if !self.is_minimal_generator(a) {
            return Err(Error::NotMinimalGenerator(a));
        }
        let mut mask = self.member.clone();
        if a >= self.conductor {
            mask.resize(a as usize + 1, true);
        }
        mask[a as usize] = false;
        Ok(Self::from_mask_unchecked(mask))
    }

    /// `Λ ∪ {F(Λ)}`.
    pub fn add_frobenius(&self) -> Result<Self> {
        if self.is_natural() {
            return Err(Error::AlreadyFull);
        }
        let f = self.conductor - 1;
        self.adjoin_gap(f)
    }

    /// `Λ ∪ {n}` for a gap `n`, validated by the criterion
    /// `2n, 3n ∈ Λ` and `n + λ ∈ Λ` for every nonzero `λ ∈ Λ`.
    pub fn adjoin_gap(&self, n: u32) -> Result<Self> {
        if self.contains(n as i64) {
            return Err(Error::InvalidParameters(format!("{n} is already a member")));
        }
        let n64 = n as i64;
        if !self.contains(2 * n64) || !self.contains(3 * n64) {
            return Err(Error::NotASemigroup(format!("2*{n} or 3*{n} is missing")));
        }
        if let Some(&l) = self.small[1..]
            .iter()
            .find(|&&l| !self.contains(n64 + l as i64))
        {
            return Err(Error::NotASemigroup(format!("{n} + {l} is missing")));
        }
        let mut mask = self.member.clone();
        mask[n as usize] = true;
        Ok(Self::from_mask_unchecked(mask))
    }

    /// Key used in JSON exports, e.g. `c=4;0,2`.
    pub fn canonical_key(&self) -> String {
        let elems: Vec<String> = self.small.iter().map(u32::to_string).collect();
        format!("c={};{}", self.conductor, elems.join(","))
    }
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<gens={}; F={}; m={}; g={}>",
            join(&self.minimal_generators()),
            self.frobenius(),
            self.multiplicity(),
            self.genus()
        )
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", join(&self.minimal_generators()))
    }
}

/// Serialised form. Only `gens` is read back; the other fields are
/// recomputed.
#[derive(Serialize, Deserialize)]
struct SemigroupRepr {
    gens: Vec<u32>,
    #[serde(default, skip_deserializing)]
    frobenius: i64,
    #[serde(default, skip_deserializing)]
    multiplicity: u32,
    #[serde(default, skip_deserializing)]
    genus: u32,
}

impl From<NumericalSemigroup> for SemigroupRepr {
    fn from(s: NumericalSemigroup) -> Self {
        Self {
            gens: s.minimal_generators(),
            frobenius: s.frobenius(),
            multiplicity: s.multiplicity(),
            genus: s.genus(),
        }
    }
}

impl TryFrom<SemigroupRepr> for NumericalSemigroup {
    type Error = Error;

    fn try_from(r: SemigroupRepr) -> Result<Self> {
        Self::from_generators(&r.gens)
    }
}
