//! Slow reference implementations used to cross-check the library.
#![allow(dead_code)]

use semigroup_patterns::{NumericalSemigroup, Pattern};

/// Membership table on `[0, limit]` by unbounded-knapsack DP.
pub fn sieve(gens: &[u32], limit: usize) -> Vec<bool> {
    let mut member = vec![false; limit + 1];
    member[0] = true;
    for &g in gens {
        let g = g as usize;
        for x in g..=limit {
            if member[x - g] {
                member[x] = true;
            }
        }
    }
    member
}

/// Reference data for the semigroup generated by `gens`, assuming gcd 1.
pub struct Reference {
    pub member: Vec<bool>,
    pub frobenius: i64,
    pub multiplicity: u32,
}

impl Reference {
    pub fn new(gens: &[u32]) -> Self {
        let lo = *gens.iter().min().unwrap() as usize;
        let hi = *gens.iter().max().unwrap() as usize;
        // F <= (lo - 1)(hi - 1) - 1
        let limit = lo * hi + hi + 2;
        let member = sieve(gens, limit);
        let frobenius = member.iter().rposition(|&b| !b).map_or(-1, |i| i as i64);
        let multiplicity = (1..=limit).find(|&x| member[x]).unwrap() as u32;
        Self {
            member,
            frobenius,
            multiplicity,
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= self.member.len() || self.member[x]
    }

    /// Least member in each residue class mod `m`, indexed by residue.
    pub fn apery(&self, m: u32) -> Vec<u32> {
        (0..m)
            .map(|r| {
                (r..)
                    .step_by(m as usize)
                    .find(|&x| self.contains(x as usize))
                    .unwrap()
            })
            .collect()
    }

    /// Nonzero members that are not a sum of two nonzero members.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let top = (self.frobenius + 1) as usize + self.multiplicity as usize;
        (1..=top)
            .filter(|&x| self.contains(x))
            .filter(|&x| !(1..x).any(|y| self.contains(y) && self.contains(x - y)))
            .map(|x| x as u32)
            .collect()
    }
}

/// Brute-force admits: every non-increasing tuple drawn from the members
/// up to `c + extra` is evaluated.
pub fn brute_admits(s: &NumericalSemigroup, p: &Pattern, extra: u32) -> bool {
    let elems: Vec<u32> = s.elements_up_to(s.conductor() + extra).collect();
    let mut tuple = Vec::with_capacity(p.len());
    walk(s, p, &elems, elems.len(), &mut tuple)
}

fn walk(s: &NumericalSemigroup, p: &Pattern, elems: &[u32], top: usize, t: &mut Vec<u32>) -> bool {
    if t.len() == p.len() {
        let v: i128 = p
            .coeffs()
            .iter()
            .zip(t.iter())
            .map(|(&a, &x)| a as i128 * x as i128)
            .sum();
        return v >= 0 && s.contains(v as i64);
    }
    for i in 0..top {
        t.push(elems[i]);
        let ok = walk(s, p, elems, i + 1, t);
        t.pop();
        if !ok {
            return false;
        }
    }
    true
}
