//! The directed acyclic graph of semigroups admitting a pattern, and the
//! plain census of all semigroups by genus.
//!
//! Every semigroup other than `ℕ` is obtained from `Λ ∪ {F(Λ)}` by removing
//! a minimal generator larger than the Frobenius number. For a strongly
//! admissible premonic `p`, `S(p)` is closed under adding the Frobenius
//! number, and `Λ ∖ {a}` stays in `S(p)` exactly when `a` is in the minimal
//! p-system. Expanding breadth-first from `ℕ` therefore reaches every
//! member of `S(p)`.

mod dot;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::admits::p_system_unchecked;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DagNode {
    pub semigroup: NumericalSemigroup,
    /// Minimal p-system (ordinary minimal generators for the census).
    pub psystem: Vec<u32>,
    pub frobenius: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DagEdge {
    pub from: NumericalSemigroup,
    pub to: NumericalSemigroup,
    pub removed: u32,
}

/// Nodes keyed by canonical semigroup, edges `parent → parent ∖ {a}`.
/// Iteration order is the semigroup ordering (conductor, then elements).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SemigroupDag {
    nodes: BTreeMap<NumericalSemigroup, DagNode>,
    edges: BTreeSet<DagEdge>,
    root: Option<NumericalSemigroup>,
}

impl SemigroupDag {
    pub fn nodes(&self) -> impl Iterator<Item = &DagNode> {
        self.nodes.values()
    }

    pub fn edges(&self) -> impl Iterator<Item = &DagEdge> {
        self.edges.iter()
    }

    pub fn root(&self) -> Option<&NumericalSemigroup> {
        self.root.as_ref()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, s: &NumericalSemigroup) -> Option<&DagNode> {
        self.nodes.get(s)
    }

    pub fn contains(&self, s: &NumericalSemigroup) -> bool {
        self.nodes.contains_key(s)
    }

    pub fn children<'a>(&'a self, s: &'a NumericalSemigroup) -> impl Iterator<Item = &'a DagEdge> {
        self.edges.iter().filter(move |e| &e.from == s)
    }

    pub fn out_degree(&self, s: &NumericalSemigroup) -> usize {
        self.children(s).count()
    }

    pub fn parents<'a>(&'a self, s: &'a NumericalSemigroup) -> impl Iterator<Item = &'a DagEdge> {
        self.edges.iter().filter(move |e| &e.to == s)
    }

    pub fn leaves(&self) -> impl Iterator<Item = &DagNode> {
        self.nodes
            .values()
            .filter(|n| self.out_degree(&n.semigroup) == 0)
    }

    /// The semigroups themselves, in order.
    pub fn semigroups(&self) -> impl Iterator<Item = &NumericalSemigroup> {
        self.nodes.keys()
    }

    /// The JSON export shape.
    pub fn export(&self) -> DagExport {
        DagExport {
            nodes: self
                .nodes
                .values()
                .map(|n| NodeExport {
                    key: n.semigroup.canonical_key(),
                    psystem: n.psystem.clone(),
                    frobenius: n.frobenius,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeExport {
                    from: e.from.canonical_key(),
                    to: e.to.canonical_key(),
                    removed: e.removed,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DagExport {
    pub nodes: Vec<NodeExport>,
    pub edges: Vec<EdgeExport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeExport {
    pub key: String,
    pub psystem: Vec<u32>,
    pub frobenius: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeExport {
    pub from: String,
    pub to: String,
    pub removed: u32,
}

/// Breadth-first expansion from `ℕ`. `generators` yields the removable
/// generators of a node (its p-system); only those above the Frobenius
/// number give children, and `keep` decides whether a child is in range.
fn expand(
    generators: impl Fn(&NumericalSemigroup) -> Vec<u32>,
    keep: impl Fn(&NumericalSemigroup) -> bool,
) -> SemigroupDag {
    let root = NumericalSemigroup::natural();
    let mut dag = SemigroupDag {
        root: Some(root.clone()),
        ..Default::default()
    };
    let mut queue = VecDeque::from([root]);
    while let Some(s) = queue.pop_front() {
        if dag.nodes.contains_key(&s) {
            continue;
        }
        let psystem = generators(&s);
        let frobenius = s.frobenius();
        for &a in &psystem {
            if (a as i64) <= frobenius {
                continue;
            }
            let child = s
                .remove_element(a)
                .expect("p-system elements are minimal generators");
            if keep(&child) {
                dag.edges.insert(DagEdge {
                    from: s.clone(),
                    to: child.clone(),
                    removed: a,
                });
                queue.push_back(child);
            }
        }
        dag.nodes.insert(
            s.clone(),
            DagNode {
                semigroup: s,
                psystem,
                frobenius,
            },
        );
    }
    dag
}

/// All semigroups admitting `p` with Frobenius number at most
/// `max_frobenius`.
pub fn enumerate_sp(p: &Pattern, max_frobenius: i64) -> Result<SemigroupDag> {
    if !p.is_premonic() {
        return Err(Error::NotPremonic);
    }
    if !p.is_strongly_admissible() {
        return Err(Error::NotStronglyAdmissible);
    }
    Ok(expand(
        |s| p_system_unchecked(s, p),
        |child| child.frobenius() <= max_frobenius,
    ))
}

/// Every numerical semigroup of genus at most `max_genus`.
pub fn enumerate_all(max_genus: u32) -> SemigroupDag {
    expand(NumericalSemigroup::minimal_generators, |child| {
        child.genus() <= max_genus
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_censuses() {
        assert_eq!(enumerate_all(0).len(), 1);
        let one = enumerate_all(1);
        assert_eq!(one.len(), 2);
        assert_eq!(one.edges().count(), 1);
        assert_eq!(enumerate_all(3).len(), 8);
    }

    #[test]
    fn rejects_unsuitable_patterns() {
        assert_eq!(
            enumerate_sp(&Pattern::new(vec![2, 2, -2]).unwrap(), 5),
            Err(Error::NotPremonic)
        );
        assert_eq!(
            enumerate_sp(&Pattern::trivializing(), 5),
            Err(Error::NotStronglyAdmissible)
        );
    }

    #[test]
    fn root_only_below_first_gap() {
        let dag = enumerate_sp(&Pattern::arf(), 0).unwrap();
        assert_eq!(dag.len(), 1);
        assert!(dag.root().unwrap().is_natural());
    }
}
