//! Patterns on numerical semigroups.
//!
//! A pattern is a linear form `a₁x₁ + … + aₙxₙ` with nonzero integer
//! coefficients. A numerical semigroup `Λ` admits it when every evaluation
//! on a non-increasing tuple of members lands back in `Λ`; the Arf
//! semigroups are exactly those admitting `x₁ + x₂ - x₃`.
//!
//! The crate provides:
//!
//! * [`NumericalSemigroup`]: canonical representation, generators, Frobenius
//!   number, Apéry sets and depth;
//! * [`Pattern`]: parsing, admissibility classes, admissibility degree,
//!   boolean decomposition;
//! * [`admits`], [`image`], [`closure`], [`minimal_p_system`];
//! * [`subtraction_degree`] and [`witness_family`];
//! * [`enumerate_sp`] / [`enumerate_all`], building the DAG of semigroups
//!   admitting a pattern, and [`equivalence_check`].
//!
//! ```
//! use semigroup_patterns::{closure, NumericalSemigroup, Pattern};
//!
//! let s: NumericalSemigroup = "7,15".parse().unwrap();
//! let p: Pattern = "x1+x2+x3-x4".parse().unwrap();
//! let trace = closure(&s, &p).unwrap();
//! assert_eq!(trace.last().minimal_generators(), vec![7, 15, 31, 47, 48]);
//! ```

pub mod admits;
pub mod degree;
pub mod enumerate;
pub mod equivalence;
pub mod error;
pub mod pattern;
pub mod semigroup;
mod tuples;

pub use admits::{
    admits, admits_with_bound, closure, default_search_bound, image, minimal_p_system,
    AdmitsVerdict, ClosureTrace,
};
pub use degree::{subtraction_degree, subtraction_degree_bounds, witness_family};
pub use enumerate::{enumerate_all, enumerate_sp, DagEdge, DagExport, DagNode, SemigroupDag};
pub use equivalence::{equivalence_check, EquivalenceVerdict};
pub use error::{Error, Result};
pub use pattern::{AdmissibilityDegree, BooleanDecomposition, Pattern};
pub use semigroup::{AperySet, NumericalSemigroup};
