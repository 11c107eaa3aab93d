//! Exact computation with systems of sets of lengths.
//!
//! This crate builds explicit finitely generated monoids whose systems of
//! sets of lengths are prescribed in advance, and computes the associated
//! factorization invariants by exhaustive desk-scale enumeration:
//!
//! * [`lengthsets`] — sumsets, iterated sumsets, dilations and distance
//!   sets of finite sets of non-negative integers.
//! * [`families`] — additively closed families of length sets presented by
//!   finitely many indecomposable generators: membership, enumeration,
//!   decomposition.
//! * [`monoid`] — reduced finitely generated monoids given by integer atom
//!   matrices with a positive grading: membership, complete factorization
//!   sets, sets of lengths, element slices.
//! * [`realization`] — the block construction that realizes a prescribed
//!   set `L` (or a whole family) as the system of sets of lengths of such a
//!   monoid, plus exhaustive verification of its structural properties.
//! * [`zerosum`] — monoids of zero-sum sequences over finite abelian
//!   groups, an independently implemented Krull monoid used for
//!   cross-validation.
//! * [`invariants`] — distances between factorizations, catenary degrees,
//!   distance sets, bounded extraction of indecomposable length sets, and
//!   comparison of system slices.
//!
//! Every computation is exact (integer or rational arithmetic throughout)
//! and deterministic. The `lengthsmith` binary exposes the same operations
//! as batch subcommands with canonical JSON output; the `examples/`
//! directory exercises each capability end to end.

pub mod cli;
pub mod families;
pub mod invariants;
pub mod lengthsets;
pub mod monoid;
pub mod realization;
pub mod zerosum;

pub use families::FamilyPresentation;
pub use lengthsets::SetOfLengths;
pub use monoid::{Atom, Factorization, MonoidElement, MonoidPresentation, Weight};
pub use realization::{RealizedFamily, RealizedMonoid};
pub use zerosum::{GroupSpec, ZeroSumSequence};
