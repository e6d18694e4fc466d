//! Exact computational algebra for real representation rings of cyclic
//! 2-groups, and the integer duality shifts they produce.
//!
//! Everything here is integer arithmetic; there are no floats and no
//! tolerances. The crate covers five cooperating engines:
//!
//! * [`rep`] — virtual representations of `C_{2^n}` over the irreducible
//!   basis `1, σ, λ_0, …, λ_{n-2}`, with restriction and induction in the
//!   2-complete sense.
//! * [`dualizing`] — the monomial (signed-permutation) orbit decomposition
//!   of the dualizing representation of a height-`h` Lubin-Tate spectrum
//!   at `p = 2`, plus its closed form.
//! * [`two_adic`] — 2-adic valuations, the modular lemmas behind the orbit
//!   counts, and the cyclotomic obstruction that pins down when the full
//!   automorphism group can act.
//! * [`ledger`] — periodicity ledgers: known invertible classes recorded
//!   with provenance, and the integer lattices they span (solved exactly
//!   by Hermite normal form).
//! * [`shift`] — solving `s + V ∈ lattice` for the integer shift `s`, with
//!   certificates, cross-level congruence checks, and candidate
//!   representation enumeration.

pub mod dualizing;
mod error;
pub mod lattice;
pub mod ledger;
pub mod rep;
pub mod shift;
pub mod two_adic;

pub use error::{Error, Result};
pub use rep::{Group, VirtualRep};

// The guide under book/ doubles as documentation modules so that its
// code blocks compile and run with the rest of the doc-tests.
#[doc = include_str!("../../../book/src/introduction.md")]
pub mod guide_introduction {}
#[doc = include_str!("../../../book/src/representation-ring.md")]
pub mod guide_representation_ring {}
#[doc = include_str!("../../../book/src/dualizing-orbits.md")]
pub mod guide_dualizing_orbits {}
#[doc = include_str!("../../../book/src/two-adic-lemmas.md")]
pub mod guide_two_adic_lemmas {}
#[doc = include_str!("../../../book/src/ledgers.md")]
pub mod guide_ledgers {}
#[doc = include_str!("../../../book/src/duality-shifts.md")]
pub mod guide_duality_shifts {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod guide_cli {}

#[doc = include_str!("../../../README.md")]
#[cfg(doctest)]
mod readme_doctests {}
