//! Finite hypergroups over a group.
//!
//! The crate connects two pictures of the same data:
//!
//! * a **group triple** `(G, H, M)` — a finite group, a subgroup, and a right
//!   transversal of the subgroup's cosets;
//! * a **hypergroup over a group** — a base set `M` together with a group `H`
//!   and four structural mappings (a right action, a cocycle into `H`, a
//!   twisted multiplication on `M`, and a pairing into `H`) subject to a short
//!   list of identities.
//!
//! Either side determines the other. [`equivalence::standard_construction`]
//! reads the structural mappings off a triple by factorizing products of
//! transversal elements; [`equivalence::exact_product`] rebuilds a group from
//! a hypergroup by multiplying formal words `alpha * a`. The two directions
//! are mutually inverse up to canonical isomorphisms, which
//! [`equivalence::unit_iso`] and [`equivalence::counit_iso`] construct and
//! verify on concrete instances.
//!
//! Everything is table-driven and fully checked: groups are Cayley tables
//! validated axiom by axiom, hypergroups carry explicit mapping tables whose
//! identities are swept exhaustively, and every reported failure comes with a
//! witness. The `hg` binary exposes the same operations over plain text files.

pub mod catalog;
pub mod cli;
pub mod equivalence;
pub mod format;
pub mod gf;
pub mod group;
pub mod hypergroup;
pub mod triple;

pub use group::{FiniteGroup, GroupError};
pub use hypergroup::{Hypergroup, HypergroupError, RawHypergroup};
pub use triple::{GroupTriple, TripleError};
