//! Root data, real forms and the combinatorics of real loop Grassmannians.
//!
//! Layers, bottom up: [`lattice`] (exact integer lattices), [`rootdatum`]
//! (based root data, Weyl groups), [`characters`] (weight multiplicities and
//! decompositions), [`realform`] (Satake data, `θ`, restricted roots and the
//! catalog), [`dualgroup`] (the associated subgroup `Ĥ`) and [`grcomb`]
//! (orbit posets, components, specialization and branching).

pub mod characters;
pub mod dualgroup;
pub mod error;
pub mod grcomb;
pub mod lattice;
pub mod realform;
pub mod rootdatum;

pub use characters::{Character, Decomposition, GradedCharacter};
pub use dualgroup::{associated_subgroup, AssociatedSubgroup, LeviData};
pub use error::{Error, Result};
pub use lattice::{FiniteAbelianGroup, IntMatrix, Sublattice};
pub use realform::{catalog, Catalog, RealForm, SatakeData};
pub use rootdatum::{BasedRootDatum, CartanType};

/// Library version string.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
