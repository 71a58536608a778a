//! Exact certification toolkit for s-stable Kneser graphs.
//!
//! The crate constructs s-stable Kneser graphs `KG(n,k)_{s-stab}` and their
//! auxiliary graphs on the ground set, enumerates automorphism groups by
//! individualization-refinement, solves maximum independent set and chromatic
//! number exactly, and certifies the expected structural facts (dihedral
//! automorphism groups, star-shaped maximum independent sets, fractional
//! chromatic number n/k) with explicit witnesses. Everything is
//! deterministic: no randomness, no floating point in any certificate.

pub mod aut;
pub mod bitset;
pub mod coloring;
pub mod dihedral;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod group;
pub mod indep;
pub mod params;
pub mod perm;
pub mod report;
pub mod stable;
pub mod starmap;
pub mod verify;

pub use error::{Error, Result};
pub use params::Params;
