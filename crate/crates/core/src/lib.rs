//! Parabolic subgroups of graph products of cyclic groups and of Coxeter
//! groups.
//!
//! Chambers of the chamber system of a graph product are identified with
//! group elements in syllable normal form. On top of the word engine the
//! crate provides building-walls and dials, projections onto sectors,
//! minimal double coset representatives, and an explicit description of
//! `Γ_I ∩ γΓ_Jγ⁻¹` as a parabolic subgroup `γ̃Γ_Kγ̃⁻¹`. The [`coxeter`]
//! module does the same for arbitrary Coxeter groups, and [`oracle`] holds
//! the brute-force machinery every result is checked against.

pub mod cli;
pub mod coxeter;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod parabolic;
pub mod presentation;
pub mod words;

pub use error::{Error, Result};
pub use presentation::{CoxeterSpec, GenSet, GroupSpec, Order, Spec};
pub use words::{Chamber, Gallery, GraphProduct, NormalForm, Syllable, Word};
