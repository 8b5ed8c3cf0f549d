//! Finite involutive lattices around the super-paraorthomodular variety.
//!
//! The crate covers:
//! - validated bounded posets and lattices with an antitone involution ([`poset`]),
//! - class membership with witnesses ([`classify`]),
//! - subalgebras, Kleene blocks, congruences, isomorphism and forbidden
//!   configurations ([`subalg`]),
//! - constructions such as ordinal sums, products, Moisil interval
//!   algebras, localizers and Sasaki residuation ([`constructs`]),
//! - commutativity ([`commute`]),
//! - exact spectral effects over rational matrices ([`spectral`]),
//! - referential matrices and the induced entailment ([`refmat`]),
//! - a named catalog, exhaustive enumeration and a census ([`catalog`], [`enumerate`], [`census`]),
//! - a text format and DOT export ([`io`]).

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod census;
pub mod classify;
pub mod commute;
pub mod constructs;
mod elemset;
pub mod enumerate;
pub mod io;
pub mod poset;
pub mod refmat;
pub mod spectral;
pub mod subalg;

/// Element index inside a finite structure.
pub type Elem = usize;

pub use elemset::ElemSet;
pub use poset::{InvolutiveLattice, InvolutivePoset, RawStructure, StructureError};
