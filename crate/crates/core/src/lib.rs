//! Exact algebra of finite G-graded rings.
//!
//! Rings, groups and gradings are given by explicit tables and validated
//! exhaustively. On top of that the crate enumerates graded right and
//! two-sided ideals, decides graded prime, weakly prime and almost prime
//! right ideals with replayable witnesses, builds graded quotients, and
//! audits the transfer results for these notions over a corpus of rings.
#![no_std]

extern crate alloc;

pub mod audit;
pub mod catalog;
pub mod error;
pub mod grading;
pub mod group;
pub mod hom;
pub mod ideal;
pub mod primality;
pub mod ring;
pub mod set;

pub use error::{AlgebraError, Axiom, Result};
pub use grading::GradedRing;
pub use group::FiniteGroup;
pub use hom::{quotient_ring, GradedHom, Quotient};
pub use ideal::{IdealFlags, Reading};
pub use primality::{ClassificationReport, Lattice, Property, Verdict, Witness};
pub use ring::{FiniteRing, Limits};
pub use set::ElementSet;
