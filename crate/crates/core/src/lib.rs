//! String multiway systems.
//!
//! A multiway system is a rule set, an initial string and an alphabet. Every
//! rule is applied at every matching position of every state, and the
//! resulting states are explored breadth-first with global deduplication.
//! The crate measures the resulting growth function, classifies it, combines
//! systems with sum and product, and compiles Turing machines into systems
//! whose growth follows a prescribed staircase.

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod dot;
pub mod error;
pub mod evolve;
pub mod symbol;
pub mod system;
pub mod tm;
pub mod zoo;

pub use error::{Error, Result};
pub use evolve::{evolve, successors, EvolveOptions, GrowthSeries, StateId, StatesGraph};
pub use symbol::{Alphabet, Symbol};
pub use system::{parse_system, MultiwaySystem, Rule};
