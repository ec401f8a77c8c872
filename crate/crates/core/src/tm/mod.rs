//! Turing machines and their compilation into multiway systems.
//!
//! A configuration is written `_ cells _` with `H` and a state token right of
//! the cell under the head, e.g. `_01H[q3]1_`. Compiled systems evolve as a
//! single chain reproducing the machine one configuration per layer.
//! Enchaining restarts the machine on its own output forever and branches off
//! one ever-growing `Z` string at every restart.

pub mod compile;
pub mod halter;
pub mod machine;
pub mod machines;

pub use compile::{compile_tm, enchain, enchain_with, initial_string, BranchKind, EnchainOptions, Enchained};
pub use halter::{expected_growth, preparation_time, validate_t_halter, HaltingFunctionMeasurement, HeadPlacement, Violation};
pub use machine::{parse_tm, run, run_to_halt, step_tm, Move, Step, TapeConfiguration, Transition, TuringMachine};
pub use machines::{build_texp, t1};
