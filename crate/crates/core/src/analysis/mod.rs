//! Envelopes, exact interpolation, occurrence sequences and an empirical
//! growth classifier.

pub mod classify;
pub mod envelope;
pub mod interp;
pub mod occurrence;

pub use classify::{classify, classify_counts, ClassificationReport, ClassifierConfig, GrowthClass, Regularity};
pub use envelope::{envelopes, Envelopes};
pub use interp::{linear_interpolation, PiecewiseLinear, Q};
pub use occurrence::{check_interpolation_inverse, occurrence_sequence, InverseCheck, OccurrenceSequence};
