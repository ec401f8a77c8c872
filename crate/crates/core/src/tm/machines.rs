use super::machine::{parse_tm, TuringMachine};

pub const T1_SOURCE: &str = include_str!("../../data/t1.tm");
pub const TEXP_SOURCE: &str = include_str!("../../data/texp.tm");

/// The three-state unary incrementer: `T(n) = 2n + 3` configurations.
pub fn t1() -> TuringMachine {
    parse_tm(T1_SOURCE).expect("bundled machine is valid")
}

/// The binary-counter machine: `T(n) = 2^(n+2) - 1` configurations.
pub fn build_texp() -> TuringMachine {
    parse_tm(TEXP_SOURCE).expect("bundled machine is valid")
}
