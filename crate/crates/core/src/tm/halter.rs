use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::Serialize;

use super::machine::{run_to_halt, TapeConfiguration, TuringMachine};
use crate::analysis::occurrence_sequence;
use crate::error::{Error, Result};

/// Where the head rests after halting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HeadPlacement {
    OnFirstDigit,
    /// On the blank immediately left of the first digit.
    AdjacentLeft,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    BudgetExceeded,
    HeadMisplaced,
    /// The output is not `n + 1` ones.
    WrongOutput { ones: usize },
    NoBlankBefore,
    NoBlankAfter,
    /// Head placement differs from the one seen on earlier inputs.
    InconsistentPlacement,
    MissingOne,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BudgetExceeded => write!(f, "did not halt within the step budget"),
            Violation::HeadMisplaced => write!(f, "head is neither on nor directly left of the first digit"),
            Violation::WrongOutput { ones } => write!(f, "wrote {ones} ones instead of n + 1"),
            Violation::NoBlankBefore => write!(f, "output is not preceded by a blank"),
            Violation::NoBlankAfter => write!(f, "output is not followed by a blank"),
            Violation::InconsistentPlacement => write!(f, "head placement differs between inputs"),
            Violation::MissingOne => write!(f, "machine has no symbol `1`"),
        }
    }
}

/// Halting function `T(n)`, counted as configurations from start to halt
/// inclusive, and any constraint violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HaltingFunctionMeasurement {
    pub values: BTreeMap<u64, u64>,
    pub violations: Vec<(u64, Violation)>,
    pub placement: Option<HeadPlacement>,
}

impl HaltingFunctionMeasurement {
    pub fn is_t_halter(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_output(tm: &TuringMachine, cfg: &TapeConfiguration, n: u64) -> std::result::Result<HeadPlacement, Violation> {
    let one = tm.symbol_index("1").ok_or(Violation::MissingOne)?;
    let blank = tm.blank();
    let cells = &cfg.cells;
    let (placement, start) = if cells[cfg.head] == one {
        (HeadPlacement::OnFirstDigit, cfg.head)
    } else if cells[cfg.head] == blank && cells.get(cfg.head + 1) == Some(&one) {
        (HeadPlacement::AdjacentLeft, cfg.head + 1)
    } else {
        return Err(Violation::HeadMisplaced);
    };
    if start > 0 && cells[start - 1] != blank {
        return Err(Violation::NoBlankBefore);
    }
    let ones = cells.range(start..).take_while(|&&c| c == one).count();
    if ones as u64 != n + 1 {
        return Err(Violation::WrongOutput { ones });
    }
    match cells.get(start + ones) {
        None => Ok(placement),
        Some(&c) if c == blank => Ok(placement),
        Some(_) => Err(Violation::NoBlankAfter),
    }
}

/// Runs `tm` on unary inputs and checks the T-halter output constraints:
/// `n + 1` ones, blank (or tape end) on both sides, head on the first digit
/// or on the blank directly left of it.
pub fn validate_t_halter(tm: &TuringMachine, inputs: RangeInclusive<u64>, max_configs: u64) -> HaltingFunctionMeasurement {
    let mut m = HaltingFunctionMeasurement { values: BTreeMap::new(), violations: Vec::new(), placement: None };
    for n in inputs {
        let start = match TapeConfiguration::input(tm, n) {
            Ok(s) => s,
            Err(_) => {
                m.violations.push((n, Violation::MissingOne));
                continue;
            }
        };
        let Some((count, last)) = run_to_halt(tm, start, max_configs) else {
            m.violations.push((n, Violation::BudgetExceeded));
            continue;
        };
        m.values.insert(n, count);
        match check_output(tm, &last, n) {
            Ok(p) => match m.placement {
                None => m.placement = Some(p),
                Some(q) if q != p => m.violations.push((n, Violation::InconsistentPlacement)),
                _ => {}
            },
            Err(v) => m.violations.push((n, v)),
        }
    }
    m
}

/// Layers between a halt and the next start in the enchained system.
pub fn preparation_time(n: u64, placement: HeadPlacement) -> u64 {
    match placement {
        HeadPlacement::OnFirstDigit => 2 * (n + 1) + 1,
        HeadPlacement::AdjacentLeft => 2 * (n + 2),
    }
}

/// Predicted layer counts of the enchained system: the staircase in which
/// `n` occurs `T(n) + p(n)` times, for the first `horizon` layers.
pub fn expected_growth(m: &HaltingFunctionMeasurement, horizon: usize) -> Result<Vec<u64>> {
    let placement = m.placement.ok_or_else(|| Error::NotTHalter("no head placement measured".into()))?;
    let mut f = Vec::new();
    for (i, (&n, &t)) in m.values.iter().enumerate() {
        if n != i as u64 + 1 {
            break;
        }
        f.push(t + preparation_time(n, placement));
    }
    let covered: u64 = f.iter().sum();
    if (covered as usize) < horizon {
        return Err(Error::Sequence(format!("measurement covers {covered} layers, {horizon} requested")));
    }
    Ok(occurrence_sequence(&f, horizon)?.values)
}
