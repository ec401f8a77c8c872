//! Named example systems with their expected growth.
//!
//! All expected series are distance-indexed (`d = 0` is the initial state).

use std::collections::BTreeMap;

use serde_json::json;

use crate::algebra::sum;
use crate::analysis::{occurrence_sequence, GrowthClass};
use crate::error::{Error, Result};
use crate::system::MultiwaySystem;
use crate::tm::{build_texp, enchain, enchain_with, BranchKind, EnchainOptions};

/// Closed form or reference sequence for an entry's layer counts.
#[derive(Debug, Clone, PartialEq)]
pub enum ExpectedGrowth {
    /// 1 for `d < n`, then 0.
    Chain { n: u64 },
    Constant,
    /// `binom(d + n - 1, n - 1)`
    Binomial { n: u64 },
    /// `n^d`
    Power { n: u64 },
    /// `n^w(d)` where the word length `w(d)` steps from `w` to `w + 1` at
    /// `d = 1 + w(w + 1)/2`, and 1 at `d = 0`.
    Intermediate { n: u64 },
    /// `1 + w(d)` for `d >= 1`, with `w` as above.
    InversePolynomial,
    /// `n^d` for `d <= m`, then 0.
    Burst { n: u64, m: u64 },
    /// Staircase in which value `k` occurs `block[k-1]` times.
    Staircase { block: Vec<u64> },
    /// No closed form shipped.
    Unspecified,
}

/// Word length reached at distance `d >= 1`: the largest `w` with
/// `1 + w(w - 1)/2 <= d`.
fn word_length(d: u64) -> u64 {
    let mut w = 1;
    while 1 + (w + 1) * w / 2 <= d {
        w += 1;
    }
    w
}

fn binom(n: u64, k: u64) -> u64 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

impl ExpectedGrowth {
    pub fn at(&self, d: u64) -> Option<u64> {
        Some(match self {
            ExpectedGrowth::Chain { n } => u64::from(d < *n),
            ExpectedGrowth::Constant => 1,
            ExpectedGrowth::Binomial { n } => binom(d + n - 1, n - 1),
            ExpectedGrowth::Power { n } => n.checked_pow(d as u32)?,
            ExpectedGrowth::Intermediate { .. } if d == 0 => 1,
            ExpectedGrowth::Intermediate { n } => n.checked_pow(word_length(d) as u32)?,
            ExpectedGrowth::InversePolynomial if d == 0 => 1,
            ExpectedGrowth::InversePolynomial => 1 + word_length(d),
            ExpectedGrowth::Burst { n, m } if d <= *m => n.checked_pow(d as u32)?,
            ExpectedGrowth::Burst { .. } => 0,
            ExpectedGrowth::Staircase { block } => {
                let seq = occurrence_sequence(block, d as usize + 1).ok()?;
                seq.values[d as usize]
            }
            ExpectedGrowth::Unspecified => return None,
        })
    }

    pub fn first(&self, len: usize) -> Option<Vec<u64>> {
        (0..len as u64).map(|d| self.at(d)).collect()
    }

    pub fn describe(&self) -> String {
        match self {
            ExpectedGrowth::Chain { n } => format!("1 for d < {n}, else 0"),
            ExpectedGrowth::Constant => "1".into(),
            ExpectedGrowth::Binomial { n } => format!("binom(d + {}, {})", n - 1, n - 1),
            ExpectedGrowth::Power { n } => format!("{n}^d"),
            ExpectedGrowth::Intermediate { n } => format!("{n}^w(d), w(d) = max w with 1 + w(w-1)/2 <= d"),
            ExpectedGrowth::InversePolynomial => "1 + w(d), w(d) = max w with 1 + w(w-1)/2 <= d".into(),
            ExpectedGrowth::Burst { n, m } => format!("{n}^d for d <= {m}, else 0"),
            ExpectedGrowth::Staircase { .. } => "staircase: k occurs T(k) + p(k) times".into(),
            ExpectedGrowth::Unspecified => "none".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ZooEntry {
    pub name: &'static str,
    pub params: BTreeMap<String, u64>,
    pub system: MultiwaySystem,
    pub expected: ExpectedGrowth,
    pub expected_class: GrowthClass,
    pub notes: &'static str,
}

impl ZooEntry {
    /// JSON manifest with the expected class, closed form and first terms.
    pub fn manifest(&self, terms: usize) -> serde_json::Value {
        json!({
            "name": self.name,
            "params": self.params,
            "expected_class": self.expected_class,
            "closed_form": self.expected.describe(),
            "first_terms": self.expected.first(terms),
            "notes": self.notes,
        })
    }
}

fn params(kv: &[(&str, u64)]) -> BTreeMap<String, u64> {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn letters(prefix: &str, n: u64) -> Vec<String> {
    (1..=n).map(|i| format!("[{prefix}{i}]")).collect()
}

/// `n` symbols `A1..An` with `Ai -> A(i+1)`, started on `A1`.
pub fn chain(n: u64) -> ZooEntry {
    assert!(n >= 1);
    let names = letters("A", n);
    let rules: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0].as_str(), w[1].as_str())).collect();
    ZooEntry {
        name: "chain",
        params: params(&[("N", n)]),
        system: MultiwaySystem::from_strs(&names[0], &rules),
        expected: ExpectedGrowth::Chain { n },
        expected_class: GrowthClass::Fin,
        notes: "terminating chain of N states",
    }
}

/// `({A -> AA}, A)`
pub fn constant() -> ZooEntry {
    ZooEntry {
        name: "constant",
        params: BTreeMap::new(),
        system: MultiwaySystem::from_strs("A", &[("A", "AA")]),
        expected: ExpectedGrowth::Constant,
        expected_class: GrowthClass::Bnd,
        notes: "one new state per layer",
    }
}

/// `({A -> AB}, A^n)`
pub fn polynomial(n: u64) -> ZooEntry {
    assert!(n >= 1);
    let init = "A".repeat(n as usize);
    ZooEntry {
        name: "polynomial",
        params: params(&[("N", n)]),
        system: MultiwaySystem::from_strs(&init, &[("A", "AB")]),
        expected: ExpectedGrowth::Binomial { n },
        expected_class: if n == 1 { GrowthClass::Bnd } else { GrowthClass::Pol { degree: (n - 1) as f64 } },
        notes: "figurate numbers of dimension N - 1",
    }
}

/// `({Q -> Q x_i}, Q)`
pub fn exponential(n: u64) -> ZooEntry {
    assert!(n >= 2);
    let xs = letters("x", n);
    let rhs: Vec<String> = xs.iter().map(|x| format!("Q{x}")).collect();
    let rules: Vec<(&str, &str)> = rhs.iter().map(|r| ("Q", r.as_str())).collect();
    ZooEntry {
        name: "exponential",
        params: params(&[("N", n)]),
        system: MultiwaySystem::from_strs("Q", &rules),
        expected: ExpectedGrowth::Power { n },
        expected_class: GrowthClass::Exp { base: n as f64 },
        notes: "every word over N letters, one length per layer",
    }
}

fn intermediate_rules(n: u64) -> Vec<(String, String)> {
    let mut rules = Vec::new();
    for x in letters("x", n) {
        rules.push(("TL".to_string(), format!("T{x}R")));
        rules.push(("RT".to_string(), format!("L{x}T")));
    }
    for x in letters("x", n) {
        rules.push((format!("R{x}"), format!("{x}R")));
        rules.push((format!("{x}L"), format!("L{x}")));
    }
    rules
}

fn borrow(rules: &[(String, String)]) -> Vec<(&str, &str)> {
    rules.iter().map(|(l, r)| (l.as_str(), r.as_str())).collect()
}

/// Scanners `R` and `L` bounce between two `T` markers, each pass writing one
/// more letter; the word length grows like the square root of the distance.
pub fn intermediate(n: u64) -> ZooEntry {
    assert!(n >= 2);
    let rules = intermediate_rules(n);
    ZooEntry {
        name: "intermediate",
        params: params(&[("N", n)]),
        system: MultiwaySystem::from_strs("TLT", &borrow(&rules)),
        expected: ExpectedGrowth::Intermediate { n },
        expected_class: GrowthClass::Int,
        notes: "N^sqrt(d) up to constants",
    }
}

/// The one-letter intermediate system with a `Z` branch at every turn of
/// the scanner: `T L -> Z`, `R T -> Z`, `Z -> Z Z`.
pub fn inverse_polynomial() -> ZooEntry {
    let mut rules = intermediate_rules(1);
    rules.push(("TL".into(), "Z".into()));
    rules.push(("RT".into(), "Z".into()));
    rules.push(("Z".into(), "ZZ".into()));
    ZooEntry {
        name: "inverse_polynomial",
        params: BTreeMap::new(),
        system: MultiwaySystem::from_strs("TLT", &borrow(&rules)),
        expected: ExpectedGrowth::InversePolynomial,
        expected_class: GrowthClass::InvPol { exponent: 0.5 },
        notes: "one extra state per completed pass: about sqrt(2d)",
    }
}

/// `({R A -> x_i R}, R A^m)`
pub fn burst(n: u64, m: u64) -> ZooEntry {
    assert!(n >= 2 && m >= 1);
    let xs = letters("x", n);
    let rhs: Vec<String> = xs.iter().map(|x| format!("{x}R")).collect();
    let rules: Vec<(&str, &str)> = rhs.iter().map(|r| ("RA", r.as_str())).collect();
    let init = format!("R{}", "A".repeat(m as usize));
    ZooEntry {
        name: "burst",
        params: params(&[("N", n), ("M", m)]),
        system: MultiwaySystem::from_strs(&init, &rules),
        expected: ExpectedGrowth::Burst { n, m },
        expected_class: GrowthClass::Fin,
        notes: "N^d new states while the scanner consumes the M letters",
    }
}

fn texp_blocks(k: u64, placement_extra: u64) -> Vec<u64> {
    (1..=k).map(|n| (1u64 << (n + 2)) - 1 + 2 * (n + placement_extra)).collect()
}

/// Enchained binary counter: the staircase grows like `log2(d)`.
pub fn log_system() -> ZooEntry {
    let system = enchain(&build_texp()).expect("bundled machine is a T-halter");
    ZooEntry {
        name: "log_system",
        params: BTreeMap::new(),
        system,
        // head halts left of the output: p(n) = 2(n + 2)
        expected: ExpectedGrowth::Staircase { block: texp_blocks(40, 2) },
        expected_class: GrowthClass::InvExp,
        notes: "k occurs 2^(k+2) - 1 + 2(k + 2) times",
    }
}

/// `polynomial(2)` summed with the enchained binary counter whose restart
/// branch scans the fresh output writing one of four letters per cell. Each
/// restart after run `k` adds a burst peaking at `4^(k+1)` states, so the
/// upper envelope grows quadratically while the lower one stays linear.
pub fn oscillating_composite() -> ZooEntry {
    let opts = EnchainOptions { branch: BranchKind::Burst { width: 4 }, ..EnchainOptions::default() };
    let counter = enchain_with(&build_texp(), &opts).expect("bundled machine is a T-halter").system;
    let system = sum(&polynomial(2).system, &counter).expect("disjoint alphabets").system;
    ZooEntry {
        name: "oscillating_composite",
        params: BTreeMap::new(),
        system,
        expected: ExpectedGrowth::Unspecified,
        expected_class: GrowthClass::Oscillating,
        notes: "linear baseline d + 2 with bursts of 4^k after each restart",
    }
}

/// Entry names with their parameters and defaults.
pub const ENTRIES: [(&str, &[(&str, u64)]); 9] = [
    ("chain", &[("N", 3)]),
    ("constant", &[]),
    ("polynomial", &[("N", 3)]),
    ("exponential", &[("N", 3)]),
    ("intermediate", &[("N", 3)]),
    ("inverse_polynomial", &[]),
    ("burst", &[("N", 2), ("M", 3)]),
    ("log_system", &[]),
    ("oscillating_composite", &[]),
];

/// Builds an entry by name. Missing parameters take their defaults.
pub fn by_name(name: &str, overrides: &BTreeMap<String, u64>) -> Result<ZooEntry> {
    let (_, defaults) = ENTRIES.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::Zoo(name.to_string()))?;
    if let Some(k) = overrides.keys().find(|k| !defaults.iter().any(|(d, _)| d == k)) {
        return Err(Error::Zoo(format!("{name} has no parameter `{k}`")));
    }
    let p = |k: &str| overrides.get(k).copied().unwrap_or_else(|| defaults.iter().find(|(d, _)| *d == k).expect("known").1);
    let check = |k: &str, min: u64| -> Result<u64> {
        let v = p(k);
        if v < min {
            return Err(Error::Zoo(format!("{name}: {k} must be at least {min}")));
        }
        Ok(v)
    };
    Ok(match name {
        "chain" => chain(check("N", 1)?),
        "constant" => constant(),
        "polynomial" => polynomial(check("N", 1)?),
        "exponential" => exponential(check("N", 2)?),
        "intermediate" => intermediate(check("N", 2)?),
        "inverse_polynomial" => inverse_polynomial(),
        "burst" => burst(check("N", 2)?, check("M", 1)?),
        "log_system" => log_system(),
        "oscillating_composite" => oscillating_composite(),
        _ => unreachable!(),
    })
}
