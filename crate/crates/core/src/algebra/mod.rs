//! Sum and product of multiway systems, rule independence, binary alphabet
//! reduction and empirical checks of the semiring identities.
//!
//! The sum introduces one fresh symbol `$X` (rendered `[$X]`), shared by all
//! sums, which rewrites to every second-layer state of either operand. The
//! product concatenates the initial strings and unites the rule sets.

pub mod independence;
pub mod iso;
pub mod reduce;
pub mod semiring;

use serde::Serialize;
use serde_json::json;

pub use independence::{check_rule_independence, Independence};
pub use iso::{isomorphic, IsoResult};
pub use reduce::{reduce_to_binary, Reduction};
pub use semiring::{verify_semiring_identity, Identity, IdentityVerdict};

use crate::error::{Error, Result};
use crate::evolve::{evolve, EvolveOptions, StatesGraph};
use crate::symbol::{Alphabet, Symbol, RESERVED_PREFIX, SUM_SYMBOL};
use crate::system::{MultiwaySystem, Rule};

/// Whether the sum or product growth formula holds exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthLaw {
    Exact,
    /// Operands interact, share reachable strings or revisit their initial
    /// string. Counts may then fall either side of the formula.
    Inexact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Sum { operands: [MultiwaySystem; 2] },
    Product { operands: [MultiwaySystem; 2] },
    Reduced { original: MultiwaySystem, code: Vec<(String, String)> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinedSystem {
    pub system: MultiwaySystem,
    pub provenance: Provenance,
    pub growth_law: GrowthLaw,
}

impl CombinedSystem {
    /// Provenance sidecar: operation, operand rule files, fresh symbols,
    /// translation map and growth-law status.
    pub fn provenance_json(&self) -> serde_json::Value {
        let file = |m: &MultiwaySystem| m.to_rule_file(&[]);
        match &self.provenance {
            Provenance::Sum { operands } => json!({
                "op": "sum",
                "operands": operands.iter().map(file).collect::<Vec<_>>(),
                "fresh_symbols": [SUM_SYMBOL],
                "translation": {},
                "growth_law": self.growth_law,
            }),
            Provenance::Product { operands } => json!({
                "op": "product",
                "operands": operands.iter().map(file).collect::<Vec<_>>(),
                "fresh_symbols": [],
                "translation": {},
                "growth_law": self.growth_law,
            }),
            Provenance::Reduced { original, code } => json!({
                "op": "reduce",
                "operands": [file(original)],
                "fresh_symbols": [],
                "translation": code
                    .iter()
                    .map(|(k, v)| (k.clone(), json!(v)))
                    .collect::<serde_json::Map<_, _>>(),
                "growth_law": self.growth_law,
            }),
        }
    }
}

/// Neutral element of the sum: no rules, initial string `$X`.
pub fn zero() -> MultiwaySystem {
    let mut a = Alphabet::new();
    let x = a.intern(SUM_SYMBOL);
    MultiwaySystem::new(a, vec![], vec![x])
}

/// Neutral element of the product: no rules, empty initial string.
pub fn one() -> MultiwaySystem {
    MultiwaySystem::new(Alphabet::new(), vec![], vec![])
}

/// States at distance exactly 1 from the initial state.
pub fn second_layer(m: &MultiwaySystem) -> Vec<Vec<Symbol>> {
    let g = evolve(m, EvolveOptions::new(2).without_edges());
    if g.num_layers() < 2 {
        return vec![];
    }
    g.layer(1).map(|id| g.state(id).to_vec()).collect()
}

fn is_sum_system(m: &MultiwaySystem) -> bool {
    m.alphabet.get(SUM_SYMBOL).is_some_and(|x| m.init == [x])
}

fn check_reserved(m: &MultiwaySystem) -> Result<()> {
    for g in m.alphabet.glyphs() {
        if g.starts_with(RESERVED_PREFIX) && !(g == SUM_SYMBOL && is_sum_system(m)) {
            return Err(Error::ReservedSymbolCollision { glyph: g.clone() });
        }
    }
    Ok(())
}

/// Layers simulated when deciding the growth-law status.
const LAW_HORIZON: usize = 6;

fn growth_law(m1: &MultiwaySystem, m2: &MultiwaySystem) -> GrowthLaw {
    match check_rule_independence(m1, m2, LAW_HORIZON) {
        Independence::Dependent { .. } => GrowthLaw::Inexact,
        _ => GrowthLaw::Exact,
    }
}

/// `(R1 ∪ R2 ∪ {X -> s | s in S2(m1) ∪ S2(m2)}, X)`.
///
/// Operands may only contain `$X` when they are themselves sums.
pub fn sum(m1: &MultiwaySystem, m2: &MultiwaySystem) -> Result<CombinedSystem> {
    check_reserved(m1)?;
    check_reserved(m2)?;
    let mut alphabet = Alphabet::new();
    let (r1, _) = m1.lift_into(&mut alphabet);
    let (r2, _) = m2.lift_into(&mut alphabet);
    let x = alphabet.intern(SUM_SYMBOL);
    let mut rules: Vec<Rule> = r1.into_iter().chain(r2).collect();
    for m in [m1, m2] {
        let map: Vec<Symbol> = m.alphabet.glyphs().iter().map(|g| alphabet.get(g).expect("lifted")).collect();
        for s in second_layer(m) {
            rules.push(Rule::new(vec![x], s.iter().map(|c| map[c.index()]).collect()));
        }
    }
    Ok(CombinedSystem {
        system: MultiwaySystem::new(alphabet, rules, vec![x]),
        provenance: Provenance::Sum { operands: [m1.clone(), m2.clone()] },
        growth_law: match growth_law(m1, m2) {
            GrowthLaw::Exact if sum_law_applies(m1, m2, LAW_HORIZON) => GrowthLaw::Exact,
            _ => GrowthLaw::Inexact,
        },
    })
}

/// `(R1 ∪ R2, s1 s2)`.
pub fn product(m1: &MultiwaySystem, m2: &MultiwaySystem) -> Result<CombinedSystem> {
    let mut alphabet = Alphabet::new();
    let (r1, s1) = m1.lift_into(&mut alphabet);
    let (r2, s2) = m2.lift_into(&mut alphabet);
    let init = s1.into_iter().chain(s2).collect();
    Ok(CombinedSystem {
        system: MultiwaySystem::new(alphabet, r1.into_iter().chain(r2).collect(), init),
        provenance: Provenance::Product { operands: [m1.clone(), m2.clone()] },
        growth_law: growth_law(m1, m2),
    })
}

/// Conditions under which the sum formula is exact within `horizon` layers:
/// neither initial string is reached again and the operands reach no common
/// string. Rule independence alone does not give exactness when either fails.
pub fn sum_law_applies(m1: &MultiwaySystem, m2: &MultiwaySystem, horizon: usize) -> bool {
    let g1 = evolve(m1, EvolveOptions::new(horizon));
    let g2 = evolve(m2, EvolveOptions::new(horizon));
    let returns = |g: &StatesGraph| g.edges().iter().any(|e| e.to.0 == 0);
    if returns(&g1) || returns(&g2) {
        return false;
    }
    let names1: std::collections::HashSet<String> = g1.states().skip(1).map(|(_, s)| m1.render(s)).collect();
    let shared = g2.states().skip(1).any(|(_, s)| names1.contains(&m2.render(s)));
    !shared
}

/// Pointwise sum of distance-indexed series, `[1]` at distance 0.
pub fn sum_series(a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().min(b.len());
    (0..n).map(|d| if d == 0 { 1 } else { a[d] + b[d] }).collect()
}

/// Discrete convolution truncated to the shorter length.
pub fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().min(b.len());
    (0..n).map(|d| (0..=d).map(|k| a[k] * b[d - k]).sum()).collect()
}
