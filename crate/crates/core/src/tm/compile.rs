use std::ops::RangeInclusive;

use super::halter::{validate_t_halter, HaltingFunctionMeasurement};
use super::machine::{Move, TuringMachine};
use crate::error::{Error, Result};
use crate::symbol::{Alphabet, Symbol};
use crate::system::{MultiwaySystem, Rule};

/// Glyphs the compiler and the enchaining transform use for themselves.
const RESERVED: [&str; 6] = ["_", "H", "X", "Y", "Z", "W"];

fn is_reserved(name: &str) -> bool {
    let numbered = |p: char| name.strip_prefix(p).is_some_and(|r| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()));
    RESERVED.contains(&name) || numbered('q') || numbered('b') || name.starts_with(crate::symbol::RESERVED_PREFIX)
}

fn state_glyph(q: usize) -> String {
    format!("q{q}")
}

/// Alphabet `_`, tape symbols, `H`, `q1..qN`.
fn base_alphabet(tm: &TuringMachine) -> Result<Alphabet> {
    if let Some(s) = tm.symbols.iter().find(|s| is_reserved(s)) {
        return Err(Error::TmInvalid(format!("tape symbol `{s}` collides with a reserved glyph")));
    }
    let mut a = Alphabet::new();
    a.intern("_");
    for s in &tm.symbols {
        a.intern(s);
    }
    a.intern("H");
    for q in 1..=tm.num_states {
        a.intern(&state_glyph(q));
    }
    Ok(a)
}

fn word(a: &Alphabet, glyphs: &[&str]) -> Vec<Symbol> {
    glyphs.iter().map(|g| a.get(g).expect("glyph interned")).collect()
}

fn tm_rules(tm: &TuringMachine, a: &Alphabet) -> Vec<Rule> {
    let sym = |i: usize| tm.symbols[i].as_str();
    let blank = sym(tm.blank());
    let mut main = Vec::new();
    let mut edge = Vec::new();
    for q in tm.non_halting() {
        let qs = state_glyph(q);
        for x1 in 0..tm.symbols.len() {
            let t = tm.delta[&(q, x1)];
            let ms = state_glyph(t.next);
            let (x, y) = (sym(x1), sym(t.write));
            match t.mv {
                Move::Right => {
                    for x2 in tm.symbols.iter().map(String::as_str) {
                        main.push(Rule::new(word(a, &[x, "H", &qs, x2]), word(a, &[y, x2, "H", &ms])));
                    }
                    edge.push(Rule::new(word(a, &[x, "H", &qs, "_"]), word(a, &[y, blank, "H", &ms, "_"])));
                }
                Move::Left => {
                    for x2 in tm.symbols.iter().map(String::as_str) {
                        main.push(Rule::new(word(a, &[x2, x, "H", &qs]), word(a, &[x2, "H", &ms, y])));
                    }
                    edge.push(Rule::new(word(a, &["_", x, "H", &qs]), word(a, &["_", blank, "H", &ms, y])));
                }
            }
        }
    }
    main.extend(edge);
    main
}

/// `_ 1 H q1 1^(n-1) _`: unary input `n`, head on the first digit.
pub fn initial_string(tm: &TuringMachine, n: u64) -> Result<Vec<Symbol>> {
    let a = base_alphabet(tm)?;
    tm.symbol_index("1").ok_or_else(|| Error::TmInvalid("no symbol `1`".into()))?;
    let mut g = vec!["_", "1", "H", "q1"];
    g.extend(std::iter::repeat_n("1", n.max(1) as usize - 1));
    g.push("_");
    Ok(word(&a, &g))
}

/// Emulating system: for each transition, one rule per neighbouring tape
/// symbol, then one rule for the neighbouring boundary `_`. The initial
/// string is the input 1.
pub fn compile_tm(tm: &TuringMachine) -> Result<MultiwaySystem> {
    let a = base_alphabet(tm)?;
    let rules = tm_rules(tm, &a);
    let init = if tm.symbol_index("1").is_some() { initial_string(tm, 1)? } else { word(&a, &["_", tm.symbols[0].as_str(), "H", "q1", "_"]) };
    Ok(MultiwaySystem::new(a, rules, init))
}

/// What the enchained system spawns at each restart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchKind {
    /// `0Y1 -> Z`, `Z -> ZZ`: one new state per layer forever.
    ZChain,
    /// `0Y1 -> 0W1`, `W1 -> b_i W`: a scanner rewriting the fresh output
    /// into every word over `width` letters, then dying at its end.
    Burst { width: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnchainOptions {
    pub probe: RangeInclusive<u64>,
    pub max_configs: u64,
    pub branch: BranchKind,
}

impl Default for EnchainOptions {
    fn default() -> Self {
        EnchainOptions { probe: 1..=4, max_configs: 1 << 20, branch: BranchKind::ZChain }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enchained {
    pub system: MultiwaySystem,
    /// Probe measurement that gated the transform.
    pub measurement: HaltingFunctionMeasurement,
}

/// [`enchain_with`] using default options.
pub fn enchain(tm: &TuringMachine) -> Result<MultiwaySystem> {
    enchain_with(tm, &EnchainOptions::default()).map(|e| e.system)
}

/// Compiled machine plus the restart shuttle:
///
/// ```text
/// H f -> X            for each halting f
/// X 1 -> 1 X          X 0 -> Y _ 0      X _ -> Y _ _
/// 1 Y -> Y 1
/// 0 Y 1 -> 0 _ 1 H q1                   _ Y 1 -> _ _ 1 H q1
/// ```
///
/// and the branch rules selected by `opts.branch`, each with the same two
/// left contexts `0` and `_`. Started on input 1.
pub fn enchain_with(tm: &TuringMachine, opts: &EnchainOptions) -> Result<Enchained> {
    let measurement = validate_t_halter(tm, opts.probe.clone(), opts.max_configs);
    if let Some((n, v)) = measurement.violations.first() {
        return Err(Error::NotTHalter(format!("input {n}: {v}")));
    }
    let mut a = base_alphabet(tm)?;
    let mut rules = tm_rules(tm, &a);
    for g in ["X", "Y"] {
        a.intern(g);
    }
    let blank = tm.symbols[tm.blank()].clone();
    let b = blank.as_str();
    for f in tm.halting.iter().map(|&f| state_glyph(f)) {
        rules.push(Rule::new(word(&a, &["H", &f]), word(&a, &["X"])));
    }
    let mut push = |a: &Alphabet, l: &[&str], r: &[&str]| rules.push(Rule::new(word(a, l), word(a, r)));
    push(&a, &["X", "1"], &["1", "X"]);
    push(&a, &["X", b], &["Y", "_", b]);
    push(&a, &["X", "_"], &["Y", "_", "_"]);
    push(&a, &["1", "Y"], &["Y", "1"]);
    for left in [b, "_"] {
        push(&a, &[left, "Y", "1"], &[left, "_", "1", "H", "q1"]);
    }
    match opts.branch {
        BranchKind::ZChain => {
            a.intern("Z");
            for left in [b, "_"] {
                push(&a, &[left, "Y", "1"], &["Z"]);
            }
            push(&a, &["Z"], &["Z", "Z"]);
        }
        BranchKind::Burst { width } => {
            a.intern("W");
            let letters: Vec<String> = (1..=width).map(|i| format!("b{i}")).collect();
            for l in &letters {
                a.intern(l);
            }
            for left in [b, "_"] {
                push(&a, &[left, "Y", "1"], &[left, "W", "1"]);
            }
            for l in &letters {
                push(&a, &["W", "1"], &[l, "W"]);
            }
        }
    }
    let init = initial_string(tm, 1)?;
    Ok(Enchained { system: MultiwaySystem::new(a, rules, init), measurement })
}
