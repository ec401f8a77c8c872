use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbol::token_of;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Move {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transition {
    pub write: usize,
    pub mv: Move,
    pub next: usize,
}

/// Deterministic single-tape machine. States are `1..=num_states` with start
/// state 1; symbol 0 is the blank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuringMachine {
    pub num_states: usize,
    pub halting: BTreeSet<usize>,
    pub symbols: Vec<String>,
    pub delta: BTreeMap<(usize, usize), Transition>,
}

impl TuringMachine {
    /// Validates state ranges and totality on non-halting states.
    pub fn new(
        num_states: usize,
        halting: BTreeSet<usize>,
        symbols: Vec<String>,
        delta: BTreeMap<(usize, usize), Transition>,
    ) -> Result<Self> {
        if num_states == 0 {
            return Err(Error::TmInvalid("no states".into()));
        }
        if symbols.is_empty() {
            return Err(Error::TmInvalid("no tape symbols".into()));
        }
        if symbols.iter().collect::<BTreeSet<_>>().len() != symbols.len() {
            return Err(Error::TmInvalid("duplicate tape symbol".into()));
        }
        let valid_state = |q: usize| (1..=num_states).contains(&q);
        if let Some(q) = halting.iter().find(|&&q| !valid_state(q)) {
            return Err(Error::TmInvalid(format!("halting state {q} out of range")));
        }
        for (&(q, x), t) in &delta {
            if !valid_state(q) || !valid_state(t.next) {
                return Err(Error::TmInvalid(format!("transition from state {q} uses an unknown state")));
            }
            if x >= symbols.len() || t.write >= symbols.len() {
                return Err(Error::TmInvalid(format!("transition from state {q} uses an unknown symbol")));
            }
            if halting.contains(&q) {
                return Err(Error::TmInvalid(format!("halting state {q} has a transition")));
            }
        }
        for q in (1..=num_states).filter(|q| !halting.contains(q)) {
            for (x, name) in symbols.iter().enumerate() {
                if !delta.contains_key(&(q, x)) {
                    return Err(Error::TmInvalid(format!("missing transition for state {q}, symbol `{name}`")));
                }
            }
        }
        Ok(TuringMachine { num_states, halting, symbols, delta })
    }

    pub fn blank(&self) -> usize {
        0
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }

    pub fn is_halting(&self, q: usize) -> bool {
        self.halting.contains(&q)
    }

    pub fn non_halting(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.num_states).filter(|q| !self.is_halting(*q))
    }

    /// Serialises to the machine file format.
    pub fn to_tm_file(&self, header: &[String]) -> String {
        let mut out = String::new();
        for h in header {
            let _ = writeln!(out, "# {h}");
        }
        let halting: Vec<String> = self.halting.iter().map(|q| q.to_string()).collect();
        let _ = writeln!(out, "states: {} halting: {{{}}}", self.num_states, halting.join(", "));
        let _ = writeln!(out, "blank: {}", self.symbols[0]);
        let _ = writeln!(out, "symbols: {}", self.symbols.join(" "));
        for (&(q, x), t) in &self.delta {
            let m = if t.mv == Move::Left { 'L' } else { 'R' };
            let _ = writeln!(out, "delta: ({q}, {}) -> ({}, {m}, {})", self.symbols[x], self.symbols[t.write], t.next);
        }
        out
    }
}

/// Parses the machine file format:
///
/// ```text
/// states: 3 halting: {3}
/// blank: 0
/// symbols: 0 1        # optional; otherwise blank first, then first use
/// delta: (1, 0) -> (1, L, 2)
/// ```
pub fn parse_tm(text: &str) -> Result<TuringMachine> {
    let mut num_states = None;
    let mut halting = BTreeSet::new();
    let mut blank: Option<String> = None;
    let mut declared: Option<Vec<String>> = None;
    let mut raw: Vec<(usize, usize, String, String, Move, usize)> = Vec::new();
    let err = |line: usize, msg: &str| Error::TmParse { line, msg: msg.to_string() };

    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let content = l.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, body) = content.split_once(':').ok_or_else(|| err(line, "expected `key: value`"))?;
        let body = body.trim();
        match key.trim() {
            "states" => {
                let (n, rest) = match body.split_once("halting:") {
                    Some((n, rest)) => (n.trim(), rest.trim()),
                    None => (body, "{}"),
                };
                num_states = Some(n.parse::<usize>().map_err(|_| err(line, "bad state count"))?);
                let inner = rest
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(|| err(line, "halting set must be written {..}"))?;
                for q in inner.split(',').map(str::trim).filter(|q| !q.is_empty()) {
                    halting.insert(q.parse::<usize>().map_err(|_| err(line, "bad halting state"))?);
                }
            }
            "blank" => blank = Some(body.to_string()),
            "symbols" => declared = Some(body.split_whitespace().map(str::to_string).collect()),
            "delta" => {
                let (lhs, rhs) = body.split_once("->").ok_or_else(|| err(line, "expected `(q, x) -> (y, M, p)`"))?;
                let tuple = |s: &str| -> Option<Vec<String>> {
                    let s = s.trim().strip_prefix('(')?.strip_suffix(')')?;
                    Some(s.split(',').map(|p| p.trim().to_string()).collect())
                };
                let l = tuple(lhs).filter(|v| v.len() == 2).ok_or_else(|| err(line, "malformed `(state, read)`"))?;
                let r = tuple(rhs).filter(|v| v.len() == 3).ok_or_else(|| err(line, "malformed `(write, L|R, state)`"))?;
                let q = l[0].parse::<usize>().map_err(|_| err(line, "bad state"))?;
                let mv = match r[1].as_str() {
                    "L" => Move::Left,
                    "R" => Move::Right,
                    _ => return Err(err(line, "move must be L or R")),
                };
                let next = r[2].parse::<usize>().map_err(|_| err(line, "bad next state"))?;
                raw.push((line, q, l[1].clone(), r[0].clone(), mv, next));
            }
            other => return Err(err(line, &format!("unknown key `{other}`"))),
        }
    }

    let num_states = num_states.ok_or_else(|| err(0, "missing `states:` line"))?;
    let blank = blank.ok_or_else(|| err(0, "missing `blank:` line"))?;
    let symbols = match declared {
        Some(s) => {
            if s.first() != Some(&blank) {
                return Err(err(0, "declared symbols must start with the blank"));
            }
            s
        }
        None => {
            let mut s = vec![blank.clone()];
            for (_, _, x, y, _, _) in &raw {
                for n in [x, y] {
                    if !s.contains(n) {
                        s.push(n.clone());
                    }
                }
            }
            s
        }
    };
    let mut delta = BTreeMap::new();
    for (line, q, x, y, mv, next) in raw {
        let xi = symbols.iter().position(|s| *s == x).ok_or_else(|| err(line, "undeclared symbol"))?;
        let yi = symbols.iter().position(|s| *s == y).ok_or_else(|| err(line, "undeclared symbol"))?;
        if delta.insert((q, xi), Transition { write: yi, mv, next }).is_some() {
            return Err(err(line, "duplicate transition"));
        }
    }
    TuringMachine::new(num_states, halting, symbols, delta)
}

/// Touched tape cells, head position and control state.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TapeConfiguration {
    pub cells: VecDeque<usize>,
    pub head: usize,
    pub state: usize,
}

impl TapeConfiguration {
    /// Unary input `n` (`n >= 1` ones), head on the first digit, state 1.
    pub fn input(tm: &TuringMachine, n: u64) -> Result<Self> {
        let one = tm.symbol_index("1").ok_or_else(|| Error::TmInvalid("no symbol `1`".into()))?;
        Ok(TapeConfiguration { cells: std::iter::repeat_n(one, n.max(1) as usize).collect(), head: 0, state: 1 })
    }

    pub fn left_of_head(&self) -> Vec<usize> {
        self.cells.range(..self.head).copied().collect()
    }

    pub fn head_symbol(&self) -> usize {
        self.cells[self.head]
    }

    pub fn right_of_head(&self) -> Vec<usize> {
        self.cells.range(self.head + 1..).copied().collect()
    }

    /// Multiway-state notation: `_`, the cells with `H` and a state token
    /// after the head cell, `_`.
    pub fn render(&self, tm: &TuringMachine) -> String {
        let mut s = String::from("_");
        for (i, &c) in self.cells.iter().enumerate() {
            s.push_str(&token_of(&tm.symbols[c]));
            if i == self.head {
                let _ = write!(s, "H[q{}]", self.state);
            }
        }
        s.push('_');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Next(TapeConfiguration),
    Halted,
}

/// Applies one transition of a non-halting configuration in place.
fn advance(tm: &TuringMachine, cfg: &mut TapeConfiguration) {
    let t = tm.delta[&(cfg.state, cfg.head_symbol())];
    cfg.cells[cfg.head] = t.write;
    cfg.state = t.next;
    match t.mv {
        Move::Left if cfg.head == 0 => cfg.cells.push_front(tm.blank()),
        Move::Left => cfg.head -= 1,
        Move::Right => {
            cfg.head += 1;
            if cfg.head == cfg.cells.len() {
                cfg.cells.push_back(tm.blank());
            }
        }
    }
}

/// One transition. The tape grows by a blank when the head leaves it.
pub fn step_tm(tm: &TuringMachine, cfg: &TapeConfiguration) -> Step {
    if tm.is_halting(cfg.state) {
        return Step::Halted;
    }
    let mut next = cfg.clone();
    advance(tm, &mut next);
    Step::Next(next)
}

/// Configurations from `start` up to the halting one, or `None` if more than
/// `max_configs` would be needed.
pub fn run(tm: &TuringMachine, start: TapeConfiguration, max_configs: u64) -> Option<Vec<TapeConfiguration>> {
    let mut out = vec![start];
    loop {
        match step_tm(tm, out.last().expect("nonempty")) {
            Step::Halted => return Some(out),
            Step::Next(c) => {
                if out.len() as u64 >= max_configs {
                    return None;
                }
                out.push(c);
            }
        }
    }
}

/// Like [`run`] but keeps only the final configuration: returns the number of
/// configurations visited and the halting one.
pub fn run_to_halt(tm: &TuringMachine, mut cfg: TapeConfiguration, max_configs: u64) -> Option<(u64, TapeConfiguration)> {
    let mut count = 1;
    while !tm.is_halting(cfg.state) {
        if count >= max_configs {
            return None;
        }
        advance(tm, &mut cfg);
        count += 1;
    }
    Some((count, cfg))
}
