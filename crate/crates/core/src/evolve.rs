use std::collections::{BTreeMap, HashSet};
use std::ops::Range;

use indexmap::IndexSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::symbol::Symbol;
use crate::system::{MultiwaySystem, Rule};

pub type State = Box<[Symbol]>;

/// Dense index into [`StatesGraph::states`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StateId(pub usize);

/// One distinct successor together with every (rule, position) producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Successor {
    pub state: Vec<Symbol>,
    pub witnesses: Vec<(usize, usize)>,
}

fn matches_at(s: &[Symbol], p: usize, lhs: &[Symbol]) -> bool {
    s.len() >= p + lhs.len() && &s[p..p + lhs.len()] == lhs
}

fn apply(s: &[Symbol], p: usize, rule: &Rule) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(s.len() - rule.lhs.len() + rule.rhs.len());
    out.extend_from_slice(&s[..p]);
    out.extend_from_slice(&rule.rhs);
    out.extend_from_slice(&s[p + rule.lhs.len()..]);
    out
}

/// Every distinct single-rewrite result of `state`, sorted by string, with all
/// witnesses in (rule, position) order. Overlapping occurrences all fire.
pub fn successors(state: &[Symbol], rules: &[Rule]) -> Vec<Successor> {
    let mut map: BTreeMap<Vec<Symbol>, Vec<(usize, usize)>> = BTreeMap::new();
    for (ri, rule) in rules.iter().enumerate() {
        for p in 0..state.len().saturating_sub(rule.lhs.len() - 1) {
            if matches_at(state, p, &rule.lhs) {
                map.entry(apply(state, p, rule)).or_default().push((ri, p));
            }
        }
    }
    map.into_iter().map(|(state, witnesses)| Successor { state, witnesses }).collect()
}

/// Distinct successors with their first witness only. Skips a position whose
/// result provably equals that of the previous match of the same rule, which
/// keeps long runs such as `ZZZ...` with `Z -> ZZ` linear.
fn successors_first_witness(state: &[Symbol], rules: &[Rule]) -> Vec<(State, usize, usize)> {
    let mut out: Vec<(State, usize, usize)> = Vec::new();
    let mut seen: HashSet<State> = HashSet::new();
    for (ri, rule) in rules.iter().enumerate() {
        let l = rule.lhs.len();
        let mut prev: Option<usize> = None;
        for p in 0..state.len().saturating_sub(l - 1) {
            if !matches_at(state, p, &rule.lhs) {
                continue;
            }
            if let Some(q) = prev {
                // results at q and p agree iff rhs·s[q+l..p+l] == s[q..p]·rhs
                let left = rule.rhs.iter().chain(&state[q + l..p + l]);
                let right = state[q..p].iter().chain(&rule.rhs);
                if left.eq(right) {
                    continue;
                }
            }
            prev = Some(p);
            let next: State = apply(state, p, rule).into_boxed_slice();
            if seen.insert(next.clone()) {
                out.push((next, ri, p));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvolveOptions {
    /// Number of layers to produce, counting the initial layer.
    pub horizon: usize,
    /// Cap on distinct states.
    pub max_states: usize,
    /// Cap on total symbols stored across all states.
    pub max_cells: usize,
    /// Whether to record edges. Growth-only runs can skip them.
    pub edges: bool,
}

pub const DEFAULT_MAX_STATES: usize = 1_000_000;
pub const DEFAULT_MAX_CELLS: usize = 100_000_000;

impl EvolveOptions {
    pub fn new(horizon: usize) -> Self {
        EvolveOptions { horizon, max_states: DEFAULT_MAX_STATES, max_cells: DEFAULT_MAX_CELLS, edges: true }
    }

    pub fn budget(mut self, max_states: usize) -> Self {
        self.max_states = max_states;
        self
    }

    pub fn without_edges(mut self) -> Self {
        self.edges = false;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub from: StateId,
    pub to: StateId,
    pub rule: usize,
    pub position: usize,
}

/// Layered graph of distinct reached strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatesGraph {
    states: IndexSet<State>,
    layer_starts: Vec<usize>,
    edges: Vec<Edge>,
    /// Stopped because the state or cell budget would have been exceeded.
    pub truncated: bool,
    /// The frontier emptied before the horizon.
    pub exhausted: bool,
    pub horizon: usize,
}

impl StatesGraph {
    pub fn state(&self, id: StateId) -> &[Symbol] {
        &self.states[id.0]
    }

    pub fn id_of(&self, s: &[Symbol]) -> Option<StateId> {
        self.states.get_index_of(s).map(StateId)
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Number of layers materialised, including trailing empty layers.
    pub fn num_layers(&self) -> usize {
        self.layer_starts.len()
    }

    pub fn layer_range(&self, d: usize) -> Range<usize> {
        let start = self.layer_starts[d];
        let end = self.layer_starts.get(d + 1).copied().unwrap_or(self.states.len());
        start..end
    }

    pub fn layer(&self, d: usize) -> impl Iterator<Item = StateId> {
        self.layer_range(d).map(StateId)
    }

    pub fn layer_of(&self, id: StateId) -> usize {
        self.layer_starts.partition_point(|&s| s <= id.0) - 1
    }

    pub fn states(&self) -> impl Iterator<Item = (StateId, &[Symbol])> {
        self.states.iter().enumerate().map(|(i, s)| (StateId(i), &s[..]))
    }

    /// Distinct (from, to) edges with their first witness, sorted by (from, to).
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn growth_series(&self) -> GrowthSeries {
        growth_series(self)
    }
}

/// Breadth-first evolution with global deduplication.
///
/// Within a layer, ids follow the lexicographic order of symbol ids. The last
/// layer is not expanded. A layer that would exceed the budget is discarded
/// and the graph is flagged `truncated`.
pub fn evolve(system: &MultiwaySystem, opts: EvolveOptions) -> StatesGraph {
    assert!(opts.horizon >= 1, "horizon must be at least 1");
    let mut states: IndexSet<State> = IndexSet::new();
    states.insert(system.init.clone().into_boxed_slice());
    let mut g = StatesGraph {
        states,
        layer_starts: vec![0],
        edges: Vec::new(),
        truncated: false,
        exhausted: false,
        horizon: opts.horizon,
    };
    let mut cells = system.init.len();
    let rules = &system.rules;

    for d in 0..opts.horizon - 1 {
        let frontier = g.layer_range(d);
        if frontier.is_empty() {
            g.exhausted = true;
            g.layer_starts.push(g.states.len());
            continue;
        }
        let expanded: Vec<Vec<(State, usize, usize)>> = frontier
            .clone()
            .into_par_iter()
            .map(|i| successors_first_witness(&g.states[i], rules))
            .collect();

        let mut fresh: Vec<&State> = expanded
            .iter()
            .flatten()
            .map(|(s, _, _)| s)
            .filter(|s| !g.states.contains(*s))
            .collect();
        fresh.par_sort_unstable();
        fresh.dedup();

        let new_cells: usize = fresh.iter().map(|s| s.len()).sum();
        if g.states.len() + fresh.len() > opts.max_states || cells + new_cells > opts.max_cells {
            g.truncated = true;
            break;
        }
        cells += new_cells;
        let fresh: Vec<State> = fresh.into_iter().cloned().collect();
        g.layer_starts.push(g.states.len());
        if fresh.is_empty() {
            g.exhausted = true;
        }
        g.states.extend(fresh);

        if opts.edges {
            let mut layer_edges: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
            for (from, succ) in frontier.zip(&expanded) {
                for (s, rule, pos) in succ {
                    let to = g.states.get_index_of(s).expect("successor interned");
                    let w = layer_edges.entry((from, to)).or_insert((*rule, *pos));
                    if (*rule, *pos) < *w {
                        *w = (*rule, *pos);
                    }
                }
            }
            g.edges.extend(layer_edges.into_iter().map(|((f, t), (rule, position))| Edge {
                from: StateId(f),
                to: StateId(t),
                rule,
                position,
            }));
        }
    }
    g
}

/// Per-layer counts of new states and the longest string in each layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthSeries {
    pub counts: Vec<u64>,
    pub max_len: Vec<usize>,
}

impl GrowthSeries {
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Index of the first empty layer, if any.
    pub fn first_zero(&self) -> Option<usize> {
        self.counts.iter().position(|&c| c == 0)
    }

    /// Ceiling `|alphabet|^max_len` for layer `d`, saturating.
    pub fn ceiling(&self, alphabet_size: usize, d: usize) -> u128 {
        (alphabet_size as u128).saturating_pow(self.max_len[d].min(u32::MAX as usize) as u32)
    }

    /// Number of strings of length at most `max_len[d]`.
    pub fn exact_ceiling(&self, alphabet_size: usize, d: usize) -> u128 {
        let k = alphabet_size as u128;
        let mut total: u128 = 0;
        let mut p: u128 = 1;
        for _ in 0..=self.max_len[d] {
            total = total.saturating_add(p);
            p = p.saturating_mul(k);
            if total == u128::MAX {
                break;
            }
        }
        total
    }

    /// Layers violating `counts[d] <= |alphabet|^max_len[d]`.
    pub fn ceiling_violations(&self, alphabet_size: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&d| self.counts[d] as u128 > self.ceiling(alphabet_size, d))
            .collect()
    }
}

pub fn growth_series(graph: &StatesGraph) -> GrowthSeries {
    let mut counts = Vec::with_capacity(graph.num_layers());
    let mut max_len = Vec::with_capacity(graph.num_layers());
    for d in 0..graph.num_layers() {
        let r = graph.layer_range(d);
        counts.push(r.len() as u64);
        max_len.push(r.map(|i| graph.states[i].len()).max().unwrap_or(0));
    }
    GrowthSeries { counts, max_len }
}

/// Shorthand: counts of `system` for `horizon` layers, without edges.
pub fn layer_counts(system: &MultiwaySystem, horizon: usize) -> Vec<u64> {
    evolve(system, EvolveOptions::new(horizon).without_edges()).growth_series().counts
}
