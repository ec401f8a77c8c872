use std::collections::BTreeSet;

use serde::Serialize;

use crate::evolve::{evolve, EvolveOptions, StatesGraph};
use crate::symbol::{Alphabet, Symbol};
use crate::system::MultiwaySystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Independence {
    Independent,
    IndependentUpToHorizon,
    /// The first layer whose states or outgoing edges differ.
    Dependent { layer: usize },
}

type Layer = (BTreeSet<Vec<Symbol>>, BTreeSet<(Vec<Symbol>, Vec<Symbol>)>);

fn layer_view(g: &StatesGraph, d: usize) -> Layer {
    let states = g.layer(d).map(|id| g.state(id).to_vec()).collect();
    let edges = g
        .edges()
        .iter()
        .filter(|e| g.layer_of(e.from) == d)
        .map(|e| (g.state(e.from).to_vec(), g.state(e.to).to_vec()))
        .collect();
    (states, edges)
}

/// Compares the graph of `base` with the graph of the same initial string
/// under `base`'s rules plus `extra`'s rules. Extra rules can only add states
/// and edges, so equal layers mean equal graphs.
fn one_side(base: &MultiwaySystem, extra: &MultiwaySystem, horizon: usize) -> Independence {
    let mut alphabet = Alphabet::new();
    let (rb, init) = base.lift_into(&mut alphabet);
    let (re, _) = extra.lift_into(&mut alphabet);
    let alone = MultiwaySystem::new(alphabet.clone(), rb.clone(), init.clone());
    let joint = MultiwaySystem::new(alphabet, rb.into_iter().chain(re).collect(), init);
    let ga = evolve(&alone, EvolveOptions::new(horizon));
    let gj = evolve(&joint, EvolveOptions::new(horizon));
    let layers = ga.num_layers().min(gj.num_layers());
    for d in 0..layers {
        if layer_view(&ga, d) != layer_view(&gj, d) {
            return Independence::Dependent { layer: d };
        }
    }
    if ga.exhausted && gj.exhausted && !ga.truncated && !gj.truncated {
        Independence::Independent
    } else {
        Independence::IndependentUpToHorizon
    }
}

/// Rule independence of two systems, evolved to `horizon` layers.
/// Disjoint alphabets are independent without simulation.
pub fn check_rule_independence(m1: &MultiwaySystem, m2: &MultiwaySystem, horizon: usize) -> Independence {
    assert!(horizon >= 2, "horizon must be at least 2");
    if !m1.alphabet.glyphs().iter().any(|g| m2.alphabet.contains(g)) {
        return Independence::Independent;
    }
    match (one_side(m1, m2, horizon), one_side(m2, m1, horizon)) {
        (Independence::Dependent { layer: a }, Independence::Dependent { layer: b }) => {
            Independence::Dependent { layer: a.min(b) }
        }
        (d @ Independence::Dependent { .. }, _) | (_, d @ Independence::Dependent { .. }) => d,
        (Independence::Independent, Independence::Independent) => Independence::Independent,
        _ => Independence::IndependentUpToHorizon,
    }
}
