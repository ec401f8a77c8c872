//! Two systems with identical growth: `{A -> AB}` and `{A -> AB, AB -> A}`,
//! both started on `AA`. Prints each layer's states.

use multiway::{evolve, EvolveOptions, MultiwaySystem};

fn main() {
    for rules in [&[("A", "AB")][..], &[("A", "AB"), ("AB", "A")][..]] {
        let m = MultiwaySystem::from_strs("AA", rules);
        let g = evolve(&m, EvolveOptions::new(6));
        println!("rules: {}", rules.iter().map(|(l, r)| format!("{l} -> {r}")).collect::<Vec<_>>().join(", "));
        for d in 0..g.num_layers() {
            let states: Vec<String> = g.layer(d).map(|id| m.render(g.state(id))).collect();
            println!("  d={d} count={} {}", states.len(), states.join(" "));
        }
        println!("  counts: {:?}", g.growth_series().counts);
    }
}
