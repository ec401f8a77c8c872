//! Writes the states graph of a small system as Graphviz DOT.

use multiway::dot::export_dot;
use multiway::{evolve, EvolveOptions, MultiwaySystem};

fn main() {
    let m = MultiwaySystem::from_strs("A", &[("A", "BC"), ("B", "C"), ("C", "B")]);
    let g = evolve(&m, EvolveOptions::new(6));
    print!("{}", export_dot(&g, &m.alphabet));
}
