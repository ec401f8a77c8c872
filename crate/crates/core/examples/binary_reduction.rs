//! Translates a three-letter system into `{a, b}` and checks that the states
//! graphs agree.

use multiway::algebra::{isomorphic, reduce_to_binary};
use multiway::{evolve, EvolveOptions, MultiwaySystem};

fn main() {
    let m = MultiwaySystem::from_strs("ABA", &[("A", "AB"), ("BA", "C"), ("C", "CA")]);
    let r = reduce_to_binary(&m);
    println!("{}", r.system.to_rule_file(&[]));
    println!("{}", serde_json::to_string_pretty(&r.provenance_json()).expect("json"));
    let g1 = evolve(&m, EvolveOptions::new(5));
    let g2 = evolve(&r.system, EvolveOptions::new(5));
    println!("original {:?}", g1.growth_series().counts);
    println!("reduced  {:?}", g2.growth_series().counts);
    println!("layer isomorphic: {}", isomorphic(&g1, &g2).is_isomorphic());
}
