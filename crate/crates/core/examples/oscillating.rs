//! A strongly oscillating system: a linear baseline with bursts whose peaks
//! grow quadratically. Prints the envelopes at the burst peaks.

use multiway::analysis::classify;
use multiway::zoo::oscillating_composite;
use multiway::{evolve, EvolveOptions};

fn main() -> multiway::Result<()> {
    let e = oscillating_composite();
    let g = evolve(&e.system, EvolveOptions::new(600).without_edges());
    let series = g.growth_series();
    let r = classify(&series)?;
    for d in (1..series.len()).filter(|&d| series.counts[d] > 3 * series.counts[d - 1].max(1)) {
        println!("burst starts at d={d}");
    }
    println!("upper {:?}\nlower {:?}\nregularity {:?}", r.upper_class, r.lower_class, r.regular);
    println!("{}", r.caveat);
    Ok(())
}
