//! Classifies every zoo entry at a horizon small enough to finish quickly.

use std::collections::BTreeMap;
use std::time::Instant;

use multiway::analysis::classify;
use multiway::{evolve, EvolveOptions};

fn main() -> multiway::Result<()> {
    let horizons = [
        ("chain", 16),
        ("constant", 64),
        ("polynomial", 64),
        ("exponential", 12),
        ("intermediate", 50),
        ("inverse_polynomial", 400),
        ("burst", 16),
        ("log_system", 2000),
        ("oscillating_composite", 600),
    ];
    for (name, h) in horizons {
        let t = Instant::now();
        let entry = multiway::zoo::by_name(name, &BTreeMap::new())?;
        let g = evolve(&entry.system, EvolveOptions::new(h).without_edges());
        let r = classify(&g.growth_series())?;
        println!(
            "{name:<22} H={h:<5} upper={:<40} lower={:<40} {:?} expected={:?} ({:.1?})",
            format!("{:?}", r.upper_class),
            format!("{:?}", r.lower_class),
            r.regular,
            entry.expected_class,
            t.elapsed()
        );
    }
    Ok(())
}
