//! Enchains the binary counter and compares the layer counts with the
//! predicted staircase and the `log2` sandwich.

use multiway::tm::{build_texp, enchain_with, expected_growth, EnchainOptions};
use multiway::{evolve, EvolveOptions};

fn main() -> multiway::Result<()> {
    let opts = EnchainOptions { probe: 1..=10, ..EnchainOptions::default() };
    let e = enchain_with(&build_texp(), &opts)?;
    println!("T(n): {:?}", e.measurement.values);
    let horizon = 2000;
    let counts = evolve(&e.system, EvolveOptions::new(horizon).without_edges()).growth_series().counts;
    let predicted = expected_growth(&e.measurement, horizon)?;
    println!("matches predicted staircase: {}", counts == predicted);
    for d in [32, 64, 128, 256, 512, 1024, 1999] {
        let l = (d as f64).log2();
        println!("d={d:>4} c={} log2(d)/2={:.2} log2(d)={:.2}", counts[d], l / 2.0, l);
    }
    Ok(())
}
