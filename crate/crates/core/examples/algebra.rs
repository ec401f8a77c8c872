//! Sum and product of two systems over disjoint alphabets, with their growth
//! laws checked against the operands.

use multiway::algebra::{convolve, product, sum, sum_series};
use multiway::evolve::layer_counts;
use multiway::MultiwaySystem;

fn main() -> multiway::Result<()> {
    let m1 = MultiwaySystem::from_strs("AA", &[("A", "AB")]);
    let m2 = MultiwaySystem::from_strs("C", &[("C", "CD"), ("C", "DC")]);
    let h = 8;
    let (c1, c2) = (layer_counts(&m1, h), layer_counts(&m2, h));
    let s = sum(&m1, &m2)?;
    let p = product(&m1, &m2)?;
    println!("sum system:\n{}", s.system.to_rule_file(&[]));
    println!("m1        {c1:?}\nm2        {c2:?}");
    println!("sum       {:?} law {:?}", layer_counts(&s.system, h), s.growth_law);
    println!("predicted {:?}", &sum_series(&c1, &c2)[..h]);
    println!("product   {:?} law {:?}", layer_counts(&p.system, h), p.growth_law);
    println!("predicted {:?}", &convolve(&c1, &c2)[..h]);
    Ok(())
}
