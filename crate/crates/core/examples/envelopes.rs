//! Upper and lower envelopes of an irregular series and their corners.

use multiway::analysis::envelopes;

fn main() {
    let series = [3, 1, 2, 5, 4, 4, 6, 2, 7, 7];
    let e = envelopes(&series);
    println!("series: {series:?}");
    println!("upper:  {:?}", e.upper);
    println!("lower:  {:?}", e.lower);
    println!("lower is provisional from index {}", e.provisional_tail);
}
