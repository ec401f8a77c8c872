//! Occurrence sequence of `f` and the exact check that interpolating it over
//! its increase points inverts the interpolated partial sums of `f`.

use multiway::analysis::{check_interpolation_inverse, occurrence_sequence};

fn main() -> multiway::Result<()> {
    let f = [2, 3, 1, 4];
    let occ = occurrence_sequence(&f, 11)?;
    println!("f = {f:?}");
    println!("occurrence sequence: {:?}", occ.values);
    println!("increase indices:    {:?}", occ.increase_indices);
    let c = check_interpolation_inverse(&f, 1000)?;
    println!("holds at {} rational points, max residual {}", c.samples, c.max_residual);
    Ok(())
}
