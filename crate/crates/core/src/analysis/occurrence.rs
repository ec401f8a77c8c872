use num_traits::{Signed, Zero};

use super::interp::{linear_interpolation, Q};
use crate::error::{Error, Result};

/// The sequence in which each `n >= 1` occurs `f(n)` times in a row.
///
/// `values` holds the staircase `1, ..., 1, 2, ...` (0-based storage). The
/// defining equations use the shifted form `A(m) = values[m] - 1`, for which
/// `A(f(1) + ... + f(n)) = n` and each value `n` spans a block of `f(n + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceSequence {
    pub values: Vec<u64>,
    /// Indices `m` with `A(m - 1) < A(m)`: the partial sums of `f`.
    pub increase_indices: Vec<usize>,
}

impl OccurrenceSequence {
    /// `A(m)` in the shifted convention.
    pub fn shifted(&self, m: usize) -> u64 {
        self.values[m] - 1
    }
}

/// First `length` terms of the occurrence sequence of `f` (with `f[0] = f(1)`).
/// `length` may not exceed `f(1) + ... + f(k) + 1` for `k = f.len()`.
pub fn occurrence_sequence(f: &[u64], length: usize) -> Result<OccurrenceSequence> {
    if let Some(i) = f.iter().position(|&x| x == 0) {
        return Err(Error::Sequence(format!("f({}) = 0", i + 1)));
    }
    let total: u64 = f.iter().sum();
    if length as u64 > total + 1 {
        return Err(Error::Sequence(format!("{length} terms requested but f only covers {}", total + 1)));
    }
    let mut values = Vec::with_capacity(length);
    let mut increase_indices = Vec::new();
    let mut n = 1u64;
    let mut left = f.first().copied().unwrap_or(0);
    for m in 0..length {
        if left == 0 {
            n += 1;
            left = f.get(n as usize - 1).copied().unwrap_or(1);
            increase_indices.push(m);
        }
        values.push(n);
        left -= 1;
    }
    Ok(OccurrenceSequence { values, increase_indices })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseCheck {
    pub holds: bool,
    pub max_residual: Q,
    pub samples: usize,
}

/// Compares the interpolation of the occurrence sequence over its increase
/// indices with the inverse of the interpolated partial sums of `f`, at
/// `samples` evenly spaced rational points of the shared range.
pub fn check_interpolation_inverse(f: &[u64], samples: usize) -> Result<InverseCheck> {
    if f.is_empty() {
        return Err(Error::Sequence("f is empty".into()));
    }
    let partial: Vec<u64> = f
        .iter()
        .scan(0u64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let top = *partial.last().expect("nonempty");
    let occ = occurrence_sequence(f, top as usize + 1)?;
    let idx: Vec<u64> = occ.increase_indices.iter().map(|&m| m as u64).collect();
    let left = linear_interpolation(|m| occ.shifted(m as usize) as i128, &idx)?;
    let ns: Vec<u64> = (1..=f.len() as u64).collect();
    let right = linear_interpolation(|n| partial[n as usize - 1] as i128, &ns)?.invert()?;

    let span = Q::from_integer(top as i128);
    let steps = samples.max(2) - 1;
    let mut max_residual = Q::zero();
    for j in 0..=steps {
        let x = span * Q::new(j as i128, steps as i128);
        let (a, b) = (left.eval(x), right.eval(x));
        let r = match (a, b) {
            (Some(a), Some(b)) => (a - b).abs(),
            _ => return Err(Error::Interpolation("sample outside shared range".into())),
        };
        if r > max_residual {
            max_residual = r;
        }
    }
    Ok(InverseCheck { holds: max_residual.is_zero(), max_residual, samples: steps + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twice_n() {
        let f: Vec<u64> = (1..=4).map(|n| 2 * n).collect();
        let a = occurrence_sequence(&f, 12).unwrap();
        assert_eq!(a.values, vec![1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3]);
        assert_eq!(a.increase_indices, vec![2, 6]);
        assert_eq!(a.shifted(6), 2);
    }

    #[test]
    fn ones_and_n() {
        let a = occurrence_sequence(&[1; 5], 5).unwrap();
        assert_eq!(a.values, vec![1, 2, 3, 4, 5]);
        let f: Vec<u64> = (1..=5).collect();
        let a = occurrence_sequence(&f, 11).unwrap();
        assert_eq!(a.values, vec![1, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5]);
    }

    #[test]
    fn zero_rejected() {
        assert!(occurrence_sequence(&[1, 0, 2], 2).is_err());
        assert!(occurrence_sequence(&[1, 1], 4).is_err());
    }

    #[test]
    fn interpolation_inverse_examples() {
        let n: Vec<u64> = (1..=20).collect();
        let two_n: Vec<u64> = (1..=20).map(|k| 2 * k).collect();
        for f in [n, two_n, vec![1; 20]] {
            let c = check_interpolation_inverse(&f, 1000).unwrap();
            assert!(c.holds, "{f:?}: {}", c.max_residual);
        }
    }
}
