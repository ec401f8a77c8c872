use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Q = Ratio<i128>;

/// Polygonal chain through `(0, 0)` and strictly increasing x-knots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinear {
    knots: Vec<(Q, Q)>,
}

impl PiecewiseLinear {
    pub fn new(knots: Vec<(Q, Q)>) -> Result<Self> {
        match knots.first() {
            Some((x, y)) if x.is_zero() && y.is_zero() => {}
            _ => return Err(Error::Interpolation("chain must start at (0, 0)".into())),
        }
        if knots.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Interpolation("x-knots must be strictly increasing".into()));
        }
        Ok(PiecewiseLinear { knots })
    }

    pub fn knots(&self) -> &[(Q, Q)] {
        &self.knots
    }

    /// Covered x-range `[0, x_max]`.
    pub fn x_max(&self) -> Q {
        self.knots.last().expect("nonempty").0
    }

    /// Value at `x`, or `None` outside the covered range.
    pub fn eval(&self, x: Q) -> Option<Q> {
        if x < Q::zero() || x > self.x_max() {
            return None;
        }
        let i = self.knots.partition_point(|k| k.0 < x);
        if self.knots[i].0 == x {
            return Some(self.knots[i].1);
        }
        let (x0, y0) = self.knots[i - 1];
        let (x1, y1) = self.knots[i];
        Some(y0 + (y1 - y0) * (x - x0) / (x1 - x0))
    }

    /// Functional inverse by swapping coordinates. Needs strictly increasing y.
    pub fn invert(&self) -> Result<Self> {
        if self.knots.windows(2).any(|w| w[0].1 >= w[1].1) {
            return Err(Error::Interpolation("chain is not strictly increasing".into()));
        }
        Ok(PiecewiseLinear { knots: self.knots.iter().map(|&(x, y)| (y, x)).collect() })
    }
}

/// Chain through `(0, 0)` and `(n, f(n))` for `n` in `s`, ascending.
pub fn linear_interpolation<F: Fn(u64) -> i128>(f: F, s: &[u64]) -> Result<PiecewiseLinear> {
    if s.is_empty() {
        return Err(Error::Interpolation("index set is empty".into()));
    }
    let mut idx = s.to_vec();
    idx.sort_unstable();
    idx.dedup();
    let mut knots = vec![(Q::zero(), Q::zero())];
    for n in idx {
        if n == 0 {
            return Err(Error::Interpolation("index set must be positive".into()));
        }
        knots.push((Q::from_integer(n as i128), Q::from_integer(f(n))));
    }
    PiecewiseLinear::new(knots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i128, d: i128) -> Q {
        Q::new(n, d)
    }

    #[test]
    fn midpoint() {
        let p = linear_interpolation(|n| [0, 1, 3][n as usize], &[1, 2]).unwrap();
        assert_eq!(p.eval(q(3, 2)), Some(q(2, 1)));
        assert_eq!(p.eval(q(1, 2)), Some(q(1, 2)));
        assert_eq!(p.eval(q(5, 2)), None);
    }

    #[test]
    fn identity_line() {
        let p = linear_interpolation(|n| n as i128, &[1, 2, 3, 4]).unwrap();
        for k in 0..=8 {
            assert_eq!(p.eval(q(k, 2)), Some(q(k, 2)));
        }
    }

    #[test]
    fn invert_swaps() {
        let p = PiecewiseLinear::new(vec![(q(0, 1), q(0, 1)), (q(1, 1), q(2, 1)), (q(2, 1), q(6, 1))]).unwrap();
        let inv = p.invert().unwrap();
        assert_eq!(inv.knots(), &[(q(0, 1), q(0, 1)), (q(2, 1), q(1, 1)), (q(6, 1), q(2, 1))]);
        assert_eq!(inv.invert().unwrap(), p);
    }

    #[test]
    fn invert_rejects_flat() {
        let p = linear_interpolation(|_| 1, &[1, 2]).unwrap();
        assert!(p.invert().is_err());
    }

    #[test]
    fn empty_set_rejected() {
        assert!(linear_interpolation(|n| n as i128, &[]).is_err());
    }
}
