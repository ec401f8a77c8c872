use serde::Serialize;

/// Monotone upper and lower envelopes of a growth series.
///
/// `upper[n]` is the running maximum. `lower[n]` is the largest `a[k]`,
/// `k <= n`, that is never undercut later in the observed window, or 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Envelopes {
    pub upper: Vec<u64>,
    pub lower: Vec<u64>,
    /// First index from which `lower` rests on values whose suffix condition
    /// is only checked within the window: the last change point of `lower`.
    pub provisional_tail: usize,
}

impl Envelopes {
    pub fn horizon(&self) -> usize {
        self.upper.len()
    }
}

pub fn envelopes(series: &[u64]) -> Envelopes {
    let n = series.len();
    let mut upper = Vec::with_capacity(n);
    let mut m = 0;
    for &a in series {
        m = m.max(a);
        upper.push(m);
    }
    let mut suffix_min = vec![u64::MAX; n];
    let mut run = u64::MAX;
    for k in (0..n).rev() {
        run = run.min(series[k]);
        suffix_min[k] = run;
    }
    let mut lower = Vec::with_capacity(n);
    let mut best = 1;
    for k in 0..n {
        if series[k] <= suffix_min[k] {
            best = best.max(series[k]);
        }
        lower.push(best);
    }
    let provisional_tail = (1..n).rev().find(|&i| lower[i] > lower[i - 1]).unwrap_or(0);
    Envelopes { upper, lower, provisional_tail }
}

/// Indices where a monotone sequence strictly increases, plus index 0.
pub fn corners(env: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 0..env.len() {
        if i == 0 || env[i] > env[i - 1] {
            out.push(i);
        }
    }
    out
}
