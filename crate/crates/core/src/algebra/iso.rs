use std::collections::{BTreeMap, HashSet};

use crate::evolve::StatesGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoResult {
    /// `mapping[v]` is the image in the second graph of state `v` of the first.
    Isomorphic(Vec<usize>),
    NotIsomorphic,
    /// The backtracking step cap was hit.
    Undecided,
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

/// Two graphs packed into one vertex set, `0..n1` then `n1..n1+n2`.
struct Joint {
    n1: usize,
    layer: Vec<usize>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    edges2: HashSet<(usize, usize)>,
}

impl Joint {
    fn new(g1: &StatesGraph, g2: &StatesGraph) -> Self {
        let n1 = g1.num_states();
        let n = n1 + g2.num_states();
        let mut layer = Vec::with_capacity(n);
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (g, off) in [(g1, 0), (g2, n1)] {
            for (id, _) in g.states() {
                layer.push(g.layer_of(id));
            }
            for e in g.edges() {
                out[e.from.0 + off].push(e.to.0 + off);
                inn[e.to.0 + off].push(e.from.0 + off);
            }
        }
        let edges2 = g2.edges().iter().map(|e| (e.from.0, e.to.0)).collect();
        Joint { n1, layer, out, inn, edges2 }
    }

    fn initial_colors(&self) -> Vec<usize> {
        let sig: Vec<_> = (0..self.layer.len())
            .map(|v| (self.layer[v], self.out[v].len(), self.inn[v].len(), self.out[v].contains(&v)))
            .collect();
        canonical(&sig)
    }

    /// Iterated neighbourhood refinement until the partition is stable.
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let mut classes = count_classes(&colors);
        loop {
            let sig: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..colors.len())
                .map(|v| {
                    let mut o: Vec<usize> = self.out[v].iter().map(|&u| colors[u]).collect();
                    let mut i: Vec<usize> = self.inn[v].iter().map(|&u| colors[u]).collect();
                    o.sort_unstable();
                    i.sort_unstable();
                    (colors[v], o, i)
                })
                .collect();
            colors = canonical(&sig);
            let c = count_classes(&colors);
            if c == classes {
                return colors;
            }
            classes = c;
        }
    }

    fn balanced(&self, colors: &[usize]) -> bool {
        let mut diff: BTreeMap<usize, i64> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            *diff.entry(c).or_default() += if v < self.n1 { 1 } else { -1 };
        }
        diff.values().all(|&d| d == 0)
    }

    fn search(&self, colors: Vec<usize>, steps: &mut usize, cap: usize) -> IsoResult {
        *steps += 1;
        if *steps > cap {
            return IsoResult::Undecided;
        }
        let colors = self.refine(colors);
        if !self.balanced(&colors) {
            return IsoResult::NotIsomorphic;
        }
        let mut members: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            let e = members.entry(c).or_default();
            if v < self.n1 {
                e.0.push(v);
            } else {
                e.1.push(v - self.n1);
            }
        }
        let pick = members.iter().filter(|(_, (a, _))| a.len() > 1).min_by_key(|(c, (a, _))| (a.len(), **c));
        let Some((_, (left, right))) = pick else {
            let mut mapping = vec![0; self.n1];
            for (a, b) in members.values() {
                mapping[a[0]] = b[0];
            }
            let ok = (0..self.n1).all(|u| self.out[u].iter().all(|&v| self.edges2.contains(&(mapping[u], mapping[v]))));
            return if ok { IsoResult::Isomorphic(mapping) } else { IsoResult::NotIsomorphic };
        };
        let v = left[0];
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        let mut undecided = false;
        for &w in right {
            let mut next = colors.clone();
            next[v] = fresh;
            next[w + self.n1] = fresh;
            match self.search(next, steps, cap) {
                IsoResult::Isomorphic(m) => return IsoResult::Isomorphic(m),
                IsoResult::Undecided => undecided = true,
                IsoResult::NotIsomorphic => {}
            }
        }
        if undecided {
            IsoResult::Undecided
        } else {
            IsoResult::NotIsomorphic
        }
    }
}

fn canonical<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut ids: BTreeMap<T, usize> = sig.iter().map(|s| (s.clone(), 0)).collect();
    for (i, v) in ids.values_mut().enumerate() {
        *v = i;
    }
    sig.iter().map(|s| ids[s]).collect()
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

pub const DEFAULT_STEP_CAP: usize = 10_000;

/// Layer-preserving isomorphism of two states graphs (edges as distinct
/// ordered pairs). Colour refinement first, then backtracking over
/// individualised vertices.
pub fn isomorphic(g1: &StatesGraph, g2: &StatesGraph) -> IsoResult {
    isomorphic_capped(g1, g2, DEFAULT_STEP_CAP)
}

pub fn isomorphic_capped(g1: &StatesGraph, g2: &StatesGraph, cap: usize) -> IsoResult {
    if g1.num_states() != g2.num_states() || g1.edges().len() != g2.edges().len() {
        return IsoResult::NotIsomorphic;
    }
    let sizes = |g: &StatesGraph| (0..g.num_layers()).map(|d| g.layer_range(d).len()).filter(|&c| c > 0).collect::<Vec<_>>();
    if sizes(g1) != sizes(g2) {
        return IsoResult::NotIsomorphic;
    }
    let joint = Joint::new(g1, g2);
    let colors = joint.initial_colors();
    let mut steps = 0;
    joint.search(colors, &mut steps, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{evolve, EvolveOptions, MultiwaySystem};

    fn graph(init: &str, rules: &[(&str, &str)], h: usize) -> StatesGraph {
        evolve(&MultiwaySystem::from_strs(init, rules), EvolveOptions::new(h))
    }

    #[test]
    fn renamed_system_is_isomorphic() {
        let a = graph("AA", &[("A", "AB")], 5);
        let b = graph("CC", &[("C", "CD")], 5);
        assert!(isomorphic(&a, &b).is_isomorphic());
    }

    #[test]
    fn different_shapes() {
        let a = graph("AA", &[("A", "AB")], 5);
        let b = graph("A", &[("A", "AB"), ("A", "AC")], 5);
        assert_eq!(isomorphic(&a, &b), IsoResult::NotIsomorphic);
    }

    #[test]
    fn mapping_preserves_edges() {
        let a = graph("AB", &[("AB", "BA"), ("B", "AAB")], 4);
        let b = graph("CD", &[("CD", "DC"), ("D", "CCD")], 4);
        let IsoResult::Isomorphic(m) = isomorphic(&a, &b) else { panic!("expected isomorphism") };
        for e in a.edges() {
            assert!(b.edges().iter().any(|f| f.from.0 == m[e.from.0] && f.to.0 == m[e.to.0]));
        }
    }

    #[test]
    fn same_counts_different_wiring() {
        // both have layers 1,2,2 but edges differ in fan-in
        let a = graph("A", &[("A", "B"), ("A", "C"), ("B", "D"), ("C", "E")], 3);
        let b = graph("A", &[("A", "B"), ("A", "C"), ("B", "D"), ("B", "E")], 3);
        assert_eq!(isomorphic(&a, &b), IsoResult::NotIsomorphic);
    }
}
