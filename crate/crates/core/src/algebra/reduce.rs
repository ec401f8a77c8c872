use crate::algebra::{CombinedSystem, GrowthLaw, Provenance};
use crate::symbol::{Alphabet, Symbol};
use crate::system::{MultiwaySystem, Rule};

/// Codeword map of a binary reduction: the `i`-th symbol (1-based, in
/// alphabet order) becomes `a b^i a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub a: Symbol,
    pub b: Symbol,
    pub codewords: Vec<Vec<Symbol>>,
}

impl Reduction {
    pub fn for_alphabet_size(n: usize) -> (Alphabet, Self) {
        let alphabet = Alphabet::from_glyphs(["a", "b"]);
        let (a, b) = (Symbol(0), Symbol(1));
        let codewords = (1..=n)
            .map(|i| std::iter::once(a).chain(std::iter::repeat_n(b, i)).chain(std::iter::once(a)).collect())
            .collect();
        (alphabet, Reduction { a, b, codewords })
    }

    pub fn encode(&self, word: &[Symbol]) -> Vec<Symbol> {
        word.iter().flat_map(|s| self.codewords[s.index()].iter().copied()).collect()
    }

    /// Inverse of [`encode`](Self::encode) on concatenations of codewords.
    pub fn decode(&self, word: &[Symbol]) -> Option<Vec<Symbol>> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < word.len() {
            if word[i] != self.a {
                return None;
            }
            let mut j = i + 1;
            while j < word.len() && word[j] == self.b {
                j += 1;
            }
            if j >= word.len() || word[j] != self.a || j == i + 1 || j - i - 1 > self.codewords.len() {
                return None;
            }
            out.push(Symbol((j - i - 2) as u16));
            i = j + 1;
        }
        Some(out)
    }
}

/// Translates `m` symbol-wise into the two-letter alphabet `{a, b}`.
pub fn reduce_to_binary(m: &MultiwaySystem) -> CombinedSystem {
    let (alphabet, code) = Reduction::for_alphabet_size(m.alphabet.len());
    let rules = m.rules.iter().map(|r| Rule::new(code.encode(&r.lhs), code.encode(&r.rhs))).collect();
    let system = MultiwaySystem::new(alphabet, rules, code.encode(&m.init));
    let map = m
        .alphabet
        .symbols()
        .map(|s| (m.alphabet.glyph(s).to_string(), system.render(&code.codewords[s.index()])))
        .collect();
    CombinedSystem {
        system,
        provenance: Provenance::Reduced { original: m.clone(), code: map },
        growth_law: GrowthLaw::Exact,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_reduction() {
        let m = MultiwaySystem::from_strs("AA", &[("A", "AB")]);
        let r = reduce_to_binary(&m).system;
        assert_eq!(r.render(&r.init), "abaaba");
        assert_eq!(r.render(&r.rules[0].lhs), "aba");
        assert_eq!(r.render(&r.rules[0].rhs), "abaabba");
    }

    #[test]
    fn empty_system() {
        let r = reduce_to_binary(&MultiwaySystem::from_strs("", &[])).system;
        assert!(r.init.is_empty() && r.rules.is_empty());
        assert_eq!(r.alphabet.glyphs(), ["a", "b"]);
    }

    #[test]
    fn decode_inverts_encode() {
        let (_, code) = Reduction::for_alphabet_size(3);
        let w = vec![Symbol(2), Symbol(0), Symbol(1), Symbol(0)];
        assert_eq!(code.decode(&code.encode(&w)), Some(w));
        assert_eq!(code.decode(&[Symbol(0), Symbol(0)]), None);
    }
}
