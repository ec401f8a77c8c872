#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use multiway::{Alphabet, MultiwaySystem, Rule, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Shape limits for random systems.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub max_symbols: usize,
    pub max_rules: usize,
    pub max_lhs: usize,
    pub max_rhs: usize,
    pub max_init: usize,
}

pub const SMALL: Shape = Shape { max_symbols: 3, max_rules: 3, max_lhs: 2, max_rhs: 3, max_init: 3 };

fn word(rng: &mut ChaCha8Rng, k: usize, min: usize, max: usize) -> Vec<Symbol> {
    let len = rng.random_range(min..=max);
    (0..len).map(|_| Symbol(rng.random_range(0..k) as u16)).collect()
}

/// Random system over glyphs taken in order from `letters`.
pub fn random_system(seed: u64, letters: &[&str], shape: Shape) -> MultiwaySystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(1..=shape.max_symbols.min(letters.len()));
    let alphabet = Alphabet::from_glyphs(letters[..k].iter().copied());
    let n_rules = rng.random_range(1..=shape.max_rules);
    let rules = (0..n_rules)
        .map(|_| Rule::new(word(&mut rng, k, 1, shape.max_lhs), word(&mut rng, k, 0, shape.max_rhs)))
        .collect();
    let init = word(&mut rng, k, 1, shape.max_init);
    MultiwaySystem::new(alphabet, rules, init)
}

/// Independent BFS oracle over rendered strings: counts per distance.
pub fn oracle_counts(m: &MultiwaySystem, horizon: usize) -> Vec<u64> {
    let glyph_rules: Vec<(String, String)> =
        m.rules.iter().map(|r| (plain(m, &r.lhs), plain(m, &r.rhs))).collect();
    let start = plain(m, &m.init);
    let mut dist: HashMap<String, usize> = HashMap::new();
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let d = dist[&s];
        if d + 1 >= horizon {
            continue;
        }
        for (l, r) in &glyph_rules {
            let mut from = 0;
            while let Some(i) = s[from..].find(l.as_str()) {
                let p = from + i;
                let next = format!("{}{}{}", &s[..p], r, &s[p + l.len()..]);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
                from = p + 1;
            }
        }
    }
    let mut counts = vec![0u64; horizon];
    for d in dist.values() {
        counts[*d] += 1;
    }
    counts
}

/// Rendering with one char per symbol; only valid for single-char glyphs.
pub fn plain(m: &MultiwaySystem, w: &[Symbol]) -> String {
    w.iter().map(|s| m.alphabet.glyph(*s)).collect()
}

/// Parsed DOT output: node labels with layers, and edges by node index.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Dot {
    pub nodes: BTreeMap<usize, (String, usize)>,
    pub edges: BTreeSet<(usize, usize)>,
}

fn node_index(tok: &str) -> usize {
    tok.trim().strip_prefix('n').and_then(|r| r.parse().ok()).unwrap_or_else(|| panic!("bad node id `{tok}`"))
}

pub fn parse_dot(text: &str) -> Dot {
    let mut dot = Dot::default();
    for line in text.lines().map(str::trim) {
        if line.starts_with("//") || line.starts_with("digraph") || line == "}" || line.is_empty() {
            continue;
        }
        let line = line.strip_suffix(';').expect("statement ends with `;`");
        if !line.contains("[label=") {
            let (a, b) = line.split_once("->").expect("edge statement");
            dot.edges.insert((node_index(a), node_index(b)));
            continue;
        }
        let (id, attrs) = line.split_once('[').expect("node with attributes");
        let attrs = attrs.strip_suffix(']').expect("closing bracket");
        let label_start = attrs.find("label=\"").expect("label") + 7;
        let mut label = String::new();
        let mut chars = attrs[label_start..].chars();
        let mut consumed = 0;
        while let Some(c) = chars.next() {
            consumed += c.len_utf8();
            match c {
                '\\' => {
                    let e = chars.next().expect("escape");
                    consumed += e.len_utf8();
                    label.push(e);
                }
                '"' => break,
                c => label.push(c),
            }
        }
        let rest = &attrs[label_start + consumed..];
        let layer = rest
            .split("layer=")
            .nth(1)
            .and_then(|r| r.trim().parse().ok())
            .expect("layer attribute");
        dot.nodes.insert(node_index(id), (label, layer));
    }
    dot
}

/// Operands of the sum example: `{AB -> BA, B -> AAB}` on `AB` and
/// `{CD -> CDD, C -> CD}` on `CDC`.
pub fn sum_example() -> [MultiwaySystem; 2] {
    [
        MultiwaySystem::from_strs("AB", &[("AB", "BA"), ("B", "AAB")]),
        MultiwaySystem::from_strs("CDC", &[("CD", "CDD"), ("C", "CD")]),
    ]
}

/// Operands of the product example: `{A -> AB, AB -> BA}` on `A` and
/// `{C -> D, D -> E, D -> F}` on `C`.
pub fn product_example() -> [MultiwaySystem; 2] {
    [
        MultiwaySystem::from_strs("A", &[("A", "AB"), ("AB", "BA")]),
        MultiwaySystem::from_strs("C", &[("C", "D"), ("D", "E"), ("D", "F")]),
    ]
}

/// Checks that `reduce_to_binary(m)` evolves like `m` through the codeword
/// translation: same states per layer, same edges, and no translated lhs
/// matching off a codeword boundary in any reached reduced state.
pub fn check_reduction(m: &MultiwaySystem, horizon: usize) -> Result<(), String> {
    use multiway::algebra::{reduce_to_binary, Reduction};
    use multiway::{evolve, EvolveOptions};

    let reduced = reduce_to_binary(m).system;
    let (_, code) = Reduction::for_alphabet_size(m.alphabet.len());
    let g1 = evolve(m, EvolveOptions::new(horizon));
    let g2 = evolve(&reduced, EvolveOptions::new(horizon));
    if g1.num_layers() != g2.num_layers() {
        return Err(format!("layer count {} vs {}", g1.num_layers(), g2.num_layers()));
    }
    for d in 0..g1.num_layers() {
        let a: BTreeSet<Vec<Symbol>> = g1.layer(d).map(|id| code.encode(g1.state(id))).collect();
        let b: BTreeSet<Vec<Symbol>> = g2.layer(d).map(|id| g2.state(id).to_vec()).collect();
        if a != b {
            return Err(format!("layer {d} differs after translation"));
        }
    }
    let e1: BTreeSet<(Vec<Symbol>, Vec<Symbol>)> =
        g1.edges().iter().map(|e| (code.encode(g1.state(e.from)), code.encode(g1.state(e.to)))).collect();
    let e2: BTreeSet<(Vec<Symbol>, Vec<Symbol>)> =
        g2.edges().iter().map(|e| (g2.state(e.from).to_vec(), g2.state(e.to).to_vec())).collect();
    if e1 != e2 {
        return Err("edge sets differ after translation".into());
    }
    for (_, s) in g2.states() {
        let mut boundaries = BTreeSet::from([0usize]);
        let mut pos = 0;
        let decoded = code.decode(s).ok_or("reached state is not a codeword string")?;
        for c in decoded {
            pos += code.codewords[c.index()].len();
            boundaries.insert(pos);
        }
        for rule in &reduced.rules {
            let l = rule.lhs.len();
            for p in 0..s.len().saturating_sub(l - 1) {
                if s[p..p + l] == rule.lhs[..] && !boundaries.contains(&p) {
                    return Err(format!("lhs matches off boundary at {p}"));
                }
            }
        }
    }
    Ok(())
}

/// Runs `tm` on input `n` next to the compiled system started on the same
/// input: layer `d` must hold exactly the `d`-th configuration, and the layer
/// after the halt must be empty.
pub fn lockstep(tm: &multiway::tm::TuringMachine, n: u64) -> Result<usize, String> {
    use multiway::tm::{compile_tm, initial_string, run, TapeConfiguration};
    use multiway::{evolve, EvolveOptions};

    let m = compile_tm(tm).map_err(|e| e.to_string())?;
    let start = TapeConfiguration::input(tm, n).map_err(|e| e.to_string())?;
    let trace = run(tm, start, 1 << 16).ok_or("machine did not halt")?;
    let m = m.with_init(initial_string(tm, n).map_err(|e| e.to_string())?);
    let g = evolve(&m, EvolveOptions::new(trace.len() + 1));
    for (d, cfg) in trace.iter().enumerate() {
        let layer: Vec<String> = g.layer(d).map(|id| m.render(g.state(id))).collect();
        if layer != [cfg.render(tm)] {
            return Err(format!("n={n} d={d}: machine {} system {:?}", cfg.render(tm), layer));
        }
    }
    if g.layer(trace.len()).count() != 0 {
        return Err(format!("n={n}: system continues after the halt"));
    }
    Ok(trace.len())
}
