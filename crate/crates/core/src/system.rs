use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::symbol::{tokenize, Alphabet, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Vec<Symbol>,
    pub rhs: Vec<Symbol>,
}

impl Rule {
    pub fn new(lhs: Vec<Symbol>, rhs: Vec<Symbol>) -> Self {
        assert!(!lhs.is_empty(), "rule lhs must be nonempty");
        Rule { lhs, rhs }
    }
}

/// The triplet (rules, initial string, alphabet).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiwaySystem {
    pub alphabet: Alphabet,
    pub rules: Vec<Rule>,
    pub init: Vec<Symbol>,
}

impl MultiwaySystem {
    /// Builds a system, deduplicating rules while keeping first occurrences.
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>, init: Vec<Symbol>) -> Self {
        let n = alphabet.len();
        for r in &rules {
            assert!(!r.lhs.is_empty(), "rule lhs must be nonempty");
            assert!(r.lhs.iter().chain(&r.rhs).all(|s| s.index() < n));
        }
        assert!(init.iter().all(|s| s.index() < n));
        let mut seen = std::collections::HashSet::new();
        let rules = rules.into_iter().filter(|r| seen.insert(r.clone())).collect();
        MultiwaySystem { alphabet, rules, init }
    }

    /// Builds a system from rule-file notation words, inferring the alphabet
    /// from first appearance (initial string first, then rules in order).
    ///
    /// Panics on malformed words; intended for literals.
    pub fn from_strs(init: &str, rules: &[(&str, &str)]) -> Self {
        let mut a = Alphabet::new();
        let word = |a: &mut Alphabet, s: &str| -> Vec<Symbol> {
            tokenize(s).expect("malformed word").into_iter().map(|(g, _)| a.intern(&g)).collect()
        };
        let init = word(&mut a, init);
        let rules = rules
            .iter()
            .map(|(l, r)| {
                let lhs = word(&mut a, l);
                let rhs = word(&mut a, r);
                Rule::new(lhs, rhs)
            })
            .collect();
        Self::new(a, rules, init)
    }

    pub fn render(&self, word: &[Symbol]) -> String {
        self.alphabet.render(word)
    }

    pub fn parse_word(&self, text: &str) -> Option<Vec<Symbol>> {
        self.alphabet.parse_word(text)
    }

    /// Largest single-step length increase, max over rules of (|rhs| - |lhs|)+.
    pub fn max_expansion(&self) -> usize {
        self.rules.iter().map(|r| r.rhs.len().saturating_sub(r.lhs.len())).max().unwrap_or(0)
    }

    /// Copies rules and init into `target`, interning glyphs by name.
    pub fn lift_into(&self, target: &mut Alphabet) -> (Vec<Rule>, Vec<Symbol>) {
        let map: Vec<Symbol> = self.alphabet.glyphs().iter().map(|g| target.intern(g)).collect();
        let tr = |w: &[Symbol]| w.iter().map(|s| map[s.index()]).collect::<Vec<_>>();
        let rules = self.rules.iter().map(|r| Rule::new(tr(&r.lhs), tr(&r.rhs))).collect();
        (rules, tr(&self.init))
    }

    /// Same system with every glyph renamed by `f`. `f` must be injective.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Self {
        let glyphs: Vec<String> = self.alphabet.glyphs().iter().map(|g| f(g)).collect();
        let alphabet = Alphabet::from_glyphs(glyphs);
        assert_eq!(alphabet.len(), self.alphabet.len(), "renaming must be injective");
        MultiwaySystem { alphabet, rules: self.rules.clone(), init: self.init.clone() }
    }

    pub fn with_init(&self, init: Vec<Symbol>) -> Self {
        MultiwaySystem { init, ..self.clone() }
    }

    /// Serialises to the rule-file format. `header` lines are emitted as comments.
    pub fn to_rule_file(&self, header: &[String]) -> String {
        let mut out = String::new();
        for h in header {
            let _ = writeln!(out, "# {h}");
        }
        let _ = writeln!(out, "alphabet: {}", self.alphabet);
        let _ = writeln!(out, "init: {}", self.render(&self.init));
        for r in &self.rules {
            let _ = writeln!(out, "rule: {} -> {}", self.render(&r.lhs), self.render(&r.rhs));
        }
        out
    }
}

/// Parses the rule-file format.
///
/// ```text
/// # comment
/// alphabet: A B [q1]
/// init: AA
/// rule: A -> AB
/// ```
pub fn parse_system(text: &str) -> Result<MultiwaySystem> {
    type Word = Vec<(String, usize)>;
    let mut declared: Option<(Word, usize)> = None;
    let mut init: Option<(Word, usize)> = None;
    let mut rules: Vec<(Word, Word, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            return Err(Error::Syntax { line: line_no, col: 1, msg: "expected `key: value`".into() });
        };
        let key = content[..colon].trim();
        let body = &content[colon + 1..];
        let body_col = content[..colon + 1].chars().count();
        let tok = |s: &str, offset: usize| -> Result<Word> {
            tokenize(s)
                .map(|v| v.into_iter().map(|(g, c)| (g, c + offset + 1)).collect())
                .map_err(|(c, msg)| Error::Syntax { line: line_no, col: c + offset + 1, msg })
        };
        match key {
            "alphabet" => {
                if declared.is_some() {
                    return Err(Error::Syntax { line: line_no, col: 1, msg: "duplicate alphabet".into() });
                }
                declared = Some((tok(body, body_col)?, line_no));
            }
            "init" => {
                if init.is_some() {
                    return Err(Error::Syntax { line: line_no, col: 1, msg: "duplicate init".into() });
                }
                init = Some((tok(body, body_col)?, line_no));
            }
            "rule" => {
                let Some(arrow) = body.find("->") else {
                    return Err(Error::Syntax {
                        line: line_no,
                        col: body_col + 1,
                        msg: "expected `lhs -> rhs`".into(),
                    });
                };
                let lhs = tok(&body[..arrow], body_col)?;
                let rhs_off = body_col + body[..arrow + 2].chars().count();
                let rhs = tok(&body[arrow + 2..], rhs_off)?;
                if lhs.is_empty() {
                    return Err(Error::EmptyLhs { line: line_no });
                }
                rules.push((lhs, rhs, line_no));
            }
            other => {
                return Err(Error::Syntax {
                    line: line_no,
                    col: 1,
                    msg: format!("unknown key `{other}`"),
                })
            }
        }
    }

    let (init, init_line) = init.ok_or(Error::MissingInit)?;
    let fixed = declared.is_some();
    let mut alphabet = Alphabet::new();
    if let Some((glyphs, line)) = &declared {
        for (g, col) in glyphs {
            if alphabet.contains(g) {
                return Err(Error::Syntax { line: *line, col: *col, msg: format!("duplicate glyph `{g}`") });
            }
            alphabet.intern(g);
        }
    }
    let mut resolve = |w: &Word, line: usize| -> Result<Vec<Symbol>> {
        w.iter()
            .map(|(g, col)| match alphabet.get(g) {
                Some(s) => Ok(s),
                None if !fixed => Ok(alphabet.intern(g)),
                None => Err(Error::UnknownSymbol { glyph: g.clone(), line, col: *col }),
            })
            .collect()
    };
    let init = resolve(&init, init_line)?;
    let mut out_rules = Vec::with_capacity(rules.len());
    for (l, r, line) in &rules {
        let lhs = resolve(l, *line)?;
        let rhs = resolve(r, *line)?;
        out_rules.push(Rule::new(lhs, rhs));
    }
    Ok(MultiwaySystem::new(alphabet, out_rules, init))
}
