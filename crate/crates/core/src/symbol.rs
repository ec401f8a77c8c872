use std::collections::HashMap;
use std::fmt;

/// Interned glyph. Ids are dense indices into the owning [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u16);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Prefix marking glyphs that no user alphabet may contain.
pub const RESERVED_PREFIX: char = '$';

/// The fresh symbol introduced by the sum combinator.
pub const SUM_SYMBOL: &str = "$X";

/// Ordered set of glyphs. A glyph is either one printable character or a
/// multi-character name written `[name]` in rule files.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    glyphs: Vec<String>,
    index: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_glyphs<I, S>(glyphs: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut a = Self::new();
        for g in glyphs {
            a.intern(&g.into());
        }
        a
    }

    /// Returns the symbol for `glyph`, adding it if absent.
    pub fn intern(&mut self, glyph: &str) -> Symbol {
        if let Some(&s) = self.index.get(glyph) {
            return s;
        }
        assert!(self.glyphs.len() < u16::MAX as usize, "alphabet exhausted");
        let s = Symbol(self.glyphs.len() as u16);
        self.glyphs.push(glyph.to_string());
        self.index.insert(glyph.to_string(), s);
        s
    }

    pub fn get(&self, glyph: &str) -> Option<Symbol> {
        self.index.get(glyph).copied()
    }

    pub fn glyph(&self, s: Symbol) -> &str {
        &self.glyphs[s.index()]
    }

    pub fn glyphs(&self) -> &[String] {
        &self.glyphs
    }

    pub fn len(&self) -> usize {
        self.glyphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glyphs.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        (0..self.glyphs.len() as u16).map(Symbol)
    }

    pub fn contains(&self, glyph: &str) -> bool {
        self.index.contains_key(glyph)
    }

    /// Glyph in rule-file notation: bare for one character, bracketed otherwise.
    pub fn token(&self, s: Symbol) -> String {
        token_of(self.glyph(s))
    }

    /// Renders a word in rule-file notation.
    pub fn render(&self, word: &[Symbol]) -> String {
        word.iter().map(|&s| self.token(s)).collect()
    }

    /// Parses a word of known glyphs. Unknown glyphs yield `None`.
    pub fn parse_word(&self, text: &str) -> Option<Vec<Symbol>> {
        tokenize(text)
            .ok()?
            .into_iter()
            .map(|(g, _)| self.get(&g))
            .collect()
    }
}

pub(crate) fn token_of(glyph: &str) -> String {
    let mut chars = glyph.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c != '[' && c != ']' && !c.is_whitespace() => glyph.to_string(),
        _ => format!("[{glyph}]"),
    }
}

/// Splits rule-file text into glyphs with their 0-based character column.
/// Whitespace separates nothing and is skipped.
pub(crate) fn tokenize(text: &str) -> std::result::Result<Vec<(String, usize)>, (usize, String)> {
    let mut out = Vec::new();
    let mut chars = text.chars().enumerate().peekable();
    while let Some((col, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        match c {
            '[' => {
                let mut name = String::new();
                loop {
                    match chars.next() {
                        Some((_, ']')) => break,
                        Some((_, ch)) => name.push(ch),
                        None => return Err((col, "unterminated `[`".into())),
                    }
                }
                if name.is_empty() {
                    return Err((col, "empty `[]` token".into()));
                }
                out.push((name, col));
            }
            ']' => return Err((col, "unmatched `]`".into())),
            _ => out.push((c.to_string(), col)),
        }
    }
    Ok(out)
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.symbols().map(|s| self.token(s)).collect();
        write!(f, "{}", toks.join(" "))
    }
}
