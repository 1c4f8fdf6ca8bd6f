use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use alloc::format;
use core::fmt;

use crate::{Error, Result};

/// A base-alphabet symbol, stored as its index into the owning [`Sigma`].
///
/// Indices follow the lexicographic order of the token text, so comparing
/// symbols compares tokens. [`Symbol::PAD`] sorts after every real symbol.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u16);

impl Symbol {
    /// The padding symbol `#`. It is never a member of a [`Sigma`].
    pub const PAD: Symbol = Symbol(u16::MAX);

    pub fn is_pad(self) -> bool {
        self == Symbol::PAD
    }

    /// Position of the symbol in its alphabet; `PAD` maps to `u16::MAX`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Symbol {
        debug_assert!(i < u16::MAX as usize);
        Symbol(i as u16)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pad() {
            f.write_str("#")
        } else {
            write!(f, "s{}", self.0)
        }
    }
}

/// A word over the base alphabet (never contains `PAD`).
pub type Word = Vec<Symbol>;

/// A declared finite base alphabet Σ.
///
/// Tokens are kept sorted and deduplicated. Cloning is cheap; equality
/// compares the token lists.
#[derive(Clone)]
pub struct Sigma {
    tokens: Arc<[String]>,
}

impl PartialEq for Sigma {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.tokens, &other.tokens) || self.tokens == other.tokens
    }
}

impl Eq for Sigma {}

impl fmt::Debug for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.tokens.iter()).finish()
    }
}

/// True for the characters a symbol token may consist of.
pub fn is_token_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

impl Sigma {
    /// Builds an alphabet from its tokens.
    ///
    /// Tokens are made of letters, digits, `_` and `'`; `_` alone is
    /// reserved for the HRE wildcard.
    pub fn new<I, S>(tokens: I) -> Result<Sigma>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut v: Vec<String> = Vec::new();
        for t in tokens {
            let t = t.as_ref();
            if t.is_empty() || !t.chars().all(is_token_char) || t == "_" {
                return Err(Error::InvalidAlphabet(format!("bad symbol token `{t}`")));
            }
            v.push(t.to_string());
        }
        v.sort();
        v.dedup();
        if v.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        if v.len() >= u16::MAX as usize {
            return Err(Error::InvalidAlphabet("alphabet too large".into()));
        }
        Ok(Sigma { tokens: v.into() })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.tokens.len()).map(Symbol::from_index)
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn symbol(&self, token: &str) -> Option<Symbol> {
        self.tokens
            .binary_search_by(|t| t.as_str().cmp(token))
            .ok()
            .map(Symbol::from_index)
    }

    /// Token text of `s`; `PAD` prints as `#`.
    pub fn token(&self, s: Symbol) -> &str {
        if s.is_pad() {
            "#"
        } else {
            &self.tokens[s.index()]
        }
    }

    pub fn contains(&self, s: Symbol) -> bool {
        !s.is_pad() && s.index() < self.tokens.len()
    }

    /// Whether every token is one character long, in which case words are
    /// written without separators.
    pub fn single_char(&self) -> bool {
        self.tokens.iter().all(|t| t.chars().count() == 1)
    }

    /// Parses the textual word syntax: concatenated characters for
    /// single-character alphabets, `.`-separated tokens otherwise. The empty
    /// string is ε.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        let lookup = |tok: &str| -> Result<Symbol> {
            if tok == "#" {
                return Err(Error::UnknownSymbol("# is not allowed in words".into()));
            }
            self.symbol(tok)
                .ok_or_else(|| Error::UnknownSymbol(tok.to_string()))
        };
        if text.contains('.') || !self.single_char() {
            text.split('.').map(lookup).collect()
        } else {
            let mut buf = [0u8; 4];
            text.chars().map(|c| lookup(c.encode_utf8(&mut buf))).collect()
        }
    }

    pub fn format_word(&self, w: &[Symbol]) -> String {
        let sep = if self.single_char() { "" } else { "." };
        let mut out = String::new();
        for (i, &s) in w.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            out.push_str(self.token(s));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_sorted_and_pad_last() {
        let s = Sigma::new(["b", "a", "b"]).unwrap();
        assert_eq!(s.tokens(), &["a".to_string(), "b".to_string()]);
        let a = s.symbol("a").unwrap();
        let b = s.symbol("b").unwrap();
        assert!(a < b && b < Symbol::PAD);
        assert_eq!(s.token(Symbol::PAD), "#");
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(Sigma::new(["#"]).is_err());
        assert!(Sigma::new(["_"]).is_err());
        assert!(Sigma::new(Vec::<&str>::new()).is_err());
        assert!(Sigma::new(["a,b"]).is_err());
    }

    #[test]
    fn word_syntax() {
        let s = Sigma::new(["a", "b"]).unwrap();
        let w = s.parse_word("abba").unwrap();
        assert_eq!(s.format_word(&w), "abba");
        assert_eq!(s.parse_word("").unwrap(), Vec::new());
        assert!(s.parse_word("a#").is_err());
        assert!(s.parse_word("ac").is_err());

        let m = Sigma::new(["li", "pw", "lo"]).unwrap();
        let w = m.parse_word("li.pw.lo").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(m.format_word(&w), "li.pw.lo");
    }
}
