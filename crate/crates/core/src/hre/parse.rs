use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Component, Hre, Regex};
use crate::symbol::is_token_char;
use crate::{Error, Quantifier, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Punct(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c == '/' {
            it.next();
            if it.peek().map(|&(_, c)| c) != Some('/') {
                return Err(Error::Syntax {
                    pos: i,
                    msg: "unexpected `/`".into(),
                });
            }
            for (_, c) in it.by_ref() {
                if c == '\n' {
                    break;
                }
            }
        } else if is_token_char(c) {
            let mut s = String::new();
            while let Some(&(_, c)) = it.peek() {
                if !is_token_char(c) {
                    break;
                }
                s.push(c);
                it.next();
            }
            out.push((Tok::Ident(s), i));
        } else if "[](),|*+.#!".contains(c) {
            out.push((Tok::Punct(c), i));
            it.next();
        } else {
            return Err(Error::Syntax {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.at(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Punct(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.bump();
                Ok(s)
            }
            _ => self.error(format!("expected {what}")),
        }
    }
}

/// Parses the concrete HRE syntax described in the [module docs](super).
pub fn parse(text: &str) -> Result<Hre> {
    let mut lx = Lexer {
        toks: lex(text)?,
        pos: 0,
    };
    let mut prefix = Vec::new();
    loop {
        let q = match lx.peek() {
            Tok::Ident(s) if s == "forall" => Quantifier::Forall,
            Tok::Ident(s) if s == "exists" => Quantifier::Exists,
            _ => break,
        };
        lx.bump();
        let var = lx.ident("a variable name")?;
        lx.expect('.')?;
        prefix.push((q, var));
    }
    if prefix.is_empty() {
        return lx.error("expected `forall` or `exists`");
    }
    let k = prefix.len();
    let body = regex(&mut lx, k)?;
    if *lx.peek() != Tok::End {
        return lx.error("unexpected input after expression");
    }
    Ok(Hre { prefix, body })
}

fn regex(lx: &mut Lexer, k: usize) -> Result<Regex> {
    let mut r = concat(lx, k)?;
    while *lx.peek() == Tok::Punct('|') {
        lx.bump();
        r = Regex::union(r, concat(lx, k)?);
    }
    Ok(r)
}

fn starts_atom(t: &Tok) -> bool {
    match t {
        Tok::Punct('[') | Tok::Punct('(') => true,
        Tok::Ident(s) => s == "eps" || s == "empty",
        _ => false,
    }
}

fn concat(lx: &mut Lexer, k: usize) -> Result<Regex> {
    if !starts_atom(lx.peek()) {
        return lx.error("expected `[`, `(`, `eps` or `empty`");
    }
    let mut r = postfix(lx, k)?;
    while starts_atom(lx.peek()) {
        r = Regex::concat(r, postfix(lx, k)?);
    }
    Ok(r)
}

fn postfix(lx: &mut Lexer, k: usize) -> Result<Regex> {
    let mut r = atom(lx, k)?;
    loop {
        match lx.peek() {
            Tok::Punct('*') => r = Regex::star(r),
            Tok::Punct('+') => r = Regex::plus(r),
            _ => return Ok(r),
        }
        lx.bump();
    }
}

fn atom(lx: &mut Lexer, k: usize) -> Result<Regex> {
    match lx.bump() {
        Tok::Punct('(') => {
            let r = regex(lx, k)?;
            lx.expect(')')?;
            Ok(r)
        }
        Tok::Ident(s) if s == "eps" => Ok(Regex::Eps),
        Tok::Ident(s) if s == "empty" => Ok(Regex::Empty),
        Tok::Punct('[') => {
            let mut comps = Vec::new();
            loop {
                comps.push(component(lx)?);
                match lx.bump() {
                    Tok::Punct(',') => continue,
                    Tok::Punct(']') => break,
                    _ => {
                        lx.pos -= 1;
                        return lx.error("expected `,` or `]`");
                    }
                }
            }
            if comps.len() != k {
                return Err(Error::ArityMismatch {
                    expected: k,
                    found: comps.len(),
                });
            }
            Ok(Regex::Letter(comps))
        }
        _ => {
            lx.pos -= 1;
            lx.error("expected an atom")
        }
    }
}

fn component(lx: &mut Lexer) -> Result<Component> {
    match lx.peek().clone() {
        Tok::Punct('#') => {
            lx.bump();
            Ok(Component::Pad)
        }
        Tok::Punct('!') => {
            lx.bump();
            let s = lx.ident("a symbol after `!`")?;
            if s == "_" {
                return lx.error("`!` needs a symbol");
            }
            Ok(Component::Not(s))
        }
        Tok::Ident(s) => {
            lx.bump();
            Ok(if s == "_" {
                Component::Any
            } else {
                Component::Sym(s.to_string())
            })
        }
        _ => lx.error("expected a symbol, `#`, `_` or `!`"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_shape() {
        let h = parse("forall x1. forall x2. ([a,a]|[b,b])*([#,b]*|[b,#]*)").unwrap();
        let sym = |s: &str| Component::Sym(s.into());
        let l = |a: Component, b: Component| Regex::Letter(alloc::vec![a, b]);
        let expected = Regex::concat(
            Regex::star(Regex::union(l(sym("a"), sym("a")), l(sym("b"), sym("b")))),
            Regex::union(
                Regex::star(l(Component::Pad, sym("b"))),
                Regex::star(l(sym("b"), Component::Pad)),
            ),
        );
        assert_eq!(h.prefix.len(), 2);
        assert_eq!(h.body, expected);
    }

    #[test]
    fn small_cases() {
        let h = parse("exists x. eps").unwrap();
        assert_eq!(h.prefix, alloc::vec![(Quantifier::Exists, "x".into())]);
        assert_eq!(h.body, Regex::Eps);
        assert!(matches!(
            parse("forall x1. [a,a]"),
            Err(Error::ArityMismatch { expected: 1, found: 2 })
        ));
        let h = parse("forall x. // comment\n [_] [!a] [#]").unwrap();
        assert_eq!(
            h.body,
            Regex::seq([
                Regex::Letter(alloc::vec![Component::Any]),
                Regex::Letter(alloc::vec![Component::Not("a".into())]),
                Regex::Letter(alloc::vec![Component::Pad]),
            ])
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse("forall x. [a] )") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 14),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("[a]"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("forall x."), Err(Error::Syntax { .. })));
        assert!(matches!(parse("forall x. [a"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("forall x. a"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("forall x. [!_]"), Err(Error::Syntax { .. })));
    }
}
