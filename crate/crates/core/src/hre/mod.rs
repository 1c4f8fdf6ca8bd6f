//! Hyperregular expressions: a quantifier prefix over named word variables
//! followed by a regular expression over tuple letters.
//!
//! Concrete syntax:
//!
//! ```text
//! hre    ::= ('forall' | 'exists') IDENT '.' ... regex
//! regex  ::= concat ('|' concat)*
//! concat ::= postfix+
//! postfix::= atom ('*' | '+')*
//! atom   ::= '[' comp (',' comp)* ']' | '(' regex ')' | 'eps' | 'empty'
//! comp   ::= SYM | '#' | '_' | '!' SYM
//! ```
//!
//! `_` is any symbol of Σ (never PAD), `!s` is any symbol of Σ other than
//! `s`, `#` is PAD. `//` starts a comment that runs to the end of the line.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

mod compile;
mod parse;
mod policy;

pub use compile::compile;
pub use parse::parse;
pub use policy::{policy, PolicyId};

use crate::Quantifier;

/// One component of a tuple letter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Component {
    Sym(String),
    Pad,
    /// Any symbol of Σ.
    Any,
    /// Any symbol of Σ except the given one.
    Not(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Regex {
    Empty,
    Eps,
    Letter(Vec<Component>),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
    Plus(Box<Regex>),
}

impl Regex {
    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: Regex) -> Regex {
        Regex::Star(Box::new(a))
    }

    pub fn plus(a: Regex) -> Regex {
        Regex::Plus(Box::new(a))
    }

    /// Left-nested union of the alternatives.
    pub fn any_of(items: impl IntoIterator<Item = Regex>) -> Regex {
        items
            .into_iter()
            .reduce(Regex::union)
            .unwrap_or(Regex::Empty)
    }

    /// Left-nested concatenation of the parts.
    pub fn seq(items: impl IntoIterator<Item = Regex>) -> Regex {
        items.into_iter().reduce(Regex::concat).unwrap_or(Regex::Eps)
    }

    fn visit_letters<'a>(&'a self, f: &mut impl FnMut(&'a [Component])) {
        match self {
            Regex::Empty | Regex::Eps => {}
            Regex::Letter(c) => f(c),
            Regex::Union(a, b) | Regex::Concat(a, b) => {
                a.visit_letters(f);
                b.visit_letters(f);
            }
            Regex::Star(a) | Regex::Plus(a) => a.visit_letters(f),
        }
    }
}

/// A parsed HRE: quantified variables and the body over their tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hre {
    pub prefix: Vec<(Quantifier, String)>,
    pub body: Regex,
}

impl Hre {
    pub fn arity(&self) -> usize {
        self.prefix.len()
    }

    /// Every literal symbol mentioned, in order of appearance.
    pub fn symbols(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        self.body.visit_letters(&mut |comps| {
            for c in comps {
                if let Component::Sym(s) | Component::Not(s) = c {
                    if !out.contains(&s.as_str()) {
                        out.push(s);
                    }
                }
            }
        });
        out
    }
}

fn write_component(c: &Component, out: &mut String) {
    match c {
        Component::Sym(s) => out.push_str(s),
        Component::Pad => out.push('#'),
        Component::Any => out.push('_'),
        Component::Not(s) => {
            out.push('!');
            out.push_str(s);
        }
    }
}

/// Precedence levels: 0 union, 1 concatenation, 2 postfix and atoms.
fn write_regex(r: &Regex, level: u8, out: &mut String) {
    let paren = |needed: bool, out: &mut String, body: &dyn Fn(&mut String)| {
        if needed {
            out.push('(');
        }
        body(out);
        if needed {
            out.push(')');
        }
    };
    match r {
        Regex::Empty => out.push_str("empty"),
        Regex::Eps => out.push_str("eps"),
        Regex::Letter(comps) => {
            out.push('[');
            for (i, c) in comps.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_component(c, out);
            }
            out.push(']');
        }
        Regex::Union(a, b) => paren(level > 0, out, &|out| {
            write_regex(a, 0, out);
            out.push('|');
            write_regex(b, 1, out);
        }),
        Regex::Concat(a, b) => paren(level > 1, out, &|out| {
            write_regex(a, 1, out);
            let mut right = String::new();
            write_regex(b, 2, &mut right);
            let glue = out.chars().last().is_some_and(char::is_alphanumeric)
                && right.chars().next().is_some_and(char::is_alphanumeric);
            if glue {
                out.push(' ');
            }
            out.push_str(&right);
        }),
        Regex::Star(a) | Regex::Plus(a) => {
            write_regex(a, 2, out);
            out.push(if matches!(r, Regex::Star(_)) { '*' } else { '+' });
        }
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_regex(self, 0, &mut s);
        f.write_str(&s)
    }
}

impl fmt::Display for Hre {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (q, v) in &self.prefix {
            let kw = match q {
                Quantifier::Forall => "forall",
                Quantifier::Exists => "exists",
            };
            write!(f, "{kw} {v}. ")?;
        }
        write!(f, "{}", self.body)
    }
}
