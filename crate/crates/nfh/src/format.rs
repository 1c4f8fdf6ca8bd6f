//! Text formats: NFH files, hyperword files and edge lists.
//!
//! An NFH file looks like
//!
//! ```text
//! nfh k=2 sigma=a,b prefix=AA
//! state 0 init
//! state 1 accept
//! trans 0 (a,b) 1
//! ```
//!
//! with one `state` line per state, in order, then one `trans` line per
//! transition. Blank lines and `//` comments are ignored on input; output
//! is canonical, so writing a parsed file back reproduces it byte for byte.

use std::fmt::Write as _;

use nfh_core::zip::ZipWord;
use nfh_core::{Hyperword, Nfh, Quantifier, Sigma};

use crate::error::CliError;

fn format_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Format {
        line,
        msg: msg.into(),
    }
}

/// Lines with comments stripped, numbered from 1, skipping blanks.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split("//").next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

pub fn write_nfh(a: &Nfh) -> String {
    let fa = a.underlying();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "nfh k={} sigma={} prefix={}",
        a.k(),
        a.sigma().tokens().join(","),
        a.prefix_string()
    );
    for q in 0..fa.num_states() {
        let _ = write!(s, "state {q}");
        if fa.initial().contains(&q) {
            s.push_str(" init");
        }
        if fa.is_accepting(q) {
            s.push_str(" accept");
        }
        s.push('\n');
    }
    for q in 0..fa.num_states() {
        for &(l, t) in fa.transitions(q) {
            let _ = writeln!(s, "trans {q} {} {t}", fa.alphabet()[l].display(a.sigma()));
        }
    }
    s
}

fn header_field<'a>(line: usize, part: Option<&'a str>, key: &str) -> Result<&'a str, CliError> {
    part.and_then(|p| p.strip_prefix(key))
        .and_then(|p| p.strip_prefix('='))
        .ok_or_else(|| format_err(line, format!("expected `{key}=`")))
}

fn parse_state(line: usize, tok: &str, n: usize) -> Result<usize, CliError> {
    let q: usize = tok
        .parse()
        .map_err(|_| format_err(line, format!("`{tok}` is not a state number")))?;
    if q >= n {
        return Err(format_err(line, format!("state {q} is not declared")));
    }
    Ok(q)
}

pub fn read_nfh(text: &str) -> Result<Nfh, CliError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| format_err(1, "empty NFH file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("nfh") {
        return Err(format_err(ln, "expected `nfh` header"));
    }
    let k: usize = header_field(ln, parts.next(), "k")?
        .parse()
        .map_err(|_| format_err(ln, "bad k"))?;
    let sigma = Sigma::new(header_field(ln, parts.next(), "sigma")?.split(','))?;
    let prefix = header_field(ln, parts.next(), "prefix")?
        .chars()
        .map(|c| Quantifier::from_letter(c).ok_or_else(|| format_err(ln, format!("bad quantifier `{c}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    if prefix.len() != k {
        return Err(format_err(ln, format!("prefix has {} quantifiers, k={k}", prefix.len())));
    }
    if parts.next().is_some() {
        return Err(format_err(ln, "trailing header fields"));
    }
    let mut fa = Nfh::blank_underlying(&sigma, k);
    let mut in_trans = false;
    for (ln, l) in lines {
        let mut parts = l.split_whitespace();
        match parts.next().unwrap_or("") {
            "state" if !in_trans => {
                let id = parts.next().ok_or_else(|| format_err(ln, "expected a state number"))?;
                if id.parse::<usize>().ok() != Some(fa.num_states()) {
                    return Err(format_err(ln, format!("expected state {}", fa.num_states())));
                }
                let (mut init, mut accept) = (false, false);
                for flag in parts {
                    match flag {
                        "init" if !init => init = true,
                        "accept" if !accept => accept = true,
                        _ => return Err(format_err(ln, format!("unexpected `{flag}`"))),
                    }
                }
                let q = fa.add_state(accept);
                if init {
                    fa.set_initial(q);
                }
            }
            "trans" => {
                in_trans = true;
                let n = fa.num_states();
                let (Some(q), Some(l), Some(t), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
                    return Err(format_err(ln, "expected `trans <from> <letter> <to>`"));
                };
                let (q, t) = (parse_state(ln, q, n)?, parse_state(ln, t, n)?);
                let w = ZipWord::parse(&sigma, k, l)?;
                let [letter] = w.letters() else {
                    return Err(format_err(ln, "expected exactly one letter"));
                };
                fa.add_transition(q, letter, t)?;
            }
            kw => return Err(format_err(ln, format!("unexpected `{kw}`"))),
        }
    }
    Ok(Nfh::new(sigma, prefix, fa)?)
}

/// One word per line; an empty line is the empty word. Lines holding
/// only a `//` comment are skipped.
pub fn read_hyperword(sigma: &Sigma, text: &str) -> Result<Hyperword, CliError> {
    let mut words = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim_start().starts_with("//") {
            continue;
        }
        let l = raw.trim();
        if l.is_empty() || l == "ε" {
            words.push(Vec::new());
        } else {
            words.push(sigma.parse_word(l).map_err(|e| format_err(i + 1, e.to_string()))?);
        }
    }
    Ok(Hyperword::new(words)?)
}

pub fn write_hyperword(sigma: &Sigma, s: &Hyperword) -> String {
    s.words()
        .iter()
        .map(|w| format!("{}\n", sigma.format_word(w)))
        .collect()
}

/// `vertices <n>` then one `u v` line per edge, vertices numbered from 1.
/// Returns the vertex count and zero-based edges.
pub fn read_edges(text: &str) -> Result<(usize, Vec<(usize, usize)>), CliError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| format_err(1, "empty edge list"))?;
    let n: usize = header
        .strip_prefix("vertices")
        .and_then(|t| t.trim().parse().ok())
        .ok_or_else(|| format_err(ln, "expected `vertices <n>`"))?;
    let mut edges = Vec::new();
    for (ln, l) in lines {
        let v: Vec<usize> = l
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| format_err(ln, format!("`{t}` is not a vertex"))))
            .collect::<Result<_, _>>()?;
        let [u, w] = v[..] else {
            return Err(format_err(ln, "expected `u v`"));
        };
        if u == 0 || w == 0 || u > n || w > n {
            return Err(format_err(ln, format!("vertex out of range 1..={n}")));
        }
        edges.push((u - 1, w - 1));
    }
    Ok((n, edges))
}

pub fn to_dot(a: &Nfh) -> String {
    a.underlying().to_dot(|l| l.display(a.sigma()))
}
