use alloc::vec;
use alloc::vec::Vec;

use super::{Component, Hre, Regex};
use crate::fa::StateId;
use crate::zip::LetterCodec;
use crate::{Error, Nfh, Result, Sigma, Symbol};

/// An ε-NFA under construction (Thompson fragments share one pool).
struct Thompson {
    eps: Vec<Vec<StateId>>,
    trans: Vec<Vec<(usize, StateId)>>,
}

impl Thompson {
    fn state(&mut self) -> StateId {
        self.eps.push(Vec::new());
        self.trans.push(Vec::new());
        self.eps.len() - 1
    }

    fn build(&mut self, r: &Regex, letters: &dyn Fn(&[Component]) -> Result<Vec<usize>>) -> Result<(StateId, StateId)> {
        let s = self.state();
        let e = self.state();
        match r {
            Regex::Empty => {}
            Regex::Eps => self.eps[s].push(e),
            Regex::Letter(c) => {
                for l in letters(c)? {
                    self.trans[s].push((l, e));
                }
            }
            Regex::Union(a, b) => {
                let (as_, ae) = self.build(a, letters)?;
                let (bs, be) = self.build(b, letters)?;
                self.eps[s].extend([as_, bs]);
                self.eps[ae].push(e);
                self.eps[be].push(e);
            }
            Regex::Concat(a, b) => {
                let (as_, ae) = self.build(a, letters)?;
                let (bs, be) = self.build(b, letters)?;
                self.eps[s].push(as_);
                self.eps[ae].push(bs);
                self.eps[be].push(e);
            }
            Regex::Star(a) | Regex::Plus(a) => {
                let (as_, ae) = self.build(a, letters)?;
                self.eps[s].push(as_);
                self.eps[ae].extend([as_, e]);
                if matches!(r, Regex::Star(_)) {
                    self.eps[s].push(e);
                }
            }
        }
        Ok((s, e))
    }

    fn closure(&self, q: StateId) -> Vec<StateId> {
        let mut seen = vec![false; self.eps.len()];
        let mut stack = vec![q];
        seen[q] = true;
        let mut out = Vec::new();
        while let Some(p) = stack.pop() {
            out.push(p);
            for &t in &self.eps[p] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        out
    }
}

fn expand(c: &Component, sigma: &Sigma) -> Result<Vec<Symbol>> {
    let lookup = |s: &str| sigma.symbol(s).ok_or_else(|| Error::UnknownSymbol(s.into()));
    Ok(match c {
        Component::Sym(s) => vec![lookup(s)?],
        Component::Pad => vec![Symbol::PAD],
        Component::Any => sigma.symbols().collect(),
        Component::Not(s) => {
            let x = lookup(s)?;
            sigma.symbols().filter(|&y| y != x).collect()
        }
    })
}

/// Compiles an HRE into an NFH over `sigma`.
///
/// The body goes through Thompson's construction and ε-elimination; the
/// result has no ε-transitions and only useful states. Wildcards and
/// negated literals are expanded over `sigma`.
pub fn compile(hre: &Hre, sigma: &Sigma) -> Result<Nfh> {
    let k = hre.arity();
    if k == 0 {
        return Err(Error::InvalidArity("an HRE needs at least one variable".into()));
    }
    let codec = LetterCodec::new(sigma.len(), k);
    let letters = |comps: &[Component]| -> Result<Vec<usize>> {
        if comps.len() != k {
            return Err(Error::ArityMismatch {
                expected: k,
                found: comps.len(),
            });
        }
        let options = comps
            .iter()
            .map(|c| expand(c, sigma))
            .collect::<Result<Vec<_>>>()?;
        let mut ids = vec![0usize];
        for opt in &options {
            let mut next = Vec::with_capacity(ids.len() * opt.len());
            for &id in &ids {
                for &s in opt {
                    next.push(id * codec.base + codec.digit_of(s));
                }
            }
            ids = next;
        }
        Ok(ids)
    };
    let mut t = Thompson {
        eps: Vec::new(),
        trans: Vec::new(),
    };
    let (start, end) = t.build(&hre.body, &letters)?;

    let mut fa = Nfh::blank_underlying(sigma, k);
    for q in 0..t.eps.len() {
        let cl = t.closure(q);
        fa.add_state(cl.contains(&end));
    }
    fa.set_initial(start);
    for q in 0..t.eps.len() {
        for p in t.closure(q) {
            for &(l, r) in &t.trans[p] {
                fa.add_transition_id(q, l, r);
            }
        }
    }
    let prefix = hre.prefix.iter().map(|(q, _)| *q).collect();
    Nfh::new(sigma.clone(), prefix, fa.trim())
}
