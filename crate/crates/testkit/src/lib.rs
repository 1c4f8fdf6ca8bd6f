//! Brute-force oracles and seeded instance generators.
//!
//! Nothing here calls the decision procedures of `nfh-core`; the oracles
//! only read automata through their public accessors and recompute every
//! answer by explicit enumeration.

use std::collections::BTreeSet;

use nfh_core::fa::Fa;
use nfh_core::hre::{Component, Regex};
use nfh_core::zip::Letter;
use nfh_core::{Hyperword, Nfh, Quantifier, Sigma, Symbol, Word};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn sigma(tokens: &[&str]) -> Sigma {
    Sigma::new(tokens.iter().copied()).expect("valid alphabet")
}

/// Every word over Σ of length at most `max_len`, shortest first.
pub fn all_words(sigma: &Sigma, max_len: usize) -> Vec<Word> {
    let syms: Vec<Symbol> = sigma.symbols().collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &s in &syms {
                let mut v: Word = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Every hyperword of 1 to `max_words` words, each of length at most
/// `max_len`.
pub fn sweep(sigma: &Sigma, max_words: usize, max_len: usize) -> Vec<Hyperword> {
    let words = all_words(sigma, max_len);
    let mut out = Vec::new();
    let mut pick: Vec<usize> = Vec::new();
    fn rec(words: &[Word], start: usize, left: usize, pick: &mut Vec<usize>, out: &mut Vec<Hyperword>) {
        if !pick.is_empty() {
            out.push(Hyperword::new(pick.iter().map(|&i| words[i].clone())).expect("nonempty"));
        }
        if left == 0 {
            return;
        }
        for i in start..words.len() {
            pick.push(i);
            rec(words, i + 1, left - 1, pick, out);
            pick.pop();
        }
    }
    rec(&words, 0, max_words, &mut pick, &mut out);
    out
}

/// Whether `fa` (over tuple letters) accepts the tuple, padding by hand.
pub fn accepts_tuple(fa: &Fa<Letter>, tuple: &[&Word]) -> bool {
    let len = tuple.iter().map(|w| w.len()).max().unwrap_or(0);
    let mut cur: BTreeSet<usize> = fa.initial().iter().copied().collect();
    for j in 0..len {
        let letter = Letter::new(
            tuple
                .iter()
                .map(|w| w.get(j).copied().unwrap_or(Symbol::PAD))
                .collect(),
        );
        let Some(id) = fa.letter_id(&letter) else {
            return false;
        };
        let mut next = BTreeSet::new();
        for &q in &cur {
            for &(l, t) in fa.transitions(q) {
                if l == id {
                    next.insert(t);
                }
            }
        }
        cur = next;
        if cur.is_empty() {
            return false;
        }
    }
    cur.iter().any(|&q| fa.is_accepting(q))
}

/// Membership by listing all `|S|^k` assignments, running the underlying
/// automaton on each, then folding the quantifiers innermost first.
pub fn brute_member(a: &Nfh, s: &Hyperword) -> bool {
    let k = a.k();
    let n = s.len();
    let total = n.pow(k as u32);
    let mut vals = Vec::with_capacity(total);
    for code in 0..total {
        let mut digits = vec![0usize; k];
        let mut c = code;
        for d in digits.iter_mut().rev() {
            *d = c % n;
            c /= n;
        }
        let tuple: Vec<&Word> = digits.iter().map(|&i| &s.words()[i]).collect();
        vals.push(accepts_tuple(a.underlying(), &tuple));
    }
    for &q in a.prefix().iter().rev() {
        vals = vals
            .chunks(n)
            .map(|c| match q {
                Quantifier::Exists => c.iter().any(|&x| x),
                Quantifier::Forall => c.iter().all(|&x| x),
            })
            .collect();
    }
    vals[0]
}

/// The first hyperword (by size, then enumeration order) of at most
/// `max_words` words of length at most `max_len` that `a` accepts.
pub fn bounded_nonempty(a: &Nfh, max_words: usize, max_len: usize) -> Option<Hyperword> {
    let words = all_words(a.sigma(), max_len);
    let mut pick = Vec::new();
    fn rec(
        a: &Nfh,
        words: &[Word],
        size: usize,
        start: usize,
        pick: &mut Vec<usize>,
    ) -> Option<Hyperword> {
        if pick.len() == size {
            let h = Hyperword::new(pick.iter().map(|&i| words[i].clone())).expect("nonempty");
            return brute_member(a, &h).then_some(h);
        }
        for i in start..words.len() {
            pick.push(i);
            let r = rec(a, words, size, i + 1, pick);
            pick.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    (1..=max_words).find_map(|size| rec(a, &words, size, 0, &mut pick))
}

/// A random NFH with the given prefix: `states` states, state 0 initial,
/// each state accepting with probability 1/2, and each (state, letter,
/// state) triple present with probability `density`. Letters range over
/// the full (Σ ∪ {#})^k.
pub fn random_nfh(rng: &mut TestRng, sigma: &Sigma, prefix: &[Quantifier], states: usize, density: f64) -> Nfh {
    let k = prefix.len();
    let letters = Nfh::alphabet(sigma, k);
    let mut fa = Nfh::blank_underlying(sigma, k);
    for _ in 0..states {
        fa.add_state(rng.gen_bool(0.5));
    }
    fa.set_initial(0);
    for q in 0..states {
        for l in &letters {
            for t in 0..states {
                if rng.gen_bool(density) {
                    fa.add_transition(q, l, t).expect("letter in alphabet");
                }
            }
        }
    }
    Nfh::new(sigma.clone(), prefix.to_vec(), fa).expect("well-formed")
}

/// A random prefix of length `k`.
pub fn random_prefix(rng: &mut TestRng, k: usize) -> Vec<Quantifier> {
    (0..k)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Quantifier::Exists
            } else {
                Quantifier::Forall
            }
        })
        .collect()
}

pub fn random_word(rng: &mut TestRng, sigma: &Sigma, max_len: usize) -> Word {
    let syms: Vec<Symbol> = sigma.symbols().collect();
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| *syms.choose(rng).expect("nonempty")).collect()
}

pub fn random_hyperword(rng: &mut TestRng, sigma: &Sigma, max_words: usize, max_len: usize) -> Hyperword {
    let n = rng.gen_range(1..=max_words);
    Hyperword::new((0..n).map(|_| random_word(rng, sigma, max_len))).expect("nonempty")
}

/// An NFA over Σ accepting exactly `words`: one branch per word from a
/// shared initial state, plus a few useless states and edges.
pub fn finite_language_nfa(rng: &mut TestRng, sigma: &Sigma, words: &[Word]) -> Fa<Symbol> {
    let mut fa = Fa::new(sigma.symbols().collect());
    let init = fa.add_state(false);
    fa.set_initial(init);
    for w in words {
        let mut cur = init;
        for &s in w {
            let next = fa.add_state(false);
            fa.add_transition(cur, &s, next).expect("symbol in Σ");
            cur = next;
        }
        fa.set_accepting(cur, true);
    }
    let syms: Vec<Symbol> = sigma.symbols().collect();
    for _ in 0..rng.gen_range(0..3) {
        let dead = fa.add_state(false);
        let from = rng.gen_range(0..fa.num_states());
        fa.add_transition(from, syms.choose(rng).expect("nonempty"), dead)
            .expect("symbol in Σ");
    }
    fa
}

/// Every word of length at most `max_len` that `fa` accepts, simulated
/// directly.
pub fn nfa_language(fa: &Fa<Symbol>, sigma: &Sigma, max_len: usize) -> Vec<Word> {
    all_words(sigma, max_len)
        .into_iter()
        .filter(|w| {
            let mut cur: BTreeSet<usize> = fa.initial().iter().copied().collect();
            for s in w {
                let id = fa.letter_id(s).expect("symbol in Σ");
                cur = cur
                    .iter()
                    .flat_map(|&q| fa.transitions(q).iter().filter(|t| t.0 == id).map(|t| t.1))
                    .collect();
            }
            cur.iter().any(|&q| fa.is_accepting(q))
        })
        .collect()
}

/// Whether an undirected graph on `0..n` has a Hamiltonian cycle, by trying
/// every vertex order starting at 0. For `n = 2` a single edge counts.
pub fn brute_hamiltonian(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = |u: usize, v: usize| edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u));
    let mut rest: Vec<usize> = (1..n).collect();
    fn permute(rest: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if i == rest.len() {
            return f(rest);
        }
        for j in i..rest.len() {
            rest.swap(i, j);
            if permute(rest, i + 1, f) {
                return true;
            }
            rest.swap(i, j);
        }
        false
    }
    permute(&mut rest, 0, &mut |order| {
        let mut path = vec![0];
        path.extend_from_slice(order);
        path.windows(2).all(|w| adj(w[0], w[1])) && adj(*path.last().expect("n >= 1"), 0)
    })
}

/// Every connected simple graph on `0..n`, one per edge set.
pub fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == u && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if seen.iter().all(|&s| s) {
            out.push(edges);
        }
    }
    out
}

fn component_matches(c: &Component, sigma: &Sigma, s: Symbol) -> bool {
    match c {
        Component::Sym(t) => sigma.symbol(t) == Some(s),
        Component::Pad => s.is_pad(),
        Component::Any => !s.is_pad(),
        Component::Not(t) => !s.is_pad() && sigma.symbol(t) != Some(s),
    }
}

/// End positions reachable by matching `r` from any position in `starts`.
fn ends(r: &Regex, sigma: &Sigma, word: &[Letter], starts: &BTreeSet<usize>) -> BTreeSet<usize> {
    match r {
        Regex::Empty => BTreeSet::new(),
        Regex::Eps => starts.clone(),
        Regex::Letter(comps) => starts
            .iter()
            .filter(|&&i| {
                i < word.len()
                    && comps
                        .iter()
                        .zip(word[i].components())
                        .all(|(c, &s)| component_matches(c, sigma, s))
            })
            .map(|&i| i + 1)
            .collect(),
        Regex::Union(a, b) => {
            let mut x = ends(a, sigma, word, starts);
            x.extend(ends(b, sigma, word, starts));
            x
        }
        Regex::Concat(a, b) => ends(b, sigma, word, &ends(a, sigma, word, starts)),
        Regex::Star(a) | Regex::Plus(a) => {
            let mut reach = if matches!(r, Regex::Star(_)) {
                starts.clone()
            } else {
                BTreeSet::new()
            };
            let mut frontier = ends(a, sigma, word, starts);
            while !frontier.is_subset(&reach) {
                reach.extend(frontier.iter().copied());
                frontier = ends(a, sigma, word, &frontier);
            }
            reach
        }
    }
}

/// Whether the regular body of an HRE matches a tuple word exactly.
pub fn regex_matches(r: &Regex, sigma: &Sigma, word: &[Letter]) -> bool {
    ends(r, sigma, word, &BTreeSet::from([0])).contains(&word.len())
}

/// A random regex over k-tuple letters whose components are drawn from
/// Σ, `#`, `_` and `!s`.
pub fn random_regex(rng: &mut TestRng, sigma: &Sigma, k: usize, depth: usize) -> Regex {
    let tokens = sigma.tokens();
    let comp = |rng: &mut TestRng| match rng.gen_range(0..6) {
        0 => Component::Pad,
        1 => Component::Any,
        2 => Component::Not(tokens.choose(rng).expect("nonempty").clone()),
        _ => Component::Sym(tokens.choose(rng).expect("nonempty").clone()),
    };
    if depth == 0 {
        return match rng.gen_range(0..10) {
            0 => Regex::Eps,
            1 => Regex::Empty,
            _ => Regex::Letter((0..k).map(|_| comp(rng)).collect()),
        };
    }
    match rng.gen_range(0..5) {
        0 => Regex::union(random_regex(rng, sigma, k, depth - 1), random_regex(rng, sigma, k, depth - 1)),
        1 | 2 => Regex::concat(random_regex(rng, sigma, k, depth - 1), random_regex(rng, sigma, k, depth - 1)),
        3 => Regex::star(random_regex(rng, sigma, k, depth - 1)),
        _ => Regex::plus(random_regex(rng, sigma, k, depth - 1)),
    }
}

/// Every word over the full (Σ ∪ {#})^k alphabet of length at most
/// `max_len`.
pub fn all_tuple_words(sigma: &Sigma, k: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let letters = Nfh::alphabet(sigma, k);
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in &letters {
                let mut v = w.clone();
                v.push(l.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
