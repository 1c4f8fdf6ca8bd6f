//! Hyperautomata: the [`Nfh`] type, acceptance and Boolean operations, and
//! the decision procedures for the decidable fragments.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::fa::{Fa, StateId};
use crate::zip::{Letter, LetterCodec, ZipWord};
use crate::{Error, Limits, Result, Sigma, Symbol, Word};

mod decide;
mod hamiltonian;

pub use decide::{
    contains, contains_with, equivalent, equivalent_with, nonempty, nonempty_exists,
    nonempty_exists_forall, nonempty_forall, regular_member, regular_member_with, Separation,
};
pub use hamiltonian::{gen_hamiltonian, Graph};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Quantifier {
    Exists,
    Forall,
}

impl Quantifier {
    pub fn flip(self) -> Quantifier {
        match self {
            Quantifier::Exists => Quantifier::Forall,
            Quantifier::Forall => Quantifier::Exists,
        }
    }

    /// `E` or `A`, as in the text format's `prefix=` field.
    pub fn letter(self) -> char {
        match self {
            Quantifier::Exists => 'E',
            Quantifier::Forall => 'A',
        }
    }

    pub fn from_letter(c: char) -> Option<Quantifier> {
        match c {
            'E' => Some(Quantifier::Exists),
            'A' => Some(Quantifier::Forall),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fragment {
    ExistsOnly,
    ForallOnly,
    /// `∃^m ∀^(k−m)` with both blocks nonempty.
    ExistsForall,
    Other,
}

/// Which operand of a binary operation a track or answer belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A nonempty finite set of Σ-words, sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Hyperword {
    words: Vec<Word>,
}

impl Hyperword {
    pub fn new(words: impl IntoIterator<Item = Word>) -> Result<Hyperword> {
        let mut words: Vec<Word> = words.into_iter().collect();
        if words.iter().any(|w| w.iter().any(|s| s.is_pad())) {
            return Err(Error::UnknownSymbol(String::from("# inside a word")));
        }
        words.sort();
        words.dedup();
        if words.is_empty() {
            return Err(Error::EmptyHyperword);
        }
        Ok(Hyperword { words })
    }

    pub fn parse_words<'a>(
        sigma: &Sigma,
        words: impl IntoIterator<Item = &'a str>,
    ) -> Result<Hyperword> {
        Hyperword::new(
            words
                .into_iter()
                .map(|w| sigma.parse_word(w))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn display(&self, sigma: &Sigma) -> String {
        let mut s = String::from("{");
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            if w.is_empty() {
                s.push('ε');
            } else {
                s.push_str(&sigma.format_word(w));
            }
        }
        s.push('}');
        s
    }
}

/// A nondeterministic finite hyperautomaton.
///
/// The underlying automaton always ranges over the full alphabet
/// (Σ ∪ {PAD})^k; a letter's position in that alphabet is its mixed-radix
/// value (see [`Nfh::letter_id`]).
#[derive(Clone)]
pub struct Nfh {
    sigma: Sigma,
    prefix: Vec<Quantifier>,
    underlying: Fa<Letter>,
    codec: LetterCodec,
}

impl fmt::Debug for Nfh {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Nfh")
            .field("sigma", &self.sigma)
            .field("prefix", &self.prefix_string())
            .field("states", &self.underlying.num_states())
            .field("transitions", &self.underlying.num_transitions())
            .finish()
    }
}

impl Nfh {
    /// The full letter set (Σ ∪ {PAD})^k in canonical order.
    pub fn alphabet(sigma: &Sigma, k: usize) -> Vec<Letter> {
        LetterCodec::new(sigma.len(), k).alphabet()
    }

    /// A stateless automaton over the full alphabet, ready to be filled in
    /// and passed to [`Nfh::new`].
    pub fn blank_underlying(sigma: &Sigma, k: usize) -> Fa<Letter> {
        Fa::with_alphabet(Nfh::alphabet(sigma, k).into())
    }

    pub fn new(sigma: Sigma, prefix: Vec<Quantifier>, underlying: Fa<Letter>) -> Result<Nfh> {
        let k = prefix.len();
        if k == 0 {
            return Err(Error::InvalidArity(String::from("an NFH needs at least one variable")));
        }
        let codec = LetterCodec::new(sigma.len(), k);
        let ok = underlying.alphabet().len() == codec.size()
            && underlying
                .alphabet()
                .iter()
                .enumerate()
                .all(|(i, l)| l.arity() == k && codec.encode(l.components()) == i);
        if !ok {
            return Err(Error::AlphabetMismatch(format!(
                "underlying alphabet must be (Σ ∪ {{#}})^{k}"
            )));
        }
        Ok(Nfh {
            sigma,
            prefix,
            underlying,
            codec,
        })
    }

    pub(crate) fn from_parts(sigma: &Sigma, prefix: Vec<Quantifier>, underlying: Fa<Letter>) -> Nfh {
        let codec = LetterCodec::new(sigma.len(), prefix.len());
        debug_assert_eq!(underlying.alphabet().len(), codec.size());
        Nfh {
            sigma: sigma.clone(),
            prefix,
            underlying,
            codec,
        }
    }

    pub(crate) fn with_underlying(&self, underlying: Fa<Letter>) -> Nfh {
        Nfh::from_parts(&self.sigma, self.prefix.clone(), underlying)
    }

    pub fn sigma(&self) -> &Sigma {
        &self.sigma
    }

    pub fn k(&self) -> usize {
        self.prefix.len()
    }

    pub fn prefix(&self) -> &[Quantifier] {
        &self.prefix
    }

    pub fn prefix_string(&self) -> String {
        self.prefix.iter().map(|q| q.letter()).collect()
    }

    pub fn underlying(&self) -> &Fa<Letter> {
        &self.underlying
    }

    pub(crate) fn codec(&self) -> LetterCodec {
        self.codec
    }

    /// Position of `components` in the full alphabet.
    pub fn letter_id(&self, components: &[Symbol]) -> Result<usize> {
        if components.len() != self.k() {
            return Err(Error::ArityMismatch {
                expected: self.k(),
                found: components.len(),
            });
        }
        if let Some(s) = components.iter().find(|s| !s.is_pad() && !self.sigma.contains(**s)) {
            return Err(Error::UnknownLetter(format!("{s:?}")));
        }
        Ok(self.codec.encode(components))
    }

    /// Number of leading existential quantifiers.
    pub fn existential_block(&self) -> usize {
        self.prefix
            .iter()
            .take_while(|&&q| q == Quantifier::Exists)
            .count()
    }

    pub fn fragment(&self) -> Fragment {
        let m = self.existential_block();
        let k = self.k();
        if m == k {
            Fragment::ExistsOnly
        } else if self.prefix.iter().all(|&q| q == Quantifier::Forall) {
            Fragment::ForallOnly
        } else if self.prefix[m..].iter().all(|&q| q == Quantifier::Forall) {
            Fragment::ExistsForall
        } else {
            Fragment::Other
        }
    }

    /// Whether the underlying automaton accepts `w`.
    pub fn accepts_zip(&self, w: &ZipWord) -> Result<bool> {
        if w.arity() != self.k() {
            return Err(Error::ArityMismatch {
                expected: self.k(),
                found: w.arity(),
            });
        }
        let ids = w
            .letters()
            .iter()
            .map(|l| self.letter_id(l.components()))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.underlying.accepts_ids(&ids))
    }

    pub(crate) fn decode_ids(&self, ids: &[usize]) -> ZipWord {
        let letters = ids.iter().map(|&i| self.codec.decode(i)).collect();
        ZipWord::new(self.k(), letters).expect("arity matches codec")
    }

    /// The underlying automaton with every transition on the all-PAD letter
    /// removed and an all-PAD self-loop added to each accepting state.
    ///
    /// Zip images never contain the all-PAD letter, so the hyperlanguage is
    /// unchanged. Afterwards `w·(#…#)^j` is accepted iff `w` is, which is what
    /// the track-combining constructions rely on.
    pub(crate) fn pad_normalized(&self) -> Fa<Letter> {
        pad_normalize(&self.underlying, self.codec)
    }

    pub(crate) fn check_sigma(&self, other: &Nfh) -> Result<()> {
        if self.sigma != other.sigma {
            return Err(Error::AlphabetMismatch(format!(
                "base alphabets differ: {:?} vs {:?}",
                self.sigma, other.sigma
            )));
        }
        Ok(())
    }

    pub(crate) fn check_hyperword(&self, s: &Hyperword) -> Result<()> {
        for w in s.words() {
            if let Some(x) = w.iter().find(|x| !self.sigma.contains(**x)) {
                return Err(Error::AlphabetMismatch(format!(
                    "symbol {x:?} is not in the automaton's alphabet"
                )));
            }
        }
        Ok(())
    }
}

pub(crate) fn pad_normalize(fa: &Fa<Letter>, codec: LetterCodec) -> Fa<Letter> {
    let pad = codec.all_pad();
    let mut out = fa.remap_ids(|l| (l != pad).then_some(l));
    let acc: Vec<StateId> = out.accepting_states().collect();
    for q in acc {
        out.add_transition_id(q, pad, q);
    }
    out
}

/// Whether `S` belongs to the hyperlanguage of `A`: the quantifier prefix
/// is evaluated over the words of `S` and each complete assignment is
/// checked by running the underlying automaton on its zip.
pub fn member(a: &Nfh, s: &Hyperword) -> Result<bool> {
    a.check_hyperword(s)?;
    let words: Vec<Vec<usize>> = s
        .words()
        .iter()
        .map(|w| w.iter().map(|&x| a.codec.digit_of(x)).collect())
        .collect();
    let mut assign = vec![0usize; a.k()];
    Ok(eval(a, &words, &mut assign, 0))
}

fn eval(a: &Nfh, words: &[Vec<usize>], assign: &mut [usize], depth: usize) -> bool {
    if depth == assign.len() {
        let chosen: Vec<&Vec<usize>> = assign.iter().map(|&i| &words[i]).collect();
        let len = chosen.iter().map(|w| w.len()).max().unwrap_or(0);
        let pad = a.codec.pad_digit();
        let ids: Vec<usize> = (0..len)
            .map(|j| {
                a.codec
                    .encode_digits(chosen.iter().map(|w| w.get(j).copied().unwrap_or(pad)))
            })
            .collect();
        return a.underlying.accepts_ids(&ids);
    }
    let run = |i: usize, assign: &mut [usize]| {
        assign[depth] = i;
        eval(a, words, assign, depth + 1)
    };
    match a.prefix[depth] {
        Quantifier::Exists => (0..words.len()).any(|i| run(i, assign)),
        Quantifier::Forall => (0..words.len()).all(|i| run(i, assign)),
    }
}

/// Complement with the default [`Limits`].
pub fn complement(a: &Nfh) -> Result<Nfh> {
    complement_with(a, &Limits::default())
}

/// Dualizes every quantifier and complements the underlying automaton over
/// the full alphabet (illegal words included).
pub fn complement_with(a: &Nfh, limits: &Limits) -> Result<Nfh> {
    limits.check_k(a.k(), "complement")?;
    let c = a.underlying.complement();
    limits.check_states(c.num_states())?;
    Ok(Nfh::from_parts(
        &a.sigma,
        a.prefix.iter().map(|q| q.flip()).collect(),
        c,
    ))
}

/// Union with the default [`Limits`].
pub fn union(a1: &Nfh, a2: &Nfh) -> Result<Nfh> {
    union_with(a1, a2, &Limits::default())
}

/// The union NFH over `k₁ + k₂` variables with prefix `α₁·α₂`.
///
/// Each side's transitions are fanned out over every letter of the other
/// side's tracks. Fresh accepting states `p₁`, `p₂` keep reading letters
/// whose own side is all PAD once that side has accepted.
pub fn union_with(a1: &Nfh, a2: &Nfh, limits: &Limits) -> Result<Nfh> {
    a1.check_sigma(a2)?;
    let (k1, k2) = (a1.k(), a2.k());
    limits.check_k(k1 + k2, "union")?;
    let sigma = &a1.sigma;
    let c1 = LetterCodec::new(sigma.len(), k1);
    let c2 = LetterCodec::new(sigma.len(), k2);
    let n1 = c1.size();
    let n2 = c2.size();
    let b1 = a1.pad_normalized();
    let b2 = a2.pad_normalized();
    let mut out = Nfh::blank_underlying(sigma, k1 + k2);
    let s1 = b1.num_states();
    for q in 0..s1 {
        out.add_state(b1.is_accepting(q));
    }
    for q in 0..b2.num_states() {
        out.add_state(b2.is_accepting(q));
    }
    let p1 = out.add_state(true);
    let p2 = out.add_state(true);
    limits.check_states(out.num_states())?;
    for &q in b1.initial() {
        out.set_initial(q);
    }
    for &q in b2.initial() {
        out.set_initial(q + s1);
    }
    for q in 0..s1 {
        for &(l, t) in b1.transitions(q) {
            for tau in 0..n2 {
                out.add_transition_id(q, l * n2 + tau, t);
            }
        }
    }
    for q in 0..b2.num_states() {
        for &(l, t) in b2.transitions(q) {
            for tau in 0..n1 {
                out.add_transition_id(q + s1, tau * n2 + l, t + s1);
            }
        }
    }
    let pad1 = c1.all_pad();
    let pad2 = c2.all_pad();
    for f in b1.accepting_states() {
        for tau in 0..n2 {
            out.add_transition_id(f, pad1 * n2 + tau, p1);
        }
    }
    for tau in 0..n2 {
        out.add_transition_id(p1, pad1 * n2 + tau, p1);
    }
    for f in b2.accepting_states() {
        for tau in 0..n1 {
            out.add_transition_id(f + s1, tau * n2 + pad2, p2);
        }
    }
    for tau in 0..n1 {
        out.add_transition_id(p2, tau * n2 + pad2, p2);
    }
    let mut prefix = a1.prefix.clone();
    prefix.extend_from_slice(&a2.prefix);
    Ok(Nfh::from_parts(sigma, prefix, out))
}

/// Intersection with the default [`Limits`].
pub fn intersect(a1: &Nfh, a2: &Nfh, interleaving: Option<&[Side]>) -> Result<Nfh> {
    intersect_with(a1, a2, interleaving, &Limits::default())
}

/// The product NFH over `k₁ + k₂` variables.
///
/// Both underlying automata run side by side. The sink components `q` and
/// `p` take over once one side has accepted and only PAD remains on its
/// tracks. `interleaving` lists, for each variable of the result, which
/// operand it comes from; each side's own order is kept. The default is
/// `α₁·α₂`.
pub fn intersect_with(
    a1: &Nfh,
    a2: &Nfh,
    interleaving: Option<&[Side]>,
    limits: &Limits,
) -> Result<Nfh> {
    a1.check_sigma(a2)?;
    let (k1, k2) = (a1.k(), a2.k());
    let k = k1 + k2;
    limits.check_k(k, "intersection")?;
    let order: Vec<Side> = match interleaving {
        Some(o) => {
            let lefts = o.iter().filter(|&&s| s == Side::Left).count();
            if o.len() != k || lefts != k1 {
                return Err(Error::InvalidInterleaving(format!(
                    "expected {k1} left and {k2} right variables, got {} entries with {lefts} left",
                    o.len()
                )));
            }
            o.to_vec()
        }
        None => [vec![Side::Left; k1], vec![Side::Right; k2]].concat(),
    };
    let sigma = &a1.sigma;
    let n2 = LetterCodec::new(sigma.len(), k2).size();
    let pad1 = LetterCodec::new(sigma.len(), k1).all_pad();
    let pad2 = LetterCodec::new(sigma.len(), k2).all_pad();
    let b1 = a1.pad_normalized();
    let b2 = a2.pad_normalized();

    // None in the first slot is the sink q, in the second slot the sink p.
    type Pair = (Option<StateId>, Option<StateId>);
    let acc = |p: &Pair| -> bool {
        match *p {
            (Some(x), Some(y)) => b1.is_accepting(x) && b2.is_accepting(y),
            (Some(x), None) => b1.is_accepting(x),
            (None, Some(y)) => b2.is_accepting(y),
            (None, None) => false,
        }
    };
    let mut out = Nfh::blank_underlying(sigma, k);
    let mut index: BTreeMap<Pair, StateId> = BTreeMap::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for &x in b1.initial() {
        for &y in b2.initial() {
            let p = (Some(x), Some(y));
            index.insert(p, out.add_state(acc(&p)));
            pairs.push(p);
            out.set_initial(pairs.len() - 1);
        }
    }
    let mut i = 0;
    while i < pairs.len() {
        let cur = pairs[i];
        let mut moves: Vec<(usize, Pair)> = Vec::new();
        match cur {
            (Some(x), Some(y)) => {
                for &(l1, x2) in b1.transitions(x) {
                    for &(l2, y2) in b2.transitions(y) {
                        moves.push((l1 * n2 + l2, (Some(x2), Some(y2))));
                    }
                }
                if b2.is_accepting(y) {
                    for &(l1, x2) in b1.transitions(x) {
                        moves.push((l1 * n2 + pad2, (Some(x2), None)));
                    }
                }
                if b1.is_accepting(x) {
                    for &(l2, y2) in b2.transitions(y) {
                        moves.push((pad1 * n2 + l2, (None, Some(y2))));
                    }
                }
            }
            (Some(x), None) => {
                for &(l1, x2) in b1.transitions(x) {
                    moves.push((l1 * n2 + pad2, (Some(x2), None)));
                }
            }
            (None, Some(y)) => {
                for &(l2, y2) in b2.transitions(y) {
                    moves.push((pad1 * n2 + l2, (None, Some(y2))));
                }
            }
            (None, None) => {}
        }
        for (l, p) in moves {
            let t = match index.get(&p) {
                Some(&t) => t,
                None => {
                    let t = out.add_state(acc(&p));
                    index.insert(p, t);
                    pairs.push(p);
                    t
                }
            };
            out.add_transition_id(i, l, t);
        }
        limits.check_states(pairs.len())?;
        i += 1;
    }

    let mut prefix = a1.prefix.clone();
    prefix.extend_from_slice(&a2.prefix);
    let product = Nfh::from_parts(sigma, prefix, out);
    // source track for each result track
    let mut src = Vec::with_capacity(k);
    let (mut nl, mut nr) = (0, k1);
    for s in &order {
        match s {
            Side::Left => {
                src.push(nl);
                nl += 1;
            }
            Side::Right => {
                src.push(nr);
                nr += 1;
            }
        }
    }
    if src.iter().enumerate().all(|(i, &j)| i == j) {
        return Ok(product);
    }
    Ok(permute_tracks(&product, &src))
}

/// Reorders variables: variable `t` of the result is variable `src[t]` of
/// `a`.
pub(crate) fn permute_tracks(a: &Nfh, src: &[usize]) -> Nfh {
    let codec = a.codec;
    let fa = a.underlying.remap_ids(|m| {
        let d = codec.digits(m);
        let mut orig = vec![0; d.len()];
        for (t, &s) in src.iter().enumerate() {
            orig[s] = d[t];
        }
        Some(codec.encode_digits(orig.into_iter()))
    });
    let prefix = src.iter().map(|&s| a.prefix[s]).collect();
    Nfh::from_parts(&a.sigma, prefix, fa)
}

/// `A_ζ` for a map `ζ` from the `len(ζ)` tracks fed to `fa` (arity
/// `fa_codec.k`) onto the tracks of the result alphabet `out_codec`: the
/// result reads `ℓ` wherever `fa` reads `(ℓ[ζ(1)], …)`.
pub(crate) fn remap_sequence(
    fa: &Fa<Letter>,
    fa_codec: LetterCodec,
    out_codec: LetterCodec,
    zeta: &[usize],
    out_alphabet: &alloc::sync::Arc<[Letter]>,
) -> Fa<Letter> {
    debug_assert_eq!(zeta.len(), fa_codec.k);
    if fa_codec == out_codec {
        return fa.remap_ids(|m| {
            let d = out_codec.digits(m);
            Some(fa_codec.encode_digits(zeta.iter().map(|&i| d[i])))
        });
    }
    let mut out = Fa::with_alphabet(out_alphabet.clone());
    for q in 0..fa.num_states() {
        out.add_state(fa.is_accepting(q));
    }
    for &q in fa.initial() {
        out.set_initial(q);
    }
    let images: Vec<usize> = (0..out_codec.size())
        .map(|m| {
            let d = out_codec.digits(m);
            fa_codec.encode_digits(zeta.iter().map(|&i| d[i]))
        })
        .collect();
    for q in 0..fa.num_states() {
        for (m, &l) in images.iter().enumerate() {
            let succ: Vec<StateId> = fa.successors(q, l).collect();
            for t in succ {
                out.add_transition_id(q, m, t);
            }
        }
    }
    out
}
