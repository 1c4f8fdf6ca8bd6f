use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    complement_with, intersect_with, remap_sequence, Fragment, Hyperword, Nfh,
    Quantifier, Side,
};
use crate::fa::{joint_search, Fa, StateId};
use crate::zip::{unzip, IndexSequence, Letter, LetterCodec, ZipImageFilter};
use crate::{Error, Limits, Result, Symbol};

fn tracks_hyperword(a: &Nfh, ids: &[usize], keep: usize) -> Hyperword {
    let w = a.decode_ids(ids);
    let tuple = unzip(&w).expect("searches only produce legal words");
    Hyperword::new(tuple.into_iter().take(keep)).expect("k >= 1")
}

/// Nonemptiness for `NFH∃`: the hyperlanguage is nonempty iff the underlying
/// automaton accepts a zip image. The witness is the set of its tracks.
pub fn nonempty_exists(a: &Nfh) -> Result<Option<Hyperword>> {
    if a.fragment() != Fragment::ExistsOnly {
        return Err(Error::WrongFragment(format!(
            "expected an all-∃ prefix, got {}",
            a.prefix_string()
        )));
    }
    let filter = ZipImageFilter::new(a.codec());
    Ok(a.underlying()
        .reach_with(0u64, |&m, l| filter.step(m, l))
        .map(|w| tracks_hyperword(a, &w, a.k())))
}

/// Nonemptiness for `NFH∀`: nonempty iff some singleton `{u}` is accepted,
/// i.e. the underlying automaton accepts a word of diagonal letters.
pub fn nonempty_forall(a: &Nfh) -> Result<Option<Hyperword>> {
    if a.fragment() != Fragment::ForallOnly {
        return Err(Error::WrongFragment(format!(
            "expected an all-∀ prefix, got {}",
            a.prefix_string()
        )));
    }
    let codec = a.codec();
    let diagonal: Vec<bool> = (0..codec.size())
        .map(|l| {
            let d = codec.digits(l);
            d[0] != codec.pad_digit() && d.iter().all(|&x| x == d[0])
        })
        .collect();
    Ok(a.underlying()
        .reach_with((), |_, l| diagonal[l].then_some(()))
        .map(|w| tracks_hyperword(a, &w, 1)))
}

/// Nonemptiness for `NFH∃∀` with `m` existential variables.
///
/// A nonempty hyperlanguage contains a hyperword of at most `m` words, so it
/// suffices to intersect `A_ζ` over all `ζ = (1, …, m, i₁, …, i_{k−m})` with
/// `iⱼ ∈ [1..m]` and search for a zip image whose last `k − m` tracks are
/// PAD. Pure prefixes go to the alternation-free procedures.
pub fn nonempty_exists_forall(a: &Nfh) -> Result<Option<Hyperword>> {
    match a.fragment() {
        Fragment::ExistsOnly => return nonempty_exists(a),
        Fragment::ForallOnly => return nonempty_forall(a),
        Fragment::ExistsForall => {}
        Fragment::Other => {
            return Err(Error::WrongFragment(format!(
                "expected an ∃*∀* prefix, got {}",
                a.prefix_string()
            )))
        }
    }
    let k = a.k();
    let m = a.existential_block();
    let codec = a.codec();
    let base = a.pad_normalized();
    let alphabet = base.alphabet_arc().clone();
    let gamma: Vec<Vec<usize>> = IndexSequence::all_maps(k - m, m)
        .into_iter()
        .map(|tail| (0..m).chain(tail.indices().iter().copied()).collect())
        .collect();
    let parts: Vec<Fa<Letter>> = gamma
        .iter()
        .map(|z| remap_sequence(&base, codec, codec, z, &alphabet))
        .collect();
    let refs: Vec<&Fa<Letter>> = parts.iter().collect();
    let filter = ZipImageFilter::new(codec);
    let high: u64 = ((1u64 << k) - 1) & !((1u64 << m) - 1);
    let masks: Vec<u64> = (0..codec.size()).map(|l| codec.pad_mask(l)).collect();
    let found = joint_search(
        &refs,
        |acc| acc.iter().all(|&x| x),
        0u64,
        |&ended, l| {
            if masks[l] & high != high {
                None
            } else {
                filter.step(ended, l)
            }
        },
    );
    Ok(found.map(|w| tracks_hyperword(a, &w, m)))
}

/// Dispatches to the nonemptiness procedure for the automaton's fragment.
pub fn nonempty(a: &Nfh) -> Result<Option<Hyperword>> {
    nonempty_exists_forall(a)
}

/// [`regular_member_with`] under the default [`Limits`].
pub fn regular_member(lang: &Fa<Symbol>, a: &Nfh) -> Result<bool> {
    regular_member_with(lang, a, &Limits::default())
}

/// Decides whether the (possibly infinite) hyperword `L(lang)` belongs to
/// the hyperlanguage of `A`.
///
/// Variables are eliminated from the innermost one outwards. A trailing `∀`
/// is first turned into `∃` by complementing the NFH and negating the
/// answer; a trailing `∃x_k` is then projected away by running its track
/// against `L(lang)·#*`. With one variable left the answer is an
/// intersection-emptiness test against `lang`.
pub fn regular_member_with(lang: &Fa<Symbol>, a: &Nfh, limits: &Limits) -> Result<bool> {
    let sigma = a.sigma();
    if let Some(s) = lang.alphabet().iter().find(|s| !sigma.contains(**s)) {
        return Err(Error::AlphabetMismatch(format!(
            "language letter {s:?} is not in the automaton's alphabet"
        )));
    }
    if lang.is_empty().is_none() {
        return Err(Error::EmptyRegularLanguage);
    }
    let padded = pad_language(lang);
    let mut b = a.clone();
    let mut negate = false;
    while b.k() > 1 {
        if b.prefix()[b.k() - 1] == Quantifier::Forall {
            b = complement_with(&b, limits)?;
            negate = !negate;
        }
        b = project_last(&b, &padded, limits)?;
    }
    let hit = |u: &Fa<Letter>| -> bool {
        let as_symbols = u.remap_letters(lang.alphabet().to_vec(), |s| vec![Letter::new(vec![*s])]);
        as_symbols
            .product_intersect(lang)
            .expect("same alphabet")
            .is_empty()
            .is_some()
    };
    let answer = match b.prefix()[0] {
        Quantifier::Exists => hit(b.underlying()),
        Quantifier::Forall => !hit(&b.underlying().complement()),
    };
    Ok(answer != negate)
}

/// `L·#*` over Σ ∪ {PAD}.
fn pad_language(lang: &Fa<Symbol>) -> Fa<Symbol> {
    let mut alpha: Vec<Symbol> = lang.alphabet().to_vec();
    alpha.push(Symbol::PAD);
    let mut out = Fa::new(alpha);
    for q in 0..lang.num_states() {
        out.add_state(lang.is_accepting(q));
    }
    for &q in lang.initial() {
        out.set_initial(q);
    }
    for q in 0..lang.num_states() {
        for &(l, t) in lang.transitions(q) {
            out.add_transition(q, &lang.alphabet()[l], t).expect("letter present");
        }
    }
    let pf = out.add_state(true);
    for f in lang.accepting_states() {
        out.add_transition(f, &Symbol::PAD, pf).expect("pad present");
    }
    out.add_transition(pf, &Symbol::PAD, pf).expect("pad present");
    out
}

/// For a trailing `∃x_k`, the NFH over `x₁ … x_{k−1}` whose underlying
/// automaton accepts `zip(v)` iff `zip(v, u)` is accepted for some
/// `u ∈ L(lang)`. The product pairs each state with a state of `L·#*`.
/// When `u` is longer than every other track the last letters are PAD
/// outside track k; states that reach acceptance on such letters are made
/// accepting.
fn project_last(b: &Nfh, padded: &Fa<Symbol>, limits: &Limits) -> Result<Nfh> {
    let k = b.k();
    let sigma = b.sigma();
    let src = b.pad_normalized();
    let codec = b.codec();
    let out_codec = LetterCodec::new(sigma.len(), k - 1);
    let out_pad = out_codec.all_pad();
    let mut out = Nfh::blank_underlying(sigma, k - 1);
    let mut index = alloc::collections::BTreeMap::new();
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let acc = |q: StateId, p: StateId| src.is_accepting(q) && padded.is_accepting(p);
    for &q in src.initial() {
        for &p in padded.initial() {
            index.insert((q, p), out.add_state(acc(q, p)));
            pairs.push((q, p));
            out.set_initial(pairs.len() - 1);
        }
    }
    let mut pad_edges: Vec<(StateId, StateId)> = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (q, p) = pairs[i];
        for &(l, q2) in src.transitions(q) {
            let rest = l / codec.base;
            let last = codec.symbol_of(l % codec.base);
            let Some(li) = padded.letter_id(&last) else { continue };
            let targets: Vec<StateId> = padded.successors(p, li).collect();
            for p2 in targets {
                let t = match index.get(&(q2, p2)) {
                    Some(&t) => t,
                    None => {
                        let t = out.add_state(acc(q2, p2));
                        index.insert((q2, p2), t);
                        pairs.push((q2, p2));
                        t
                    }
                };
                out.add_transition_id(i, rest, t);
                if rest == out_pad {
                    pad_edges.push((i, t));
                }
            }
        }
        limits.check_states(pairs.len())?;
        i += 1;
    }
    // tail saturation
    let mut changed = true;
    while changed {
        changed = false;
        for &(s, t) in &pad_edges {
            if out.is_accepting(t) && !out.is_accepting(s) {
                out.set_accepting(s, true);
                changed = true;
            }
        }
    }
    Ok(Nfh::from_parts(sigma, b.prefix()[..k - 1].to_vec(), out))
}

/// [`contains_with`] under the default [`Limits`].
pub fn contains(a1: &Nfh, a2: &Nfh) -> Result<Option<Hyperword>> {
    contains_with(a1, a2, &Limits::default())
}

/// Decides `𝔏(A₁) ⊆ 𝔏(A₂)` for `A₁` in `∃*∀*` and alternation-free `A₂`.
///
/// Builds `A₁ ∩ ¬A₂` with the quantifiers ordered as: the `∃` block of `A₁`,
/// the `∃` block of `¬A₂`, the `∀` block of `A₁`, the `∀` block of `¬A₂`;
/// the result is in `∃*∀*` and its nonemptiness is decidable. A returned
/// hyperword lies in `𝔏(A₁) \ 𝔏(A₂)`.
pub fn contains_with(a1: &Nfh, a2: &Nfh, limits: &Limits) -> Result<Option<Hyperword>> {
    a1.check_sigma(a2)?;
    let f1 = a1.fragment();
    let f2 = a2.fragment();
    if f1 == Fragment::Other || !matches!(f2, Fragment::ExistsOnly | Fragment::ForallOnly) {
        return Err(Error::Unsupported(format!(
            "containment of {} in {} is outside the decidable pairs",
            a1.prefix_string(),
            a2.prefix_string()
        )));
    }
    limits.check_k(a1.k() + a2.k(), "containment")?;
    let c2 = complement_with(a2, limits)?;
    let m1 = a1.existential_block();
    let m2 = c2.existential_block();
    let mut order = Vec::with_capacity(a1.k() + c2.k());
    order.extend(core::iter::repeat_n(Side::Left, m1));
    order.extend(core::iter::repeat_n(Side::Right, m2));
    order.extend(core::iter::repeat_n(Side::Left, a1.k() - m1));
    order.extend(core::iter::repeat_n(Side::Right, c2.k() - m2));
    let both = intersect_with(a1, &c2, Some(&order), limits)?;
    nonempty_exists_forall(&both)
}

/// The outcome of a failed equivalence check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Separation {
    pub hyperword: Hyperword,
    /// The operand whose hyperlanguage contains the hyperword.
    pub accepted_by: Side,
}

/// [`equivalent_with`] under the default [`Limits`].
pub fn equivalent(a1: &Nfh, a2: &Nfh) -> Result<Option<Separation>> {
    equivalent_with(a1, a2, &Limits::default())
}

/// Hyperlanguage equality of two alternation-free NFH via two containment
/// checks.
pub fn equivalent_with(a1: &Nfh, a2: &Nfh, limits: &Limits) -> Result<Option<Separation>> {
    for a in [a1, a2] {
        if !matches!(a.fragment(), Fragment::ExistsOnly | Fragment::ForallOnly) {
            return Err(Error::Unsupported(String::from(
                "equivalence needs alternation-free operands",
            )));
        }
    }
    if let Some(s) = contains_with(a1, a2, limits)? {
        return Ok(Some(Separation {
            hyperword: s,
            accepted_by: Side::Left,
        }));
    }
    if let Some(s) = contains_with(a2, a1, limits)? {
        return Ok(Some(Separation {
            hyperword: s,
            accepted_by: Side::Right,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hfa::{complement, member};
    use crate::Sigma;

    fn ab() -> Sigma {
        Sigma::new(["a", "b"]).unwrap()
    }

    fn letter(s: &Sigma, toks: &[&str]) -> Letter {
        Letter::new(
            toks.iter()
                .map(|t| if *t == "#" { Symbol::PAD } else { s.symbol(t).unwrap() })
                .collect(),
        )
    }

    /// Underlying automaton accepting exactly the listed one-letter words.
    fn one_letter(s: &Sigma, prefix: &str, letters: &[&[&str]]) -> Nfh {
        let prefix: Vec<Quantifier> = prefix.chars().map(|c| Quantifier::from_letter(c).unwrap()).collect();
        let mut fa = Nfh::blank_underlying(s, prefix.len());
        let q0 = fa.add_state(false);
        let q1 = fa.add_state(true);
        fa.set_initial(q0);
        for l in letters {
            fa.add_transition(q0, &letter(s, l), q1).unwrap();
        }
        Nfh::new(s.clone(), prefix, fa).unwrap()
    }

    fn hw(s: &Sigma, w: &[&str]) -> Hyperword {
        Hyperword::parse_words(s, w.iter().copied()).unwrap()
    }

    #[test]
    fn exists_witnesses() {
        let s = ab();
        let a = one_letter(&s, "EE", &[&["a", "b"]]);
        assert_eq!(nonempty_exists(&a).unwrap(), Some(hw(&s, &["a", "b"])));
        let mut fa = Nfh::blank_underlying(&s, 2);
        let q: Vec<_> = (0..3).map(|i| fa.add_state(i == 2)).collect();
        fa.set_initial(q[0]);
        fa.add_transition(q[0], &letter(&s, &["a", "#"]), q[1]).unwrap();
        fa.add_transition(q[1], &letter(&s, &["#", "b"]), q[2]).unwrap();
        let illegal = Nfh::new(s.clone(), vec![Quantifier::Exists; 2], fa).unwrap();
        assert_eq!(nonempty_exists(&illegal).unwrap(), None);
        assert!(matches!(
            nonempty_exists(&one_letter(&s, "A", &[])),
            Err(Error::WrongFragment(_))
        ));
    }

    #[test]
    fn forall_witnesses() {
        let s = ab();
        assert_eq!(nonempty_forall(&one_letter(&s, "AA", &[&["a", "b"]])).unwrap(), None);
        let mut fa = Nfh::blank_underlying(&s, 2);
        let q = fa.add_state(true);
        fa.set_initial(q);
        fa.add_transition(q, &letter(&s, &["a", "a"]), q).unwrap();
        let loop_aa = Nfh::new(s.clone(), vec![Quantifier::Forall; 2], fa).unwrap();
        assert_eq!(nonempty_forall(&loop_aa).unwrap(), Some(hw(&s, &[""])));
        let aa_plus = one_letter(&s, "AA", &[&["a", "a"]]);
        assert_eq!(nonempty_forall(&aa_plus).unwrap(), Some(hw(&s, &["a"])));
    }

    #[test]
    fn exists_forall_witnesses() {
        let s = ab();
        let yes = one_letter(&s, "EA", &[&["a", "a"], &["a", "b"]]);
        assert_eq!(nonempty_exists_forall(&yes).unwrap(), Some(hw(&s, &["a"])));
        let no = one_letter(&s, "EA", &[&["a", "b"]]);
        assert_eq!(nonempty_exists_forall(&no).unwrap(), None);
        let pure = one_letter(&s, "EE", &[&["a", "b"]]);
        assert_eq!(nonempty_exists_forall(&pure).unwrap(), nonempty_exists(&pure).unwrap());
    }

    fn star_lang(s: &Sigma, toks: &[&str]) -> Fa<Symbol> {
        let mut l = Fa::new(s.symbols().collect());
        let q = l.add_state(true);
        l.set_initial(q);
        for t in toks {
            l.add_transition(q, &s.symbol(t).unwrap(), q).unwrap();
        }
        l
    }

    fn star_nfh(s: &Sigma, q: Quantifier, toks: &[&str]) -> Nfh {
        let mut fa = Nfh::blank_underlying(s, 1);
        let st = fa.add_state(true);
        fa.set_initial(st);
        for t in toks {
            fa.add_transition(st, &letter(s, &[t]), st).unwrap();
        }
        Nfh::new(s.clone(), vec![q], fa).unwrap()
    }

    #[test]
    fn regular_membership() {
        let s = ab();
        let astar = star_lang(&s, &["a"]);
        assert!(regular_member(&astar, &star_nfh(&s, Quantifier::Forall, &["a"])).unwrap());
        let mut just_a = Fa::new(s.symbols().collect());
        let q0 = just_a.add_state(false);
        let q1 = just_a.add_state(true);
        just_a.set_initial(q0);
        just_a.add_transition(q0, &s.symbol("a").unwrap(), q1).unwrap();
        assert!(!regular_member(&just_a, &star_nfh(&s, Quantifier::Exists, &["b"])).unwrap());
        let empty = Fa::empty(s.symbols().collect());
        assert!(matches!(
            regular_member(&empty, &star_nfh(&s, Quantifier::Exists, &["b"])),
            Err(Error::EmptyRegularLanguage)
        ));
    }

    #[test]
    fn regular_membership_respects_quantifier_order() {
        // ∃x₁∀x₂ x₁ = x₂ over {a, b} is false; swapping the quantifiers
        // would make it true.
        let s = ab();
        let mut fa = Nfh::blank_underlying(&s, 2);
        let q = fa.add_state(true);
        fa.set_initial(q);
        fa.add_transition(q, &letter(&s, &["a", "a"]), q).unwrap();
        fa.add_transition(q, &letter(&s, &["b", "b"]), q).unwrap();
        let eq = Nfh::new(s.clone(), vec![Quantifier::Exists, Quantifier::Forall], fa).unwrap();
        let mut two = Fa::new(s.symbols().collect());
        let q0 = two.add_state(false);
        let q1 = two.add_state(true);
        two.set_initial(q0);
        two.add_transition(q0, &s.symbol("a").unwrap(), q1).unwrap();
        two.add_transition(q0, &s.symbol("b").unwrap(), q1).unwrap();
        assert!(!member(&eq, &hw(&s, &["a", "b"])).unwrap());
        assert!(!regular_member(&two, &eq).unwrap());
    }

    #[test]
    fn containment_and_equivalence() {
        let s = ab();
        let a = star_nfh(&s, Quantifier::Forall, &["a"]);
        let ab_all = star_nfh(&s, Quantifier::Forall, &["a", "b"]);
        assert_eq!(contains(&a, &ab_all).unwrap(), None);
        assert_eq!(contains(&ab_all, &a).unwrap(), Some(hw(&s, &["b"])));
        assert_eq!(contains(&a, &a).unwrap(), None);
        assert_eq!(equivalent(&a, &complement(&complement(&a).unwrap()).unwrap()).unwrap(), None);
        assert_eq!(
            equivalent(&a, &ab_all).unwrap(),
            Some(Separation {
                hyperword: hw(&s, &["b"]),
                accepted_by: Side::Right
            })
        );
        let ea = one_letter(&s, "EA", &[&["a", "a"]]);
        let univ = star_nfh(&s, Quantifier::Exists, &["a", "b"]);
        assert_eq!(contains(&ea, &univ).unwrap(), None);
        assert!(matches!(contains(&univ, &ea), Err(Error::Unsupported(_))));
    }
}
