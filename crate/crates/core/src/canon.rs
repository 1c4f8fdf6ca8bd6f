//! Sequence- and permutation-complete forms of alternation-free NFH.
//!
//! An `NFH∀` is sequence-complete when its underlying automaton accepts a
//! zip image `w` iff it accepts every sequence `w_ζ`; an `NFH∃` is
//! permutation-complete when the same holds for permutations. All
//! comparisons here are over zip images, the only words acceptance ever
//! looks at.

use alloc::format;
use alloc::vec::Vec;

use crate::fa::{joint_search, Fa};
use crate::hfa::{remap_sequence, Fragment, Nfh};
use crate::zip::{IndexSequence, Letter, ZipImageFilter, ZipWord};
use crate::{Error, Limits, Result};

/// Outcome of [`check_complete`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompletenessReport {
    pub complete: bool,
    /// For `∀`: `w` is accepted but `w_ζ` is not. For `∃`: `w_ζ` is
    /// accepted but `w` is not.
    pub counterexample: Option<(ZipWord, IndexSequence)>,
}

fn remaps(a: &Nfh, fa: &Fa<Letter>, zetas: &[IndexSequence]) -> Vec<Fa<Letter>> {
    let codec = a.codec();
    zetas
        .iter()
        .map(|z| remap_sequence(fa, codec, codec, z.indices(), fa.alphabet_arc()))
        .collect()
}

/// [`sequence_closure_with`] under the default [`Limits`].
pub fn sequence_closure(a: &Nfh) -> Result<Nfh> {
    sequence_closure_with(a, &Limits::default())
}

/// Replaces the underlying automaton of an `NFH∀` by the intersection of
/// `A_ζ` over all `k^k` sequences `ζ`. The hyperlanguage is unchanged and the
/// result is sequence-complete.
pub fn sequence_closure_with(a: &Nfh, limits: &Limits) -> Result<Nfh> {
    if a.fragment() != Fragment::ForallOnly {
        return Err(Error::WrongFragment(format!(
            "sequence closure needs an all-∀ prefix, got {}",
            a.prefix_string()
        )));
    }
    limits.check_closure_k(a.k())?;
    let base = a.pad_normalized();
    let zetas = IndexSequence::all_maps(a.k(), a.k());
    let mut acc: Option<Fa<Letter>> = None;
    for part in remaps(a, &base, &zetas) {
        let next = match acc {
            None => part.trim(),
            Some(cur) => cur.product_intersect(&part)?.trim(),
        };
        limits.check_states(next.num_states())?;
        acc = Some(next);
    }
    Ok(a.with_underlying(acc.expect("k >= 1")))
}

/// [`permutation_closure_with`] under the default [`Limits`].
pub fn permutation_closure(a: &Nfh) -> Result<Nfh> {
    permutation_closure_with(a, &Limits::default())
}

/// Replaces the underlying automaton of an `NFH∃` by the union of `A_ζ`
/// over all `k!` permutations `ζ`. The hyperlanguage is unchanged and the
/// result is permutation-complete.
pub fn permutation_closure_with(a: &Nfh, limits: &Limits) -> Result<Nfh> {
    if a.fragment() != Fragment::ExistsOnly {
        return Err(Error::WrongFragment(format!(
            "permutation closure needs an all-∃ prefix, got {}",
            a.prefix_string()
        )));
    }
    limits.check_closure_k(a.k())?;
    let zetas = IndexSequence::permutations(a.k());
    let mut acc: Option<Fa<Letter>> = None;
    for part in remaps(a, a.underlying(), &zetas) {
        let next = match acc {
            None => part,
            Some(cur) => cur.product_union(&part)?,
        };
        limits.check_states(next.num_states())?;
        acc = Some(next);
    }
    Ok(a.with_underlying(acc.expect("k >= 1").trim()))
}

/// The closure of an alternation-free NFH with a minimal deterministic
/// underlying automaton.
pub fn canonical_form(a: &Nfh) -> Result<Nfh> {
    let closed = match a.fragment() {
        Fragment::ForallOnly => sequence_closure(a)?,
        Fragment::ExistsOnly => permutation_closure(a)?,
        _ => {
            return Err(Error::WrongFragment(format!(
                "canonical forms need an alternation-free prefix, got {}",
                a.prefix_string()
            )))
        }
    };
    Ok(closed.with_underlying(closed.underlying().minimize()))
}

fn zip_image_search(a: &Nfh, fas: &[&Fa<Letter>], goal: impl Fn(&[bool]) -> bool) -> Option<Vec<usize>> {
    let filter = ZipImageFilter::new(a.codec());
    joint_search(fas, goal, 0u64, |&m, l| filter.step(m, l))
}

/// Checks sequence-completeness (`∀`) or permutation-completeness (`∃`) and
/// reports the first violating word and index sequence.
pub fn check_complete(a: &Nfh) -> Result<CompletenessReport> {
    let forall = match a.fragment() {
        Fragment::ForallOnly => true,
        Fragment::ExistsOnly => false,
        _ => {
            return Err(Error::WrongFragment(format!(
                "completeness is defined for alternation-free prefixes, got {}",
                a.prefix_string()
            )))
        }
    };
    let k = a.k();
    let zetas: Vec<IndexSequence> = if forall {
        IndexSequence::all_maps(k, k)
    } else {
        IndexSequence::permutations(k)
    }
    .into_iter()
    .filter(|z| !z.is_identity())
    .collect();
    let base = if forall { a.pad_normalized() } else { a.underlying().clone() };
    for (z, part) in zetas.iter().zip(remaps(a, &base, &zetas)) {
        let found = if forall {
            zip_image_search(a, &[a.underlying(), &part], |acc| acc[0] && !acc[1])
        } else {
            zip_image_search(a, &[&part, a.underlying()], |acc| acc[0] && !acc[1])
        };
        if let Some(w) = found {
            return Ok(CompletenessReport {
                complete: false,
                counterexample: Some((a.decode_ids(&w), z.clone())),
            });
        }
    }
    Ok(CompletenessReport {
        complete: true,
        counterexample: None,
    })
}

/// Hyperlanguage equality of two complete NFH of the same fragment and
/// variable count, decided on the underlying automata.
///
/// For `∀` the underlying languages themselves are compared. Two
/// permutation-complete `NFH∃` can have different underlying languages and
/// still agree, so for `∃` the comparison is between sequence saturations
/// (the union of `A_ζ` over all `k^k` sequences), which the hyperlanguage
/// determines.
pub fn canonical_equal(a1: &Nfh, a2: &Nfh) -> Result<bool> {
    a1.check_sigma(a2)?;
    let f = a1.fragment();
    if !matches!(f, Fragment::ForallOnly | Fragment::ExistsOnly) || a2.fragment() != f {
        return Err(Error::WrongFragment(format!(
            "canonical comparison needs two alternation-free NFH of one fragment, got {} and {}",
            a1.prefix_string(),
            a2.prefix_string()
        )));
    }
    if a1.k() != a2.k() {
        return Err(Error::PreconditionViolated(format!(
            "variable counts differ: {} vs {}",
            a1.k(),
            a2.k()
        )));
    }
    for a in [a1, a2] {
        if !check_complete(a)?.complete {
            return Err(Error::PreconditionViolated(format!(
                "operand with prefix {} is not complete",
                a.prefix_string()
            )));
        }
    }
    if f == Fragment::ForallOnly {
        return Ok(zip_image_search(a1, &[a1.underlying(), a2.underlying()], |acc| acc[0] != acc[1]).is_none());
    }
    let k = a1.k();
    let zetas = IndexSequence::all_maps(k, k);
    let s1 = remaps(a1, &a1.pad_normalized(), &zetas);
    let s2 = remaps(a2, &a2.pad_normalized(), &zetas);
    let n = s1.len();
    let refs: Vec<&Fa<Letter>> = s1.iter().chain(s2.iter()).collect();
    let differs = zip_image_search(a1, &refs, |acc| {
        acc[..n].iter().any(|&x| x) != acc[n..].iter().any(|&x| x)
    });
    Ok(differs.is_none())
}
