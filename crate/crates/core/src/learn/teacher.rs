use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::{Counterexample, LearnerConfig, Polarity, Teacher};
use crate::fa::{joint_search, Fa};
use crate::hfa::{equivalent_with, member, remap_sequence, Side};
use crate::zip::{unzip, IndexSequence, Letter, LetterCodec, ZipImageFilter, ZipWord};
use crate::{Error, Fragment, Hyperword, Nfh, Quantifier, Result, Sigma};

/// Maps `ζ : [k] → [s]` beyond which the restriction search gives way to
/// the general equivalence check.
const MAX_MAPS: usize = 256;

/// A teacher that answers from a known alternation-free target.
#[derive(Clone, Debug)]
pub struct AutomatedTeacher {
    target: Nfh,
    config: LearnerConfig,
    memo: BTreeMap<Hyperword, bool>,
    /// Membership questions answered, including repeats.
    pub member_queries: usize,
    pub equivalence_queries: usize,
}

pub fn automated_teacher(target: &Nfh, config: &LearnerConfig) -> Result<AutomatedTeacher> {
    if !matches!(target.fragment(), Fragment::ForallOnly | Fragment::ExistsOnly) {
        return Err(Error::WrongFragment(format!(
            "the teacher needs an alternation-free target, got {}",
            target.prefix_string()
        )));
    }
    config.limits.check_k(target.k(), "the target")?;
    Ok(AutomatedTeacher {
        target: target.clone(),
        config: *config,
        memo: BTreeMap::new(),
        member_queries: 0,
        equivalence_queries: 0,
    })
}

/// The `s`-restriction of `a`: one automaton per map `ζ : [k] → [s]` over
/// s-tuple letters. An s-tuple zip image is in the restriction when all
/// (for ∀) or some (for ∃) of them accept.
fn restriction(a: &Nfh, s: usize, out: LetterCodec, alphabet: &alloc::sync::Arc<[Letter]>) -> Vec<Fa<Letter>> {
    let base = a.pad_normalized();
    IndexSequence::all_maps(a.k(), s)
        .iter()
        .map(|z| remap_sequence(&base, a.codec(), out, z.indices(), alphabet))
        .collect()
}

fn side_accepts(q: Quantifier, acc: &[bool]) -> bool {
    match q {
        Quantifier::Forall => acc.iter().all(|&x| x),
        Quantifier::Exists => acc.iter().any(|&x| x),
    }
}

impl AutomatedTeacher {
    pub fn target(&self) -> &Nfh {
        &self.target
    }

    /// A shortest s-tuple zip image on which the two sides disagree, for
    /// the smallest `s` that has one.
    fn restricted_search(&self, candidate: &Nfh) -> Result<Option<Option<Counterexample>>> {
        let (kc, kt) = (candidate.k(), self.target.k());
        let sigma = self.target.sigma();
        for s in 1..=kc.max(kt) {
            if s.checked_pow(kc as u32).is_none_or(|n| n > MAX_MAPS)
                || s.checked_pow(kt as u32).is_none_or(|n| n > MAX_MAPS)
            {
                return Ok(None);
            }
            self.config.limits.check_k(s, "the teacher's restriction")?;
            let out = LetterCodec::new(sigma.len(), s);
            let alphabet: alloc::sync::Arc<[Letter]> = out.alphabet().into();
            let rc = restriction(candidate, s, out, &alphabet);
            let rt = restriction(&self.target, s, out, &alphabet);
            let (qc, qt) = (candidate.prefix()[0], self.target.prefix()[0]);
            let n = rc.len();
            let refs: Vec<&Fa<Letter>> = rc.iter().chain(rt.iter()).collect();
            let filter = ZipImageFilter::new(out);
            let found = joint_search(
                &refs,
                |acc| side_accepts(qc, &acc[..n]) != side_accepts(qt, &acc[n..]),
                0u64,
                |&m, l| filter.step(m, l),
            );
            if let Some(ids) = found {
                let letters = ids.iter().map(|&i| out.decode(i)).collect();
                let w = ZipWord::new(s, letters)?;
                let hw = Hyperword::new(unzip(&w)?)?;
                let polarity = if member(&self.target, &hw)? {
                    Polarity::InTarget
                } else {
                    Polarity::InCandidate
                };
                return Ok(Some(Some(Counterexample {
                    hyperword: hw,
                    polarity,
                })));
            }
        }
        Ok(Some(None))
    }

    /// General equivalence followed by greedy removal of words while the
    /// hyperword still separates.
    fn shrinking_search(&self, candidate: &Nfh) -> Result<Option<Counterexample>> {
        let Some(sep) = equivalent_with(candidate, &self.target, &self.config.limits)? else {
            return Ok(None);
        };
        let in_target = sep.accepted_by == Side::Right;
        let separates = |h: &Hyperword| -> Result<bool> {
            Ok(member(&self.target, h)? == in_target && member(candidate, h)? != in_target)
        };
        let mut cur = sep.hyperword;
        let mut i = 0;
        while i < cur.len() && cur.len() > 1 {
            let mut ws = cur.words().to_vec();
            ws.remove(i);
            let smaller = Hyperword::new(ws)?;
            if separates(&smaller)? {
                cur = smaller;
                i = 0;
            } else {
                i += 1;
            }
        }
        Ok(Some(Counterexample {
            hyperword: cur,
            polarity: if in_target {
                Polarity::InTarget
            } else {
                Polarity::InCandidate
            },
        }))
    }
}

impl Teacher for AutomatedTeacher {
    fn sigma(&self) -> &Sigma {
        self.target.sigma()
    }

    fn member(&mut self, s: &Hyperword) -> Result<bool> {
        self.member_queries += 1;
        if let Some(&v) = self.memo.get(s) {
            return Ok(v);
        }
        let v = member(&self.target, s)?;
        self.memo.insert(s.clone(), v);
        Ok(v)
    }

    fn equivalent(&mut self, candidate: &Nfh) -> Result<Option<Counterexample>> {
        self.equivalence_queries += 1;
        self.target.check_sigma(candidate)?;
        if !matches!(candidate.fragment(), Fragment::ForallOnly | Fragment::ExistsOnly) {
            return Err(Error::WrongFragment(format!(
                "candidates must be alternation-free, got {}",
                candidate.prefix_string()
            )));
        }
        match self.restricted_search(candidate)? {
            Some(answer) => Ok(answer),
            None => self.shrinking_search(candidate),
        }
    }
}
