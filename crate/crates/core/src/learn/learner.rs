use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Counterexample, LearnerConfig, ObservationTable, Polarity, Teacher, TraceEvent};
use crate::canon::check_complete;
use crate::zip::{apply_sequence, zip, IndexSequence};
use crate::{Error, Fragment, Nfh, Result};

/// [`learn_traced`] without a trace.
pub fn learn<T: Teacher + ?Sized>(teacher: &mut T, fragment: Fragment, config: &LearnerConfig) -> Result<Nfh> {
    learn_traced(teacher, fragment, config, &mut |_| {})
}

/// Learns an NFH of the given alternation-free fragment for the teacher's
/// hyperlanguage, reporting each step to `trace`.
///
/// Every round closes the table, builds a candidate, and either repairs an
/// incompleteness of the candidate or asks for equivalence. A
/// counterexample with more words than `k` raises `k` to its size and lifts
/// the table; a smaller one contributes a word ordering the candidate
/// misclassifies. The result is complete and its underlying automaton is
/// minimal deterministic.
pub fn learn_traced<T: Teacher + ?Sized>(
    teacher: &mut T,
    fragment: Fragment,
    config: &LearnerConfig,
    trace: &mut dyn FnMut(&TraceEvent),
) -> Result<Nfh> {
    config.validate()?;
    if !matches!(fragment, Fragment::ForallOnly | Fragment::ExistsOnly) {
        return Err(Error::WrongFragment(String::from(
            "only all-∀ and all-∃ NFH can be learned",
        )));
    }
    let forall = fragment == Fragment::ForallOnly;
    let sigma = teacher.sigma().clone();
    let mut table = ObservationTable::new(&sigma, 1)?;
    let mut measure = 0usize;
    for iteration in 0..config.max_iterations {
        let now = table.rows().len() + table.cols().len() + table.k();
        if iteration > 0 {
            assert!(now > measure, "learner made no progress");
        }
        measure = now;
        let mut emit = |event: &'static str, k: usize, detail: String| {
            trace(&TraceEvent {
                event,
                iteration,
                k,
                detail,
            })
        };

        table.close_and_consist(teacher, config.max_queries)?;
        let k = table.k();
        emit("query", k, format!("{} membership queries", table.queries()));
        let cand = table.build_candidate(fragment)?;
        emit("candidate", k, format!("{} states", cand.underlying().num_states()));

        let report = check_complete(&cand)?;
        if let Some((w, z)) = report.counterexample {
            let wz = apply_sequence(&w, &z)?;
            emit(
                "incomplete",
                k,
                format!("{} with {}", w.display(&sigma), z),
            );
            if table.add_columns([w, wz])? == 0 {
                return Err(Error::TeacherInconsistent(String::from(
                    "incompleteness witness already in the table",
                )));
            }
            continue;
        }

        let Some(Counterexample {
            hyperword: s,
            polarity,
        }) = teacher.equivalent(&cand)?
        else {
            let out = cand.with_underlying(cand.underlying().minimize());
            emit("done", k, format!("{} states", out.underlying().num_states()));
            return Ok(out);
        };
        emit(
            "counterexample",
            k,
            format!("{} {:?}", s.display(&sigma), polarity),
        );
        if let Some(w) = s.words().iter().find(|w| w.len() > config.max_word_length) {
            return Err(Error::BudgetExceeded(format!(
                "counterexample word of length {} exceeds {}",
                w.len(),
                config.max_word_length
            )));
        }

        if s.len() > k {
            let expected = if forall {
                Polarity::InCandidate
            } else {
                Polarity::InTarget
            };
            if polarity != expected {
                return Err(Error::TeacherInconsistent(format!(
                    "a counterexample of {} words against {k} variables must be {expected:?}",
                    s.len()
                )));
            }
            if s.len() > config.max_k {
                return Err(Error::BudgetExceeded(format!(
                    "{} variables needed, cap is {}",
                    s.len(),
                    config.max_k
                )));
            }
            table = table.lift_table(s.len())?;
            emit("lift", s.len(), format!("{k} -> {}", s.len()));
            table.add_columns([zip(s.words())])?;
            continue;
        }

        let want = polarity == Polarity::InTarget;
        let words = s.words();
        let mut chosen = None;
        for z in IndexSequence::all_maps(k, words.len()) {
            let mut hit = alloc::vec![false; words.len()];
            for &i in z.indices() {
                hit[i] = true;
            }
            if !hit.iter().all(|&h| h) {
                continue;
            }
            let p: Vec<_> = z.indices().iter().map(|&i| words[i].clone()).collect();
            let w = zip(&p);
            if cand.accepts_zip(&w)? != want {
                chosen = Some(w);
                break;
            }
        }
        let Some(w) = chosen else {
            return Err(Error::TeacherInconsistent(format!(
                "no ordering of {} is misclassified by the candidate",
                s.display(&sigma)
            )));
        };
        if table.add_columns([w])? == 0 {
            return Err(Error::TeacherInconsistent(String::from(
                "counterexample ordering already in the table",
            )));
        }
    }
    Err(Error::BudgetExceeded(format!(
        "{} iterations",
        config.max_iterations
    )))
}
