use nfh_core::canon::{canonical_equal, check_complete, permutation_closure, sequence_closure};
use nfh_core::hfa::{equivalent, member, Side};
use nfh_core::hre::{compile, parse};
use nfh_core::learn::{
    automated_teacher, learn, ObservationTable, Polarity, LearnerConfig, Teacher,
};
use nfh_core::zip::{apply_sequence, lift, Letter, ZipWord};
use nfh_core::{Error, Fragment, Hyperword, Nfh, Quantifier};
use nfh_testkit as tk;
use proptest::prelude::*;

use Quantifier::{Exists as E, Forall as A};

fn ab() -> nfh_core::Sigma {
    tk::sigma(&["a", "b"])
}

fn closure(a: &Nfh) -> Nfh {
    match a.fragment() {
        Fragment::ForallOnly => sequence_closure(a).unwrap(),
        _ => permutation_closure(a).unwrap(),
    }
}

/// The same NFH with its two variables swapped.
fn swapped(a: &Nfh) -> Nfh {
    let fa = a.underlying();
    let sw = fa.remap_letters(fa.alphabet().to_vec(), |l: &Letter| {
        vec![Letter::new(vec![l.get(1), l.get(0)])]
    });
    Nfh::new(a.sigma().clone(), a.prefix().to_vec(), sw).unwrap()
}

fn zw(t: &str, k: usize) -> ZipWord {
    ZipWord::parse(&ab(), k, t).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn closures_are_sound_and_complete(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let q = if seed % 2 == 0 { E } else { A };
        let a = tk::random_nfh(&mut r, &s, &[q, q], 3, 0.2);
        let c = closure(&a);
        prop_assert!(check_complete(&c).unwrap().complete);
        for h in tk::sweep(&s, 3, 2) {
            prop_assert_eq!(member(&c, &h).unwrap(), tk::brute_member(&a, &h));
        }
        let cc = closure(&c);
        for w in tk::all_tuple_words(&s, 2, 3) {
            let w = ZipWord::new(2, w).unwrap();
            if w.is_zip_image() {
                prop_assert_eq!(cc.accepts_zip(&w).unwrap(), c.accepts_zip(&w).unwrap());
            }
        }
    }

    #[test]
    fn incompleteness_witnesses_recheck(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let q = if seed % 2 == 0 { E } else { A };
        let a = tk::random_nfh(&mut r, &ab(), &[q, q], 3, 0.2);
        let rep = check_complete(&a).unwrap();
        prop_assert_eq!(rep.complete, rep.counterexample.is_none());
        if let Some((w, z)) = rep.counterexample {
            let wz = apply_sequence(&w, &z).unwrap();
            let (x, y) = (a.accepts_zip(&w).unwrap(), a.accepts_zip(&wz).unwrap());
            match q {
                A => prop_assert!(x && !y),
                E => prop_assert!(!x && y),
            }
        }
    }

    #[test]
    fn canonical_equality_matches_semantics(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let q = if seed % 2 == 0 { E } else { A };
        let a = tk::random_nfh(&mut r, &s, &[q, q], 2, 0.25);
        let b = if seed % 3 == 0 { swapped(&a) } else { tk::random_nfh(&mut r, &s, &[q, q], 2, 0.25) };
        let (ca, cb) = (closure(&a), closure(&b));
        let eq = canonical_equal(&ca, &cb).unwrap();
        let sweep_agrees = tk::sweep(&s, 3, 2).iter().all(|h| tk::brute_member(&a, h) == tk::brute_member(&b, h));
        if eq {
            prop_assert!(sweep_agrees);
        }
        match equivalent(&a, &b).unwrap() {
            None => prop_assert!(eq),
            Some(sep) => {
                prop_assert!(!eq);
                prop_assert_eq!(tk::brute_member(&a, &sep.hyperword), sep.accepted_by == Side::Left);
                prop_assert_ne!(tk::brute_member(&a, &sep.hyperword), tk::brute_member(&b, &sep.hyperword));
            }
        }
        if seed % 3 == 0 {
            prop_assert!(eq);
        }
    }

    #[test]
    fn learner_recovers_random_targets(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let q = if seed % 2 == 0 { E } else { A };
        let k = 1 + (seed / 2 % 2) as usize;
        let target = tk::random_nfh(&mut r, &s, &vec![q; k], 3, 0.2);
        let cfg = LearnerConfig::default();
        let mut t = automated_teacher(&target, &cfg).unwrap();
        let frag = if q == E { Fragment::ExistsOnly } else { Fragment::ForallOnly };
        let out = learn(&mut t, frag, &cfg).unwrap();
        prop_assert!(check_complete(&out).unwrap().complete);
        prop_assert!(out.k() <= k);
        prop_assert!(equivalent(&out, &target).unwrap().is_none());
        if out.k() == k {
            prop_assert!(canonical_equal(&out, &closure(&target)).unwrap());
        }
    }

    #[test]
    fn table_entries_match_direct_queries(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let target = tk::random_nfh(&mut r, &s, &[A, A], 3, 0.2);
        let mut t = automated_teacher(&target, &LearnerConfig::default()).unwrap();
        let mut table = ObservationTable::new(&s, 1).unwrap();
        table.close_and_consist(&mut t, 1 << 20).unwrap();
        table.add_columns([zw("(a,b)(b,a)", 2)].into_iter().filter(|w| w.arity() == 1)).unwrap();
        let mut table = table.lift_table(2).unwrap();
        table.add_columns([zw("(a,b)(b,#)", 2)]).unwrap();
        table.close_and_consist(&mut t, 1 << 20).unwrap();
        prop_assert!(table.is_closed() && table.is_consistent());
        for d in table.rows() {
            prop_assert!((0..=d.len()).all(|i| table.rows().contains(&d.prefix(i))));
        }
        for e in table.cols() {
            prop_assert!(e.suffixes().all(|x| table.cols().contains(&x)));
        }
        let mut n = 0;
        for d in table.rows().iter().chain(table.boundary().iter()) {
            for e in table.cols() {
                n += 1;
                if n % 10 != 0 {
                    continue;
                }
                let w = d.concat(e).unwrap();
                prop_assert_eq!(table.entry(&w), Some(ObservationTable::query(&mut t, &w).unwrap()));
            }
        }
    }
}

const A3: &str = "forall x1. forall x2. ([a,a]|[a,b]|[b,b]|[a,#]|[b,#]|[#,b])*|([a,a]|[b,a]|[b,b]|[#,a]|[#,b]|[b,#])*";

fn hw(words: &[&str]) -> Hyperword {
    Hyperword::parse_words(&ab(), words.iter().copied()).unwrap()
}

#[test]
fn a3_tables_after_lift() {
    let s = ab();
    let target = compile(&parse(A3).unwrap(), &s).unwrap();
    let mut t = automated_teacher(&target, &LearnerConfig::default()).unwrap();
    let mut t0 = ObservationTable::new(&s, 1).unwrap();
    t0.close_and_consist(&mut t, 1 << 20).unwrap();
    assert_eq!(t0.rows(), [ZipWord::empty(1)]);
    let cand = t0.build_candidate(Fragment::ForallOnly).unwrap();
    assert_eq!(cand.underlying().num_states(), 1);
    assert_eq!(cand.underlying().accepting_states().count(), 1);
    for h in tk::sweep(&s, 1, 3) {
        assert!(member(&cand, &h).unwrap());
    }
    let cex = t.equivalent(&cand).unwrap().unwrap();
    assert_eq!(cex.hyperword.len(), 2);
    assert_eq!(cex.polarity, Polarity::InCandidate);

    let mut t1 = t0.lift_table(2).unwrap();
    assert_eq!(t1.rows(), [ZipWord::empty(2)]);
    assert_eq!(t1.cols(), [ZipWord::empty(2)]);
    assert_eq!(t1.boundary().len(), 9);
    assert_eq!(t1.entry(&ZipWord::empty(2)), t0.entry(&ZipWord::empty(1)));
    t1.add_columns([zw("(a,b)", 2)]).unwrap();
    t1.fill(&mut t, 1 << 20).unwrap();
    assert_eq!(t1.entry(&zw("(b,a)(a,b)", 2)), Some(false));
    assert!(!member(&target, &hw(&["ba", "ab"])).unwrap());
    assert_eq!(lift(&zw("(a)(b)", 1), 2).unwrap(), zw("(a,a)(b,b)", 2));
}

#[test]
fn trivial_candidates() {
    let s = ab();
    for (text, all) in [("exists x. ([a]|[b])*", true), ("exists x. empty", false)] {
        let target = compile(&parse(text).unwrap(), &s).unwrap();
        let mut t = automated_teacher(&target, &LearnerConfig::default()).unwrap();
        let mut table = ObservationTable::new(&s, 1).unwrap();
        table.close_and_consist(&mut t, 1 << 20).unwrap();
        let c = table.build_candidate(Fragment::ExistsOnly).unwrap();
        assert_eq!(c.underlying().num_states(), 1);
        for h in tk::sweep(&s, 2, 2) {
            assert_eq!(member(&c, &h).unwrap(), all);
        }
        assert!(t.equivalent(&c).unwrap().is_none());
    }
}

#[test]
fn teacher_counterexamples() {
    let s = ab();
    let target = compile(&parse("forall x. [a]*").unwrap(), &s).unwrap();
    let universal = compile(&parse("forall x. ([a]|[b])*").unwrap(), &s).unwrap();
    let mut t = automated_teacher(&target, &LearnerConfig::default()).unwrap();
    let cex = t.equivalent(&universal).unwrap().unwrap();
    assert_eq!(cex.hyperword, hw(&["b"]));
    assert_eq!(cex.polarity, Polarity::InCandidate);
    assert!(t.equivalent(&target).unwrap().is_none());
    let brute = tk::sweep(&s, 1, 1)
        .into_iter()
        .find(|h| tk::brute_member(&universal, h) != tk::brute_member(&target, h));
    assert_eq!(brute, Some(hw(&["b"])));
}

/// A teacher whose equivalence answers contradict its membership answers.
struct Liar(nfh_core::Sigma);

impl Teacher for Liar {
    fn sigma(&self) -> &nfh_core::Sigma {
        &self.0
    }
    fn member(&mut self, _: &Hyperword) -> nfh_core::Result<bool> {
        Ok(true)
    }
    fn equivalent(&mut self, _: &Nfh) -> nfh_core::Result<Option<nfh_core::learn::Counterexample>> {
        Ok(Some(nfh_core::learn::Counterexample {
            hyperword: Hyperword::parse_words(&self.0, ["a"]).unwrap(),
            polarity: Polarity::InTarget,
        }))
    }
}

#[test]
fn inconsistent_teacher_is_reported() {
    let r = learn(&mut Liar(ab()), Fragment::ForallOnly, &LearnerConfig::default());
    assert!(matches!(r, Err(Error::TeacherInconsistent(_))));
    let target = compile(&parse(A3).unwrap(), &ab()).unwrap();
    let cfg = LearnerConfig {
        max_k: 1,
        ..LearnerConfig::default()
    };
    let mut t = automated_teacher(&target, &cfg).unwrap();
    assert!(matches!(learn(&mut t, Fragment::ForallOnly, &cfg), Err(Error::BudgetExceeded(_))));
}
