use nfh_core::hfa::{
    complement, contains, equivalent, gen_hamiltonian, intersect, member, nonempty, regular_member, union, Graph,
    Side,
};
use nfh_core::hre::{compile, parse};
use nfh_core::{Error, Fragment, Hyperword, Quantifier};
use nfh_testkit as tk;
use proptest::prelude::*;

use Quantifier::{Exists as E, Forall as A};

fn ab() -> nfh_core::Sigma {
    tk::sigma(&["a", "b"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn member_matches_brute_force(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let k = 1 + (seed % 2) as usize;
        let prefix = tk::random_prefix(&mut r, k);
        let a = tk::random_nfh(&mut r, &s, &prefix, 3, 0.2);
        for _ in 0..40 {
            let h = tk::random_hyperword(&mut r, &s, 3, 3);
            prop_assert_eq!(member(&a, &h).unwrap(), tk::brute_member(&a, &h));
        }
    }

    #[test]
    fn boolean_closure_is_exact(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let p1 = tk::random_prefix(&mut r, 1 + (seed % 2) as usize);
        let p2 = tk::random_prefix(&mut r, 1);
        let a1 = tk::random_nfh(&mut r, &s, &p1, 3, 0.2);
        let a2 = tk::random_nfh(&mut r, &s, &p2, 2, 0.3);
        let c = complement(&a1).unwrap();
        let u = union(&a1, &a2).unwrap();
        let i = intersect(&a1, &a2, None).unwrap();
        for h in tk::sweep(&s, 2, 2) {
            let (x, y) = (tk::brute_member(&a1, &h), tk::brute_member(&a2, &h));
            prop_assert_eq!(member(&c, &h).unwrap(), !x);
            prop_assert_eq!(member(&u, &h).unwrap(), x || y);
            prop_assert_eq!(member(&i, &h).unwrap(), x && y);
        }
    }

    #[test]
    fn nonemptiness_matches_bounded_search(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let (prefix, size, len): (Vec<Quantifier>, usize, usize) = match seed % 3 {
            0 => (vec![E, E], 2, 6),
            1 => (vec![A, A], 1, 3),
            _ => (vec![E, A], 1, 3),
        };
        let a = tk::random_nfh(&mut r, &s, &prefix, 3, 0.15);
        let brute = tk::bounded_nonempty(&a, size, len);
        let got = nonempty(&a).unwrap();
        prop_assert_eq!(got.is_some(), brute.is_some());
        if let Some(w) = got {
            prop_assert!(tk::brute_member(&a, &w));
        }
    }

    #[test]
    fn regular_membership_matches_member(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let prefix = tk::random_prefix(&mut r, 1 + (seed % 2) as usize);
        let a = tk::random_nfh(&mut r, &s, &prefix, 3, 0.2);
        let h = tk::random_hyperword(&mut r, &s, 3, 3);
        let lang = tk::finite_language_nfa(&mut r, &s, h.words());
        prop_assert_eq!(regular_member(&lang, &a).unwrap(), tk::brute_member(&a, &h));
    }

    #[test]
    fn compiled_regex_matches_reference(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let k = 1 + (seed % 2) as usize;
        let body = tk::random_regex(&mut r, &s, k, 3);
        let text = format!("{}{}", if k == 1 { "forall x. " } else { "forall x1. exists x2. " }, body);
        let hre = parse(&text).unwrap();
        prop_assert_eq!(&hre.body, &body);
        prop_assert_eq!(hre.to_string(), text);
        let a = compile(&hre, &s).unwrap();
        let len = if k == 1 { 4 } else { 3 };
        for w in tk::all_tuple_words(&s, k, len) {
            let zw = nfh_core::zip::ZipWord::new(k, w.clone()).unwrap();
            prop_assert_eq!(a.accepts_zip(&zw).unwrap(), tk::regex_matches(&body, &s, &w));
        }
    }

    #[test]
    fn containment_witnesses_separate(seed in any::<u64>()) {
        let mut r = tk::rng(seed);
        let s = ab();
        let q = if seed % 2 == 0 { E } else { A };
        let a1 = tk::random_nfh(&mut r, &s, &[q], 2, 0.3);
        let a2 = tk::random_nfh(&mut r, &s, &[q, q], 2, 0.3);
        let sweep = tk::sweep(&s, 2, 2);
        let separated = sweep.iter().any(|h| tk::brute_member(&a1, h) && !tk::brute_member(&a2, h));
        match contains(&a1, &a2).unwrap() {
            Some(w) => prop_assert!(tk::brute_member(&a1, &w) && !tk::brute_member(&a2, &w)),
            None => prop_assert!(!separated),
        }
        if let Some(sep) = equivalent(&a1, &a2).unwrap() {
            let (x, y) = (tk::brute_member(&a1, &sep.hyperword), tk::brute_member(&a2, &sep.hyperword));
            prop_assert_eq!(x != y, true);
            prop_assert_eq!(sep.accepted_by == Side::Left, x);
        }
    }
}

#[test]
fn quantifier_monotonicity_on_sweep() {
    let s = ab();
    let mut r = tk::rng(7);
    let sweep = tk::sweep(&s, 3, 2);
    for q in [E, A] {
        for _ in 0..5 {
            let a = tk::random_nfh(&mut r, &s, &[q, q], 3, 0.2);
            for big in &sweep {
                for small in &sweep {
                    if !small.words().iter().all(|w| big.words().contains(w)) {
                        continue;
                    }
                    let (ms, mb) = (member(&a, small).unwrap(), member(&a, big).unwrap());
                    match q {
                        E => assert!(!ms || mb),
                        A => assert!(!mb || ms),
                    }
                }
            }
        }
    }
}

#[test]
fn hamiltonian_small_graphs() {
    for n in 2..=4 {
        for edges in tk::connected_graphs(n) {
            let (a, h) = gen_hamiltonian(&Graph::new(n, edges.clone()).unwrap()).unwrap();
            assert_eq!(a.fragment(), Fragment::ExistsOnly);
            assert_eq!(member(&a, &h).unwrap(), tk::brute_hamiltonian(n, &edges), "{edges:?}");
        }
    }
}

#[test]
fn unsupported_and_limits() {
    let s = ab();
    let mut r = tk::rng(1);
    let ae = tk::random_nfh(&mut r, &s, &[A, E], 2, 0.3);
    assert!(matches!(nonempty(&ae), Err(Error::WrongFragment(_))));
    assert!(matches!(contains(&ae, &ae), Err(Error::Unsupported(_))));
    let big = tk::random_nfh(&mut r, &s, &[E; 5], 1, 0.0);
    assert!(matches!(complement(&big), Err(Error::ResourceLimit(_))));
    let h = Hyperword::parse_words(&s, ["ab"]).unwrap();
    assert!(!member(&big, &h).unwrap());
}
