use std::collections::BTreeSet;

use nfh_core::fa::Fa;
use proptest::prelude::*;

const LETTERS: [char; 3] = ['a', 'b', 'c'];

/// `(states, accepting mask, transitions)` for a random NFA over `a,b,c`.
fn nfa(max_states: usize) -> impl Strategy<Value = Fa<char>> {
    (1..=max_states).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec((0..n, 0..3usize, 0..n), 0..=3 * n),
        )
            .prop_map(move |(acc, trans)| {
                let mut f = Fa::new(LETTERS.to_vec());
                for &a in &acc {
                    f.add_state(a);
                }
                f.set_initial(0);
                for (q, l, t) in trans {
                    f.add_transition(q, &LETTERS[l], t).unwrap();
                }
                f
            })
    })
}

fn words(max_len: usize) -> Vec<Vec<char>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<char>> = layer
            .iter()
            .flat_map(|w: &Vec<char>| {
                LETTERS.iter().map(move |&c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Direct subset simulation, independent of the library's own.
fn sim(f: &Fa<char>, w: &[char]) -> bool {
    let mut cur: BTreeSet<usize> = f.initial().iter().copied().collect();
    for c in w {
        let id = f.letter_id(c).unwrap();
        cur = cur
            .iter()
            .flat_map(|&q| f.transitions(q).iter().filter(|t| t.0 == id).map(|t| t.1))
            .collect();
    }
    cur.iter().any(|&q| f.is_accepting(q))
}

proptest! {
    #[test]
    fn boolean_operations_match_simulation(a in nfa(4), b in nfa(3)) {
        let c = a.complement();
        prop_assert!(c.is_deterministic() && c.is_complete());
        let i = a.product_intersect(&b).unwrap();
        let u = a.product_union(&b).unwrap();
        let d = a.determinize();
        let m = a.minimize();
        let t = a.trim();
        for w in words(4) {
            let (x, y) = (sim(&a, &w), sim(&b, &w));
            prop_assert_eq!(sim(&c, &w), !x);
            prop_assert_eq!(sim(&i, &w), x && y);
            prop_assert_eq!(sim(&u, &w), x || y);
            prop_assert_eq!(sim(&d, &w), x);
            prop_assert_eq!(sim(&m, &w), x);
            prop_assert_eq!(sim(&t, &w), x);
            prop_assert_eq!(a.accepts(&w).unwrap(), x);
        }
        prop_assert!(m.num_states() <= d.num_states());
    }

    #[test]
    fn emptiness_witness_is_shortest_and_least(a in nfa(4)) {
        let first = words(4).into_iter().find(|w| sim(&a, w));
        match a.is_empty() {
            Some(w) => {
                prop_assert!(sim(&a, &w));
                if let Some(f) = first {
                    prop_assert_eq!(w, f);
                }
            }
            None => prop_assert!(first.is_none()),
        }
    }

    #[test]
    fn containment_matches_enumeration(a in nfa(3), b in nfa(3)) {
        let bound = a.num_states() * (1 << b.num_states());
        let sep = words(bound.min(6)).into_iter().find(|w| sim(&a, w) && !sim(&b, w));
        match a.contains(&b).unwrap() {
            None => prop_assert!(sep.is_none()),
            Some(w) => {
                prop_assert!(sim(&a, &w) && !sim(&b, &w));
                if let Some(s) = sep {
                    prop_assert!(w.len() <= s.len());
                }
            }
        }
    }

    #[test]
    fn minimal_dfa_is_minimal(a in nfa(4)) {
        let m = a.minimize();
        // Distinct states of a minimal complete DFA have distinct residuals.
        let ws = words(4);
        let run = |q: usize, w: &[char]| {
            let mut s = q;
            for c in w {
                s = m.successors(s, m.letter_id(c).unwrap()).next().unwrap();
            }
            m.is_accepting(s)
        };
        for p in 0..m.num_states() {
            for q in p + 1..m.num_states() {
                prop_assert!(ws.iter().any(|w| run(p, w) != run(q, w)));
            }
        }
    }
}

#[test]
fn letter_remap_examples() {
    let mut f = Fa::new(vec![('a', 'b'), ('b', 'a'), ('a', 'a'), ('b', 'b')]);
    let q0 = f.add_state(false);
    let q1 = f.add_state(true);
    f.set_initial(q0);
    f.add_transition(q0, &('a', 'b'), q1).unwrap();
    let swapped = f.remap_letters(f.alphabet().to_vec(), |&(x, y)| vec![(y, x)]);
    assert!(swapped.accepts(&[('b', 'a')]).unwrap());
    assert!(!swapped.accepts(&[('a', 'b')]).unwrap());
}
