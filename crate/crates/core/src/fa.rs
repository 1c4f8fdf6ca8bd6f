//! Nondeterministic finite automata over an explicit finite alphabet.
//!
//! Letters live in a sorted alphabet and transitions refer to them by
//! position, so iteration order is the canonical letter order everywhere.
//! Every search is breadth-first with letters tried in that order, which
//! makes witnesses shortest and, among the shortest, lexicographically least.

use alloc::collections::btree_map::Entry;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::{Error, Result};

pub type StateId = usize;

/// An NFA `⟨Σ, Q, Q₀, δ, F⟩` without ε-transitions.
#[derive(Clone, Debug)]
pub struct Fa<L> {
    alphabet: Arc<[L]>,
    initial: Vec<StateId>,
    accepting: Vec<bool>,
    trans: Vec<Vec<(usize, StateId)>>,
}

impl<L: Ord + Clone> Fa<L> {
    /// An automaton with no states over the given alphabet.
    pub fn new(alphabet: Vec<L>) -> Fa<L> {
        let mut alphabet = alphabet;
        alphabet.sort();
        alphabet.dedup();
        Fa::with_alphabet(alphabet.into())
    }

    pub(crate) fn with_alphabet(alphabet: Arc<[L]>) -> Fa<L> {
        Fa {
            alphabet,
            initial: Vec::new(),
            accepting: Vec::new(),
            trans: Vec::new(),
        }
    }

    /// One state, initial, not accepting: the empty language.
    pub fn empty(alphabet: Vec<L>) -> Fa<L> {
        let mut a = Fa::new(alphabet);
        let q = a.add_state(false);
        a.set_initial(q);
        a
    }

    /// One accepting state with a self-loop on every letter.
    pub fn universal(alphabet: Vec<L>) -> Fa<L> {
        let mut a = Fa::new(alphabet);
        let q = a.add_state(true);
        a.set_initial(q);
        for l in 0..a.alphabet.len() {
            a.add_transition_id(q, l, q);
        }
        a
    }

    pub fn add_state(&mut self, accepting: bool) -> StateId {
        self.accepting.push(accepting);
        self.trans.push(Vec::new());
        self.accepting.len() - 1
    }

    pub fn set_initial(&mut self, q: StateId) {
        assert!(q < self.num_states());
        if let Err(pos) = self.initial.binary_search(&q) {
            self.initial.insert(pos, q);
        }
    }

    pub fn set_accepting(&mut self, q: StateId, accepting: bool) {
        self.accepting[q] = accepting;
    }

    pub fn add_transition(&mut self, from: StateId, letter: &L, to: StateId) -> Result<()> {
        let id = self
            .letter_id(letter)
            .ok_or_else(|| Error::UnknownLetter(format!("transition {from} -> {to}")))?;
        self.add_transition_id(from, id, to);
        Ok(())
    }

    /// Adds `from --alphabet[letter]--> to`.
    pub fn add_transition_id(&mut self, from: StateId, letter: usize, to: StateId) {
        assert!(from < self.num_states() && to < self.num_states());
        assert!(letter < self.alphabet.len());
        let row = &mut self.trans[from];
        if let Err(pos) = row.binary_search(&(letter, to)) {
            row.insert(pos, (letter, to));
        }
    }

    pub fn alphabet(&self) -> &[L] {
        &self.alphabet
    }

    pub(crate) fn alphabet_arc(&self) -> &Arc<[L]> {
        &self.alphabet
    }

    pub fn letter_id(&self, l: &L) -> Option<usize> {
        self.alphabet.binary_search(l).ok()
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.trans.iter().map(Vec::len).sum()
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.num_states()).filter(|&q| self.accepting[q])
    }

    /// Outgoing transitions `(letter id, target)` sorted by letter.
    pub fn transitions(&self, q: StateId) -> &[(usize, StateId)] {
        &self.trans[q]
    }

    pub fn successors(&self, q: StateId, letter: usize) -> impl Iterator<Item = StateId> + '_ {
        let row = &self.trans[q];
        let start = row.partition_point(|&(l, _)| l < letter);
        row[start..]
            .iter()
            .take_while(move |&&(l, _)| l == letter)
            .map(|&(_, t)| t)
    }

    /// Successor set of a sorted state set.
    pub fn step_set(&self, set: &[StateId], letter: usize) -> Vec<StateId> {
        let mut out: Vec<StateId> = Vec::new();
        for &q in set {
            out.extend(self.successors(q, letter));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn accepts_set(&self, set: &[StateId]) -> bool {
        set.iter().any(|&q| self.accepting[q])
    }

    pub fn accepts(&self, word: &[L]) -> Result<bool> {
        let ids = word
            .iter()
            .map(|l| {
                self.letter_id(l)
                    .ok_or_else(|| Error::UnknownLetter(String::from("input letter")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.accepts_ids(&ids))
    }

    pub fn accepts_ids(&self, word: &[usize]) -> bool {
        let mut cur = self.initial.clone();
        for &l in word {
            if cur.is_empty() {
                return false;
            }
            cur = self.step_set(&cur, l);
        }
        self.accepts_set(&cur)
    }

    pub fn is_deterministic(&self) -> bool {
        self.initial.len() <= 1
            && self
                .trans
                .iter()
                .all(|row| row.windows(2).all(|w| w[0].0 != w[1].0))
    }

    pub fn is_complete(&self) -> bool {
        !self.initial.is_empty()
            && self.trans.iter().all(|row| {
                let mut letters: Vec<usize> = row.iter().map(|&(l, _)| l).collect();
                letters.dedup();
                letters.len() == self.alphabet.len()
            })
    }

    fn word_of(&self, ids: Vec<usize>) -> Vec<L> {
        ids.into_iter().map(|i| self.alphabet[i].clone()).collect()
    }

    /// A shortest accepted word, or `None` when the language is empty.
    pub fn is_empty(&self) -> Option<Vec<L>> {
        self.reach_with((), |_, _| Some(())).map(|w| self.word_of(w))
    }

    /// A shortest accepted word among those whose consecutive letters all
    /// satisfy `step_ok(previous, next)`; the first letter is checked with
    /// `previous = None`.
    pub fn filtered_reach(&self, step_ok: impl Fn(Option<&L>, &L) -> bool) -> Option<Vec<L>> {
        let alpha = &self.alphabet;
        self.reach_with(None::<usize>, |prev, l| {
            step_ok(prev.map(|p| &alpha[p]), &alpha[l]).then_some(Some(l))
        })
        .map(|w| self.word_of(w))
    }

    /// Breadth-first search over `state × filter state`. `step` advances the
    /// filter or rejects the letter.
    pub fn reach_with<S: Ord + Clone>(
        &self,
        init: S,
        step: impl Fn(&S, usize) -> Option<S>,
    ) -> Option<Vec<usize>> {
        let mut index: BTreeMap<(StateId, S), usize> = BTreeMap::new();
        let mut nodes: Vec<(StateId, S, usize, usize)> = Vec::new();
        let mut queue = VecDeque::new();
        for &q in &self.initial {
            if let Entry::Vacant(v) = index.entry((q, init.clone())) {
                v.insert(nodes.len());
                queue.push_back(nodes.len());
                nodes.push((q, init.clone(), usize::MAX, 0));
            }
        }
        while let Some(n) = queue.pop_front() {
            let (q, s) = (nodes[n].0, nodes[n].1.clone());
            if self.accepting[q] {
                return Some(trace_back(&nodes, n, |x| (x.2, x.3)));
            }
            let row = &self.trans[q];
            let mut i = 0;
            while i < row.len() {
                let l = row[i].0;
                let mut j = i;
                while j < row.len() && row[j].0 == l {
                    j += 1;
                }
                if let Some(s2) = step(&s, l) {
                    for &(_, t) in &row[i..j] {
                        if let Entry::Vacant(v) = index.entry((t, s2.clone())) {
                            v.insert(nodes.len());
                            queue.push_back(nodes.len());
                            nodes.push((t, s2.clone(), n, l));
                        }
                    }
                }
                i = j;
            }
        }
        None
    }

    /// Subset construction, completed with a sink; only reachable subsets
    /// are built. State 0 is the initial subset.
    pub fn determinize(&self) -> Fa<L> {
        let n_letters = self.alphabet.len();
        let mut out = Fa::with_alphabet(self.alphabet.clone());
        let mut index: BTreeMap<Vec<StateId>, StateId> = BTreeMap::new();
        let mut sets: Vec<Vec<StateId>> = Vec::new();
        let start = self.initial.clone();
        index.insert(start.clone(), out.add_state(self.accepts_set(&start)));
        sets.push(start);
        let mut i = 0;
        while i < sets.len() {
            let cur = sets[i].clone();
            for l in 0..n_letters {
                let next = self.step_set(&cur, l);
                let t = match index.get(&next) {
                    Some(&t) => t,
                    None => {
                        let t = out.add_state(self.accepts_set(&next));
                        index.insert(next.clone(), t);
                        sets.push(next);
                        t
                    }
                };
                out.trans[i].push((l, t));
            }
            i += 1;
        }
        out.initial = vec![0];
        out
    }

    /// Accepts exactly the words over the alphabet this automaton rejects.
    pub fn complement(&self) -> Fa<L> {
        let mut d = self.determinize();
        for a in d.accepting.iter_mut() {
            *a = !*a;
        }
        d
    }

    fn check_alphabet(&self, other: &Fa<L>) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(String::from(
                "automata are over different alphabets",
            )))
        }
    }

    /// Reachable part of the pair automaton accepting `L(A) ∩ L(B)`.
    pub fn product_intersect(&self, other: &Fa<L>) -> Result<Fa<L>> {
        self.check_alphabet(other)?;
        let mut out = Fa::with_alphabet(self.alphabet.clone());
        let mut index: BTreeMap<(StateId, StateId), StateId> = BTreeMap::new();
        let mut pairs: Vec<(StateId, StateId)> = Vec::new();
        for &p in &self.initial {
            for &q in &other.initial {
                let s = out.add_state(self.accepting[p] && other.accepting[q]);
                index.insert((p, q), s);
                pairs.push((p, q));
                out.initial.push(s);
            }
        }
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for &(l, p2) in &self.trans[p] {
                for q2 in other.successors(q, l) {
                    let t = match index.get(&(p2, q2)) {
                        Some(&t) => t,
                        None => {
                            let t = out.add_state(self.accepting[p2] && other.accepting[q2]);
                            index.insert((p2, q2), t);
                            pairs.push((p2, q2));
                            t
                        }
                    };
                    out.add_transition_id(i, l, t);
                }
            }
            i += 1;
        }
        Ok(out)
    }

    /// Disjoint union accepting `L(A) ∪ L(B)`.
    pub fn product_union(&self, other: &Fa<L>) -> Result<Fa<L>> {
        self.check_alphabet(other)?;
        let mut out = self.clone();
        let off = out.num_states();
        out.accepting.extend_from_slice(&other.accepting);
        for row in &other.trans {
            out.trans.push(row.iter().map(|&(l, t)| (l, t + off)).collect());
        }
        for &q in &other.initial {
            out.set_initial(q + off);
        }
        Ok(out)
    }

    /// `None` iff `L(A) ⊆ L(B)`; otherwise a shortest word of `L(A) \ L(B)`.
    pub fn contains(&self, other: &Fa<L>) -> Result<Option<Vec<L>>> {
        self.check_alphabet(other)?;
        Ok(joint_search(&[self, other], |acc| acc[0] && !acc[1], (), |_, _| Some(()))
            .map(|w| self.word_of(w)))
    }

    /// Inverse-image relabelling: the result has a transition on `m` from
    /// `q` to `q′` iff this automaton has one on some letter of `f(m)`.
    /// Letters of `f(m)` outside the alphabet are ignored.
    pub fn remap_letters<M: Ord + Clone>(
        &self,
        new_alphabet: Vec<M>,
        f: impl Fn(&M) -> Vec<L>,
    ) -> Fa<M> {
        let mut out = Fa::new(new_alphabet);
        let images: Vec<Vec<usize>> = out
            .alphabet
            .iter()
            .map(|m| f(m).iter().filter_map(|l| self.letter_id(l)).collect())
            .collect();
        out.accepting = self.accepting.clone();
        out.trans = vec![Vec::new(); self.num_states()];
        out.initial = self.initial.clone();
        for q in 0..self.num_states() {
            let mut row = Vec::new();
            for (m, img) in images.iter().enumerate() {
                for &l in img {
                    row.extend(self.successors(q, l).map(|t| (m, t)));
                }
            }
            row.sort_unstable();
            row.dedup();
            out.trans[q] = row;
        }
        out
    }

    /// Same-alphabet relabelling by letter ids: a transition on `m` exists
    /// iff one exists on `f(m)`.
    pub(crate) fn remap_ids(&self, f: impl Fn(usize) -> Option<usize>) -> Fa<L> {
        let n = self.alphabet.len();
        let images: Vec<Option<usize>> = (0..n).map(f).collect();
        let mut out = Fa::with_alphabet(self.alphabet.clone());
        out.accepting = self.accepting.clone();
        out.initial = self.initial.clone();
        out.trans = (0..self.num_states())
            .map(|q| {
                let mut row = Vec::new();
                for (m, img) in images.iter().enumerate() {
                    if let Some(l) = *img {
                        row.extend(self.successors(q, l).map(|t| (m, t)));
                    }
                }
                row
            })
            .collect();
        out
    }

    /// Keeps only states that are reachable and can reach acceptance.
    /// Always keeps at least one state so the automaton stays well formed.
    pub fn trim(&self) -> Fa<L> {
        let n = self.num_states();
        let mut fwd = vec![false; n];
        let mut stack: Vec<StateId> = self.initial.clone();
        for &q in &stack {
            fwd[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &(_, t) in &self.trans[q] {
                if !fwd[t] {
                    fwd[t] = true;
                    stack.push(t);
                }
            }
        }
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..n {
            for &(_, t) in &self.trans[q] {
                rev[t].push(q);
            }
        }
        let mut bwd = vec![false; n];
        let mut stack: Vec<StateId> = self.accepting_states().collect();
        for &q in &stack {
            bwd[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &p in &rev[q] {
                if !bwd[p] {
                    bwd[p] = true;
                    stack.push(p);
                }
            }
        }
        let keep: Vec<bool> = (0..n).map(|q| fwd[q] && bwd[q]).collect();
        if !keep.iter().any(|&k| k) {
            return Fa::empty(self.alphabet.to_vec());
        }
        self.restrict(&keep)
    }

    fn restrict(&self, keep: &[bool]) -> Fa<L> {
        let mut new_id = vec![usize::MAX; self.num_states()];
        let mut out = Fa::with_alphabet(self.alphabet.clone());
        for q in 0..self.num_states() {
            if keep[q] {
                new_id[q] = out.add_state(self.accepting[q]);
            }
        }
        for q in 0..self.num_states() {
            if keep[q] {
                out.trans[new_id[q]] = self.trans[q]
                    .iter()
                    .filter(|&&(_, t)| keep[t])
                    .map(|&(l, t)| (l, new_id[t]))
                    .collect();
            }
        }
        out.initial = self
            .initial
            .iter()
            .filter(|&&q| keep[q])
            .map(|&q| new_id[q])
            .collect();
        out
    }

    /// Minimal complete DFA for the same language (Hopcroft's partition
    /// refinement on the subset construction). States are numbered in
    /// breadth-first order from the initial state.
    pub fn minimize(&self) -> Fa<L> {
        let d = if self.is_deterministic() && self.is_complete() {
            self.restrict_reachable()
        } else {
            self.determinize()
        };
        let n = d.num_states();
        let m = d.alphabet.len();
        let delta = |q: StateId, l: usize| d.trans[q][l].1;

        let mut pred: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); n]; m];
        for q in 0..n {
            for l in 0..m {
                pred[l][delta(q, l)].push(q);
            }
        }
        let mut block_of = vec![0usize; n];
        let mut blocks: Vec<Vec<StateId>> = Vec::new();
        let acc: Vec<StateId> = (0..n).filter(|&q| d.accepting[q]).collect();
        let rej: Vec<StateId> = (0..n).filter(|&q| !d.accepting[q]).collect();
        for part in [acc, rej] {
            if !part.is_empty() {
                for &q in &part {
                    block_of[q] = blocks.len();
                }
                blocks.push(part);
            }
        }
        let mut work: BTreeSet<(usize, usize)> = BTreeSet::new();
        let smallest = (0..blocks.len()).min_by_key(|&b| blocks[b].len()).unwrap_or(0);
        if blocks.len() == 2 {
            for l in 0..m {
                work.insert((smallest, l));
            }
        }
        while let Some(&(b, l)) = work.iter().next() {
            work.remove(&(b, l));
            let mut in_x = vec![false; n];
            for &q in &blocks[b] {
                for &p in &pred[l][q] {
                    in_x[p] = true;
                }
            }
            let mut touched: Vec<usize> = (0..n).filter(|&p| in_x[p]).map(|p| block_of[p]).collect();
            touched.sort_unstable();
            touched.dedup();
            for y in touched {
                let (inside, outside): (Vec<StateId>, Vec<StateId>) =
                    blocks[y].iter().partition(|&&q| in_x[q]);
                if outside.is_empty() {
                    continue;
                }
                let new_b = blocks.len();
                let (keep, moved) = if inside.len() <= outside.len() {
                    (outside, inside)
                } else {
                    (inside, outside)
                };
                for &q in &moved {
                    block_of[q] = new_b;
                }
                blocks[y] = keep;
                blocks.push(moved);
                // The moved half is the smaller one, so it always joins the worklist.
                for c in 0..m {
                    work.insert((new_b, c));
                }
            }
        }

        let mut out = Fa::with_alphabet(d.alphabet.clone());
        let mut id_of_block = vec![usize::MAX; blocks.len()];
        let start = block_of[d.initial[0]];
        id_of_block[start] = out.add_state(d.accepting[d.initial[0]]);
        out.initial = vec![0];
        let mut queue = VecDeque::from([start]);
        while let Some(b) = queue.pop_front() {
            let rep = blocks[b][0];
            let src = id_of_block[b];
            for l in 0..m {
                let tb = block_of[delta(rep, l)];
                if id_of_block[tb] == usize::MAX {
                    id_of_block[tb] = out.add_state(d.accepting[blocks[tb][0]]);
                    queue.push_back(tb);
                }
                out.trans[src].push((l, id_of_block[tb]));
            }
        }
        out
    }

    fn restrict_reachable(&self) -> Fa<L> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = self.initial.clone();
        for &q in &stack {
            seen[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &(_, t) in &self.trans[q] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        self.restrict(&seen)
    }

    /// Graphviz rendering. Parallel edges are merged into one labelled edge.
    pub fn to_dot(&self, label: impl Fn(&L) -> String) -> String {
        let mut s = String::from("digraph fa {\n  rankdir=LR;\n  node [shape=circle];\n");
        for q in 0..self.num_states() {
            if self.accepting[q] {
                let _ = writeln!(s, "  q{q} [shape=doublecircle];");
            } else {
                let _ = writeln!(s, "  q{q};");
            }
        }
        for &q in &self.initial {
            let _ = writeln!(s, "  init{q} [shape=point];\n  init{q} -> q{q};");
        }
        for q in 0..self.num_states() {
            let mut by_target: BTreeMap<StateId, Vec<String>> = BTreeMap::new();
            for &(l, t) in &self.trans[q] {
                by_target.entry(t).or_default().push(label(&self.alphabet[l]));
            }
            for (t, labels) in by_target {
                let text = labels.join(" ").replace('\\', "\\\\").replace('"', "\\\"");
                let _ = writeln!(s, "  q{q} -> q{t} [label=\"{text}\"];");
            }
        }
        s.push_str("}\n");
        s
    }
}

fn trace_back<T>(nodes: &[T], mut n: usize, link: impl Fn(&T) -> (usize, usize)) -> Vec<usize> {
    let mut word = Vec::new();
    loop {
        let (parent, letter) = link(&nodes[n]);
        if parent == usize::MAX {
            break;
        }
        word.push(letter);
        n = parent;
    }
    word.reverse();
    word
}

/// Breadth-first search through the joint subset construction of several
/// automata over one alphabet. Returns a shortest word (least in letter
/// order among the shortest) after which `goal` holds of the acceptance
/// vector, restricted to words the filter `step` admits.
pub(crate) fn joint_search<L: Ord + Clone, S: Ord + Clone>(
    fas: &[&Fa<L>],
    goal: impl Fn(&[bool]) -> bool,
    init: S,
    step: impl Fn(&S, usize) -> Option<S>,
) -> Option<Vec<usize>> {
    let n_letters = fas.first().map_or(0, |a| a.alphabet.len());
    debug_assert!(fas.iter().all(|a| a.alphabet.len() == n_letters));
    type Key<S> = (Vec<Vec<StateId>>, S);
    let mut index: BTreeMap<Key<S>, usize> = BTreeMap::new();
    let mut nodes: Vec<(Key<S>, usize, usize)> = Vec::new();
    let start: Vec<Vec<StateId>> = fas.iter().map(|a| a.initial.clone()).collect();
    let key = (start, init);
    index.insert(key.clone(), 0);
    nodes.push((key, usize::MAX, 0));
    let mut acc = vec![false; fas.len()];
    let mut i = 0;
    while i < nodes.len() {
        let (sets, s) = nodes[i].0.clone();
        for (j, a) in fas.iter().enumerate() {
            acc[j] = a.accepts_set(&sets[j]);
        }
        if goal(&acc) {
            return Some(trace_back(&nodes, i, |x| (x.1, x.2)));
        }
        for l in 0..n_letters {
            let Some(s2) = step(&s, l) else { continue };
            let next: Vec<Vec<StateId>> = fas
                .iter()
                .zip(&sets)
                .map(|(a, set)| a.step_set(set, l))
                .collect();
            let key = (next, s2);
            if !index.contains_key(&key) {
                index.insert(key.clone(), nodes.len());
                nodes.push((key, i, l));
            }
        }
        i += 1;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Vec<char> {
        vec!['a', 'b']
    }

    /// a*b with three states (the third is an unreachable dead state).
    fn astar_b() -> Fa<char> {
        let mut f = Fa::new(ab());
        let q0 = f.add_state(false);
        let q1 = f.add_state(true);
        f.add_state(false);
        f.set_initial(q0);
        f.add_transition(q0, &'a', q0).unwrap();
        f.add_transition(q0, &'b', q1).unwrap();
        f
    }

    fn words(max: usize) -> Vec<Vec<char>> {
        let mut out = vec![vec![]];
        let mut layer = vec![vec![]];
        for _ in 0..max {
            let mut next = Vec::new();
            for w in &layer {
                for c in ab() {
                    let mut v: Vec<char> = w.clone();
                    v.push(c);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn accepts_basic() {
        let u = {
            let mut f = Fa::new(vec!['a']);
            let q = f.add_state(true);
            f.set_initial(q);
            f.add_transition(q, &'a', q).unwrap();
            f
        };
        assert!(u.accepts(&['a', 'a']).unwrap());
        assert!(u.accepts(&['b']).is_err());
        let f = astar_b();
        assert!(f.accepts(&['a', 'a', 'b']).unwrap());
        assert!(!f.accepts(&['a', 'b', 'b']).unwrap());
    }

    #[test]
    fn witnesses() {
        assert_eq!(Fa::empty(ab()).is_empty(), None);
        assert_eq!(Fa::universal(ab()).is_empty(), Some(vec![]));
        assert_eq!(astar_b().is_empty(), Some(vec!['b']));
        let no_diag = astar_b().filtered_reach(|_, &l| l == 'a');
        assert_eq!(no_diag, None);
        let after_a = astar_b().filtered_reach(|p, _| p.is_some() || false);
        assert_eq!(after_a, None);
    }

    #[test]
    fn complement_flips() {
        let f = astar_b();
        let c = f.complement();
        assert!(c.is_deterministic() && c.is_complete());
        for w in words(4) {
            assert_ne!(f.accepts(&w).unwrap(), c.accepts(&w).unwrap(), "{w:?}");
            assert_eq!(f.accepts(&w).unwrap(), c.complement().accepts(&w).unwrap());
        }
        assert_eq!(Fa::empty(ab()).complement().is_empty(), Some(vec![]));
    }

    #[test]
    fn products() {
        let f = astar_b();
        let mut g = Fa::new(ab());
        let p0 = g.add_state(false);
        let p1 = g.add_state(true);
        g.set_initial(p0);
        g.add_transition(p0, &'a', p1).unwrap();
        g.add_transition(p1, &'b', p1).unwrap();
        let i = f.product_intersect(&g).unwrap();
        let u = f.product_union(&g).unwrap();
        for w in words(4) {
            let (x, y) = (f.accepts(&w).unwrap(), g.accepts(&w).unwrap());
            assert_eq!(i.accepts(&w).unwrap(), x && y);
            assert_eq!(u.accepts(&w).unwrap(), x || y);
            assert_eq!(i.accepts(&w).unwrap(), w == vec!['a', 'b']);
        }
        let other = Fa::<char>::empty(vec!['c']);
        assert!(matches!(f.product_intersect(&other), Err(Error::AlphabetMismatch(_))));
    }

    #[test]
    fn containment() {
        let mut astar = Fa::new(ab());
        let q = astar.add_state(true);
        astar.set_initial(q);
        astar.add_transition(q, &'a', q).unwrap();
        let all = Fa::universal(ab());
        assert_eq!(astar.contains(&all).unwrap(), None);
        assert_eq!(all.contains(&astar).unwrap(), Some(vec!['b']));
        assert_eq!(astar.contains(&astar).unwrap(), None);
        assert_eq!(Fa::empty(ab()).contains(&astar).unwrap(), None);
    }

    #[test]
    fn remapping() {
        let mut f: Fa<(char, char)> = Fa::new(vec![('a', 'a'), ('a', 'b'), ('b', 'a'), ('b', 'b')]);
        let q0 = f.add_state(false);
        let q1 = f.add_state(true);
        f.set_initial(q0);
        f.add_transition(q0, &('a', 'b'), q1).unwrap();
        let swapped = f.remap_letters(f.alphabet().to_vec(), |&(x, y)| vec![(y, x)]);
        assert!(swapped.accepts(&[('b', 'a')]).unwrap());
        assert!(!swapped.accepts(&[('a', 'b')]).unwrap());
        let same = f.remap_letters(f.alphabet().to_vec(), |&l| vec![l]);
        assert!(same.accepts(&[('a', 'b')]).unwrap());
    }

    #[test]
    fn minimization() {
        // (a|b)*a with redundant states
        let mut f = Fa::new(ab());
        let s: Vec<_> = (0..4).map(|i| f.add_state(i == 2 || i == 3)).collect();
        f.set_initial(s[0]);
        f.set_initial(s[1]);
        for &q in &[s[0], s[1]] {
            f.add_transition(q, &'a', s[0]).unwrap();
            f.add_transition(q, &'b', s[1]).unwrap();
            f.add_transition(q, &'a', s[2]).unwrap();
            f.add_transition(q, &'a', s[3]).unwrap();
        }
        let m = f.minimize();
        assert_eq!(m.num_states(), 2);
        for w in words(5) {
            assert_eq!(m.accepts(&w).unwrap(), f.accepts(&w).unwrap());
        }
        assert_eq!(Fa::<char>::empty(ab()).minimize().num_states(), 1);
    }

    #[test]
    fn dot_output() {
        let d = astar_b().to_dot(|c| String::from(*c));
        assert!(d.contains("q1 [shape=doublecircle]"));
        assert!(d.contains("q0 -> q0 [label=\"a\"]"));
    }
}
