use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::Teacher;
use crate::zip::{is_legal, lift, unzip, LetterCodec, ZipWord};
use crate::{Error, Fragment, Hyperword, Nfh, Quantifier, Result, Sigma};

/// An L* observation table over k-tuple letters.
///
/// Rows `D` are prefix-closed and pairwise distinct, columns `E` are
/// suffix-closed, and ε belongs to both. The entry for a word `w` is
/// whether `set(unzip(w))` is in the target; words with a track that
/// resumes after PAD have no unzip and are always false.
#[derive(Clone, Debug)]
pub struct ObservationTable {
    sigma: Sigma,
    k: usize,
    codec: LetterCodec,
    rows: Vec<ZipWord>,
    cols: Vec<ZipWord>,
    entries: BTreeMap<ZipWord, bool>,
    queries: usize,
}

impl ObservationTable {
    /// `D = E = {ε}` at arity `k`.
    pub fn new(sigma: &Sigma, k: usize) -> Result<ObservationTable> {
        if k == 0 {
            return Err(Error::InvalidArity("tables need arity at least 1".into()));
        }
        Ok(ObservationTable {
            sigma: sigma.clone(),
            k,
            codec: LetterCodec::new(sigma.len(), k),
            rows: alloc::vec![ZipWord::empty(k)],
            cols: alloc::vec![ZipWord::empty(k)],
            entries: BTreeMap::new(),
            queries: 0,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[ZipWord] {
        &self.rows
    }

    pub fn cols(&self) -> &[ZipWord] {
        &self.cols
    }

    /// Distinct membership queries issued so far.
    pub fn queries(&self) -> usize {
        self.queries
    }

    /// `D·Σ̂ \ D` in row-then-letter order.
    pub fn boundary(&self) -> Vec<ZipWord> {
        let mut out = Vec::new();
        for d in &self.rows {
            for id in 0..self.codec.size() {
                let w = d.push(self.codec.decode(id));
                if !self.rows.contains(&w) {
                    out.push(w);
                }
            }
        }
        out
    }

    /// The recorded entry for the word `w`, if it has been queried.
    pub fn entry(&self, w: &ZipWord) -> Option<bool> {
        self.entries.get(w).copied()
    }

    /// The defining query for the word `w`.
    pub fn query<T: Teacher + ?Sized>(teacher: &mut T, w: &ZipWord) -> Result<bool> {
        if !is_legal(w) {
            return Ok(false);
        }
        teacher.member(&Hyperword::new(unzip(w)?)?)
    }

    fn ensure<T: Teacher + ?Sized>(&mut self, teacher: &mut T, w: ZipWord, budget: usize) -> Result<bool> {
        if let Some(v) = self.entries.get(&w) {
            return Ok(*v);
        }
        if self.queries >= budget {
            return Err(Error::QueryBudgetExceeded(format!(
                "{} membership queries",
                self.queries
            )));
        }
        self.queries += 1;
        let v = Self::query(teacher, &w)?;
        self.entries.insert(w, v);
        Ok(v)
    }

    /// Queries every missing entry of `(D ∪ D·Σ̂) × E`.
    pub fn fill<T: Teacher + ?Sized>(&mut self, teacher: &mut T, budget: usize) -> Result<()> {
        let mut prefixes = self.rows.clone();
        prefixes.extend(self.boundary());
        let cols = self.cols.clone();
        for p in &prefixes {
            for e in &cols {
                self.ensure(teacher, p.concat(e)?, budget)?;
            }
        }
        Ok(())
    }

    /// The row of a prefix. Every entry must already be filled.
    pub fn row(&self, p: &ZipWord) -> Option<Vec<bool>> {
        self.cols
            .iter()
            .map(|e| self.entry(&p.concat(e).ok()?))
            .collect()
    }

    /// Adds each word and all its suffixes to `E`; returns how many columns
    /// are new.
    pub fn add_columns(&mut self, words: impl IntoIterator<Item = ZipWord>) -> Result<usize> {
        let mut added = 0;
        for w in words {
            if w.arity() != self.k {
                return Err(Error::ArityMismatch {
                    expected: self.k,
                    found: w.arity(),
                });
            }
            for s in w.suffixes() {
                if !self.cols.contains(&s) {
                    self.cols.push(s);
                    added += 1;
                }
            }
        }
        Ok(added)
    }

    /// Replaces every label by its lift to arity `k_new`. Entries carry
    /// over because lifting never changes the set of unzipped words.
    pub fn lift_table(&self, k_new: usize) -> Result<ObservationTable> {
        if k_new <= self.k {
            return Err(Error::InvalidArity(format!(
                "cannot lift a table of arity {} to {k_new}",
                self.k
            )));
        }
        let up = |ws: &[ZipWord]| ws.iter().map(|w| lift(w, k_new)).collect::<Result<Vec<_>>>();
        let mut entries = BTreeMap::new();
        for (w, &v) in &self.entries {
            entries.insert(lift(w, k_new)?, v);
        }
        Ok(ObservationTable {
            sigma: self.sigma.clone(),
            k: k_new,
            codec: LetterCodec::new(self.sigma.len(), k_new),
            rows: up(&self.rows)?,
            cols: up(&self.cols)?,
            entries,
            queries: self.queries,
        })
    }

    /// Whether every boundary row already occurs as a row of `D`.
    pub fn is_closed(&self) -> bool {
        let have: Vec<Option<Vec<bool>>> = self.rows.iter().map(|d| self.row(d)).collect();
        self.boundary().iter().all(|b| {
            let r = self.row(b);
            r.is_some() && have.contains(&r)
        })
    }

    fn inconsistency(&self) -> Option<ZipWord> {
        for (i, d1) in self.rows.iter().enumerate() {
            for d2 in &self.rows[i + 1..] {
                if self.row(d1) != self.row(d2) {
                    continue;
                }
                for id in 0..self.codec.size() {
                    let l = self.codec.decode(id);
                    for e in &self.cols {
                        let a = d1.push(l.clone()).concat(e).ok()?;
                        let b = d2.push(l.clone()).concat(e).ok()?;
                        if self.entry(&a) != self.entry(&b) {
                            return ZipWord::empty(self.k).push(l).concat(e).ok();
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistency().is_none()
    }

    /// Runs the L* fixpoint: separating columns are added on inconsistency
    /// and unmatched boundary rows are promoted to `D`, until the table is
    /// closed and consistent.
    pub fn close_and_consist<T: Teacher + ?Sized>(&mut self, teacher: &mut T, budget: usize) -> Result<()> {
        loop {
            self.fill(teacher, budget)?;
            if let Some(col) = self.inconsistency() {
                self.add_columns([col])?;
                continue;
            }
            let have: Vec<Vec<bool>> = self.rows.iter().filter_map(|d| self.row(d)).collect();
            let missing = self
                .boundary()
                .into_iter()
                .find(|b| self.row(b).is_some_and(|r| !have.contains(&r)));
            match missing {
                Some(b) => self.rows.push(b),
                None => return Ok(()),
            }
        }
    }

    /// The hypothesis automaton: one state per distinct row of `D`, initial
    /// state `row(ε)`, accepting where the ε column is true.
    pub fn build_candidate(&self, fragment: Fragment) -> Result<Nfh> {
        let q = match fragment {
            Fragment::ForallOnly => Quantifier::Forall,
            Fragment::ExistsOnly => Quantifier::Exists,
            _ => {
                return Err(Error::WrongFragment(
                    "candidates are all-∀ or all-∃".into(),
                ))
            }
        };
        let mut state_of: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
        let mut reps = Vec::new();
        for d in &self.rows {
            let r = self.row(d).ok_or(Error::TableNotClosed)?;
            if let Entry::Vacant(v) = state_of.entry(r) {
                v.insert(reps.len());
                reps.push(d.clone());
            }
        }
        let mut fa = Nfh::blank_underlying(&self.sigma, self.k);
        for d in &reps {
            let acc = self.entry(d).ok_or(Error::TableNotClosed)?;
            fa.add_state(acc);
        }
        fa.set_initial(0);
        for (s, d) in reps.iter().enumerate() {
            for id in 0..self.codec.size() {
                let r = self
                    .row(&d.push(self.codec.decode(id)))
                    .ok_or(Error::TableNotClosed)?;
                let t = *state_of.get(&r).ok_or(Error::TableNotClosed)?;
                fa.add_transition_id(s, id, t);
            }
        }
        Nfh::new(self.sigma.clone(), alloc::vec![q; self.k], fa)
    }
}
