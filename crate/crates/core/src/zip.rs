//! Tuple letters and the zip encoding of word tuples.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, Sigma, Symbol, Word};

/// A k-tuple over Σ ∪ {PAD}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(Vec<Symbol>);

impl Letter {
    pub fn new(components: Vec<Symbol>) -> Letter {
        Letter(components)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Symbol] {
        &self.0
    }

    pub fn get(&self, track: usize) -> Symbol {
        self.0[track]
    }

    pub fn is_all_pad(&self) -> bool {
        self.0.iter().all(|s| s.is_pad())
    }

    /// `(σ, …, σ)` of arity `k`.
    pub fn diagonal(s: Symbol, k: usize) -> Letter {
        Letter(vec![s; k])
    }

    pub fn is_diagonal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// `(ℓ[ζ(1)], …, ℓ[ζ(n)])`.
    pub fn select(&self, zeta: &IndexSequence) -> Letter {
        Letter(zeta.indices().iter().map(|&i| self.0[i]).collect())
    }

    pub fn display(&self, sigma: &Sigma) -> String {
        let mut s = String::from("(");
        for (i, &c) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(sigma.token(c));
        }
        s.push(')');
        s
    }
}

/// A word over k-tuple letters. The arity is stored so that ε keeps it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ZipWord {
    arity: usize,
    letters: Vec<Letter>,
}

/// A tuple of Σ-words.
pub type WordTuple = Vec<Word>;

impl ZipWord {
    pub fn empty(arity: usize) -> ZipWord {
        ZipWord {
            arity,
            letters: Vec::new(),
        }
    }

    pub fn new(arity: usize, letters: Vec<Letter>) -> Result<ZipWord> {
        if let Some(l) = letters.iter().find(|l| l.arity() != arity) {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: l.arity(),
            });
        }
        Ok(ZipWord { arity, letters })
    }

    /// Parses `(a,b)(#,d)`; the empty string is ε.
    pub fn parse(sigma: &Sigma, arity: usize, text: &str) -> Result<ZipWord> {
        let mut letters = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|e| (&r[..e], &r[e + 1..])));
            let Some((inner, after)) = body else {
                return Err(Error::Syntax {
                    pos: text.len() - rest.len(),
                    msg: "expected `(`".into(),
                });
            };
            let comps = inner
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    if t == "#" {
                        Ok(Symbol::PAD)
                    } else {
                        sigma
                            .symbol(t)
                            .ok_or_else(|| Error::UnknownSymbol(t.into()))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            letters.push(Letter(comps));
            rest = after.trim_start();
        }
        ZipWord::new(arity, letters)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// Letter concatenation `self · other`.
    pub fn concat(&self, other: &ZipWord) -> Result<ZipWord> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(ZipWord {
            arity: self.arity,
            letters,
        })
    }

    pub fn push(&self, l: Letter) -> ZipWord {
        let mut w = self.clone();
        assert_eq!(l.arity(), self.arity);
        w.letters.push(l);
        w
    }

    /// All suffixes, from the word itself down to ε.
    pub fn suffixes(&self) -> impl Iterator<Item = ZipWord> + '_ {
        (0..=self.letters.len()).map(move |i| ZipWord {
            arity: self.arity,
            letters: self.letters[i..].to_vec(),
        })
    }

    pub fn prefix(&self, len: usize) -> ZipWord {
        ZipWord {
            arity: self.arity,
            letters: self.letters[..len].to_vec(),
        }
    }

    /// Whether the word is exactly `zip(t)` for some tuple `t`: legal and
    /// without a letter that is PAD in every track.
    pub fn is_zip_image(&self) -> bool {
        is_legal(self) && (self.arity > 0 || self.is_empty()) && !self.letters.iter().any(Letter::is_all_pad)
    }

    pub fn display(&self, sigma: &Sigma) -> String {
        if self.letters.is_empty() {
            return String::from("ε");
        }
        self.letters.iter().map(|l| l.display(sigma)).collect()
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (n, i) in self.indices.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str(")")
    }
}

/// A map from result tracks to source tracks, `(ζ(1), …, ζ(n))`.
///
/// Indices are stored zero-based; [`IndexSequence::new`] takes the usual
/// one-based notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexSequence {
    indices: Vec<usize>,
}

impl IndexSequence {
    /// One-based constructor; every index must lie in `1..=range`.
    pub fn new(one_based: &[usize], range: usize) -> Result<IndexSequence> {
        for &i in one_based {
            if i == 0 || i > range {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    arity: range,
                });
            }
        }
        Ok(IndexSequence {
            indices: one_based.iter().map(|i| i - 1).collect(),
        })
    }

    pub fn from_zero_based(indices: Vec<usize>) -> IndexSequence {
        IndexSequence { indices }
    }

    pub fn identity(k: usize) -> IndexSequence {
        IndexSequence {
            indices: (0..k).collect(),
        }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.indices.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.indices.len()];
        for &i in &self.indices {
            if i >= seen.len() || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &IndexSequence) -> IndexSequence {
        IndexSequence {
            indices: other.indices.iter().map(|&i| self.indices[i]).collect(),
        }
    }

    /// Every map `[len] → [range]`, in lexicographic order.
    pub fn all_maps(len: usize, range: usize) -> Vec<IndexSequence> {
        let mut out = Vec::new();
        if range == 0 && len > 0 {
            return out;
        }
        let mut cur = vec![0usize; len];
        loop {
            out.push(IndexSequence {
                indices: cur.clone(),
            });
            let mut i = len;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < range {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// Every permutation of `[k]`, in lexicographic order.
    pub fn permutations(k: usize) -> Vec<IndexSequence> {
        IndexSequence::all_maps(k, k)
            .into_iter()
            .filter(IndexSequence::is_permutation)
            .collect()
    }
}

/// `zip(w₁, …, w_k)`: letter j carries `w_i[j]` in track i, or PAD once
/// `w_i` has ended.
pub fn zip(words: &[Word]) -> ZipWord {
    let len = words.iter().map(Vec::len).max().unwrap_or(0);
    let letters = (0..len)
        .map(|j| {
            Letter(
                words
                    .iter()
                    .map(|w| w.get(j).copied().unwrap_or(Symbol::PAD))
                    .collect(),
            )
        })
        .collect();
    ZipWord {
        arity: words.len(),
        letters,
    }
}

/// Inverse of [`zip`] on legal words.
pub fn unzip(w: &ZipWord) -> Result<WordTuple> {
    if !is_legal(w) {
        return Err(Error::IllegalZipWord(format!("{:?}", w.letters)));
    }
    Ok((0..w.arity)
        .map(|i| {
            w.letters
                .iter()
                .map(|l| l.0[i])
                .take_while(|s| !s.is_pad())
                .collect()
        })
        .collect())
}

/// True iff every track is a Σ-word followed by PADs only.
pub fn is_legal(w: &ZipWord) -> bool {
    let mut ended = vec![false; w.arity];
    for l in &w.letters {
        for (i, s) in l.0.iter().enumerate() {
            if s.is_pad() {
                ended[i] = true;
            } else if ended[i] {
                return false;
            }
        }
    }
    true
}

/// `w_ζ`: track i of the result is track `ζ(i)` of `w`.
///
/// When `w` is a zip image the result is `zip(w_{ζ(1)}, …)`, i.e. letters
/// that became PAD in every track are dropped from the end.
pub fn apply_sequence(w: &ZipWord, zeta: &IndexSequence) -> Result<ZipWord> {
    if let Some(&i) = zeta.indices.iter().find(|&&i| i >= w.arity) {
        return Err(Error::IndexOutOfRange {
            index: i + 1,
            arity: w.arity,
        });
    }
    let mut letters: Vec<Letter> = w.letters.iter().map(|l| l.select(zeta)).collect();
    if w.is_zip_image() {
        while letters.last().is_some_and(Letter::is_all_pad) {
            letters.pop();
        }
    }
    Ok(ZipWord {
        arity: zeta.len(),
        letters,
    })
}

/// `w₁ + w₂ = zip(u₁, …, u_k, v₁, …, v_k′)`.
pub fn concat_tracks(w1: &ZipWord, w2: &ZipWord) -> Result<ZipWord> {
    let mut t = unzip(w1)?;
    t.extend(unzip(w2)?);
    Ok(zip(&t))
}

/// `↑_k^{k_new}`: every letter gets its last component repeated up to
/// arity `k_new`.
pub fn lift(w: &ZipWord, k_new: usize) -> Result<ZipWord> {
    if k_new < w.arity || (w.arity == 0 && k_new > 0) {
        return Err(Error::InvalidArity(format!(
            "cannot lift arity {} to {k_new}",
            w.arity
        )));
    }
    let letters = w
        .letters
        .iter()
        .map(|l| {
            let mut c = l.0.clone();
            let last = *c.last().expect("arity > 0");
            c.resize(k_new, last);
            Letter(c)
        })
        .collect();
    Ok(ZipWord {
        arity: k_new,
        letters,
    })
}

/// Dense numbering of the full alphabet (Σ ∪ {PAD})^k.
///
/// A letter's id is its mixed-radix value with track 1 most significant and
/// PAD as the largest digit, so ids follow the lexicographic letter order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct LetterCodec {
    pub base: usize,
    pub k: usize,
}

impl LetterCodec {
    pub fn new(sigma_len: usize, k: usize) -> LetterCodec {
        LetterCodec {
            base: sigma_len + 1,
            k,
        }
    }

    pub fn size(&self) -> usize {
        self.base.pow(self.k as u32)
    }

    pub fn pad_digit(&self) -> usize {
        self.base - 1
    }

    pub fn digit_of(&self, s: Symbol) -> usize {
        if s.is_pad() {
            self.base - 1
        } else {
            s.index()
        }
    }

    pub fn symbol_of(&self, d: usize) -> Symbol {
        if d == self.base - 1 {
            Symbol::PAD
        } else {
            Symbol::from_index(d)
        }
    }

    pub fn encode(&self, l: &[Symbol]) -> usize {
        debug_assert_eq!(l.len(), self.k);
        l.iter().fold(0, |acc, &s| acc * self.base + self.digit_of(s))
    }

    pub fn encode_digits(&self, digits: impl Iterator<Item = usize>) -> usize {
        digits.fold(0, |acc, d| acc * self.base + d)
    }

    pub fn digits(&self, mut id: usize) -> Vec<usize> {
        let mut d = vec![0; self.k];
        for i in (0..self.k).rev() {
            d[i] = id % self.base;
            id /= self.base;
        }
        d
    }

    pub fn decode(&self, id: usize) -> Letter {
        Letter(self.digits(id).into_iter().map(|d| self.symbol_of(d)).collect())
    }

    /// Bit i set iff track i is PAD.
    pub fn pad_mask(&self, id: usize) -> u64 {
        self.digits(id)
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == self.base - 1)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn all_pad(&self) -> usize {
        self.size() - 1
    }

    pub fn alphabet(&self) -> Vec<Letter> {
        (0..self.size()).map(|i| self.decode(i)).collect()
    }
}

/// Step filter accepting exactly the zip images: no track resumes after
/// PAD and no letter is PAD everywhere. The filter state is the set of
/// tracks that have ended.
pub(crate) struct ZipImageFilter {
    masks: Vec<u64>,
    full: u64,
}

impl ZipImageFilter {
    pub fn new(codec: LetterCodec) -> ZipImageFilter {
        ZipImageFilter {
            masks: (0..codec.size()).map(|i| codec.pad_mask(i)).collect(),
            full: if codec.k >= 64 { u64::MAX } else { (1u64 << codec.k) - 1 },
        }
    }

    pub fn step(&self, ended: u64, letter: usize) -> Option<u64> {
        let m = self.masks[letter];
        if m == self.full || (ended & !m) != 0 {
            None
        } else {
            Some(m)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn sig() -> Sigma {
        Sigma::new(["a", "b", "c", "d"]).unwrap()
    }

    fn w(s: &Sigma, t: &str) -> Word {
        s.parse_word(t).unwrap()
    }

    #[test]
    fn zip_example() {
        let s = sig();
        let z = zip(&[w(&s, "aab"), w(&s, "bc"), w(&s, "abdd")]);
        assert_eq!(z.display(&s), "(a,b,a)(a,c,b)(b,#,d)(#,#,d)");
        assert_eq!(
            unzip(&z).unwrap(),
            vec![w(&s, "aab"), w(&s, "bc"), w(&s, "abdd")]
        );
    }

    #[test]
    fn zip_of_empty() {
        let s = sig();
        let z = zip(&[w(&s, "")]);
        assert_eq!(z.arity(), 1);
        assert!(z.is_empty());
        assert_eq!(unzip(&ZipWord::empty(3)).unwrap(), vec![vec![]; 3]);
    }

    #[test]
    fn legality() {
        let s = sig();
        assert!(is_legal(&ZipWord::parse(&s, 2, "(a,a)(#,b)(#,b)").unwrap()));
        let bad = ZipWord::parse(&s, 2, "(a,#)(b,b)").unwrap();
        assert!(!is_legal(&bad));
        assert!(matches!(unzip(&bad), Err(Error::IllegalZipWord(_))));
        assert!(is_legal(&ZipWord::empty(2)));
        let tail = ZipWord::parse(&s, 2, "(a,b)(#,#)").unwrap();
        assert!(is_legal(&tail) && !tail.is_zip_image());
    }

    #[test]
    fn sequences() {
        let s = sig();
        let x = ZipWord::parse(&s, 2, "(a,b)(c,d)").unwrap();
        let swap = IndexSequence::new(&[2, 1], 2).unwrap();
        assert_eq!(apply_sequence(&x, &swap).unwrap().display(&s), "(b,a)(d,c)");
        assert_eq!(apply_sequence(&x, &IndexSequence::identity(2)).unwrap(), x);
        let y = ZipWord::parse(&s, 2, "(a,b)(#,d)").unwrap();
        let dd = IndexSequence::new(&[2, 2], 2).unwrap();
        assert_eq!(apply_sequence(&y, &dd).unwrap().display(&s), "(b,b)(d,d)");
        let aa = IndexSequence::new(&[1, 1], 2).unwrap();
        assert_eq!(apply_sequence(&y, &aa).unwrap().display(&s), "(a,a)");
        assert!(IndexSequence::new(&[3], 2).is_err());
        assert!(apply_sequence(&y, &IndexSequence::from_zero_based(vec![2])).is_err());
    }

    #[test]
    fn enumerations() {
        let m = IndexSequence::all_maps(2, 3);
        assert_eq!(m.len(), 9);
        assert_eq!(m[1].indices(), &[0, 1]);
        let p = IndexSequence::permutations(3);
        assert_eq!(p.len(), 6);
        assert!(p[0].is_identity());
        assert_eq!(p[1].to_string(), "(1,3,2)");
    }

    #[test]
    fn concat_and_lift() {
        let s = sig();
        let a = zip(&[w(&s, "a")]);
        let bb = zip(&[w(&s, "bb")]);
        assert_eq!(concat_tracks(&a, &bb).unwrap().display(&s), "(a,b)(#,b)");
        assert_eq!(concat_tracks(&a, &ZipWord::empty(0)).unwrap(), a);
        let ab = zip(&[w(&s, "ab")]);
        let cd = zip(&[w(&s, "cd")]);
        assert_eq!(concat_tracks(&ab, &cd).unwrap().display(&s), "(a,c)(b,d)");

        assert_eq!(lift(&ab, 2).unwrap().display(&s), "(a,a)(b,b)");
        assert_eq!(lift(&ab, 1).unwrap(), ab);
        let p = ZipWord::parse(&s, 2, "(a,#)").unwrap();
        assert_eq!(lift(&p, 3).unwrap().display(&s), "(a,#,#)");
        assert!(matches!(lift(&p, 1), Err(Error::InvalidArity(_))));
    }

    #[test]
    fn codec_order_matches_letter_order() {
        let c = LetterCodec::new(2, 2);
        let alpha = c.alphabet();
        assert_eq!(alpha.len(), 9);
        assert!(alpha.windows(2).all(|w| w[0] < w[1]));
        for (i, l) in alpha.iter().enumerate() {
            assert_eq!(c.encode(l.components()), i);
        }
        assert!(alpha[c.all_pad()].is_all_pad());
    }
}
