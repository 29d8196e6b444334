//! Permutations of `[n+1]` in one-line notation, words in the simple
//! reflections `s_1..s_n`, and 0/1 permutation matrices.
//!
//! The product convention throughout: appending a letter `q` to a word
//! multiplies on the right, i.e. it swaps the entries in *positions* `q` and
//! `q+1` of the one-line notation. All indices on the public surface are
//! 1-based.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Int, IntMatrix, Matrix, Rat};

/// A permutation of `[n+1]`, stored as its one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n + 1).collect(),
        }
    }

    /// The longest permutation `w0 = (n+1) n ... 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            image: (1..=n + 1).rev().collect(),
        }
    }

    pub fn from_one_line(image: Vec<usize>) -> Result<Self> {
        let degree = image.len();
        let mut seen = vec![false; degree + 1];
        for &v in &image {
            if v == 0 || v > degree || seen[v] {
                return Err(Error::NotAPermutation { degree });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Rank `n`; the permutation acts on `[n+1]`.
    pub fn rank(&self) -> usize {
        self.image.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Permutation { image }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            image: other.image.iter().map(|&v| self.image[v - 1]).collect(),
        }
    }

    /// Coxeter length: the number of inversions of the one-line notation.
    pub fn length(&self) -> usize {
        let v = &self.image;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `w^rev`: the one-line notation reversed (equivalently `w·w0`).
    pub fn reverse(&self) -> Permutation {
        let mut image = self.image.clone();
        image.reverse();
        Permutation { image }
    }

    /// Right multiplication by `s_q`: swaps positions `q` and `q+1`.
    pub fn right_multiply(&mut self, q: usize) {
        self.image.swap(q - 1, q);
    }

    /// Left multiplication by `s_q`: swaps the values `q` and `q+1`.
    pub fn left_multiply(&mut self, q: usize) {
        let pq = self.image.iter().position(|&v| v == q).unwrap();
        let pq1 = self.image.iter().position(|&v| v == q + 1).unwrap();
        self.image.swap(pq, pq1);
    }

    /// True iff `ℓ(s_q w) < ℓ(w)`, i.e. some reduced word of `w` starts with
    /// `q`.
    pub fn has_left_descent(&self, q: usize) -> bool {
        let pq = self.image.iter().position(|&v| v == q).unwrap();
        let pq1 = self.image.iter().position(|&v| v == q + 1).unwrap();
        pq > pq1
    }

    pub fn matrix(&self) -> PermutationMatrix {
        PermutationMatrix { perm: self.clone() }
    }

    /// All permutations of rank `n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n + 1).collect();
        loop {
            out.push(Permutation {
                image: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..=n)
                .rev()
                .find(|&j| current[j] > current[i])
                .unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }

    /// Parses one-line notation, e.g. "2413" or "2,4,1,3".
    pub fn parse(s: &str) -> Result<Permutation> {
        let values = parse_sequence(s)?;
        Permutation::from_one_line(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_sequence(&self.image))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A word over the letters `1..=n`, not necessarily reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        for &letter in &letters {
            if letter == 0 || letter > n {
                return Err(Error::LetterOutOfRange { letter, n });
            }
        }
        Ok(Word { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        Word {
            n,
            letters: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The permutation obtained by applying the letters left to right, each
    /// acting on positions (right multiplication). The empty word gives the
    /// identity.
    pub fn to_permutation(&self) -> Permutation {
        let mut w = Permutation::identity(self.n);
        for &q in &self.letters {
            w.right_multiply(q);
        }
        w
    }

    /// A word is reduced iff its length equals the Coxeter length of the
    /// permutation it represents.
    pub fn is_reduced(&self) -> bool {
        self.to_permutation().length() == self.letters.len()
    }

    /// Set of distinct letters. Defined for reduced words only, where it is
    /// an invariant of the permutation.
    pub fn support(&self) -> Result<BTreeSet<usize>> {
        if !self.is_reduced() {
            return Err(Error::NotReduced);
        }
        Ok(self.letters.iter().copied().collect())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            n: self.n,
            letters: self.letters[..len].to_vec(),
        }
    }

    /// Subword at the 1-based positions selected by `mask` (bit `i-1` set
    /// means position `i` is kept).
    pub fn subword(&self, mask: u64) -> Word {
        let letters = self
            .letters
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect();
        Word { n: self.n, letters }
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { n: self.n, letters }
    }

    /// Parses "1432657" (single digits) or "1,4,3,2,6,5,7".
    pub fn parse(s: &str, n: usize) -> Result<Word> {
        Word::new(n, parse_sequence(s)?)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_sequence(&self.letters))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The 0/1 matrix `X(w)` with a 1 in row `i`, column `w(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMatrix {
    perm: Permutation,
}

impl PermutationMatrix {
    pub fn size(&self) -> usize {
        self.perm.degree()
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        u8::from(self.perm.apply(row) == col)
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let d = self.size();
        let mut m = IntMatrix::zeros(d, d);
        for i in 1..=d {
            m.set(i - 1, self.perm.apply(i) - 1, Int::one());
        }
        m
    }

    pub fn to_matrix(&self) -> Matrix {
        let d = self.size();
        let mut m = Matrix::zeros(d, d);
        for i in 1..=d {
            m.set(i - 1, self.perm.apply(i) - 1, Rat::one());
        }
        m
    }
}

fn parse_sequence(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad entry {part:?}: {e}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad digit {ch:?}")))
            })
            .collect()
    }
}

/// Digit string when all entries are single digits, comma-separated
/// otherwise.
pub fn fmt_sequence(values: &[usize]) -> String {
    if values.iter().all(|&v| v <= 9) {
        values.iter().map(ToString::to_string).collect()
    } else {
        values
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, letters: &[usize]) -> Word {
        Word::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn word_to_perm_fixtures() {
        assert_eq!(word(3, &[]).to_permutation(), Permutation::identity(3));
        assert_eq!(
            word(3, &[1, 3, 2]).to_permutation().one_line(),
            &[2, 4, 1, 3]
        );
        assert_eq!(word(2, &[1, 2, 1]).to_permutation().one_line(), &[3, 2, 1]);
    }

    #[test]
    fn word_rejects_letter_out_of_range() {
        assert!(Word::new(3, vec![1, 4]).is_err());
        assert!(Word::new(3, vec![0]).is_err());
    }

    #[test]
    fn coxeter_length_fixtures() {
        assert_eq!(Permutation::identity(3).length(), 0);
        assert_eq!(
            Permutation::from_one_line(vec![5, 1, 3, 4, 2])
                .unwrap()
                .length(),
            6
        );
        for n in 1..=6 {
            assert_eq!(Permutation::longest(n).length(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn is_reduced_fixtures() {
        assert!(word(2, &[1, 2, 1]).is_reduced());
        assert!(!word(2, &[1, 1]).is_reduced());
        assert!(word(4, &[4, 2, 3, 2, 4, 1]).is_reduced());
    }

    #[test]
    fn support_fixtures() {
        assert_eq!(
            word(4, &[4, 2, 3, 2, 4, 1]).support().unwrap(),
            [1, 2, 3, 4].into_iter().collect()
        );
        assert_eq!(word(4, &[]).support().unwrap(), BTreeSet::new());
        assert_eq!(word(4, &[2]).support().unwrap(), [2].into_iter().collect());
        assert!(word(2, &[1, 1]).support().is_err());
    }

    #[test]
    fn permutation_matrix_fixtures() {
        let id = Permutation::identity(3).matrix();
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(id.entry(i, j), u8::from(i == j));
            }
        }
        let m = word(3, &[1, 3, 2]).to_permutation().matrix();
        let ones: Vec<(usize, usize)> = (1..=4)
            .flat_map(|i| (1..=4).map(move |j| (i, j)))
            .filter(|&(i, j)| m.entry(i, j) == 1)
            .collect();
        assert_eq!(ones, vec![(1, 2), (2, 4), (3, 1), (4, 3)]);

        // s1 s4 s3 s2 in A_7
        let w = word(7, &[1, 4, 3, 2]).to_permutation();
        let m = w.matrix();
        let ones: Vec<(usize, usize)> = (1..=8).map(|i| (i, w.apply(i))).collect();
        assert_eq!(
            ones,
            vec![
                (1, 2),
                (2, 5),
                (3, 1),
                (4, 3),
                (5, 4),
                (6, 6),
                (7, 7),
                (8, 8)
            ]
        );
        let _ = m;
    }

    #[test]
    fn reverse_perm_fixtures() {
        assert_eq!(Permutation::identity(3).reverse().one_line(), &[4, 3, 2, 1]);
        let w = Permutation::from_one_line(vec![2, 4, 1, 3]).unwrap();
        assert_eq!(w.reverse().one_line(), &[3, 1, 4, 2]);
        assert_eq!(w.reverse().reverse(), w);
        // w^rev = w · w0
        let w0 = Permutation::longest(3);
        assert_eq!(w.compose(&w0), w.reverse());
    }

    #[test]
    fn length_of_reverse_is_complementary() {
        for n in 1..=4 {
            let total = n * (n + 1) / 2;
            for w in Permutation::all(n) {
                assert_eq!(w.length() + w.reverse().length(), total);
            }
        }
    }

    #[test]
    fn matrices_are_distinct_across_permutations() {
        for n in 1..=4 {
            let perms = Permutation::all(n);
            let mats: BTreeSet<Vec<usize>> = perms.iter().map(|w| w.one_line().to_vec()).collect();
            assert_eq!(mats.len(), perms.len());
        }
    }

    #[test]
    fn concatenation_is_word_product() {
        // pseudorandom word pairs; concatenation must equal composing the
        // permutations with the second word applied after the first
        let mut state = 0x853c49e6748fea9bu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..1000 {
            let n = 1 + (next() % 6) as usize;
            let la = (next() % 8) as usize;
            let lb = (next() % 8) as usize;
            let a = Word::new(n, (0..la).map(|_| 1 + (next() as usize) % n).collect()).unwrap();
            let b = Word::new(n, (0..lb).map(|_| 1 + (next() as usize) % n).collect()).unwrap();
            let mut expected = a.to_permutation();
            for &q in b.letters() {
                expected.right_multiply(q);
            }
            assert_eq!(a.concat(&b).to_permutation(), expected);
        }
    }

    #[test]
    fn parse_round_trips() {
        let w = Word::parse("1432657", 7).unwrap();
        assert_eq!(w.letters(), &[1, 4, 3, 2, 6, 5, 7]);
        assert_eq!(w.to_string(), "1432657");
        let w = Word::parse("1,4,3,2,5,7,6,9,8,10", 10).unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(w.to_string(), "1,4,3,2,5,7,6,9,8,10");
        assert!(Word::parse("19x", 9).is_err());
        let p = Permutation::parse("2413").unwrap();
        assert_eq!(p.one_line(), &[2, 4, 1, 3]);
        assert!(Permutation::parse("2412").is_err());
    }
}
