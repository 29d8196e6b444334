//! Coxeter elements of `A_n`: the lower/upper-barred partition of `[2,n]`,
//! the column-labeling bijection `ν_c`, the permutation `σ_c`, and powers
//! along the defining cycle.
//!
//! A number `i ∈ [2,n]` is *lower-barred* when it appears to the right of
//! `i-1` in the defining word, and *upper-barred* otherwise. As a
//! permutation, `c` is the single cycle `(1 d_1 .. d_r (n+1) u_s .. u_1)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};

#[derive(Debug, Clone)]
pub struct CoxeterElement {
    word: Word,
    lower: Vec<usize>,
    upper: Vec<usize>,
    /// The cycle `1, d_1, .., d_r, n+1, u_s, .., u_1`; `c` maps each entry to
    /// the next, wrapping around.
    cycle: Vec<usize>,
    /// Position of each value inside `cycle` (0-based, indexed by value-1).
    cycle_pos: Vec<usize>,
}

/// Two words with the same barred partition define the same group element
/// (they differ by commutations), so equality is keyed on the partition,
/// not on the retained word.
impl PartialEq for CoxeterElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank() == other.rank() && self.lower == other.lower
    }
}

impl Eq for CoxeterElement {}

impl CoxeterElement {
    /// Builds a Coxeter element from a word using each letter in `[1,n]`
    /// exactly once.
    pub fn new(word: Word) -> Result<Self> {
        let n = word.rank();
        let mut position = vec![usize::MAX; n + 1];
        if word.len() != n {
            return Err(Error::NotCoxeterWord { n });
        }
        for (i, &letter) in word.letters().iter().enumerate() {
            if position[letter] != usize::MAX {
                return Err(Error::NotCoxeterWord { n });
            }
            position[letter] = i;
        }
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for i in 2..=n {
            if position[i] > position[i - 1] {
                lower.push(i);
            } else {
                upper.push(i);
            }
        }
        let mut cycle = Vec::with_capacity(n + 1);
        cycle.push(1);
        cycle.extend(&lower);
        cycle.push(n + 1);
        cycle.extend(upper.iter().rev());
        let mut cycle_pos = vec![0; n + 1];
        for (pos, &v) in cycle.iter().enumerate() {
            cycle_pos[v - 1] = pos;
        }
        Ok(CoxeterElement {
            word,
            lower,
            upper,
            cycle,
            cycle_pos,
        })
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        CoxeterElement::new(Word::parse(s, n)?)
    }

    /// Canonical element for a given lower-barred subset of `[2,n]`: letters
    /// are appended on the right when lower-barred, prepended otherwise.
    pub fn from_lower_set(n: usize, lower: &[usize]) -> Result<Self> {
        let mut letters = std::collections::VecDeque::new();
        letters.push_back(1);
        for i in 2..=n {
            if lower.contains(&i) {
                letters.push_back(i);
            } else {
                letters.push_front(i);
            }
        }
        CoxeterElement::new(Word::new(n, letters.into_iter().collect())?)
    }

    /// All `2^(n-1)` Coxeter elements of `A_n`, one per barred partition,
    /// each with its canonical word.
    pub fn all(n: usize) -> Vec<CoxeterElement> {
        let candidates: Vec<usize> = (2..=n).collect();
        let mut out = Vec::with_capacity(1 << candidates.len());
        for bits in 0..1u64 << candidates.len() {
            let lower: Vec<usize> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            out.push(CoxeterElement::from_lower_set(n, &lower).unwrap());
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.word.rank()
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Lower-barred numbers `d_1 < .. < d_r`.
    pub fn lower(&self) -> &[usize] {
        &self.lower
    }

    /// Upper-barred numbers `u_1 < .. < u_s`.
    pub fn upper(&self) -> &[usize] {
        &self.upper
    }

    pub fn permutation(&self) -> Permutation {
        self.word.to_permutation()
    }

    /// Count of upper-barred numbers in `[2, (n+1)/2]` (exact midpoint).
    pub fn upsilon_upper(&self) -> usize {
        let n = self.rank();
        self.upper.iter().filter(|&&u| 2 * u <= n + 1).count()
    }

    /// Count of lower-barred numbers in `[2, (n+1)/2]`.
    pub fn upsilon_lower(&self) -> usize {
        let n = self.rank();
        self.lower.iter().filter(|&&d| 2 * d <= n + 1).count()
    }

    /// The bijection `ν_c : [1, n+1] → [-ῡ, n-ῡ]`.
    ///
    /// Upper-barred `u_j` with `j ≤ ῡ` map to `-j`; the chain
    /// `1, d_1, .., d_r, n+1` maps to `0, 1, .., r+1`; upper-barred `u_j`
    /// with `j > ῡ` map to `n+1-j`.
    pub fn nu(&self, i: usize) -> Result<i64> {
        let n = self.rank();
        if i == 0 || i > n + 1 {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n + 1,
            });
        }
        let bar = self.upsilon_upper();
        if let Some(j) = self.upper.iter().position(|&u| u == i) {
            let j = j + 1;
            return Ok(if j <= bar {
                -(j as i64)
            } else {
                (n + 1 - j) as i64
            });
        }
        if i == 1 {
            return Ok(0);
        }
        if i == n + 1 {
            return Ok(self.lower.len() as i64 + 1);
        }
        let pos = self.lower.iter().position(|&d| d == i).unwrap();
        Ok(pos as i64 + 1)
    }

    pub fn nu_table(&self) -> Vec<i64> {
        (1..=self.rank() + 1).map(|i| self.nu(i).unwrap()).collect()
    }

    /// `σ_c`: one-line notation `(n+1) d_r .. d_1 1 u_1 .. u_s`.
    pub fn sigma(&self) -> Permutation {
        let n = self.rank();
        let mut image = Vec::with_capacity(n + 1);
        image.push(n + 1);
        image.extend(self.lower.iter().rev());
        image.push(1);
        image.extend(&self.upper);
        Permutation::from_one_line(image).expect("sigma is a permutation by construction")
    }

    /// `c^k(x)`: walks `k` steps along the cycle `(1 d_1 .. d_r (n+1) u_s .. u_1)`.
    pub fn power(&self, k: usize, x: usize) -> Result<usize> {
        let n = self.rank();
        if x == 0 || x > n + 1 {
            return Err(Error::IndexOutOfRange {
                index: x,
                max: n + 1,
            });
        }
        let pos = self.cycle_pos[x - 1];
        Ok(self.cycle[(pos + k) % (n + 1)])
    }

    /// The Coxeter element of the reversed word; its barred partition is the
    /// swap of this one's.
    pub fn inverse(&self) -> CoxeterElement {
        let mut letters = self.word.letters().to_vec();
        letters.reverse();
        CoxeterElement::new(Word::new(self.rank(), letters).unwrap())
            .expect("reversal preserves the Coxeter property")
    }
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

impl Serialize for CoxeterElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
