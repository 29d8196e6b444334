//! Heaps of reduced words: the labeled poset on `{1..ℓ}` generated by
//! `x ≺ y` for `x < y` with `|label(x) - label(y)| ≤ 1`, together with order
//! ideals, linear extensions, and commutation classes.
//!
//! Elements are carried in `u64` bitsets (bit `i-1` for element `i`), which
//! caps heaps at 64 elements; that covers every reduced word up to rank 10.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Word;

pub const MAX_HEAP_ELEMENTS: usize = 64;

/// Default cap on enumerations of order ideals.
pub const DEFAULT_IDEAL_GUARD: usize = 1 << 20;

/// Default cap on heap size for whole-commutation-class listings.
pub const DEFAULT_EXTENSION_GUARD: usize = 16;

/// Default cap on commutation-class frontiers.
pub const DEFAULT_CLASS_GUARD: usize = 1_000_000;

/// The heap of a reduced word: labels plus the full order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heap {
    n: usize,
    labels: Vec<usize>,
    /// `below[x]` is the bitset of strict predecessors of element `x+1`.
    below: Vec<u64>,
    /// Grid coordinates `(a, b)` per element; set by the grid construction.
    coords: Option<Vec<(usize, usize)>>,
}

/// An order ideal of some heap, as a bitset of its elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderIdeal(pub u64);

impl OrderIdeal {
    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, element: usize) -> bool {
        self.0 >> (element - 1) & 1 == 1
    }

    /// Elements in increasing order (1-based).
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=64).filter(move |&e| mask >> (e - 1) & 1 == 1)
    }
}

impl Heap {
    /// Heap of a reduced word. Rejects non-reduced input and words past the
    /// bitset capacity.
    pub fn of_word(word: &Word) -> Result<Heap> {
        if word.len() > MAX_HEAP_ELEMENTS {
            return Err(Error::GuardExceeded {
                what: "building a heap",
                limit: MAX_HEAP_ELEMENTS,
            });
        }
        if !word.is_reduced() {
            return Err(Error::NotReduced);
        }
        Ok(Self::of_letters_unchecked(
            word.rank(),
            word.letters(),
            None,
        ))
    }

    pub(crate) fn of_letters_unchecked(
        n: usize,
        letters: &[usize],
        coords: Option<Vec<(usize, usize)>>,
    ) -> Heap {
        let len = letters.len();
        assert!(len <= MAX_HEAP_ELEMENTS, "heap limited to 64 elements");
        let mut below = vec![0u64; len];
        for y in 0..len {
            for x in 0..y {
                if letters[x].abs_diff(letters[y]) <= 1 {
                    below[y] |= below[x] | (1 << x);
                }
            }
        }
        Heap {
            n,
            labels: letters.to_vec(),
            below,
            coords,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Rank of the ambient group (labels lie in `[1, n]`).
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Label of element `x` (1-based).
    pub fn label(&self, x: usize) -> usize {
        self.labels[x - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn coords(&self) -> Option<&[(usize, usize)]> {
        self.coords.as_deref()
    }

    /// `x ⪯ y` in the heap order (reflexive).
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.below[y - 1] >> (x - 1) & 1 == 1
    }

    /// Cover relations as `(lower, upper)` pairs in lexicographic order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 1..=self.len() {
            let preds = self.below[y - 1];
            for x in 1..y {
                if preds >> (x - 1) & 1 == 0 {
                    continue;
                }
                // x covers y iff nothing sits strictly between them
                let strict_mid = (1..y).any(|z| {
                    z != x && preds >> (z - 1) & 1 == 1 && self.below[z - 1] >> (x - 1) & 1 == 1
                });
                if !strict_mid {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Validates a bitset as a downward-closed subset.
    pub fn ideal(&self, mask: u64) -> Result<OrderIdeal> {
        if self.is_ideal(mask) {
            Ok(OrderIdeal(mask))
        } else {
            Err(Error::Parse(format!("{mask:#x} is not an order ideal")))
        }
    }

    pub fn is_ideal(&self, mask: u64) -> bool {
        (1..=self.len())
            .filter(|&y| mask >> (y - 1) & 1 == 1)
            .all(|y| self.below[y - 1] & !mask == 0)
    }

    /// Elements addable to the ideal `mask` (minimal elements of the
    /// complement whose predecessors are all in `mask`).
    fn addable(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len())
            .filter(move |&x| mask >> (x - 1) & 1 == 0 && self.below[x - 1] & !mask == 0)
    }

    /// All order ideals, sorted by bitset value.
    pub fn ideals(&self, guard: usize) -> Result<Vec<OrderIdeal>> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(0u64);
        queue.push_back(0u64);
        while let Some(mask) = queue.pop_front() {
            for x in self.addable(mask) {
                let next = mask | 1 << (x - 1);
                if seen.insert(next) {
                    if seen.len() > guard {
                        return Err(Error::GuardExceeded {
                            what: "enumerating order ideals",
                            limit: guard,
                        });
                    }
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out.into_iter().map(OrderIdeal).collect())
    }

    /// Number of linear extensions, counted as maximal chains in the lattice
    /// of order ideals (path count from the empty ideal to the full one).
    pub fn count_linear_extensions(&self, guard: usize) -> Result<BigUint> {
        let ideals = self.ideals(guard)?;
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); self.len() + 1];
        for ideal in &ideals {
            by_size[ideal.len()].push(ideal.mask());
        }
        let mut paths: HashMap<u64, BigUint> = HashMap::new();
        paths.insert(0, BigUint::one());
        for masks in by_size.iter().take(self.len()) {
            for &mask in masks {
                let Some(count) = paths.get(&mask).cloned() else {
                    continue;
                };
                if count.is_zero() {
                    continue;
                }
                for x in self.addable(mask) {
                    let next = mask | 1 << (x - 1);
                    *paths.entry(next).or_insert_with(BigUint::zero) += &count;
                }
            }
        }
        let full = if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        };
        Ok(paths.remove(&full).expect("full ideal is reachable"))
    }

    /// The set of labeled linear extensions, i.e. the commutation class of
    /// the defining word. Guarded by heap size since the class can be
    /// factorially large.
    pub fn labeled_linear_extensions(&self, guard: usize) -> Result<BTreeSet<Word>> {
        if self.len() > guard {
            return Err(Error::GuardExceeded {
                what: "listing labeled linear extensions",
                limit: guard,
            });
        }
        let mut out = BTreeSet::new();
        let mut stack = vec![(0u64, Vec::new())];
        while let Some((mask, prefix)) = stack.pop() {
            if prefix.len() == self.len() {
                out.insert(Word::new(self.n, prefix).unwrap());
                continue;
            }
            for x in self.addable(mask) {
                let mut next_prefix = prefix.clone();
                next_prefix.push(self.labels[x - 1]);
                stack.push((mask | 1 << (x - 1), next_prefix));
            }
        }
        Ok(out)
    }

    /// Subword of the defining word at the positions of an ideal.
    pub fn ideal_word(&self, ideal: OrderIdeal) -> Word {
        let letters = ideal.elements().map(|x| self.labels[x - 1]).collect();
        Word::new(self.n, letters).unwrap()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "length": self.len(),
            "labels": self.labels,
            "covers": self.covers(),
            "coords": self.coords.as_ref().map(|cs| {
                cs.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>()
            }),
        })
    }
}

/// The commutation class of a reduced word, by breadth-first search over
/// adjacent swaps of letters at distance ≥ 2.
pub fn commutation_class(word: &Word, cap: usize) -> Result<BTreeSet<Vec<usize>>> {
    if !word.is_reduced() {
        return Err(Error::NotReduced);
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.letters().to_vec());
    queue.push_back(word.letters().to_vec());
    while let Some(current) = queue.pop_front() {
        for i in 0..current.len().saturating_sub(1) {
            if current[i].abs_diff(current[i + 1]) >= 2 {
                let mut next = current.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::GuardExceeded {
                            what: "commutation-class search",
                            limit: cap,
                        });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// All reduced words of a permutation, by search over both commutation and
/// braid moves.
pub fn reduced_words(word: &Word, cap: usize) -> Result<BTreeSet<Vec<usize>>> {
    if !word.is_reduced() {
        return Err(Error::NotReduced);
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.letters().to_vec());
    queue.push_back(word.letters().to_vec());
    while let Some(current) = queue.pop_front() {
        let push = |next: Vec<usize>,
                    seen: &mut BTreeSet<Vec<usize>>,
                    queue: &mut VecDeque<Vec<usize>>|
         -> Result<()> {
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::GuardExceeded {
                        what: "reduced-word search",
                        limit: cap,
                    });
                }
                queue.push_back(next);
            }
            Ok(())
        };
        for i in 0..current.len().saturating_sub(1) {
            if current[i].abs_diff(current[i + 1]) >= 2 {
                let mut next = current.clone();
                next.swap(i, i + 1);
                push(next, &mut seen, &mut queue)?;
            }
        }
        // braid move: aba ↔ bab for |a-b| = 1
        for i in 0..current.len().saturating_sub(2) {
            let (a, b) = (current[i], current[i + 1]);
            if current[i + 2] == a && a.abs_diff(b) == 1 {
                let mut next = current.clone();
                next[i] = b;
                next[i + 1] = a;
                next[i + 2] = b;
                push(next, &mut seen, &mut queue)?;
            }
        }
    }
    Ok(seen)
}
