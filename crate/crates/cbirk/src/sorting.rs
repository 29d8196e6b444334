//! c-sorting words, c-sortable and c-singleton tests, the diagonal reading
//! word `R_c`, the grid construction of the heap `H_c`, and the singleton ↔
//! order-ideal dictionary used by the projection and transfer machinery.

use std::collections::BTreeMap;

use crate::coxeter::CoxeterElement;
use crate::error::{Error, Result};
use crate::heap::{commutation_class, Heap, OrderIdeal, DEFAULT_CLASS_GUARD, DEFAULT_IDEAL_GUARD};
use crate::perm::{Permutation, Word};

/// The c-sorting word of `w`: the lexicographically first reduced subword of
/// `c^∞` for `w`. Returned together with the block index (copy of `c`) each
/// letter was taken from.
pub fn c_sorting_word_blocks(c: &CoxeterElement, w: &Permutation) -> (Word, Vec<usize>) {
    let n = c.rank();
    let mut current = w.clone();
    let mut letters = Vec::with_capacity(w.length());
    let mut blocks = Vec::with_capacity(w.length());
    let mut pass = 0;
    while !current.is_identity() {
        for &q in c.word().letters() {
            if current.has_left_descent(q) {
                letters.push(q);
                blocks.push(pass);
                current.left_multiply(q);
            }
        }
        pass += 1;
    }
    (Word::new(n, letters).unwrap(), blocks)
}

pub fn c_sorting_word(c: &CoxeterElement, w: &Permutation) -> Word {
    c_sorting_word_blocks(c, w).0
}

/// True iff the divider blocks of the c-sorting word are nested as sets.
pub fn is_c_sortable(c: &CoxeterElement, w: &Permutation) -> bool {
    let (word, blocks) = c_sorting_word_blocks(c, w);
    let Some(&last) = blocks.last() else {
        return true; // identity
    };
    let mut sets: Vec<u64> = vec![0; last + 1];
    for (&letter, &block) in word.letters().iter().zip(&blocks) {
        sets[block] |= 1 << letter;
    }
    sets.windows(2).all(|w| w[1] & !w[0] == 0)
}

/// c-singleton test via the barred one-line criterion: every lower-barred
/// `d` must be followed by all of `[1,d-1]` or all of `[d+1,n+1]`, and every
/// upper-barred `u` preceded by all of `[1,u-1]` or all of `[u+1,n+1]`.
pub fn is_c_singleton(c: &CoxeterElement, w: &Permutation) -> bool {
    let n = c.rank();
    let pos = w.inverse();
    let all_after = |v: usize, lo: usize, hi: usize| (lo..=hi).all(|x| pos.apply(x) > pos.apply(v));
    let all_before =
        |v: usize, lo: usize, hi: usize| (lo..=hi).all(|x| pos.apply(x) < pos.apply(v));
    c.lower()
        .iter()
        .all(|&d| all_after(d, 1, d - 1) || all_after(d, d + 1, n + 1))
        && c.upper()
            .iter()
            .all(|&u| all_before(u, 1, u - 1) || all_before(u, u + 1, n + 1))
}

fn avoids(w: &Permutation, pattern: [usize; 3], barred: &[usize], barred_index: usize) -> bool {
    let d = w.degree();
    for i in 1..=d {
        for j in i + 1..=d {
            for k in j + 1..=d {
                let vals = [w.apply(i), w.apply(j), w.apply(k)];
                let mut order = [0usize; 3];
                let mut sorted: Vec<(usize, usize)> =
                    vals.iter().copied().enumerate().collect::<Vec<_>>();
                sorted.sort_by_key(|&(_, v)| v);
                for (rank, &(idx, _)) in sorted.iter().enumerate() {
                    order[idx] = rank + 1;
                }
                if order == pattern && barred.contains(&vals[barred_index]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Sortability by pattern avoidance: `w` avoids 312 with lower-barred "2"
/// and 231 with upper-barred "2".
pub fn is_c_sortable_patterns(c: &CoxeterElement, w: &Permutation) -> bool {
    avoids(w, [3, 1, 2], c.lower(), 2) && avoids(w, [2, 3, 1], c.upper(), 0)
}

/// Singleton test by avoidance of all four barred patterns.
pub fn is_c_singleton_patterns(c: &CoxeterElement, w: &Permutation) -> bool {
    is_c_sortable_patterns(c, w)
        && avoids(w, [1, 3, 2], c.lower(), 2)
        && avoids(w, [2, 1, 3], c.upper(), 0)
}

/// Test-grade oracle: `w` is a c-singleton iff it arises from a prefix of a
/// word in the commutation class of the c-sorting word of `w0`. Exponential;
/// guarded by rank.
pub fn is_c_singleton_oracle(c: &CoxeterElement, w: &Permutation) -> Result<bool> {
    let n = c.rank();
    if n > 5 {
        return Err(Error::GuardExceeded {
            what: "commutation-class prefix oracle",
            limit: 5,
        });
    }
    Ok(singleton_prefix_set(c)?.contains(w))
}

/// The set of permutations of all prefixes of all words in the commutation
/// class of the c-sorting word of `w0`.
pub fn singleton_prefix_set(c: &CoxeterElement) -> Result<std::collections::BTreeSet<Permutation>> {
    let n = c.rank();
    let sort_w0 = c_sorting_word(c, &Permutation::longest(n));
    let class = commutation_class(&sort_w0, DEFAULT_CLASS_GUARD)?;
    let mut out = std::collections::BTreeSet::new();
    for letters in class {
        let mut w = Permutation::identity(n);
        out.insert(w.clone());
        for &q in &letters {
            w.right_multiply(q);
            out.insert(w.clone());
        }
    }
    Ok(out)
}

/// The diagonal reading word `R_c`: decreasing runs `(d_i - 1)..1` for each
/// lower-barred number, the full run `n..1`, then runs `n..(n - u_i + 2)`
/// for upper-barred numbers in decreasing order. Length is always
/// `binomial(n+1, 2)`.
pub fn diagonal_reading_word(c: &CoxeterElement) -> Word {
    let n = c.rank();
    let mut letters = Vec::with_capacity(n * (n + 1) / 2);
    for &d in c.lower() {
        letters.extend((1..d).rev());
    }
    letters.extend((1..=n).rev());
    for &u in c.upper().iter().rev() {
        letters.extend((n - u + 2..=n).rev());
    }
    Word::new(n, letters).unwrap()
}

/// The heap `H_c` of the diagonal reading word, with grid coordinates: the
/// long diagonal `(n,1)..(1,n)`, a flushed-left diagonal of `d_i - 1`
/// vertices below it per lower-barred number, and a flushed-right diagonal
/// of `u_i - 1` vertices above it per upper-barred number. Each vertex
/// `(a, b)` is labeled `a`; elements are numbered along diagonals left to
/// right, each read southeast to northwest.
pub fn heap_grid(c: &CoxeterElement) -> Heap {
    let n = c.rank();
    let r = c.lower().len();
    let s = c.upper().len();
    let mut coords = Vec::with_capacity(n * (n + 1) / 2);
    for (i, &d) in c.lower().iter().enumerate() {
        let i = i + 1;
        // diagonal a + b = n - r + i, from a = d-1 down to 1
        for a in (1..d).rev() {
            coords.push((a, n - r + i - a));
        }
    }
    for a in (1..=n).rev() {
        coords.push((a, n + 1 - a));
    }
    for (i, &u) in c.upper().iter().enumerate().rev() {
        let i = i + 1;
        // diagonal a + b = n + 2 + s - i, from a = n down to n - u + 2
        for a in (n - u + 2..=n).rev() {
            coords.push((a, n + 2 + s - i - a));
        }
    }
    let letters: Vec<usize> = coords.iter().map(|&(a, _)| a).collect();
    debug_assert_eq!(letters, diagonal_reading_word(c).letters());
    Heap::of_letters_unchecked(n, &letters, Some(coords))
}

/// All c-singletons together with their order ideals in the heap of the
/// c-sorting word of `w0`, ordered by (ideal size, bitset value). The
/// permutation attached to an ideal `I` is the product of the subword of the
/// sorting word at positions `I`.
pub fn singletons(c: &CoxeterElement, guard: usize) -> Result<Vec<(Permutation, OrderIdeal)>> {
    let heap = Heap::of_word(&c_sorting_word(c, &Permutation::longest(c.rank())))?;
    singleton_pairs(&heap, guard)
}

/// Direct form of the singleton → ideal map, inverse to the subword
/// construction in [`singletons`]: both sorting words occupy canonical
/// letter slots of `c^∞` (block index, position of the letter in `c`), and
/// the slots of `sort_c(w)` sit inside those of `sort_c(w0)`. Rejects
/// non-singletons, whose slot set fails to be an ideal with the right
/// subword.
pub fn singleton_ideal(c: &CoxeterElement, w: &Permutation) -> Result<OrderIdeal> {
    let n = c.rank();
    let mut slot = vec![0usize; n + 1];
    for (idx, &letter) in c.word().letters().iter().enumerate() {
        slot[letter] = idx;
    }
    let (v, v_blocks) = c_sorting_word_blocks(c, &Permutation::longest(n));
    let (u, u_blocks) = c_sorting_word_blocks(c, w);
    let u_slots: std::collections::BTreeSet<usize> = u
        .letters()
        .iter()
        .zip(&u_blocks)
        .map(|(&letter, &block)| block * n + slot[letter])
        .collect();
    let mut mask = 0u64;
    for (p, (&letter, &block)) in v.letters().iter().zip(&v_blocks).enumerate() {
        if u_slots.contains(&(block * n + slot[letter])) {
            mask |= 1 << p;
        }
    }
    if mask.count_ones() as usize != u.len() {
        return Err(Error::NotASingleton);
    }
    let heap = Heap::of_word(&v)?;
    if heap.is_ideal(mask) && v.subword(mask).letters() == u.letters() {
        Ok(OrderIdeal(mask))
    } else {
        Err(Error::NotASingleton)
    }
}

fn singleton_pairs(heap: &Heap, guard: usize) -> Result<Vec<(Permutation, OrderIdeal)>> {
    let mut ideals = heap.ideals(guard)?;
    ideals.sort_by_key(|ideal| (ideal.len(), ideal.mask()));
    Ok(ideals
        .into_iter()
        .map(|ideal| (heap.ideal_word(ideal).to_permutation(), ideal))
        .collect())
}

/// Per-element dictionary between c-singletons and order ideals of the grid
/// heap `H_c`, the form consumed by o-vectors and the transfer matrix.
#[derive(Debug, Clone)]
pub struct SingletonTable {
    c: CoxeterElement,
    heap: Heap,
    reading: Word,
    pairs: Vec<(Permutation, OrderIdeal)>,
    ideal_of: BTreeMap<Permutation, OrderIdeal>,
}

impl SingletonTable {
    pub fn new(c: &CoxeterElement) -> Result<Self> {
        Self::with_guard(c, DEFAULT_IDEAL_GUARD)
    }

    pub fn with_guard(c: &CoxeterElement, guard: usize) -> Result<Self> {
        let heap = heap_grid(c);
        let reading = diagonal_reading_word(c);
        let pairs = singleton_pairs(&heap, guard)?;
        let ideal_of = pairs.iter().cloned().collect();
        Ok(SingletonTable {
            c: c.clone(),
            heap,
            reading,
            pairs,
            ideal_of,
        })
    }

    pub fn coxeter(&self) -> &CoxeterElement {
        &self.c
    }

    pub fn heap(&self) -> &Heap {
        &self.heap
    }

    pub fn reading_word(&self) -> &Word {
        &self.reading
    }

    /// Singleton/ideal pairs ordered by (ideal size, bitset value).
    pub fn pairs(&self) -> &[(Permutation, OrderIdeal)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.ideal_of.contains_key(w)
    }

    /// The order ideal `f(w)` of `H_c` attached to a singleton.
    pub fn ideal_of(&self, w: &Permutation) -> Result<OrderIdeal> {
        self.ideal_of.get(w).copied().ok_or(Error::NotASingleton)
    }
}

/// The alternating decreasing sequence `a_0 > a_1 > ... > a_2k` attached to
/// an ideal containing element 1: `a_0` is the maximum of the ideal, and the
/// iteration alternates between the largest missing element below and the
/// largest present element below, stopping once the ideal contains a full
/// initial segment.
pub fn a_sequence(table: &SingletonTable, w: &Permutation) -> Result<Vec<usize>> {
    let ideal = table.ideal_of(w)?;
    if !ideal.contains(1) {
        return Err(Error::IdealWithoutElementOne);
    }
    Ok(a_sequence_of_ideal(ideal))
}

pub(crate) fn a_sequence_of_ideal(ideal: OrderIdeal) -> Vec<usize> {
    debug_assert!(ideal.contains(1));
    let contains_prefix = |m: usize| (1..=m).all(|x| ideal.contains(x));
    let mut seq = vec![ideal.elements().max().expect("ideal contains 1")];
    loop {
        let last = *seq.last().unwrap();
        if contains_prefix(last) {
            return seq;
        }
        let missing = (1..last).rev().find(|&x| !ideal.contains(x)).unwrap();
        let present = (1..missing).rev().find(|&x| ideal.contains(x)).unwrap();
        seq.push(missing);
        seq.push(present);
    }
}
