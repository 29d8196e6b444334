//! Order polytopes of heaps, Birkhoff subpolytopes from vertex lists, exact
//! affine dimension, normalized volume, and the arbitrary-reduced-word
//! probe comparing the two constructions.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::heap::Heap;
use crate::matrix::{affine_dimension_of, Int, Rat};
use crate::perm::{Permutation, Word};

/// The order polytope of a heap, represented by its vertex set: the
/// indicator vectors of order ideals. Points satisfy `0 ≤ x ≤ 1` and
/// `x_i ≥ x_j` whenever `i ⪯ j`, so the polytope is full-dimensional in
/// dimension `ℓ`.
#[derive(Debug, Clone)]
pub struct OrderPolytope {
    dim: usize,
    vertices: Vec<Vec<u8>>,
}

impl OrderPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in ideal-bitset order.
    pub fn vertices(&self) -> &[Vec<u8>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

pub fn order_polytope(heap: &Heap, guard: usize) -> Result<OrderPolytope> {
    let ideals = heap.ideals(guard)?;
    let dim = heap.len();
    let vertices = ideals
        .into_iter()
        .map(|ideal| {
            (1..=dim)
                .map(|element| u8::from(ideal.contains(element)))
                .collect()
        })
        .collect();
    Ok(OrderPolytope { dim, vertices })
}

/// Membership test for the order polytope directly from its inequalities.
pub fn membership(heap: &Heap, x: &[Rat]) -> Result<bool> {
    if x.len() != heap.len() {
        return Err(Error::ShapeMismatch {
            expected: heap.len(),
            got: x.len(),
        });
    }
    let zero = Rat::zero();
    let one = Rat::one();
    if x.iter().any(|value| *value < zero || *value > one) {
        return Ok(false);
    }
    for i in 1..=heap.len() {
        for j in 1..=heap.len() {
            if i != j && heap.leq(i, j) && x[i - 1] < x[j - 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Normalized volume of the order polytope: the number of linear extensions
/// of the heap.
pub fn normalized_volume(heap: &Heap, guard: usize) -> Result<BigUint> {
    heap.count_linear_extensions(guard)
}

/// A finite list of integer points in a common ambient dimension.
#[derive(Debug, Clone)]
pub struct VertexCloud {
    pub ambient_dim: usize,
    pub points: Vec<Vec<Int>>,
}

impl VertexCloud {
    pub fn from_permutations<'a>(perms: impl IntoIterator<Item = &'a Permutation>) -> VertexCloud {
        let mut ambient_dim = 0;
        let points = perms
            .into_iter()
            .map(|w| {
                let d = w.degree();
                ambient_dim = d * d;
                let mut flat = vec![Int::zero(); d * d];
                for i in 1..=d {
                    flat[(i - 1) * d + (w.apply(i) - 1)] = Int::one();
                }
                flat
            })
            .collect();
        VertexCloud {
            ambient_dim,
            points,
        }
    }

    pub fn affine_dimension(&self) -> Result<usize> {
        let rational: Vec<Vec<Rat>> = self
            .points
            .iter()
            .map(|p| p.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        affine_dimension_of(&rational)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Vertex counts and dimensions match; equivalence is not refuted (and
    /// not proven either).
    PossibleEquivalent,
    /// A dimension or vertex-count mismatch refutes unimodular equivalence.
    Counterexample,
}

/// Comparison of the order polytope of `Heap(u)` against the convex hull of
/// the permutation matrices of its order-ideal subwords.
#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub word: Word,
    pub ideal_count: usize,
    pub distinct_matrices: usize,
    pub cloud_dim: usize,
    pub order_polytope_dim: usize,
    pub verdict: Verdict,
}

/// Builds both polytopes for an arbitrary reduced word and compares vertex
/// counts and affine dimensions. Only a mismatch is conclusive: it refutes
/// unimodular equivalence. A match leaves the question open, since finer
/// invariants are not examined here.
pub fn question81_probe(word: &Word, guard: usize) -> Result<ProbeReport> {
    let heap = Heap::of_word(word)?;
    let ideals = heap.ideals(guard)?;
    let perms: BTreeSet<Permutation> = ideals
        .iter()
        .map(|&ideal| heap.ideal_word(ideal).to_permutation())
        .collect();
    let cloud = VertexCloud::from_permutations(&perms);
    let cloud_dim = cloud.affine_dimension()?;
    let order_polytope_dim = heap.len();
    let verdict = if cloud_dim == order_polytope_dim && perms.len() == ideals.len() {
        Verdict::PossibleEquivalent
    } else {
        Verdict::Counterexample
    };
    Ok(ProbeReport {
        word: word.clone(),
        ideal_count: ideals.len(),
        distinct_matrices: perms.len(),
        cloud_dim,
        order_polytope_dim,
        verdict,
    })
}
