//! Linear relation families satisfied by every point in the affine span of
//! the c-singleton permutation matrices: row/column sums, forced zero
//! entries, and the top-sum / bottom-sum families indexed by residue
//! classes of `ν_c` and `ν_{c⁻¹}`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::coxeter::CoxeterElement;
use crate::error::{Error, Result};
use crate::matrix::{rank_int, Int, Matrix, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RelationTag {
    Row { i: usize },
    Column { j: usize },
    Zero { i: usize, j: usize },
    TopSum { y: usize, z: usize },
    BottomSum { y: usize, z: usize },
}

/// A sparse affine relation `Σ coeffs[(i,j)] · X(i,j) = rhs` on
/// `(n+1) × (n+1)` matrices, indices 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRelation {
    pub coeffs: BTreeMap<(usize, usize), Rat>,
    pub rhs: Rat,
    pub tag: RelationTag,
}

impl LinearRelation {
    fn unit_sum(
        cells: impl IntoIterator<Item = (usize, usize)>,
        rhs: i64,
        tag: RelationTag,
    ) -> Self {
        let coeffs = cells
            .into_iter()
            .map(|cell| (cell, Rat::one()))
            .collect::<BTreeMap<_, _>>();
        debug_assert!(!coeffs.is_empty());
        LinearRelation {
            coeffs,
            rhs: Rat::from_integer(Int::from(rhs)),
            tag,
        }
    }

    pub fn evaluate(&self, x: &Matrix) -> Rat {
        self.coeffs
            .iter()
            .map(|(&(i, j), coeff)| coeff * x.get(i - 1, j - 1))
            .sum()
    }

    pub fn holds_on(&self, x: &Matrix) -> bool {
        self.evaluate(x) == self.rhs
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "tag": self.tag,
            "rhs": self.rhs.to_string(),
            "cells": self.coeffs.keys().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
        })
    }
}

/// The `2(n+1)` row-sum and column-sum relations.
pub fn row_col_relations(n: usize) -> Vec<LinearRelation> {
    let d = n + 1;
    let mut out = Vec::with_capacity(2 * d);
    for i in 1..=d {
        out.push(LinearRelation::unit_sum(
            (1..=d).map(move |j| (i, j)),
            1,
            RelationTag::Row { i },
        ));
    }
    for j in 1..=d {
        out.push(LinearRelation::unit_sum(
            (1..=d).map(move |i| (i, j)),
            1,
            RelationTag::Column { j },
        ));
    }
    out
}

/// Matrix entries forced to zero on the whole affine span: `(i, u)` for
/// upper-barred `u` with `i ≤ min(u-1, n+1-u)`, and `(i, d)` for
/// lower-barred `d` with `i ≥ max(d+1, n+3-d)`.
pub fn zero_entries(c: &CoxeterElement) -> BTreeSet<(usize, usize)> {
    let n = c.rank();
    let mut out = BTreeSet::new();
    for &u in c.upper() {
        for i in 1..=usize::min(u - 1, n + 1 - u) {
            out.insert((i, u));
        }
    }
    for &d in c.lower() {
        for i in usize::max(d + 1, n + 3 - d)..=n + 1 {
            out.insert((i, d));
        }
    }
    out
}

pub fn zero_relations(c: &CoxeterElement) -> Vec<LinearRelation> {
    zero_entries(c)
        .into_iter()
        .map(|(i, j)| LinearRelation::unit_sum([(i, j)], 0, RelationTag::Zero { i, j }))
        .collect()
}

fn canonical_residue(z: i64, y: usize) -> usize {
    z.rem_euclid(y as i64) as usize
}

/// Columns whose `ν` value is congruent to `z` modulo `y`.
fn residue_columns(nu_table: &[i64], y: usize, z: usize) -> Vec<usize> {
    nu_table
        .iter()
        .enumerate()
        .filter(|(_, &v)| canonical_residue(v, y) == z)
        .map(|(idx, _)| idx + 1)
        .collect()
}

/// Top-sum relation: rows `1..y` over the columns with `ν_c ≡ z (mod y)`.
/// Requires `2 ≤ y < (n+2)/2`, with `y = (n+2)/2` admitted only when that
/// number is lower-barred.
pub fn top_sum_relation(c: &CoxeterElement, y: usize, z: i64) -> Result<LinearRelation> {
    let n = c.rank();
    let boundary_ok = 2 * y == n + 2 && c.lower().contains(&y);
    if y < 2 || (2 * y >= n + 2 && !boundary_ok) {
        return Err(Error::RelationRangeError { y });
    }
    let z = canonical_residue(z, y);
    let columns = residue_columns(&c.nu_table(), y, z);
    let cells = columns
        .into_iter()
        .flat_map(|j| (1..=y).map(move |i| (i, j)));
    Ok(LinearRelation::unit_sum(
        cells,
        1,
        RelationTag::TopSum { y, z },
    ))
}

/// Bottom-sum relation: rows `n+2-y..n+1` over the columns with
/// `ν_{c⁻¹} ≡ z (mod y)`. Requires `2 ≤ y < (n+2)/2`, with `y = (n+2)/2`
/// admitted only when that number is upper-barred.
pub fn bottom_sum_relation(c: &CoxeterElement, y: usize, z: i64) -> Result<LinearRelation> {
    let n = c.rank();
    let boundary_ok = 2 * y == n + 2 && c.upper().contains(&y);
    if y < 2 || (2 * y >= n + 2 && !boundary_ok) {
        return Err(Error::RelationRangeError { y });
    }
    let z = canonical_residue(z, y);
    let columns = residue_columns(&c.inverse().nu_table(), y, z);
    let cells = columns
        .into_iter()
        .flat_map(move |j| (n + 2 - y..=n + 1).map(move |i| (i, j)));
    Ok(LinearRelation::unit_sum(
        cells,
        1,
        RelationTag::BottomSum { y, z },
    ))
}

/// A maximal linearly independent relation set: all row sums, column sums
/// for columns `2..n+1`, every zero relation, and the top/bottom sums with
/// `z = ν(x)` for `x ∈ [2, y]`, where `y` runs to `(n+1)/2` (top) and
/// `(n-1)/2` (bottom) for odd rank, and to `n/2` for both families when the
/// rank is even. The list always has `(n+1)² - binomial(n+1, 2)` members.
pub fn independent_relation_set(c: &CoxeterElement) -> Vec<LinearRelation> {
    let n = c.rank();
    let mut out = Vec::new();
    for rel in row_col_relations(n) {
        let keep = match rel.tag {
            RelationTag::Row { .. } => true,
            RelationTag::Column { j } => j >= 2,
            _ => unreachable!(),
        };
        if keep {
            out.push(rel);
        }
    }
    out.extend(zero_relations(c));
    let (top_max, bottom_max) = if n.is_multiple_of(2) {
        (n / 2, n / 2)
    } else {
        (n.div_ceil(2), (n - 1) / 2)
    };
    let nu = c.nu_table();
    for y in 2..=top_max {
        for x in 2..=y {
            out.push(top_sum_relation(c, y, nu[x - 1]).expect("y below the admissible bound"));
        }
    }
    let nu_inv = c.inverse().nu_table();
    for y in 2..=bottom_max {
        for x in 2..=y {
            out.push(
                bottom_sum_relation(c, y, nu_inv[x - 1]).expect("y below the admissible bound"),
            );
        }
    }
    out
}

/// Rank of a relation list, by fraction-free elimination on the coefficient
/// vectors (one column per matrix entry).
pub fn relation_rank(relations: &[LinearRelation], n: usize) -> usize {
    let d = n + 1;
    let rows: Vec<Vec<Int>> = relations
        .iter()
        .map(|rel| {
            let mut row = vec![Int::zero(); d * d];
            for (&(i, j), coeff) in &rel.coeffs {
                debug_assert!(coeff.is_integer());
                row[(i - 1) * d + (j - 1)] = coeff.numer().clone();
            }
            row
        })
        .collect();
    rank_int(rows)
}
