//! The ordered entry-selection `Π_c` from `(n+1) × (n+1)` matrices to
//! vectors of length `binomial(n+1, 2)`, and its constructive inverse on
//! the affine span of the c-singleton matrices.
//!
//! The selected cells are read column-runs first (lower-barred columns, then
//! column `n+1`), then per upper-barred number a hook of cells below the
//! main diagonal located by powers of the defining cycle, and the whole list
//! is reversed at the end.

use num_traits::{One, Zero};

use crate::coxeter::CoxeterElement;
use crate::error::{Error, Result};
use crate::matrix::{solve_square, Int, Matrix, Rat};
use crate::perm::Permutation;
use crate::relations;

/// The ordered cell list of `Π_c`; a pure function of the barred partition,
/// built once per element and reused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    n: usize,
    entries: Vec<(usize, usize)>,
}

impl Projection {
    pub fn new(c: &CoxeterElement) -> Projection {
        let n = c.rank();
        let mut entries = Vec::with_capacity(n * (n + 1) / 2);
        for &d in c.lower() {
            for i in (1..d).rev() {
                entries.push((i, d));
            }
        }
        for i in (1..=n).rev() {
            entries.push((i, n + 1));
        }
        for &u in c.upper().iter().rev() {
            let m = usize::min(u - 1, n + 1 - u);
            for k in 1..=m {
                entries.push((n + 2 - k, c.power(k, u).expect("u in range")));
            }
            if 2 * u > n + 2 {
                for i in (m + 1..u).rev() {
                    entries.push((i, u));
                }
            }
        }
        entries.reverse();
        Projection { n, entries }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Output dimension `binomial(n+1, 2)`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Selected cells in output order, 1-based.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn project(&self, x: &Matrix) -> Result<Vec<Rat>> {
        if x.rows() != self.n + 1 || x.cols() != self.n + 1 {
            return Err(Error::ShapeMismatch {
                expected: self.n + 1,
                got: x.rows(),
            });
        }
        Ok(self
            .entries
            .iter()
            .map(|&(i, j)| x.get(i - 1, j - 1).clone())
            .collect())
    }

    /// Projection of a permutation matrix, kept integral.
    pub fn project_perm(&self, w: &Permutation) -> Vec<Int> {
        self.entries
            .iter()
            .map(|&(i, j)| Int::from(u64::from(w.apply(i) == j)))
            .collect()
    }
}

/// Reconstructs the unique point of the affine span whose projection is
/// `v`, row by row: top rows from the top-sum systems, the bottom row from
/// column sums, and the remaining bottom rows from the bottom-sum systems.
pub fn reconstruct(c: &CoxeterElement, proj: &Projection, v: &[Rat]) -> Result<Matrix> {
    let n = c.rank();
    let d = n + 1;
    if v.len() != proj.len() {
        return Err(Error::ShapeMismatch {
            expected: proj.len(),
            got: v.len(),
        });
    }
    let mut grid: Vec<Vec<Option<Rat>>> = vec![vec![None; d]; d];
    for (&(i, j), value) in proj.entries().iter().zip(v) {
        grid[i - 1][j - 1] = Some(value.clone());
    }
    for &(i, j) in &relations::zero_entries(c) {
        grid[i - 1][j - 1] = Some(Rat::zero());
    }

    // top rows, solved downward
    let mid_lower = n.is_multiple_of(2) && c.lower().contains(&((n + 2) / 2));
    let top_rows = (1..=d).filter(|&k| 2 * k <= n + 1 || (2 * k == n + 2 && mid_lower));
    let nu = c.nu_table();
    for k in top_rows {
        solve_row(&mut grid, k, k, &nu, 1..=k)?;
    }

    // bottom rows, solved upward from row n+1
    let mid_upper = n.is_multiple_of(2) && c.upper().contains(&((n + 2) / 2));
    let bottom_rows: Vec<usize> = (1..=d)
        .filter(|&k| 2 * k >= n + 3 || (2 * k == n + 2 && mid_upper))
        .collect();
    let nu_inv = c.inverse().nu_table();
    for &k in bottom_rows.iter().rev() {
        // diagonal entry from the column sum; the rest of column k is known
        let mut column_rest = Rat::zero();
        for i in 1..=d {
            if i == k {
                continue;
            }
            let Some(value) = &grid[i - 1][k - 1] else {
                return Err(Error::InconsistentProjection);
            };
            column_rest += value;
        }
        grid[k - 1][k - 1] = Some(Rat::one() - column_rest);
        let y = n + 2 - k;
        solve_row(&mut grid, k, y, &nu_inv, k..=d)?;
    }

    let mut out = Matrix::zeros(d, d);
    for (i, row) in grid.into_iter().enumerate() {
        for (j, cell) in row.into_iter().enumerate() {
            out.set(i, j, cell.ok_or(Error::InconsistentProjection)?);
        }
    }
    Ok(out)
}

/// Solves the unknowns of row `k` from the residue-class equations
/// `Σ_{j in class z} Σ_{i in rows} X(i, j) = 1` for `z = 0..y-1`; all
/// entries referenced outside row `k` must already be known. Classes
/// without an unknown are vacuous here (they hold automatically on the
/// affine span), so the system keeps one equation per inhabited class and
/// must come out square.
fn solve_row(
    grid: &mut [Vec<Option<Rat>>],
    k: usize,
    y: usize,
    nu_table: &[i64],
    rows: std::ops::RangeInclusive<usize>,
) -> Result<()> {
    let d = nu_table.len();
    let unknowns: Vec<usize> = (1..=d).filter(|&j| grid[k - 1][j - 1].is_none()).collect();
    if unknowns.is_empty() {
        return Ok(());
    }
    let inhabited: Vec<usize> = (0..y)
        .filter(|&z| {
            unknowns
                .iter()
                .any(|&j| nu_table[j - 1].rem_euclid(y as i64) as usize == z)
        })
        .collect();
    let mut system = Matrix::zeros(inhabited.len(), unknowns.len());
    let mut rhs = vec![Rat::one(); inhabited.len()];
    for j in 1..=d {
        let class = nu_table[j - 1].rem_euclid(y as i64) as usize;
        let Some(row) = inhabited.iter().position(|&z| z == class) else {
            continue;
        };
        let unknown_col = unknowns.iter().position(|&u| u == j);
        for i in rows.clone() {
            if i == k {
                if let Some(col) = unknown_col {
                    system.set(row, col, Rat::one());
                    continue;
                }
            }
            let Some(value) = &grid[i - 1][j - 1] else {
                return Err(Error::InconsistentProjection);
            };
            rhs[row] -= value;
        }
    }
    let solution = solve_square(&system, &rhs).map_err(|_| Error::InconsistentProjection)?;
    for (j, value) in unknowns.into_iter().zip(solution) {
        grid[k - 1][j - 1] = Some(value);
    }
    Ok(())
}
