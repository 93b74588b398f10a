//! Dense exact linear algebra over the rationals: rank, determinants and
//! linear solves via fraction-exact Gaussian elimination.

use alloc::vec::Vec;
use num_traits::Zero;

use crate::numeric::Rat;

/// Rank of the row span.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for c in col..ncols {
            let v = &m[rank][c] * &inv;
            m[rank][c] = v;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..ncols {
                    let v = &m[r][c] - &factor * &m[rank][c];
                    m[r][c] = v;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Determinant of a square matrix.
pub fn det(mat: &[Vec<Rat>]) -> Rat {
    let n = mat.len();
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    let mut result = Rat::from_integer(1.into());
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            result = -result;
        }
        result *= m[col][col].clone();
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] * &inv;
                for c in col..n {
                    let v = &m[r][c] - &factor * &m[col][c];
                    m[r][c] = v;
                }
            }
        }
    }
    result
}

/// Solves `sum_j x_j * cols[j] = b` exactly. Returns `None` when the system
/// is inconsistent; free coordinates (columns not reached by a pivot) are set
/// to zero.
pub fn solve_columns(cols: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = cols.len();
    let nrows = b.len();
    // augmented matrix [A | b] with A[r][j] = cols[j][r]
    let mut m: Vec<Vec<Rat>> = (0..nrows)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..nrows).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for c in col..=ncols {
            let v = &m[rank][c] * &inv;
            m[rank][c] = v;
        }
        for r in 0..nrows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..=ncols {
                    let v = &m[r][c] - &factor * &m[rank][c];
                    m[r][c] = v;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    // inconsistent iff some zero row has nonzero rhs
    for r in rank..nrows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = alloc::vec![Rat::zero(); ncols];
    for (row, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[row][ncols].clone();
    }
    // with free columns fixed at zero the candidate must be re-verified
    for r in 0..nrows {
        let mut acc = Rat::zero();
        for j in 0..ncols {
            if !x[j].is_zero() {
                acc += &x[j] * &cols[j][r];
            }
        }
        if acc != b[r] {
            return None;
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_vec};

    #[test]
    fn rank_of_grid() {
        let rows = alloc::vec![rat_vec(&[1, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 1])];
        assert_eq!(rank(&rows), 2);
        assert_eq!(rank(&[rat_vec(&[0, 0])]), 0);
    }

    #[test]
    fn determinants() {
        let m = alloc::vec![rat_vec(&[2, 1]), rat_vec(&[1, 1])];
        assert_eq!(det(&m), rat(1));
        let sing = alloc::vec![rat_vec(&[1, 2]), rat_vec(&[2, 4])];
        assert_eq!(det(&sing), rat(0));
    }

    #[test]
    fn solve_simple() {
        let cols = alloc::vec![rat_vec(&[1, 0]), rat_vec(&[1, 1])];
        let x = solve_columns(&cols, &rat_vec(&[3, 2])).unwrap();
        assert_eq!(x, rat_vec(&[1, 2]));
        assert!(solve_columns(&[rat_vec(&[1, 1])], &rat_vec(&[1, 2])).is_none());
    }
}
