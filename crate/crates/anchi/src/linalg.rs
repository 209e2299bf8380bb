//! Small exact linear-algebra helpers over the rationals: row reduction,
//! rank, kernels, and linear solves. Matrices here are tiny (a few dozen
//! rows at most), so simple Gaussian elimination is all that is needed.

use num_traits::Zero;

use crate::exact::Rational;

pub(crate) type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
pub(crate) fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(pivot_row) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pivot_row);
        let inv = m[row][col].clone();
        for c in col..cols {
            let v = &m[row][c] / &inv;
            m[row][c] = v;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let v = &m[r][c] - &factor * &m[row][c];
                    m[r][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub(crate) fn rank(mut m: Matrix) -> usize {
    rref(&mut m).len()
}

/// Basis of the right kernel `{x : M x = 0}`.
pub(crate) fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::from_integer(1.into());
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -&work[r][f];
        }
        basis.push(v);
    }
    basis
}

/// One solution of `M x = rhs`, or `None` if the system is inconsistent.
pub(crate) fn solve(m: &Matrix, rhs: &[Rational]) -> Option<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last().is_some_and(|&p| p == cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(a.clone()), 2);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 1);
        for row in &a {
            let dot: Rational = row.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert!(dot == rat_int(0));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = solve(&a, &[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&b, &[rat_int(1), rat_int(3)]).is_none());
    }
}
