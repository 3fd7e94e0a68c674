//! Exact Gauss-Jordan elimination over a field.

use crate::exactfield::{Field, Scalar};

pub(crate) struct Solution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
}

/// Solves `m·u = rhs` with free variables set to zero, or `None` when the
/// system is inconsistent. Also returns a basis of the kernel of `m`.
pub(crate) fn solve(mut m: Vec<Vec<Scalar>>, mut rhs: Vec<Scalar>, cols: usize, field: &Field) -> Option<Solution> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        rhs.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        rhs[row] = &rhs[row] * &inv;
        for i in 0..rows {
            if i == row || m[i][col].is_zero() {
                continue;
            }
            let k = m[i][col].clone();
            let pivot_row = m[row].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot_row).take(cols).skip(col) {
                *x = &*x - &(&k * p);
            }
            let d = &k * &rhs[row];
            rhs[i] = &rhs[i] - &d;
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if rhs[row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let zero = Scalar::zero(field);
    let mut particular = vec![zero.clone(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = rhs[i].clone();
    }
    let mut kernel = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); cols];
        v[free] = Scalar::one(field);
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -&m[i][free];
        }
        kernel.push(v);
    }
    Some(Solution { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_systems() {
        let q = Field::rationals();
        let s = |n| Scalar::from_int(&q, n);
        let m = vec![vec![s(1), s(1)], vec![s(-1), s(1)]];
        let sol = solve(m, vec![s(1), s(0)], 2, &q).unwrap();
        let half = &s(1) / &s(2);
        assert_eq!(sol.particular, vec![half.clone(), half]);
        assert!(sol.kernel.is_empty());
        let m = vec![vec![s(1), s(2)], vec![s(2), s(4)]];
        assert!(solve(m.clone(), vec![s(1), s(3)], 2, &q).is_none());
        let sol = solve(m, vec![s(1), s(2)], 2, &q).unwrap();
        assert_eq!(sol.kernel, vec![vec![s(-2), s(1)]]);
    }
}
