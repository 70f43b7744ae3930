//! Exact rational linear algebra helpers (Gaussian elimination only).

use num_rational::BigRational;
use num_traits::{One, Zero};

type Row = Vec<BigRational>;

/// Solves `a * x = b` exactly. Returns `None` when the system is
/// inconsistent; free variables (if any) are set to zero, so the returned
/// solution is deterministic.
pub fn solve(a: &[Row], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    debug_assert_eq!(rows, b.len());
    let mut m: Vec<Row> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            let mut row = r.clone();
            row.push(rhs.clone());
            row
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pr = 0;
    for pc in 0..cols {
        let Some(sel) = (pr..rows).find(|&i| !m[i][pc].is_zero()) else {
            continue;
        };
        m.swap(pr, sel);
        let inv = m[pr][pc].clone();
        for j in pc..=cols {
            let v = &m[pr][j] / &inv;
            m[pr][j] = v;
        }
        for i in 0..rows {
            if i != pr && !m[i][pc].is_zero() {
                let f = m[i][pc].clone();
                for j in pc..=cols {
                    let v = &m[i][j] - &f * &m[pr][j];
                    m[i][j] = v;
                }
            }
        }
        pivot_cols.push(pc);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    // Inconsistency: zero row with nonzero right-hand side.
    for i in pr..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &pc) in pivot_cols.iter().enumerate() {
        x[pc] = m[r][cols].clone();
    }
    Some(x)
}

pub fn rank(a: &[Row]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Row> = a.to_vec();
    let mut pr = 0;
    for pc in 0..cols {
        let Some(sel) = (pr..rows).find(|&i| !m[i][pc].is_zero()) else {
            continue;
        };
        m.swap(pr, sel);
        let piv = m[pr][pc].clone();
        for i in pr + 1..rows {
            if !m[i][pc].is_zero() {
                let f = &m[i][pc] / &piv;
                for j in pc..cols {
                    let v = &m[i][j] - &f * &m[pr][j];
                    m[i][j] = v;
                }
            }
        }
        pr += 1;
        if pr == rows {
            break;
        }
    }
    pr
}

/// A basis of the solution space of `a * x = 0`.
pub fn kernel_basis(a: &[Row]) -> Vec<Row> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    if cols == 0 {
        return Vec::new();
    }
    let mut m: Vec<Row> = a.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut pr = 0;
    for pc in 0..cols {
        let Some(sel) = (pr..rows).find(|&i| !m[i][pc].is_zero()) else {
            continue;
        };
        m.swap(pr, sel);
        let inv = m[pr][pc].clone();
        for j in pc..cols {
            let v = &m[pr][j] / &inv;
            m[pr][j] = v;
        }
        for i in 0..rows {
            if i != pr && !m[i][pc].is_zero() {
                let f = m[i][pc].clone();
                for j in pc..cols {
                    let v = &m[i][j] - &f * &m[pr][j];
                    m[i][j] = v;
                }
            }
        }
        pivot_cols.push(pc);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square rational matrix, or `None` when singular.
pub fn invert(a: &[Row]) -> Option<Vec<Row>> {
    let n = a.len();
    let mut m: Vec<Row> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            debug_assert_eq!(r.len(), n);
            let mut row = r.clone();
            for j in 0..n {
                row.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            row
        })
        .collect();
    for pc in 0..n {
        let sel = (pc..n).find(|&i| !m[i][pc].is_zero())?;
        m.swap(pc, sel);
        let inv = m[pc][pc].clone();
        for j in 0..2 * n {
            let v = &m[pc][j] / &inv;
            m[pc][j] = v;
        }
        for i in 0..n {
            if i != pc && !m[i][pc].is_zero() {
                let f = m[i][pc].clone();
                for j in 0..2 * n {
                    let v = &m[i][j] - &f * &m[pc][j];
                    m[i][j] = v;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}
