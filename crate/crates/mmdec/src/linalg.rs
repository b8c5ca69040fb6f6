//! Exact linear algebra on row-major rectangular matrices.
//!
//! Elimination always picks the first nonzero pivot in row-major order, so
//! every routine here is deterministic; all arithmetic is exact field
//! arithmetic.

use crate::scalar::Field;

/// Reduced row echelon form. Returns the reduced rows together with the list
/// of pivot columns.
pub fn rref<K: Field>(mut rows: Vec<Vec<K>>) -> (Vec<Vec<K>>, Vec<usize>) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        if next_row == nrows {
            break;
        }
        let Some(pivot_row) = (next_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pivot_row);
        let inv = rows[next_row][col]
            .inverse()
            .expect("pivot is nonzero by construction");
        for c in col..ncols {
            rows[next_row][c] = rows[next_row][c].clone() * inv.clone();
        }
        for r in 0..nrows {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let delta = factor.clone() * rows[next_row][c].clone();
                rows[r][c] = rows[r][c].clone() - delta;
            }
        }
        pivots.push(col);
        next_row += 1;
    }
    (rows, pivots)
}

pub fn rank<K: Field>(rows: &[Vec<K>]) -> usize {
    rref(rows.to_vec()).1.len()
}

/// Determinant of a square matrix by exact elimination.
pub fn determinant<K: Field>(rows: &[Vec<K>]) -> K {
    let n = rows.len();
    let mut m: Vec<Vec<K>> = rows.to_vec();
    for row in &m {
        assert_eq!(row.len(), n, "determinant requires a square matrix");
    }
    let mut det = K::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return K::zero();
        };
        if pivot_row != col {
            m.swap(col, pivot_row);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        let inv = pivot.inverse().expect("pivot is nonzero");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * inv.clone();
            for c in col..n {
                let delta = factor.clone() * m[col][c].clone();
                m[r][c] = m[r][c].clone() - delta;
            }
        }
    }
    det
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert<K: Field>(rows: &[Vec<K>]) -> Option<Vec<Vec<K>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<K>> = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), n, "inverse requires a square matrix");
        let mut extended = row.clone();
        for j in 0..n {
            extended.push(if i == j { K::one() } else { K::zero() });
        }
        aug.push(extended);
    }
    let (reduced, pivots) = rref(aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(reduced.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `columns * x = target` exactly, treating `columns` as the columns
/// of the coefficient matrix. Returns `None` when the system is inconsistent
/// or the columns are dependent.
pub fn solve_in_column_span<K: Field>(columns: &[Vec<K>], target: &[K]) -> Option<Vec<K>> {
    let dim = target.len();
    let k = columns.len();
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = Vec::with_capacity(k + 1);
        for col in columns {
            assert_eq!(col.len(), dim, "column length mismatch");
            row.push(col[i].clone());
        }
        row.push(target[i].clone());
        rows.push(row);
    }
    let (reduced, pivots) = rref(rows);
    if pivots.contains(&k) {
        return None; // inconsistent: pivot in the augmented column
    }
    if pivots.len() != k {
        return None; // dependent columns: no unique coordinates
    }
    let mut x = vec![K::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = reduced[r][k].clone();
    }
    Some(x)
}
