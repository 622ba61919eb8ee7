//! Small dense linear algebra over GF(2) (bit-packed `u128` rows) and GF(4).

use crate::field::F4;

/// Row-reduces `rows` in place over GF(2) and returns the pivot bit of each
/// surviving row. Zero rows are dropped.
pub(crate) fn gf2_rref(rows: &mut Vec<u128>) -> Vec<u32> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for bit in 0..128u32 {
        let mask = 1u128 << bit;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & mask != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & mask != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(bit);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn gf2_rank(rows: &[u128]) -> usize {
    let mut v = rows.to_vec();
    gf2_rref(&mut v).len()
}

/// Basis of `{x : <row, x> = 0 for every row}` restricted to the bit
/// positions in `columns`.
pub(crate) fn gf2_nullspace(rows: &[u128], columns: u128) -> Vec<u128> {
    let mut m: Vec<u128> = rows.iter().map(|r| r & columns).collect();
    let pivots = gf2_rref(&mut m);
    let pivot_mask = pivots.iter().fold(0u128, |acc, &b| acc | (1u128 << b));
    let mut basis = Vec::new();
    for bit in 0..128u32 {
        let mask = 1u128 << bit;
        if columns & mask == 0 || pivot_mask & mask != 0 {
            continue;
        }
        let mut v = mask;
        for (row, &p) in m.iter().zip(&pivots) {
            if row & mask != 0 {
                v |= 1u128 << p;
            }
        }
        basis.push(v);
    }
    basis
}

/// Row-reduces a GF(4) matrix in place; returns pivot columns.
pub(crate) fn f4_rref(rows: &mut Vec<Vec<F4>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let f = row[col];
            if i != r && !f.is_zero() {
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x += f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn f4_rank(rows: &[Vec<F4>]) -> usize {
    let mut m = rows.to_vec();
    f4_rref(&mut m).len()
}

/// Basis of the right null space `{x : Σ row_i x_i = 0}` over GF(4).
pub(crate) fn f4_nullspace(rows: &[Vec<F4>], ncols: usize) -> Vec<Vec<F4>> {
    let mut m = rows.to_vec();
    let pivots = f4_rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F4::ZERO; ncols];
        v[free] = F4::ONE;
        for (row, &p) in m.iter().zip(&pivots) {
            // characteristic 2: x_p = -row[free] = row[free]
            v[p] = row[free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_nullspace_is_orthogonal_and_complete() {
        let rows = [0b1101u128, 0b0110, 0b1011];
        let cols = 0b1111;
        let ns = gf2_nullspace(&rows, cols);
        assert_eq!(ns.len() + gf2_rank(&rows), 4);
        for v in &ns {
            for r in &rows {
                assert_eq!((v & r).count_ones() % 2, 0);
            }
        }
    }

    #[test]
    fn f4_nullspace_dimension() {
        let w = F4::OMEGA;
        let rows = vec![
            vec![F4::ONE, F4::ZERO, w, F4::ONE],
            vec![F4::ZERO, F4::ONE, F4::ONE, w],
        ];
        let ns = f4_nullspace(&rows, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                let s = r.iter().zip(v).fold(F4::ZERO, |acc, (&a, &b)| acc + a * b);
                assert_eq!(s, F4::ZERO);
            }
        }
    }
}
