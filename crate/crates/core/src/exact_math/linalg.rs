//! Gaussian elimination over a coefficient field.

use super::field::FieldElem;

struct Echelon {
    rows: Vec<Vec<FieldElem>>,
    pivots: Vec<usize>,
}

/// Reduced row echelon form. Among candidate pivots in a column the
/// smallest entry is chosen, which keeps intermediate rational functions
/// small.
fn rref(mut rows: Vec<Vec<FieldElem>>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let best = (r..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| rows[i][col].weight());
        let Some(p) = best else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].inv();
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let pivot_row = rows[r].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot_row).skip(col) {
                if !y.is_zero() {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    Echelon { rows, pivots }
}

/// Solve `A x = b`; free unknowns are set to zero. `None` if inconsistent.
pub fn solve_linear(a: &[Vec<FieldElem>], b: &[FieldElem], nvars: usize) -> Option<Vec<FieldElem>> {
    let ncols = a.first().map_or(0, Vec::len);
    let rows: Vec<Vec<FieldElem>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut row = row.clone();
            row.push(rhs.clone());
            row
        })
        .collect();
    let ech = rref(rows, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![FieldElem::zero(nvars); ncols];
    for (row, &col) in ech.rows.iter().zip(&ech.pivots) {
        x[col] = row[ncols].clone();
    }
    Some(x)
}

/// Basis of the right null space, one vector per free column in increasing
/// column order.
pub fn nullspace(a: &[Vec<FieldElem>], ncols: usize, nvars: usize) -> Vec<Vec<FieldElem>> {
    let ech = rref(a.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![FieldElem::zero(nvars); ncols];
            v[f] = FieldElem::one(nvars);
            for (row, &col) in ech.rows.iter().zip(&ech.pivots) {
                v[col] = row[f].neg();
            }
            v
        })
        .collect()
}
