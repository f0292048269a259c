//! Diagonalisation of integer relation matrices, used to rewrite a quotient
//! of `Z^m` as a direct sum of cyclic groups.

/// Result of diagonalising the row lattice `L` of a relation matrix.
///
/// With `x ↦ x·V`, the lattice `L` maps onto `⊕ diag[t]·Z`, so
/// `Z^m / L ≅ ⊕ Z/diag[t]`. Rows of `v_inv` are the old-coordinate
/// preimages of the new unit vectors.
#[derive(Debug, Clone)]
pub struct Diagonal {
    pub diag: Vec<i64>,
    pub v: Vec<Vec<i64>>,
    pub v_inv: Vec<Vec<i64>>,
}

fn identity(m: usize) -> Vec<Vec<i64>> {
    (0..m)
        .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Diagonalises `rows` (each of length `m`). The row lattice must have full
/// rank `m`, which holds whenever it contains a positive multiple of every
/// unit vector.
pub fn diagonalize(rows: &[Vec<i64>], m: usize) -> Diagonal {
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let mut v = identity(m);
    let mut v_inv = identity(m);
    let r = a.len();

    // column op: col j -= q * col t  (M ← M·C, V ← V·C, V⁻¹ ← C⁻¹·V⁻¹,
    // where C⁻¹ adds q * row j of V⁻¹ to row t)
    let col_sub = |a: &mut Vec<Vec<i64>>,
                   v: &mut Vec<Vec<i64>>,
                   v_inv: &mut Vec<Vec<i64>>,
                   j: usize,
                   t: usize,
                   q: i64| {
        for row in a.iter_mut() {
            row[j] -= q * row[t];
        }
        for row in v.iter_mut() {
            row[j] -= q * row[t];
        }
        let src = v_inv[j].clone();
        for (dst, s) in v_inv[t].iter_mut().zip(src) {
            *dst += q * s;
        }
    };
    let col_swap = |a: &mut Vec<Vec<i64>>,
                    v: &mut Vec<Vec<i64>>,
                    v_inv: &mut Vec<Vec<i64>>,
                    i: usize,
                    j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        v_inv.swap(i, j);
    };

    for t in 0..m.min(r) {
        loop {
            // smallest nonzero entry of the remaining block
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            a.swap(t, bi);
            if bj != t {
                col_swap(&mut a, &mut v, &mut v_inv, t, bj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..r {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= q * y;
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..m {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    col_sub(&mut a, &mut v, &mut v_inv, j, t, q);
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a[t][t] < 0 {
            for row in a.iter_mut() {
                row[t] = -row[t];
            }
            for row in v.iter_mut() {
                row[t] = -row[t];
            }
            for x in v_inv[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    let diag = (0..m).map(|t| if t < r { a[t][t] } else { 0 }).collect();
    Diagonal { diag, v, v_inv }
}
