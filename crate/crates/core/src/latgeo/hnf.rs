//! Row-style Hermite normal form over ℤ with transform tracking.

fn checked_sub_mul(a: i128, q: i128, b: i128) -> i128 {
    q.checked_mul(b)
        .and_then(|qb| a.checked_sub(qb))
        .expect("integer overflow in lattice reduction")
}

fn row_sub_mul(rows: &mut [Vec<i128>], target: usize, source: usize, q: i128) {
    if q == 0 {
        return;
    }
    let src = rows[source].clone();
    for (x, y) in rows[target].iter_mut().zip(src) {
        *x = checked_sub_mul(*x, q, y);
    }
}

/// Result of [`hnf_with_transform`]: `transform · input = reduced`, where the
/// first `rank` rows of `reduced` are in Hermite normal form and the rest
/// are zero.
pub(crate) struct Hnf {
    pub reduced: Vec<Vec<i128>>,
    pub transform: Vec<Vec<i128>>,
    pub rank: usize,
}

/// Pivots are positive; entries above a pivot lie in `[0, pivot)`.
pub(crate) fn hnf_with_transform(rows: &[Vec<i128>], ncols: usize) -> Hnf {
    let m = rows.len();
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let mut u: Vec<Vec<i128>> =
        (0..m).map(|i| (0..m).map(|j| i128::from(i == j)).collect()).collect();
    let mut r = 0;
    for col in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m).filter(|&i| a[i][col] != 0).min_by_key(|&i| a[i][col].abs());
            let Some(p) = pivot else { break };
            a.swap(r, p);
            u.swap(r, p);
            let mut cleared = true;
            for i in r + 1..m {
                if a[i][col] != 0 {
                    let q = a[i][col] / a[r][col];
                    row_sub_mul(&mut a, i, r, q);
                    row_sub_mul(&mut u, i, r, q);
                    if a[i][col] != 0 {
                        cleared = false;
                    }
                }
            }
            if cleared {
                break;
            }
        }
        if a[r][col] == 0 {
            continue;
        }
        if a[r][col] < 0 {
            a[r].iter_mut().for_each(|x| *x = -*x);
            u[r].iter_mut().for_each(|x| *x = -*x);
        }
        for i in 0..r {
            let q = a[i][col].div_euclid(a[r][col]);
            row_sub_mul(&mut a, i, r, q);
            row_sub_mul(&mut u, i, r, q);
        }
        r += 1;
    }
    Hnf { reduced: a, transform: u, rank: r }
}

pub(crate) fn to_i128(rows: &[Vec<i64>]) -> Vec<Vec<i128>> {
    rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect()
}

pub(crate) fn to_i64(rows: &[Vec<i128>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| i64::try_from(x).expect("lattice entry exceeds i64")).collect())
        .collect()
}

/// Canonical basis (HNF rows) of the lattice spanned by `rows`.
pub fn hermite_basis(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let h = hnf_with_transform(&to_i128(rows), ncols);
    to_i64(&h.reduced[..h.rank])
}

/// ℤ-basis (in HNF) of `{x ∈ ℤ^ncols : M x = 0}`. The result is saturated.
pub fn integer_kernel(matrix: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    // rows of the transform that kill Mᵀ span the left kernel of Mᵀ
    let transposed: Vec<Vec<i128>> =
        (0..ncols).map(|j| matrix.iter().map(|row| row[j] as i128).collect()).collect();
    let h = hnf_with_transform(&transposed, matrix.len());
    let kernel = to_i64(&h.transform[h.rank..]);
    hermite_basis(&kernel, ncols)
}
