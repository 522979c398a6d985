//! Integer lattice algorithms: Hermite-style column reduction, integer
//! kernels, saturations of sublattices, and gcd-of-minors computations.
//!
//! Matrices here are tiny (ambient dimensions up to ten or so), so the
//! implementations favour clarity: exact `BigInt` arithmetic and classical
//! elimination, no modular tricks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use itertools::Itertools;

/// Rank of an integer matrix (rows of equal length) over the rationals.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        // fraction-free elimination below the pivot
        let p = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..ncols {
                m[r][c] = &m[r][c] * &p - &m[rank][c] * &f;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det(mat: &[Vec<BigInt>]) -> BigInt {
    let n = mat.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Column reduction of `mat` by unimodular column operations, returning the
/// transform: `mat * u` has its nonzero columns first, and the last
/// `ncols - rank` columns of `u` form a basis of the integer kernel
/// `{x : mat x = 0}`. `u` is square unimodular.
pub fn column_reduce(mat: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, usize) {
    let mut m: Vec<Vec<BigInt>> = mat.to_vec();
    let nrows = m.len();
    debug_assert!(m.iter().all(|r| r.len() == ncols));
    // u as a list of columns
    let mut u: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut col = vec![BigInt::zero(); ncols];
            col[j] = BigInt::one();
            col
        })
        .collect();
    let mut next = 0usize; // next pivot column slot
    for row in 0..nrows {
        if next == ncols {
            break;
        }
        // clear row entries in columns next+1.. against column `next`
        // using extended-gcd column operations
        let Some(first) = (next..ncols).find(|&j| !m_entry(&m, row, j).is_zero()) else {
            continue;
        };
        swap_cols(&mut m, &mut u, next, first);
        for j in next + 1..ncols {
            if m_entry(&m, row, j).is_zero() {
                continue;
            }
            let a = m_entry(&m, row, next).clone();
            let b = m_entry(&m, row, j).clone();
            let ext = a.extended_gcd(&b);
            let (g, s, t) = (ext.gcd, ext.x, ext.y);
            let (ag, bg) = (&a / &g, &b / &g);
            // (col_next, col_j) <- (s*col_next + t*col_j, -bg*col_next + ag*col_j)
            combine_cols(&mut m, &mut u, next, j, &s, &t, &(-bg), &ag);
        }
        if m_entry(&m, row, next).is_negative() {
            negate_col(&mut m, &mut u, next);
        }
        next += 1;
    }
    // u returned as a row-major matrix (u[i][j] = entry in row i, col j)
    let mut umat = vec![vec![BigInt::zero(); ncols]; ncols];
    for (j, col) in u.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            umat[i][j] = v.clone();
        }
    }
    (umat, next)
}

fn m_entry(m: &[Vec<BigInt>], row: usize, col: usize) -> &BigInt {
    &m[row][col]
}

fn swap_cols(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in m.iter_mut() {
        row.swap(a, b);
    }
    u.swap(a, b);
}

fn negate_col(m: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], j: usize) {
    for row in m.iter_mut() {
        row[j] = -&row[j];
    }
    for v in u[j].iter_mut() {
        *v = -&*v;
    }
}

#[allow(clippy::too_many_arguments)]
fn combine_cols(
    m: &mut [Vec<BigInt>],
    u: &mut [Vec<BigInt>],
    a: usize,
    b: usize,
    ca: &BigInt,
    cb: &BigInt,
    da: &BigInt,
    db: &BigInt,
) {
    for row in m.iter_mut() {
        let (x, y) = (row[a].clone(), row[b].clone());
        row[a] = ca * &x + cb * &y;
        row[b] = da * &x + db * &y;
    }
    let (x, y) = (u[a].clone(), u[b].clone());
    for i in 0..x.len() {
        u[a][i] = ca * &x[i] + cb * &y[i];
        u[b][i] = da * &x[i] + db * &y[i];
    }
}

/// Basis (as columns, each of length `ncols`) of the integer kernel
/// `{x in Z^ncols : mat x = 0}`.
pub fn integer_kernel(mat: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let (u, rank) = column_reduce(mat, ncols);
    (rank..ncols)
        .map(|j| (0..ncols).map(|i| u[i][j].clone()).collect())
        .collect()
}

/// Saturation of the sublattice spanned by the given vectors of `Z^dim`:
/// a basis (as columns) of `span_R(gens) intersect Z^dim`.
pub fn saturation(gens: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    saturation_with_complement(gens, dim).basis
}

pub struct SaturationBasis {
    /// Basis of the saturated lattice, as columns of length `dim`.
    pub basis: Vec<Vec<BigInt>>,
    /// A unimodular `dim x dim` matrix whose *last* `basis.len()` columns are
    /// the basis; the leading columns complete it to a basis of `Z^dim`.
    pub transform: Vec<Vec<BigInt>>,
}

/// Saturation together with a unimodular completion of its basis.
pub fn saturation_with_complement(gens: &[Vec<BigInt>], dim: usize) -> SaturationBasis {
    // orthogonal description: span_R(gens) = { x : k . x = 0 for k in K },
    // with K an integer basis of the kernel of the generator matrix
    let rows: Vec<Vec<BigInt>> = gens.to_vec();
    let kernel = integer_kernel(&rows, dim); // columns of length dim
    // saturation = integer kernel of K^T, which is automatically saturated
    let kt: Vec<Vec<BigInt>> = kernel.to_vec();
    let (u, rank) = column_reduce(&kt, dim);
    let basis = (rank..dim)
        .map(|j| (0..dim).map(|i| u[i][j].clone()).collect())
        .collect();
    SaturationBasis { basis, transform: u }
}

/// gcd of all `k x k` minors of the `dim x k` matrix with the given columns;
/// zero when the columns are dependent. This is Stanley's `h(X)`.
pub fn gcd_of_maximal_minors(columns: &[Vec<BigInt>]) -> BigInt {
    let k = columns.len();
    if k == 0 {
        return BigInt::one();
    }
    let dim = columns[0].len();
    let mut g = BigInt::zero();
    for rows in (0..dim).combinations(k) {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|&r| columns.iter().map(|c| c[r].clone()).collect())
            .collect();
        g = g.gcd(&det(&minor));
        if g.is_one() {
            return g;
        }
    }
    g
}

/// Inverse of a unimodular integer matrix (integer entries, det = +-1).
pub fn inverse_unimodular(u: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = u.len();
    // Gauss-Jordan over rationals; entries of the result are integers because
    // the determinant is a unit.
    use crate::rational::Rat;
    let mut a: Vec<Vec<Rat>> = u
        .iter()
        .map(|row| row.iter().map(|v| Rat::from_integer(v.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer(BigInt::from((i == j) as i64)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("unimodular matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let (d1, d2) = (&f * &a[col][j], &f * &inv[col][j]);
                a[r][j] -= d1;
                inv[r][j] -= d2;
            }
        }
    }
    inv.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    debug_assert!(v.denom().is_one());
                    v.numer().clone()
                })
                .collect()
        })
        .collect()
}

pub fn to_bigint_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}
