//! Dense exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type Row = Vec<Scalar>;

/// Reduced row-echelon form. Returns the nonzero rows and their pivot
/// columns; pivots increase strictly.
///
/// Rows are cleared of denominators and eliminated fraction-free
/// (Gauss-Jordan in Bareiss form): every intermediate entry is a minor of
/// the integer matrix, so each division is exact and no gcds are taken
/// until the final normalization.
pub fn rref(rows: Vec<Row>, ncols: usize) -> (Vec<Row>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let scale = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&scale / x.denom())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut previous = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == m.len() {
            break;
        }
        let Some(found) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, found);
        let pivot_row = m[rank].clone();
        let pivot = pivot_row[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                let scaled = &pivot * &*x - &factor * p;
                debug_assert!(
                    (&scaled % &previous).is_zero(),
                    "fraction-free step must divide exactly"
                );
                *x = scaled / &previous;
            }
        }
        pivots.push(col);
        previous = pivot;
        rank += 1;
    }
    m.truncate(rank);
    // every pivot now equals `previous`
    let reduced = m
        .into_iter()
        .map(|row| row.into_iter().map(|x| Scalar::new(x, previous.clone())).collect())
        .collect();
    (reduced, pivots)
}

pub fn rank(rows: Vec<Row>, ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : M x = 0}` for `M` given by rows of length `ncols`.
pub fn kernel(rows: Vec<Row>, ncols: usize) -> Vec<Row> {
    let (reduced, pivots) = rref(rows, ncols);
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    (0..ncols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![Scalar::zero(); ncols];
            v[free] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -reduced[r][free].clone();
            }
            v
        })
        .collect()
}

pub fn transpose(rows: &[Row], ncols: usize) -> Vec<Row> {
    (0..ncols)
        .map(|c| rows.iter().map(|r| r[c].clone()).collect())
        .collect()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(rows: &[Row]) -> Option<Vec<Row>> {
    let n = rows.len();
    let augmented: Vec<Row> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut a = r.clone();
            a.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            a
        })
        .collect();
    let (reduced, pivots) = rref(augmented, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(reduced.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// The unique solution of `A x = b` when `A` has full column rank and the
/// system is consistent.
pub fn solve_unique(rows: &[Row], rhs: &[Scalar], ncols: usize) -> Option<Row> {
    let augmented: Vec<Row> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut a = r.clone();
            a.push(b.clone());
            a
        })
        .collect();
    let (reduced, pivots) = rref(augmented, ncols + 1);
    if pivots.len() != ncols || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(reduced.iter().map(|r| r[ncols].clone()).collect())
}

pub fn mat_vec(rows: &[Row], v: &[Scalar]) -> Row {
    rows.iter()
        .map(|r| r.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}
