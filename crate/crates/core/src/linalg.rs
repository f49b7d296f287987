//! Exact matrix rank.
//!
//! Ranks over the rationals use fraction-free (Bareiss) elimination over the
//! integers, first in `i64` and, on overflow, again in `BigInt`. Ranks over
//! `Z/pZ` use ordinary Gaussian elimination with `u128` intermediates.

use num_bigint::BigInt;

use crate::scalar::{ExactInteger, Field};

/// Dense integer matrix, row-major.
pub type IntMatrix = Vec<Vec<i64>>;

/// Fraction-free elimination. Returns `None` if an intermediate value
/// overflows `T`.
pub fn rank_fraction_free<T: ExactInteger>(mut rows: Vec<Vec<T>>) -> Option<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let nrows = rows.len();
    let mut rank = 0;
    let mut prev = T::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..ncols {
                let keep = p.checked_mul(&row[j])?;
                let remove = factor.checked_mul(&pivot_row[j])?;
                row[j] = keep.checked_sub(&remove)?.checked_div(&prev)?;
            }
            row[col] = T::zero();
        }
        prev = p;
        rank += 1;
    }
    Some(rank)
}

/// Gaussian elimination over an exact field.
pub fn rank_over_field<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let nrows = rows.len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() * inv.clone();
            for j in col..ncols {
                row[j] = row[j].clone() - factor.clone() * pivot_row[j].clone();
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the rationals of an integer matrix.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    if let Some(rank) = rank_fraction_free(rows.to_vec()) {
        return rank;
    }
    let big = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    rank_fraction_free::<BigInt>(big).expect("BigInt elimination cannot overflow")
}

/// Rank over `Z/pZ` of an integer matrix. `p` must be prime.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let m = p as u128;
    let mut rows: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let nrows = rows.len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p) as u128;
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = row[col] as u128 * inv % m;
            for j in col..ncols {
                let sub = factor * pivot_row[j] as u128 % m;
                row[j] = ((row[j] as u128 + m - sub) % m) as u64;
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut acc: u128 = 1 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n) as u128;
        if x == 1 || x == (n - 1) as u128 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n as u128;
            if x == (n - 1) as u128 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
