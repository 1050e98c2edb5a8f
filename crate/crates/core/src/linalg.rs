//! Exact rank of integer matrices by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of a dense integer matrix given as rows. All rows must have the same
/// length.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), ncols);
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let nrows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                // every intermediate entry is a minor, so the division is exact
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        assert_eq!(integer_rank(&[]), 0);
        assert_eq!(integer_rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(integer_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(integer_rank(&[vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(integer_rank(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 1, 1]]), 2);
        assert_eq!(integer_rank(&[vec![2, 4, 6], vec![1, 1, 1], vec![3, 5, 7], vec![0, 0, 0]]), 2);
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = 1_000_000_007;
        let m = vec![vec![big, big + 1, 1], vec![big + 2, big + 3, 1], vec![2 * big + 2, 2 * big + 4, 2]];
        assert_eq!(integer_rank(&m), 2);
    }
}
