//! Rank of sparse matrices over GF(2).
//!
//! Rows are given as lists of column indices; a repeated index cancels. Three
//! strategies are used depending on the shape of the input:
//!
//! * every row has at most two entries: such a matrix is the incidence matrix of
//!   a graph (a single entry is an edge to an extra "ground" vertex), and its rank
//!   is the size of a spanning forest, found with union-find;
//! * fewer than [`DENSE_LIMIT`] columns: bit-packed Gaussian elimination;
//! * otherwise: elimination on sorted index lists.
//!
//! All three insert rows in the given order and pivot on the smallest column, so
//! results are reproducible.

/// Column count above which the sparse eliminator is used.
pub const DENSE_LIMIT: usize = 5000;

/// Which elimination strategy [`rank`] picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Forest,
    Dense,
    Sparse,
}

/// Sorts a row and removes pairs of equal indices.
pub fn normalize_row(row: &mut Vec<usize>) {
    row.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < row.len() {
        if i + 1 < row.len() && row[i] == row[i + 1] {
            i += 2;
        } else {
            row[out] = row[i];
            out += 1;
            i += 1;
        }
    }
    row.truncate(out);
}

pub fn choose_strategy(rows: &[Vec<usize>], ncols: usize) -> Strategy {
    if rows.iter().all(|r| r.len() <= 2) {
        Strategy::Forest
    } else if ncols < DENSE_LIMIT {
        Strategy::Dense
    } else {
        Strategy::Sparse
    }
}

/// Rank of the matrix whose rows are `rows` (already normalized) over GF(2).
pub fn rank(rows: &[Vec<usize>], ncols: usize) -> usize {
    match choose_strategy(rows, ncols) {
        Strategy::Forest => rank_forest(rows, ncols),
        Strategy::Dense => rank_dense(rows, ncols),
        Strategy::Sparse => rank_sparse(rows),
    }
}

/// Rank for rows of weight ≤ 2. Panics on heavier rows.
pub fn rank_forest(rows: &[Vec<usize>], ncols: usize) -> usize {
    let ground = ncols;
    let mut parent: Vec<usize> = (0..=ncols).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut rank = 0;
    for row in rows {
        let (a, b) = match row.as_slice() {
            [] => continue,
            [a] => (*a, ground),
            [a, b] => (*a, *b),
            _ => panic!("rank_forest called with a row of weight {}", row.len()),
        };
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
            rank += 1;
        }
    }
    rank
}

/// Bit-packed elimination.
pub fn rank_dense(rows: &[Vec<usize>], ncols: usize) -> usize {
    let words = ncols.div_ceil(64).max(1);
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; ncols];
    let mut rank = 0;
    let mut buf = vec![0u64; words];
    for row in rows {
        buf.iter_mut().for_each(|w| *w = 0);
        for &c in row {
            buf[c / 64] ^= 1 << (c % 64);
        }
        let mut start = 0;
        while let Some(wi) = (start..words).find(|&i| buf[i] != 0) {
            start = wi;
            let col = wi * 64 + buf[wi].trailing_zeros() as usize;
            match &pivots[col] {
                Some(p) => {
                    for i in wi..words {
                        buf[i] ^= p[i];
                    }
                }
                None => {
                    pivots[col] = Some(buf.clone());
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn xor_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Elimination on sorted index lists.
pub fn rank_sparse(rows: &[Vec<usize>]) -> usize {
    let mut pivots: std::collections::HashMap<usize, Vec<usize>> = Default::default();
    for row in rows {
        let mut r = row.clone();
        while let Some(&lead) = r.first() {
            match pivots.get(&lead) {
                Some(p) => r = xor_sorted(&r, p),
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_rows(rng: &mut ChaCha8Rng, nrows: usize, ncols: usize, max_w: usize) -> Vec<Vec<usize>> {
        (0..nrows)
            .map(|_| {
                let w = rng.gen_range(0..=max_w);
                let mut r: Vec<usize> = (0..w).map(|_| rng.gen_range(0..ncols)).collect();
                normalize_row(&mut r);
                r
            })
            .collect()
    }

    #[test]
    fn normalize_cancels_pairs() {
        let mut r = vec![3, 1, 3, 2, 3];
        normalize_row(&mut r);
        assert_eq!(r, vec![1, 2, 3]);
        let mut r = vec![4, 4];
        normalize_row(&mut r);
        assert!(r.is_empty());
    }

    #[test]
    fn small_ranks() {
        // a triangle has rank 2; grounding one vertex adds one
        let tri = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        assert_eq!(rank(&tri, 3), 2);
        let mut grounded = tri.clone();
        grounded.push(vec![2]);
        assert_eq!(rank(&grounded, 3), 3);
        assert_eq!(rank_dense(&grounded, 3), 3);
        assert_eq!(rank_sparse(&grounded), 3);
        assert_eq!(rank(&[vec![0, 1, 2], vec![0, 1, 2]], 3), 1);
        assert_eq!(rank(&[], 0), 0);
    }

    #[test]
    fn strategies_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let ncols = rng.gen_range(1..150);
            let nrows = rng.gen_range(0..200);
            let rows = random_rows(&mut rng, nrows, ncols, 2);
            let f = rank_forest(&rows, ncols);
            assert_eq!(f, rank_dense(&rows, ncols));
            assert_eq!(f, rank_sparse(&rows));
            let rows = random_rows(&mut rng, nrows, ncols, 6);
            assert_eq!(rank_dense(&rows, ncols), rank_sparse(&rows));
        }
    }

    #[test]
    fn rank_bounded_by_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let rows = random_rows(&mut rng, 300, 70, 5);
        let r = rank(&rows, 70);
        assert!(r <= 70);
        let identity: Vec<Vec<usize>> = (0..70).map(|i| vec![i]).collect();
        assert_eq!(rank(&identity, 70), 70);
        assert_eq!(rank_sparse(&identity), 70);
    }
}
