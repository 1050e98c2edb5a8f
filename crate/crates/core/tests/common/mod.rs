//! Independent oracles shared by the integration tests. Nothing here calls
//! into the product, coproduct or rank code of the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use kquiver::partitions::Partition;
use kquiver::quiver::{Quiver, QuiverRep};
use rand::Rng;

/// Weight multiset of the semistandard tableaux of shape `lambda` with
/// entries in `1..=n`: maps each content vector to its number of tableaux.
pub fn ssyt_weights(lambda: &Partition, n: usize) -> HashMap<Vec<usize>, i64> {
    let boxes: Vec<(usize, usize)> =
        (0..lambda.length()).flat_map(|r| (0..lambda.part(r)).map(move |c| (r, c))).collect();
    let mut grid = vec![vec![0usize; lambda.part(0)]; lambda.length()];
    let mut out = HashMap::new();
    fn fill(
        k: usize,
        boxes: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut HashMap<Vec<usize>, i64>,
    ) {
        if k == boxes.len() {
            let mut w = vec![0; n];
            for &(r, c) in boxes {
                w[grid[r][c] - 1] += 1;
            }
            *out.entry(w).or_insert(0) += 1;
            return;
        }
        let (r, c) = boxes[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for x in lo_row.max(lo_col)..=n {
            grid[r][c] = x;
            fill(k + 1, boxes, grid, n, out);
        }
        grid[r][c] = 0;
    }
    fill(0, &boxes, &mut grid, n, &mut out);
    out
}

/// Classical Littlewood–Richardson numbers `c^ν_{λμ}` (Schur functions), by
/// multiplying monomial expansions in enough variables and peeling off Schur
/// functions from the top in lexicographic order.
pub fn classical_lr(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let n = (lambda.length() + mu.length()).max(1);
    let a = ssyt_weights(lambda, n);
    let b = ssyt_weights(mu, n);
    let mut prod: HashMap<Vec<usize>, i64> = HashMap::new();
    for (wa, ca) in &a {
        for (wb, cb) in &b {
            let w: Vec<usize> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            *prod.entry(w).or_insert(0) += ca * cb;
        }
    }
    let d = lambda.weight() + mu.weight();
    let mut candidates: Vec<Partition> = Partition::all_of_weight(d).into_iter().filter(|p| p.length() <= n).collect();
    candidates.sort();
    candidates.reverse();
    let pad = |p: &Partition| -> Vec<usize> { (0..n).map(|i| p.part(i)).collect() };
    let mut out = BTreeMap::new();
    let mut kostka: Vec<(Partition, HashMap<Vec<usize>, i64>)> = Vec::new();
    for nu in candidates {
        let key = pad(&nu);
        let mut c = prod.get(&key).copied().unwrap_or(0);
        for (kappa, weights) in &kostka {
            c -= out[kappa] * weights.get(&key).copied().unwrap_or(0);
        }
        if c != 0 {
            out.insert(nu.clone(), c);
            kostka.push((nu.clone(), ssyt_weights(&nu, n)));
        }
    }
    out
}

/// Rank over the rationals of a small integer matrix, by fraction-free
/// elimination in `i128`.
pub fn small_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                let pivot = m[rank].clone();
                for (x, &y) in m[r].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    for x in m[r].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random `rows × cols` integer matrix of rank at most `k`, built as a
/// product of random factors.
pub fn low_rank_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, k: usize) -> Vec<Vec<i64>> {
    let left: Vec<Vec<i64>> = (0..rows).map(|_| (0..k).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    let right: Vec<Vec<i64>> = (0..k).map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    multiply(&left, &right, rows, cols)
}

fn multiply(a: &[Vec<i64>], b: &[Vec<i64>], rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows).map(|i| (0..cols).map(|j| (0..b.len()).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

/// A random representation of `1 → 2 ← 3` biased towards low ranks: each
/// map has a random rank bound, and sometimes both maps share their image.
pub fn random_inbound_rep<R: Rng>(rng: &mut R, q: &Quiver, e: [usize; 3]) -> QuiverRep {
    let [e1, e2, e3] = e;
    let shared = rng.gen_bool(0.4);
    let (phi1, phi3) = if shared {
        let k = rng.gen_range(0..=e2);
        let basis: Vec<Vec<i64>> = (0..e2).map(|_| (0..k).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let c1: Vec<Vec<i64>> = (0..k).map(|_| (0..e1).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let c3: Vec<Vec<i64>> = (0..k).map(|_| (0..e3).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        (multiply(&basis, &c1, e2, e1), multiply(&basis, &c3, e2, e3))
    } else {
        let k1 = rng.gen_range(0..=e1.min(e2));
        let k3 = rng.gen_range(0..=e3.min(e2));
        (low_rank_matrix(rng, e2, e1, k1), low_rank_matrix(rng, e2, e3, k3))
    };
    QuiverRep::new(q, e.to_vec(), vec![phi1, phi3]).expect("shapes follow the dimension vector")
}

/// Concatenates two matrices with the same number of rows side by side.
pub fn hcat(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter().zip(b).map(|(x, y)| x.iter().chain(y).copied().collect()).collect()
}

/// All dimension vectors with entries in `0..=max`.
pub fn dim_vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}
