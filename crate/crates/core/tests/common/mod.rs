//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's search or elimination code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A diagonal action in plain data: torus weight rows and `(modulus, weights)` factors.
#[derive(Clone, Debug)]
pub struct RawAction {
    pub n: usize,
    pub torus: Vec<Vec<i64>>,
    pub finite: Vec<(u32, Vec<i64>)>,
}

impl RawAction {
    pub fn invariant(&self, e: &[u32]) -> bool {
        let dot = |w: &[i64]| w.iter().zip(e).map(|(a, &b)| a * i64::from(b)).sum::<i64>();
        self.torus.iter().all(|w| dot(w) == 0)
            && self.finite.iter().all(|(m, w)| dot(w).rem_euclid(i64::from(*m)) == 0)
    }

    pub fn build(&self) -> prymcheck::invariants::DiagonalAction {
        use prymcheck::invariants::{DiagonalAction, FiniteFactor};
        let finite = self.finite.iter().map(|(m, w)| FiniteFactor { modulus: *m, weights: w.clone() }).collect();
        DiagonalAction::new(self.n, self.torus.clone(), finite).expect("oracle actions are well formed")
    }
}

/// All exponent vectors in `n` variables of total degree `1..=max_degree`.
pub fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            if cur.iter().any(|&e| e > 0) {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_degree, &mut cur, &mut out);
    out
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Minimal invariant monomials up to `2 * bound`, found by listing every
/// invariant and discarding those divisible by a smaller one. `None` when a
/// minimal one has degree above `bound`.
pub fn brute_force_generators(action: &RawAction, bound: u32) -> Option<Vec<Vec<u32>>> {
    let mut inv: Vec<Vec<u32>> = monomials_up_to(action.n, 2 * bound).into_iter().filter(|m| action.invariant(m)).collect();
    inv.sort_by_key(|m| m.iter().sum::<u32>());
    let mut minimal: Vec<Vec<u32>> = Vec::new();
    for m in inv {
        if !minimal.iter().any(|g| divides(g, &m)) {
            minimal.push(m);
        }
    }
    if minimal.iter().any(|m| m.iter().sum::<u32>() > bound) {
        return None;
    }
    minimal.sort();
    Some(minimal)
}

/// Random action on at most six coordinates with weights in `-2..=2`; every
/// third one gets a finite factor.
pub fn random_action(rng: &mut ChaCha8Rng, index: usize) -> RawAction {
    let n = rng.gen_range(1..=6);
    let rows = rng.gen_range(0..=2);
    let torus = (0..rows).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    let finite = if index % 3 == 0 {
        let m = rng.gen_range(2..=4);
        vec![(m, (0..n).map(|_| rng.gen_range(-2..=2)).collect())]
    } else {
        Vec::new()
    };
    RawAction { n, torus, finite }
}

/// Rank over the rationals by Gaussian elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        let pivot_row: Vec<BigRational> = m[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}
