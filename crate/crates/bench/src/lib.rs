//! Deterministic inputs for the benchmarks.

use barjanet::{PointSet, Rational, TermSet};

/// A small linear congruential stream, so fixtures need no RNG crate.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self, bound: u64) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (self.0 >> 33) % bound
    }
}

/// `size` pseudo-random terms in `n` variables with exponents below `max_exp`.
pub fn term_set(n: usize, size: usize, max_exp: u32, seed: u64) -> TermSet {
    let mut g = Lcg(seed);
    let exps: Vec<Vec<u32>> = (0..size)
        .map(|_| (0..n).map(|_| g.next(max_exp as u64 + 1) as u32).collect())
        .collect();
    TermSet::from_exponents(n, exps).expect("nonempty")
}

/// Every term of total degree below `d` in `n` variables.
pub fn simplex(n: usize, d: u32) -> TermSet {
    let mut exps: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..n {
        exps = exps
            .into_iter()
            .flat_map(|p| {
                let used: u32 = p.iter().sum();
                (0..d - used).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    TermSet::from_exponents(n, exps).expect("nonempty")
}

/// `size` distinct points with small rational coordinates.
pub fn points(n: usize, size: usize, seed: u64) -> PointSet {
    let mut g = Lcg(seed);
    let mut pts: Vec<Vec<Rational>> = Vec::new();
    while pts.len() < size {
        let p: Vec<Rational> = (0..n)
            .map(|_| {
                let num = g.next(21) as i64 - 10;
                let den = g.next(10) as i64 + 1;
                Rational::new(num.into(), den.into())
            })
            .collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new(n, pts).expect("distinct points")
}
