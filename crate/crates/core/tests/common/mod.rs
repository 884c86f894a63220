#![allow(dead_code)]

//! Brute-force oracles and generators shared by the property suites.

use std::collections::BTreeSet;

use barjanet::{Rational, Term, TermSet};
use proptest::prelude::*;

pub fn term(e: &[u32]) -> Term {
    Term::new(e.to_vec()).unwrap()
}

/// Every term in the box `0..=bound[i]`.
pub fn box_terms(bound: &[u32]) -> Vec<Term> {
    let mut out = vec![Vec::<u32>::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(|e| term(&e)).collect()
}

/// All terms of total degree at most `d` in `n` variables.
pub fn terms_up_to_degree(n: usize, d: u32) -> Vec<Term> {
    box_terms(&vec![d; n])
        .into_iter()
        .filter(|t| t.degree() <= d as u64)
        .collect()
}

/// Every divisor of `t`, by enumerating its box.
pub fn all_divisors(t: &Term) -> Vec<Term> {
    box_terms(t.exponents())
}

pub fn is_order_ideal(set: &TermSet) -> bool {
    set.iter()
        .all(|t| all_divisors(t).iter().all(|d| set.contains(d)))
}

/// Column run lengths of row `i`, grouping Lex-sorted terms by equal
/// exponents on `x_i .. x_n`.
pub fn grouped_lengths(set: &TermSet, i: usize) -> Vec<usize> {
    let mut lengths: Vec<usize> = Vec::new();
    let mut prev: Option<Vec<u32>> = None;
    for t in set.iter() {
        let key = t.exponents()[i - 1..].to_vec();
        if prev.as_ref() == Some(&key) {
            *lengths.last_mut().unwrap() += 1;
        } else {
            lengths.push(1);
            prev = Some(key);
        }
    }
    lengths
}

/// `{ w not in N : w / min(w) in N }` over a box one larger than `N`.
pub fn star_set_by_formula(n: &TermSet) -> BTreeSet<Term> {
    let bound: Vec<u32> = n.bounding_box().iter().map(|b| b + 1).collect();
    box_terms(&bound)
        .into_iter()
        .filter(|w| !n.contains(w))
        .filter(|w| {
            w.min_var()
                .and_then(|v| w.div_var(v))
                .is_some_and(|q| n.contains(&q))
        })
        .collect()
}

/// Whether some element of `gens` divides `w`.
pub fn in_ideal(gens: &TermSet, w: &Term) -> bool {
    gens.iter()
        .any(|g| (0..w.nvars()).all(|i| g.exponents()[i] <= w.exponents()[i]))
}

pub fn term_set_strategy(
    max_vars: usize,
    max_terms: usize,
    max_exp: u32,
) -> impl Strategy<Value = TermSet> {
    (1..=max_vars).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_terms)
            .prop_map(move |exps| TermSet::from_exponents(n, exps).unwrap())
    })
}

/// Downward closure of a few random terms, truncated to at most `max_terms`
/// elements while staying closed.
pub fn order_ideal_strategy(
    max_vars: usize,
    max_terms: usize,
    max_exp: u32,
) -> impl Strategy<Value = TermSet> {
    (1..=max_vars).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=4).prop_map(move |gens| {
            let mut closure: BTreeSet<Term> = BTreeSet::new();
            for g in gens {
                let g = term(&g);
                let mut divs = all_divisors(&g);
                divs.sort();
                for d in divs {
                    if closure.len() >= max_terms {
                        break;
                    }
                    // Only add once every immediate divisor is in.
                    if (1..=n).all(|v| d.div_var(v).is_none_or(|q| closure.contains(&q))) {
                        closure.insert(d);
                    }
                }
            }
            TermSet::new(n, closure).unwrap()
        })
    })
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| q(n, d))
}

/// Rank by plain Gaussian elimination on a copy, independent of the library.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    use num::Zero;
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone() / pivot[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}
