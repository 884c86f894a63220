//! Reduced Janet-like bases of ideals of finitely many points, computed
//! without Groebner bases: the Lex escalier comes from rank tests on
//! evaluation vectors, the leading terms from the star set of its Bar Code,
//! and tails from exact interpolation on the escalier.

mod matrix;
mod poly;

use std::collections::HashSet;

use num::{BigInt, Zero};

pub use matrix::{EchelonSpan, RationalMatrix};
pub use poly::{evaluate, Polynomial};

use crate::barcode::BarCode;
use crate::error::{Error, Result};
use crate::janet::complete;
use crate::term::{Term, TermSet};

pub type Rational = num::BigRational;

/// Distinct points with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    nvars: usize,
    points: Vec<Vec<Rational>>,
}

impl PointSet {
    pub fn new(nvars: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::NoVariables);
        }
        if let Some(bad) = points.iter().find(|p| p.len() != nvars) {
            return Err(Error::Dimension {
                expected: nvars,
                found: bad.len(),
            });
        }
        let mut seen = std::collections::HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicatePoint { first, second: i });
            }
            seen.insert(p, i);
        }
        Ok(PointSet { nvars, points })
    }

    /// Convenience constructor from integer numerator/denominator pairs.
    pub fn from_fractions(nvars: usize, points: &[Vec<(i64, i64)>]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
                    .collect()
            })
            .collect();
        PointSet::new(nvars, pts)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    fn values_of_term(&self, t: &Term) -> Vec<Rational> {
        self.points.iter().map(|p| poly::term_value(t, p)).collect()
    }

    /// Values of `f` at every point, in order.
    pub fn values(&self, f: &Polynomial) -> Result<Vec<Rational>> {
        self.points.iter().map(|p| evaluate(f, p)).collect()
    }
}

/// `N[[X]]`: row `i` holds the values of the `i`-th term at all points.
pub fn evaluation_matrix(terms: &TermSet, points: &PointSet) -> Result<RationalMatrix> {
    if terms.nvars() != points.nvars() {
        return Err(Error::Dimension {
            expected: points.nvars(),
            found: terms.nvars(),
        });
    }
    RationalMatrix::from_rows(terms.iter().map(|t| points.values_of_term(t)).collect())
}

/// The Lex Groebner escalier of the ideal of `points`.
///
/// A term is standard iff its evaluation vector is independent of those of
/// all smaller terms, so terms are visited in increasing Lex order and kept
/// when independent of the kept ones. Exponents of an order ideal with `N`
/// elements are below `N`, which bounds the scan; terms with a missing
/// divisor are skipped without a rank test.
pub fn groebner_escalier(points: &PointSet) -> Result<TermSet> {
    let n = points.nvars();
    let count = points.len();
    if count == 0 {
        return Err(Error::EmptyInput("at least one point is required"));
    }
    let limit = count as u32;
    let mut kept: Vec<Term> = Vec::with_capacity(count);
    let mut kept_set: HashSet<Term> = HashSet::new();
    let mut span = EchelonSpan::new();
    let mut exps = vec![0u32; n];
    loop {
        let t = Term::new(exps.clone()).expect("nonempty exponents");
        let divisors_kept = (1..=n).all(|v| t.div_var(v).is_none_or(|d| kept_set.contains(&d)));
        if divisors_kept && span.insert(&points.values_of_term(&t)) {
            kept_set.insert(t.clone());
            kept.push(t);
            if kept.len() == count {
                return TermSet::new(n, kept);
            }
        }
        // Next term in Lex order within the box: x1 varies fastest.
        let mut v = 0;
        loop {
            if v == n {
                return Err(Error::BoundExceeded(format!(
                    "escalier scan found {} of {count} standard terms",
                    kept.len()
                )));
            }
            exps[v] += 1;
            if exps[v] < limit {
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

/// Minimal generators of the semigroup ideal complementary to an order
/// ideal: the divisibility-minimal elements of its star set.
pub fn monomial_generators(escalier: &TermSet) -> Result<TermSet> {
    if let Some(bad) = escalier.order_ideal_violation() {
        return Err(Error::NotOrderIdeal(bad.to_string()));
    }
    let stars = BarCode::build(escalier)?.star_set()?;
    let minimal = stars
        .iter()
        .filter(|t| !stars.iter().any(|s| s != *t && s.divides(t)))
        .cloned();
    TermSet::new(escalier.nvars(), minimal)
}

/// Exact interpolation onto the span of a term set: the normal form of `f`
/// is the unique combination of the terms agreeing with `f` on the points.
#[derive(Debug, Clone)]
pub struct Interpolator {
    basis: TermSet,
    points: PointSet,
    /// Inverse of the transposed evaluation matrix.
    solve: RationalMatrix,
}

impl Interpolator {
    pub fn new(basis: &TermSet, points: &PointSet) -> Result<Self> {
        if basis.len() != points.len() {
            return Err(Error::Dimension {
                expected: points.len(),
                found: basis.len(),
            });
        }
        let solve = evaluation_matrix(basis, points)?.transpose().inverse()?;
        Ok(Interpolator {
            basis: basis.clone(),
            points: points.clone(),
            solve,
        })
    }

    pub fn basis(&self) -> &TermSet {
        &self.basis
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.from_values(&self.points.values(f)?)
    }

    /// The polynomial on the basis taking `values` at the points.
    pub fn from_values(&self, values: &[Rational]) -> Result<Polynomial> {
        let coeffs = self.solve.mul_vec(values)?;
        Ok(Polynomial::from_terms(
            self.basis.nvars(),
            coeffs.into_iter().zip(self.basis.iter().cloned()),
        ))
    }
}

pub fn normal_form(f: &Polynomial, basis: &TermSet, points: &PointSet) -> Result<Polynomial> {
    Interpolator::new(basis, points)?.normal_form(f)
}

/// Intermediate results of the basis computation.
#[derive(Debug, Clone)]
pub struct BasisComputation {
    pub escalier: TermSet,
    pub generators: TermSet,
    pub completed: TermSet,
    /// `t - Nf(t)` for every `t` of the completed set, Lex-increasing by
    /// leading term.
    pub basis: Vec<Polynomial>,
}

pub fn compute_basis(points: &PointSet) -> Result<BasisComputation> {
    let escalier = groebner_escalier(points)?;
    let generators = monomial_generators(&escalier)?;
    let completed = complete(&generators)?;
    let interp = Interpolator::new(&escalier, points)?;
    let basis = completed
        .iter()
        .map(|t| Ok(Polynomial::from_term(t).sub(&interp.normal_form(&Polynomial::from_term(t))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisComputation {
        escalier,
        generators,
        completed,
        basis,
    })
}

pub fn janet_like_basis(points: &PointSet) -> Result<Vec<Polynomial>> {
    Ok(compute_basis(points)?.basis)
}

/// Parses `p/q`, `-p/q` or an integer. Decimal or exponent notation is
/// rejected.
pub fn parse_rational(text: &str, line: usize, column: usize) -> Result<Rational> {
    let text = text.trim();
    let err = |msg: &str| Error::parse(line, column, format!("{msg}: '{text}'"));
    if text.contains(['.', 'e', 'E']) {
        return Err(err("floating-point values are not accepted"));
    }
    let int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(err("expected an integer or p/q"));
        }
        s.parse().map_err(|_| err("expected an integer or p/q"))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            Ok(Rational::new(int(n)?, d))
        }
        None => Ok(Rational::from_integer(int(text)?)),
    }
}
