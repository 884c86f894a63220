//! Janet multiplicative variables and Janet-like nonmultiplicative powers,
//! read off the Bar Code, plus completeness checking and completion.
//!
//! Every fast path has a definitional counterpart in [`oracle`] that scans
//! the whole set; the two are kept side by side and checked against each
//! other in the test suites.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::barcode::{BarCode, StarPlacement};
use crate::error::{Error, Result};
use crate::term::{Term, TermSet};

/// A nonmultiplicative power `x_var^exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Power {
    pub var: usize,
    pub exp: u32,
}

impl Power {
    pub fn new(var: usize, exp: u32) -> Self {
        Power { var, exp }
    }

    pub fn to_term(self, nvars: usize) -> Term {
        Term::var_power(nvars, self.var, self.exp)
    }

    /// Whether `x_var^exp` divides `v`.
    pub fn divides(self, v: &Term) -> bool {
        v.deg(self.var) >= self.exp
    }

    /// `x<i>^<k>`, always with the exponent.
    pub fn to_json_string(self) -> String {
        format!("x{}^{}", self.var, self.exp)
    }

    pub fn parse(text: &str) -> Option<Power> {
        let rest = text.trim().strip_prefix('x')?;
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (v.parse().ok()?, e.parse().ok()?),
            None => (rest.parse().ok()?, 1),
        };
        (var > 0 && exp > 0).then_some(Power { var, exp })
    }
}

impl fmt::Display for Power {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 1 {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "x{}^{}", self.var, self.exp)
        }
    }
}

/// Janet data of one term with respect to its set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JanetAnnotation {
    pub term: Term,
    /// Janet-multiplicative variables, increasing.
    pub multiplicative: Vec<usize>,
    pub nonmultiplicative: Vec<usize>,
    /// One power per nonmultiplicative variable, increasing by variable.
    pub nmp: Vec<Power>,
}

impl JanetAnnotation {
    pub fn nmp_for(&self, var: usize) -> Option<Power> {
        self.nmp.iter().copied().find(|p| p.var == var)
    }

    /// `v` is a Janet-like multiplier: no nonmultiplicative power divides it.
    pub fn is_multiplier(&self, v: &Term) -> bool {
        !self.nmp.iter().any(|p| p.divides(v))
    }

    /// `v` involves only Janet-multiplicative variables.
    pub fn is_janet_multiplier(&self, v: &Term) -> bool {
        self.nonmultiplicative.iter().all(|&i| v.deg(i) == 0)
    }
}

/// Outcome of checking one pair `(u, p)` with `p` in `NMP(u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub term: Term,
    pub power: Power,
    pub divisor: Option<Term>,
}

impl Witness {
    pub fn product(&self) -> Term {
        self.term.mul_var(self.power.var, self.power.exp)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionReport {
    pub complete: bool,
    pub witnesses: Vec<Witness>,
    /// Terms appended by completion, in insertion order.
    pub added: Vec<Term>,
}

impl CompletionReport {
    pub fn failing(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| w.divisor.is_none())
    }
}

/// A term set with its Bar Code, stars and Janet annotations.
#[derive(Debug, Clone)]
pub struct JanetTable {
    set: TermSet,
    code: BarCode,
    stars: StarPlacement,
    annotations: Vec<JanetAnnotation>,
}

impl JanetTable {
    pub fn new(set: &TermSet) -> Result<Self> {
        let code = BarCode::build(set)?;
        let stars = code.star_positions();
        let n = set.nvars();
        let annotations = set
            .iter()
            .enumerate()
            .map(|(col, t)| {
                let mut ann = JanetAnnotation {
                    term: t.clone(),
                    multiplicative: Vec::new(),
                    nonmultiplicative: Vec::new(),
                    nmp: Vec::new(),
                };
                for i in 1..=n {
                    let bar = code.bar_under(i, col);
                    if stars.contains(i, bar) {
                        ann.multiplicative.push(i);
                    } else {
                        // The leftmost term over the next bar has the smallest
                        // larger i-degree among terms agreeing above i.
                        let next = &code.labels()[code.row(i)[bar + 1].start];
                        ann.nonmultiplicative.push(i);
                        ann.nmp.push(Power::new(i, next.deg(i) - t.deg(i)));
                    }
                }
                ann
            })
            .collect();
        Ok(JanetTable {
            set: set.clone(),
            code,
            stars,
            annotations,
        })
    }

    pub fn set(&self) -> &TermSet {
        &self.set
    }

    pub fn code(&self) -> &BarCode {
        &self.code
    }

    pub fn stars(&self) -> &StarPlacement {
        &self.stars
    }

    pub fn annotations(&self) -> &[JanetAnnotation] {
        &self.annotations
    }

    fn column(&self, t: &Term) -> Result<usize> {
        self.set
            .index_of(t)
            .ok_or_else(|| Error::NotMember(t.to_string()))
    }

    pub fn annotation(&self, t: &Term) -> Result<&JanetAnnotation> {
        Ok(&self.annotations[self.column(t)?])
    }

    pub fn multiplicative_vars(&self, t: &Term) -> Result<Vec<usize>> {
        Ok(self.annotation(t)?.multiplicative.clone())
    }

    pub fn is_multiplier(&self, t: &Term, v: &Term) -> Result<bool> {
        Ok(self.annotation(t)?.is_multiplier(v))
    }

    /// All `t` in the set that Janet-divide `w`.
    pub fn janet_divisors(&self, w: &Term) -> Vec<Term> {
        self.annotations
            .iter()
            .filter(|a| w.div(&a.term).is_some_and(|q| a.is_janet_multiplier(&q)))
            .map(|a| a.term.clone())
            .collect()
    }

    /// All `t` in the set that are Janet-like divisors of `w`.
    pub fn janet_like_divisors(&self, w: &Term) -> Vec<Term> {
        self.annotations
            .iter()
            .filter(|a| w.div(&a.term).is_some_and(|q| a.is_multiplier(&q)))
            .map(|a| a.term.clone())
            .collect()
    }

    /// Janet-like divisors of `t * p` located through the Bar Code: they lie
    /// over the `i`-bar right after the one under `t`, divide `t * p`, and
    /// leave a quotient whose every variable is either starred for them or
    /// below their nonmultiplicative power.
    pub fn divisors_for_nm_product(&self, t: &Term, p: Power) -> Result<Vec<Term>> {
        let col = self.column(t)?;
        if self.annotations[col].nmp_for(p.var) != Some(p) {
            return Err(Error::NotNonMultiplicativePower {
                term: t.to_string(),
                power: p.to_string(),
            });
        }
        let i = p.var;
        let product = t.mul_var(i, p.exp);
        let next_bar = self.code.row(i)[self.code.bar_under(i, col) + 1];
        Ok(next_bar
            .columns()
            .filter(|&sc| {
                let s = &self.annotations[sc];
                let Some(q) = product.div(&s.term) else {
                    return false;
                };
                (1..=product.nvars()).filter(|&v| q.deg(v) > 0).all(|v| {
                    self.stars.contains(v, self.code.bar_under(v, sc))
                        || s.nmp_for(v).is_some_and(|np| np.exp > q.deg(v))
                })
            })
            .map(|sc| self.set.terms()[sc].clone())
            .collect())
    }

    pub fn divisor_for_nm_product(&self, t: &Term, p: Power) -> Result<Option<Term>> {
        Ok(self.divisors_for_nm_product(t, p)?.into_iter().next())
    }

    fn pairs(&self) -> Vec<(usize, Power)> {
        self.annotations
            .iter()
            .enumerate()
            .flat_map(|(c, a)| a.nmp.iter().map(move |&p| (c, p)))
            .collect()
    }

    fn witness(&self, col: usize, p: Power) -> Witness {
        let term = self.annotations[col].term.clone();
        let divisor = self
            .divisor_for_nm_product(&term, p)
            .expect("power taken from the table");
        Witness {
            term,
            power: p,
            divisor,
        }
    }

    /// Checks every `(u, p)` pair; the set is complete iff each product has a
    /// Janet-like divisor.
    pub fn completeness(&self, parallel: bool) -> CompletionReport {
        let pairs = self.pairs();
        let witnesses: Vec<Witness> = if parallel {
            pairs.par_iter().map(|&(c, p)| self.witness(c, p)).collect()
        } else {
            pairs.iter().map(|&(c, p)| self.witness(c, p)).collect()
        };
        CompletionReport {
            complete: witnesses.iter().all(|w| w.divisor.is_some()),
            witnesses,
            added: Vec::new(),
        }
    }
}

pub fn janet_multiplicative_vars(set: &TermSet, t: &Term) -> Result<Vec<usize>> {
    JanetTable::new(set)?.multiplicative_vars(t)
}

/// The Janet divisor of `w` in `set`, if any. Janet cones are disjoint, so
/// there is at most one.
pub fn janet_divisor(set: &TermSet, w: &Term) -> Result<Option<Term>> {
    if set.is_empty() {
        return Ok(None);
    }
    Ok(JanetTable::new(set)?.janet_divisors(w).into_iter().next())
}

pub fn nmp_table(set: &TermSet) -> Result<Vec<JanetAnnotation>> {
    Ok(JanetTable::new(set)?.annotations)
}

pub fn is_multiplier(set: &TermSet, t: &Term, v: &Term) -> Result<bool> {
    JanetTable::new(set)?.is_multiplier(t, v)
}

/// Every Janet-like divisor of `w` in `set`. On complete sets there is at
/// most one.
pub fn find_janet_like_divisor(set: &TermSet, w: &Term) -> Result<Vec<Term>> {
    if set.is_empty() {
        return Ok(Vec::new());
    }
    Ok(JanetTable::new(set)?.janet_like_divisors(w))
}

pub fn divisor_for_nm_product(table: &JanetTable, t: &Term, p: Power) -> Result<Option<Term>> {
    table.divisor_for_nm_product(t, p)
}

pub fn is_complete(set: &TermSet) -> Result<CompletionReport> {
    Ok(JanetTable::new(set)?.completeness(false))
}

/// Completes `set`: while some product `u * p` has no Janet-like divisor,
/// add the Lex-smallest such product and rebuild.
pub fn complete_with_report(set: &TermSet) -> Result<(TermSet, CompletionReport)> {
    let bound = set.bounding_box();
    let mut current = set.clone();
    let mut added = Vec::new();
    loop {
        let table = JanetTable::new(&current)?;
        let report = table.completeness(false);
        let Some(next) = report.failing().map(Witness::product).min() else {
            let report = CompletionReport { added, ..report };
            return Ok((current, report));
        };
        if next.exponents().iter().zip(&bound).any(|(e, b)| e > b) {
            return Err(Error::BoundExceeded(format!(
                "completion candidate {next} leaves the bounding box of the input"
            )));
        }
        current.insert(next.clone())?;
        added.push(next);
    }
}

pub fn complete(set: &TermSet) -> Result<TermSet> {
    Ok(complete_with_report(set)?.0)
}

/// Whether the Janet divisor of `w` (if any) is also a Janet-like divisor.
pub fn janet_implies_janet_like_check(set: &TermSet, w: &Term) -> Result<bool> {
    if set.is_empty() {
        return Ok(true);
    }
    let table = JanetTable::new(set)?;
    let like = table.janet_like_divisors(w);
    Ok(table.janet_divisors(w).iter().all(|t| like.contains(t)))
}

/// Definitional computations that scan the whole set. They share no code
/// with the Bar Code paths above.
pub mod oracle {
    use super::Power;
    use crate::term::{Term, TermSet};

    /// `x_j` is multiplicative for `t` unless some `u` agrees with `t` on
    /// `x_{j+1} .. x_n` and has larger `j`-degree.
    pub fn multiplicative_vars(set: &TermSet, t: &Term) -> Vec<usize> {
        let n = set.nvars();
        (1..=n)
            .filter(|&j| {
                !set.iter()
                    .any(|u| u.deg(j) > t.deg(j) && (j + 1..=n).all(|h| u.deg(h) == t.deg(h)))
            })
            .collect()
    }

    /// Minimal positive `i`-degree gap to terms agreeing with `t` above `i`.
    pub fn nmp(set: &TermSet, t: &Term) -> Vec<Power> {
        let n = set.nvars();
        (1..=n)
            .filter_map(|i| {
                set.iter()
                    .filter(|u| (i + 1..=n).all(|h| u.deg(h) == t.deg(h)))
                    .filter(|u| u.deg(i) > t.deg(i))
                    .map(|u| u.deg(i) - t.deg(i))
                    .min()
                    .map(|k| Power::new(i, k))
            })
            .collect()
    }

    pub fn is_multiplier(set: &TermSet, t: &Term, v: &Term) -> bool {
        !nmp(set, t).iter().any(|p| v.deg(p.var) >= p.exp)
    }

    pub fn janet_divisors(set: &TermSet, w: &Term) -> Vec<Term> {
        set.iter()
            .filter(|t| {
                w.div(t).is_some_and(|q| {
                    let mult = multiplicative_vars(set, t);
                    (1..=set.nvars()).all(|v| q.deg(v) == 0 || mult.contains(&v))
                })
            })
            .cloned()
            .collect()
    }

    pub fn janet_like_divisors(set: &TermSet, w: &Term) -> Vec<Term> {
        set.iter()
            .filter(|t| w.div(t).is_some_and(|q| is_multiplier(set, t, &q)))
            .cloned()
            .collect()
    }

    /// Every product `u * p` has a Janet-like divisor.
    pub fn is_complete(set: &TermSet) -> bool {
        set.iter().all(|u| {
            nmp(set, u)
                .iter()
                .all(|p| !janet_like_divisors(set, &u.mul_var(p.var, p.exp)).is_empty())
        })
    }
}
