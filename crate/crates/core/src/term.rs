//! Terms (monomials) in `x1 < x2 < ... < xn`, the lexicographical order, and
//! the textual term grammar.
//!
//! ```text
//! term   := "1" | factor ("*" factor)* | "[" nat ("," nat)* "]"
//! factor := "x" index ("^" nat)?
//! ```
//!
//! Whitespace is ignored and `#` starts a comment running to the end of the line.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: u32 = i32::MAX as u32;

/// A term `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// Position `i - 1` holds the exponent of `xi`. The ordering implemented by
/// [`Ord`] is Lex with `x1 < ... < xn`: terms are compared at the highest
/// variable where they differ. Terms of different arity compare by arity
/// first so that `Ord` stays total; use [`lex_compare`] when a mismatch
/// should be an error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exps: Vec<u32>,
}

impl Term {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::NoVariables);
        }
        Ok(Term { exps })
    }

    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        assert!(nvars > 0, "a term needs at least one variable");
        Term {
            exps: vec![0; nvars],
        }
    }

    /// The variable `x_var` (1-based) in `nvars` variables, raised to `exp`.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Self {
        assert!((1..=nvars).contains(&var), "variable index out of range");
        let mut t = Term::one(nvars);
        t.exps[var - 1] = exp;
        t
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_var`, 1-based.
    pub fn deg(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Smallest variable index dividing the term, or `None` for `1`.
    pub fn min_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0).map(|p| p + 1)
    }

    pub fn mul(&self, other: &Term) -> Term {
        assert_eq!(self.nvars(), other.nvars(), "arity mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Term { exps }
    }

    /// Multiplies by `x_var^exp`.
    pub fn mul_var(&self, var: usize, exp: u32) -> Term {
        let mut t = self.clone();
        t.exps[var - 1] = t.exps[var - 1].checked_add(exp).expect("exponent overflow");
        t
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Term) -> Option<Term> {
        if self.nvars() != other.nvars() {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Term { exps })
    }

    /// Divides by `x_var` once, if possible.
    pub fn div_var(&self, var: usize) -> Option<Term> {
        let e = self.exps[var - 1].checked_sub(1)?;
        let mut t = self.clone();
        t.exps[var - 1] = e;
        Some(t)
    }

    /// Coordinatewise `<=`. Panics on arity mismatch; see [`divides`].
    pub fn divides(&self, other: &Term) -> bool {
        assert_eq!(self.nvars(), other.nvars(), "arity mismatch");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `pi^i`: zero the exponents of `x1 .. x(i-1)`. Panics if `i` is out of
    /// range; see [`pi_projection`].
    pub fn project(&self, i: usize) -> Term {
        assert!(
            (1..=self.nvars()).contains(&i),
            "projection index out of range"
        );
        let mut exps = self.exps.clone();
        exps[..i - 1].iter_mut().for_each(|e| *e = 0);
        Term { exps }
    }

    /// Whether `self` and `other` agree on the exponents of `x_from .. xn`.
    pub fn agrees_from(&self, other: &Term, from: usize) -> bool {
        self.exps[from - 1..] == other.exps[from - 1..]
    }

    /// Parses a term in `nvars` variables.
    pub fn parse(text: &str, nvars: usize) -> Result<Term> {
        parse_term(text, nvars)
    }
}

fn lex_cmp_unchecked(a: &[u32], b: &[u32]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars()
            .cmp(&other.nvars())
            .then_with(|| lex_cmp_unchecked(&self.exps, &other.exps))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

/// Lex comparison, failing on arity mismatch.
pub fn lex_compare(a: &Term, b: &Term) -> Result<Ordering> {
    check_same_arity(a, b)?;
    Ok(lex_cmp_unchecked(&a.exps, &b.exps))
}

/// `pi^i(t) = x_i^{a_i} ... x_n^{a_n}`.
pub fn pi_projection(i: usize, t: &Term) -> Result<Term> {
    if !(1..=t.nvars()).contains(&i) {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: t.nvars(),
        });
    }
    Ok(t.project(i))
}

pub fn divides(s: &Term, t: &Term) -> Result<bool> {
    check_same_arity(s, t)?;
    Ok(s.divides(t))
}

fn check_same_arity(a: &Term, b: &Term) -> Result<()> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(())
}

pub fn format_term(t: &Term) -> String {
    t.to_string()
}

/// A term as read from text, before its arity is fixed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum RawTerm {
    /// `(variable index, exponent)` factors; empty for `1`.
    Factors(Vec<(usize, u32)>),
    List(Vec<u32>),
}

impl RawTerm {
    /// Number of variables the term needs at least.
    pub(crate) fn min_vars(&self) -> usize {
        match self {
            RawTerm::Factors(fs) => fs.iter().map(|&(v, _)| v).max().unwrap_or(1),
            RawTerm::List(l) => l.len(),
        }
    }

    pub(crate) fn resolve(&self, nvars: usize, line: usize) -> Result<Term> {
        if nvars == 0 {
            return Err(Error::NoVariables);
        }
        match self {
            RawTerm::List(l) => {
                if l.len() != nvars {
                    return Err(Error::Dimension {
                        expected: nvars,
                        found: l.len(),
                    });
                }
                Ok(Term { exps: l.clone() })
            }
            RawTerm::Factors(fs) => {
                let mut exps = vec![0u32; nvars];
                for &(v, e) in fs {
                    if v > nvars {
                        return Err(Error::parse(
                            line,
                            1,
                            format!("variable x{v} exceeds the {nvars} declared variables"),
                        ));
                    }
                    exps[v - 1] = exps[v - 1]
                        .checked_add(e)
                        .filter(|&s| s <= MAX_EXPONENT)
                        .ok_or_else(|| Error::parse(line, 1, "exponent overflow"))?;
                }
                Ok(Term { exps })
            }
        }
    }
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        // Strip the comment, keep 1-based columns of the remaining characters.
        let body = match src.find('#') {
            Some(p) => &src[..p],
            None => src,
        };
        let chars = body
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Cursor {
            chars,
            pos: 0,
            line,
            _src: src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(col, _)| col)
            .or_else(|| self.chars.last().map(|&(col, _)| col + 1))
            .unwrap_or(1)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), msg)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(self.err(format!("expected '{c}', found '{x}'"))),
            None => Err(self.err(format!("expected '{c}', found end of input"))),
        }
    }

    fn nat(&mut self) -> Result<u32> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            value = value * 10 + c.to_digit(10).unwrap() as u64;
            if value > MAX_EXPONENT as u64 {
                return Err(self.err("number exceeds 2^31-1"));
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a natural number"));
        }
        Ok(value as u32)
    }

    fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }
}

/// Parses one term without fixing its arity.
pub(crate) fn parse_raw(text: &str, line: usize) -> Result<RawTerm> {
    let mut cur = Cursor::new(text, line);
    if cur.is_empty() {
        return Err(cur.err("empty term"));
    }
    let raw = match cur.peek() {
        Some('[') => {
            cur.pos += 1;
            let mut list = vec![cur.nat()?];
            while cur.peek() == Some(',') {
                cur.pos += 1;
                list.push(cur.nat()?);
            }
            cur.expect(']')?;
            RawTerm::List(list)
        }
        Some('x') => {
            let mut factors = Vec::new();
            loop {
                cur.expect('x')?;
                let col = cur.column();
                let var = cur.nat()? as usize;
                if var == 0 {
                    return Err(Error::parse(line, col, "variables are numbered from 1"));
                }
                let exp = if cur.peek() == Some('^') {
                    cur.pos += 1;
                    cur.nat()?
                } else {
                    1
                };
                factors.push((var, exp));
                if cur.peek() == Some('*') {
                    cur.pos += 1;
                } else {
                    break;
                }
            }
            RawTerm::Factors(factors)
        }
        Some('1') => {
            cur.pos += 1;
            RawTerm::Factors(Vec::new())
        }
        Some(c) => return Err(cur.err(format!("unexpected '{c}'"))),
        None => unreachable!(),
    };
    if let Some(c) = cur.peek() {
        return Err(cur.err(format!("trailing input '{c}'")));
    }
    Ok(raw)
}

/// Parses a term in `nvars` variables.
pub fn parse_term(text: &str, nvars: usize) -> Result<Term> {
    parse_raw(text, 1)?.resolve(nvars, 1)
}

/// A duplicate-free set of terms in a fixed number of variables, kept sorted
/// Lex-increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TermSet {
    nvars: usize,
    terms: Vec<Term>,
}

impl TermSet {
    pub fn new(nvars: usize, terms: impl IntoIterator<Item = Term>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::NoVariables);
        }
        let mut terms: Vec<Term> = terms.into_iter().collect();
        if let Some(bad) = terms.iter().find(|t| t.nvars() != nvars) {
            return Err(Error::Dimension {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        terms.sort();
        terms.dedup();
        Ok(TermSet { nvars, terms })
    }

    /// Builds a set from exponent vectors.
    pub fn from_exponents<I, V>(nvars: usize, exps: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<u32>>,
    {
        let terms = exps
            .into_iter()
            .map(|e| Term::new(e.into()))
            .collect::<Result<Vec<_>>>()?;
        TermSet::new(nvars, terms)
    }

    /// Parses whitespace-free term strings such as `"x1^2*x3"`.
    pub fn parse<'a>(nvars: usize, items: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let terms = items
            .into_iter()
            .map(|s| parse_term(s, nvars))
            .collect::<Result<Vec<_>>>()?;
        TermSet::new(nvars, terms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Term> {
        self.terms.iter()
    }

    pub fn index_of(&self, t: &Term) -> Option<usize> {
        self.terms.binary_search(t).ok()
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.index_of(t).is_some()
    }

    /// Inserts `t`, keeping the order. Returns `false` if it was present.
    pub fn insert(&mut self, t: Term) -> Result<bool> {
        if t.nvars() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: t.nvars(),
            });
        }
        match self.terms.binary_search(&t) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.terms.insert(pos, t);
                Ok(true)
            }
        }
    }

    pub fn is_subset(&self, other: &TermSet) -> bool {
        self.terms.iter().all(|t| other.contains(t))
    }

    /// Coordinatewise maximum of the exponents.
    pub fn bounding_box(&self) -> Vec<u32> {
        let mut bound = vec![0; self.nvars];
        for t in &self.terms {
            for (b, &e) in bound.iter_mut().zip(t.exponents()) {
                *b = (*b).max(e);
            }
        }
        bound
    }

    /// A term of the set one of whose immediate divisors is missing.
    pub fn order_ideal_violation(&self) -> Option<&Term> {
        self.terms
            .iter()
            .find(|t| (1..=self.nvars).any(|v| t.div_var(v).is_some_and(|d| !self.contains(&d))))
    }

    /// Closed under divisibility.
    pub fn is_order_ideal(&self) -> bool {
        self.order_ideal_violation().is_none()
    }

    /// Whether some element divides `w`, i.e. `w` lies in the generated
    /// semigroup ideal.
    pub fn ideal_contains(&self, w: &Term) -> bool {
        self.terms.iter().any(|t| t.divides(w))
    }
}

impl fmt::Display for TermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for TermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TermSet[{}]{self}", self.nvars)
    }
}

impl<'a> IntoIterator for &'a TermSet {
    type Item = &'a Term;
    type IntoIter = std::slice::Iter<'a, Term>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
