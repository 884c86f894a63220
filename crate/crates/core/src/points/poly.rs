use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use super::{parse_rational, Rational};
use crate::error::{Error, Result};
use crate::term::{parse_raw, Term};

/// A polynomial with exact rational coefficients. Zero coefficients are never
/// stored; terms are kept in Lex order, so the leading term is the last key.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    coeffs: BTreeMap<Term, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_term(t: &Term) -> Self {
        Self::monomial(Rational::one(), t)
    }

    pub fn monomial(c: Rational, t: &Term) -> Self {
        let mut p = Self::zero(t.nvars());
        p.add_term(c, t);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Rational, Term)>) -> Self {
        let mut p = Self::zero(nvars);
        for (c, t) in terms {
            p.add_term(c, &t);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of terms with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t` (zero if absent).
    pub fn coeff(&self, t: &Term) -> Rational {
        self.coeffs.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.coeffs.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    /// Terms with nonzero coefficient, Lex-increasing.
    pub fn support(&self) -> impl Iterator<Item = &Term> {
        self.coeffs.keys()
    }

    /// `(coefficient, term)` pairs, Lex-increasing.
    pub fn iter(&self) -> impl Iterator<Item = (&Rational, &Term)> {
        self.coeffs.iter().map(|(t, c)| (c, t))
    }

    pub fn add_term(&mut self, c: Rational, t: &Term) {
        assert_eq!(t.nvars(), self.nvars, "arity mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(t.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(t);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (c, t) in other.iter() {
            out.add_term(c.clone(), t);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .map(|(t, c)| (t.clone(), c * k))
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        evaluate(self, point)
    }

    /// Parses text such as `x1^2 - 1/2*x1 + 3`.
    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial> {
        let body = text.split('#').next().unwrap_or("");
        let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(1, 1, "empty polynomial"));
        }
        if compact == "0" {
            return Ok(Self::zero(nvars));
        }
        let mut out = Self::zero(nvars);
        let mut chunks = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                chunks.push(&compact[start..i]);
                start = i;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (negative, rest) = match chunk.as_bytes().first() {
                Some(b'-') => (true, &chunk[1..]),
                Some(b'+') => (false, &chunk[1..]),
                _ => (false, chunk),
            };
            let (coeff, term) = if rest.starts_with('x') {
                (Rational::one(), rest)
            } else {
                match rest.split_once('*') {
                    Some((c, t)) => (parse_rational(c, 1, 1)?, t),
                    None => (parse_rational(rest, 1, 1)?, "1"),
                }
            };
            let term = parse_raw(term, 1)?.resolve(nvars, 1)?;
            out.add_term(if negative { -coeff } else { coeff }, &term);
        }
        Ok(out)
    }
}

/// Exact value of `f` at `point`.
pub fn evaluate(f: &Polynomial, point: &[Rational]) -> Result<Rational> {
    if point.len() != f.nvars {
        return Err(Error::Dimension {
            expected: f.nvars,
            found: point.len(),
        });
    }
    Ok(f.coeffs
        .iter()
        .map(|(t, c)| c * term_value(t, point))
        .fold(Rational::zero(), |acc, x| acc + x))
}

pub(crate) fn term_value(t: &Term, point: &[Rational]) -> Rational {
    t.exponents()
        .iter()
        .zip(point)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, x)| num::pow(x.clone(), e as usize))
        .fold(Rational::one(), |acc, x| acc * x)
}

impl fmt::Display for Polynomial {
    /// Leading term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.coeffs.iter().rev().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if t.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{magnitude}*{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn evaluation() {
        let one = Polynomial::from_term(&Term::one(2));
        assert_eq!(evaluate(&one, &[q(7, 3), q(-1, 1)]).unwrap(), q(1, 1));
        let xy = Polynomial::parse("x1*x2", 2).unwrap();
        assert_eq!(evaluate(&xy, &[q(2, 1), q(3, 2)]).unwrap(), q(3, 1));
        let f = Polynomial::parse("x1^2 - x1", 1).unwrap();
        assert_eq!(evaluate(&f, &[q(1, 1)]).unwrap(), q(0, 1));
        assert!(evaluate(&f, &[q(1, 1), q(2, 1)]).is_err());
    }

    #[test]
    fn display_and_parse() {
        let p = Polynomial::parse("x1^2 - 1/2*x1 + 3", 1).unwrap();
        assert_eq!(p.to_string(), "x1^2 - 1/2*x1 + 3");
        assert_eq!(Polynomial::parse(&p.to_string(), 1).unwrap(), p);
        let n = Polynomial::parse("-x2 + x1 - 2/3", 2).unwrap();
        assert_eq!(n.to_string(), "-x2 + x1 - 2/3");
        assert_eq!(n.leading_term(), Some(&Term::parse("x2", 2).unwrap()));
        assert_eq!(Polynomial::parse("0", 2).unwrap(), Polynomial::zero(2));
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert!(Polynomial::parse("x1 + 0.5", 1).is_err());
    }

    #[test]
    fn arithmetic_cancels() {
        let a = Polynomial::parse("x1 + 1", 1).unwrap();
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.scale(&q(2, 1)).to_string(), "2*x1 + 2");
    }
}
