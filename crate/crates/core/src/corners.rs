//! Infinite corners of the Janet-like cones.
//!
//! For `t` in `U`, the corner has `inf` in every Janet-multiplicative
//! direction and `deg_i(t) + k_i - 1` in direction `i` when `x_i^{k_i}` is a
//! nonmultiplicative power: the cone of `t` reaches `i`-degrees strictly
//! below `deg_i(t) + k_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::janet::JanetTable;
use crate::term::{Term, TermSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CornerEntry {
    Finite(u32),
    Infinite(Inf),
}

/// Serialized as the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Inf {
    #[serde(rename = "inf")]
    Inf,
}

impl CornerEntry {
    pub const INFINITE: CornerEntry = CornerEntry::Infinite(Inf::Inf);

    pub fn is_infinite(self) -> bool {
        matches!(self, CornerEntry::Infinite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            CornerEntry::Finite(e) => Some(e),
            CornerEntry::Infinite(_) => None,
        }
    }

    /// Whether an exponent `e` lies within the entry.
    pub fn admits(self, e: u32) -> bool {
        self.finite().is_none_or(|bound| e <= bound)
    }
}

impl fmt::Display for CornerEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CornerEntry::Finite(e) => write!(f, "{e}"),
            CornerEntry::Infinite(_) => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CornerVector(pub Vec<CornerEntry>);

impl CornerVector {
    pub fn entry(&self, var: usize) -> CornerEntry {
        self.0[var - 1]
    }

    pub fn is_all_infinite(&self) -> bool {
        self.0.iter().all(|e| e.is_infinite())
    }

    /// Coordinatewise `w <= self`, with `inf` above everything.
    pub fn covers(&self, w: &Term) -> bool {
        self.0.iter().zip(w.exponents()).all(|(c, &e)| c.admits(e))
    }
}

impl fmt::Display for CornerVector {
    /// `x1^inf*x2^2`: every variable, with its entry.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{}^{}", i + 1, e)?;
        }
        Ok(())
    }
}

/// Corner of every term of `set`, in Lex-decreasing order of the terms.
pub fn infinite_corners(set: &TermSet) -> Result<Vec<(Term, CornerVector)>> {
    let table = JanetTable::new(set)?;
    Ok(corners_of(&table))
}

pub fn corners_of(table: &JanetTable) -> Vec<(Term, CornerVector)> {
    let n = table.set().nvars();
    table
        .annotations()
        .iter()
        .rev()
        .map(|a| {
            let entries = (1..=n)
                .map(|i| match a.nmp_for(i) {
                    Some(p) => CornerEntry::Finite(a.term.deg(i) + p.exp - 1),
                    None => CornerEntry::INFINITE,
                })
                .collect();
            (a.term.clone(), CornerVector(entries))
        })
        .collect()
}
