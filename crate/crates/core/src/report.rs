//! JSON shapes emitted by the command-line tool. Each converts back to the
//! library types it was produced from.
//!
//! Rows, bars and variables are 1-based in every report.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::barcode::{BarCode, StarPlacement};
use crate::corners::CornerVector;
use crate::error::{Error, Result};
use crate::janet::{CompletionReport, JanetAnnotation, Power, Witness};
use crate::points::{BasisComputation, Polynomial};
use crate::term::{parse_term, Term, TermSet};

fn bad_power(text: &str) -> Error {
    Error::Parse {
        line: 1,
        column: 1,
        message: format!("invalid power '{text}'"),
    }
}

fn parse_power(text: &str) -> Result<Power> {
    Power::parse(text).ok_or_else(|| bad_power(text))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSetReport {
    pub vars: usize,
    pub terms: Vec<String>,
}

impl TermSetReport {
    pub fn new(set: &TermSet) -> Self {
        TermSetReport {
            vars: set.nvars(),
            terms: set.iter().map(Term::to_string).collect(),
        }
    }

    pub fn to_term_set(&self) -> Result<TermSet> {
        TermSet::parse(self.vars, self.terms.iter().map(String::as_str))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarCodeReport {
    pub vars: usize,
    /// 1-lengths per row, row 1 first.
    pub rows: Vec<Vec<usize>>,
    pub labels: Vec<String>,
    /// `[row, bar]` pairs of bars followed by a star.
    pub stars: Vec<[usize; 2]>,
}

impl BarCodeReport {
    pub fn new(code: &BarCode, stars: &StarPlacement) -> Self {
        BarCodeReport {
            vars: code.nvars(),
            rows: (1..=code.nvars()).map(|i| code.row_lengths(i)).collect(),
            labels: code.labels().iter().map(Term::to_string).collect(),
            stars: stars.iter().map(|(i, j)| [i, j + 1]).collect(),
        }
    }

    /// Rebuilds the code from its labels and checks the rows agree. Without
    /// labels the geometry alone is used and labels are re-derived by decoding.
    pub fn to_code(&self) -> Result<BarCode> {
        if self.labels.is_empty() {
            return BarCode::from_row_lengths(&self.rows);
        }
        let labels = TermSet::parse(self.vars, self.labels.iter().map(String::as_str))?;
        let code = BarCode::build(&labels)?;
        let rows: Vec<Vec<usize>> = (1..=code.nvars()).map(|i| code.row_lengths(i)).collect();
        if rows != self.rows {
            return Err(Error::InvalidBarCode(
                "rows do not match the Bar Code of the labels".into(),
            ));
        }
        Ok(code)
    }
}

/// Term string to its nonmultiplicative powers as `x<i>^<k>` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NmpReport(pub IndexMap<String, Vec<String>>);

impl NmpReport {
    pub fn new(annotations: &[JanetAnnotation]) -> Self {
        NmpReport(
            annotations
                .iter()
                .map(|a| {
                    (
                        a.term.to_string(),
                        a.nmp.iter().map(|p| p.to_json_string()).collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn to_powers(&self, nvars: usize) -> Result<Vec<(Term, Vec<Power>)>> {
        self.0
            .iter()
            .map(|(t, ps)| {
                let powers = ps.iter().map(|p| parse_power(p)).collect::<Result<_>>()?;
                Ok((parse_term(t, nvars)?, powers))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub term: String,
    pub power: String,
    pub divisor: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionJson {
    pub complete: bool,
    pub witnesses: Vec<WitnessReport>,
    pub added: Vec<String>,
}

impl CompletionJson {
    pub fn new(report: &CompletionReport) -> Self {
        CompletionJson {
            complete: report.complete,
            witnesses: report
                .witnesses
                .iter()
                .map(|w| WitnessReport {
                    term: w.term.to_string(),
                    power: w.power.to_json_string(),
                    divisor: w.divisor.as_ref().map(Term::to_string),
                })
                .collect(),
            added: report.added.iter().map(Term::to_string).collect(),
        }
    }

    pub fn to_report(&self, nvars: usize) -> Result<CompletionReport> {
        let witnesses = self
            .witnesses
            .iter()
            .map(|w| {
                Ok(Witness {
                    term: parse_term(&w.term, nvars)?,
                    power: parse_power(&w.power)?,
                    divisor: w
                        .divisor
                        .as_deref()
                        .map(|d| parse_term(d, nvars))
                        .transpose()?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(CompletionReport {
            complete: self.complete,
            witnesses,
            added: self
                .added
                .iter()
                .map(|t| parse_term(t, nvars))
                .collect::<Result<_>>()?,
        })
    }
}

/// A completed set together with the terms completion added.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletedReport {
    pub vars: usize,
    pub terms: Vec<String>,
    pub added: Vec<String>,
}

impl CompletedReport {
    pub fn new(set: &TermSet, report: &CompletionReport) -> Self {
        CompletedReport {
            vars: set.nvars(),
            terms: TermSetReport::new(set).terms,
            added: report.added.iter().map(Term::to_string).collect(),
        }
    }

    pub fn to_parts(&self) -> Result<(TermSet, Vec<Term>)> {
        let set = TermSet::parse(self.vars, self.terms.iter().map(String::as_str))?;
        let added = self
            .added
            .iter()
            .map(|t| parse_term(t, self.vars))
            .collect::<Result<_>>()?;
        Ok((set, added))
    }
}

/// Term string to corner vector, Lex-decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CornersReport(pub IndexMap<String, CornerVector>);

impl CornersReport {
    pub fn new(corners: &[(Term, CornerVector)]) -> Self {
        CornersReport(
            corners
                .iter()
                .map(|(t, c)| (t.to_string(), c.clone()))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub vars: usize,
    pub escalier: Vec<String>,
    pub generators: Vec<String>,
    pub completed: Vec<String>,
    pub basis: Vec<String>,
}

impl BasisReport {
    pub fn new(comp: &BasisComputation) -> Self {
        BasisReport {
            vars: comp.escalier.nvars(),
            escalier: TermSetReport::new(&comp.escalier).terms,
            generators: TermSetReport::new(&comp.generators).terms,
            completed: TermSetReport::new(&comp.completed).terms,
            basis: comp.basis.iter().map(Polynomial::to_string).collect(),
        }
    }

    pub fn polynomials(&self) -> Result<Vec<Polynomial>> {
        self.basis
            .iter()
            .map(|p| Polynomial::parse(p, self.vars))
            .collect()
    }
}
