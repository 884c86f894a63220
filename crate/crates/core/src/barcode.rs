//! Bar Codes of finite term sets.
//!
//! Row `i` (1-based, one row per variable) groups the Lex-sorted columns into
//! maximal runs sharing the same `pi^i` projection. Rows are indexed by
//! variable (1-based); bars within a row and columns are 0-based.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::term::{Term, TermSet};

/// A bar: a contiguous run of columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bar {
    pub start: usize,
    /// Number of columns spanned (the 1-length).
    pub len: usize,
}

impl Bar {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn columns(&self) -> Range<usize> {
        self.start..self.end()
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct BarCode {
    rows: Vec<Vec<Bar>>,
    /// `bar_at[i][c]`: index of the bar of row `i + 1` covering column `c`.
    bar_at: Vec<Vec<usize>>,
    labels: Vec<Term>,
}

/// Exponent list of a column, stored highest variable first:
/// `(b_n, ..., b_1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EList(Vec<u32>);

impl EList {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Entry for `x_var`.
    pub fn exponent(&self, var: usize) -> u32 {
        self.0[self.0.len() - var]
    }

    pub fn to_term(&self) -> Term {
        Term::new(self.0.iter().rev().copied().collect()).expect("nonempty e-list")
    }
}

/// Positions `(row, bar)` followed by a star.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarPlacement {
    stars: BTreeSet<(usize, usize)>,
}

impl StarPlacement {
    pub fn contains(&self, row: usize, bar: usize) -> bool {
        self.stars.contains(&(row, bar))
    }

    /// Sorted by row, then bar.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.stars.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    pub fn in_row(&self, row: usize) -> Vec<usize> {
        self.stars
            .range((row, 0)..(row + 1, 0))
            .map(|&(_, b)| b)
            .collect()
    }
}

impl BarCode {
    /// Builds the Bar Code of a nonempty term set.
    pub fn build(set: &TermSet) -> Result<BarCode> {
        if set.is_empty() {
            return Err(Error::EmptyInput("a bar code needs at least one term"));
        }
        let n = set.nvars();
        let terms = set.terms();
        let rows = (1..=n)
            .map(|i| {
                let mut bars: Vec<Bar> = Vec::new();
                for (c, t) in terms.iter().enumerate() {
                    match bars.last_mut() {
                        Some(bar) if terms[bar.start].agrees_from(t, i) => bar.len += 1,
                        _ => bars.push(Bar { start: c, len: 1 }),
                    }
                }
                bars
            })
            .collect();
        Ok(Self::assemble(rows, terms.to_vec()))
    }

    /// Builds a Bar Code from the 1-lengths of each row (row 1 first). The
    /// labels are the terms assigned by [`BarCode::decode`].
    pub fn from_row_lengths(lengths: &[Vec<usize>]) -> Result<BarCode> {
        if lengths.is_empty() {
            return Err(Error::NoVariables);
        }
        let m: usize = lengths[0].iter().sum();
        if m == 0 {
            return Err(Error::EmptyInput("a bar code needs at least one column"));
        }
        let mut rows = Vec::with_capacity(lengths.len());
        for (i, row) in lengths.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::InvalidBarCode(format!(
                    "row {} has a bar of length 0",
                    i + 1
                )));
            }
            if row.iter().sum::<usize>() != m {
                return Err(Error::InvalidBarCode(format!(
                    "row {} has length {}, row 1 has {m}",
                    i + 1,
                    row.iter().sum::<usize>()
                )));
            }
            let mut start = 0;
            rows.push(
                row.iter()
                    .map(|&len| {
                        let bar = Bar { start, len };
                        start += len;
                        bar
                    })
                    .collect::<Vec<_>>(),
            );
        }
        if rows[0].iter().any(|b| b.len != 1) {
            return Err(Error::InvalidBarCode("1-bars must have length 1".into()));
        }
        // Every bar boundary of a row must also be a boundary of the row above.
        for i in 1..rows.len() {
            let upper: HashSet<usize> = rows[i - 1].iter().map(|b| b.start).collect();
            if !rows[i].iter().all(|b| upper.contains(&b.start)) {
                return Err(Error::InvalidBarCode(format!(
                    "row {} does not refine row {}",
                    i,
                    i + 1
                )));
            }
        }
        let placeholder = vec![Term::one(rows.len()); m];
        let mut code = Self::assemble(rows, placeholder);
        code.labels = code.decoded_columns();
        Ok(code)
    }

    fn assemble(rows: Vec<Vec<Bar>>, labels: Vec<Term>) -> BarCode {
        let m = labels.len();
        let bar_at = rows
            .iter()
            .map(|row| {
                let mut at = vec![0; m];
                for (j, bar) in row.iter().enumerate() {
                    at[bar.columns()].iter_mut().for_each(|a| *a = j);
                }
                at
            })
            .collect();
        BarCode {
            rows,
            bar_at,
            labels,
        }
    }

    pub fn nvars(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.labels.len()
    }

    /// Bars of row `row` (1-based).
    pub fn row(&self, row: usize) -> &[Bar] {
        &self.rows[row - 1]
    }

    pub fn row_lengths(&self, row: usize) -> Vec<usize> {
        self.row(row).iter().map(|b| b.len).collect()
    }

    /// Number of bars in a row, `mu(row)`.
    pub fn mu(&self, row: usize) -> usize {
        self.rows[row - 1].len()
    }

    /// Index of the bar of `row` lying under column `col`.
    pub fn bar_under(&self, row: usize, col: usize) -> usize {
        self.bar_at[row - 1][col]
    }

    /// Column labels, Lex-sorted.
    pub fn labels(&self) -> &[Term] {
        &self.labels
    }

    /// The bars of row `row - 1` lying over bar `bar` of `row` (`row >= 2`).
    pub fn bars_over(&self, row: usize, bar: usize) -> Range<usize> {
        let b = self.rows[row - 1][bar];
        let above = &self.bar_at[row - 2];
        above[b.start]..above[b.end() - 1] + 1
    }

    /// Whether bar `bar` of `row` is followed by a star: it is the last bar
    /// of its row, or the next bar lies over a different bar of the row below.
    pub fn is_starred(&self, row: usize, bar: usize) -> bool {
        let bars = self.row(row);
        if bar + 1 == bars.len() {
            return true;
        }
        if row == self.nvars() {
            return false;
        }
        self.bar_under(row + 1, bars[bar].start) != self.bar_under(row + 1, bars[bar + 1].start)
    }

    pub fn e_list(&self, col: usize) -> Result<EList> {
        if col >= self.ncols() {
            return Err(Error::IndexOutOfRange {
                index: col,
                max: self.ncols().saturating_sub(1),
            });
        }
        let n = self.nvars();
        let mut entries = Vec::with_capacity(n);
        // n-bars to the left in the whole row.
        entries.push(self.bar_under(n, col) as u32);
        for k in (1..n).rev() {
            // k-bars to the left inside the (k+1)-block containing the column.
            let block = self.bars_over(k + 1, self.bar_under(k + 1, col));
            entries.push((self.bar_under(k, col) - block.start) as u32);
        }
        Ok(EList(entries))
    }

    /// Column terms produced by the labelling rules: the `j`-th `n`-bar gets
    /// `x_n^j`, and the bars lying over a bar labelled `t` get
    /// `t, t*x_k, t*x_k^2, ...` from left to right.
    fn decoded_columns(&self) -> Vec<Term> {
        let n = self.nvars();
        let mut bar_labels: Vec<Term> = (0..self.mu(n))
            .map(|j| Term::var_power(n, n, j as u32))
            .collect();
        for k in (1..n).rev() {
            let mut next = vec![Term::one(n); self.mu(k)];
            for (j, t) in bar_labels.iter().enumerate() {
                let over = self.bars_over(k + 1, j);
                let first = over.start;
                for b in over {
                    next[b] = t.mul_var(k, (b - first) as u32);
                }
            }
            bar_labels = next;
        }
        bar_labels
    }

    /// The term set assigned to the code by the labelling rules.
    pub fn decode(&self) -> TermSet {
        TermSet::new(self.nvars(), self.decoded_columns()).expect("decoded terms share arity")
    }

    /// Admissibility via e-lists: every positive entry can be decremented
    /// to the e-list of some other column.
    pub fn is_admissible(&self) -> bool {
        let elists: Vec<EList> = (0..self.ncols())
            .map(|c| self.e_list(c).expect("column in range"))
            .collect();
        let known: HashSet<&EList> = elists.iter().collect();
        elists.iter().all(|e| {
            (0..e.0.len()).all(|p| {
                if e.0[p] == 0 {
                    return true;
                }
                let mut dec = e.clone();
                dec.0[p] -= 1;
                known.contains(&dec)
            })
        })
    }

    pub fn star_positions(&self) -> StarPlacement {
        let stars = (1..=self.nvars())
            .flat_map(|i| (0..self.mu(i)).map(move |j| (i, j)))
            .filter(|&(i, j)| self.is_starred(i, j))
            .collect();
        StarPlacement { stars }
    }

    /// The star set of the order ideal encoded by an admissible code.
    pub fn star_set(&self) -> Result<TermSet> {
        if !self.is_admissible() {
            return Err(Error::NotAdmissible);
        }
        let columns = self.decoded_columns();
        let stars = self.star_positions();
        let terms = stars.iter().map(|(i, j)| {
            let rep = &columns[self.row(i)[j].start];
            rep.project(i).mul_var(i, 1)
        });
        TermSet::new(self.nvars(), terms)
    }

    /// Text drawing: a header of labels, then one line per row with bars
    /// drawn as runs of `-` and stars in the separator after a bar.
    pub fn render_ascii(&self, stars: Option<&StarPlacement>) -> String {
        let names: Vec<String> = self.labels.iter().map(|t| t.to_string()).collect();
        let width = names
            .iter()
            .map(|s| s.chars().count())
            .max()
            .unwrap_or(1)
            .max(1);
        let cell = width + 1;
        let mut out = String::new();

        let header: Vec<String> = names.iter().map(|s| format!("{s:<width$}")).collect();
        out.push_str(header.join(" ").trim_end());
        out.push('\n');

        for i in 1..=self.nvars() {
            let mut line = vec![' '; self.ncols() * cell];
            for (j, bar) in self.row(i).iter().enumerate() {
                let from = bar.start * cell;
                let to = bar.end() * cell - 1;
                line[from..to].iter_mut().for_each(|c| *c = '-');
                if stars.is_some_and(|s| s.contains(i, j)) {
                    line[to] = '*';
                }
            }
            let text: String = line.into_iter().collect();
            out.push_str(text.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for BarCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<usize>> = (1..=self.nvars()).map(|i| self.row_lengths(i)).collect();
        f.debug_struct("BarCode")
            .field("rows", &rows)
            .field("labels", &self.labels)
            .finish()
    }
}
