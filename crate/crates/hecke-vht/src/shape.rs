//! Young diagrams and their marked variant.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers,
//! drawn as a left-justified diagram of squares (English convention: row 1
//! on top, row lengths weakly decreasing downwards). A [`HeckeDiagram`] is
//! a partition optionally carrying a mark on one of its corners; marked
//! diagrams show up at the even positions of vacillating sequences.
//!
//! Coordinates are 1-indexed throughout: [`Cell`] `(r, c)` means row `r`,
//! column `c`.

use std::fmt;

use crate::error::{Error, Result};

/// A square of a diagram, 1-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Cell {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An integer partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Rejects sequences that
    /// are not weakly decreasing or contain an interior zero.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for i in 0..parts.len() {
            if parts[i] == 0 {
                return Err(Error::InvalidPartition(format!(
                    "part {} is zero before the end",
                    i + 1
                )));
            }
            if i > 0 && parts[i] > parts[i - 1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {} after {}",
                    parts[i],
                    parts[i - 1]
                )));
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of columns, i.e. the first part.
    pub fn cols(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Total number of squares.
    pub fn cell_count(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `r` (1-indexed); zero beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            0
        } else {
            self.parts.get(r - 1).copied().unwrap_or(0)
        }
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// True if every square of `inner` is also a square of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.row_len(i + 1) >= p)
    }

    /// The corners: squares whose removal leaves a partition shape.
    /// Listed top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.rows())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    pub fn is_corner(&self, cell: Cell) -> bool {
        cell.row >= 1 && self.row_len(cell.row) == cell.col && self.row_len(cell.row + 1) < cell.col
    }

    /// Removes one corner square.
    pub fn remove_corner(&self, cell: Cell) -> Result<Partition> {
        if !self.is_corner(cell) {
            return Err(Error::NotACorner(cell));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        Partition::new(parts)
    }

    /// Reflects the diagram through its main diagonal.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.cols());
        for c in 1..=self.cols() {
            parts.push(self.parts.iter().take_while(|&&p| p >= c).count());
        }
        Partition { parts }
    }

    /// The squares of `self` that are not squares of `inner`, row by row.
    pub fn skew_cells(&self, inner: &Partition) -> Result<Vec<Cell>> {
        if !self.contains(inner) {
            return Err(Error::NotContained {
                outer: self.to_string(),
                inner: inner.to_string(),
            });
        }
        let mut cells = Vec::new();
        for r in 1..=self.rows() {
            for c in inner.row_len(r) + 1..=self.row_len(r) {
                cells.push(Cell::new(r, c));
            }
        }
        Ok(cells)
    }

    /// All partitions obtained from `self` by adding a rook strip of at
    /// most `max_new` squares (no two in a row, no two in a column). The
    /// empty strip, i.e. `self` itself, is included.
    ///
    /// A rook strip can extend only the top row of each run of equal-length
    /// rows (plus at most one brand-new row), one square each; every subset
    /// of those runs gives a distinct valid extension.
    pub(crate) fn rook_strip_supersets(&self, max_new: usize) -> Vec<Partition> {
        // Indices (0-based) of extendable rows: first row of each equal run,
        // then the phantom empty row below the diagram.
        let mut extendable = Vec::new();
        for i in 0..self.parts.len() {
            if i == 0 || self.parts[i] < self.parts[i - 1] {
                extendable.push(i);
            }
        }
        extendable.push(self.parts.len());

        let mut out = Vec::new();
        let mut chosen = Vec::new();
        fn go(
            base: &Partition,
            extendable: &[usize],
            from: usize,
            budget: usize,
            chosen: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            let mut parts = base.parts.clone();
            for &i in chosen.iter() {
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
            }
            out.push(Partition { parts });
            if budget == 0 {
                return;
            }
            for (k, &i) in extendable.iter().enumerate().skip(from) {
                chosen.push(i);
                go(base, extendable, k + 1, budget - 1, chosen, out);
                chosen.pop();
            }
        }
        go(self, &extendable, 0, max_new, &mut chosen, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// True if `outer / inner` is a rook strip: at most one square in every
/// row and in every column. The empty difference counts.
pub fn is_rook_strip(outer: &Partition, inner: &Partition) -> Result<bool> {
    let cells = outer.skew_cells(inner)?;
    let mut rows_seen = std::collections::BTreeSet::new();
    let mut cols_seen = std::collections::BTreeSet::new();
    for cell in cells {
        if !rows_seen.insert(cell.row) || !cols_seen.insert(cell.col) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A partition together with an optional marked corner.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeckeDiagram {
    shape: Partition,
    mark: Option<Cell>,
}

impl HeckeDiagram {
    pub fn new(shape: Partition, mark: Option<Cell>) -> Result<HeckeDiagram> {
        if let Some(cell) = mark {
            if !shape.is_corner(cell) {
                return Err(Error::MarkNotCorner(cell));
            }
        }
        Ok(HeckeDiagram { shape, mark })
    }

    pub fn unmarked(shape: Partition) -> HeckeDiagram {
        HeckeDiagram { shape, mark: None }
    }

    pub fn empty() -> HeckeDiagram {
        HeckeDiagram::unmarked(Partition::empty())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn mark(&self) -> Option<Cell> {
        self.mark
    }

    pub fn is_marked(&self) -> bool {
        self.mark.is_some()
    }

    /// Conjugates the shape and transposes the mark with it.
    pub fn conjugate(&self) -> HeckeDiagram {
        HeckeDiagram {
            shape: self.shape.conjugate(),
            mark: self.mark.map(|c| Cell::new(c.col, c.row)),
        }
    }
}

impl fmt::Display for HeckeDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape)?;
        if let Some(cell) = self.mark {
            write!(f, "@{},{}", cell.row, cell.col)?;
        }
        Ok(())
    }
}
