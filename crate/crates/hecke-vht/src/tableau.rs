//! Increasing tableaux: fillings of Young diagrams that strictly increase
//! along every row and down every column. Repeated entries are allowed as
//! long as they sit in different rows and columns.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::shape::{Cell, HeckeDiagram, Partition};

/// A strictly increasing filling of a partition shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IncreasingTableau {
    rows: Vec<Vec<usize>>,
}

impl IncreasingTableau {
    /// Validates rows as an increasing tableau. Trailing empty rows are
    /// dropped; interior empty rows or non-partition row lengths are
    /// rejected.
    pub fn from_rows(mut rows: Vec<Vec<usize>>) -> Result<IncreasingTableau> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Partition::new(lengths).map_err(|e| Error::ShapeMismatch(format!("row lengths: {e}")))?;
        for (i, row) in rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if e == 0 {
                    return Err(Error::NonPositive);
                }
                if j > 0 && row[j - 1] >= e {
                    return Err(Error::NotIncreasing {
                        place: format!(
                            "row {} at {} and {}",
                            i + 1,
                            Cell::new(i + 1, j),
                            Cell::new(i + 1, j + 1)
                        ),
                        a: row[j - 1],
                        b: e,
                    });
                }
                if i > 0 && rows[i - 1][j] >= e {
                    return Err(Error::NotIncreasing {
                        place: format!(
                            "column {} at {} and {}",
                            j + 1,
                            Cell::new(i, j + 1),
                            Cell::new(i + 1, j + 1)
                        ),
                        a: rows[i - 1][j],
                        b: e,
                    });
                }
            }
        }
        Ok(IncreasingTableau { rows })
    }

    /// Validates a cell-to-entry map against an explicit shape. Every
    /// square of the shape must be filled and nothing outside it.
    pub fn from_cells(
        shape: &Partition,
        entries: &BTreeMap<Cell, usize>,
    ) -> Result<IncreasingTableau> {
        for &cell in entries.keys() {
            if !shape.contains_cell(cell) {
                return Err(Error::ShapeMismatch(format!(
                    "entry at {cell} lies outside shape {shape}"
                )));
            }
        }
        let mut rows = Vec::with_capacity(shape.rows());
        for r in 1..=shape.rows() {
            let mut row = Vec::with_capacity(shape.row_len(r));
            for c in 1..=shape.row_len(r) {
                match entries.get(&Cell::new(r, c)) {
                    Some(&e) => row.push(e),
                    None => {
                        return Err(Error::ShapeMismatch(format!(
                            "square {} of shape {shape} has no entry",
                            Cell::new(r, c)
                        )))
                    }
                }
            }
            rows.push(row);
        }
        IncreasingTableau::from_rows(rows)
    }

    pub fn empty() -> IncreasingTableau {
        IncreasingTableau::default()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("row lengths of a valid tableau form a partition")
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    /// Number of rows, `r(T)`.
    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns, `c(T)`.
    pub fn col_count(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn max_entry(&self) -> Option<usize> {
        // rows increase downwards, so the maximum sits in some row's tail;
        // scanning everything keeps it obvious.
        self.rows.iter().flatten().copied().max()
    }

    /// Removes every square holding `k`, which must be maximal among the
    /// entries (or absent, in which case the tableau is returned as is).
    /// Maximality puts each such square at the end of its row and the
    /// bottom of its column, so the result is again a tableau.
    pub fn delete_letter(&self, k: usize) -> Result<IncreasingTableau> {
        let present = self.rows.iter().flatten().any(|&e| e == k);
        if !present {
            return Ok(self.clone());
        }
        let max = self.max_entry().unwrap();
        if k != max {
            return Err(Error::NotMaximalLetter { letter: k, max });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&e| e != k).collect())
            .collect();
        IncreasingTableau::from_rows(rows)
    }

    /// Adds the given squares, all holding `letter`, and revalidates. The
    /// squares must extend the shape (each new square continues its row or
    /// starts the next one).
    pub fn fill_cells(&self, cells: &[Cell], letter: usize) -> Result<IncreasingTableau> {
        let mut rows = self.rows.clone();
        let mut cells = cells.to_vec();
        cells.sort();
        for cell in cells {
            if cell.row == rows.len() + 1 && cell.col == 1 {
                rows.push(vec![letter]);
            } else if cell.row <= rows.len() && cell.col == rows[cell.row - 1].len() + 1 {
                rows[cell.row - 1].push(letter);
            } else {
                return Err(Error::ShapeMismatch(format!(
                    "square {cell} does not extend the shape"
                )));
            }
        }
        IncreasingTableau::from_rows(rows)
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// An increasing tableau with an optional marked corner.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeckeTableau {
    tableau: IncreasingTableau,
    mark: Option<Cell>,
}

impl HeckeTableau {
    pub fn new(tableau: IncreasingTableau, mark: Option<Cell>) -> Result<HeckeTableau> {
        if let Some(cell) = mark {
            if !tableau.shape().is_corner(cell) {
                return Err(Error::MarkNotCorner(cell));
            }
        }
        Ok(HeckeTableau { tableau, mark })
    }

    pub fn unmarked(tableau: IncreasingTableau) -> HeckeTableau {
        HeckeTableau {
            tableau,
            mark: None,
        }
    }

    pub fn empty() -> HeckeTableau {
        HeckeTableau::unmarked(IncreasingTableau::empty())
    }

    pub fn underlying(&self) -> &IncreasingTableau {
        &self.tableau
    }

    pub fn mark(&self) -> Option<Cell> {
        self.mark
    }

    /// Shape plus mark, forgetting the entries.
    pub fn diagram(&self) -> HeckeDiagram {
        HeckeDiagram::new(self.tableau.shape(), self.mark)
            .expect("mark of a valid marked tableau sits on a corner")
    }
}

impl fmt::Display for HeckeTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tableau)?;
        if let Some(cell) = self.mark {
            write!(f, "@{},{}", cell.row, cell.col)?;
        }
        Ok(())
    }
}
