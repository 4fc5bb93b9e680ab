//! Tabular datasets of discrete state assignments.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("dataset is empty")]
    Empty,
    #[error("row {row} has {got} values, expected {expected}")]
    RowWidth { row: usize, got: usize, expected: usize },
    #[error("csv line {line}: {message}")]
    Csv { line: usize, message: String },
    #[error("unknown outcome column '{0}'")]
    UnknownOutcome(String),
}

/// A matrix of discrete feature assignments plus a designated outcome column.
///
/// Values are state indices; the schema (column names, per-column
/// cardinalities where known) travels with the producing network. Storage is
/// row-major and immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    columns: Vec<String>,
    outcome_col: usize,
    values: Vec<u32>,
    n_rows: usize,
}

impl Dataset {
    pub fn new(columns: Vec<String>, outcome_col: usize, rows: &[Vec<u32>]) -> Result<Self, DataError> {
        let width = columns.len();
        let mut values = Vec::with_capacity(width * rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(DataError::RowWidth { row: i, got: row.len(), expected: width });
            }
            values.extend_from_slice(row);
        }
        Ok(Dataset { columns, outcome_col, values, n_rows: rows.len() })
    }

    pub(crate) fn from_flat(columns: Vec<String>, outcome_col: usize, values: Vec<u32>) -> Self {
        let n_rows = if columns.is_empty() { 0 } else { values.len() / columns.len() };
        debug_assert_eq!(n_rows * columns.len(), values.len());
        Dataset { columns, outcome_col, values, n_rows }
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn outcome_col(&self) -> usize {
        self.outcome_col
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn is_empty(&self) -> bool {
        self.n_rows == 0
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        let w = self.columns.len();
        &self.values[i * w..(i + 1) * w]
    }

    #[inline]
    pub fn outcome(&self, i: usize) -> u32 {
        self.row(i)[self.outcome_col]
    }

    /// New dataset holding the rows at `indices`, in that order.
    pub fn select(&self, indices: &[usize]) -> Dataset {
        let w = self.columns.len();
        let mut values = Vec::with_capacity(indices.len() * w);
        for &i in indices {
            values.extend_from_slice(self.row(i));
        }
        Dataset { columns: self.columns.clone(), outcome_col: self.outcome_col, values, n_rows: indices.len() }
    }

    /// Copy with row `index` replaced by `row`.
    pub fn with_row_replaced(&self, index: usize, row: &[u32]) -> Result<Dataset, DataError> {
        let w = self.columns.len();
        if row.len() != w {
            return Err(DataError::RowWidth { row: index, got: row.len(), expected: w });
        }
        let mut out = self.clone();
        out.values[index * w..(index + 1) * w].copy_from_slice(row);
        Ok(out)
    }

    /// Serialize to CSV: a header row of column names, then one row of state
    /// indices per record.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for i in 0..self.n_rows {
            let row = self.row(i);
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str, outcome: &str) -> Result<Dataset, DataError> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(DataError::Empty)?;
        let columns: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
        let outcome_col = columns
            .iter()
            .position(|c| c == outcome)
            .ok_or_else(|| DataError::UnknownOutcome(outcome.to_string()))?;
        let mut values = Vec::new();
        let mut n_rows = 0;
        for (lineno, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != columns.len() {
                return Err(DataError::Csv {
                    line: lineno + 1,
                    message: format!("{} fields, expected {}", fields.len(), columns.len()),
                });
            }
            for f in fields {
                let v: u32 = f.trim().parse().map_err(|_| DataError::Csv {
                    line: lineno + 1,
                    message: format!("'{f}' is not a state index"),
                })?;
                values.push(v);
            }
            n_rows += 1;
        }
        Ok(Dataset { columns, outcome_col, values, n_rows })
    }
}
