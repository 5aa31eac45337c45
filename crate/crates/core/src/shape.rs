//! Lattice cells and finite cell sets in matrix coordinates.
//!
//! A cell `(i, j)` sits in row `i` (counted downward) and column `j`
//! (counted rightward). Every shape in this crate is a finite set of such
//! cells; all derived geometry (row intervals, corners, normalization)
//! lives here.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::ShapeError;

/// A lattice point `(row, col)`.
///
/// Ordering is row-major, so iterating a [`Shape`] visits cells in row
/// reading order (top row first, left to right).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Cell {
    pub row: i64,
    pub col: i64,
}

impl Cell {
    pub const fn new(row: i64, col: i64) -> Self {
        Cell { row, col }
    }

    /// `self` lies strictly below and strictly left of `other`.
    pub fn is_strictly_south_west_of(&self, other: &Cell) -> bool {
        self.row > other.row && self.col < other.col
    }

    /// `self` lies weakly above and weakly left of `other`.
    pub fn is_weakly_north_west_of(&self, other: &Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    fn neighbours(self) -> [Cell; 4] {
        [
            Cell::new(self.row - 1, self.col),
            Cell::new(self.row + 1, self.col),
            Cell::new(self.row, self.col - 1),
            Cell::new(self.row, self.col + 1),
        ]
    }
}

impl From<[i64; 2]> for Cell {
    fn from([row, col]: [i64; 2]) -> Self {
        Cell { row, col }
    }
}

impl From<Cell> for [i64; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl From<(i64, i64)> for Cell {
    fn from((row, col): (i64, i64)) -> Self {
        Cell { row, col }
    }
}

impl Add for Cell {
    type Output = Cell;
    fn add(self, rhs: Cell) -> Cell {
        Cell::new(self.row + rhs.row, self.col + rhs.col)
    }
}

impl Sub for Cell {
    type Output = Cell;
    fn sub(self, rhs: Cell) -> Cell {
        Cell::new(self.row - rhs.row, self.col - rhs.col)
    }
}

impl Neg for Cell {
    type Output = Cell;
    fn neg(self) -> Cell {
        Cell::new(-self.row, -self.col)
    }
}

impl Mul<Cell> for i64 {
    type Output = Cell;
    fn mul(self, rhs: Cell) -> Cell {
        Cell::new(self * rhs.row, self * rhs.col)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A finite set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Shape {
    cells: BTreeSet<Cell>,
}

impl FromIterator<Cell> for Shape {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Shape { cells: iter.into_iter().collect() }
    }
}

impl<'a> IntoIterator for &'a Shape {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter()
    }
}

impl Shape {
    pub fn new() -> Self {
        Shape::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        pairs.into_iter().map(Cell::from).collect()
    }

    /// A single row `(row, first..=last)`.
    pub fn row_segment(row: i64, first: i64, last: i64) -> Self {
        (first..=last).map(|c| Cell::new(row, c)).collect()
    }

    /// Builds the skew shape `lambda / mu`.
    ///
    /// Parts of `lambda` are laid out bottom-up: `lambda[0]` is the bottom
    /// row and the last part is row 1. `mu[k]` removes the leftmost cells of
    /// the same row as `lambda[k]`, so `lambda = (4,4)`, `mu = (1)` gives
    /// `{(1,1..4), (2,2..4)}`.
    pub fn from_skew(lambda: &[u32], mu: &[u32]) -> Result<Shape, ShapeError> {
        check_partition("lambda", lambda)?;
        check_partition("mu", mu)?;
        if lambda.is_empty() {
            return Err(ShapeError::InvalidPartition("lambda has no parts".into()));
        }
        if mu.len() > lambda.len() {
            return Err(ShapeError::InvalidPartition(format!(
                "mu has {} parts but lambda only {}",
                mu.len(),
                lambda.len()
            )));
        }
        let rows = lambda.len();
        let mut cells = Shape::new();
        for (k, &len) in lambda.iter().enumerate() {
            let row = (rows - k) as i64;
            let trim = mu.get(k).copied().unwrap_or(0);
            if trim >= len {
                return Err(ShapeError::EmptyRow { row });
            }
            for col in (trim + 1)..=len {
                cells.insert(Cell::new(row, col as i64));
            }
        }
        if !cells.contains(&Cell::new(1, 1)) {
            return Err(ShapeError::MissingOrigin);
        }
        Ok(cells)
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: &Cell) -> bool {
        self.cells.remove(c)
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.contains(c)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Cell> + ExactSizeIterator {
        self.cells.iter()
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn min_row(&self) -> Option<i64> {
        self.cells.first().map(|c| c.row)
    }

    pub fn max_row(&self) -> Option<i64> {
        self.cells.last().map(|c| c.row)
    }

    pub fn min_col(&self) -> Option<i64> {
        self.cells.iter().map(|c| c.col).min()
    }

    pub fn max_col(&self) -> Option<i64> {
        self.cells.iter().map(|c| c.col).max()
    }

    /// Columns of every row, keyed by row index, each sorted ascending.
    pub fn rows(&self) -> BTreeMap<i64, Vec<i64>> {
        let mut rows: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for c in &self.cells {
            rows.entry(c.row).or_default().push(c.col);
        }
        rows
    }

    /// Rows of every column, keyed by column index, each sorted ascending.
    pub fn columns(&self) -> BTreeMap<i64, Vec<i64>> {
        let mut cols: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for c in &self.cells {
            cols.entry(c.col).or_default().push(c.row);
        }
        cols
    }

    /// Cells of the given row, left to right.
    pub fn row(&self, row: i64) -> impl Iterator<Item = &Cell> {
        self.cells.range(Cell::new(row, i64::MIN)..=Cell::new(row, i64::MAX))
    }

    /// Largest number of cells in any column.
    pub fn max_column_height(&self) -> usize {
        self.columns().values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn translate(&self, by: Cell) -> Shape {
        self.cells.iter().map(|&c| c + by).collect()
    }

    pub fn union(&self, other: &Shape) -> Shape {
        self.cells.union(&other.cells).copied().collect()
    }

    pub fn intersection(&self, other: &Shape) -> Shape {
        self.cells.intersection(&other.cells).copied().collect()
    }

    pub fn difference(&self, other: &Shape) -> Shape {
        self.cells.difference(&other.cells).copied().collect()
    }

    pub fn is_subset(&self, other: &Shape) -> bool {
        self.cells.is_subset(&other.cells)
    }

    pub fn is_disjoint(&self, other: &Shape) -> bool {
        self.cells.is_disjoint(&other.cells)
    }

    /// 4-adjacency connectivity.
    pub fn is_connected(&self) -> Result<bool, ShapeError> {
        let start = *self.cells.first().ok_or(ShapeError::EmptyShape)?;
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbours() {
                if self.cells.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        Ok(seen.len() == self.cells.len())
    }

    /// The offset that [`Shape::normalize`] subtracts.
    pub fn normalizing_offset(&self) -> Result<Cell, ShapeError> {
        let row = self.min_row().ok_or(ShapeError::EmptyShape)?;
        let col = self.min_col().ok_or(ShapeError::EmptyShape)?;
        Ok(Cell::new(row - 1, col - 1))
    }

    /// The unique translate with minimum row 1 and minimum column 1.
    pub fn normalize(&self) -> Result<Shape, ShapeError> {
        let off = self.normalizing_offset()?;
        Ok(self.translate(-off))
    }

    /// Cells weakly above `v` and strictly to its right. `v` need not be a
    /// member of the shape.
    pub fn corner(&self, v: Cell) -> Shape {
        self.cells.iter().filter(|c| c.row <= v.row && c.col > v.col).copied().collect()
    }

    /// Every row is an unbroken interval of columns.
    pub(crate) fn first_gapped_row(&self) -> Option<i64> {
        self.rows()
            .into_iter()
            .find(|(_, cols)| cols.windows(2).any(|w| w[1] != w[0] + 1))
            .map(|(r, _)| r)
    }

    /// Translate of `pattern` whose bottom row and rightmost column line up
    /// with those of `self`.
    pub fn bottom_right_anchor(&self, pattern: &Shape) -> Option<Cell> {
        Some(Cell::new(
            self.max_row()? - pattern.max_row()?,
            self.max_col()? - pattern.max_col()?,
        ))
    }

    /// Renders the shape as a grid of `#` (member) and `.` (non-member) over
    /// its bounding box, one line per row.
    pub fn to_ascii(&self) -> String {
        let (Some(r0), Some(r1), Some(c0), Some(c1)) =
            (self.min_row(), self.max_row(), self.min_col(), self.max_col())
        else {
            return String::new();
        };
        let mut out = String::new();
        for r in r0..=r1 {
            let line: String = (c0..=c1)
                .map(|c| if self.contains(&Cell::new(r, c)) { '#' } else { '.' })
                .collect();
            out.push_str(line.trim_end_matches('.'));
            out.push('\n');
        }
        out
    }
}

fn check_partition(name: &str, parts: &[u32]) -> Result<(), ShapeError> {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(ShapeError::InvalidPartition(format!("{name} is not weakly decreasing: {parts:?}")));
    }
    Ok(())
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}
