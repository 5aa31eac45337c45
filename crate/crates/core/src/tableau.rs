//! Tableaux on arbitrary finite shapes, their inversion graphs, and the
//! moves that order standard tableaux of a fixed shape.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::TableauError;
use crate::linext::Poset;
use crate::shape::{Cell, Shape};

/// Default cap on shape size for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 22;

/// An injective filling of a shape that increases along rows and down
/// columns.
///
/// The derived ordering compares entries in row reading order, which for
/// tableaux of one shape is lexicographic order of [`Tableau::row_word`].
/// That is the canonical order used for enumeration output and for transfer
/// matrix bases.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    entries: BTreeMap<Cell, u32>,
}

impl Tableau {
    /// Builds a partial tableau, checking injectivity and that entries
    /// increase between horizontally and vertically adjacent cells.
    pub fn from_entries<I: IntoIterator<Item = (Cell, u32)>>(entries: I) -> Result<Self, TableauError> {
        let entries: BTreeMap<Cell, u32> = entries.into_iter().collect();
        let mut seen = BTreeSet::new();
        for &v in entries.values() {
            if !seen.insert(v) {
                return Err(TableauError::RepeatedEntry(v));
            }
        }
        for (&c, &v) in &entries {
            for n in [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col)] {
                if let Some(&nv) = entries.get(&n) {
                    if nv <= v {
                        return Err(TableauError::NotIncreasing(c, n));
                    }
                }
            }
        }
        Ok(Tableau { entries })
    }

    /// Like [`Tableau::from_entries`] but also requires entries `1..=len`.
    pub fn standard<I: IntoIterator<Item = (Cell, u32)>>(entries: I) -> Result<Self, TableauError> {
        let t = Tableau::from_entries(entries)?;
        if !t.is_standard() {
            return Err(TableauError::NotStandard(t.len()));
        }
        Ok(t)
    }

    /// Builds a standard tableau from rows given as `(row, first column,
    /// entries)`.
    pub fn from_rows(rows: &[(i64, i64, &[u32])]) -> Result<Self, TableauError> {
        Tableau::standard(rows.iter().flat_map(|&(r, c0, vals)| {
            vals.iter().enumerate().map(move |(k, &v)| (Cell::new(r, c0 + k as i64), v))
        }))
    }

    fn from_map_unchecked(entries: BTreeMap<Cell, u32>) -> Self {
        Tableau { entries }
    }

    pub fn shape(&self) -> Shape {
        self.entries.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, c: &Cell) -> Option<u32> {
        self.entries.get(c).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.entries.iter().map(|(c, v)| (*c, *v))
    }

    pub fn is_standard(&self) -> bool {
        let mut vals: Vec<u32> = self.entries.values().copied().collect();
        vals.sort_unstable();
        vals.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Cell holding `value`.
    pub fn cell_of(&self, value: u32) -> Option<Cell> {
        self.entries.iter().find(|(_, &v)| v == value).map(|(c, _)| *c)
    }

    /// Entries read row by row, top to bottom and left to right.
    pub fn row_word(&self) -> Vec<u32> {
        self.entries.values().copied().collect()
    }

    /// Entries read column by column from the rightmost column leftward,
    /// each column from its bottom cell up.
    pub fn column_word(&self) -> ColumnWord {
        let mut cols: BTreeMap<i64, Vec<(i64, u32)>> = BTreeMap::new();
        for (c, &v) in &self.entries {
            cols.entry(c.col).or_default().push((c.row, v));
        }
        ColumnWord(cols.into_values().rev().flat_map(|col| col.into_iter().rev().map(|(_, v)| v)).collect())
    }

    /// Restriction to the cells of `region` that belong to the tableau.
    pub fn restrict(&self, region: &Shape) -> Tableau {
        Tableau::from_map_unchecked(
            self.entries.iter().filter(|(c, _)| region.contains(c)).map(|(c, v)| (*c, *v)).collect(),
        )
    }

    /// Replaces entries by their ranks, giving a standard tableau with the
    /// same relative order (and so the same tableau graph).
    pub fn standardize(&self) -> Tableau {
        let mut vals: Vec<u32> = self.entries.values().copied().collect();
        vals.sort_unstable();
        let rank: HashMap<u32, u32> = vals.iter().enumerate().map(|(i, &v)| (v, i as u32 + 1)).collect();
        Tableau::from_map_unchecked(self.entries.iter().map(|(c, v)| (*c, rank[v])).collect())
    }

    pub fn translate(&self, by: Cell) -> Tableau {
        Tableau::from_map_unchecked(self.entries.iter().map(|(c, v)| (*c + by, *v)).collect())
    }

    /// Swaps the positions of `i` and `i + 1`.
    fn swap_consecutive(&self, i: u32) -> Tableau {
        let entries = self
            .entries
            .iter()
            .map(|(c, &v)| {
                let v = if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                };
                (*c, v)
            })
            .collect();
        Tableau::from_map_unchecked(entries)
    }

    /// The inversion graph: an edge joins `u` strictly south-west of `v`
    /// whenever `u` holds the smaller entry.
    pub fn graph(&self) -> TableauGraph {
        let mut edges = BTreeSet::new();
        for (&u, &a) in &self.entries {
            for (&v, &b) in &self.entries {
                if u.is_strictly_south_west_of(&v) && a < b {
                    edges.insert(Edge { lower: u, upper: v });
                }
            }
        }
        TableauGraph { vertices: self.shape(), edges }
    }

    /// `{"shape": [[i,j],...], "entries": [[i,j,value],...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.entries.keys().map(|c| [c.row, c.col]).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|(c, v)| [c.row, c.col, *v as i64]).collect::<Vec<_>>(),
        })
    }

    /// Grid rendering, one row per line with `.` for holes.
    pub fn to_grid(&self) -> String {
        let shape = self.shape();
        let (Some(r0), Some(r1), Some(c0), Some(c1)) =
            (shape.min_row(), shape.max_row(), shape.min_col(), shape.max_col())
        else {
            return String::new();
        };
        let width = self.entries.values().max().map_or(1, |m| m.to_string().len());
        let mut out = String::new();
        for r in r0..=r1 {
            let cells: Vec<String> = (c0..=c1)
                .map(|c| match self.get(&Cell::new(r, c)) {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            out.push_str(cells.join(" ").trim_end_matches(['.', ' ']));
            out.push('\n');
        }
        out
    }
}

/// A column reading word, a permutation in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColumnWord(pub Vec<u32>);

impl fmt::Display for ColumnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// An edge of a tableau graph, stored with its south-west endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub lower: Cell,
    pub upper: Cell,
}

impl Edge {
    pub fn translate(self, by: Cell) -> Edge {
        Edge { lower: self.lower + by, upper: self.upper + by }
    }

    pub fn touches(&self, c: &Cell) -> bool {
        self.lower == *c || self.upper == *c
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TableauGraph {
    pub vertices: Shape,
    pub edges: BTreeSet<Edge>,
}

impl TableauGraph {
    pub fn translate(&self, by: Cell) -> TableauGraph {
        TableauGraph {
            vertices: self.vertices.translate(by),
            edges: self.edges.iter().map(|e| e.translate(by)).collect(),
        }
    }

    /// Subgraph induced on `region`.
    pub fn induced(&self, region: &Shape) -> TableauGraph {
        TableauGraph {
            vertices: self.vertices.intersection(region),
            edges: self
                .edges
                .iter()
                .filter(|e| region.contains(&e.lower) && region.contains(&e.upper))
                .copied()
                .collect(),
        }
    }
}

/// Whether some translation carries `g` onto `h`, vertices and edges alike.
///
/// Only one translation can match vertex sets: the one aligning their
/// bounding boxes.
pub fn graphs_isomorphic(g: &TableauGraph, h: &TableauGraph) -> bool {
    if g.vertices.len() != h.vertices.len() || g.edges.len() != h.edges.len() {
        return false;
    }
    let (Ok(a), Ok(b)) = (g.vertices.normalizing_offset(), h.vertices.normalizing_offset()) else {
        return g.vertices.is_empty() && h.vertices.is_empty();
    };
    g.translate(b - a) == *h
}

/// All standard tableaux of `shape`, in canonical (row word) order.
pub fn enumerate_syt(shape: &Shape, limit: usize) -> Result<Vec<Tableau>, TableauError> {
    if shape.is_empty() {
        return Err(TableauError::EmptyShape);
    }
    if shape.len() > limit {
        return Err(TableauError::ShapeTooLarge { cells: shape.len(), limit });
    }
    let (poset, cells) = Poset::of_shape(shape);
    let preds: Vec<Vec<usize>> = (0..cells.len())
        .map(|i| (0..cells.len()).filter(|&j| poset.has_relation(j, i)).collect())
        .collect();
    let n = cells.len();

    // Split on the cell that receives 1 so branches can run in parallel.
    let starts: Vec<usize> = (0..n).filter(|&i| preds[i].is_empty()).collect();
    let mut out: Vec<Tableau> = starts
        .par_iter()
        .flat_map_iter(|&first| {
            let mut values = vec![0u32; n];
            values[first] = 1;
            let mut found = Vec::new();
            fill(&preds, &mut values, 2, &mut |vals| {
                found.push(Tableau::from_map_unchecked(cells.iter().copied().zip(vals.iter().copied()).collect()))
            });
            found
        })
        .collect();
    out.sort();
    Ok(out)
}

fn fill(preds: &[Vec<usize>], values: &mut [u32], next: u32, emit: &mut impl FnMut(&[u32])) {
    if next as usize > values.len() {
        emit(values);
        return;
    }
    for i in 0..values.len() {
        if values[i] == 0 && preds[i].iter().all(|&p| values[p] != 0) {
            values[i] = next;
            fill(preds, values, next + 1, emit);
            values[i] = 0;
        }
    }
}

/// Number of standard tableaux of `shape` (1 for the empty shape).
pub fn count_syt(shape: &Shape) -> BigUint {
    if shape.is_empty() {
        return BigUint::one();
    }
    Poset::of_shape(shape).0.count_linear_extensions()
}

/// The standard tableau whose horizontally adjacent cells hold consecutive
/// entries.
pub fn source_tableau(shape: &Shape) -> Result<Tableau, TableauError> {
    if shape.is_empty() {
        return Err(TableauError::EmptyShape);
    }
    // row reading order: top row first, left to right
    let t = Tableau::from_map_unchecked(shape.iter().zip(1..).map(|(c, v)| (*c, v)).collect());
    let ok = Tableau::from_entries(t.entries()).is_ok()
        && t.entries().all(|(c, v)| t.get(&Cell::new(c.row, c.col + 1)).is_none_or(|r| r == v + 1));
    if ok {
        Ok(t)
    } else {
        Err(TableauError::ConstructionFailed("source"))
    }
}

/// The standard tableau whose vertically adjacent cells hold consecutive
/// entries.
pub fn sink_tableau(shape: &Shape) -> Result<Tableau, TableauError> {
    if shape.is_empty() {
        return Err(TableauError::EmptyShape);
    }
    // column reading order: leftmost column first, top to bottom
    let mut order: Vec<Cell> = shape.iter().copied().collect();
    order.sort_by_key(|c| (c.col, c.row));
    let t = Tableau::from_map_unchecked(order.into_iter().zip(1..).collect());
    let ok = Tableau::from_entries(t.entries()).is_ok()
        && t.entries().all(|(c, v)| t.get(&Cell::new(c.row + 1, c.col)).is_none_or(|d| d == v + 1));
    if ok {
        Ok(t)
    } else {
        Err(TableauError::ConstructionFailed("sink"))
    }
}

/// One covering move of the tableau order.
///
/// With `a` the cell of `i` and `b` the cell of `i + 1`:
/// * `b` strictly south-west of `a`: swapping `i` and `i + 1` adds the
///   single edge `{b, a}`, and the swapped tableau is returned;
/// * `a` strictly south-west of `b`: that edge is already present, and the
///   tableau is returned unchanged;
/// * otherwise the two cells are weakly comparable and `None` is returned.
pub fn apply_pi(t: &Tableau, i: u32) -> Result<Option<Tableau>, TableauError> {
    let n = t.len();
    if i == 0 || i as usize >= n {
        return Err(TableauError::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    let a = t.cell_of(i).ok_or(TableauError::NotStandard(n))?;
    let b = t.cell_of(i + 1).ok_or(TableauError::NotStandard(n))?;
    if b.is_strictly_south_west_of(&a) {
        Ok(Some(t.swap_consecutive(i)))
    } else if a.is_strictly_south_west_of(&b) {
        Ok(Some(t.clone()))
    } else {
        Ok(None)
    }
}
