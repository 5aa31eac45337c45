#![allow(dead_code)]

use periodic_syt::{CompatiblePair, PeriodicShape, Shape};

pub fn pair(cells: &[(i64, i64)], w: u32) -> CompatiblePair {
    let p = PeriodicShape::new(Shape::from_pairs(cells.iter().copied())).unwrap();
    CompatiblePair::new(p, w).unwrap()
}

pub fn row(k: u32, w: u32) -> CompatiblePair {
    CompatiblePair::new(PeriodicShape::single_row(k).unwrap(), w).unwrap()
}

pub const TWO_ROW_STAIR: &[(i64, i64)] = &[(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)];
pub const WIDE_STAIR: &[(i64, i64)] = &[(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (2, 4)];
pub const NOTCHED: &[(i64, i64)] = &[(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)];

/// Compatible pairs with small transfer systems.
pub fn corpus() -> Vec<(&'static str, CompatiblePair)> {
    vec![
        ("stair w0", pair(TWO_ROW_STAIR, 0)),
        ("wide stair w0", pair(WIDE_STAIR, 0)),
        ("wide stair w1", pair(WIDE_STAIR, 1)),
        ("notched w1", pair(NOTCHED, 1)),
        ("row3 w1", row(3, 1)),
        ("row4 w1", row(4, 1)),
        ("row5 w1", row(5, 1)),
        ("row6 w2", row(6, 2)),
        ("row7 w2", row(7, 2)),
        ("row8 w3", row(8, 3)),
    ]
}

/// Every connected staircase shape (rows move weakly right going down)
/// with at most `max` cells, with (1,1) as its top-left cell.
pub fn connected_skew_shapes(max: usize) -> Vec<Shape> {
    let mut out = Vec::new();
    let mut rows = Vec::new();
    grow(max, &mut rows, &mut out);
    out
}

// rows are (first, last) column intervals, top to bottom; each row starts
// and ends weakly right of the one above and overlaps it
fn grow(budget: usize, rows: &mut Vec<(i64, i64)>, out: &mut Vec<Shape>) {
    if !rows.is_empty() {
        let s = Shape::from_pairs(
            rows.iter().enumerate().flat_map(|(r, &(a, b))| (a..=b).map(move |c| (r as i64 + 1, c))),
        );
        out.push(s);
    }
    if budget == 0 {
        return;
    }
    let (a, b) = rows.last().copied().unwrap_or((1, 1));
    let starts = if rows.is_empty() { 1..=1 } else { a..=b };
    for first in starts {
        for last in first.max(if rows.is_empty() { first } else { b })..first + budget as i64 {
            rows.push((first, last));
            grow(budget - (last - first + 1) as usize, rows, out);
            rows.pop();
        }
    }
}

/// Mirror images of the staircases: connected skew diagrams in the usual
/// (rows move left going down) orientation.
pub fn english_skew_shapes(max: usize) -> Vec<Shape> {
    connected_skew_shapes(max)
        .into_iter()
        .map(|s| {
            let right = s.max_col().unwrap();
            Shape::from_pairs(s.iter().map(|c| (c.row, right + 1 - c.col)))
        })
        .collect()
}

/// Young diagrams of every partition of `n`, longest row on top.
pub fn straight_shapes(n: u32) -> Vec<Shape> {
    fn parts(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            acc.push(p);
            parts(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut all = Vec::new();
    parts(n, n, &mut Vec::new(), &mut all);
    all.iter()
        .map(|l| {
            Shape::from_pairs(
                l.iter().enumerate().flat_map(|(r, &len)| (1..=len as i64).map(move |c| (r as i64 + 1, c))),
            )
        })
        .collect()
}
