//! Periodic shapes, shifted unions of copies, and the index/coefficient
//! shapes that carry boundary state between consecutive copies.

use std::fmt;

use crate::error::{Incompatibility, ShapeError};
use crate::shape::{Cell, Shape};

/// Copies tried before giving up on stabilising the index shape.
const MAX_STABILISATION_COPIES: usize = 256;

/// A validated repeating unit.
///
/// Invariants: contains `(1,1)`; every row is contiguous and rows step down
/// and to the right; connected; every interior column has a cell with both
/// horizontal neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicShape {
    shape: Shape,
    top_left: Cell,
    bottom_left: Cell,
}

impl PeriodicShape {
    pub fn new(shape: Shape) -> Result<Self, ShapeError> {
        validate_periodic(&shape)?;
        let top = shape.min_row().expect("validated non-empty");
        let bottom = shape.max_row().expect("validated non-empty");
        let top_left = *shape.row(top).next().expect("row exists");
        let bottom_left = *shape.row(bottom).next().expect("row exists");
        Ok(PeriodicShape { shape, top_left, bottom_left })
    }

    /// A single row of `k` cells starting at `(1,1)`.
    pub fn single_row(k: u32) -> Result<Self, ShapeError> {
        PeriodicShape::new(Shape::row_segment(1, 1, k as i64))
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Leftmost cell of the top row.
    pub fn top_left(&self) -> Cell {
        self.top_left
    }

    /// Leftmost cell of the bottom row.
    pub fn bottom_left(&self) -> Cell {
        self.bottom_left
    }

    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `b - a + (1, w)`: the translation between consecutive copies.
    pub fn shift_vector(&self, w: u32) -> Cell {
        self.bottom_left - self.top_left + Cell::new(1, w as i64)
    }

    /// Union of `m` copies `P + i * step` for `i = 0..m`.
    pub fn generate_shifted(&self, w: u32, m: usize) -> Result<Shape, ShapeError> {
        shifted_union(&self.shape, self.shift_vector(w), m)
    }

    /// Decides compatibility with shift number `w`.
    ///
    /// The horizontal step must be at least one (otherwise column heights
    /// grow without bound), and the 2- and 3-copy unions must themselves be
    /// periodic. Gluing between consecutive copies is translation invariant,
    /// so any defect shows up by three copies.
    pub fn compatibility(&self, w: u32) -> Result<(), Incompatibility> {
        let step = self.shift_vector(w);
        if step.col < 1 {
            return Err(Incompatibility::UnboundedColumns { step: step.col });
        }
        for copies in [2, 3] {
            let union = match self.generate_shifted(w, copies) {
                Ok(u) => u,
                Err(ShapeError::OverlappingCopies { .. }) => return Err(Incompatibility::OverlappingCopies),
                Err(e) => unreachable!("shifted union of a valid period: {e}"),
            };
            if let Err(reason) = validate_periodic(&union) {
                return Err(Incompatibility::NotPeriodic { copies, reason: Box::new(reason) });
            }
        }
        let bottom_row_len = self.shape.row(self.bottom_left.row).count();
        if bottom_row_len <= w as usize {
            return Err(Incompatibility::IndexCellMissing);
        }
        Ok(())
    }

    pub fn is_compatible(&self, w: u32) -> bool {
        self.compatibility(w).is_ok()
    }
}

/// Checks every periodic-shape condition, reporting the first that fails.
pub fn validate_periodic(s: &Shape) -> Result<(), ShapeError> {
    if s.is_empty() {
        return Err(ShapeError::EmptyShape);
    }
    if !s.contains(&Cell::new(1, 1)) {
        return Err(ShapeError::MissingOrigin);
    }
    if let Some(row) = s.first_gapped_row() {
        return Err(ShapeError::RowNotContiguous { row });
    }
    let rows = s.rows();
    for ((&r, a), (&next, b)) in rows.iter().zip(rows.iter().skip(1)) {
        let staircase = next == r + 1 && a[0] <= b[0] && a[a.len() - 1] <= b[b.len() - 1];
        if !staircase {
            // a skipped row is reported as a disconnection below
            if next != r + 1 {
                return Err(ShapeError::Disconnected);
            }
            return Err(ShapeError::NotSkew { row: r, next });
        }
    }
    if !s.is_connected()? {
        return Err(ShapeError::Disconnected);
    }
    let (lo, hi) = (s.min_col().unwrap(), s.max_col().unwrap());
    for col in (lo + 1)..hi {
        let ok = s.iter().any(|c| {
            c.col == col && s.contains(&Cell::new(c.row, col - 1)) && s.contains(&Cell::new(c.row, col + 1))
        });
        if !ok {
            return Err(ShapeError::InteriorColumnViolation { col });
        }
    }
    Ok(())
}

fn shifted_union(p: &Shape, step: Cell, m: usize) -> Result<Shape, ShapeError> {
    if m == 0 {
        return Err(ShapeError::NoCopies);
    }
    let mut union = Shape::new();
    for i in 0..m {
        for c in p.translate((i as i64) * step).iter() {
            if !union.insert(*c) {
                let second = i;
                let first = (0..i)
                    .find(|&j| p.translate((j as i64) * step).contains(c))
                    .unwrap_or(0);
                return Err(ShapeError::OverlappingCopies { first, second });
            }
        }
    }
    Ok(union)
}

/// A period together with a shift number it is compatible with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatiblePair {
    period: PeriodicShape,
    w: u32,
    step: Cell,
}

impl CompatiblePair {
    pub fn new(period: PeriodicShape, w: u32) -> Result<Self, ShapeError> {
        period.compatibility(w).map_err(ShapeError::NotCompatible)?;
        let step = period.shift_vector(w);
        Ok(CompatiblePair { period, w, step })
    }

    pub fn period(&self) -> &PeriodicShape {
        &self.period
    }

    pub fn w(&self) -> u32 {
        self.w
    }

    /// The shift vector between consecutive copies.
    pub fn step(&self) -> Cell {
        self.step
    }

    pub fn shifted(&self, m: usize) -> Result<Shape, ShapeError> {
        shifted_union(self.period.shape(), self.step, m)
    }

    /// The `i`-th copy (0-based) of the period.
    pub fn copy(&self, i: usize) -> Shape {
        self.period.shape().translate((i as i64) * self.step)
    }

    /// Computes the index shape, coefficient shape, their placements and the
    /// start index of the transfer recursion.
    pub fn geometry(&self) -> Result<PairGeometry, ShapeError> {
        PairGeometry::compute(self)
    }
}

impl fmt::Display for CompatiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P = {}, w = {}", self.period.shape(), self.w)
    }
}

/// Boundary-state geometry of a compatible pair.
///
/// `index` and `coefficient` are normalized. Inside the coefficient shape,
/// the index shape appears twice: once at the top-left
/// (`index + top_offset`) and once at the bottom-right
/// (`index + bottom_offset`). `bottom_copy` is the last period copy, also in
/// coefficient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairGeometry {
    pub index: Shape,
    pub coefficient: Shape,
    pub top_offset: Cell,
    pub bottom_offset: Cell,
    pub bottom_copy: Shape,
    /// Copies at which both shapes first stabilised.
    pub stable_copies: usize,
    /// Smallest number of copies whose union contains a translate of the
    /// index shape.
    pub n0: usize,
}

/// Raw (un-normalized) index and coefficient regions for `m` copies.
struct Regions {
    index: Shape,
    top_index: Shape,
    coefficient: Shape,
    last_copy: Shape,
    touches_first_copy: bool,
}

fn regions(pair: &CompatiblePair, m: usize) -> Result<Regions, ShapeError> {
    let union = pair.shifted(m)?;
    let step = pair.step;
    // leftmost cell of the top row of the last copy
    let v = pair.period.top_left() + ((m - 1) as i64) * step;
    // u sits in the bottom row with u - step = v - (1, 0)
    let u = v - Cell::new(1, 0) + step;
    if !union.contains(&u) {
        return Err(ShapeError::NotCompatible(Incompatibility::IndexCellMissing));
    }
    let mut index = union.corner(u);
    index.insert(u);
    let ut = u - step;
    let mut top_index = union.corner(ut);
    if union.contains(&ut) {
        top_index.insert(ut);
    }
    let last_copy = pair.copy(m - 1);
    let coefficient = top_index.union(&last_copy).union(&index);
    let touches_first_copy = !coefficient.is_disjoint(&pair.copy(0));
    Ok(Regions { index, top_index, coefficient, last_copy, touches_first_copy })
}

impl PairGeometry {
    fn compute(pair: &CompatiblePair) -> Result<Self, ShapeError> {
        let mut m = 2;
        let stable = loop {
            let r = regions(pair, m)?;
            if !r.touches_first_copy {
                break r;
            }
            m += 1;
            if m > MAX_STABILISATION_COPIES {
                return Err(ShapeError::UnstableShape { copies: m });
            }
        };
        let next = regions(pair, m + 1)?;
        let index = stable.index.normalize()?;
        let coefficient = stable.coefficient.normalize()?;
        if next.index.normalize()? != index || next.coefficient.normalize()? != coefficient {
            return Err(ShapeError::UnstableShape { copies: m });
        }

        let c_off = stable.coefficient.normalizing_offset()?;
        let i_off = stable.index.normalizing_offset()?;
        let top_off = stable.top_index.normalizing_offset()?;
        let top_offset = top_off - c_off;
        let bottom_offset = i_off - c_off;
        // the top index region must be a translate of the index shape
        if stable.top_index.translate(-top_off) != index {
            return Err(ShapeError::UnstableShape { copies: m });
        }
        let bottom_copy = stable.last_copy.translate(-c_off);

        let mut n0 = 1;
        loop {
            let union = pair.shifted(n0)?;
            let anchor = union.bottom_right_anchor(&index).expect("non-empty");
            if index.translate(anchor).is_subset(&union) {
                break;
            }
            n0 += 1;
            if n0 > m + 1 {
                return Err(ShapeError::UnstableShape { copies: n0 });
            }
        }

        Ok(PairGeometry { index, coefficient, top_offset, bottom_offset, bottom_copy, stable_copies: m, n0 })
    }

    /// The top-left placement of the index shape inside the coefficient shape.
    pub fn top_index(&self) -> Shape {
        self.index.translate(self.top_offset)
    }

    /// The bottom-right placement of the index shape inside the coefficient shape.
    pub fn bottom_index(&self) -> Shape {
        self.index.translate(self.bottom_offset)
    }
}

/// `I(P, w)`, normalized.
pub fn index_shape(pair: &CompatiblePair) -> Result<Shape, ShapeError> {
    Ok(pair.geometry()?.index)
}

/// `C(P, w)`, normalized.
pub fn coefficient_shape(pair: &CompatiblePair) -> Result<Shape, ShapeError> {
    Ok(pair.geometry()?.coefficient)
}

/// Smallest `m` such that `m` copies contain a translate of the index shape.
pub fn n_min(pair: &CompatiblePair) -> Result<usize, ShapeError> {
    Ok(pair.geometry()?.n0)
}
