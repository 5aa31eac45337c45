//! Redundant subsets of the index shape, the basis equivalence they induce,
//! and compression of transfer systems by lumping identical rows.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::SymmetryError;
use crate::json::cells;
use crate::matrix::IntMatrix;
use crate::periodic::{CompatiblePair, PairGeometry};
use crate::shape::{Cell, Shape};
use crate::tableau::{enumerate_syt, sink_tableau, Edge, Tableau};
use crate::transfer::TransferSystem;

/// Largest index shape for which every subset is tried.
pub const DEFAULT_EXHAUSTIVE_BUDGET: usize = 12;

/// The finite checks making up redundancy, in the order they are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// No sink edge runs from the earlier copies up into the last copy.
    CopySeparation,
    /// The placed subset lies in the last copy.
    InsideLastCopy,
    /// The placed subset is a connected union of contiguous rows touching
    /// the bottom row and right-most column of the coefficient shape.
    Anchored,
    /// Sink edges touching the placed subset only leave it upward.
    SubsetSeparation,
    /// Edges leaving the subset are dominated by competing edges into the
    /// same top cell.
    CoverDomination,
    /// Edges outside the bottom index region are dominated by edges into
    /// the subset sharing their top cell.
    CornerDomination,
    /// No cell outside the subset meets both an edge into the subset from
    /// within the bottom index region and an edge leaving that region.
    IncidenceSeparation,
}

impl Clause {
    pub const ALL: [Clause; 7] = [
        Clause::CopySeparation,
        Clause::InsideLastCopy,
        Clause::Anchored,
        Clause::SubsetSeparation,
        Clause::CoverDomination,
        Clause::CornerDomination,
        Clause::IncidenceSeparation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Clause::CopySeparation => "copy-separation",
            Clause::InsideLastCopy => "inside-last-copy",
            Clause::Anchored => "anchored",
            Clause::SubsetSeparation => "subset-separation",
            Clause::CoverDomination => "cover-domination",
            Clause::CornerDomination => "corner-domination",
            Clause::IncidenceSeparation => "incidence-separation",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of the redundancy checks for one subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedundancyReport {
    /// Subset of the normalized index shape.
    pub subset: Shape,
    /// The subset placed at the bottom index position of the coefficient
    /// shape.
    pub placed: Shape,
    /// Clauses that passed before the first failure.
    pub passed: Vec<Clause>,
    /// First failing clause and the offending cells.
    pub failure: Option<(Clause, String)>,
}

impl RedundancyReport {
    pub fn is_redundant(&self) -> bool {
        self.failure.is_none()
    }
}

/// A subset that passed every clause.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RedundantSubset {
    report: RedundancyReport,
}

impl RedundantSubset {
    pub fn cells(&self) -> &Shape {
        &self.report.subset
    }

    pub fn report(&self) -> &RedundancyReport {
        &self.report
    }
}

/// Context shared by the checks of many subsets of one pair.
struct SinkEdges {
    geometry: PairGeometry,
    edges: Vec<Edge>,
}

impl SinkEdges {
    fn new(pair: &CompatiblePair) -> Result<Self, SymmetryError> {
        let geometry = pair.geometry()?;
        let edges = sink_tableau(&geometry.coefficient)?.graph().edges.into_iter().collect();
        Ok(SinkEdges { geometry, edges })
    }

    fn check(&self, subset: &Shape) -> Result<RedundancyReport, SymmetryError> {
        let g = &self.geometry;
        if !subset.is_subset(&g.index) {
            return Err(SymmetryError::NotASubset);
        }
        let placed = subset.translate(g.bottom_offset);
        let mut report = RedundancyReport { subset: subset.clone(), placed, passed: Vec::new(), failure: None };
        for clause in Clause::ALL {
            if let Some(why) = self.violation(clause, &report.placed) {
                report.failure = Some((clause, why));
                break;
            }
            report.passed.push(clause);
        }
        Ok(report)
    }

    /// Describes the first violation of `clause`, if any.
    fn violation(&self, clause: Clause, placed: &Shape) -> Option<String> {
        let g = &self.geometry;
        let b = &g.bottom_copy;
        let in_b = |c: &Cell| b.contains(c);
        let in_s = |c: &Cell| placed.contains(c);
        let show = |e: &Edge| format!("edge {}-{}", e.lower, e.upper);
        match clause {
            Clause::CopySeparation => {
                self.edges.iter().find(|e| !in_b(&e.lower) && in_b(&e.upper)).map(show)
            }
            Clause::InsideLastCopy => {
                placed.iter().find(|c| !in_b(c)).map(|c| format!("cell {c} outside the last copy"))
            }
            Clause::Anchored => {
                if placed.is_empty() {
                    return None;
                }
                if placed.max_row() != g.coefficient.max_row() {
                    return Some("misses the bottom row".into());
                }
                if placed.max_col() != g.coefficient.max_col() {
                    return Some("misses the right-most column".into());
                }
                if let Some(r) = placed.first_gapped_row() {
                    return Some(format!("row {r} is not contiguous"));
                }
                if !placed.is_connected().unwrap_or(false) {
                    return Some("not connected".into());
                }
                None
            }
            Clause::SubsetSeparation => self
                .edges
                .iter()
                .find(|e| {
                    let outside = !in_s(&e.lower) && !in_s(&e.upper);
                    let within_copy = in_b(&e.lower) && in_b(&e.upper);
                    let upward = in_s(&e.lower) && !in_s(&e.upper);
                    !(outside || within_copy || upward)
                })
                .map(show),
            Clause::CoverDomination => {
                for e in self.edges.iter().filter(|e| in_s(&e.lower) && !in_b(&e.upper)) {
                    if let Some(h) = self.edges.iter().find(|h| {
                        h.upper == e.upper && !in_s(&h.lower) && !h.lower.is_weakly_north_west_of(&e.lower)
                    }) {
                        return Some(format!("{} not dominated by {}", show(e), show(h)));
                    }
                }
                None
            }
            Clause::CornerDomination => {
                let y = g.bottom_index();
                for e in self.edges.iter().filter(|e| !(y.contains(&e.lower) && y.contains(&e.upper))) {
                    if in_s(&e.lower) {
                        continue;
                    }
                    if let Some(h) = self.edges.iter().find(|h| {
                        h.upper == e.upper && in_s(&h.lower) && !e.lower.is_weakly_north_west_of(&h.lower)
                    }) {
                        return Some(format!("{} not dominated by {}", show(e), show(h)));
                    }
                }
                None
            }
            Clause::IncidenceSeparation => {
                let y = g.bottom_index();
                let in_y = |c: &Cell| y.contains(c);
                let kept: Vec<Cell> = y.iter().filter(|c| !in_s(c)).copied().collect();
                let into_subset = |e: &&Edge| in_y(&e.lower) && in_y(&e.upper) && (in_s(&e.lower) || in_s(&e.upper));
                let leaving = |e: &&Edge| !in_s(&e.lower) && !in_s(&e.upper) && !(in_y(&e.lower) && in_y(&e.upper));
                // a kept cell between the two bottom cells forces `e` whenever `h` is present
                let forced = |e: &Edge, h: &Edge| {
                    e.upper == h.upper
                        && kept.iter().any(|z| {
                            z.is_strictly_south_west_of(&h.upper)
                                && e.lower.is_weakly_north_west_of(z)
                                && z.is_weakly_north_west_of(&h.lower)
                        })
                };
                // a subset cell fed from outside the index region
                if let Some(e) = self.edges.iter().find(|e| in_s(&e.upper) && !in_y(&e.lower)) {
                    return Some(format!("{} enters the subset from outside the index region", show(e)));
                }
                for h in self.edges.iter().filter(into_subset) {
                    for c in [h.lower, h.upper].iter().filter(|c| !in_s(c)) {
                        if let Some(e) = self.edges.iter().filter(leaving).find(|e| e.touches(c) && !forced(e, h)) {
                            return Some(format!("cell {c} meets {} and {}", show(h), show(e)));
                        }
                    }
                }
                None
            }
        }
    }
}

/// Runs every clause on `s` (a subset of the normalized index shape).
pub fn check_redundancy(pair: &CompatiblePair, s: &Shape) -> Result<RedundancyReport, SymmetryError> {
    SinkEdges::new(pair)?.check(s)
}

pub fn is_redundant_subset(pair: &CompatiblePair, s: &Shape) -> Result<bool, SymmetryError> {
    Ok(check_redundancy(pair, s)?.is_redundant())
}

/// Checks `s` and wraps it, or reports the failing clause.
pub fn redundant_subset(pair: &CompatiblePair, s: &Shape) -> Result<RedundantSubset, SymmetryError> {
    let report = check_redundancy(pair, s)?;
    match &report.failure {
        None => Ok(RedundantSubset { report }),
        Some((clause, why)) => Err(SymmetryError::NotRedundant(format!("{clause}: {why}"))),
    }
}

/// A partition of basis positions. Classes are sorted, and ordered by their
/// least element, which serves as representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalencePartition {
    classes: Vec<Vec<usize>>,
}

impl EquivalencePartition {
    /// Normalizes the given classes; they must partition `0..dim`.
    pub fn from_classes(mut classes: Vec<Vec<usize>>, dim: usize) -> Result<Self, SymmetryError> {
        classes.retain(|c| !c.is_empty());
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort();
        let mut all: Vec<usize> = classes.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (0..dim).collect::<Vec<_>>() {
            return Err(SymmetryError::DimensionMismatch { expected: dim, got: all.len() });
        }
        Ok(EquivalencePartition { classes })
    }

    pub fn discrete(dim: usize) -> Self {
        EquivalencePartition { classes: (0..dim).map(|i| vec![i]).collect() }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Number of basis elements covered.
    pub fn dim(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

/// Groups basis tableaux whose restrictions to the complement of `s` have
/// the same tableau graph.
pub fn partition_basis(basis: &[Tableau], index: &Shape, s: &Shape) -> EquivalencePartition {
    let keep = index.difference(s);
    let mut groups: BTreeMap<Vec<Edge>, Vec<usize>> = BTreeMap::new();
    for (k, t) in basis.iter().enumerate() {
        let key: Vec<Edge> = t.restrict(&keep).graph().edges.into_iter().collect();
        groups.entry(key).or_default().push(k);
    }
    EquivalencePartition::from_classes(groups.into_values().collect(), basis.len())
        .expect("grouping covers the basis")
}

/// The partition induced by a redundant subset on the system's basis.
pub fn equivalence_partition(ts: &TransferSystem, s: &RedundantSubset) -> EquivalencePartition {
    partition_basis(&ts.basis, ts.index_shape(), s.cells())
}

/// Whether rows within each class of `part` agree entry for entry.
pub fn verify_row_identity(ts: &TransferSystem, part: &EquivalencePartition) -> Result<bool, SymmetryError> {
    if part.dim() != ts.dim() {
        return Err(SymmetryError::DimensionMismatch { expected: ts.dim(), got: part.dim() });
    }
    Ok(part.classes().iter().all(|c| c.iter().all(|&r| ts.matrix.row(r) == ts.matrix.row(c[0]))))
}

/// Lumps a system along a partition with identical rows in each class.
///
/// With `E` the class indicator matrix and `R` the representative rows,
/// `M = E R`, so `M^k = E (R E)^(k-1) R`. The compressed system uses
/// `R E` as matrix, `R v0` as initial vector and `E^T weights` as weights,
/// and so starts one copy later than the original.
pub fn compress(ts: &TransferSystem, part: &EquivalencePartition) -> Result<TransferSystem, SymmetryError> {
    if !verify_row_identity(ts, part)? {
        return Err(SymmetryError::RowsNotIdentical);
    }
    let reps = part.representatives();
    let k = part.len();
    let mut matrix = IntMatrix::zeros(k, k);
    for (i, &r) in reps.iter().enumerate() {
        let row = ts.matrix.row(r);
        for (j, class) in part.classes().iter().enumerate() {
            matrix[(i, j)] = class.iter().map(|&c| &row[c]).sum();
        }
    }
    let mv = ts.matrix.mul_vec(&ts.v0);
    let v0 = reps.iter().map(|&r| mv[r].clone()).collect();
    let weights = part
        .classes()
        .iter()
        .map(|c| c.iter().fold(BigInt::zero(), |acc, &r| acc + &ts.weights[r]))
        .collect();
    Ok(TransferSystem {
        pair: ts.pair.clone(),
        geometry: ts.geometry.clone(),
        basis: reps.iter().map(|&r| ts.basis[r].clone()).collect(),
        matrix,
        v0,
        weights,
        n0: ts.n0 + 1,
    })
}

/// A redundant subset with the size of the partition it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundSubset {
    pub subset: RedundantSubset,
    pub classes: usize,
}

/// Redundant subsets among the right-hand segments of the bottom row of the
/// index shape, plus every subset when the index shape has at most `budget`
/// cells. Sorted by class count, then size, then cells.
pub fn find_redundant_subsets(pair: &CompatiblePair, budget: usize) -> Result<Vec<FoundSubset>, SymmetryError> {
    let ctx = SinkEdges::new(pair)?;
    let index = &ctx.geometry.index;
    let basis = enumerate_syt(index, usize::MAX)?;

    let mut candidates: Vec<Shape> = Vec::new();
    let bottom: Vec<Cell> = index.row(index.max_row().expect("non-empty")).copied().collect();
    for start in 0..=bottom.len() {
        candidates.push(bottom[start..].iter().copied().collect());
    }
    if index.len() <= budget {
        let cells: Vec<Cell> = index.iter().copied().collect();
        for mask in 0u64..(1 << cells.len()) {
            let s: Shape = cells.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| *c).collect();
            candidates.push(s);
        }
    }
    candidates.sort();
    candidates.dedup();

    let mut found: Vec<FoundSubset> = candidates
        .par_iter()
        .filter_map(|s| {
            let report = ctx.check(s).expect("candidates lie in the index shape");
            report.is_redundant().then(|| FoundSubset {
                classes: partition_basis(&basis, index, s).len(),
                subset: RedundantSubset { report },
            })
        })
        .collect();
    found.sort_by(|a, b| {
        (a.classes, a.subset.cells().len(), a.subset.cells()).cmp(&(b.classes, b.subset.cells().len(), b.subset.cells()))
    });
    Ok(found)
}

pub fn subset_json(s: &RedundantSubset, part: &EquivalencePartition, compressed: Option<&TransferSystem>) -> Value {
    let mut v = json!({
        "subset": cells(s.cells()),
        "classes": part.classes(),
        "dim_s": part.len(),
    });
    if let Some(c) = compressed {
        v["compressed"] = c.to_json();
    }
    v
}
