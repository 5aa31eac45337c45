//! Transfer matrices over tableaux of the index shape.
//!
//! Entry `(b, t)` counts standard tableaux of the coefficient shape whose
//! restriction to the top index region standardizes to basis tableau `t`
//! and whose restriction to the bottom index region standardizes to `b`.
//! Counts on `n` copies are then `weights . M^(n - n0) . v0`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::TransferError;
use crate::json::{big_vec, cells};
use crate::linext::Poset;
use crate::matrix::IntMatrix;
use crate::periodic::{CompatiblePair, PairGeometry};
use crate::shape::{Cell, Shape};
use crate::tableau::{count_syt, enumerate_syt, Tableau};

pub const DEFAULT_MAX_DIM: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferSystem {
    pub pair: CompatiblePair,
    pub geometry: PairGeometry,
    /// All standard tableaux of the index shape, in canonical order.
    pub basis: Vec<Tableau>,
    pub matrix: IntMatrix,
    pub v0: Vec<BigInt>,
    /// Row vector applied on the left; all ones unless the system was
    /// compressed.
    pub weights: Vec<BigInt>,
    pub n0: usize,
}

/// Region of `Sh(m)` holding the index shape, as a translation of the
/// normalized index shape.
pub fn index_anchor(pair: &CompatiblePair, geometry: &PairGeometry, m: usize) -> Result<Cell, TransferError> {
    if m < geometry.n0 {
        return Err(TransferError::ShapeTooSmall { copies: m, n0: geometry.n0 });
    }
    let union = pair.shifted(m)?;
    Ok(union.bottom_right_anchor(&geometry.index).expect("non-empty union"))
}

/// Restricts `t` to `region` and moves the standardized result by `-offset`
/// onto the normalized index shape.
fn renormalize(t: &Tableau, region: &Shape, offset: Cell) -> Tableau {
    t.restrict(region).standardize().translate(-offset)
}

/// Top index subtableau of a tableau on the coefficient shape.
pub fn top_index_subtableau(geometry: &PairGeometry, t: &Tableau) -> Result<Tableau, TransferError> {
    if t.shape() != geometry.coefficient || !t.is_standard() {
        return Err(TransferError::NotOnCoefficientShape);
    }
    Ok(renormalize(t, &geometry.top_index(), geometry.top_offset))
}

/// Bottom index subtableau of a tableau on the coefficient shape.
pub fn bottom_index_subtableau(geometry: &PairGeometry, t: &Tableau) -> Result<Tableau, TransferError> {
    if t.shape() != geometry.coefficient || !t.is_standard() {
        return Err(TransferError::NotOnCoefficientShape);
    }
    Ok(renormalize(t, &geometry.bottom_index(), geometry.bottom_offset))
}

/// Index subtableau of a standard tableau on `m` copies.
pub fn index_subtableau(
    pair: &CompatiblePair,
    geometry: &PairGeometry,
    t: &Tableau,
    m: usize,
) -> Result<Tableau, TransferError> {
    let anchor = index_anchor(pair, geometry, m)?;
    Ok(renormalize(t, &geometry.index.translate(anchor), anchor))
}

/// Limits on the work a build may do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransferLimits {
    pub max_dim: usize,
}

impl Default for TransferLimits {
    fn default() -> Self {
        TransferLimits { max_dim: DEFAULT_MAX_DIM }
    }
}

/// Builds the basis, matrix and initial vector.
///
/// Each entry is a linear-extension count of the coefficient shape's cell
/// poset with the two basis orders imposed as chains on the two index
/// regions.
pub fn build_transfer_system(pair: &CompatiblePair, limits: TransferLimits) -> Result<TransferSystem, TransferError> {
    let geometry = pair.geometry()?;
    let basis = index_basis(&geometry, limits)?;
    let dim = basis.len();

    let (c_poset, c_cells) = Poset::of_shape(&geometry.coefficient);
    let c_index: HashMap<Cell, usize> = c_cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let top_chains: Vec<Vec<usize>> = basis.iter().map(|b| chain(b, geometry.top_offset, &c_index)).collect();
    let bottom_chains: Vec<Vec<usize>> =
        basis.iter().map(|b| chain(b, geometry.bottom_offset, &c_index)).collect();

    let entries: Vec<BigUint> = (0..dim * dim)
        .into_par_iter()
        .map(|k| {
            let (b, t) = (k / dim, k % dim);
            let mut p = c_poset.clone();
            p.add_chain(&top_chains[t]);
            p.add_chain(&bottom_chains[b]);
            p.count_linear_extensions()
        })
        .collect();
    let mut matrix = IntMatrix::zeros(dim, dim);
    for (k, e) in entries.into_iter().enumerate() {
        matrix[(k / dim, k % dim)] = BigInt::from(e);
    }

    let n0 = geometry.n0;
    let start = pair.shifted(n0)?;
    let anchor = index_anchor(pair, &geometry, n0)?;
    let (s_poset, s_cells) = Poset::of_shape(&start);
    let s_index: HashMap<Cell, usize> = s_cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let v0: Vec<BigInt> = basis
        .par_iter()
        .map(|b| {
            let mut p = s_poset.clone();
            p.add_chain(&chain(b, anchor, &s_index));
            BigInt::from(p.count_linear_extensions())
        })
        .collect();

    Ok(TransferSystem { pair: pair.clone(), geometry, basis, matrix, v0, weights: vec![BigInt::one(); dim], n0 })
}

/// Same system, built by enumerating and classifying every standard
/// tableau of the coefficient shape and of `Sh(n0)`. Exponentially slower;
/// used as a cross-check.
pub fn build_transfer_system_by_enumeration(
    pair: &CompatiblePair,
    limits: TransferLimits,
    cell_limit: usize,
) -> Result<TransferSystem, TransferError> {
    let geometry = pair.geometry()?;
    let basis = index_basis(&geometry, limits)?;
    let dim = basis.len();
    let lookup = |t: &Tableau| basis.binary_search(t).map_err(|_| TransferError::NotInBasis);

    let mut matrix = IntMatrix::zeros(dim, dim);
    for t in enumerate_syt(&geometry.coefficient, cell_limit)? {
        let top = lookup(&top_index_subtableau(&geometry, &t)?)?;
        let bottom = lookup(&bottom_index_subtableau(&geometry, &t)?)?;
        matrix[(bottom, top)] += 1;
    }
    let n0 = geometry.n0;
    let mut v0 = vec![BigInt::zero(); dim];
    for t in enumerate_syt(&pair.shifted(n0)?, cell_limit)? {
        v0[lookup(&index_subtableau(pair, &geometry, &t, n0)?)?] += 1;
    }
    Ok(TransferSystem { pair: pair.clone(), geometry, basis, matrix, v0, weights: vec![BigInt::one(); dim], n0 })
}

fn index_basis(geometry: &PairGeometry, limits: TransferLimits) -> Result<Vec<Tableau>, TransferError> {
    let dim = count_syt(&geometry.index);
    if dim > BigUint::from(limits.max_dim) {
        let dim = usize::try_from(&dim).unwrap_or(usize::MAX);
        return Err(TransferError::EnumerationLimitExceeded { dim, limit: limits.max_dim });
    }
    Ok(enumerate_syt(&geometry.index, usize::MAX)?)
}

/// Positions (in `index`) of the cells of `t + offset`, in entry order.
fn chain(t: &Tableau, offset: Cell, index: &HashMap<Cell, usize>) -> Vec<usize> {
    let mut cells: Vec<(u32, Cell)> = t.entries().map(|(c, v)| (v, c + offset)).collect();
    cells.sort_unstable();
    cells.into_iter().map(|(_, c)| index[&c]).collect()
}

impl TransferSystem {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_shape(&self) -> &Shape {
        &self.geometry.index
    }

    /// Position of a tableau of the index shape in the basis.
    pub fn basis_index(&self, t: &Tableau) -> Option<usize> {
        self.basis.binary_search(t).ok()
    }

    /// `weights . M^(n - n0) . v0`.
    pub fn count(&self, n: usize) -> Result<BigInt, TransferError> {
        if n < self.n0 {
            return Err(TransferError::BelowRange { n, n0: self.n0 });
        }
        let v = self.matrix.pow((n - self.n0) as u64).mul_vec(&self.v0);
        Ok(dot(&self.weights, &v))
    }

    /// Counts for `n = n0, n0 + 1, ..., n0 + len - 1`, by iterating the
    /// state vector.
    pub fn terms(&self, len: usize) -> Vec<BigInt> {
        let mut v = self.v0.clone();
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            if k > 0 {
                v = self.matrix.mul_vec(&v);
            }
            out.push(dot(&self.weights, &v));
        }
        out
    }

    /// Counts for `n` in `from..=to` (all at least `n0`).
    pub fn terms_range(&self, from: usize, to: usize) -> Result<Vec<BigInt>, TransferError> {
        if from < self.n0 {
            return Err(TransferError::BelowRange { n: from, n0: self.n0 });
        }
        let all = self.terms(to + 1 - self.n0);
        Ok(all[from - self.n0..].to_vec())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "w": self.pair.w(),
            "index_shape": cells(&self.geometry.index),
            "dim": self.dim(),
            "n0": self.n0,
            "basis": self.basis.iter().map(|b| b.column_word().0).collect::<Vec<_>>(),
            "matrix": self.matrix.to_rows().iter().map(|r| big_vec(r)).collect::<Vec<_>>(),
            "v0": big_vec(&self.v0),
            "weights": big_vec(&self.weights),
        })
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `weights . M^(n - n0) . v0`.
pub fn count_via_transfer(ts: &TransferSystem, n: usize) -> Result<BigInt, TransferError> {
    ts.count(n)
}
