//! Counting linear extensions of a finite poset by dynamic programming over
//! order ideals.
//!
//! The poset is given by predecessor sets. Ideals are grown one element at
//! a time, layer by layer, so only two layers of the frontier are ever held
//! in memory.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::shape::{Cell, Shape};

/// Fixed-width bitset keyed by element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bits(Box<[u64]>);

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)].into_boxed_slice())
    }

    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }
}

/// A poset on `0..n` described by (not necessarily transitively reduced)
/// predecessor sets. Cycles are allowed and simply admit no extension.
#[derive(Clone, Debug)]
pub struct Poset {
    preds: Vec<Bits>,
}

impl Poset {
    pub fn new(n: usize) -> Self {
        Poset { preds: vec![Bits::new(n); n] }
    }

    /// The cell poset of a shape: each cell sits above its left and upper
    /// neighbours. Element `k` is the `k`-th cell in row-major order.
    pub fn of_shape(shape: &Shape) -> (Poset, Vec<Cell>) {
        let cells: Vec<Cell> = shape.iter().copied().collect();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut poset = Poset::new(cells.len());
        for (i, c) in cells.iter().enumerate() {
            for n in [Cell::new(c.row, c.col - 1), Cell::new(c.row - 1, c.col)] {
                if let Some(&j) = index.get(&n) {
                    poset.add_relation(j, i);
                }
            }
        }
        (poset, cells)
    }

    pub fn len(&self) -> usize {
        self.preds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.preds.is_empty()
    }

    /// Requires `lo` before `hi`.
    pub fn add_relation(&mut self, lo: usize, hi: usize) {
        self.preds[hi].set(lo);
    }

    /// Whether `lo` was recorded as a direct predecessor of `hi`.
    pub fn has_relation(&self, lo: usize, hi: usize) -> bool {
        self.preds[hi].get(lo)
    }

    /// Requires the listed elements to appear in the given order.
    pub fn add_chain(&mut self, chain: &[usize]) {
        for w in chain.windows(2) {
            self.add_relation(w[0], w[1]);
        }
    }

    /// Number of linear extensions.
    pub fn count_linear_extensions(&self) -> BigUint {
        let n = self.len();
        let mut layer: HashMap<Bits, BigUint> = HashMap::from([(Bits::new(n), BigUint::one())]);
        for _ in 0..n {
            let mut next: HashMap<Bits, BigUint> = HashMap::with_capacity(layer.len() * 2);
            for (ideal, count) in &layer {
                for (e, preds) in self.preds.iter().enumerate() {
                    if !ideal.get(e) && preds.is_subset(ideal) {
                        let mut grown = ideal.clone();
                        grown.set(e);
                        *next.entry(grown).or_insert_with(BigUint::zero) += count;
                    }
                }
            }
            if next.is_empty() {
                return BigUint::zero();
            }
            layer = next;
        }
        layer.into_values().next().unwrap_or_else(BigUint::one)
    }
}
