//! The order on standard tableaux of a fixed shape generated by covering
//! moves.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::error::TableauError;
use crate::linext::Bits;
use crate::shape::Shape;
use crate::tableau::{apply_pi, enumerate_syt, count_syt, Tableau};

/// Default cap on the number of tableaux in a poset.
pub const DEFAULT_POSET_LIMIT: usize = 5000;

/// Cover digraph on `SYT(shape)`. Nodes are indices into `tableaux`, which
/// is in canonical order.
#[derive(Clone, Debug)]
pub struct SytPoset {
    pub tableaux: Vec<Tableau>,
    /// `(from, to, i)`: applying the move at `i` to `from` gives `to`.
    pub arcs: Vec<(usize, usize, u32)>,
    above: Vec<Bits>,
}

impl SytPoset {
    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    /// Elements with nothing strictly below them.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.arcs.iter().all(|&(_, to, _)| to != j)).collect()
    }

    /// Elements with nothing strictly above them.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.arcs.iter().all(|&(from, _, _)| from != j)).collect()
    }

    /// Reflexive-transitive closure of the arcs.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.above[a].get(b)
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.tableaux.binary_search(t).ok()
    }

    /// DOT rendering, nodes labelled by column word. `marks` adds a suffix to
    /// selected node labels.
    pub fn to_dot(&self, marks: &[(usize, &str)]) -> String {
        let mut out = String::from("digraph syt {\n  rankdir=BT;\n");
        for (k, t) in self.tableaux.iter().enumerate() {
            let mut label = t.column_word().to_string();
            for (_, m) in marks.iter().filter(|(i, _)| *i == k) {
                label.push_str(&format!(" [{m}]"));
            }
            let _ = writeln!(out, "  t{k} [label=\"{label}\"];");
        }
        for &(from, to, i) in &self.arcs {
            let _ = writeln!(out, "  t{from} -> t{to} [label=\"{i}\"];");
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the cover digraph of `SYT(shape)`.
pub fn build_syt_poset(shape: &Shape, limit: usize) -> Result<SytPoset, TableauError> {
    let count = count_syt(shape);
    if count > BigUint::from(limit) {
        return Err(TableauError::TooManyTableaux { count: count.to_string(), limit });
    }
    let tableaux = enumerate_syt(shape, usize::MAX)?;
    let index: HashMap<&Tableau, usize> = tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut arcs = Vec::new();
    for (k, t) in tableaux.iter().enumerate() {
        for i in 1..t.len() as u32 {
            if let Some(next) = apply_pi(t, i)? {
                if next != *t {
                    arcs.push((k, index[&next], i));
                }
            }
        }
    }
    let n = tableaux.len();
    let mut succ = vec![Vec::new(); n];
    for &(a, b, _) in &arcs {
        succ[a].push(b);
    }
    let mut above: Vec<Bits> = Vec::with_capacity(n);
    for start in 0..n {
        let mut seen = Bits::new(n);
        seen.set(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &succ[x] {
                if !seen.get(y) {
                    seen.set(y);
                    stack.push(y);
                }
            }
        }
        above.push(seen);
    }
    Ok(SytPoset { tableaux, arcs, above })
}
