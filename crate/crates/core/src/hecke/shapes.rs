use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An `r`-tuple of partitions of total size `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneralMultipartition {
    components: Vec<Vec<usize>>,
}

/// A node `(row, col, comp)`, all 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeckeNode {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

/// Content `col - row` of a node.
pub fn content(node: HeckeNode) -> i64 {
    node.col as i64 - node.row as i64
}

impl GeneralMultipartition {
    /// Zero parts are dropped; parts must be weakly decreasing.
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self> {
        let components: Vec<Vec<usize>> =
            components.into_iter().map(|c| c.into_iter().filter(|&p| p > 0).collect()).collect();
        for c in &components {
            if c.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidInput(format!("parts {c:?} are not weakly decreasing")));
            }
        }
        Ok(GeneralMultipartition { components })
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn n(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    /// Every non-empty component is a single column.
    pub fn is_one_column(&self) -> bool {
        self.components.iter().flatten().all(|&p| p == 1)
    }

    pub fn non_empty_count(&self) -> usize {
        self.components.iter().filter(|c| !c.is_empty()).count()
    }

    /// Column heights when the shape is one-column.
    pub fn column_heights(&self) -> Option<Vec<usize>> {
        self.is_one_column().then(|| self.components.iter().map(Vec::len).collect())
    }

    /// All standard tableaux, as the node of each entry `1..=n`.
    pub fn standard_tableaux(&self) -> Vec<GeneralTableau> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = self.components.iter().map(|c| vec![0; c.len()]).collect();
        let mut nodes = Vec::with_capacity(self.n());
        self.extend(&mut rows, &mut nodes, &mut out);
        out
    }

    fn extend(&self, filled: &mut [Vec<usize>], nodes: &mut Vec<HeckeNode>, out: &mut Vec<GeneralTableau>) {
        if nodes.len() == self.n() {
            out.push(GeneralTableau { nodes: nodes.clone() });
            return;
        }
        for comp in 0..self.r() {
            for row in 0..self.components[comp].len() {
                let len = filled[comp][row];
                let addable = len < self.components[comp][row] && (row == 0 || filled[comp][row - 1] > len);
                if addable {
                    filled[comp][row] += 1;
                    nodes.push(HeckeNode { row: row + 1, col: len + 1, comp: comp + 1 });
                    self.extend(filled, nodes, out);
                    nodes.pop();
                    filled[comp][row] -= 1;
                }
            }
        }
    }
}

impl fmt::Display for GeneralMultipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| {
                if c.is_empty() {
                    "0".to_string()
                } else {
                    c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                }
            })
            .collect();
        write!(f, "({})", parts.join("|"))
    }
}

/// A standard tableau of a general multipartition: entry `k` sits at
/// `nodes[k - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralTableau {
    nodes: Vec<HeckeNode>,
}

impl GeneralTableau {
    pub fn node_of(&self, k: usize) -> HeckeNode {
        self.nodes[k - 1]
    }

    pub fn nodes(&self) -> &[HeckeNode] {
        &self.nodes
    }

    /// The filling with `i` and `i+1` exchanged.
    pub fn swapped(&self, i: usize) -> GeneralTableau {
        let mut nodes = self.nodes.clone();
        nodes.swap(i - 1, i);
        GeneralTableau { nodes }
    }
}

/// All `r`-multipartitions of `n`.
pub fn enumerate_multipartitions(n: usize, r: usize) -> Vec<GeneralMultipartition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(r);
    distribute(n, r, &mut current, &mut out);
    out
}

fn distribute(
    remaining: usize,
    r: usize,
    current: &mut Vec<Vec<usize>>,
    out: &mut Vec<GeneralMultipartition>,
) {
    if current.len() + 1 == r {
        for p in partitions(remaining, remaining) {
            current.push(p);
            out.push(GeneralMultipartition { components: current.clone() });
            current.pop();
        }
        return;
    }
    for size in 0..=remaining {
        for p in partitions(size, size) {
            current.push(p);
            distribute(remaining - size, r, current, out);
            current.pop();
        }
    }
}

/// Partitions of `n` with largest part at most `max`.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
