use std::collections::HashMap;
use std::fmt;

use super::multipartition::{Multipartition, Node, NodeSet};
use super::residue::{ResidueSequence, Weight};
use crate::coxeter::Permutation;
use crate::error::{Error, Result};

/// A bijective filling of a one-column shape by `1..n`, not necessarily
/// standard. Entry `k` sits at `nodes[k - 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Multipartition,
    nodes: Vec<Node>,
}

impl Tableau {
    /// Builds a filling from the node of each entry, checking bijectivity.
    pub fn from_nodes(shape: Multipartition, nodes: Vec<Node>) -> Result<Self> {
        if nodes.len() != shape.n() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a shape of size {}",
                nodes.len(),
                shape.n()
            )));
        }
        let mut seen = nodes.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != nodes.len() || !nodes.iter().all(|&g| shape.contains(g)) {
            return Err(Error::InvalidInput(format!("not a bijective filling of {shape}")));
        }
        Ok(Tableau { shape, nodes })
    }

    /// Builds a filling from each component's column, read top to bottom.
    pub fn from_columns(columns: &[Vec<usize>]) -> Result<Self> {
        let shape = Multipartition::new(columns.iter().map(Vec::len).collect())?;
        let n = shape.n();
        let mut nodes = vec![None; n];
        for (c, column) in columns.iter().enumerate() {
            for (row, &entry) in column.iter().enumerate() {
                if entry == 0 || entry > n || nodes[entry - 1].is_some() {
                    return Err(Error::InvalidInput(format!("bad entry {entry} in columns")));
                }
                nodes[entry - 1] = Some(Node::new(row + 1, c + 1));
            }
        }
        Tableau::from_nodes(shape, nodes.into_iter().map(|g| g.expect("filled")).collect())
    }

    /// The initial tableau `t^λ`: entries follow the node order.
    pub fn initial(shape: &Multipartition) -> Tableau {
        Tableau { shape: shape.clone(), nodes: shape.nodes() }
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.nodes.len()
    }

    /// Node holding entry `k` (1-based).
    pub fn node_of(&self, k: usize) -> Node {
        self.nodes[k - 1]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Each component's column read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut cols: Vec<Vec<usize>> = self.shape.heights().iter().map(|&h| vec![0; h]).collect();
        for (k, g) in self.nodes.iter().enumerate() {
            cols[g.comp - 1][g.row - 1] = k + 1;
        }
        cols
    }

    /// Entries increase down every column.
    pub fn is_standard(&self) -> bool {
        // Walking entries in increasing order must visit each column top to
        // bottom.
        let mut filled = vec![0usize; self.shape.r()];
        for g in &self.nodes {
            if g.row != filled[g.comp - 1] + 1 {
                return false;
            }
            filled[g.comp - 1] = g.row;
        }
        true
    }

    /// `t ∘ s_i`: entries `i` and `i+1` trade places.
    pub fn swap(&self, i: usize) -> Tableau {
        let mut nodes = self.nodes.clone();
        nodes.swap(i - 1, i);
        Tableau { shape: self.shape.clone(), nodes }
    }

    /// `t ∘ w`, i.e. `k ↦ t(w(k))`.
    pub fn compose(&self, w: &Permutation) -> Tableau {
        let nodes = (1..=self.n()).map(|k| self.node_of(w.apply(k))).collect();
        Tableau { shape: self.shape.clone(), nodes }
    }

    /// `i` is a descent: `t(i) > t(i+1)` in the node order.
    pub fn is_descent(&self, i: usize) -> bool {
        self.nodes[i - 1] > self.nodes[i]
    }

    /// The permutation `d(t)` with `t = t^λ ∘ d(t)`.
    pub fn permutation(&self) -> Permutation {
        let order = self.shape.nodes();
        let position: HashMap<Node, usize> = order.iter().enumerate().map(|(i, &g)| (g, i + 1)).collect();
        let images: Vec<usize> = self.nodes.iter().map(|g| position[g]).collect();
        Permutation::from_images(&images).expect("fillings are bijective")
    }

    /// Nodes holding the entries `1..=k`.
    pub fn restrict(&self, k: usize) -> NodeSet {
        NodeSet::new(self.shape.r(), self.nodes[..k].to_vec())
    }

    /// Tableau order: every restriction of `self` is dominated by the
    /// matching restriction of `other`.
    pub fn dominated_by(&self, other: &Tableau) -> bool {
        (1..=self.n()).all(|k| self.restrict(k).dominated_by(&other.restrict(k)))
    }

    /// Residue of every entry: `1 - row + i_comp`.
    pub fn residue_sequence(&self, weight: &Weight) -> Result<ResidueSequence> {
        if weight.rank() != self.shape.r() {
            return Err(Error::ShapeMismatch(format!(
                "weight has {} components, shape has {}",
                weight.rank(),
                self.shape.r()
            )));
        }
        Ok(self.nodes.iter().map(|g| node_residue(*g, weight)).collect())
    }

    /// The Garnir position: the unique descent `k`, with `k` and `k+1` in
    /// one column and `t ∘ s_k` standard.
    pub fn garnir_position(&self) -> Option<usize> {
        let descents: Vec<usize> = (1..self.n()).filter(|&i| self.is_descent(i)).collect();
        match descents.as_slice() {
            [k] if self.nodes[k - 1].comp == self.nodes[*k].comp && self.swap(*k).is_standard() => Some(*k),
            _ => None,
        }
    }

    /// Factors a non-standard filling as `g ∘ w` with `g` Garnir and
    /// `l(d(t)) = l(d(g)) + l(w)`. The letters of a reduced word for `w`
    /// are returned alongside `g`.
    pub fn garnir_factor(&self) -> Result<(Tableau, Vec<usize>)> {
        if self.is_standard() {
            return Err(Error::InvalidInput("a standard tableau has no Garnir factor".into()));
        }
        let mut current = self.clone();
        let mut tail = Vec::new();
        loop {
            if current.garnir_position().is_some() {
                tail.reverse();
                return Ok((current, tail));
            }
            // Peeling a descent keeps lengths additive; some descent always
            // leaves a non-standard filling unless the current one is Garnir.
            let step = (1..current.n())
                .filter(|&i| current.is_descent(i))
                .find(|&i| !current.swap(i).is_standard())
                .ok_or_else(|| Error::InvalidInput(format!("no Garnir factorisation found for {current}")))?;
            current = current.swap(step);
            tail.push(step);
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .columns()
            .iter()
            .map(|c| {
                let entries: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("[{}]", entries.join(","))
            })
            .collect();
        write!(f, "({})", cols.join(","))
    }
}

/// Residue `1 - row + i_comp` of a node.
pub fn node_residue(node: Node, weight: &Weight) -> i64 {
    weight.modulus().reduce(1 - node.row as i64 + weight.residue(node.comp))
}

/// All standard tableaux of a one-column shape, in canonical order.
///
/// The canonical order compares the component sequence `(comp(1), ...,
/// comp(n))` lexicographically; for two columns this lists the entry sets of
/// the first column in lexicographic order.
pub fn enumerate_standard(shape: &Multipartition) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut filled = vec![0usize; shape.r()];
    let mut nodes = Vec::with_capacity(shape.n());
    fill(shape, &mut filled, &mut nodes, &mut out);
    out
}

fn fill(shape: &Multipartition, filled: &mut [usize], nodes: &mut Vec<Node>, out: &mut Vec<Tableau>) {
    if nodes.len() == shape.n() {
        out.push(Tableau { shape: shape.clone(), nodes: nodes.clone() });
        return;
    }
    for comp in 1..=shape.r() {
        if filled[comp - 1] < shape.height(comp) {
            filled[comp - 1] += 1;
            nodes.push(Node::new(filled[comp - 1], comp));
            fill(shape, filled, nodes, out);
            nodes.pop();
            filled[comp - 1] -= 1;
        }
    }
}

/// `C(n, a_1)`-style count `n! / Π h_i!` of standard tableaux.
pub fn standard_count(shape: &Multipartition) -> u128 {
    let mut total = 1u128;
    let mut placed = 0u128;
    for &h in shape.heights() {
        for j in 1..=h as u128 {
            placed += 1;
            total = total * placed / j;
        }
    }
    total
}
