use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A box `(row, 1, component)` of a one-column multipartition.
///
/// The derived ordering compares rows first and components second, which is
/// exactly the total order on nodes used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, comp: usize) -> Self {
        Node { row, comp }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},1,{})", self.row, self.comp)
    }
}

pub fn node_compare(a: Node, b: Node) -> Ordering {
    a.cmp(&b)
}

/// A finite set of nodes in `r` components, not necessarily forming a
/// diagram. Restrictions of non-standard fillings produce such sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    r: usize,
    nodes: Vec<Node>,
}

impl NodeSet {
    pub fn new(r: usize, mut nodes: Vec<Node>) -> Self {
        nodes.sort();
        nodes.dedup();
        NodeSet { r, nodes }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of nodes in each component.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.r];
        for node in &self.nodes {
            h[node.comp - 1] += 1;
        }
        h
    }

    /// Number of nodes `<= bound` in the node order.
    fn count_below(&self, bound: Node) -> usize {
        self.nodes.partition_point(|n| *n <= bound)
    }

    /// Dominance `self ⊴ other`: every threshold node has at least as many
    /// nodes of `self` below it as of `other`.
    pub fn dominated_by(&self, other: &NodeSet) -> bool {
        let max_row = self.nodes.iter().chain(other.nodes.iter()).map(|n| n.row).max().unwrap_or(0);
        for row in 1..=max_row {
            for comp in 1..=self.r.max(other.r) {
                let g = Node::new(row, comp);
                if self.count_below(g) < other.count_below(g) {
                    return false;
                }
            }
        }
        true
    }
}

/// A one-column `r`-multipartition, stored as its column heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    heights: Vec<usize>,
}

impl Multipartition {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        if heights.is_empty() {
            return Err(Error::InvalidInput("a multipartition needs at least one component".into()));
        }
        Ok(Multipartition { heights })
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn r(&self) -> usize {
        self.heights.len()
    }

    pub fn n(&self) -> usize {
        self.heights.iter().sum()
    }

    pub fn height(&self, comp: usize) -> usize {
        self.heights[comp - 1]
    }

    /// 1-based indices of the non-empty components.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.r()).filter(|&c| self.heights[c - 1] > 0).collect()
    }

    pub fn non_empty_count(&self) -> usize {
        self.heights.iter().filter(|&&h| h > 0).count()
    }

    /// All nodes, sorted in the node order.
    pub fn nodes(&self) -> Vec<Node> {
        let mut out = Vec::with_capacity(self.n());
        let max_row = self.heights.iter().copied().max().unwrap_or(0);
        for row in 1..=max_row {
            for comp in 1..=self.r() {
                if self.heights[comp - 1] >= row {
                    out.push(Node::new(row, comp));
                }
            }
        }
        out
    }

    pub fn node_set(&self) -> NodeSet {
        NodeSet::new(self.r(), self.nodes())
    }

    pub fn contains(&self, node: Node) -> bool {
        node.comp >= 1 && node.comp <= self.r() && node.row >= 1 && node.row <= self.height(node.comp)
    }

    /// Compact label such as `(1^3|1)`; empty components print as `0`.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .heights
            .iter()
            .map(|&h| match h {
                0 => "0".to_string(),
                1 => "1".to_string(),
                h => format!("1^{h}"),
            })
            .collect();
        format!("({})", parts.join("|"))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn check_comparable(a: &Multipartition, b: &Multipartition) -> Result<()> {
    if a.n() != b.n() || a.r() != b.r() {
        return Err(Error::InvalidInput(format!(
            "cannot compare {a} (n={}, r={}) with {b} (n={}, r={})",
            a.n(),
            a.r(),
            b.n(),
            b.r()
        )));
    }
    Ok(())
}

/// Dominance `lhs ⊴ rhs` by scanning every threshold node.
pub fn dominance_leq(lhs: &Multipartition, rhs: &Multipartition) -> Result<bool> {
    check_comparable(lhs, rhs)?;
    Ok(lhs.node_set().dominated_by(&rhs.node_set()))
}

/// Dominance for shapes with at most two non-empty components, decided by
/// comparing supports and the signed height difference.
pub fn dominance_closed_form(lhs: &Multipartition, rhs: &Multipartition) -> Result<bool> {
    check_comparable(lhs, rhs)?;
    let ls = lhs.support();
    let rs = rhs.support();
    if ls.len() > 2 || rs.len() > 2 {
        return Err(Error::UnsupportedShape(format!(
            "closed-form dominance needs at most two non-empty components, got {lhs} and {rhs}"
        )));
    }
    let verdict = match (ls.as_slice(), rs.as_slice()) {
        ([k], [l]) => k <= l,
        ([k1, _], [l]) => k1 <= l,
        ([_], [_, _]) => false,
        ([k1, k2], [l1, l2]) => {
            let a = lhs.height(*k1) as i64 - lhs.height(*k2) as i64;
            let b = rhs.height(*l1) as i64 - rhs.height(*l2) as i64;
            k1 <= l1 && k2 <= l2 && (a.abs() < b.abs() || (a.abs() == b.abs() && (a >= b || k2 <= l1)))
        }
        _ => return Err(Error::InvalidInput("empty multipartition".into())),
    };
    Ok(verdict)
}

/// All one-column `r`-multipartitions of `n` with at most `max_non_empty`
/// non-empty components.
///
/// Ordered by the number of non-empty components, then by height vectors in
/// decreasing lexicographic order, so `((1),0)` precedes `(0,(1))`.
pub fn enumerate_one_column(n: usize, r: usize, max_non_empty: usize) -> Vec<Multipartition> {
    let mut out = Vec::new();
    let mut current = vec![0usize; r];
    compositions(n, 0, &mut current, &mut out);
    out.retain(|h| h.iter().filter(|&&x| x > 0).count() <= max_non_empty);
    out.sort_by(|a, b| {
        let ka = a.iter().filter(|&&x| x > 0).count();
        let kb = b.iter().filter(|&&x| x > 0).count();
        ka.cmp(&kb).then_with(|| b.cmp(a))
    });
    out.into_iter().map(|heights| Multipartition { heights }).collect()
}

fn compositions(remaining: usize, pos: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pos + 1 == current.len() {
        current[pos] = remaining;
        out.push(current.clone());
        return;
    }
    for h in 0..=remaining {
        current[pos] = h;
        compositions(remaining - h, pos + 1, current, out);
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(h: &[usize]) -> Multipartition {
        Multipartition::new(h.to_vec()).unwrap()
    }

    #[test]
    fn node_order() {
        assert_eq!(node_compare(Node::new(1, 1), Node::new(1, 3)), Ordering::Less);
        assert_eq!(node_compare(Node::new(2, 1), Node::new(1, 3)), Ordering::Greater);
        assert_eq!(node_compare(Node::new(1, 2), Node::new(1, 2)), Ordering::Equal);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&mp(&[1, 1, 1]), &mp(&[2, 1, 0])).unwrap());
        assert!(dominance_leq(&mp(&[2, 1, 0]), &mp(&[2, 1, 0])).unwrap());
        assert!(!dominance_leq(&mp(&[3, 0, 0]), &mp(&[1, 1, 1])).unwrap());
        assert!(dominance_leq(&mp(&[1, 2]), &mp(&[2, 1])).is_ok());
        assert!(dominance_leq(&mp(&[1, 2]), &mp(&[1, 1, 1])).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert!(dominance_closed_form(&mp(&[1, 3]), &mp(&[0, 4])).unwrap());
        assert!(dominance_closed_form(&mp(&[3, 1]), &mp(&[1, 3])).unwrap());
        assert!(!dominance_closed_form(&mp(&[1, 3]), &mp(&[3, 1])).unwrap());
        assert!(matches!(
            dominance_closed_form(&mp(&[1, 1, 1]), &mp(&[3, 0, 0])),
            Err(Error::UnsupportedShape(_))
        ));
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_one_column(3, 3, 3).len(), 10);
        for r in 2..6 {
            assert_eq!(enumerate_one_column(2, r, 2).len(), r + r * (r - 1) / 2);
        }
        assert_eq!(enumerate_one_column(1, 2, 2), vec![mp(&[1, 0]), mp(&[0, 1])]);
    }

    #[test]
    fn labels() {
        assert_eq!(mp(&[3, 1]).label(), "(1^3|1)");
        assert_eq!(mp(&[0, 4]).label(), "(0|1^4)");
    }
}
