//! Rooted tree decompositions of small pattern graphs.

mod massage;
mod nice;
mod treewidth;
mod width2;

pub use massage::massage_connected;
pub use nice::{to_nice, NiceKind, NiceTreeDecomposition};
pub use treewidth::{exact_treewidth, max_spasm_treewidth, treewidth, TREEWIDTH_LIMIT};
pub use width2::{bridge_bags, normalize_width2, Width2Decomposition};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A rooted tree with a bag of vertices at every node. Bags are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    parent: Vec<Option<usize>>,
    bags: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    root: usize,
}

impl TreeDecomposition {
    /// Builds a decomposition from a parent map; exactly one node must be parentless
    /// and the parent map must be acyclic.
    pub fn new(parent: Vec<Option<usize>>, mut bags: Vec<Vec<usize>>) -> Result<TreeDecomposition> {
        let k = parent.len();
        if k == 0 || bags.len() != k {
            return Err(Error::Validation("tree must have at least one node and one bag per node".into()));
        }
        let roots: Vec<usize> = (0..k).filter(|&t| parent[t].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::Validation(format!("expected one root, found {}", roots.len())));
        }
        let mut children = vec![Vec::new(); k];
        for (t, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= k {
                    return Err(Error::Validation(format!("node {t} has unknown parent {p}")));
                }
                children[p].push(t);
            }
        }
        let root = roots[0];
        let mut seen = 0;
        let mut stack = vec![root];
        while let Some(t) = stack.pop() {
            seen += 1;
            stack.extend(&children[t]);
        }
        if seen != k {
            return Err(Error::Validation("parent map contains a cycle".into()));
        }
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        Ok(TreeDecomposition { parent, bags, children, root })
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    pub fn bag(&self, t: usize) -> &[usize] {
        &self.bags[t]
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    /// Largest bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Largest separator size.
    pub fn adhesion(&self) -> usize {
        (0..self.node_count()).map(|t| self.separator(t).len()).max().unwrap_or(0)
    }

    /// Nodes with every parent before its children.
    pub fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.node_count());
        let mut stack = vec![self.root];
        while let Some(t) = stack.pop() {
            out.push(t);
            stack.extend(self.children[t].iter().rev());
        }
        out
    }

    /// Nodes with every child before its parent.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = self.preorder();
        out.reverse();
        out
    }

    /// Bag of `t` intersected with the bag of its parent (empty at the root).
    pub fn separator(&self, t: usize) -> Vec<usize> {
        match self.parent[t] {
            None => Vec::new(),
            Some(p) => intersect(&self.bags[t], &self.bags[p]),
        }
    }

    /// Union of the bags in the subtree rooted at `t`, sorted.
    pub fn cone(&self, t: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![t];
        while let Some(s) = stack.pop() {
            out.extend_from_slice(&self.bags[s]);
            stack.extend(&self.children[s]);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Cone minus separator.
    pub fn component(&self, t: usize) -> Vec<usize> {
        let sep = self.separator(t);
        self.cone(t).into_iter().filter(|v| sep.binary_search(v).is_err()).collect()
    }

    /// Checks that this is a tree decomposition of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.vertex_count();
        for (t, b) in self.bags.iter().enumerate() {
            if let Some(&v) = b.iter().find(|&&v| v >= n) {
                return Err(Error::Validation(format!("bag of node {t} contains unknown vertex {v}")));
            }
        }
        // every vertex must lie in some bag
        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (t, b) in self.bags.iter().enumerate() {
            for &v in b {
                holders[v].push(t);
            }
        }
        if let Some(v) = (0..n).find(|&v| holders[v].is_empty()) {
            return Err(Error::Validation(format!("vertex {v} lies in no bag")));
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok()) {
                return Err(Error::Validation(format!("edge {u}-{v} is not contained in any bag")));
            }
        }
        // bags holding v form a connected subtree: exactly one holder has a non-holding parent
        for v in 0..n {
            let tops = holders[v]
                .iter()
                .filter(|&&t| self.parent[t].is_none_or(|p| self.bags[p].binary_search(&v).is_err()))
                .count();
            if tops != 1 {
                return Err(Error::Validation(format!(
                    "bags containing vertex {v} do not form a connected subtree"
                )));
            }
        }
        Ok(())
    }

    /// One line per node in preorder: `t parent={p} bag={..} kind={..}`.
    pub fn dump(&self, kind: &dyn Fn(usize) -> String) -> String {
        let mut s = String::new();
        for t in self.preorder() {
            let parent = self.parent[t].map_or("none".to_string(), |p| p.to_string());
            let bag: Vec<String> = self.bags[t].iter().map(|v| v.to_string()).collect();
            s.push_str(&format!("{t} parent={parent} bag={{{}}} kind={}\n", bag.join(","), kind(t)));
        }
        s
    }
}

pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}
