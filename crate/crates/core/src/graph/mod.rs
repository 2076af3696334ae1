//! Simple graphs, colored graphs and quotients.

mod canon;
mod edgelist;
mod enumerate;
mod graph6;

pub use canon::{
    automorphism_count, canonical_form, canonical_labeling, colored_automorphism_count,
    colored_canonical_form, color_preserving_isomorphic, is_isomorphic, CanonicalForm,
    ColoredCanonicalForm,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use enumerate::{all_graphs, trees};
pub use graph6::{encode_graph6, parse_graph6};

use crate::error::{Error, Result};
use crate::partitions::SetPartition;

/// Loop-free simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64);
        Graph { n, m: 0, adj: vec![Vec::new(); n], words, bits: vec![0; n * words] }
    }

    /// Builds a graph from an edge list. Repeated edges are collapsed, loops rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Domain(format!("edge {u}-{v} out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::Domain(format!("loop at vertex {u}")));
            }
            g.set(u, v);
        }
        g.finish();
        Ok(g)
    }

    pub(crate) fn set(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
    }

    pub(crate) fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Neighborhood bitmasks; only for graphs with at most 64 vertices.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask view needs at most 64 vertices");
        (0..self.n).map(|v| if self.n == 0 { 0 } else { self.bits[v * self.words] }).collect()
    }

    /// Subgraph induced by `verts`; vertex `verts[i]` becomes `i`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j);
                }
            }
        }
        g.finish();
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        g.finish();
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set(u, v);
        }
        for (u, v) in other.edges() {
            g.set(self.n + u, self.n + v);
        }
        g.finish();
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Graph with one color id per vertex. The coloring need not be proper.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    graph: Graph,
    colors: Vec<usize>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<usize>) -> Result<ColoredGraph> {
        if colors.len() != graph.vertex_count() {
            return Err(Error::Domain(format!(
                "{} colors given for {} vertices",
                colors.len(),
                graph.vertex_count()
            )));
        }
        Ok(ColoredGraph { graph, colors })
    }

    /// Every vertex gets color 0.
    pub fn monochromatic(graph: Graph) -> ColoredGraph {
        let n = graph.vertex_count();
        ColoredGraph { graph, colors: vec![0; n] }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// One more than the largest color id in use.
    pub fn color_bound(&self) -> usize {
        self.colors.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    /// Vertices of each color, indexed by color id (ids without vertices give empty classes).
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.color_bound()];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    pub fn permute(&self, perm: &[usize]) -> ColoredGraph {
        let mut colors = vec![0; self.colors.len()];
        for (v, &c) in self.colors.iter().enumerate() {
            colors[perm[v]] = c;
        }
        ColoredGraph { graph: self.graph.permute(perm), colors }
    }

    pub fn induced(&self, verts: &[usize]) -> ColoredGraph {
        ColoredGraph {
            graph: self.graph.induced(verts),
            colors: verts.iter().map(|&v| self.colors[v]).collect(),
        }
    }
}

/// Result of identifying vertex blocks: a simple graph plus the blocks that carry a loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub graph: Graph,
    pub loops: Vec<bool>,
}

impl QuotientGraph {
    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|&l| l)
    }
}

/// Categorical product; vertex `(v, x)` is numbered `v * |V(x)| + x`.
pub fn tensor_product(g: &Graph, x: &Graph) -> Graph {
    let k = x.vertex_count();
    let mut p = Graph::empty(g.vertex_count() * k);
    for (u, v) in g.edges() {
        for (a, b) in x.edges() {
            p.set(u * k + a, v * k + b);
            p.set(u * k + b, v * k + a);
        }
    }
    p.finish();
    p
}

/// Identifies each block of `rho` to a single vertex (block `i` becomes vertex `i`).
pub fn quotient(h: &Graph, rho: &SetPartition) -> QuotientGraph {
    let labels = rho.labels();
    assert_eq!(labels.len(), h.vertex_count(), "partition ground set mismatch");
    let k = rho.block_count();
    let mut graph = Graph::empty(k);
    let mut loops = vec![false; k];
    for (u, v) in h.edges() {
        let (a, b) = (labels[u], labels[v]);
        if a == b {
            loops[a] = true;
        } else {
            graph.set(a, b);
        }
    }
    graph.finish();
    QuotientGraph { graph, loops }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_of_edges_is_matching() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = tensor_product(&k2, &k2);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.edge_count(), 2);
        assert!(p.neighbors(0) == [3] && p.neighbors(1) == [2]);
    }

    #[test]
    fn quotient_examples() {
        let p4 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let q = quotient(&p4, &SetPartition::from_blocks(5, &[vec![0, 4], vec![1], vec![2], vec![3]]));
        assert!(!q.has_loops());
        assert!(is_isomorphic(&q.graph, &parse_graph6("Cr").unwrap()));

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let q = quotient(&k2, &SetPartition::from_blocks(2, &[vec![0, 1]]));
        assert_eq!(q.graph.vertex_count(), 1);
        assert!(q.loops[0]);

        let q = quotient(&p4, &SetPartition::finest(5));
        assert_eq!(q.graph, p4);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn components_of_disjoint_union() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let g = k2.disjoint_union(&Graph::empty(1)).disjoint_union(&k2);
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }
}
