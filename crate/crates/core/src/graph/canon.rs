//! Canonical labeling by individualization and refinement.
//!
//! The search tree is explored completely except for two safe shortcuts:
//! vertices that are twins of an already explored vertex in the same cell,
//! and (at the root) vertices in the same orbit as an explored one under the
//! automorphisms found so far. Both shortcuts reuse the sibling's result, so
//! the number of leaves carrying the best encoding still equals |Aut|.

use super::{encode_graph6, ColoredGraph, Graph};
use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

/// Canonical representative of an isomorphism class, keyed by its graph6 code.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    graph: Graph,
    key: String,
}

impl CanonicalForm {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// graph6 code of the canonical graph.
    pub fn key(&self) -> &str {
        &self.key
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

/// Global graph order: total size |V|+|E|, then |V|, then graph6 key.
impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = (self.vertex_count() + self.edge_count(), self.vertex_count());
        let b = (other.vertex_count() + other.edge_count(), other.vertex_count());
        a.cmp(&b).then_with(|| self.key.cmp(&other.key))
    }
}
impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.key)
    }
}

/// Canonical representative of a colored graph; color ids are kept as they are.
#[derive(Clone, Debug)]
pub struct ColoredCanonicalForm {
    graph: ColoredGraph,
    key: String,
}

impl ColoredCanonicalForm {
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn key(&self) -> &str {
        &self.key
    }
}

impl PartialEq for ColoredCanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for ColoredCanonicalForm {}

impl Hash for ColoredCanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl Ord for ColoredCanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        let (g, h) = (self.graph.graph(), other.graph.graph());
        let a = (g.vertex_count() + g.edge_count(), g.vertex_count());
        let b = (h.vertex_count() + h.edge_count(), h.vertex_count());
        a.cmp(&b).then_with(|| self.key.cmp(&other.key))
    }
}
impl PartialOrd for ColoredCanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Outcome {
    enc: Vec<u64>,
    order: Vec<usize>,
    count: u128,
}

fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.vertex_count();
    let mut cell_of = vec![0usize; n];
    'outer: loop {
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        for splitter in 0..cells.len() {
            for target in 0..cells.len() {
                if cells[target].len() < 2 {
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cells[target]
                    .iter()
                    .map(|&v| (g.neighbors(v).iter().filter(|&&w| cell_of[w] == splitter).count(), v))
                    .collect();
                if keyed.iter().all(|&(k, _)| k == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = usize::MAX;
                for (k, v) in keyed {
                    if k != last {
                        parts.push(Vec::new());
                        last = k;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(target..=target, parts);
                continue 'outer;
            }
        }
        return;
    }
}

fn encode(g: &Graph, order: &[usize]) -> Vec<u64> {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut enc = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                enc[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    enc
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.vertex_count()).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn explore(g: &Graph, mut cells: Vec<Vec<usize>>, root: bool) -> Outcome {
    refine(g, &mut cells);
    let Some(ci) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        return Outcome { enc: encode(g, &order), order, count: 1 };
    };
    let target = cells[ci].clone();
    let mut orbit: Vec<usize> = (0..g.vertex_count()).collect();
    let mut explored: Vec<(usize, Vec<u64>, Vec<usize>, u128)> = Vec::new();
    let mut best: Option<Outcome> = None;
    for &v in &target {
        let reuse = explored.iter().position(|(u, ..)| {
            twins(g, *u, v) || (root && find(&mut orbit, *u) == find(&mut orbit, v))
        });
        let (enc, order, count) = match reuse {
            Some(i) => (explored[i].1.clone(), None, explored[i].3),
            None => {
                let mut next = cells[..ci].to_vec();
                next.push(vec![v]);
                next.push(target.iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&cells[ci + 1..]);
                let out = explore(g, next, false);
                if root {
                    for (_, enc, order, _) in &explored {
                        if *enc == out.enc {
                            for (a, b) in order.iter().zip(&out.order) {
                                let (ra, rb) = (find(&mut orbit, *a), find(&mut orbit, *b));
                                orbit[ra] = rb;
                            }
                        }
                    }
                }
                explored.push((v, out.enc.clone(), out.order.clone(), out.count));
                (out.enc, Some(out.order), out.count)
            }
        };
        match &mut best {
            None => best = Some(Outcome { enc, order: order.expect("first child is explored"), count }),
            Some(b) => match enc.cmp(&b.enc) {
                Ordering::Less => *b = Outcome { enc, order: order.expect("reused results never improve"), count },
                Ordering::Equal => b.count += count,
                Ordering::Greater => {}
            },
        }
    }
    best.expect("target cell is nonempty")
}

fn run(g: &Graph, colors: Option<&[usize]>) -> Outcome {
    let n = g.vertex_count();
    if n == 0 {
        return Outcome { enc: Vec::new(), order: Vec::new(), count: 1 };
    }
    let cells = match colors {
        None => vec![(0..n).collect()],
        Some(colors) => {
            let mut ids: Vec<usize> = colors.to_vec();
            ids.sort_unstable();
            ids.dedup();
            ids.iter().map(|&c| (0..n).filter(|&v| colors[v] == c).collect()).collect()
        }
    };
    explore(g, cells, true)
}

/// `result[i]` is the vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    run(g, None).order
}

fn inverse(order: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let graph = g.permute(&inverse(&run(g, None).order));
    let key = encode_graph6(&graph);
    CanonicalForm { graph, key }
}

pub fn automorphism_count(g: &Graph) -> u128 {
    run(g, None).count
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && canonical_form(g) == canonical_form(h)
}

pub fn colored_canonical_form(h: &ColoredGraph) -> ColoredCanonicalForm {
    let out = run(h.graph(), Some(h.colors()));
    let graph = h.permute(&inverse(&out.order));
    let colors: Vec<String> = graph.colors().iter().map(|c| c.to_string()).collect();
    let key = format!("{}|{}", encode_graph6(graph.graph()), colors.join(","));
    ColoredCanonicalForm { graph, key }
}

pub fn colored_automorphism_count(h: &ColoredGraph) -> u128 {
    run(h.graph(), Some(h.colors())).count
}

pub fn color_preserving_isomorphic(h: &ColoredGraph, g: &ColoredGraph) -> bool {
    colored_canonical_form(h) == colored_canonical_form(g)
}
