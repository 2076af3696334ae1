//! Disjoint A-paths, covers hitting all A-paths, and ℓ-attachment.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum APathPacking {
    /// Vertex-disjoint paths, each listed from one endpoint in `a` to the other.
    Paths(Vec<Vec<usize>>),
    /// A vertex set meeting every A-path.
    Cover(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RestrictedPacking {
    Paths(Vec<Vec<usize>>),
    /// `a_star ⊆ a` and the ℓ-attached vertices `s_star` together meet every A-path.
    Separated { a_star: Vec<usize>, s_star: Vec<usize> },
}

fn membership(n: usize, set: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in set {
        m[v] = true;
    }
    m
}

/// Every path from `x` to another available vertex of `a` whose inner
/// vertices are available and outside `a`.
fn paths_from(g: &Graph, in_a: &[bool], avail: &[bool], x: usize, out: &mut Vec<Vec<usize>>) {
    fn go(g: &Graph, in_a: &[bool], avail: &[bool], on: &mut Vec<bool>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().expect("nonempty");
        for &y in g.neighbors(last) {
            if !avail[y] || on[y] {
                continue;
            }
            path.push(y);
            if in_a[y] {
                out.push(path.clone());
            } else {
                on[y] = true;
                go(g, in_a, avail, on, path, out);
                on[y] = false;
            }
            path.pop();
        }
    }
    let mut on = vec![false; g.vertex_count()];
    on[x] = true;
    go(g, in_a, avail, &mut on, &mut vec![x], out);
}

/// Looks for `need` disjoint A-paths among the available vertices.
fn pack(g: &Graph, in_a: &[bool], avail: &mut Vec<bool>, need: usize, acc: &mut Vec<Vec<usize>>) -> bool {
    if need == 0 {
        return true;
    }
    let free_a: Vec<usize> = (0..g.vertex_count()).filter(|&v| in_a[v] && avail[v]).collect();
    if free_a.len() < 2 * need {
        return false;
    }
    let x = free_a[0];
    let mut candidates = Vec::new();
    paths_from(g, in_a, avail, x, &mut candidates);
    for p in candidates {
        for &v in &p {
            avail[v] = false;
        }
        acc.push(p);
        if pack(g, in_a, avail, need - 1, acc) {
            return true;
        }
        let p = acc.pop().expect("pushed");
        for &v in &p {
            avail[v] = true;
        }
    }
    // x is not an endpoint of any path in the packing; it cannot be an inner vertex either
    avail[x] = false;
    let found = pack(g, in_a, avail, need, acc);
    avail[x] = true;
    found
}

/// True if `g − removed` contains an A-path.
pub(crate) fn has_a_path(g: &Graph, a: &[usize], removed: &[bool]) -> bool {
    let n = g.vertex_count();
    let in_a = membership(n, a);
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if removed[s] || comp[s] != usize::MAX {
            continue;
        }
        let mut hits = 0;
        let mut queue = VecDeque::from([s]);
        comp[s] = s;
        while let Some(u) = queue.pop_front() {
            if in_a[u] {
                hits += 1;
                if hits > 1 {
                    return true;
                }
            }
            for &w in g.neighbors(u) {
                if !removed[w] && comp[w] == usize::MAX {
                    comp[w] = s;
                    queue.push_back(w);
                }
            }
        }
    }
    false
}

/// Smallest vertex set meeting every A-path (lexicographically first among the smallest).
fn minimum_cover(g: &Graph, a: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut removed = vec![false; n];
    for size in 0..=n {
        let mut chosen = Vec::with_capacity(size);
        if choose(g, a, 0, size, &mut chosen, &mut removed) {
            return chosen;
        }
    }
    unreachable!("removing every vertex leaves no A-path")
}

fn choose(g: &Graph, a: &[usize], from: usize, left: usize, chosen: &mut Vec<usize>, removed: &mut [bool]) -> bool {
    if left == 0 {
        return !has_a_path(g, a, removed);
    }
    for v in from..g.vertex_count() {
        if g.vertex_count() - v < left {
            break;
        }
        removed[v] = true;
        chosen.push(v);
        if choose(g, a, v + 1, left - 1, chosen, removed) {
            return true;
        }
        chosen.pop();
        removed[v] = false;
    }
    false
}

/// Either `k` vertex-disjoint A-paths or a set of at most `2k − 2` vertices
/// meeting every A-path. Exhaustive search; meant for small graphs.
pub fn a_path_packing(g: &Graph, a: &[usize], k: usize) -> Result<APathPacking> {
    if k == 0 {
        return Err(Error::Domain("packing size must be at least 1".into()));
    }
    check_vertices(g, a)?;
    let n = g.vertex_count();
    let in_a = membership(n, a);
    let mut avail = vec![true; n];
    let mut acc = Vec::new();
    if pack(g, &in_a, &mut avail, k, &mut acc) {
        return Ok(APathPacking::Paths(acc));
    }
    let cover = minimum_cover(g, a);
    assert!(cover.len() < 2 * k - 1, "cover of size {} exceeds 2k-2 for k={k}", cover.len());
    Ok(APathPacking::Cover(cover))
}

fn check_vertices(g: &Graph, set: &[usize]) -> Result<()> {
    match set.iter().find(|&&v| v >= g.vertex_count()) {
        Some(v) => Err(Error::Domain(format!("vertex {v} out of range"))),
        None => Ok(()),
    }
}

/// Maximum number of paths of length ≥ 1 from `v` to distinct vertices of
/// `a ∖ {v}` that pairwise share only `v`, capped at `limit`.
pub(crate) fn attachment(g: &Graph, v: usize, a: &[usize], limit: usize) -> usize {
    let n = g.vertex_count();
    // node 2x is x_in, 2x+1 is x_out, 2n is the sink
    let sink = 2 * n;
    let size = 2 * n + 1;
    let mut cap = vec![vec![0i32; size]; size];
    for x in 0..n {
        if x != v {
            cap[2 * x][2 * x + 1] = 1;
        }
        for &y in g.neighbors(x) {
            cap[2 * x + 1][2 * y] = 1;
        }
    }
    for &x in a {
        if x != v {
            cap[2 * x + 1][sink] = 1;
        }
    }
    let source = 2 * v + 1;
    let mut flow = 0;
    while flow < limit {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            if u == sink {
                break;
            }
            for w in 0..size {
                if cap[u][w] > 0 && prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut w = sink;
        while w != source {
            let u = prev[w];
            cap[u][w] -= 1;
            cap[w][u] += 1;
            w = u;
        }
        flow += 1;
    }
    flow
}

/// True iff `l` paths of length ≥ 1 join `v` to `a` while sharing only `v`
/// (when `v ∈ a`, the far endpoints must be other members of `a`).
pub fn is_l_attached(g: &Graph, v: usize, a: &[usize], l: usize) -> bool {
    attachment(g, v, a, l) >= l
}

/// Vertices of `a` reachable from `v` without passing through `s ∖ {v}`; includes `v` itself when `v ∈ a`.
fn seen(g: &Graph, v: usize, a: &[usize], s: &[bool]) -> Vec<usize> {
    let n = g.vertex_count();
    let mut reach = vec![false; n];
    reach[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !reach[w] && !s[w] {
                reach[w] = true;
                queue.push_back(w);
            }
        }
    }
    a.iter().copied().filter(|&t| reach[t]).collect()
}

pub(crate) fn restricted_unchecked(g: &Graph, a: &[usize], k: usize, l: usize) -> Result<RestrictedPacking> {
    let cover = match a_path_packing(g, a, k)? {
        APathPacking::Paths(p) => return Ok(RestrictedPacking::Paths(p)),
        APathPacking::Cover(c) => c,
    };
    let in_cover = membership(g.vertex_count(), &cover);
    let (s_star, loose): (Vec<usize>, Vec<usize>) = cover.iter().partition(|&&v| is_l_attached(g, v, a, l));
    let mut in_star = vec![false; g.vertex_count()];
    for &v in &loose {
        for t in seen(g, v, a, &in_cover) {
            in_star[t] = true;
        }
    }
    let a_star = (0..g.vertex_count()).filter(|&t| in_star[t]).collect();
    Ok(RestrictedPacking::Separated { a_star, s_star })
}

/// Refines [`a_path_packing`]: in the second arm the cover uses only vertices
/// of `a` plus exactly the vertices that are ℓ-attached to `a`.
pub fn a_path_packing_restricted(g: &Graph, a: &[usize], k: usize, l: usize) -> Result<RestrictedPacking> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if l < 2 * k {
        return Err(Error::Precondition(format!("need l >= 2k, got l={l}, k={k}")));
    }
    restricted_unchecked(g, a, k, l)
}
