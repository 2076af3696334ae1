//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use motif_core::graph::{ColoredGraph, Graph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_colored(rng: &mut ChaCha8Rng, n: usize, p: f64, colors: usize) -> ColoredGraph {
    let g = random_graph(rng, n, p);
    let c = (0..n).map(|_| rng.gen_range(0..colors)).collect();
    ColoredGraph::new(g, c).unwrap()
}

/// Calls `visit` on every permutation of `0..n`.
pub fn permutations(n: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            visit(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(p, k + 1, visit);
            p.swap(k, i);
        }
    }
    go(&mut (0..n).collect(), 0, visit);
}

fn preserves(a: &Graph, b: &Graph, p: &[usize]) -> bool {
    a.edges().all(|(u, v)| b.has_edge(p[u], p[v]))
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut found = false;
    permutations(a.vertex_count(), &mut |p| found |= preserves(a, b, p));
    found
}

pub fn brute_automorphisms(a: &Graph) -> u128 {
    let mut count = 0;
    permutations(a.vertex_count(), &mut |p| {
        if preserves(a, a, p) {
            count += 1;
        }
    });
    count
}

/// Homomorphisms by plain odometer enumeration of all maps.
pub fn brute_hom(h: &Graph, g: &Graph) -> u64 {
    let k = h.vertex_count();
    let n = g.vertex_count();
    if k == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    let mut map = vec![0; k];
    let mut count = 0;
    loop {
        if h.edges().all(|(u, v)| g.has_edge(map[u], map[v])) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            map[i] += 1;
            if map[i] < n {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// Walks with `len` edges: `1ᵀ A^len 1`.
pub fn walks(g: &Graph, len: usize) -> u64 {
    let n = g.vertex_count();
    let mut v = vec![1u64; n];
    for _ in 0..len {
        v = (0..n).map(|x| g.neighbors(x).iter().map(|&y| v[y]).sum()).collect();
    }
    v.iter().sum()
}

/// Treewidth as the best elimination ordering over all permutations.
pub fn brute_treewidth(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = n.saturating_sub(1);
    permutations(n, &mut |order| {
        let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        let mut gone = vec![false; n];
        let mut width = 0;
        for &v in order {
            let nb: Vec<usize> = (0..n).filter(|&u| !gone[u] && u != v && adj[v][u]).collect();
            width = width.max(nb.len());
            for &a in &nb {
                for &b in &nb {
                    if a != b {
                        adj[a][b] = true;
                    }
                }
            }
            gone[v] = true;
        }
        best = best.min(width);
    });
    best
}

/// True if no path joins two vertices of `a` once `removed` is deleted.
pub fn no_a_path(g: &Graph, a: &[usize], removed: &[usize]) -> bool {
    let keep: Vec<usize> = (0..g.vertex_count()).filter(|v| !removed.contains(v)).collect();
    let sub = g.induced(&keep);
    sub.components().iter().all(|comp| comp.iter().filter(|&&i| a.contains(&keep[i])).count() <= 1)
}

/// All simple paths of length ≥ 1 from `v` ending at the first vertex of `a ∖ {v}` they reach.
pub fn attach_paths(g: &Graph, v: usize, a: &[usize]) -> Vec<Vec<usize>> {
    fn go(g: &Graph, a: &[usize], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if path.contains(&w) {
                continue;
            }
            path.push(w);
            if a.contains(&w) {
                out.push(path.clone());
            } else {
                go(g, a, path, out);
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(g, a, &mut vec![v], &mut out);
    out
}

/// Whether `l` paths from `v` to `a ∖ {v}` exist that share only `v`, by exhaustive search.
pub fn brute_attached(g: &Graph, v: usize, a: &[usize], l: usize) -> bool {
    fn pick(paths: &[Vec<usize>], from: usize, used: &mut Vec<usize>, left: usize) -> bool {
        if left == 0 {
            return true;
        }
        for i in from..paths.len() {
            let p = &paths[i][1..];
            if p.iter().any(|x| used.contains(x)) {
                continue;
            }
            let before = used.len();
            used.extend_from_slice(p);
            if pick(paths, i + 1, used, left - 1) {
                return true;
            }
            used.truncate(before);
        }
        false
    }
    let paths = attach_paths(g, v, a);
    pick(&paths, 0, &mut Vec::new(), l)
}

/// Gauss–Jordan inverse over the rationals; `None` if singular.
pub fn invert(m: &[Vec<num_rational::BigRational>]) -> Option<Vec<Vec<num_rational::BigRational>>> {
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = BigRational::one() / &a[c][c];
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
