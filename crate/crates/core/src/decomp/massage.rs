use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Reshapes a decomposition of a connected graph so that below the root every
/// component `α(t)` induces a connected subgraph and every separator is exactly
/// the neighbourhood of its component. Also returns, for each new node, the
/// node of `d` it was cut from.
pub fn massage_connected(d: &TreeDecomposition, g: &Graph) -> Result<(TreeDecomposition, Vec<usize>)> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if d.bag(d.root()).is_empty() {
        return Err(Error::Precondition("root bag must be nonempty".into()));
    }
    massage(d, g)
}

/// Same construction without the connectivity preconditions.
pub(crate) fn massage(d: &TreeDecomposition, g: &Graph) -> Result<(TreeDecomposition, Vec<usize>)> {
    d.validate(g)?;
    let n = g.vertex_count();
    let mut cones = vec![vec![false; n]; d.node_count()];
    for t in d.postorder() {
        for &v in d.bag(t) {
            cones[t][v] = true;
        }
        for &c in d.children(t) {
            for v in 0..n {
                if cones[c][v] {
                    cones[t][v] = true;
                }
            }
        }
    }
    let mut out = Out { parent: Vec::new(), bags: Vec::new(), origin: Vec::new() };
    build(d, g, &cones, d.root(), &vec![true; n], &mut out)?;
    let td = TreeDecomposition::new(out.parent, out.bags)?;
    Ok((td, out.origin))
}

struct Out {
    parent: Vec<Option<usize>>,
    bags: Vec<Vec<usize>>,
    origin: Vec<usize>,
}

fn build(
    d: &TreeDecomposition,
    g: &Graph,
    cones: &[Vec<bool>],
    r: usize,
    universe: &[bool],
    out: &mut Out,
) -> Result<usize> {
    let n = g.vertex_count();
    let bag: Vec<usize> = d.bag(r).iter().copied().filter(|&v| universe[v]).collect();
    let id = out.bags.len();
    out.bags.push(bag.clone());
    out.parent.push(None);
    out.origin.push(r);
    let mut in_bag = vec![false; n];
    for &v in &bag {
        in_bag[v] = true;
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if !universe[s] || in_bag[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in g.neighbors(v) {
                if universe[w] && !in_bag[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        let child = d
            .children(r)
            .iter()
            .copied()
            .find(|&c| cones[c][s])
            .ok_or_else(|| Error::Validation(format!("vertex {s} is not below node {r}")))?;
        let mut sub = vec![false; n];
        for &v in &comp {
            sub[v] = true;
            for &w in g.neighbors(v) {
                if universe[w] {
                    sub[w] = true;
                }
            }
        }
        let c = build(d, g, cones, child, &sub, out)?;
        out.parent[c] = Some(id);
    }
    Ok(id)
}
