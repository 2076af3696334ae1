use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeSet;

/// Width-2 normal form: the root bag has two vertices and one child, every
/// other bag has three vertices `u1 < u2 < u3` with separator `{u1, u2}`.
/// Vertices are relabeled so that labels grow along the tree.
#[derive(Clone, Debug)]
pub struct Width2Decomposition {
    /// Decomposition of `graph`; node 0 is the root and nodes are in preorder.
    pub td: TreeDecomposition,
    /// `relabel[v]` is the new label of original vertex `v`.
    pub relabel: Vec<usize>,
    /// The input graph under the new labels.
    pub graph: Graph,
}

impl Width2Decomposition {
    /// Checks the normal-form invariants on top of ordinary validity.
    pub fn check(&self) -> Result<()> {
        self.td.validate(&self.graph)?;
        let r = self.td.root();
        if self.td.bag(r).len() != 2 || self.td.children(r).len() != 1 {
            return Err(Error::Validation("root must have a 2-element bag and one child".into()));
        }
        for t in 0..self.td.node_count() {
            if t == r {
                continue;
            }
            let bag = self.td.bag(t);
            let sep = self.td.separator(t);
            if bag.len() != 3 || sep.len() != 2 || sep != bag[..2] {
                return Err(Error::Validation(format!("node {t} violates the width-2 normal form")));
            }
        }
        Ok(())
    }
}

/// Bags to insert between adjacent bags of size 3 that share fewer than two vertices.
pub fn bridge_bags(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let common: Vec<usize> = a.iter().copied().filter(|v| b.contains(v)).collect();
    match common.len() {
        0 => {
            let (b1, c1) = (a[1], a[2]);
            let (d1, e1) = (b[0], b[1]);
            vec![vec![b1, c1, d1], vec![c1, d1, e1]]
        }
        1 => {
            let c = common[0];
            let x = *a.iter().find(|&&v| v != c).unwrap();
            let y = *b.iter().find(|&&v| v != c).unwrap();
            vec![vec![x, c, y]]
        }
        _ => Vec::new(),
    }
}

/// Brings a width-≤2 decomposition of a connected graph with at least three
/// vertices into width-2 normal form.
pub fn normalize_width2(d: &TreeDecomposition, g: &Graph) -> Result<Width2Decomposition> {
    d.validate(g)?;
    if d.width() > 2 {
        return Err(Error::Domain(format!("decomposition has width {} > 2", d.width())));
    }
    if g.vertex_count() < 3 || !g.is_connected() {
        return Err(Error::Precondition("width-2 normal form needs a connected graph with at least 3 vertices".into()));
    }
    let k = d.node_count();
    let mut bags: Vec<BTreeSet<usize>> = d.bags().iter().map(|b| b.iter().copied().collect()).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
    for t in 0..k {
        if let Some(p) = d.parent(t) {
            adj[t].insert(p);
            adj[p].insert(t);
        }
    }
    let mut alive = vec![true; k];
    loop {
        let mut changed = false;
        // merge nested neighbours
        for s in 0..bags.len() {
            if !alive[s] {
                continue;
            }
            let nested = adj[s].iter().copied().find(|&t| bags[s].is_subset(&bags[t]));
            if let Some(t) = nested {
                let ns: Vec<usize> = adj[s].iter().copied().filter(|&x| x != t).collect();
                for x in ns {
                    adj[x].remove(&s);
                    adj[x].insert(t);
                    adj[t].insert(x);
                }
                adj[t].remove(&s);
                adj[s].clear();
                alive[s] = false;
                changed = true;
            }
        }
        // grow small bags from a neighbour
        for t in 0..bags.len() {
            if !alive[t] || bags[t].len() >= 3 {
                continue;
            }
            let pick = adj[t]
                .iter()
                .filter_map(|&s| bags[s].difference(&bags[t]).next().copied())
                .min();
            if let Some(v) = pick {
                bags[t].insert(v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    // bridge poorly overlapping neighbours
    let edges: Vec<(usize, usize)> = (0..bags.len())
        .filter(|&s| alive[s])
        .flat_map(|s| adj[s].iter().copied().filter(move |&t| t > s).map(move |t| (s, t)).collect::<Vec<_>>())
        .collect();
    for (s, t) in edges {
        let a: Vec<usize> = bags[s].iter().copied().collect();
        let b: Vec<usize> = bags[t].iter().copied().collect();
        let inserted = bridge_bags(&a, &b);
        if inserted.is_empty() {
            continue;
        }
        adj[s].remove(&t);
        adj[t].remove(&s);
        let mut prev = s;
        for bag in inserted {
            let id = bags.len();
            bags.push(bag.into_iter().collect());
            adj.push(BTreeSet::new());
            alive.push(true);
            adj[prev].insert(id);
            adj[id].insert(prev);
            prev = id;
        }
        adj[prev].insert(t);
        adj[t].insert(prev);
    }
    let first = (0..bags.len()).find(|&t| alive[t]).unwrap();
    debug_assert!(bags.iter().zip(&alive).all(|(b, &a)| !a || b.len() == 3));
    // orient from a new root above `first`, in preorder
    let mut order: Vec<(usize, Option<usize>)> = Vec::new(); // (old node, new parent)
    let mut stack = vec![(first, None::<usize>, 0usize)];
    while let Some((t, from, new_parent)) = stack.pop() {
        let id = order.len() + 1;
        order.push((t, Some(new_parent)));
        for &c in adj[t].iter().rev() {
            if Some(c) != from {
                stack.push((c, Some(t), id));
            }
        }
    }
    let root_pair: Vec<usize> = bags[first].iter().copied().take(2).collect();
    let n = g.vertex_count();
    let mut relabel = vec![usize::MAX; n];
    relabel[root_pair[0]] = 0;
    relabel[root_pair[1]] = 1;
    let mut next = 2;
    let mut new_bags: Vec<Vec<usize>> = vec![vec![0, 1]];
    let mut parent: Vec<Option<usize>> = vec![None];
    for &(t, p) in &order {
        for &v in &bags[t] {
            if relabel[v] == usize::MAX {
                relabel[v] = next;
                next += 1;
            }
        }
        new_bags.push(bags[t].iter().map(|&v| relabel[v]).collect());
        parent.push(p);
    }
    let td = TreeDecomposition::new(parent, new_bags)?;
    let out = Width2Decomposition { graph: g.permute(&relabel), td, relabel };
    out.check()?;
    Ok(out)
}
