use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partitions::spasm;

pub const TREEWIDTH_LIMIT: usize = 20;

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
fn q(masks: &[u32], s: u32, v: usize) -> u32 {
    let mut comp = 1u32 << v;
    let mut nb = masks[v];
    loop {
        let new = nb & s & !comp;
        if new == 0 {
            break;
        }
        comp |= new;
        let mut bits = new;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            nb |= masks[w];
        }
    }
    nb & !s & !(1 << v)
}

/// Optimal elimination ordering (first eliminated first) and its width.
fn elimination_order(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let masks: Vec<u32> = g.masks().iter().map(|&m| m as u32).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![0u8; 1usize << n];
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let w = tw[rest as usize].max(q(&masks, rest, v).count_ones() as u8);
            best = best.min(w);
        }
        tw[s as usize] = best;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut bits = s;
        loop {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            if tw[rest as usize].max(q(&masks, rest, v).count_ones() as u8) == tw[s as usize] {
                order.push(v);
                s = rest;
                break;
            }
        }
    }
    order.reverse();
    (tw[full as usize] as usize, order)
}

/// Exact treewidth with an optimal decomposition (one node per vertex,
/// built from an optimal elimination ordering).
pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = g.vertex_count();
    if n > TREEWIDTH_LIMIT {
        return Err(Error::Capacity(format!(
            "exact treewidth limited to {TREEWIDTH_LIMIT} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok((0, TreeDecomposition::new(vec![None], vec![Vec::new()])?));
    }
    let (width, order) = elimination_order(g);
    let masks: Vec<u32> = g.masks().iter().map(|&m| m as u32).collect();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut eliminated = 0u32;
    for (i, &v) in order.iter().enumerate() {
        let later = q(&masks, eliminated, v);
        let mut bag = vec![v];
        let mut bits = later;
        let mut first: Option<usize> = None;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            bag.push(w);
            if first.is_none_or(|f| pos[w] < f) {
                first = Some(pos[w]);
            }
        }
        parent[i] = first;
        bags.push(bag);
        eliminated |= 1 << v;
    }
    // attach the roots of other components below the last node
    for p in parent.iter_mut().take(n - 1) {
        if p.is_none() {
            *p = Some(n - 1);
        }
    }
    let td = TreeDecomposition::new(parent, bags)?;
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

pub fn treewidth(g: &Graph) -> Result<usize> {
    Ok(exact_treewidth(g)?.0)
}

/// Largest treewidth among the homomorphic images of `h`.
pub fn max_spasm_treewidth(h: &Graph) -> Result<usize> {
    let mut best = 0;
    for f in spasm(h)? {
        best = best.max(treewidth(f.graph())?);
    }
    Ok(best)
}
