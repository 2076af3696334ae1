use super::{canonical_form, CanonicalForm, Graph};
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

const MAX_ALL_GRAPHS: usize = 8;
const MAX_TREE_SIZE: usize = 10;

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<CanonicalForm>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<CanonicalForm>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Every isomorphism class of graphs on exactly `n` vertices, in global graph order.
pub fn all_graphs(n: usize) -> Result<Arc<Vec<CanonicalForm>>> {
    if n > MAX_ALL_GRAPHS {
        return Err(Error::Capacity(format!(
            "enumerating all graphs on {n} vertices (limit {MAX_ALL_GRAPHS})"
        )));
    }
    if let Some(v) = cache().lock().unwrap().get(&n) {
        return Ok(v.clone());
    }
    let mut all: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut layer: BTreeSet<CanonicalForm> = BTreeSet::from([canonical_form(&Graph::empty(n))]);
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for f in &layer {
            let g = f.graph();
            for v in 1..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        let mut edges: Vec<(usize, usize)> = g.edges().collect();
                        edges.push((u, v));
                        next.insert(canonical_form(&Graph::from_edges(n, &edges).unwrap()));
                    }
                }
            }
        }
        all.extend(layer);
        layer = next;
    }
    let v = Arc::new(all.into_iter().collect::<Vec<_>>());
    cache().lock().unwrap().insert(n, v.clone());
    Ok(v)
}

/// Every unlabeled tree on `k` vertices, in global graph order.
pub fn trees(k: usize) -> Result<Vec<CanonicalForm>> {
    if k > MAX_TREE_SIZE {
        return Err(Error::Capacity(format!("trees on {k} vertices (limit {MAX_TREE_SIZE})")));
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut layer: BTreeSet<CanonicalForm> = BTreeSet::from([canonical_form(&Graph::empty(1))]);
    for n in 1..k {
        let mut next = BTreeSet::new();
        for t in &layer {
            for v in 0..n {
                let mut edges: Vec<(usize, usize)> = t.graph().edges().collect();
                edges.push((v, n));
                next.insert(canonical_form(&Graph::from_edges(n + 1, &edges).unwrap()));
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|k| trees(k).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(trees(11).is_err());
    }
}
