use super::for_each_restricted;
use crate::error::Result;
use crate::graph::{
    canonical_form, colored_canonical_form, CanonicalForm, ColoredCanonicalForm, ColoredGraph, Graph,
};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

/// One member of a spasm together with the partition statistics that
/// determine the Surj and SurjInv coefficients.
#[derive(Clone, Debug)]
pub struct SpasmEntry {
    pub form: CanonicalForm,
    /// Number of independent-block partitions whose quotient is isomorphic to `form`.
    pub partitions: u128,
    /// Sum over those partitions of the product of `(|B|-1)!` over blocks.
    pub weight: u128,
}

type Cache = RwLock<HashMap<String, Arc<Vec<SpasmEntry>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn quotient_of(h: &Graph, labels: &[usize], blocks: usize) -> Graph {
    let mut edges = Vec::new();
    for (u, v) in h.edges() {
        edges.push((labels[u], labels[v]));
    }
    Graph::from_edges(blocks, &edges).expect("independent blocks give a loop-free quotient")
}

fn block_weight(labels: &[usize], blocks: usize) -> u128 {
    let mut sizes = vec![0usize; blocks];
    for &l in labels {
        sizes[l] += 1;
    }
    sizes.iter().map(|&s| factorial(s - 1)).product()
}

/// Spasm of `h` with partition statistics, sorted by the global graph order.
pub fn spasm_entries(h: &Graph) -> Result<Arc<Vec<SpasmEntry>>> {
    let canon = canonical_form(h);
    if let Some(e) = cache().read().unwrap().get(canon.key()) {
        return Ok(e.clone());
    }
    let h = canon.graph();
    let adj: Vec<Vec<usize>> = (0..h.vertex_count()).map(|v| h.neighbors(v).to_vec()).collect();
    let mut by_class: HashMap<CanonicalForm, (u128, u128)> = HashMap::new();
    let mut memo: HashMap<Graph, CanonicalForm> = HashMap::new();
    for_each_restricted(&adj, None, &mut |labels, blocks| {
        let q = quotient_of(h, labels, blocks);
        let f = memo.entry(q).or_insert_with_key(canonical_form).clone();
        let e = by_class.entry(f).or_insert((0, 0));
        e.0 += 1;
        e.1 += block_weight(labels, blocks);
    })?;
    let sorted: BTreeMap<CanonicalForm, (u128, u128)> = by_class.into_iter().collect();
    let entries: Vec<SpasmEntry> = sorted
        .into_iter()
        .map(|(form, (partitions, weight))| SpasmEntry { form, partitions, weight })
        .collect();
    let entries = Arc::new(entries);
    cache().write().unwrap().insert(canon.key().to_string(), entries.clone());
    Ok(entries)
}

/// All homomorphic images of `h`, sorted by the global graph order.
pub fn spasm(h: &Graph) -> Result<Vec<CanonicalForm>> {
    Ok(spasm_entries(h)?.iter().map(|e| e.form.clone()).collect())
}

/// Colored images of `h` (blocks independent and monochromatic), with the
/// number of partitions and block weight of each.
pub(crate) fn colored_spasm_entries(
    h: &ColoredGraph,
) -> Result<Vec<(ColoredCanonicalForm, u128, u128)>> {
    let g = h.graph();
    let adj: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
    let mut by_class: HashMap<ColoredCanonicalForm, (u128, u128)> = HashMap::new();
    for_each_restricted(&adj, Some(h.colors()), &mut |labels, blocks| {
        let q = quotient_of(g, labels, blocks);
        let mut colors = vec![0; blocks];
        for (v, &l) in labels.iter().enumerate() {
            colors[l] = h.color(v);
        }
        let f = colored_canonical_form(&ColoredGraph::new(q, colors).unwrap());
        let e = by_class.entry(f).or_insert((0, 0));
        e.0 += 1;
        e.1 += block_weight(labels, blocks);
    })?;
    let sorted: BTreeMap<_, _> = by_class.into_iter().collect();
    Ok(sorted.into_iter().map(|(f, (p, w))| (f, p, w)).collect())
}

pub fn colored_spasm(h: &ColoredGraph) -> Result<Vec<ColoredCanonicalForm>> {
    Ok(colored_spasm_entries(h)?.into_iter().map(|e| e.0).collect())
}
