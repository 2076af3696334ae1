use super::guarded::{build_guarded_decomposition, GuardedCutvertexDecomposition};
use crate::error::{Error, Result};
use crate::graph::{automorphism_count, colored_automorphism_count, ColoredGraph, Graph};
use crate::homcount::{count_hom, Engine};
use crate::partitions::SetPartition;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

/// Partition of the pattern vertices whose blocks consist of pairwise similar
/// vertices (same color, same open neighbourhood).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityPartition {
    pub partition: SetPartition,
}

impl SimilarityPartition {
    /// Product of the block-size factorials.
    pub fn factor(&self) -> BigUint {
        self.partition
            .blocks()
            .iter()
            .map(|b| (1..=b.len()).map(BigUint::from).product::<BigUint>())
            .product()
    }
}

/// Unguarded vertices of `β(t)` outside `λ(t)`, grouped by similarity; each group is sorted.
fn free_classes(h: &ColoredGraph, d: &GuardedCutvertexDecomposition, t: usize) -> Vec<Vec<usize>> {
    let lambda = d.lambda(t);
    let guard = d.guard(t);
    let mut groups: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for &v in d.tree().bag(t) {
        if guard.binary_search(&v).is_ok() || lambda.binary_search(&v).is_ok() {
            continue;
        }
        groups.entry((h.color(v), h.graph().neighbors(v).to_vec())).or_default().push(v);
    }
    groups.into_values().collect()
}

/// Groups the free vertices of every node by similarity; everything else is a singleton.
pub fn similarity_partition(h: &ColoredGraph, d: &GuardedCutvertexDecomposition) -> SimilarityPartition {
    let n = h.graph().vertex_count();
    let mut blocks = Vec::new();
    let mut placed = vec![false; n];
    for t in 0..d.tree().node_count() {
        for class in free_classes(h, d, t) {
            for &v in &class {
                placed[v] = true;
            }
            blocks.push(class);
        }
    }
    blocks.extend((0..n).filter(|&v| !placed[v]).map(|v| vec![v]));
    SimilarityPartition { partition: SetPartition::from_blocks(n, &blocks) }
}

/// Counts per node: images of the separator (in sorted separator order) → number of extensions.
type Table = HashMap<Vec<usize>, BigUint>;

struct Node {
    guard: Vec<usize>,
    lambda: Vec<usize>,
    classes: Vec<Vec<usize>>,
    /// children hanging on no free vertex
    guarded_children: Vec<usize>,
    /// children hanging on `lambda[j]`
    hanging: Vec<Vec<usize>>,
}

/// Number of color-preserving embeddings of `h` into `g` that are increasing
/// (in host vertex index) on every block of the similarity partition derived from `d`.
pub fn count_ordered_embeddings(h: &ColoredGraph, g: &ColoredGraph, d: &GuardedCutvertexDecomposition) -> Result<BigUint> {
    d.validate(h)?;
    let td = d.tree();
    let mut tables: Vec<Option<Table>> = vec![None; td.node_count()];
    for t in td.postorder() {
        let lambda = d.lambda(t);
        let mut guarded_children = Vec::new();
        let mut hanging = vec![Vec::new(); lambda.len()];
        for &c in td.children(t) {
            match d.unguarded(t, c) {
                None => guarded_children.push(c),
                Some(v) => hanging[lambda.binary_search(&v).expect("in lambda")].push(c),
            }
        }
        let node = Node {
            guard: d.guard(t).to_vec(),
            classes: free_classes(h, d, t),
            lambda,
            guarded_children,
            hanging,
        };
        let table = node_table(h, g, d, t, &node, &tables);
        for &c in td.children(t) {
            tables[c] = None;
        }
        tables[t] = Some(table);
    }
    let root = tables[td.root()].take().expect("root table");
    Ok(root.get(&Vec::new()).cloned().unwrap_or_default())
}

fn lookup(tables: &[Option<Table>], td_sep: &[usize], c: usize, image: &dyn Fn(usize) -> usize) -> BigUint {
    let key: Vec<usize> = td_sep.iter().map(|&v| image(v)).collect();
    tables[c].as_ref().expect("child computed").get(&key).cloned().unwrap_or_default()
}

fn node_table(
    h: &ColoredGraph,
    g: &ColoredGraph,
    d: &GuardedCutvertexDecomposition,
    t: usize,
    node: &Node,
    tables: &[Option<Table>],
) -> Table {
    let td = d.tree();
    let hg = h.graph();
    let gg = g.graph();
    let n = gg.vertex_count();
    let sep = td.separator(t);
    let guard = &node.guard;
    let seps: HashMap<usize, Vec<usize>> = td.children(t).iter().map(|&c| (c, td.separator(c))).collect();

    // all injective, color- and edge-preserving maps of the guard
    let mut assignments = Vec::new();
    let mut current = vec![usize::MAX; guard.len()];
    let mut used = vec![false; n];
    enumerate_guard(hg, h.colors(), g, guard, 0, &mut current, &mut used, &mut assignments);

    // state layout: bit mask over lambda, then mixed-radix prefix lengths per class
    let lam = node.lambda.len();
    let mut radix = Vec::with_capacity(node.classes.len());
    let mut size = 1usize << lam;
    for class in &node.classes {
        radix.push(size);
        size *= class.len() + 1;
    }
    let full = (1usize << lam) - 1 + node.classes.iter().zip(&radix).map(|(c, r)| c.len() * r).sum::<usize>();

    let results: Vec<(Vec<usize>, BigUint)> = assignments
        .par_iter()
        .filter_map(|fbar| {
            let image_of = |v: usize| fbar[guard.binary_search(&v).expect("guarded")];
            let mut base = BigUint::one();
            for &c in &node.guarded_children {
                base *= lookup(tables, &seps[&c], c, &image_of);
                if base.is_zero() {
                    return None;
                }
            }
            let mut taken = vec![false; n];
            for &x in fbar {
                taken[x] = true;
            }
            let fits = |v: usize, i: usize| {
                g.color(i) == h.color(v)
                    && hg.neighbors(v).iter().all(|&u| match guard.binary_search(&u) {
                        Ok(p) => gg.has_edge(fbar[p], i),
                        Err(_) => true,
                    })
            };
            let mut dp = vec![BigUint::zero(); size];
            dp[0] = BigUint::one();
            for i in 0..n {
                if taken[i] {
                    continue;
                }
                let lam_weight: Vec<BigUint> = node
                    .lambda
                    .iter()
                    .zip(&node.hanging)
                    .map(|(&v, hung)| {
                        if !fits(v, i) {
                            return BigUint::zero();
                        }
                        let image = |u: usize| if u == v { i } else { image_of(u) };
                        hung.iter().map(|&c| lookup(tables, &seps[&c], c, &image)).product()
                    })
                    .collect();
                let class_fit: Vec<Vec<bool>> =
                    node.classes.iter().map(|class| class.iter().map(|&v| fits(v, i)).collect()).collect();
                let prev = dp.clone();
                for (s, slot) in dp.iter_mut().enumerate() {
                    let mask = s & ((1 << lam) - 1);
                    for (j, w) in lam_weight.iter().enumerate() {
                        if mask >> j & 1 == 1 && !w.is_zero() {
                            let p = &prev[s - (1 << j)];
                            if !p.is_zero() {
                                *slot += p * w;
                            }
                        }
                    }
                    for (j, class) in node.classes.iter().enumerate() {
                        let cnt = (s / radix[j]) % (class.len() + 1);
                        if cnt > 0 && class_fit[j][cnt - 1] {
                            *slot += &prev[s - radix[j]];
                        }
                    }
                }
            }
            let total = base * &dp[full];
            if total.is_zero() {
                return None;
            }
            Some((sep.iter().map(|&v| image_of(v)).collect(), total))
        })
        .collect();
    let mut table = Table::new();
    for (key, value) in results {
        *table.entry(key).or_default() += value;
    }
    table
}

#[allow(clippy::too_many_arguments)]
fn enumerate_guard(
    hg: &Graph,
    colors: &[usize],
    g: &ColoredGraph,
    guard: &[usize],
    pos: usize,
    current: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == guard.len() {
        out.push(current.clone());
        return;
    }
    let v = guard[pos];
    for x in 0..g.graph().vertex_count() {
        if used[x] || g.color(x) != colors[v] {
            continue;
        }
        let ok = (0..pos).all(|q| !hg.has_edge(v, guard[q]) || g.graph().has_edge(x, current[q]));
        if !ok {
            continue;
        }
        used[x] = true;
        current[pos] = x;
        enumerate_guard(hg, colors, g, guard, pos + 1, current, used, out);
        used[x] = false;
    }
}

/// Color-preserving embeddings, via ordered embeddings and the block factorials.
pub fn count_colored_embeddings(h: &ColoredGraph, g: &ColoredGraph) -> Result<BigUint> {
    let d = build_guarded_decomposition(h)?;
    let pi = similarity_partition(h, &d);
    Ok(count_ordered_embeddings(h, g, &d)? * pi.factor())
}

/// Color-preserving subgraph copies: embeddings divided by color-preserving automorphisms.
pub fn count_colored_sub(h: &ColoredGraph, g: &ColoredGraph) -> Result<BigUint> {
    let emb = count_colored_embeddings(h, g)?;
    let aut = BigUint::from(colored_automorphism_count(h));
    let (q, r) = emb.div_rem(&aut);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Subgraphs of `g` isomorphic to `f` meeting each class `coloring⁻¹(x)`,
/// `x ∈ V(f)`, exactly once, where `coloring` is a homomorphism `g → f`.
/// Sums `(−1)^{|A|}·Hom(f, g − coloring⁻¹(A))` over all `A ⊆ V(f)` and divides by `Aut(f)`.
pub fn count_colorful_subgraphs_ie(f: &Graph, g: &Graph, coloring: &[usize]) -> Result<BigUint> {
    let k = f.vertex_count();
    if coloring.len() != g.vertex_count() {
        return Err(Error::Precondition(format!(
            "coloring has {} entries for {} host vertices",
            coloring.len(),
            g.vertex_count()
        )));
    }
    if let Some(&c) = coloring.iter().find(|&&c| c >= k) {
        return Err(Error::Precondition(format!("color {c} is not a pattern vertex")));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !f.has_edge(coloring[u], coloring[v])) {
        return Err(Error::Precondition(format!("host edge {u}-{v} does not map to a pattern edge")));
    }
    if k >= usize::BITS as usize {
        return Err(Error::Capacity(format!("{k} pattern vertices is too many for inclusion-exclusion")));
    }
    let terms: Vec<BigInt> = (0..1usize << k)
        .into_par_iter()
        .map(|a| {
            let keep: Vec<usize> = (0..g.vertex_count()).filter(|&x| a >> coloring[x] & 1 == 0).collect();
            let hom = count_hom(f, &g.induced(&keep), Engine::Auto)?;
            let hom = BigInt::from(hom);
            Ok(if a.count_ones() % 2 == 1 { -hom } else { hom })
        })
        .collect::<Result<_>>()?;
    let total: BigInt = terms.into_iter().sum();
    let aut = BigInt::from(automorphism_count(f));
    let (q, r) = total.div_rem(&aut);
    assert!(r.is_zero() && !q.is_negative(), "inclusion-exclusion sum {total} not divisible by {aut}");
    Ok(q.to_biguint().expect("nonnegative"))
}
