use super::{width_for, Count, Width};
use crate::decomp::{exact_treewidth, to_nice, NiceKind, NiceTreeDecomposition};
use crate::error::Result;
use crate::graph::{ColoredGraph, Graph};
use num_bigint::BigUint;
use std::collections::HashMap;

type Table<C> = HashMap<Vec<u32>, C>;

struct Ctx<'a> {
    h: &'a Graph,
    g: &'a Graph,
    nice: &'a NiceTreeDecomposition,
    colors: Option<(&'a [usize], &'a [usize])>,
}

impl Ctx<'_> {
    fn allowed(&self, v: usize, x: usize) -> bool {
        self.colors.is_none_or(|(hc, gc)| hc[v] == gc[x])
    }

    fn table<C: Count>(&self, t: usize) -> Table<C> {
        let td = &self.nice.td;
        let bag = td.bag(t);
        match self.nice.kind(t) {
            NiceKind::Leaf => Table::from([(Vec::new(), C::one())]),
            NiceKind::Introduce(v) => {
                let child = self.table::<C>(td.children(t)[0]);
                let p = bag.binary_search(&v).unwrap();
                // bag neighbours of v, as positions in the child key
                let nbrs: Vec<usize> = td
                    .bag(td.children(t)[0])
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.h.has_edge(u, v))
                    .map(|(i, _)| i)
                    .collect();
                let mut out = Table::with_capacity(child.len());
                for (key, val) in child {
                    let mut push = |x: usize| {
                        if self.allowed(v, x) {
                            let mut k = key.clone();
                            k.insert(p, x as u32);
                            out.insert(k, val.clone());
                        }
                    };
                    if nbrs.is_empty() {
                        (0..self.g.vertex_count()).for_each(&mut push);
                    } else {
                        // common neighbourhood of the images of v's bag neighbours
                        let smallest = nbrs
                            .iter()
                            .map(|&i| key[i] as usize)
                            .min_by_key(|&y| self.g.degree(y))
                            .unwrap();
                        for &x in self.g.neighbors(smallest) {
                            if nbrs.iter().all(|&i| self.g.has_edge(key[i] as usize, x)) {
                                push(x);
                            }
                        }
                    }
                }
                out
            }
            NiceKind::Forget(v) => {
                let c = td.children(t)[0];
                let p = td.bag(c).binary_search(&v).unwrap();
                let child = self.table::<C>(c);
                let mut out: Table<C> = Table::new();
                for (mut key, val) in child {
                    key.remove(p);
                    *out.entry(key).or_insert_with(C::zero) += val;
                }
                out
            }
            NiceKind::Join => {
                let (a, b) = (td.children(t)[0], td.children(t)[1]);
                let (ta, tb) = rayon::join(|| self.table::<C>(a), || self.table::<C>(b));
                let (small, large) = if ta.len() <= tb.len() { (ta, tb) } else { (tb, ta) };
                small
                    .into_iter()
                    .filter_map(|(k, x)| large.get(&k).map(|y| (k, x * y.clone())))
                    .collect()
            }
        }
    }

    fn run<C: Count>(&self) -> BigUint {
        let t = self.table::<C>(self.nice.td.root());
        t.get(&Vec::new()).map(|c| c.to_big()).unwrap_or_default()
    }
}

fn count(h: &Graph, g: &Graph, colors: Option<(&[usize], &[usize])>) -> Result<BigUint> {
    let (_, td) = exact_treewidth(h)?;
    let nice = to_nice(&td, h)?;
    let ctx = Ctx { h, g, nice: &nice, colors };
    Ok(match width_for(g.vertex_count(), h.vertex_count()) {
        Width::U64 => ctx.run::<u64>(),
        Width::U128 => ctx.run::<u128>(),
        Width::Big => ctx.run::<BigUint>(),
    })
}

/// Number of homomorphisms from `h` to `g` by dynamic programming over a nice
/// tree decomposition of `h`.
pub fn count_hom_dp(h: &Graph, g: &Graph) -> Result<BigUint> {
    count(h, g, None)
}

/// Number of color-preserving homomorphisms from `h` to `g`.
pub fn count_colored_hom(h: &ColoredGraph, g: &ColoredGraph) -> Result<BigUint> {
    count(h.graph(), g.graph(), Some((h.colors(), g.colors())))
}
