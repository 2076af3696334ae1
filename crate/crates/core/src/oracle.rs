//! Brute-force reference counters.
//!
//! Maps are enumerated vertex by vertex in lexicographic order; a partial map
//! is abandoned as soon as it violates the property being counted. Nothing
//! here shares code with the fast engines.

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Graph};
use crate::partitions::SetPartition;
use num_bigint::BigUint;
use rayon::prelude::*;

pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountKind {
    Hom,
    Emb,
    StrEmb,
    Sub,
    IndSub,
    Surj,
    ColoredHom,
    ColoredEmb,
    ColorfulPartitioned,
}

#[derive(Clone, Copy, Debug)]
pub struct BruteForce {
    pub budget: u128,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce { budget: DEFAULT_BUDGET }
    }
}

/// Per-vertex constraints checked as soon as a vertex is assigned.
struct Rules<'a> {
    injective: bool,
    induced: bool,
    pattern_colors: Option<&'a [usize]>,
    host_colors: Option<&'a [usize]>,
}

fn search(
    h: &Graph,
    g: &Graph,
    rules: &Rules,
    accept: &(dyn Fn(&[usize]) -> bool + Sync),
) -> u128 {
    let k = h.vertex_count();
    if k == 0 {
        return accept(&[]) as u128;
    }
    let ok = |map: &[usize], v: usize, x: usize| -> bool {
        if let (Some(pc), Some(hc)) = (rules.pattern_colors, rules.host_colors) {
            if pc[v] != hc[x] {
                return false;
            }
        }
        if rules.injective && g.degree(x) < h.degree(v) {
            return false;
        }
        for (u, &y) in map.iter().enumerate().take(v) {
            if rules.injective && y == x {
                return false;
            }
            let e = h.has_edge(u, v);
            if e && !g.has_edge(y, x) {
                return false;
            }
            if rules.induced && !e && g.has_edge(y, x) {
                return false;
            }
        }
        true
    };
    fn rec(
        v: usize,
        map: &mut Vec<usize>,
        n: usize,
        ok: &dyn Fn(&[usize], usize, usize) -> bool,
        accept: &(dyn Fn(&[usize]) -> bool + Sync),
    ) -> u128 {
        if v == map.len() {
            return accept(map) as u128;
        }
        let mut total = 0;
        for x in 0..n {
            if ok(map, v, x) {
                map[v] = x;
                total += rec(v + 1, map, n, ok, accept);
            }
        }
        total
    }
    let n = g.vertex_count();
    (0..n)
        .into_par_iter()
        .map(|x| {
            let mut map = vec![0; k];
            if !ok(&map, 0, x) {
                return 0;
            }
            map[0] = x;
            rec(1, &mut map, n, &ok, accept)
        })
        .sum()
}

/// All permutations of `V(h)` preserving edges (and colors, if given).
fn automorphisms(h: &Graph, colors: Option<&[usize]>) -> Vec<Vec<usize>> {
    let k = h.vertex_count();
    let mut out = Vec::new();
    fn rec(v: usize, h: &Graph, colors: Option<&[usize]>, p: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let k = p.len();
        if v == k {
            let all = h.edges().all(|(a, b)| h.has_edge(p[a], p[b]));
            if all {
                out.push(p.clone());
            }
            return;
        }
        for x in 0..k {
            if used[x] || colors.is_some_and(|c| c[x] != c[v]) {
                continue;
            }
            used[x] = true;
            p[v] = x;
            rec(v + 1, h, colors, p, used, out);
            used[x] = false;
        }
    }
    rec(0, h, colors, &mut vec![0; k], &mut vec![false; k], &mut out);
    out
}

/// True if `map` is the lexicographically smallest of `map ∘ π` over `auts`.
fn is_orbit_minimum(map: &[usize], auts: &[Vec<usize>]) -> bool {
    auts.iter().all(|p| {
        for (v, &x) in map.iter().enumerate() {
            let y = map[p[v]];
            if y != x {
                return y > x;
            }
        }
        true
    })
}

impl BruteForce {
    pub fn new(budget: u128) -> Self {
        BruteForce { budget }
    }

    /// Reads the budget from `MOTIF_BUDGET`, falling back to the default.
    pub fn from_env() -> Self {
        let budget = std::env::var("MOTIF_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .map(|b| b as u128)
            .unwrap_or(DEFAULT_BUDGET);
        BruteForce { budget }
    }

    fn check_budget(&self, k: usize, n: usize) -> Result<()> {
        let maps = (n as u128).checked_pow(k as u32);
        match maps {
            Some(m) if m <= self.budget => Ok(()),
            _ => Err(Error::Capacity(format!(
                "{n}^{k} candidate maps exceed the brute-force budget of {}",
                self.budget
            ))),
        }
    }

    /// Counts for the uncolored kinds.
    pub fn count(&self, kind: CountKind, h: &Graph, g: &Graph) -> Result<BigUint> {
        self.check_budget(h.vertex_count(), g.vertex_count())?;
        let plain = |injective, induced| Rules { injective, induced, pattern_colors: None, host_colors: None };
        let yes = |_: &[usize]| true;
        let total = match kind {
            CountKind::Hom => search(h, g, &plain(false, false), &yes),
            CountKind::Emb => search(h, g, &plain(true, false), &yes),
            CountKind::StrEmb => search(h, g, &plain(true, true), &yes),
            CountKind::Sub | CountKind::IndSub => {
                let auts = automorphisms(h, None);
                let min = |m: &[usize]| is_orbit_minimum(m, &auts);
                search(h, g, &plain(true, kind == CountKind::IndSub), &min)
            }
            CountKind::Surj => {
                let onto = |m: &[usize]| {
                    let mut hit = vec![false; g.vertex_count()];
                    for &x in m {
                        hit[x] = true;
                    }
                    hit.iter().all(|&b| b)
                        && g.edges().all(|(a, b)| {
                            h.edges().any(|(u, v)| (m[u], m[v]) == (a, b) || (m[u], m[v]) == (b, a))
                        })
                };
                search(h, g, &plain(false, false), &onto)
            }
            _ => return Err(Error::Domain(format!("{kind:?} needs colored inputs"))),
        };
        Ok(BigUint::from(total))
    }

    /// Color-preserving homomorphisms or embeddings.
    pub fn count_colored(&self, kind: CountKind, h: &ColoredGraph, g: &ColoredGraph) -> Result<BigUint> {
        self.check_budget(h.graph().vertex_count(), g.graph().vertex_count())?;
        let injective = match kind {
            CountKind::ColoredHom => false,
            CountKind::ColoredEmb => true,
            _ => return Err(Error::Domain(format!("{kind:?} is not a colored count"))),
        };
        let rules = Rules {
            injective,
            induced: false,
            pattern_colors: Some(h.colors()),
            host_colors: Some(g.colors()),
        };
        Ok(BigUint::from(search(h.graph(), g.graph(), &rules, &|_| true)))
    }

    /// Color-preserving embeddings that are increasing on every block of `pi`.
    pub fn ordered_colored_embeddings(
        &self,
        h: &ColoredGraph,
        g: &ColoredGraph,
        pi: &SetPartition,
    ) -> Result<BigUint> {
        self.check_budget(h.graph().vertex_count(), g.graph().vertex_count())?;
        let rules = Rules {
            injective: true,
            induced: false,
            pattern_colors: Some(h.colors()),
            host_colors: Some(g.colors()),
        };
        let blocks = pi.blocks();
        let ordered = |m: &[usize]| blocks.iter().all(|b| b.windows(2).all(|w| m[w[0]] < m[w[1]]));
        Ok(BigUint::from(search(h.graph(), g.graph(), &rules, &ordered)))
    }

    /// Subgraphs of `g` isomorphic to `f` that meet every color class
    /// `coloring^{-1}(v)`, `v ∈ V(f)`, in exactly one vertex.
    pub fn colorful_partitioned(&self, f: &Graph, g: &Graph, coloring: &[usize]) -> Result<BigUint> {
        self.check_budget(f.vertex_count(), g.vertex_count())?;
        let auts = automorphisms(f, None);
        let k = f.vertex_count();
        let accept = |m: &[usize]| {
            let mut seen = vec![false; k];
            for &x in m {
                if seen[coloring[x]] {
                    return false;
                }
                seen[coloring[x]] = true;
            }
            is_orbit_minimum(m, &auts)
        };
        let rules = Rules { injective: true, induced: false, pattern_colors: None, host_colors: None };
        Ok(BigUint::from(search(f, g, &rules, &accept)))
    }
}

/// Brute-force count with the budget taken from the environment.
pub fn brute_count(kind: CountKind, h: &Graph, g: &Graph) -> Result<BigUint> {
    BruteForce::from_env().count(kind, h, g)
}
