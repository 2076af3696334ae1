use super::apath::{restricted_unchecked, RestrictedPacking};
use super::{clique_saturate, find_flower};
use crate::decomp::{exact_treewidth, intersect, massage_connected, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Graph};

/// Largest flower size tried when searching for the flower bound.
pub const FLOWER_CAP: usize = 16;

/// A tree decomposition of the class-saturated pattern together with a guard
/// set per node. Guards contain the separator, cover every pattern edge inside
/// the bag, and each child separator has at most one unguarded vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardedCutvertexDecomposition {
    td: TreeDecomposition,
    guards: Vec<Vec<usize>>,
    flower_bound: usize,
    contracted_width: usize,
}

impl GuardedCutvertexDecomposition {
    /// Wraps `td` with per-node guards; call [`validate`](Self::validate) to check the invariants.
    pub fn new(td: TreeDecomposition, mut guards: Vec<Vec<usize>>) -> Result<Self> {
        if guards.len() != td.node_count() {
            return Err(Error::Validation(format!(
                "{} guard sets for {} nodes",
                guards.len(),
                td.node_count()
            )));
        }
        for g in &mut guards {
            g.sort_unstable();
            g.dedup();
        }
        Ok(GuardedCutvertexDecomposition { td, guards, flower_bound: 0, contracted_width: 0 })
    }

    pub fn tree(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn guard(&self, t: usize) -> &[usize] {
        &self.guards[t]
    }

    pub fn guard_size(&self) -> usize {
        self.guards.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Flower size `c` for which the builder found no `c`-flower (0 if not built by it).
    pub fn flower_bound(&self) -> usize {
        self.flower_bound
    }

    /// Width of the decomposition of the contracted pattern the builder started from.
    pub fn contracted_width(&self) -> usize {
        self.contracted_width
    }

    pub fn max_colors_per_bag(&self, h: &ColoredGraph) -> usize {
        self.td
            .bags()
            .iter()
            .map(|b| {
                let mut c: Vec<usize> = b.iter().map(|&v| h.color(v)).collect();
                c.sort_unstable();
                c.dedup();
                c.len()
            })
            .max()
            .unwrap_or(0)
    }

    /// Children of `t` whose separator leaves exactly `v` unguarded.
    pub fn hanging(&self, t: usize, v: usize) -> Vec<usize> {
        self.td
            .children(t)
            .iter()
            .copied()
            .filter(|&c| self.unguarded(t, c) == Some(v))
            .collect()
    }

    /// The unguarded vertex of child `c`'s separator, if any.
    pub(crate) fn unguarded(&self, t: usize, c: usize) -> Option<usize> {
        self.td.separator(c).into_iter().find(|v| self.guards[t].binary_search(v).is_err())
    }

    /// Unguarded vertices of `β(t)` that some child hangs on.
    pub fn lambda(&self, t: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.td.children(t).iter().filter_map(|&c| self.unguarded(t, c)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn validate(&self, h: &ColoredGraph) -> Result<()> {
        let saturated = clique_saturate(h, None)?;
        self.td.validate(&saturated)?;
        for t in 0..self.td.node_count() {
            let bag = self.td.bag(t);
            let guard = &self.guards[t];
            if guard.iter().any(|v| bag.binary_search(v).is_err()) {
                return Err(Error::Validation(format!("guard of node {t} is not inside its bag")));
            }
            if self.td.separator(t).iter().any(|v| guard.binary_search(v).is_err()) {
                return Err(Error::Validation(format!("separator of node {t} is not guarded")));
            }
            for (x, &u) in bag.iter().enumerate() {
                for &v in &bag[x + 1..] {
                    if h.graph().has_edge(u, v) && guard.binary_search(&u).is_err() && guard.binary_search(&v).is_err() {
                        return Err(Error::Validation(format!("edge {u}-{v} in node {t} has no guarded endpoint")));
                    }
                }
            }
            for &c in self.td.children(t) {
                let loose = self.td.separator(c).iter().filter(|v| guard.binary_search(v).is_err()).count();
                if loose > 1 {
                    return Err(Error::Validation(format!(
                        "child {c} of node {t} has {loose} unguarded separator vertices"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Drops guard vertices (largest first) while the node's own conditions
    /// still hold; the conditions at other nodes do not depend on this guard.
    fn trim_guards(&mut self, h: &ColoredGraph) {
        for t in 0..self.td.node_count() {
            let sep = self.td.separator(t);
            let candidates: Vec<usize> = self.guards[t].iter().rev().copied().filter(|v| !sep.contains(v)).collect();
            for v in candidates {
                let pos = self.guards[t].binary_search(&v).expect("guarded");
                self.guards[t].remove(pos);
                if !self.locally_valid(h, t) {
                    self.guards[t].insert(pos, v);
                }
            }
        }
    }

    fn locally_valid(&self, h: &ColoredGraph, t: usize) -> bool {
        let guard = &self.guards[t];
        let bag = self.td.bag(t);
        let free = |v: &usize| guard.binary_search(v).is_err();
        let covered = bag.iter().filter(|v| free(v)).all(|&u| h.graph().neighbors(u).iter().all(|w| !free(w) || bag.binary_search(w).is_err()));
        covered && self.td.children(t).iter().all(|&c| self.td.separator(c).iter().filter(|v| free(v)).count() <= 1)
    }

    /// One line per node in preorder: `t parent={p} bag={..} guard={..}`.
    pub fn dump(&self) -> String {
        let join = |s: &[usize]| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let mut out = String::new();
        for t in self.td.preorder() {
            let parent = self.td.parent(t).map_or("none".to_string(), |p| p.to_string());
            out.push_str(&format!(
                "{t} parent={parent} bag={{{}}} guard={{{}}}\n",
                join(self.td.bag(t)),
                join(&self.guards[t])
            ));
        }
        out
    }
}

/// Builds a guarded cutvertex decomposition of `h`. Patterns in which every
/// class is a single vertex get an optimal ordinary decomposition guarded by
/// its full bags; otherwise each component of the saturated pattern goes
/// through the A-path construction and is then massaged.
pub fn build_guarded_decomposition(h: &ColoredGraph) -> Result<GuardedCutvertexDecomposition> {
    let n = h.graph().vertex_count();
    if n == 0 {
        let td = TreeDecomposition::new(vec![None], vec![Vec::new()])?;
        return GuardedCutvertexDecomposition::new(td, vec![Vec::new()]);
    }
    if h.classes().iter().all(|c| c.len() <= 1) {
        let (w, td) = exact_treewidth(h.graph())?;
        let guards = td.bags().to_vec();
        let mut out = GuardedCutvertexDecomposition::new(td, guards)?;
        out.flower_bound = 1;
        out.contracted_width = w;
        out.validate(h)?;
        return Ok(out);
    }
    let saturated = clique_saturate(h, None)?;
    let mut parts = Vec::new();
    for comp in saturated.components() {
        let local = h.induced(&comp);
        let part = build_component(&local)?;
        parts.push((comp, part));
    }
    let flower_bound = parts.iter().map(|(_, p)| p.flower_bound).max().unwrap_or(1);
    let contracted_width = parts.iter().map(|(_, p)| p.contracted_width).max().unwrap_or(0);
    let relabel = |comp: &[usize], s: &[usize]| s.iter().map(|&v| comp[v]).collect::<Vec<_>>();
    let (parent, bags, guards) = if parts.len() == 1 {
        let (comp, p) = &parts[0];
        let parent = (0..p.td.node_count()).map(|t| p.td.parent(t)).collect();
        let bags = p.td.bags().iter().map(|b| relabel(comp, b)).collect();
        let guards = p.guards.iter().map(|g| relabel(comp, g)).collect();
        (parent, bags, guards)
    } else {
        // an empty root joins the components
        let mut parent = vec![None];
        let mut bags = vec![Vec::new()];
        let mut guards = vec![Vec::new()];
        for (comp, p) in &parts {
            let offset = parent.len();
            for t in 0..p.td.node_count() {
                parent.push(Some(p.td.parent(t).map_or(0, |q| q + offset)));
                bags.push(relabel(comp, p.td.bag(t)));
                guards.push(relabel(comp, &p.guards[t]));
            }
        }
        (parent, bags, guards)
    };
    let mut out = GuardedCutvertexDecomposition::new(TreeDecomposition::new(parent, bags)?, guards)?;
    out.flower_bound = flower_bound;
    out.contracted_width = contracted_width;
    out.validate(h)?;
    Ok(out)
}

/// Smallest `c` among 1, 2, 4, …, [`FLOWER_CAP`] with no `c`-flower at any class.
fn flower_bound(h: &ColoredGraph) -> Result<usize> {
    let classes: Vec<usize> = (0..h.color_bound()).collect();
    let mut c = 1;
    loop {
        match classes.iter().find(|&&i| find_flower(h, i, c).is_some()) {
            None => return Ok(c),
            Some(&i) if c >= FLOWER_CAP => {
                return Err(Error::Domain(format!(
                    "class {i} carries a {FLOWER_CAP}-flower; pattern is outside the supported regime"
                )))
            }
            Some(_) => c = (2 * c).min(FLOWER_CAP),
        }
    }
}

/// Decomposition of one component, whose saturated graph is connected.
fn build_component(h: &ColoredGraph) -> Result<GuardedCutvertexDecomposition> {
    let n = h.graph().vertex_count();
    let saturated = clique_saturate(h, None)?;
    let classes: Vec<Vec<usize>> = h.classes().into_iter().filter(|c| !c.is_empty()).collect();
    let mut class_of = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let mut contracted_edges: Vec<(usize, usize)> = h
        .graph()
        .edges()
        .map(|(u, v)| (class_of[u], class_of[v]))
        .filter(|(a, b)| a != b)
        .collect();
    contracted_edges.sort_unstable();
    contracted_edges.dedup();
    let contracted = Graph::from_edges(classes.len(), &contracted_edges)?;
    let (w, td0) = exact_treewidth(&contracted)?;
    let c = flower_bound(h)?;
    let k = (2 * c + w) * (w + 1);
    let l = 2 * k;

    let lift = |class_ids: &[usize]| {
        let mut out: Vec<usize> = class_ids.iter().flat_map(|&i| classes[i].iter().copied()).collect();
        out.sort_unstable();
        out
    };
    let mut bags1 = Vec::with_capacity(td0.node_count());
    let mut guards1 = Vec::with_capacity(td0.node_count());
    for t in 0..td0.node_count() {
        let here = td0.bag(t);
        let bag0 = lift(here);
        let cone0 = lift(&td0.cone(t));
        // saturate every class except those in this bag
        let mut edges: Vec<(usize, usize)> = h.graph().edges().collect();
        for (i, class) in classes.iter().enumerate() {
            if here.binary_search(&i).is_err() {
                for (x, &u) in class.iter().enumerate() {
                    edges.extend(class[x + 1..].iter().map(|&v| (u, v)));
                }
            }
        }
        let g_t = Graph::from_edges(n, &edges)?;
        let (a_star, s_star) = match restricted_unchecked(&g_t, &bag0, k, l)? {
            RestrictedPacking::Separated { a_star, s_star } => (a_star, s_star),
            RestrictedPacking::Paths(_) => {
                return Err(Error::Domain(format!(
                    "found {k} disjoint bag paths although no {c}-flower exists"
                )))
            }
        };
        let s_in_cone = intersect(&{ let mut s = s_star; s.sort_unstable(); s }, &cone0);
        let mut bag1 = bag0;
        bag1.extend(&s_in_cone);
        bag1.sort_unstable();
        bag1.dedup();
        let mut guard1 = s_in_cone;
        guard1.extend(a_star);
        guard1.sort_unstable();
        guard1.dedup();
        bags1.push(bag1);
        guards1.push(guard1);
    }
    let parent0 = (0..td0.node_count()).map(|t| td0.parent(t)).collect();
    let td1 = TreeDecomposition::new(parent0, bags1)?;
    let (td2, origin) = massage_connected(&td1, &saturated)?;
    let guards2 = (0..td2.node_count())
        .map(|t| {
            let mut g = intersect(&guards1[origin[t]], td2.bag(t));
            g.extend(td2.separator(t));
            g
        })
        .collect();
    let mut out = GuardedCutvertexDecomposition::new(td2, guards2)?;
    out.trim_guards(h);
    out.flower_bound = c;
    out.contracted_width = w;
    Ok(out)
}
