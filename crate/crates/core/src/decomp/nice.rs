use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

impl std::fmt::Display for NiceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NiceKind::Leaf => write!(f, "leaf"),
            NiceKind::Introduce(v) => write!(f, "intro:{v}"),
            NiceKind::Forget(v) => write!(f, "forget:{v}"),
            NiceKind::Join => write!(f, "join"),
        }
    }
}

/// Decomposition whose nodes are leaf / introduce / forget / join nodes.
/// The root bag is empty.
#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    pub td: TreeDecomposition,
    pub kinds: Vec<NiceKind>,
}

impl NiceTreeDecomposition {
    pub fn kind(&self, t: usize) -> NiceKind {
        self.kinds[t]
    }

    pub fn dump(&self) -> String {
        self.td.dump(&|t| self.kinds[t].to_string())
    }

    /// Re-derives every tag from the bags and reports the first inconsistency.
    pub fn check(&self) -> Result<()> {
        for t in 0..self.td.node_count() {
            let bag = self.td.bag(t);
            let ch = self.td.children(t);
            let ok = match self.kinds[t] {
                NiceKind::Leaf => ch.is_empty() && bag.is_empty(),
                NiceKind::Introduce(v) => {
                    ch.len() == 1 && bag.contains(&v) && {
                        let c = self.td.bag(ch[0]);
                        c.len() + 1 == bag.len() && !c.contains(&v) && c.iter().all(|x| bag.contains(x))
                    }
                }
                NiceKind::Forget(v) => {
                    ch.len() == 1 && !bag.contains(&v) && {
                        let c = self.td.bag(ch[0]);
                        c.len() == bag.len() + 1 && c.contains(&v) && bag.iter().all(|x| c.contains(x))
                    }
                }
                NiceKind::Join => ch.len() == 2 && ch.iter().all(|&c| self.td.bag(c) == bag),
            };
            if !ok {
                return Err(Error::Validation(format!("node {t} does not match its tag {}", self.kinds[t])));
            }
        }
        Ok(())
    }
}

struct Builder {
    parent: Vec<Option<usize>>,
    bags: Vec<Vec<usize>>,
    kinds: Vec<NiceKind>,
}

impl Builder {
    fn node(&mut self, bag: Vec<usize>, kind: NiceKind, children: &[usize]) -> usize {
        let id = self.bags.len();
        self.bags.push(bag);
        self.kinds.push(kind);
        self.parent.push(None);
        for &c in children {
            self.parent[c] = Some(id);
        }
        id
    }

    /// Extends the chain above `node` (with bag `from`) until its bag is `to`.
    fn morph(&mut self, mut node: usize, from: &[usize], to: &[usize]) -> usize {
        let mut bag = from.to_vec();
        for &v in from.iter().filter(|v| !to.contains(v)) {
            bag.retain(|&x| x != v);
            node = self.node(bag.clone(), NiceKind::Forget(v), &[node]);
        }
        for &v in to.iter().filter(|v| !from.contains(v)) {
            bag.push(v);
            bag.sort_unstable();
            node = self.node(bag.clone(), NiceKind::Introduce(v), &[node]);
        }
        node
    }

    fn build(&mut self, d: &TreeDecomposition, t: usize) -> usize {
        let bag = d.bag(t).to_vec();
        let mut tops = Vec::new();
        for &c in d.children(t) {
            let below = self.build(d, c);
            tops.push(self.morph(below, d.bag(c), &bag));
        }
        if tops.is_empty() {
            let leaf = self.node(Vec::new(), NiceKind::Leaf, &[]);
            return self.morph(leaf, &[], &bag);
        }
        let mut acc = tops[0];
        for &other in &tops[1..] {
            acc = self.node(bag.clone(), NiceKind::Join, &[acc, other]);
        }
        acc
    }
}

/// Converts a valid decomposition of `g` into nice form with the same width.
pub fn to_nice(d: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition> {
    d.validate(g)?;
    let mut b = Builder { parent: Vec::new(), bags: Vec::new(), kinds: Vec::new() };
    let top = b.build(d, d.root());
    let root_bag = d.bag(d.root()).to_vec();
    b.morph(top, &root_bag, &[]);
    let td = TreeDecomposition::new(b.parent, b.bags)?;
    let nice = NiceTreeDecomposition { td, kinds: b.kinds };
    debug_assert!(nice.check().is_ok());
    Ok(nice)
}
