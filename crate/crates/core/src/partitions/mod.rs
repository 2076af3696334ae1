//! Set partitions, spasms and the change-of-basis coefficients.

mod coefficients;
mod spasm;

pub use coefficients::{
    coefficient, colored_sub_to_hom_vector, sub_to_hom_vector, CoefficientKind,
};
pub(crate) use coefficients::{Row, ext_inv_row, ext_row, surj_inv_row, surj_row};
pub use spasm::{colored_spasm, spasm, spasm_entries, SpasmEntry};

use crate::error::{Error, Result};

/// Largest ground set for unpruned enumeration.
pub const UNPRUNED_LIMIT: usize = 14;
/// Largest pattern for pruned (independent-block) enumeration.
pub const PRUNED_LIMIT: usize = 20;

/// Partition of `0..n`, stored as a restricted-growth string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<usize>,
}

impl SetPartition {
    /// Normalizes arbitrary block labels into restricted-growth form.
    pub fn from_labels(raw: &[usize]) -> SetPartition {
        let mut map = std::collections::HashMap::new();
        let labels = raw
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        SetPartition { labels }
    }

    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> SetPartition {
        let mut raw = vec![usize::MAX; n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                assert!(raw[v] == usize::MAX, "vertex {v} in two blocks");
                raw[v] = i;
            }
        }
        assert!(raw.iter().all(|&l| l != usize::MAX), "blocks do not cover the ground set");
        SetPartition::from_labels(&raw)
    }

    pub fn finest(n: usize) -> SetPartition {
        SetPartition { labels: (0..n).collect() }
    }

    /// Block index of every element.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().map(|&l| l + 1).max().unwrap_or(0)
    }

    /// Blocks in order of their smallest element; each block sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            blocks[l].push(v);
        }
        blocks
    }
}

/// Restricted-growth strings of length `n` in lexicographic order.
pub struct Partitions {
    labels: Vec<usize>,
    maxes: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(SetPartition { labels: self.labels.clone() });
        }
        let n = self.labels.len();
        // maxes[i] = largest label among positions < i
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.labels[i] <= self.maxes[i] {
                self.labels[i] += 1;
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.maxes[j] = self.maxes[j - 1].max(self.labels[j - 1]);
                }
                return Some(SetPartition { labels: self.labels.clone() });
            }
        }
        self.done = true;
        None
    }
}

/// All partitions of `0..n`, each exactly once.
pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    if n > UNPRUNED_LIMIT {
        return Err(Error::Capacity(format!(
            "{n} elements exceed the unpruned partition limit of {UNPRUNED_LIMIT}; \
             restrict to independent or monochromatic blocks instead"
        )));
    }
    Ok(Partitions { labels: vec![0; n], maxes: vec![0; n], started: false, done: false })
}

/// Calls `visit` with the label string of every partition of `0..n` whose blocks
/// are independent in `adj` and (if given) monochromatic, in lexicographic order.
pub(crate) fn for_each_restricted(
    adj: &[Vec<usize>],
    colors: Option<&[usize]>,
    visit: &mut dyn FnMut(&[usize], usize),
) -> Result<()> {
    let n = adj.len();
    if n > PRUNED_LIMIT {
        return Err(Error::Capacity(format!(
            "{n} vertices exceed the pruned partition limit of {PRUNED_LIMIT}"
        )));
    }
    if n > UNPRUNED_LIMIT {
        log::warn!("enumerating restricted partitions of a {n}-vertex pattern; this may be slow");
    }
    let mut labels = vec![usize::MAX; n];
    let mut block_color: Vec<usize> = Vec::new();
    fn rec(
        v: usize,
        blocks: usize,
        adj: &[Vec<usize>],
        colors: Option<&[usize]>,
        labels: &mut Vec<usize>,
        block_color: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize], usize),
    ) {
        if v == labels.len() {
            visit(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            if b < blocks {
                if let Some(c) = colors {
                    if block_color[b] != c[v] {
                        continue;
                    }
                }
                if adj[v].iter().any(|&w| w < v && labels[w] == b) {
                    continue;
                }
            } else {
                block_color.push(colors.map_or(0, |c| c[v]));
            }
            labels[v] = b;
            rec(v + 1, blocks.max(b + 1), adj, colors, labels, block_color, visit);
            if b == blocks {
                block_color.pop();
            }
        }
        labels[v] = usize::MAX;
    }
    rec(0, 0, adj, colors, &mut labels, &mut block_color, visit);
    Ok(())
}
