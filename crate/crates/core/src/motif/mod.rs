//! Graph motif parameters: finite rational combinations of pattern counts.

mod basis;
mod format;

pub use basis::{build_tree_count_parameter, change_basis, count_pattern, count_pattern_with, evaluate, evaluate_with};
pub use format::parse_motif;

use crate::decomp::treewidth;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::str::FromStr;

/// The five count families a parameter can be expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    Hom,
    Sub,
    IndSub,
    Emb,
    StrEmb,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::Hom, Basis::Sub, Basis::IndSub, Basis::Emb, Basis::StrEmb];

    pub fn name(self) -> &'static str {
        match self {
            Basis::Hom => "hom",
            Basis::Sub => "sub",
            Basis::IndSub => "indsub",
            Basis::Emb => "emb",
            Basis::StrEmb => "strembed",
        }
    }
}

impl std::fmt::Display for Basis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Basis> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown basis `{s}` (expected hom, sub, indsub, emb or strembed)")))
    }
}

/// A finitely supported vector over isomorphism classes, tagged with its basis.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotifParameter {
    basis: Basis,
    terms: BTreeMap<CanonicalForm, BigRational>,
}

impl MotifParameter {
    pub fn new(basis: Basis) -> Self {
        MotifParameter { basis, terms: BTreeMap::new() }
    }

    /// The parameter `G ↦ count(h, G)` in basis `basis`.
    pub fn single(basis: Basis, h: &Graph) -> Self {
        let mut p = MotifParameter::new(basis);
        p.add(h, BigRational::from_integer(1.into()));
        p
    }

    pub fn from_terms<'a>(basis: Basis, terms: impl IntoIterator<Item = (&'a Graph, BigRational)>) -> Self {
        let mut p = MotifParameter::new(basis);
        for (g, c) in terms {
            p.add(g, c);
        }
        p
    }

    /// Adds `c` to the coefficient of the class of `h`.
    pub fn add(&mut self, h: &Graph, c: BigRational) {
        self.add_canonical(canonical_form(h), c);
    }

    pub(crate) fn add_canonical(&mut self, f: CanonicalForm, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(f) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in the global graph order.
    pub fn terms(&self) -> &BTreeMap<CanonicalForm, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, h: &Graph) -> BigRational {
        self.terms.get(&canonical_form(h)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest treewidth in the support of the homomorphism-basis form; the
    /// evaluation cost grows like `|V(G)|^(this + 1)`.
    pub fn hom_treewidth(&self) -> Result<usize> {
        let hom = change_basis(self, Basis::Hom)?;
        let mut w = 0;
        for f in hom.terms.keys() {
            w = w.max(treewidth(f.graph())?);
        }
        Ok(w)
    }
}

impl std::fmt::Display for MotifParameter {
    /// Text format: `basis <name>` then one `<rational> <graph6>` line per term.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "basis {}", self.basis)?;
        for (g, c) in &self.terms {
            writeln!(f, "{c} {}", g.key())?;
        }
        Ok(())
    }
}
