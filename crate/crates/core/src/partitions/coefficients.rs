use super::spasm::{colored_spasm_entries, spasm_entries};
use crate::error::Result;
use crate::graph::{
    all_graphs, automorphism_count, canonical_form, colored_automorphism_count, CanonicalForm,
    ColoredCanonicalForm, ColoredGraph, Graph,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

/// The change-of-basis matrices between the count families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientKind {
    Surj,
    SurjInv,
    Ext,
    ExtInv,
    Iso,
    IsoInv,
}

pub type Row = Arc<BTreeMap<CanonicalForm, BigRational>>;
type Cache = RwLock<HashMap<(CoefficientKind, String), Row>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn int(x: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn sign(exp: usize) -> BigRational {
    if exp.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn cached(kind: CoefficientKind, h: &Graph, build: impl FnOnce(&CanonicalForm) -> Result<BTreeMap<CanonicalForm, BigRational>>) -> Result<Row> {
    let canon = canonical_form(h);
    let key = (kind, canon.key().to_string());
    if let Some(row) = cache().read().unwrap().get(&key) {
        return Ok(row.clone());
    }
    let row = Arc::new(build(&canon)?);
    cache().write().unwrap().insert(key, row.clone());
    Ok(row)
}

/// Row `Surj(h, ·)`: `Aut(F)` times the number of partitions with quotient `F`.
pub(crate) fn surj_row(h: &Graph) -> Result<Row> {
    cached(CoefficientKind::Surj, h, |c| {
        Ok(spasm_entries(c.graph())?
            .iter()
            .map(|e| (e.form.clone(), int(automorphism_count(e.form.graph()) * e.partitions)))
            .collect())
    })
}

/// Row `SurjInv(h, ·)`, supported exactly on the spasm of `h`.
pub(crate) fn surj_inv_row(h: &Graph) -> Result<Row> {
    cached(CoefficientKind::SurjInv, h, |c| {
        let n = c.vertex_count();
        let aut = int(automorphism_count(c.graph()));
        Ok(spasm_entries(c.graph())?
            .iter()
            .map(|e| (e.form.clone(), sign(n - e.form.vertex_count()) * int(e.weight) / &aut))
            .collect())
    })
}

/// Number of bijections `V(h) -> V(f)` mapping edges of `h` to edges of `f`.
fn spanning_embeddings(h: &Graph, f: &Graph) -> u128 {
    let n = h.vertex_count();
    debug_assert_eq!(n, f.vertex_count());
    fn rec(v: usize, h: &Graph, f: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> u128 {
        if v == map.len() {
            return 1;
        }
        let mut total = 0;
        for x in 0..f.vertex_count() {
            if used[x] || f.degree(x) < h.degree(v) {
                continue;
            }
            if h.neighbors(v).iter().any(|&u| u < v && !f.has_edge(map[u], x)) {
                continue;
            }
            used[x] = true;
            map[v] = x;
            total += rec(v + 1, h, f, map, used);
            used[x] = false;
        }
        total
    }
    rec(0, h, f, &mut vec![0; n], &mut vec![false; n])
}

/// Row `Ext(h, ·)` over all graphs with the same vertex count containing `h` spanningly.
pub(crate) fn ext_row(h: &Graph) -> Result<Row> {
    cached(CoefficientKind::Ext, h, |c| {
        let aut = int(automorphism_count(c.graph()));
        let mut row = BTreeMap::new();
        for f in all_graphs(c.vertex_count())?.iter() {
            if f.edge_count() < c.edge_count() {
                continue;
            }
            let emb = spanning_embeddings(c.graph(), f.graph());
            if emb > 0 {
                row.insert(f.clone(), int(emb) / &aut);
            }
        }
        Ok(row)
    })
}

pub(crate) fn ext_inv_row(h: &Graph) -> Result<Row> {
    cached(CoefficientKind::ExtInv, h, |c| {
        let ext = ext_row(c.graph())?;
        Ok(ext
            .iter()
            .map(|(f, v)| (f.clone(), sign(f.edge_count() - c.edge_count()) * v))
            .collect())
    })
}

/// Entry `kind(h, f)` of a change-of-basis matrix.
pub fn coefficient(kind: CoefficientKind, h: &CanonicalForm, f: &CanonicalForm) -> Result<BigRational> {
    let row = match kind {
        CoefficientKind::Surj => surj_row(h.graph())?,
        CoefficientKind::SurjInv => surj_inv_row(h.graph())?,
        CoefficientKind::Ext => ext_row(h.graph())?,
        CoefficientKind::ExtInv => ext_inv_row(h.graph())?,
        CoefficientKind::Iso | CoefficientKind::IsoInv => {
            if h != f {
                return Ok(BigRational::zero());
            }
            let aut = int(automorphism_count(h.graph()));
            return Ok(if kind == CoefficientKind::Iso { aut } else { aut.recip() });
        }
    };
    Ok(row.get(f).cloned().unwrap_or_else(BigRational::zero))
}

/// Coefficients expressing `Sub(h, ·)` as a combination of `Hom(F, ·)`.
pub fn sub_to_hom_vector(h: &Graph) -> Result<BTreeMap<CanonicalForm, BigRational>> {
    Ok((*surj_inv_row(h)?).clone())
}

/// Colored analogue of [`sub_to_hom_vector`]: color-preserving subgraph counts as
/// combinations of color-preserving homomorphism counts.
pub fn colored_sub_to_hom_vector(h: &ColoredGraph) -> Result<BTreeMap<ColoredCanonicalForm, BigRational>> {
    let n = h.graph().vertex_count();
    let aut = int(colored_automorphism_count(h));
    Ok(colored_spasm_entries(h)?
        .into_iter()
        .map(|(f, _, w)| {
            let k = f.graph().graph().vertex_count();
            (f, sign(n - k) * int(w) / &aut)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    fn cf(s: &str) -> CanonicalForm {
        canonical_form(&parse_graph6(s).unwrap())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn surj_bottom_row() {
        let p3 = cf("CR");
        assert_eq!(coefficient(CoefficientKind::Surj, &p3, &cf("Bw")).unwrap(), q(6, 1));
        assert_eq!(coefficient(CoefficientKind::Surj, &p3, &cf("BW")).unwrap(), q(4, 1));
        assert_eq!(coefficient(CoefficientKind::Surj, &p3, &cf("A_")).unwrap(), q(2, 1));
        assert_eq!(coefficient(CoefficientKind::Surj, &p3, &p3).unwrap(), q(2, 1));
    }

    #[test]
    fn four_path_expansion() {
        let v = sub_to_hom_vector(&parse_graph6("DDW").unwrap()).unwrap();
        let want = [
            ("DDW", q(1, 2)),
            ("CR", q(-1, 1)),
            ("CN", q(-1, 1)),
            ("Cr", q(-1, 2)),
            ("CF", q(-1, 2)),
            ("Bw", q(3, 2)),
            ("BW", q(5, 2)),
            ("A_", q(-1, 1)),
        ];
        assert_eq!(v.len(), 8);
        for (code, c) in want {
            assert_eq!(v[&cf(code)], c, "{code}");
        }
    }

    #[test]
    fn cliques_and_edges() {
        let v = sub_to_hom_vector(&parse_graph6("Bw").unwrap()).unwrap();
        assert_eq!(v.into_iter().collect::<Vec<_>>(), vec![(cf("Bw"), q(1, 6))]);
        let v = sub_to_hom_vector(&parse_graph6("A_").unwrap()).unwrap();
        assert_eq!(v.into_iter().collect::<Vec<_>>(), vec![(cf("A_"), q(1, 2))]);
    }

    #[test]
    fn extension_of_path_by_triangle() {
        let p2 = cf("BW");
        let k3 = cf("Bw");
        assert_eq!(coefficient(CoefficientKind::Ext, &p2, &k3).unwrap(), q(3, 1));
        assert_eq!(coefficient(CoefficientKind::ExtInv, &p2, &k3).unwrap(), q(-3, 1));
        assert_eq!(coefficient(CoefficientKind::Ext, &p2, &cf("A_")).unwrap(), q(0, 1));
    }

    #[test]
    fn iso_diagonal() {
        let k3 = cf("Bw");
        assert_eq!(coefficient(CoefficientKind::Iso, &k3, &k3).unwrap(), q(6, 1));
        assert_eq!(coefficient(CoefficientKind::IsoInv, &k3, &k3).unwrap(), q(1, 6));
        assert_eq!(coefficient(CoefficientKind::Iso, &k3, &cf("BW")).unwrap(), q(0, 1));
    }
}
