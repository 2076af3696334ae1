//! Recovering a single homomorphism count from an oracle for a combination
//! of homomorphism counts, by querying the oracle on tensor products.

use crate::error::{Error, Result};
use crate::graph::{tensor_product, CanonicalForm, Graph};
use crate::homcount::{count_hom, Engine};
use crate::motif::{Basis, MotifParameter};
use crate::partitions::spasm;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// `matrix[x][h] = Hom(index[h], index[x])`; `rhs[x]` is the oracle answer on `G × index[x]`.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub index: Vec<CanonicalForm>,
    pub matrix: Vec<Vec<BigInt>>,
    pub rhs: Vec<BigRational>,
}

#[derive(Clone, Debug)]
pub struct Extraction {
    pub value: BigUint,
    pub system: LinearSystem,
    /// Vertex counts of the graphs handed to the oracle, in index order.
    pub query_sizes: Vec<usize>,
}

/// Smallest spasm-closed superset of `support`, in the global graph order.
pub fn hom_closure<'a>(support: impl IntoIterator<Item = &'a CanonicalForm>) -> Result<Vec<CanonicalForm>> {
    let mut s = BTreeSet::new();
    for h in support {
        s.extend(spasm(h.graph())?);
    }
    Ok(s.into_iter().collect())
}

fn big(n: BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n)
}

/// Solves `a · x = b` exactly by fraction-free (Bareiss) elimination.
/// Returns `None` if `a` is singular.
pub fn solve_exact(a: &[Vec<BigInt>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let denom = b.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push((x * BigRational::from_integer(denom.clone())).to_integer());
            r
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= BigRational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from_integer(m[i][i].clone());
    }
    let d = BigRational::from_integer(denom);
    Some(x.into_iter().map(|v| v / &d).collect())
}

/// Recovers `Hom(f, g)` using only oracle answers for `Σ α_H Hom(H, ·)` on
/// the products `g × X`, one query per member `X` of the spasm closure.
pub fn extract_hom_via_oracle(
    alpha: &MotifParameter,
    f: &CanonicalForm,
    g: &Graph,
    oracle: &(dyn Fn(&Graph) -> Result<BigRational> + Sync),
) -> Result<BigUint> {
    Ok(extract_with_report(alpha, f, g, oracle)?.value)
}

pub fn extract_with_report(
    alpha: &MotifParameter,
    f: &CanonicalForm,
    g: &Graph,
    oracle: &(dyn Fn(&Graph) -> Result<BigRational> + Sync),
) -> Result<Extraction> {
    if alpha.basis() != Basis::Hom {
        return Err(Error::Precondition("parameter must be in the homomorphism basis".into()));
    }
    let Some(coef) = alpha.terms().get(f) else {
        return Err(Error::Precondition(format!("{} has coefficient zero", f.key())));
    };
    let index = hom_closure(alpha.terms().keys())?;
    let matrix: Vec<Vec<BigInt>> = index
        .par_iter()
        .map(|x| {
            index
                .iter()
                .map(|h| count_hom(h.graph(), x.graph(), Engine::Auto).map(big))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let answers: Vec<(usize, BigRational)> = index
        .par_iter()
        .map(|x| {
            let q = tensor_product(g, x.graph());
            Ok((q.vertex_count(), oracle(&q)?))
        })
        .collect::<Result<_>>()?;
    let (query_sizes, rhs): (Vec<usize>, Vec<BigRational>) = answers.into_iter().unzip();
    let sol = solve_exact(&matrix, &rhs)
        .ok_or_else(|| Error::Domain("homomorphism matrix of a spasm-closed set is singular".into()))?;
    let pos = index.iter().position(|x| x == f).expect("support lies in its closure");
    let value = &sol[pos] / coef;
    if !value.is_integer() || value < BigRational::zero() {
        return Err(Error::Domain(format!("oracle answers are inconsistent: recovered {value}")));
    }
    let value = value.to_integer().to_biguint().expect("nonnegative");
    Ok(Extraction { value, system: LinearSystem { index, matrix, rhs }, query_sizes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, parse_graph6};
    use crate::motif::{evaluate, parse_motif};
    use crate::partitions::sub_to_hom_vector;

    fn cf(s: &str) -> CanonicalForm {
        canonical_form(&parse_graph6(s).unwrap())
    }

    fn honest(alpha: &MotifParameter) -> impl Fn(&Graph) -> Result<BigRational> + Sync + '_ {
        move |x| evaluate(alpha, x)
    }

    #[test]
    fn closures() {
        assert_eq!(hom_closure([&cf("DDW")]).unwrap().len(), 8);
        assert_eq!(hom_closure([&cf("Bw")]).unwrap(), vec![cf("Bw")]);
        let keys: Vec<CanonicalForm> = hom_closure([&cf("CR")]).unwrap();
        assert_eq!(keys, vec![cf("A_"), cf("BW"), cf("Bw"), cf("CR")]);
    }

    #[test]
    fn triangle_free_host() {
        let alpha = parse_motif("basis hom\n1 Bw\n5 A_\n").unwrap();
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let v = extract_hom_via_oracle(&alpha, &cf("Bw"), &c5, &honest(&alpha)).unwrap();
        assert_eq!(v, BigUint::zero());
    }

    #[test]
    fn path_entry_and_report() {
        let alpha = parse_motif("basis hom\n1 BW\n").unwrap();
        let g = parse_graph6("CR").unwrap();
        let r = extract_with_report(&alpha, &cf("BW"), &g, &honest(&alpha)).unwrap();
        assert_eq!(r.value, BigUint::from(10u32));
        assert_eq!(r.query_sizes.len(), r.system.index.len());
        assert!(r.query_sizes.iter().all(|&s| s <= 3 * 4));
    }

    #[test]
    fn four_path_combination_on_k4() {
        let mut alpha = MotifParameter::new(Basis::Hom);
        for (f, c) in sub_to_hom_vector(&parse_graph6("DDW").unwrap()).unwrap() {
            alpha.add(f.graph(), c);
        }
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let v = extract_hom_via_oracle(&alpha, &cf("Bw"), &k4, &honest(&alpha)).unwrap();
        assert_eq!(v, BigUint::from(24u32));
    }

    #[test]
    fn rejects_missing_term() {
        let alpha = parse_motif("basis hom\n1 BW\n").unwrap();
        let g = parse_graph6("CR").unwrap();
        assert!(matches!(
            extract_hom_via_oracle(&alpha, &cf("Bw"), &g, &honest(&alpha)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bareiss_solves_small_system() {
        let a = vec![vec![BigInt::from(0), BigInt::from(2)], vec![BigInt::from(3), BigInt::from(1)]];
        let b = vec![BigRational::new(1.into(), 1.into()), BigRational::new(1.into(), 2.into())];
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x, vec![BigRational::new(0.into(), 1.into()), BigRational::new(1.into(), 2.into())]);
        let singular = vec![vec![BigInt::from(1), BigInt::from(2)], vec![BigInt::from(2), BigInt::from(4)]];
        assert!(solve_exact(&singular, &b).is_none());
    }
}
