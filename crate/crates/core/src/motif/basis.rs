use super::{Basis, MotifParameter};
use crate::error::{Error, Result};
use crate::graph::{automorphism_count, trees, Graph};
use crate::homcount::{count_hom, Engine};
use crate::oracle::{BruteForce, CountKind};
use crate::partitions::{ext_inv_row, ext_row, surj_inv_row, surj_row};
use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

fn aut(g: &Graph) -> BigRational {
    BigRational::from_integer(BigInt::from(automorphism_count(g)))
}

type RowFn = fn(&Graph) -> Result<crate::partitions::Row>;

/// Multiplies the coefficient vector by a change-of-basis matrix, row by row.
fn apply(p: &MotifParameter, basis: Basis, row: RowFn) -> Result<MotifParameter> {
    let mut out = MotifParameter::new(basis);
    for (h, c) in p.terms() {
        for (f, x) in row(h.graph())?.iter() {
            out.add_canonical(f.clone(), c * x);
        }
    }
    Ok(out)
}

/// Rescales every coefficient by `Aut(F)` (or its inverse).
fn scale(p: &MotifParameter, basis: Basis, multiply: bool) -> MotifParameter {
    let mut out = MotifParameter::new(basis);
    for (h, c) in p.terms() {
        let a = aut(h.graph());
        out.add_canonical(h.clone(), if multiply { c * a } else { c / a });
    }
    out
}

fn to_sub(p: &MotifParameter) -> Result<MotifParameter> {
    match p.basis() {
        Basis::Sub => Ok(p.clone()),
        Basis::Hom => apply(p, Basis::Sub, surj_row),
        Basis::IndSub => apply(p, Basis::Sub, ext_inv_row),
        Basis::Emb => Ok(scale(p, Basis::Sub, true)),
        Basis::StrEmb => apply(&scale(p, Basis::IndSub, true), Basis::Sub, ext_inv_row),
    }
}

fn from_sub(p: &MotifParameter, target: Basis) -> Result<MotifParameter> {
    match target {
        Basis::Sub => Ok(p.clone()),
        Basis::Hom => apply(p, Basis::Hom, surj_inv_row),
        Basis::IndSub => apply(p, Basis::IndSub, ext_row),
        Basis::Emb => Ok(scale(p, Basis::Emb, false)),
        Basis::StrEmb => Ok(scale(&apply(p, Basis::IndSub, ext_row)?, Basis::StrEmb, false)),
    }
}

/// Rewrites `p` in another basis; the represented graph parameter is unchanged.
pub fn change_basis(p: &MotifParameter, target: Basis) -> Result<MotifParameter> {
    if p.basis() == target {
        return Ok(p.clone());
    }
    from_sub(&to_sub(p)?, target)
}

/// Value of `p` on `g`, computed through the homomorphism basis.
pub fn evaluate(p: &MotifParameter, g: &Graph) -> Result<BigRational> {
    evaluate_with(p, g, Engine::Auto)
}

pub fn evaluate_with(p: &MotifParameter, g: &Graph, engine: Engine) -> Result<BigRational> {
    let hom = change_basis(p, Basis::Hom)?;
    let terms: Vec<_> = hom.terms().iter().collect();
    let values: Vec<BigRational> = terms
        .par_iter()
        .map(|(f, c)| {
            let n = count_hom(f.graph(), g, engine)?;
            Ok(*c * BigRational::from_integer(BigInt::from_biguint(Sign::Plus, n)))
        })
        .collect::<Result<_>>()?;
    Ok(values.into_iter().fold(BigRational::zero(), |a, b| a + b))
}

/// Exact count of `h` in `g` for the given count family.
pub fn count_pattern(kind: Basis, h: &Graph, g: &Graph) -> Result<BigUint> {
    count_pattern_with(kind, h, g, Engine::Auto)
}

pub fn count_pattern_with(kind: Basis, h: &Graph, g: &Graph, engine: Engine) -> Result<BigUint> {
    if engine == Engine::Brute {
        let k = match kind {
            Basis::Hom => CountKind::Hom,
            Basis::Sub => CountKind::Sub,
            Basis::IndSub => CountKind::IndSub,
            Basis::Emb => CountKind::Emb,
            Basis::StrEmb => CountKind::StrEmb,
        };
        return BruteForce::from_env().count(k, h, g);
    }
    if kind == Basis::Hom {
        return count_hom(h, g, engine);
    }
    let v = evaluate_with(&MotifParameter::single(kind, h), g, engine)?;
    if !v.is_integer() || v < BigRational::zero() {
        return Err(Error::Domain(format!("count evaluated to non-natural value {v}")));
    }
    Ok(v.to_integer().to_biguint().expect("nonnegative"))
}

/// Subgraph-basis parameter counting all `k`-vertex trees.
pub fn build_tree_count_parameter(k: usize) -> Result<MotifParameter> {
    let mut p = MotifParameter::new(Basis::Sub);
    for t in trees(k)? {
        p.add_canonical(t, BigRational::one());
    }
    Ok(p)
}
