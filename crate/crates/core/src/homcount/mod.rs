//! Exact homomorphism counting.

mod dp;
mod mm;

pub use dp::{count_colored_hom, count_hom_dp};
pub use mm::count_hom_mm;

use crate::decomp::treewidth;
use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{BruteForce, CountKind};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::ops::{AddAssign, Mul};

/// Which homomorphism counter to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Engine {
    /// Matrix engine for treewidth ≤ 2, tree-decomposition DP otherwise.
    #[default]
    Auto,
    Dp,
    Mm,
    Brute,
}

pub fn count_hom(h: &Graph, g: &Graph, engine: Engine) -> Result<BigUint> {
    match engine {
        Engine::Dp => count_hom_dp(h, g),
        Engine::Mm => count_hom_mm(h, g),
        Engine::Brute => BruteForce::from_env().count(CountKind::Hom, h, g),
        Engine::Auto => {
            if treewidth(h)? <= 2 {
                count_hom_mm(h, g)
            } else {
                count_hom_dp(h, g)
            }
        }
    }
}

/// Arithmetic used by the counting tables.
pub(crate) trait Count:
    Clone + Send + Sync + Zero + One + PartialEq + AddAssign + Mul<Output = Self> + 'static
{
    fn from_usize(x: usize) -> Self;
    fn to_big(&self) -> BigUint;
}

impl Count for u64 {
    fn from_usize(x: usize) -> Self {
        x as u64
    }
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Count for u128 {
    fn from_usize(x: usize) -> Self {
        x as u128
    }
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Count for BigUint {
    fn from_usize(x: usize) -> Self {
        BigUint::from(x)
    }
    fn to_big(&self) -> BigUint {
        self.clone()
    }
}

/// Smallest machine type that can hold `n^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Width {
    U64,
    U128,
    Big,
}

pub(crate) fn width_for(n: usize, k: usize) -> Width {
    let n = n as u128;
    match n.checked_pow(k as u32) {
        Some(b) if b <= u64::MAX as u128 => Width::U64,
        Some(_) => Width::U128,
        None => Width::Big,
    }
}
