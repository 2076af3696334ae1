use super::{width_for, Count, Width};
use crate::decomp::{exact_treewidth, normalize_width2, Width2Decomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

/// Dense square matrix over host vertices.
#[derive(Clone, Debug)]
struct Matrix<C> {
    n: usize,
    data: Vec<C>,
}

impl<C: Count> Matrix<C> {
    fn adjacency(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut data = vec![C::zero(); n * n];
        for (u, v) in g.edges() {
            data[u * n + v] = C::one();
            data[v * n + u] = C::one();
        }
        Matrix { n, data }
    }

    fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = vec![C::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        Matrix { n, data }
    }

    fn hadamard(mut self, other: &Self) -> Self {
        self.data.par_iter_mut().zip(&other.data).for_each(|(a, b)| {
            if !a.is_zero() {
                *a = a.clone() * b.clone();
            }
        });
        self
    }

    fn row_sums(&self) -> Vec<C> {
        self.data
            .par_chunks(self.n.max(1))
            .map(|r| r.iter().fold(C::zero(), |mut acc, x| {
                acc += x.clone();
                acc
            }))
            .collect()
    }
}

/// `P[i][j] = Σ_k x[i][k] · y[j][k]`, skipping zero entries on both sides.
///
/// This is the single place where the matrix product happens; a faster
/// kernel can be dropped in here.
fn multiply_by_transpose<C: Count>(x: &Matrix<C>, y: &Matrix<C>) -> Matrix<C> {
    let n = x.n;
    let yt = y.transpose();
    let sparse_rows: Vec<Vec<(usize, C)>> = yt
        .data
        .par_chunks(n.max(1))
        .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (j, c.clone())).collect())
        .collect();
    let mut data = vec![C::zero(); n * n];
    data.par_chunks_mut(n.max(1)).enumerate().for_each(|(i, out)| {
        for (k, a) in x.data[i * n..(i + 1) * n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in &sparse_rows[k] {
                out[*j] += a.clone() * b.clone();
            }
        }
    });
    Matrix { n, data }
}

/// A factor matrix that is either all ones (no constraint) or explicit.
enum Factor<C> {
    Ones,
    Dense(Matrix<C>),
}

impl<C: Count> Factor<C> {
    fn times(self, m: &Matrix<C>) -> Self {
        match self {
            Factor::Ones => Factor::Dense(m.clone()),
            Factor::Dense(a) => Factor::Dense(a.hadamard(m)),
        }
    }
}

fn count_component<C: Count>(w: &Width2Decomposition, g: &Graph) -> C {
    let td = &w.td;
    let h = &w.graph;
    let n = g.vertex_count();
    let adjacency = Matrix::<C>::adjacency(g);
    let mut tables: Vec<Option<Matrix<C>>> = vec![None; td.node_count()];
    for t in td.postorder() {
        if t == td.root() {
            continue;
        }
        let bag = td.bag(t);
        let (u1, u2, u3) = (bag[0], bag[1], bag[2]);
        let mut f12 = Factor::<C>::Ones;
        let mut f13 = Factor::<C>::Ones;
        let mut f23 = Factor::<C>::Ones;
        if h.has_edge(u1, u2) {
            f12 = f12.times(&adjacency);
        }
        if h.has_edge(u1, u3) {
            f13 = f13.times(&adjacency);
        }
        if h.has_edge(u2, u3) {
            f23 = f23.times(&adjacency);
        }
        for &c in td.children(t) {
            let m = tables[c].take().expect("child table computed");
            let sep = td.separator(c);
            if sep == [u1, u2] {
                f12 = f12.times(&m);
            } else if sep == [u1, u3] {
                f13 = f13.times(&m);
            } else {
                debug_assert_eq!(sep, [u2, u3]);
                f23 = f23.times(&m);
            }
        }
        // inner[v1][v2] = Σ_{v3} a13(v1,v3) · a23(v2,v3)
        let inner = match (f13, f23) {
            (Factor::Ones, Factor::Ones) => Matrix { n, data: vec![C::from_usize(n); n * n] },
            (Factor::Ones, Factor::Dense(b)) => {
                let s = b.row_sums();
                let mut data = Vec::with_capacity(n * n);
                for _ in 0..n {
                    data.extend(s.iter().cloned());
                }
                Matrix { n, data }
            }
            (Factor::Dense(a), Factor::Ones) => {
                let s = a.row_sums();
                let mut data = Vec::with_capacity(n * n);
                for x in s {
                    data.extend(std::iter::repeat_n(x, n));
                }
                Matrix { n, data }
            }
            (Factor::Dense(a), Factor::Dense(b)) => multiply_by_transpose(&a, &b),
        };
        tables[t] = Some(match f12 {
            Factor::Ones => inner,
            Factor::Dense(a) => inner.hadamard(&a),
        });
    }
    let top = td.children(td.root())[0];
    let m = tables[top].take().expect("root child table");
    m.data.into_iter().fold(C::zero(), |mut acc, x| {
        acc += x;
        acc
    })
}

/// Number of homomorphisms from `h` (treewidth at most 2) to `g`, one matrix
/// product per decomposition node. Components are counted separately.
pub fn count_hom_mm(h: &Graph, g: &Graph) -> Result<BigUint> {
    let n = g.vertex_count();
    let mut total = BigUint::one();
    for comp in h.components() {
        let part = match comp.len() {
            1 => BigUint::from(n),
            2 => BigUint::from(2 * g.edge_count()),
            k => {
                let sub = h.induced(&comp);
                let (width, td) = exact_treewidth(&sub)?;
                if width > 2 {
                    return Err(Error::Domain(format!("pattern has treewidth {width} > 2")));
                }
                let w = normalize_width2(&td, &sub)?;
                match width_for(n, k) {
                    Width::U64 => count_component::<u64>(&w, g).to_big(),
                    Width::U128 => count_component::<u128>(&w, g).to_big(),
                    Width::Big => count_component::<BigUint>(&w, g),
                }
            }
        };
        total *= part;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph6;

    fn mm(h: &str, g: &str) -> BigUint {
        count_hom_mm(&parse_graph6(h).unwrap(), &parse_graph6(g).unwrap()).unwrap()
    }

    #[test]
    fn small_values() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(count_hom_mm(&k3, &k4).unwrap(), 24u32.into());
        assert_eq!(mm("BW", "CR"), 10u32.into());
        assert_eq!(mm("Cr", "Bw"), 18u32.into());
        assert_eq!(mm("?", "Bw"), 1u32.into());
        assert_eq!(mm("A?", "Bw"), 9u32.into());
    }

    #[test]
    fn rejects_width_three() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(count_hom_mm(&k4, &k4), Err(Error::Domain(_))));
    }
}
