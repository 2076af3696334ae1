//! Vertex-colored patterns: class contraction and saturation, A-paths and
//! flowers, guarded cutvertex decompositions, ordered embeddings, and
//! inclusion–exclusion counting of colorful subgraphs.

mod apath;
mod embed;
mod guarded;

pub use apath::{a_path_packing, a_path_packing_restricted, is_l_attached, APathPacking, RestrictedPacking};
pub use embed::{
    count_colored_embeddings, count_colored_sub, count_colorful_subgraphs_ie, count_ordered_embeddings,
    similarity_partition, SimilarityPartition,
};
pub use guarded::{build_guarded_decomposition, GuardedCutvertexDecomposition, FLOWER_CAP};

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Graph};

/// One vertex per color id (`0..color_bound`), adjacent iff some edge of `h`
/// joins the two classes.
pub fn contract_colors(h: &ColoredGraph) -> Graph {
    let mut edges: Vec<(usize, usize)> = h
        .graph()
        .edges()
        .map(|(u, v)| (h.color(u), h.color(v)))
        .filter(|(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(h.color_bound(), &edges).expect("class ids are in range")
}

/// `h` with every color class turned into a clique, except the class `except`.
pub fn clique_saturate(h: &ColoredGraph, except: Option<usize>) -> Result<Graph> {
    let classes = h.classes();
    if let Some(i) = except {
        if classes.get(i).is_none_or(|c| c.is_empty()) {
            return Err(Error::Domain(format!("no vertex has color {i}")));
        }
    }
    let mut edges: Vec<(usize, usize)> = h.graph().edges().collect();
    for (i, class) in classes.iter().enumerate() {
        if Some(i) == except {
            continue;
        }
        for (x, &u) in class.iter().enumerate() {
            for &v in &class[x + 1..] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(h.graph().vertex_count(), &edges)
}

/// `c` vertex-disjoint paths of the graph saturated everywhere except at
/// `center`, each with both endpoints in class `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flower {
    pub center: usize,
    pub paths: Vec<Vec<usize>>,
}

/// A `c`-flower centered at `class_i`, if one exists.
pub fn find_flower(h: &ColoredGraph, class_i: usize, c: usize) -> Option<Flower> {
    let classes = h.classes();
    let class = classes.get(class_i).filter(|c| !c.is_empty())?;
    if c == 0 {
        return Some(Flower { center: class_i, paths: Vec::new() });
    }
    let g = clique_saturate(h, Some(class_i)).expect("class is nonempty");
    match a_path_packing(&g, class, c).expect("class vertices are in range") {
        APathPacking::Paths(paths) => Some(Flower { center: class_i, paths }),
        APathPacking::Cover(_) => None,
    }
}
