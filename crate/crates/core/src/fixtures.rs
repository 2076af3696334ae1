//! Reference instances with exactly known answers, shared by the command-line
//! self-test and the acceptance suite. Graphs are graph6 codes.

pub const K2: &str = "A_";
pub const PATH2: &str = "BW";
pub const K3: &str = "Bw";
pub const PATH3: &str = "CR";
pub const PAW: &str = "CN";
pub const C4: &str = "Cr";
pub const STAR3: &str = "CF";
pub const PATH4: &str = "DDW";
pub const C5: &str = "Dhc";

/// Spasm of the 3-edge path, in the global graph order.
pub const PATH3_SPASM: [&str; 4] = [K2, PATH2, K3, PATH3];

/// `HOM[i][j] = Hom(S_i, S_j)` over [`PATH3_SPASM`].
pub const HOM: [[u32; 4]; 4] = [[2, 4, 6, 6], [2, 6, 12, 10], [0, 0, 6, 0], [2, 8, 24, 16]];
/// `SURJ[i][j] = Surj(S_i, S_j)`.
pub const SURJ: [[u32; 4]; 4] = [[2, 0, 0, 0], [2, 2, 0, 0], [0, 0, 6, 0], [2, 4, 6, 2]];
/// `SUB[i][j] = Sub(S_i, S_j)`.
pub const SUB: [[u32; 4]; 4] = [[1, 2, 3, 3], [0, 1, 3, 2], [0, 0, 1, 0], [0, 0, 0, 1]];

/// Hom-basis expansion of the 4-edge-path subgraph count: `(graph, numerator, denominator)`.
pub const PATH4_SUB_TO_HOM: [(&str, i64, i64); 8] = [
    (PATH4, 1, 2),
    (PATH3, -1, 1),
    (PAW, -1, 1),
    (C4, -1, 2),
    (STAR3, -1, 2),
    (K3, 3, 2),
    (PATH2, 5, 2),
    (K2, -1, 1),
];

/// Embedding-basis parameter that collapses to `Hom(4-edge path, ·)`, the number of 4-walks.
pub const WALK4_EMB: &str = "basis emb\n1 DDW\n1 Cr\n1 CF\n2 CN\n2 CR\n3 Bw\n4 BW\n1 A_\n";
