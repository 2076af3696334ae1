use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format:
///
/// ```text
/// # comment
/// n 4
/// e 0 1
/// c 0 2
/// ```
///
/// Returns the graph and, if any `c` line is present, a color per vertex
/// (vertices without a `c` line get color 0).
pub fn parse_edge_list(text: &str) -> Result<(Graph, Option<Vec<usize>>)> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut colors: Vec<(usize, usize, usize)> = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let at = offset;
        offset += line.len();
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let nums: Vec<usize> = fields[1..]
            .iter()
            .map(|f| f.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(at, format!("expected decimal integers in `{line}`")))?;
        match (fields[0], nums.as_slice()) {
            ("n", [count]) => {
                if n.is_some() {
                    return Err(Error::parse(at, "duplicate `n` line"));
                }
                n = Some(*count);
            }
            ("e", [u, v]) => edges.push((*u, *v, at)),
            ("c", [v, c]) => colors.push((*v, *c, at)),
            _ => return Err(Error::parse(at, format!("unrecognised line `{line}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `n <count>` line"))?;
    let mut g = Graph::empty(n);
    for (u, v, at) in edges {
        if u >= n || v >= n {
            return Err(Error::parse(at, format!("edge {u}-{v} out of range")));
        }
        if u == v {
            return Err(Error::parse(at, format!("loop at vertex {u}")));
        }
        g.set(u, v);
    }
    g.finish();
    if colors.is_empty() {
        return Ok((g, None));
    }
    let mut col = vec![0; n];
    for (v, c, at) in colors {
        if v >= n {
            return Err(Error::parse(at, format!("color for vertex {v} out of range")));
        }
        col[v] = c;
    }
    Ok((g, Some(col)))
}

pub fn write_edge_list(g: &Graph, colors: Option<&[usize]>) -> String {
    let mut s = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {u} {v}\n"));
    }
    if let Some(colors) = colors {
        for (v, c) in colors.iter().enumerate() {
            s.push_str(&format!("c {v} {c}\n"));
        }
    }
    s
}
