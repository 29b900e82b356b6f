//! Plain edge-list text: a header line `n m`, then `m` lines `u v`.
//! Everything after `#` on a line is a comment; blank lines are skipped.

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let bad = |line: usize, reason: String| GraphError::EdgeList { line, reason };
    let pair = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(bad(line, format!("expected two integers, got `{l}`")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| bad(line, format!("`{s}`: {e}")))
        };
        Ok((parse(fields[0])?, parse(fields[1])?))
    };

    let (line, header) = lines
        .next()
        .ok_or_else(|| bad(1, "missing header".into()))?;
    let (n, m) = pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(bad(
            line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
