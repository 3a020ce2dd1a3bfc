//! Plain-text files for digraphs and colourings.
//!
//! A digraph file starts with `digraph <n>` and lists one arc `u v` per
//! line; a colouring file lists one `vertex color` pair per line. In both,
//! `#` starts a comment and blank lines are ignored.

use crate::chromatic::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Arc, OrientedGraph};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn parse_num(line: usize, field: &str) -> Result<usize> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found {field:?}"),
    })
}

/// Parses the digraph format, rejecting loops, digons, repeated arcs and
/// out-of-range vertices with the offending line number.
pub fn parse_digraph(text: &str) -> Result<OrientedGraph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing \"digraph <n>\" header".into(),
    })?;
    if header.len() != 2 || header[0] != "digraph" {
        return Err(Error::Parse {
            line,
            message: "expected \"digraph <n>\"".into(),
        });
    }
    let n = parse_num(line, header[1])?;
    let mut g = OrientedGraph::empty(n);
    for (line, fields) in lines {
        let at = |message: String| Error::Parse { line, message };
        if fields.len() != 2 {
            return Err(at(format!(
                "expected \"u v\", found {} fields",
                fields.len()
            )));
        }
        let (u, v) = (parse_num(line, fields[0])?, parse_num(line, fields[1])?);
        if g.has_arc(u, v) {
            return Err(at(format!("repeated arc {u} {v}")));
        }
        g.add_arc(Arc::new(u, v)).map_err(|e| at(e.to_string()))?;
    }
    Ok(g)
}

/// Canonical text: header, then arcs in lexicographic order.
pub fn serialize_digraph(d: &OrientedGraph) -> String {
    let mut out = format!("digraph {}\n", d.n());
    for e in d.arc_list() {
        out.push_str(&format!("{} {}\n", e.tail, e.head));
    }
    out
}

/// Parses `vertex color` lines for a graph on `n` vertices.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut c = Coloring::empty(n);
    for (line, fields) in content_lines(text) {
        let at = |message: String| Error::Parse { line, message };
        if fields.len() != 2 {
            return Err(at(format!(
                "expected \"vertex color\", found {} fields",
                fields.len()
            )));
        }
        let (v, color) = (parse_num(line, fields[0])?, parse_num(line, fields[1])?);
        if v >= n {
            return Err(at(format!("vertex {v} is out of range for {n} vertices")));
        }
        if c.is_colored(v) {
            return Err(at(format!("vertex {v} coloured twice")));
        }
        c.set(v, color);
    }
    Ok(c)
}

/// One `vertex color` line per coloured vertex, in vertex order.
pub fn serialize_coloring(c: &Coloring) -> String {
    c.colored()
        .map(|(v, color)| format!("{v} {color}\n"))
        .collect()
}
