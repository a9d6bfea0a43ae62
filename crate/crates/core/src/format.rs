//! The `MATROID v1` and `GRAPH v1` text formats (UTF-8, LF line endings).
//!
//! ```text
//! matroid v1          graph v1
//! elements 4          vertices 4
//! rank 2              0 1
//! bases               0 2
//! 0 1                 end
//! 0 2
//! end
//! ```
//!
//! Matroid files may carry a graph-backed body instead of a bases list, used
//! when the bases family would be large (more than 16 elements):
//!
//! ```text
//! matroid v1
//! elements 21
//! rank 13
//! graph dual
//! vertices 9
//! 0 3
//! ...
//! end
//! ```
//!
//! Lines starting with `#` are comments and are ignored everywhere. Edge
//! order in graph bodies is the element order.

use crate::graph::Multigraph;
use crate::matroid::Matroid;
use crate::set::ElementSet;
use crate::Error;

/// Bases are materialized in files only up to this many elements.
pub const BASES_MATERIALIZE_LIMIT: usize = 16;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next non-comment, non-blank line with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Some((i + 1, t));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), Error> {
        self.next()
            .ok_or_else(|| parse_err(0, format!("unexpected end of file, expected {what}")))
    }
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, Error> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, format!("invalid {what}: `{tok}`")))
}

fn parse_keyword<'a>(lines: &mut Lines<'a>, keyword: &str) -> Result<(usize, Vec<&'a str>), Error> {
    let (ln, text) = lines.expect(keyword)?;
    let mut parts = text.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(parse_err(ln, format!("expected `{keyword}`, got `{text}`")));
    }
    Ok((ln, parts.collect()))
}

fn parse_edge_list(lines: &mut Lines<'_>, vertices: usize) -> Result<Multigraph, Error> {
    let mut edges = Vec::new();
    loop {
        let (ln, text) = lines.expect("edge or `end`")?;
        if text == "end" {
            break;
        }
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(ln, format!("expected `u v`, got `{text}`")));
        }
        let u = parse_usize(ln, toks[0], "vertex")?;
        let v = parse_usize(ln, toks[1], "vertex")?;
        if u >= vertices || v >= vertices {
            return Err(parse_err(ln, format!("vertex out of range in `{text}`")));
        }
        edges.push((u, v));
    }
    Multigraph::new(vertices, edges).map_err(|e| parse_err(0, e.to_string()))
}

/// Parse a `GRAPH v1` document.
pub fn parse_graph(text: &str) -> Result<Multigraph, Error> {
    let mut lines = Lines::new(text);
    let (ln, rest) = parse_keyword(&mut lines, "graph")?;
    if rest != ["v1"] {
        return Err(parse_err(ln, "expected `graph v1`"));
    }
    let (ln, rest) = parse_keyword(&mut lines, "vertices")?;
    if rest.len() != 1 {
        return Err(parse_err(ln, "expected `vertices <n>`"));
    }
    let n = parse_usize(ln, rest[0], "vertex count")?;
    parse_edge_list(&mut lines, n)
}

/// Parse a `MATROID v1` document (bases body or graph body).
pub fn parse_matroid(text: &str) -> Result<Matroid, Error> {
    let mut lines = Lines::new(text);
    let (ln, rest) = parse_keyword(&mut lines, "matroid")?;
    if rest != ["v1"] {
        return Err(parse_err(ln, "expected `matroid v1`"));
    }
    let (ln, rest) = parse_keyword(&mut lines, "elements")?;
    if rest.len() != 1 {
        return Err(parse_err(ln, "expected `elements <m>`"));
    }
    let m = parse_usize(ln, rest[0], "element count")?;
    let (ln, rest) = parse_keyword(&mut lines, "rank")?;
    if rest.len() != 1 {
        return Err(parse_err(ln, "expected `rank <r>`"));
    }
    let rank = parse_usize(ln, rest[0], "rank")?;

    let (ln, body) = lines.expect("`bases` or `graph`")?;
    let matroid = match body.split_whitespace().collect::<Vec<_>>()[..] {
        ["bases"] => {
            let mut bases = Vec::new();
            loop {
                let (ln, text) = lines.expect("basis or `end`")?;
                if text == "end" {
                    break;
                }
                let mut basis = ElementSet::EMPTY;
                for tok in text.split_whitespace() {
                    let e = parse_usize(ln, tok, "element id")?;
                    if e >= m {
                        return Err(parse_err(ln, format!("element {e} out of range")));
                    }
                    basis = basis.with(e);
                }
                bases.push(basis);
            }
            if bases.is_empty() && rank == 0 {
                // the sole basis of a rank-0 matroid is empty and serializes
                // to a blank line, which the reader skips
                bases.push(ElementSet::EMPTY);
            }
            Matroid::from_bases(m, &bases).map_err(|e| parse_err(ln, e.to_string()))?
        }
        ["graph", flavor @ ("primal" | "dual")] => {
            let (ln2, rest) = parse_keyword(&mut lines, "vertices")?;
            if rest.len() != 1 {
                return Err(parse_err(ln2, "expected `vertices <n>`"));
            }
            let n = parse_usize(ln2, rest[0], "vertex count")?;
            let g = parse_edge_list(&mut lines, n)?;
            let cycle = Matroid::cycle_matroid(g).map_err(|e| parse_err(ln, e.to_string()))?;
            if flavor == "dual" {
                cycle.dual()
            } else {
                cycle
            }
        }
        _ => {
            return Err(parse_err(
                ln,
                format!("expected `bases` or `graph`, got `{body}`"),
            ))
        }
    };
    if matroid.size() != m {
        return Err(parse_err(
            ln,
            format!("body has {} elements, header says {m}", matroid.size()),
        ));
    }
    if matroid.full_rank() != rank {
        return Err(parse_err(
            ln,
            format!("body has rank {}, header says {rank}", matroid.full_rank()),
        ));
    }
    Ok(matroid)
}

/// Parse either format, deciding by the header line.
pub fn parse_any(text: &str) -> Result<Matroid, Error> {
    let mut lines = Lines::new(text);
    match lines.next() {
        Some((_, l)) if l.starts_with("graph") => {
            let g = parse_graph(text)?;
            Matroid::cycle_matroid(g)
        }
        Some((_, l)) if l.starts_with("matroid") => parse_matroid(text),
        Some((ln, l)) => Err(parse_err(ln, format!("unknown header `{l}`"))),
        None => Err(parse_err(0, "empty input")),
    }
}

fn write_edges(out: &mut String, g: &Multigraph) {
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
}

/// Serialize a multigraph as `GRAPH v1`.
pub fn write_graph(g: &Multigraph) -> String {
    let mut out = String::new();
    out.push_str("graph v1\n");
    out.push_str(&format!("vertices {}\n", g.vertex_count()));
    write_edges(&mut out, g);
    out.push_str("end\n");
    out
}

/// Serialize a matroid as `MATROID v1`. Bases are materialized when the
/// ground set has at most [`BASES_MATERIALIZE_LIMIT`] elements; larger
/// graph-backed matroids get a graph body instead.
pub fn write_matroid(m: &Matroid) -> String {
    let mut out = String::new();
    out.push_str("matroid v1\n");
    out.push_str(&format!("elements {}\n", m.size()));
    out.push_str(&format!("rank {}\n", m.full_rank()));
    if m.size() <= BASES_MATERIALIZE_LIMIT {
        out.push_str("bases\n");
        if m.full_rank() > 0 {
            for b in m.bases() {
                let ids: Vec<String> = b.iter().map(|e| e.to_string()).collect();
                out.push_str(&ids.join(" "));
                out.push('\n');
            }
        }
    } else {
        let (g, dual) = m
            .graph_backend()
            .expect("large matroids must be graph-backed to serialize");
        out.push_str(if dual {
            "graph dual\n"
        } else {
            "graph primal\n"
        });
        out.push_str(&format!("vertices {}\n", g.vertex_count()));
        write_edges(&mut out, g);
    }
    out.push_str("end\n");
    out
}
