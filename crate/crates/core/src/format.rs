//! Instance and result files.
//!
//! Two graph formats are understood:
//!
//! * DIMACS-like: `p edge <n> <m>` followed by `m` lines `e <u> <v>` with
//!   1-based vertex ids.
//! * plain: a first line `<n> <m>` followed by `m` lines `<u> <v>`, 0-based.
//!
//! In both, lines starting with `c` are comments, except `c label <id> <label>`
//! which records the original identifier of vertex `<id>` (used when writing
//! kernels, whose vertices are renumbered). Ids and labels always follow the
//! numbering convention of the format they appear in.
//!
//! A sets file has one `C:` line and one `I:` line, and optionally `T:` and
//! `J:` lines, each listing ids in the numbering of the instance format.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    Plain,
}

impl Format {
    fn offset(self) -> usize {
        match self {
            Format::Dimacs => 1,
            Format::Plain => 0,
        }
    }

    /// DIMACS when the first non-comment line starts with `p`.
    pub fn detect(text: &str) -> Format {
        match content_lines(text).next() {
            Some((_, line)) if line.starts_with('p') => Format::Dimacs,
            _ => Format::Plain,
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dimacs" => Ok(Format::Dimacs),
            "plain" | "edges" | "edge-list" => Ok(Format::Plain),
            other => Err(format!(
                "unknown format {other:?} (expected dimacs or plain)"
            )),
        }
    }
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("header declares {declared} edges but {found} were given")]
    HeaderMismatch { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("unknown vertex id {0}")]
    UnknownId(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

fn parse_error(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn parse_number(line: usize, token: Option<&str>, what: &str) -> Result<usize, FormatError> {
    let token = token.ok_or_else(|| parse_error(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_error(line, format!("invalid {what} {token:?}")))
}

fn to_index(line: usize, id: usize, format: Format) -> Result<usize, FormatError> {
    id.checked_sub(format.offset())
        .ok_or_else(|| parse_error(line, format!("vertex id {id} below {}", format.offset())))
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let mut tokens = header.split_whitespace();
    if format == Format::Dimacs {
        if tokens.next() != Some("p") {
            return Err(parse_error(header_line, "expected `p edge <n> <m>`"));
        }
        match tokens.next() {
            Some("edge" | "col" | "td") => {}
            _ => return Err(parse_error(header_line, "expected `p edge <n> <m>`")),
        }
    }
    let n = parse_number(header_line, tokens.next(), "vertex count")?;
    let m = parse_number(header_line, tokens.next(), "edge count")?;
    if tokens.next().is_some() {
        return Err(parse_error(header_line, "trailing tokens in header"));
    }

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let mut tokens = content.split_whitespace();
        if format == Format::Dimacs && tokens.next() != Some("e") {
            return Err(parse_error(line, "expected `e <u> <v>`"));
        }
        let u = to_index(
            line,
            parse_number(line, tokens.next(), "vertex id")?,
            format,
        )?;
        let v = to_index(
            line,
            parse_number(line, tokens.next(), "vertex id")?,
            format,
        )?;
        if tokens.next().is_some() {
            return Err(parse_error(line, "trailing tokens"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::HeaderMismatch {
            declared: m,
            found: edges.len(),
        });
    }

    let mut labels: Vec<usize> = (0..n).collect();
    for (i, raw) in text.lines().enumerate() {
        let mut tokens = raw.split_whitespace();
        if tokens.next() == Some("c") && tokens.next() == Some("label") {
            let line = i + 1;
            let id = to_index(
                line,
                parse_number(line, tokens.next(), "vertex id")?,
                format,
            )?;
            let label = to_index(line, parse_number(line, tokens.next(), "label")?, format)?;
            if id >= n {
                return Err(GraphError::VertexOutOfRange { vertex: id, n }.into());
            }
            labels[id] = label;
        }
    }
    Ok(Graph::with_labels(n, &edges, labels)?)
}

pub fn read_graph(path: &Path, format: Option<Format>) -> Result<(Graph, Format), FormatError> {
    let text = read_text(path)?;
    let format = format.unwrap_or_else(|| Format::detect(&text));
    Ok((parse_graph(&text, format)?, format))
}

pub fn read_text(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Serializes `g`; label comments are written when labels differ from indices.
pub fn write_graph(g: &Graph, format: Format) -> String {
    let off = format.offset();
    let mut out = String::new();
    match format {
        Format::Dimacs => writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()),
        Format::Plain => writeln!(out, "{} {}", g.vertex_count(), g.edge_count()),
    }
    .unwrap();
    if g.labels().iter().enumerate().any(|(v, &l)| v != l) {
        for v in g.vertices() {
            writeln!(out, "c label {} {}", v + off, g.label(v) + off).unwrap();
        }
    }
    for (u, v) in g.edges() {
        match format {
            Format::Dimacs => writeln!(out, "e {} {}", u + off, v + off),
            Format::Plain => writeln!(out, "{} {}", u + off, v + off),
        }
        .unwrap();
    }
    out
}

/// `C:` and `I:` lines listing the labels of `c` and `i` (indices of `g`).
pub fn write_sets(g: &Graph, c: &VertexSet, i: &VertexSet, format: Format) -> String {
    let line = |tag: &str, s: &VertexSet| {
        let ids: Vec<String> = s
            .iter()
            .map(|v| (g.label(v) + format.offset()).to_string())
            .collect();
        if ids.is_empty() {
            format!("{tag}:\n")
        } else {
            format!("{tag}: {}\n", ids.join(" "))
        }
    };
    line("C", c) + &line("I", i)
}

/// Contents of a sets file. `T` and `J` are optional; when absent they are
/// derived as `T = N(I) \ C` and `J = V \ (I ∪ C ∪ T)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SetsFile {
    pub c: VertexSet,
    pub i: VertexSet,
    pub t: Option<VertexSet>,
    pub j: Option<VertexSet>,
}

/// Reads a sets file back into vertex indices of `g`, matching ids by label.
pub fn parse_sets(text: &str, g: &Graph, format: Format) -> Result<SetsFile, FormatError> {
    let by_label: HashMap<usize, usize> = g.vertices().map(|v| (g.label(v), v)).collect();
    let mut slots: [Option<VertexSet>; 4] = Default::default();
    for (line, content) in text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
    {
        let (tag, rest) = content
            .split_once(':')
            .ok_or_else(|| parse_error(line, "expected `C: ...` or `I: ...`"))?;
        let mut members = Vec::new();
        for token in rest.split_whitespace() {
            let id = to_index(line, parse_number(line, Some(token), "vertex id")?, format)?;
            let v = *by_label
                .get(&id)
                .ok_or(FormatError::UnknownId(id + format.offset()))?;
            members.push(v);
        }
        let slot = match tag.trim() {
            "C" => &mut slots[0],
            "I" => &mut slots[1],
            "T" => &mut slots[2],
            "J" => &mut slots[3],
            other => return Err(parse_error(line, format!("unknown set {other:?}"))),
        };
        if slot.replace(VertexSet::from(members)).is_some() {
            return Err(parse_error(line, format!("set {} given twice", tag.trim())));
        }
    }
    let [c, i, t, j] = slots;
    Ok(SetsFile {
        c: c.unwrap_or_default(),
        i: i.unwrap_or_default(),
        t,
        j,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_single_edge() {
        let g = parse_graph("c hello\np edge 2 1\ne 1 2\n", Format::Dimacs).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn plain_star() {
        let g = parse_graph("4 3\n0 1\n0 2\n0 3\n", Format::Plain).unwrap();
        assert_eq!(g.degree(0), 3);
        assert_eq!(Format::detect("4 3\n0 1\n"), Format::Plain);
        assert_eq!(Format::detect("c x\np edge 1 0\n"), Format::Dimacs);
    }

    #[test]
    fn header_mismatch() {
        assert!(matches!(
            parse_graph("p edge 2 2\ne 1 2\n", Format::Dimacs),
            Err(FormatError::HeaderMismatch {
                declared: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_graph("p edge 2 1\ne 0 1\n", Format::Dimacs),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("2 1\n0 x\n", Format::Plain),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n1 0\n", Format::Plain),
            Err(FormatError::Graph(GraphError::DuplicateEdge(0, 1)))
        ));
        assert!(matches!(
            parse_graph("", Format::Plain),
            Err(FormatError::MissingHeader)
        ));
    }

    #[test]
    fn labelled_kernel_round_trip() {
        let g = Graph::new(6, &[(1, 3), (3, 5), (0, 2)]).unwrap();
        let sub = g.induced_subgraph(&VertexSet::from([1, 3, 5])).unwrap();
        for format in [Format::Dimacs, Format::Plain] {
            let text = write_graph(&sub, format);
            assert_eq!(parse_graph(&text, format).unwrap(), sub);
        }
    }

    #[test]
    fn sets_round_trip() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = VertexSet::from([0]);
        let i = VertexSet::from([1, 2, 3]);
        let text = write_sets(&g, &c, &i, Format::Dimacs);
        assert_eq!(text, "C: 1\nI: 2 3 4\n");
        let parsed = parse_sets(&text, &g, Format::Dimacs).unwrap();
        assert_eq!((parsed.c, parsed.i, parsed.t), (c, i, None));
        assert_eq!(
            parse_sets("C:\nI:\n", &g, Format::Plain).unwrap(),
            SetsFile::default()
        );
        let explicit = parse_sets("I: 1\nT:\nJ: 0 2 3\n", &g, Format::Plain).unwrap();
        assert_eq!(explicit.t, Some(VertexSet::new()));
        assert_eq!(explicit.j, Some(VertexSet::from([0, 2, 3])));
        assert!(matches!(
            parse_sets("C: 9\n", &g, Format::Plain),
            Err(FormatError::UnknownId(9))
        ));
    }
}
