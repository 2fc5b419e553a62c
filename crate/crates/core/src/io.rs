//! Text formats: the `n m` edge list and graph6.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// On-disk graph formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Edgelist,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "el" => Ok(Format::Edgelist),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::Input(format!("unknown format '{other}'"))),
        }
    }
}

/// Parses the edge-list format: a header line `n m` followed by `m` lines
/// `u v` with 0-based endpoints. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing 'n m' header".into() })?;
    let nums = parse_pair(header, hline)?;
    let (n, m) = (nums.0, nums.1);
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = parse_pair(l, line)?;
        for x in [u, v] {
            if x >= n {
                return Err(Error::Parse { line, msg: format!("vertex {x} out of range for order {n}") });
            }
        }
        if u == v {
            return Err(Error::Parse { line, msg: format!("loop edge at vertex {u}") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: hline, msg: format!("header declares {m} edges, found {}", edges.len()) });
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(l: &str, line: usize) -> Result<(usize, usize)> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(Error::Parse { line, msg: format!("expected two integers, got '{l}'") });
    }
    let p = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("malformed integer '{t}'") });
    Ok((p(toks[0])?, p(toks[1])?))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 encoding without a trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let (mut acc, mut nbits) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    parse_graph6_line(s, 1)
}

fn parse_graph6_line(s: &str, line: usize) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let err = |msg: String| Error::Parse { line, msg };
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("invalid graph6 byte 0x{b:02x}")));
    }
    let (n, body) = match bytes {
        [] => return Err(err("empty graph6 string".into())),
        [126, 126, rest @ ..] if rest.len() >= 6 => {
            (rest[..6].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), &rest[6..])
        }
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => {
            (rest[..3].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize), &rest[3..])
        }
        [126, ..] => return Err(err("truncated graph6 order field".into())),
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(err(format!("graph6 body has {} bytes, expected {} for order {n}", body.len(), nbits.div_ceil(6))));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(last) = body.last() {
        let pad = body.len() * 6 - nbits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(err("nonzero graph6 padding bits".into()));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Parses a graph6 corpus, one graph per line; blank lines are skipped.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(l.trim(), i + 1))
        .collect()
}

pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let p = path.as_ref();
    let text = fs::read_to_string(p).map_err(|e| Error::io(p.display().to_string(), e))?;
    parse_graph6_corpus(&text).map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse { line, msg: format!("{}: {msg}", p.display()) },
        other => other,
    })
}

/// Parses a single graph in the given format.
pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edge_list(text),
        Format::Graph6 => {
            let mut graphs = parse_graph6_corpus(text)?;
            match graphs.len() {
                1 => Ok(graphs.remove(0)),
                k => Err(Error::Input(format!("expected one graph6 line, found {k}"))),
            }
        }
    }
}

pub fn read_graph(path: impl AsRef<Path>, format: Format) -> Result<Graph> {
    let p = path.as_ref();
    let text = fs::read_to_string(p).map_err(|e| Error::io(p.display().to_string(), e))?;
    parse_graph(&text, format)
}

/// Serializes in the given format, newline-terminated.
pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => write_edge_list(g),
        Format::Graph6 => to_graph6(g) + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // petgraph's reference: 5 vertices, edges a-c, a-e, b-d, d-e.
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        let p7 = Graph::from_edge_list(7, &(1..7).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap();
        assert_eq!(to_graph6(&p7), "FhCGG");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(from_graph6("DQc").unwrap(), g);
        assert_eq!(from_graph6(">>graph6<<DQc").unwrap(), g);
    }

    #[test]
    fn graph6_large_order_header() {
        let g = Graph::from_edge_list(70, &[(0, 69), (3, 4)]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@E"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_line_numbers() {
        let err = parse_graph6_corpus("DQc\n\nD\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        assert!(from_graph6("D Qc").is_err());
    }

    #[test]
    fn edge_list_format() {
        let text = "# triangle\n3 3\n0 1\n\n1 2 # spoke\n2 0\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
        assert!(matches!(parse_edge_list("3 1\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_edge_list("3 1\n1 1\n").is_err());
    }
}
