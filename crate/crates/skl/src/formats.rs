//! graph6 and DIMACS edge-format writers and readers.
//!
//! graph6: size header (1 byte for n <= 62, '~' + 3 bytes up to 258047),
//! then the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed
//! big-endian into 6-bit groups, each offset by 63 into printable ASCII.
//!
//! DIMACS: a "p edge V E" line followed by one "e i j" line per edge with
//! 1-indexed endpoints in ascending order.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_MAX_N: usize = 258_047;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.num_vertices();
    assert!(
        n <= GRAPH6_MAX_N,
        "graph too large for graph6 ({n} vertices)"
    );
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(((n >> 12) & 63) as u8 + 63);
        bytes.push(((n >> 6) & 63) as u8 + 63);
        bytes.push((n & 63) as u8 + 63);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end().as_bytes();
    let parse_err = |message: String| Error::Parse { line: 1, message };
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 input".into()));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(parse_err("truncated graph6 size header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..127).contains(&b) {
                return Err(parse_err(format!("invalid size byte {b}")));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4usize)
    } else {
        if !(63..126).contains(&bytes[0]) {
            return Err(parse_err(format!("invalid size byte {}", bytes[0])));
        }
        ((bytes[0] - 63) as usize, 1usize)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected_bytes = nbits.div_ceil(6);
    if bytes.len() - pos != expected_bytes {
        return Err(parse_err(format!(
            "expected {expected_bytes} payload bytes for n={n}, got {}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut group = 0u8;
    let mut available = 0u8;
    let mut next_bit = |pos: &mut usize| -> Result<bool> {
        if available == 0 {
            let b = bytes[*pos];
            if !(63..127).contains(&b) {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("invalid payload byte {b}"),
                });
            }
            group = b - 63;
            available = 6;
            *pos += 1;
        }
        available -= 1;
        Ok((group >> available) & 1 == 1)
    };
    for j in 1..n {
        for i in 0..j {
            if next_bit(&mut pos)? {
                edges.push((i, j));
            }
        }
    }
    // Padding bits must be zero.
    while available > 0 {
        available -= 1;
        if (group >> available) & 1 == 1 {
            return Err(parse_err("non-zero padding bits".into()));
        }
    }
    Graph::new(n, &edges)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.num_vertices(), g.num_edges());
    for (i, j) in g.edges() {
        out.push_str(&format!("e {} {}\n", i + 1, j + 1));
    }
    out
}

pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut num_vertices: Option<usize> = None;
    let mut declared_edges = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => continue,
            Some(&"p") => {
                if num_vertices.is_some() {
                    return Err(Error::Parse {
                        line,
                        message: "duplicate problem line".into(),
                    });
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected 'p edge V E', got '{raw}'"),
                    });
                }
                num_vertices = Some(parse_number(fields[2], line)?);
                declared_edges = parse_number(fields[3], line)?;
            }
            Some(&"e") => {
                let n = num_vertices.ok_or(Error::Parse {
                    line,
                    message: "edge before problem line".into(),
                })?;
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected 'e i j', got '{raw}'"),
                    });
                }
                let a = parse_number(fields[1], line)?;
                let b = parse_number(fields[2], line)?;
                if a == 0 || b == 0 || a > n || b > n {
                    return Err(Error::Parse {
                        line,
                        message: format!("endpoint out of range 1..={n} in '{raw}'"),
                    });
                }
                edges.push((a - 1, b - 1));
            }
            Some(other) => {
                return Err(Error::Parse {
                    line,
                    message: format!("unknown record '{other}'"),
                });
            }
        }
    }
    let n = num_vertices.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing problem line".into(),
    })?;
    if edges.len() != declared_edges {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!(
                "problem line declares {declared_edges} edges, found {}",
                edges.len()
            ),
        });
    }
    Graph::new(n, &edges)
}

fn parse_number(field: &str, line: usize) -> Result<usize> {
    field.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid number '{field}'"),
    })
}
