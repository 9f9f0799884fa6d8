// SPDX-License-Identifier: Apache-2.0

use crate::{Error, Graph, Result};

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Preamble,
    Vertices,
    Pairs,
    Lists,
    Other,
}

/// Parses the topology of a Pajek `.net` file.
///
/// `*Vertices n` declares nodes `1..=n`; vertex lines may attach a label
/// (quoted or bare) to an id. `*Edges` and `*Arcs` hold `u v [weight]`
/// lines, `*Edgeslist` and `*Arcslist` hold `u v1 v2 ...` lines. Arcs are
/// treated as undirected edges. Other sections (`*Network`, `*Partition`,
/// ...) are skipped; `*Matrix` is rejected. Lines starting with `%` are
/// comments.
pub fn parse_pajek(text: &str) -> Result<Graph> {
    let mut section = Section::Preamble;
    let mut labels: Option<Vec<String>> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        if let Some(header) = line.strip_prefix('*') {
            let mut parts = header.split_whitespace();
            let keyword = parts.next().unwrap_or("").to_ascii_lowercase();
            section = match keyword.as_str() {
                "vertices" => {
                    if labels.is_some() {
                        return Err(Error::parse(lineno, "duplicate *Vertices section"));
                    }
                    let count = parts
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "*Vertices needs a node count"))?;
                    let n: usize = count
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("invalid node count `{count}`")))?;
                    if n > MAX_VERTICES {
                        return Err(Error::parse(lineno, format!("node count {n} exceeds {MAX_VERTICES}")));
                    }
                    labels = Some((1..=n).map(|i| i.to_string()).collect());
                    Section::Vertices
                }
                "edges" | "arcs" => Section::Pairs,
                "edgeslist" | "arcslist" => Section::Lists,
                "matrix" => {
                    return Err(Error::parse(lineno, "*Matrix sections are not supported"));
                }
                _ => Section::Other,
            };
            if matches!(section, Section::Pairs | Section::Lists) && labels.is_none() {
                return Err(Error::parse(lineno, "edge section before *Vertices"));
            }
            continue;
        }

        match section {
            Section::Preamble => {
                return Err(Error::parse(lineno, "expected a *Vertices section"));
            }
            Section::Other => {}
            Section::Vertices => {
                let labels = labels.as_mut().expect("vertices section implies labels");
                let (id, rest) = split_first(line);
                let node = vertex(id, labels.len(), lineno)?;
                if let Some(label) = parse_label(rest) {
                    labels[node] = label;
                }
            }
            Section::Pairs | Section::Lists => {
                let n = labels.as_ref().map_or(0, Vec::len);
                let mut tokens = line.split_whitespace();
                let first = tokens.next().expect("non-empty line has a token");
                let u = vertex(first, n, lineno)?;
                if section == Section::Pairs {
                    let second = tokens
                        .next()
                        .ok_or_else(|| Error::parse(lineno, "expected two vertex ids"))?;
                    edges.push((u, vertex(second, n, lineno)?));
                } else {
                    for t in tokens {
                        edges.push((u, vertex(t, n, lineno)?));
                    }
                }
            }
        }
    }

    match labels {
        Some(labels) if !labels.is_empty() => Ok(Graph::from_edges(labels, edges)),
        _ => Err(Error::EmptyGraph),
    }
}

// Keeps a hostile `*Vertices` count from allocating unbounded label storage.
const MAX_VERTICES: usize = 2_000_000;

fn vertex(token: &str, n: usize, lineno: usize) -> Result<usize> {
    let id: usize = token
        .parse()
        .map_err(|_| Error::parse(lineno, format!("invalid vertex id `{token}`")))?;
    if id == 0 || id > n {
        return Err(Error::parse(lineno, format!("vertex id {id} outside 1..={n}")));
    }
    Ok(id - 1)
}

fn split_first(line: &str) -> (&str, &str) {
    match line.find(char::is_whitespace) {
        Some(pos) => (&line[..pos], line[pos..].trim_start()),
        None => (line, ""),
    }
}

fn parse_label(rest: &str) -> Option<String> {
    if let Some(quoted) = rest.strip_prefix('"') {
        let end = quoted.find('"').unwrap_or(quoted.len());
        return Some(quoted[..end].to_string());
    }
    rest.split_whitespace().next().map(str::to_string)
}
