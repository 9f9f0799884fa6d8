// SPDX-License-Identifier: Apache-2.0

use std::collections::HashMap;

use crate::{Error, Graph, Result};

const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq)]
enum Value {
    Int(i64),
    Real(f64),
    Str(String),
    List(Vec<Item>),
}

#[derive(Debug, Clone, PartialEq)]
struct Item {
    key: String,
    line: usize,
    value: Value,
}

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Key(&'a str),
    Int(i64),
    Real(f64),
    Str(&'a str),
    Open,
    Close,
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { text, pos: 0, line: 1 }
    }

    fn next_token(&mut self) -> Result<Option<(Token<'a>, usize)>> {
        let bytes = self.text.as_bytes();
        loop {
            match bytes.get(self.pos) {
                None => return Ok(None),
                Some(b'\n') => {
                    self.line += 1;
                    self.pos += 1;
                }
                Some(b) if b.is_ascii_whitespace() => self.pos += 1,
                Some(b'#') => {
                    while self.pos < bytes.len() && bytes[self.pos] != b'\n' {
                        self.pos += 1;
                    }
                }
                Some(_) => break,
            }
        }
        let line = self.line;
        let start = self.pos;
        let token = match bytes[start] {
            b'[' => {
                self.pos += 1;
                Token::Open
            }
            b']' => {
                self.pos += 1;
                Token::Close
            }
            b'"' => {
                let body = start + 1;
                let Some(len) = self.text[body..].find('"') else {
                    return Err(Error::parse(line, "unterminated string"));
                };
                let s = &self.text[body..body + len];
                self.line += s.matches('\n').count();
                self.pos = body + len + 1;
                Token::Str(s)
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Token::Key(&self.text[start..self.pos])
            }
            b if b.is_ascii_digit() || matches!(b, b'-' | b'+' | b'.') => {
                while self.pos < bytes.len()
                    && (bytes[self.pos].is_ascii_alphanumeric()
                        || matches!(bytes[self.pos], b'-' | b'+' | b'.'))
                {
                    self.pos += 1;
                }
                let s = &self.text[start..self.pos];
                if let Ok(i) = s.parse::<i64>() {
                    Token::Int(i)
                } else if let Ok(x) = s.parse::<f64>() {
                    Token::Real(x)
                } else {
                    return Err(Error::parse(line, format!("invalid number `{s}`")));
                }
            }
            _ => {
                let c = self.text[start..].chars().next().unwrap_or('?');
                return Err(Error::parse(line, format!("unexpected character `{c}`")));
            }
        };
        Ok(Some((token, line)))
    }
}

/// Parses the whole document into its top-level key/value list.
fn parse_document(text: &str) -> Result<Vec<Item>> {
    let mut lexer = Lexer::new(text);
    // Open lists: (key, line of key, items so far). Index 0 is the document.
    let mut stack: Vec<(String, usize, Vec<Item>)> = vec![(String::new(), 0, Vec::new())];
    while let Some((token, line)) = lexer.next_token()? {
        let key = match token {
            Token::Key(k) => k,
            Token::Close if stack.len() > 1 => {
                let (key, key_line, items) = stack.pop().expect("checked depth");
                let parent = &mut stack.last_mut().expect("document frame").2;
                parent.push(Item {
                    key,
                    line: key_line,
                    value: Value::List(items),
                });
                continue;
            }
            Token::Close => return Err(Error::parse(line, "unmatched `]`")),
            _ => return Err(Error::parse(line, "expected a key")),
        };
        let value = match lexer.next_token()? {
            Some((Token::Int(i), _)) => Value::Int(i),
            Some((Token::Real(x), _)) => Value::Real(x),
            Some((Token::Str(s), _)) => Value::Str(s.to_string()),
            Some((Token::Open, _)) => {
                if stack.len() > MAX_DEPTH {
                    return Err(Error::parse(line, "lists nested too deeply"));
                }
                stack.push((key.to_string(), line, Vec::new()));
                continue;
            }
            Some((_, l)) => return Err(Error::parse(l, format!("expected a value for `{key}`"))),
            None => return Err(Error::parse(lexer.line, format!("missing value for `{key}`"))),
        };
        stack.last_mut().expect("document frame").2.push(Item {
            key: key.to_string(),
            line,
            value,
        });
    }
    if stack.len() > 1 {
        let (key, line, _) = stack.pop().expect("checked depth");
        return Err(Error::parse(line, format!("unclosed `{key} [`")));
    }
    Ok(stack.pop().expect("document frame").2)
}

fn field<'a>(items: &'a [Item], key: &str) -> Option<&'a Item> {
    items.iter().find(|item| item.key == key)
}

fn int_field(items: &[Item], key: &str, block: &Item) -> Result<i64> {
    match field(items, key) {
        Some(Item {
            value: Value::Int(i),
            ..
        }) => Ok(*i),
        Some(item) => Err(Error::parse(item.line, format!("`{key}` must be an integer"))),
        None => Err(Error::parse(
            block.line,
            format!("{} block without `{key}`", block.key),
        )),
    }
}

/// Parses the `graph [...]` block of a GML document.
///
/// Each `node` needs an integer `id`; its `label` (string or number) is kept
/// when present. Each `edge` needs integer `source` and `target` ids that
/// name declared nodes. All other keys are ignored, including `directed`.
pub fn parse_gml(text: &str) -> Result<Graph> {
    let document = parse_document(text)?;
    let graph = document
        .iter()
        .find(|item| item.key == "graph")
        .ok_or_else(|| Error::parse(1, "no `graph [ ... ]` block"))?;
    let Value::List(entries) = &graph.value else {
        return Err(Error::parse(graph.line, "`graph` must be a list"));
    };

    let mut ids: HashMap<i64, usize> = HashMap::new();
    let mut labels = Vec::new();
    for block in entries.iter().filter(|item| item.key == "node") {
        let Value::List(fields) = &block.value else {
            return Err(Error::parse(block.line, "`node` must be a list"));
        };
        let id = int_field(fields, "id", block)?;
        if ids.insert(id, labels.len()).is_some() {
            return Err(Error::parse(block.line, format!("duplicate node id {id}")));
        }
        let label = match field(fields, "label").map(|item| &item.value) {
            Some(Value::Str(s)) => s.clone(),
            Some(Value::Int(i)) => i.to_string(),
            Some(Value::Real(x)) => x.to_string(),
            _ => id.to_string(),
        };
        labels.push(label);
    }

    let mut edges = Vec::new();
    for block in entries.iter().filter(|item| item.key == "edge") {
        let Value::List(fields) = &block.value else {
            return Err(Error::parse(block.line, "`edge` must be a list"));
        };
        let endpoint = |key: &str| -> Result<usize> {
            let id = int_field(fields, key, block)?;
            ids.get(&id)
                .copied()
                .ok_or_else(|| Error::parse(block.line, format!("edge {key} {id} is not a node")))
        };
        let u = endpoint("source")?;
        let v = endpoint("target")?;
        edges.push((u, v));
    }

    if labels.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(Graph::from_edges(labels, edges))
}
