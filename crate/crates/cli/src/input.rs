//! Reading graphs, embeddings and minors from files or stdin.

use std::collections::HashMap;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use planar_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Dot,
    Json,
}

pub fn read_text(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        }
    }
}

/// Explicit format, else guessed from the extension, else edge list.
pub fn resolve_format(explicit: Option<Format>, path: Option<&Path>) -> Format {
    if let Some(f) = explicit {
        return f;
    }
    match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("dot" | "gv") => Format::Dot,
        Some("json") => Format::Json,
        _ => Format::Edgelist,
    }
}

pub fn read_graph(path: Option<&Path>, format: Option<Format>) -> Result<Graph, String> {
    let text = read_text(path)?;
    parse_graph(&text, resolve_format(format, path))
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph, String> {
    match format {
        Format::Edgelist => Graph::parse_edge_list(text).map_err(|e| e.to_string()),
        Format::Json => serde_json::from_str(text).map_err(|e| format!("graph JSON: {e}")),
        Format::Dot => parse_dot(text),
    }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Id(String),
    Sym(char),
    Edge,
    Arrow,
}

fn tokenize(text: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
        } else if c == '/' && chars.get(i + 1) == Some(&'*') {
            i += 2;
            while i + 1 < chars.len() && !(chars[i] == '*' && chars[i + 1] == '/') {
                i += 1;
            }
            i += 2;
        } else if c == '-' && chars.get(i + 1) == Some(&'-') {
            out.push(Tok::Edge);
            i += 2;
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Tok::Arrow);
            i += 2;
        } else if "{}[];,=:".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            while i < chars.len() && chars[i] != '"' {
                if chars[i] == '\\' && i + 1 < chars.len() {
                    i += 1;
                }
                s.push(chars[i]);
                i += 1;
            }
            if i >= chars.len() {
                return Err("unterminated string".into());
            }
            out.push(Tok::Id(s));
            i += 1;
        } else if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '.') {
                i += 1;
            }
            if i == start {
                return Err(format!("unexpected character {c:?}"));
            }
            out.push(Tok::Id(chars[start..i].iter().collect()));
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

/// Undirected simple graphs in DOT. Attributes are ignored. Node names that
/// are all non-negative integers are used as vertex ids; otherwise vertices
/// are numbered in order of first appearance.
pub fn parse_dot(text: &str) -> Result<Graph, String> {
    let toks = tokenize(text).map_err(|e| format!("DOT: {e}"))?;
    let mut i = 0;
    let id_is = |t: Option<&Tok>, word: &str| matches!(t, Some(Tok::Id(s)) if s.eq_ignore_ascii_case(word));
    if id_is(toks.get(i), "strict") {
        i += 1;
    }
    if id_is(toks.get(i), "digraph") {
        return Err("DOT: directed graphs are not supported".into());
    }
    if !id_is(toks.get(i), "graph") {
        return Err("DOT: expected `graph`".into());
    }
    i += 1;
    if matches!(toks.get(i), Some(Tok::Id(_))) {
        i += 1;
    }
    if toks.get(i) != Some(&Tok::Sym('{')) {
        return Err("DOT: expected `{`".into());
    }
    i += 1;
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut raw_edges: Vec<(usize, usize)> = Vec::new();
    let mut node = |name: &str, names: &mut Vec<String>| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            names.len() - 1
        })
    };
    let skip_attrs = |i: &mut usize| -> Result<(), String> {
        while toks.get(*i) == Some(&Tok::Sym('[')) {
            while toks.get(*i).is_some_and(|t| *t != Tok::Sym(']')) {
                *i += 1;
            }
            if toks.get(*i).is_none() {
                return Err("DOT: unterminated attribute list".into());
            }
            *i += 1;
        }
        Ok(())
    };
    loop {
        match toks.get(i) {
            None => return Err("DOT: missing `}`".into()),
            Some(Tok::Sym('}')) => {
                i += 1;
                break;
            }
            Some(Tok::Sym(';')) | Some(Tok::Sym(',')) => i += 1,
            Some(Tok::Sym('{')) => return Err("DOT: subgraphs are not supported".into()),
            Some(Tok::Id(word)) => {
                let lower = word.to_ascii_lowercase();
                if lower == "subgraph" {
                    return Err("DOT: subgraphs are not supported".into());
                }
                if matches!(lower.as_str(), "graph" | "node" | "edge") && toks.get(i + 1) == Some(&Tok::Sym('[')) {
                    i += 1;
                    skip_attrs(&mut i)?;
                    continue;
                }
                if toks.get(i + 1) == Some(&Tok::Sym('=')) {
                    i += 3;
                    continue;
                }
                let mut chain = vec![node(word, &mut names)];
                i += 1;
                if toks.get(i) == Some(&Tok::Sym(':')) {
                    return Err("DOT: ports are not supported".into());
                }
                loop {
                    match toks.get(i) {
                        Some(Tok::Edge) => match toks.get(i + 1) {
                            Some(Tok::Id(w)) => {
                                chain.push(node(w, &mut names));
                                i += 2;
                            }
                            _ => return Err("DOT: expected a node after `--`".into()),
                        },
                        Some(Tok::Arrow) => return Err("DOT: directed edge `->` in an undirected graph".into()),
                        _ => break,
                    }
                }
                skip_attrs(&mut i)?;
                raw_edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
            }
            Some(Tok::Arrow) => return Err("DOT: directed edge `->`".into()),
            Some(t) => return Err(format!("DOT: unexpected token {t:?}")),
        }
    }
    if i != toks.len() {
        return Err("DOT: trailing input after `}`".into());
    }
    let numeric: Option<Vec<usize>> = names.iter().map(|s| s.parse::<usize>().ok()).collect();
    let (n, ids) = match numeric {
        Some(ids) => (ids.iter().map(|&x| x + 1).max().unwrap_or(0), ids),
        None => (names.len(), (0..names.len()).collect()),
    };
    let pairs: Vec<_> = raw_edges.iter().map(|&(a, b)| (ids[a], ids[b])).collect();
    Graph::new(n, &pairs).map_err(|e| format!("DOT: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_chains_and_attributes() {
        let g = parse_dot("strict graph G { node [shape=circle]; 0 -- 1 -- 2 [color=red]; 2 -- 0; 3 }").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn dot_named_nodes_in_order() {
        let g = parse_dot("graph { a -- b; b -- \"c d\"; }").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn dot_rejects_directed_loops_and_duplicates() {
        assert!(parse_dot("digraph { a -> b }").is_err());
        assert!(parse_dot("graph { a -> b }").is_err());
        assert!(parse_dot("graph { a -- a }").is_err());
        assert!(parse_dot("graph { a -- b; b -- a }").is_err());
        assert!(parse_dot("graph { subgraph x { a -- b } }").is_err());
    }
}
