//! Text and JSON formats.
//!
//! ```text
//! tg 1
//! n <count>
//! e <u> <v> <l1> <l2> ...
//! ```

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::temporal::{Label, TemporalGraph};

pub const FORMAT_VERSION: u32 = 1;
pub const JSON_VERSION: u32 = 1;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| perr(line, format!("bad {what} `{tok}`")))
}

pub fn parse(text: &str) -> Result<TemporalGraph> {
    let mut version = false;
    let mut g: Option<TemporalGraph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "tg" => {
                if version || toks.len() != 2 {
                    return Err(perr(line, "expected a single `tg <version>` header"));
                }
                let v: u32 = num(toks[1], line, "version")?;
                if v != FORMAT_VERSION {
                    return Err(perr(line, format!("unsupported format version {v}")));
                }
                version = true;
            }
            "n" => {
                if !version {
                    return Err(perr(line, "missing `tg 1` header"));
                }
                if g.is_some() || toks.len() != 2 {
                    return Err(perr(line, "expected a single `n <count>` line"));
                }
                g = Some(TemporalGraph::new(num(toks[1], line, "vertex count")?));
            }
            "e" => {
                let g = g
                    .as_mut()
                    .ok_or_else(|| perr(line, "edge before `n <count>`"))?;
                if toks.len() < 3 {
                    return Err(perr(line, "edge needs two endpoints"));
                }
                let u: usize = num(toks[1], line, "vertex")?;
                let v: usize = num(toks[2], line, "vertex")?;
                let mut labels: Vec<Label> = Vec::new();
                for t in &toks[3..] {
                    let l: Label = num(t, line, "label")?;
                    if l == 0 {
                        return Err(perr(line, "labels must be positive"));
                    }
                    if labels.last().is_some_and(|&p| p >= l) {
                        return Err(perr(line, "labels must be strictly ascending"));
                    }
                    labels.push(l);
                }
                g.add_edge(u, v).map_err(|e| perr(line, e.to_string()))?;
                g.add_labels(u, v, &labels)
                    .map_err(|e| perr(line, e.to_string()))?;
            }
            other => return Err(perr(line, format!("unknown record `{other}`"))),
        }
    }
    if !version {
        return Err(perr(0, "missing `tg 1` header"));
    }
    g.ok_or_else(|| perr(0, "missing `n <count>` line"))
}

pub fn serialize(g: &TemporalGraph) -> String {
    let mut s = format!("tg {FORMAT_VERSION}\nn {}\n", g.n());
    for ((u, v), ls) in g.edges() {
        write!(s, "e {u} {v}").unwrap();
        for l in ls {
            write!(s, " {l}").unwrap();
        }
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize, Vec<Label>)>,
}

impl From<&TemporalGraph> for JsonGraph {
    fn from(g: &TemporalGraph) -> Self {
        JsonGraph {
            n: g.n(),
            edges: g.edges().map(|((u, v), l)| (u, v, l.to_vec())).collect(),
        }
    }
}

/// Reads a file, or stdin for `-`.
pub fn read_input(path: &str) -> Result<String> {
    use std::io::Read;
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Io(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
    }
}
