// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! DIMACS `.col` graphs: `p edge n m` followed by 1-based `e u v` lines.

use std::fmt::Write;

use condchrom_core::Graph;

use crate::error::{Error, Result};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

/// Parses a `.col` file. Comment (`c`) lines and blank lines are ignored;
/// edges listed twice are merged.
pub fn parse_col(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let nums = |fields: std::str::SplitWhitespace<'_>| -> Result<Vec<usize>> {
            fields
                .map(|f| {
                    f.parse::<usize>()
                        .map_err(|_| format_err(line_no, format!("bad number `{f}`")))
                })
                .collect()
        };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(format_err(line_no, "duplicate problem line"));
                }
                match fields.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(format_err(
                            line_no,
                            format!("unknown problem type {other:?}"),
                        ))
                    }
                }
                match nums(fields)?[..] {
                    [n, m] => header = Some((n, m)),
                    _ => return Err(format_err(line_no, "expected `p edge <n> <m>`")),
                }
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(format_err(line_no, "edge before problem line"));
                };
                let [u, v] = nums(fields)?[..] else {
                    return Err(format_err(line_no, "expected `e <u> <v>`"));
                };
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(format_err(line_no, format!("vertex out of range 1..={n}")));
                }
                if u == v {
                    return Err(format_err(line_no, "self-loop"));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(format_err(line_no, format!("unknown line type `{other}`"))),
        }
    }
    let (n, _) = header.ok_or_else(|| format_err(0, "missing problem line"))?;
    Ok(Graph::from_edges(n, &edges)?)
}

/// Writes `g` with edges in lexicographic order, preceded by `c` comments.
pub fn write_col(g: &Graph, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
