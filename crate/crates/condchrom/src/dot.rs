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

//! Graphviz output.

use std::fmt::Write;

use condchrom_core::{Graph, Origin, Provenance};

/// Undirected DOT graph. With a provenance, nodes are labelled by their
/// 1-based index and origin.
pub fn write_dot(g: &Graph, provenance: Option<&Provenance>, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
    for v in 0..g.vertex_count() {
        match provenance {
            Some(p) => {
                let origin = match p.origin(v) {
                    Origin::Vertex(x) => format!("vertex {x}"),
                    Origin::Edge(a, b) => format!("edge {a}-{b}"),
                };
                writeln!(out, "  {v} [label=\"v{} ({origin})\"];", p.role_index(v)).unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
