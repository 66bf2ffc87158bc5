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

//! JSON documents: colorings, claimed colorings, provenance sidecars.

use serde::{Deserialize, Serialize};

use condchrom_core::constructions::ClaimedColoring;
use condchrom_core::families::Layout;
use condchrom_core::verify::{Coloring, ConditionalReport};
use condchrom_core::{Graph, Origin, Provenance};

use crate::error::Result;

/// `{"k": int, "colors": [int, ...]}`, indexed by internal vertex id.
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let c: Coloring = serde_json::from_str(text)?;
    c.validate()?;
    Ok(c)
}

pub fn coloring_json(c: &Coloring) -> Result<String> {
    Ok(serde_json::to_string(c)?)
}

/// A claimed coloring as emitted by `construct`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedColoringDoc {
    pub k: usize,
    pub colors: Vec<usize>,
    pub proposition: u8,
    pub case: String,
    pub claimed_k: usize,
    pub r_set: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<ConditionalReport>,
}

impl ClaimedColoringDoc {
    pub fn new(claim: &ClaimedColoring, verification: Option<ConditionalReport>) -> Self {
        ClaimedColoringDoc {
            k: claim.coloring.k,
            colors: claim.coloring.colors.clone(),
            proposition: claim.proposition,
            case: claim.case.to_string(),
            claimed_k: claim.claimed_k,
            r_set: claim.r_set.to_string(),
            verification,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub role_index: usize,
    pub origin: Origin,
}

/// Provenance sidecar written next to generated graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceDoc {
    pub family: String,
    pub vertices: usize,
    pub edges: usize,
    pub layout: Layout,
    pub roles: Vec<VertexDoc>,
}

impl ProvenanceDoc {
    pub fn new(family: &str, g: &Graph, p: &Provenance) -> Self {
        ProvenanceDoc {
            family: family.to_string(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            layout: p.layout().clone(),
            roles: (0..p.len())
                .map(|id| VertexDoc {
                    id,
                    role_index: p.role_index(id),
                    origin: p.origin(id),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use condchrom_core::constructions::color_middle_cycle;

    #[test]
    fn coloring_shape() {
        let c = Coloring::new(3, vec![1, 2, 3]).unwrap();
        let text = coloring_json(&c).unwrap();
        assert_eq!(text, r#"{"k":3,"colors":[1,2,3]}"#);
        assert_eq!(parse_coloring(&text).unwrap(), c);
        assert!(parse_coloring(r#"{"k":2,"colors":[1,3]}"#).is_err());
        assert!(parse_coloring(r#"{"colors":[1]}"#).is_err());
    }

    #[test]
    fn claimed_doc_fields() {
        let c = color_middle_cycle(5, 2).unwrap();
        let doc = ClaimedColoringDoc::new(&c.claim, None);
        let v: serde_json::Value = serde_json::to_value(&doc).unwrap();
        assert_eq!(v["proposition"], 5);
        assert_eq!(v["claimed_k"], 3);
        assert_eq!(v["r_set"], "r=2");
        assert_eq!(v["case"], "r=2, n odd");
        assert!(v.get("verification").is_none());
    }
}
