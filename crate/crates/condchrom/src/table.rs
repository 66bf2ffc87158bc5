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

//! Runs planned comparison rows and renders them as CSV or JSON.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use condchrom_core::sweep::{run_row, MatchStatus, PlannedRow, SweepRow};

use crate::error::Result;

/// A solved row plus its wall-clock time.
#[derive(Debug, Clone)]
pub struct TimedRow {
    pub row: SweepRow,
    pub millis: u128,
}

/// Solves rows concurrently; output order follows the input order.
pub fn run_rows(rows: &[PlannedRow], size_cap: usize, budget: u64) -> Result<Vec<TimedRow>> {
    rows.par_iter()
        .map(|planned| {
            let start = Instant::now();
            let row = run_row(planned, size_cap, budget)?;
            Ok(TimedRow {
                row,
                millis: start.elapsed().as_millis(),
            })
        })
        .collect()
}

/// Column order of the CSV output.
pub const COLUMNS: [&str; 10] = [
    "prop", "case", "instance", "vertices", "r", "formula", "exact", "proven", "match", "nodes",
];

#[derive(Serialize)]
struct RowDoc<'a> {
    prop: u8,
    case: &'a str,
    instance: String,
    vertices: usize,
    r: usize,
    formula: Option<usize>,
    exact: Option<usize>,
    proven: bool,
    #[serde(rename = "match")]
    status: &'static str,
    nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    ms: Option<u128>,
}

fn doc(t: &TimedRow, timing: bool) -> RowDoc<'_> {
    let p = &t.row.planned;
    RowDoc {
        prop: p.proposition,
        case: &p.case,
        instance: p.family.to_string(),
        vertices: p.vertices,
        r: p.r,
        formula: p.formula,
        exact: t.row.exact,
        proven: t.row.proven,
        status: t.row.status.as_str(),
        nodes: t.row.nodes,
        ms: timing.then_some(t.millis),
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn render_csv(rows: &[TimedRow], timing: bool) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = COLUMNS.to_vec();
    if timing {
        header.push("ms");
    }
    w.write_record(&header)?;
    for t in rows {
        let d = doc(t, timing);
        let mut record = vec![
            d.prop.to_string(),
            d.case.to_string(),
            d.instance,
            d.vertices.to_string(),
            d.r.to_string(),
            opt(d.formula),
            opt(d.exact),
            d.proven.to_string(),
            d.status.to_string(),
            d.nodes.to_string(),
        ];
        if let Some(ms) = d.ms {
            record.push(ms.to_string());
        }
        w.write_record(&record)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render_json(rows: &[TimedRow], timing: bool) -> Result<String> {
    let docs: Vec<RowDoc<'_>> = rows.iter().map(|t| doc(t, timing)).collect();
    Ok(serde_json::to_string_pretty(&docs)? + "\n")
}

/// 1 on any formula mismatch, 3 if some row ran out of budget, else 0.
pub fn exit_status(rows: &[TimedRow]) -> u8 {
    if rows.iter().any(|t| t.row.is_failure()) {
        1
    } else if rows.iter().any(|t| t.row.status == MatchStatus::Unknown) {
        3
    } else {
        0
    }
}
