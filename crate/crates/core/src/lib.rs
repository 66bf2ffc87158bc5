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

//! Conditional `(k, r)`-coloring of graphs.
//!
//! A conditional `(k, r)`-coloring is a proper coloring with `k` colors in
//! which every vertex `v` sees at least `min(d(v), r)` distinct colors among
//! its neighbors. The smallest such `k` is the `r`-th order conditional
//! chromatic number `χ_r(G)`.
//!
//! This crate holds the allocation-only core: graph families and their
//! line/middle transforms, coloring verifiers, lower bounds, an exact
//! branch-and-bound solver, the closed-form colorings for windmill,
//! friendship, cycle and multipartite families, and the planning side of the
//! formula-versus-solver comparison tables. File formats and the command line
//! live in the `condchrom` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod solver;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use families::{Family, Instance, Origin, Provenance};
pub use graph::{Graph, VertexSet};
