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

use alloc::string::String;
use core::fmt;

/// Errors raised by graph construction, verification and search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An operation that needs at least one vertex got the empty graph.
    EmptyGraph,
    /// A generator, transform or constructor got parameters outside its domain.
    Parameter(String),
    /// Malformed input data (colorings, edge lists, certificates).
    Input(String),
    /// A family spec string failed to parse at the given byte offset.
    Parse { position: usize, message: String },
    /// A lemma or constructor precondition does not hold.
    Precondition(String),
    /// The requested (family, r) pair lies outside every closed-form case.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            Error::EmptyGraph => f.write_str("graph has no vertices"),
            Error::Parameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported case: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
