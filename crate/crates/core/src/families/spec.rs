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

//! Family spec strings: `wd:k,n | fr:n | cyc:n | kpart:n1,...,nk | L(spec) | M(spec)`.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{
    complete_multipartite, cycle, friendship, line_graph, middle_graph, windmill, Instance,
};
use crate::error::{Error, Result};

/// A parsed family spec.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Windmill { k: usize, n: usize },
    Friendship { n: usize },
    Cycle { n: usize },
    Multipartite(Vec<usize>),
    Line(Box<Family>),
    Middle(Box<Family>),
}

impl Family {
    pub fn line(inner: Family) -> Self {
        Family::Line(Box::new(inner))
    }

    pub fn middle(inner: Family) -> Self {
        Family::Middle(Box::new(inner))
    }

    pub fn build(&self) -> Result<Instance> {
        match self {
            Family::Windmill { k, n } => windmill(*k, *n),
            Family::Friendship { n } => friendship(*n),
            Family::Cycle { n } => cycle(*n),
            Family::Multipartite(sizes) => complete_multipartite(sizes),
            Family::Line(inner) => line_graph(&inner.build()?.graph),
            Family::Middle(inner) => middle_graph(&inner.build()?.graph),
        }
    }

    /// Windmill parameters `(k, n)`, treating `fr:n` as `wd:3,n`.
    pub fn as_windmill(&self) -> Option<(usize, usize)> {
        match *self {
            Family::Windmill { k, n } => Some((k, n)),
            Family::Friendship { n } => Some((3, n)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Windmill { k, n } => write!(f, "wd:{k},{n}"),
            Family::Friendship { n } => write!(f, "fr:{n}"),
            Family::Cycle { n } => write!(f, "cyc:{n}"),
            Family::Multipartite(sizes) => {
                f.write_str("kpart:")?;
                for (i, s) in sizes.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            Family::Line(inner) => write!(f, "L({inner})"),
            Family::Middle(inner) => write!(f, "M({inner})"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        parser.skip_ws();
        let family = parser.family()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(family)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: String::from(message),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        self.skip_ws();
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{token}`")))
        }
    }

    fn family(&mut self) -> Result<Family> {
        if self.eat("L(") {
            let inner = self.nested()?;
            return Ok(Family::line(inner));
        }
        if self.eat("M(") {
            let inner = self.nested()?;
            return Ok(Family::middle(inner));
        }
        if self.eat("wd:") {
            let args = self.numbers()?;
            return match args[..] {
                [k, n] => Ok(Family::Windmill { k, n }),
                _ => Err(self.error("wd takes two parameters k,n")),
            };
        }
        if self.eat("fr:") {
            return Ok(Family::Friendship {
                n: self.single("fr")?,
            });
        }
        if self.eat("cyc:") {
            return Ok(Family::Cycle {
                n: self.single("cyc")?,
            });
        }
        if self.eat("kpart:") {
            return Ok(Family::Multipartite(self.numbers()?));
        }
        Err(self.error("expected one of wd:, fr:, cyc:, kpart:, L(, M("))
    }

    fn nested(&mut self) -> Result<Family> {
        self.skip_ws();
        let inner = self.family()?;
        self.expect(")")?;
        Ok(inner)
    }

    fn single(&mut self, name: &str) -> Result<usize> {
        let args = self.numbers()?;
        match args[..] {
            [n] => Ok(n),
            _ => Err(self.error(&format!("{name} takes one parameter"))),
        }
    }

    fn numbers(&mut self) -> Result<Vec<usize>> {
        let mut out = alloc::vec![self.number()?];
        loop {
            self.skip_ws();
            if !self.eat(",") {
                return Ok(out);
            }
            out.push(self.number()?);
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| Error::Parse {
            position: start,
            message: String::from("number too large"),
        })
    }
}
