//! Text format for groups: a `degree n` line followed by one generator per
//! line in 1-based disjoint-cycle notation. Blank lines and `#` comments are
//! ignored.

use super::group::{generate_group, Group};
use super::perm::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group> {
        generate_group(self.degree, &self.generators)
    }
}

pub fn parse_group_file(text: &str) -> Result<GroupSpec> {
    let mut degree = None;
    let mut generators = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| parse_err(format!("expected `degree n`, found {:?}", line)))?;
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| parse_err(format!("bad degree {:?}", rest.trim())))?;
                if d == 0 {
                    return Err(parse_err("degree must be at least 1".into()));
                }
                degree = Some(d);
            }
            Some(d) => {
                let g = Permutation::parse_cycles(d, line).map_err(|e| parse_err(e.to_string()))?;
                generators.push(g);
            }
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        message: "missing `degree n` line".into(),
    })?;
    Ok(GroupSpec { degree, generators })
}
