use std::fmt;

use crate::canon::ess_equal;
use crate::diagram::Morphism;
use crate::error::Result;
use crate::rep::{phi, WeightMap};

/// Outcome of one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Line-oriented verification report.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn flag(&mut self, name: impl Into<String>, pass: bool) {
        self.push(name, pass, "");
    }

    /// Records `lhs = rhs` in the quotient, with the differing matrix
    /// entries on failure.
    pub fn ess_eq(&mut self, name: impl Into<String>, lhs: &Morphism, rhs: &Morphism) -> Result<bool> {
        if !ess_equal(lhs, rhs)? {
            let detail = matrix_diff(&phi(lhs)?, &phi(rhs)?);
            self.push(name, false, detail);
            return Ok(false);
        }
        self.flag(name, true);
        Ok(true)
    }

    /// Records `lhs = rhs` as an exact equality of normalized morphisms.
    pub fn syn_eq(&mut self, name: impl Into<String>, lhs: &Morphism, rhs: &Morphism) -> bool {
        let pass = lhs == rhs;
        let detail = if pass { String::new() } else { format!("lhs {lhs} rhs {rhs}") };
        self.push(name, pass, detail);
        pass
    }

    pub fn map_eq(&mut self, name: impl Into<String>, lhs: &WeightMap, rhs: &WeightMap) -> bool {
        let pass = lhs == rhs;
        let detail = if pass { String::new() } else { matrix_diff(lhs, rhs) };
        self.push(name, pass, detail);
        pass
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.pass {
                writeln!(f, "PASS {}", c.name)?;
            } else if c.detail.is_empty() {
                writeln!(f, "FAIL {}", c.name)?;
            } else {
                writeln!(f, "FAIL {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Up to four entries where the two maps differ.
pub fn matrix_diff(a: &WeightMap, b: &WeightMap) -> String {
    if (a.dom(), a.cod()) != (b.dom(), b.cod()) {
        return format!("shapes {}->{} and {}->{}", a.dom(), a.cod(), b.dom(), b.cod());
    }
    let mut keys: Vec<_> = a.entries().map(|(r, c, _)| (r, c)).chain(b.entries().map(|(r, c, _)| (r, c))).collect();
    keys.sort();
    keys.dedup();
    let diffs: Vec<String> = keys
        .into_iter()
        .filter(|&(r, c)| a.get(r, c) != b.get(r, c))
        .take(4)
        .map(|(r, c)| format!("[{r},{c}] {} vs {}", a.get(r, c), b.get(r, c)))
        .collect();
    diffs.join("; ")
}
