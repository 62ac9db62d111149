use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::fmt;

use crate::error::Result;
use crate::nodal::SweepReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The resolution sweep or the certificate did not settle.
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// A domain count observed for an eigenfunction of degree `degree`
/// (eigenvalue `2(degree+1)`), kept for the Courant/Leydold checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuObservation {
    pub family: String,
    pub degree: u32,
    pub mu: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: Map<String, Value>,
    pub computed: Map<String, Value>,
    pub expected: Map<String, Value>,
    pub status: Status,
    /// True only for `Status::Pass`, which requires a stable sweep.
    pub pass: bool,
    pub resolution: Option<SweepReport>,
    pub observations: Vec<MuObservation>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(claim: &str) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            parameters: Map::new(),
            computed: Map::new(),
            expected: Map::new(),
            status: Status::Inconclusive,
            pass: false,
            resolution: None,
            observations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.parameters.insert(key.into(), v.into());
        self
    }

    pub fn computed(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.computed.insert(key.into(), v.into());
        self
    }

    pub fn expected(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.expected.insert(key.into(), v.into());
        self
    }

    pub fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.notes.push(s.into());
        self
    }

    pub fn observe(&mut self, family: &str, degree: u32, mu: usize) -> &mut Self {
        self.observations.push(MuObservation { family: family.into(), degree, mu });
        self
    }

    /// Sets the status: inconclusive unless `stable`, then pass iff `ok`.
    pub fn finish(mut self, ok: bool, stable: bool) -> Self {
        self.status = match (stable, ok) {
            (false, _) => Status::Inconclusive,
            (true, true) => Status::Pass,
            (true, false) => Status::Fail,
        };
        self.pass = self.status == Status::Pass;
        self
    }

    pub fn to_json(&self) -> Result<String> {
        to_sorted_json(self)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.claim, self.status)?;
        for (k, v) in &self.parameters {
            writeln!(f, "  {k} = {v}")?;
        }
        for (k, v) in &self.computed {
            match self.expected.get(k) {
                Some(e) => writeln!(f, "  {k}: {v} (expected {e})")?,
                None => writeln!(f, "  {k}: {v}")?,
            }
        }
        if let Some(r) = &self.resolution {
            let counts: Vec<String> = r.entries.iter().map(|e| format!("{}:{}", e.count, e.mu)).collect();
            writeln!(
                f,
                "  resolution (count:mu) {} {}",
                counts.join(" "),
                if r.stable { "stable" } else { "unstable" }
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Pretty JSON with object keys in sorted order at every level.
pub fn to_sorted_json<T: Serialize>(v: &T) -> Result<String> {
    let value = serde_json::to_value(v)?;
    let mut s = serde_json::to_string_pretty(&value)?;
    s.push('\n');
    Ok(s)
}
