use std::collections::BTreeMap;
use std::fmt::{Display, Write as _};

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Stated in the published computation being reproduced.
    Published,
    /// Obtained from an independent computation.
    Derived,
    /// Immediate from the definitions.
    Trivial,
}

impl Source {
    pub fn as_str(&self) -> &'static str {
        match self {
            Source::Published => "published",
            Source::Derived => "derived",
            Source::Trivial => "trivial",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub claim: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub source: Source,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Claim {
    /// Passes when both values print identically.
    pub fn equal(claim: impl Into<String>, field: Option<&str>, expected: impl Display, computed: impl Display, source: Source) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        Claim {
            claim: claim.into(),
            field: field.map(str::to_string),
            pass: expected == computed,
            expected,
            computed,
            source,
            counterexample: None,
        }
    }

    /// A yes/no claim; `counterexample` is kept only on failure.
    pub fn holds(claim: impl Into<String>, field: Option<&str>, ok: bool, source: Source, counterexample: Option<String>) -> Self {
        Claim {
            claim: claim.into(),
            field: field.map(str::to_string),
            expected: "true".into(),
            computed: ok.to_string(),
            pass: ok,
            source,
            counterexample: if ok { None } else { counterexample },
        }
    }

    /// Explicit verdict with printed expected and computed values.
    pub fn verdict(
        claim: impl Into<String>,
        field: Option<&str>,
        expected: impl Display,
        computed: impl Display,
        pass: bool,
        source: Source,
        counterexample: Option<String>,
    ) -> Self {
        Claim {
            claim: claim.into(),
            field: field.map(str::to_string),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            source,
            counterexample: if pass { None } else { counterexample },
        }
    }

    /// A claim that could not be evaluated because the computation failed.
    pub fn error(claim: impl Into<String>, field: Option<&str>, err: impl Display, source: Source) -> Self {
        Claim {
            claim: claim.into(),
            field: field.map(str::to_string),
            expected: "a result".into(),
            computed: format!("error: {err}"),
            pass: false,
            source,
            counterexample: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub parameters: BTreeMap<String, Value>,
    pub claims: Vec<Claim>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
    pub tool_version: String,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(check: &str) -> Self {
        VerificationReport {
            check: check.to_string(),
            parameters: BTreeMap::new(),
            claims: vec![],
            notes: vec![],
            timings_ms: None,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            pass: true,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.parameters.insert(key.to_string(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn push(&mut self, claim: Claim) {
        self.pass &= claim.pass;
        self.claims.push(claim);
    }

    pub fn extend(&mut self, claims: impl IntoIterator<Item = Claim>) {
        for c in claims {
            self.push(c);
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn timing(&mut self, key: &str, ms: u64) {
        self.timings_ms.get_or_insert_with(BTreeMap::new).insert(key.to_string(), ms);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check: {}", self.check);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for c in &self.claims {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let field = c.field.as_deref().map(|f| format!("[{f}] ")).unwrap_or_default();
            let _ = writeln!(out, "[{tag}] {field}{} ({})", c.claim, c.source.as_str());
            let _ = writeln!(out, "       expected: {}", c.expected);
            let _ = writeln!(out, "       computed: {}", c.computed);
            if let Some(ce) = &c.counterexample {
                let _ = writeln!(out, "       counterexample: {ce}");
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        if let Some(t) = &self.timings_ms {
            for (k, v) in t {
                let _ = writeln!(out, "time {k}: {v} ms");
            }
        }
        let passed = self.claims.iter().filter(|c| c.pass).count();
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "verdict: {verdict} ({passed}/{} claims)", self.claims.len());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_tracks_claims() {
        let mut r = VerificationReport::new("demo");
        r.push(Claim::equal("degree", Some("Q"), 2, 2, Source::Published));
        assert!(r.pass);
        r.push(Claim::holds("commutes", None, false, Source::Trivial, Some("x1".into())));
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
        let json = r.to_json();
        assert!(json.contains("\"source\": \"published\""));
        assert!(json.contains("\"counterexample\": \"x1\""));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(r.to_text().ends_with("verdict: FAIL (1/2 claims)\n"));
    }
}
