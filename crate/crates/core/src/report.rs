//! Claim-by-claim verification reports.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    /// The claim was checked and holds.
    Pass,
    /// The toolkit broke one of its own contracts (a certificate failed to replay).
    Fail,
    /// The exact oracle contradicts the stated claim.
    Discrepancy,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Discrepancy => "DISCREPANCY",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimEntry {
    pub id: String,
    /// The statement being checked, in the source's notation.
    pub claim: String,
    pub verdict: Verdict,
    pub detail: String,
    pub certificate: serde_json::Value,
}

impl ClaimEntry {
    pub fn new(
        id: impl Into<String>,
        claim: impl Into<String>,
        verdict: Verdict,
        detail: impl Into<String>,
        certificate: serde_json::Value,
    ) -> Self {
        Self {
            id: id.into(),
            claim: claim.into(),
            verdict,
            detail: detail.into(),
            certificate,
        }
    }

    /// PASS when `ok`, otherwise `otherwise`.
    pub fn checked(
        id: impl Into<String>,
        claim: impl Into<String>,
        ok: bool,
        otherwise: Verdict,
        detail: impl Into<String>,
        certificate: serde_json::Value,
    ) -> Self {
        let verdict = if ok { Verdict::Pass } else { otherwise };
        Self::new(id, claim, verdict, detail, certificate)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ClaimReport {
    pub entries: Vec<ClaimEntry>,
    pub summary: Summary,
}

impl ClaimReport {
    /// Sorts by claim id and tallies verdicts.
    pub fn new(mut entries: Vec<ClaimEntry>) -> Self {
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |v: Verdict| entries.iter().filter(|e| e.verdict == v).count();
        let summary = Summary {
            total: entries.len(),
            pass: count(Verdict::Pass),
            fail: count(Verdict::Fail),
            discrepancy: count(Verdict::Discrepancy),
        };
        Self { entries, summary }
    }

    pub fn has_fail(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn get(&self, id: &str) -> Option<&ClaimEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let disc: Vec<_> = self
            .entries
            .iter()
            .filter(|e| e.verdict == Verdict::Discrepancy)
            .collect();
        if !disc.is_empty() {
            out.push_str("DISCREPANCIES\n");
            for e in &disc {
                out.push_str(&format!("  {}: {}\n", e.id, e.detail));
            }
            out.push('\n');
        }
        for e in &self.entries {
            out.push_str(&format!(
                "[{:<11}] {}  {}\n",
                e.verdict.to_string(),
                e.id,
                e.claim
            ));
            out.push_str(&format!("              {}\n", e.detail));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "\n{} claims: {} pass, {} fail, {} discrepancy\n",
            s.total, s.pass, s.fail, s.discrepancy
        ));
        out
    }
}
