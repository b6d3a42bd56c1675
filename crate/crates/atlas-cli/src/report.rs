//! Verification reports: per-case verdicts with artifacts, rendered as
//! human text or machine JSON. Identical inputs and seeds give byte-identical
//! output except for the one timestamp line.

use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone)]
pub struct CaseReport {
    pub case_id: String,
    pub claim: String,
    pub mode: String,
    pub verdict: Verdict,
    pub detail: String,
    /// re-verifiable artifacts (certificates, transcripts, ledgers)
    pub artifacts: Vec<(String, String)>,
    pub seconds: f64,
}

pub struct ReportDocument {
    pub tool_version: String,
    pub seed: u64,
    pub manifest: String,
    pub cases: Vec<CaseReport>,
}

impl ReportDocument {
    pub fn new(manifest: &str, seed: u64) -> ReportDocument {
        ReportDocument {
            tool_version: format!("atlas {}", env!("CARGO_PKG_VERSION")),
            seed,
            manifest: manifest.to_string(),
            cases: Vec::new(),
        }
    }

    pub fn any_certified_failure(&self) -> bool {
        self.cases
            .iter()
            .any(|c| c.mode == "certified" && c.verdict == Verdict::Fail)
    }

    pub fn to_text(&self, timestamp: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "generated: {timestamp}");
        let _ = writeln!(out, "tool: {}", self.tool_version);
        let _ = writeln!(out, "manifest: {}", self.manifest);
        let _ = writeln!(out, "seed: {}", self.seed);
        for c in &self.cases {
            let _ = writeln!(
                out,
                "[{}] {} ({} | {}) {:.3}s",
                c.verdict.as_str(),
                c.case_id,
                c.claim,
                c.mode,
                c.seconds
            );
            for line in c.detail.lines() {
                let _ = writeln!(out, "    {line}");
            }
            for (name, body) in &c.artifacts {
                let _ = writeln!(out, "    artifact {name}:");
                for line in body.lines() {
                    let _ = writeln!(out, "      {line}");
                }
            }
        }
        let pass = self.cases.iter().filter(|c| c.verdict == Verdict::Pass).count();
        let fail = self.cases.iter().filter(|c| c.verdict == Verdict::Fail).count();
        let inc = self
            .cases
            .iter()
            .filter(|c| c.verdict == Verdict::Inconclusive)
            .count();
        let _ = writeln!(out, "summary: {pass} pass, {fail} fail, {inc} inconclusive");
        out
    }

    pub fn to_json(&self, timestamp: &str) -> String {
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"generated\": {},", json_str(timestamp));
        let _ = writeln!(out, "  \"tool\": {},", json_str(&self.tool_version));
        let _ = writeln!(out, "  \"manifest\": {},", json_str(&self.manifest));
        let _ = writeln!(out, "  \"seed\": {},", self.seed);
        let _ = writeln!(out, "  \"cases\": [");
        for (i, c) in self.cases.iter().enumerate() {
            let comma = if i + 1 < self.cases.len() { "," } else { "" };
            let _ = writeln!(out, "    {{");
            let _ = writeln!(out, "      \"case_id\": {},", json_str(&c.case_id));
            let _ = writeln!(out, "      \"claim\": {},", json_str(&c.claim));
            let _ = writeln!(out, "      \"mode\": {},", json_str(&c.mode));
            let _ = writeln!(out, "      \"verdict\": {},", json_str(c.verdict.as_str()));
            let _ = writeln!(out, "      \"detail\": {},", json_str(&c.detail));
            let _ = writeln!(out, "      \"seconds\": {:.3},", c.seconds);
            let _ = writeln!(out, "      \"artifacts\": {{");
            for (j, (name, body)) in c.artifacts.iter().enumerate() {
                let comma = if j + 1 < c.artifacts.len() { "," } else { "" };
                let _ = writeln!(out, "        {}: {}{comma}", json_str(name), json_str(body));
            }
            let _ = writeln!(out, "      }}");
            let _ = writeln!(out, "    }}{comma}");
        }
        let _ = writeln!(out, "  ]");
        out.push('}');
        out.push('\n');
        out
    }
}

pub fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04x}", c as u32));
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_renders_both_formats() {
        let mut doc = ReportDocument::new("m.cases", 7);
        doc.cases.push(CaseReport {
            case_id: "x".into(),
            claim: "base_size = 7".into(),
            mode: "certified".into(),
            verdict: Verdict::Pass,
            detail: "b = 7".into(),
            artifacts: vec![("cert".into(), "points: 1 2\n".into())],
            seconds: 0.5,
        });
        let text = doc.to_text("T");
        assert!(text.contains("[PASS] x"));
        assert!(text.contains("summary: 1 pass, 0 fail, 0 inconclusive"));
        let json = doc.to_json("T");
        assert!(json.contains("\"verdict\": \"PASS\""));
        assert!(!doc.any_certified_failure());
        // escaping
        assert_eq!(json_str("a\"b\nc"), "\"a\\\"b\\nc\"");
    }
}
