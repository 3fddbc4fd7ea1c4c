use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The tested property holds (exit 0).
    Holds,
    /// A value was computed; nothing to refute (exit 0).
    Computed,
    /// The property fails; the result carries a witness (exit 1).
    Refuted,
    /// Usage or input error (exit 2).
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Holds | Verdict::Computed => 0,
            Verdict::Refuted => 1,
            Verdict::Error => 2,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Computed => "computed",
            Verdict::Refuted => "refuted",
            Verdict::Error => "error",
        }
    }
}

/// Machine-readable outcome of one CLI run. Serialization is byte-identical
/// for identical inputs; `elapsed_ms` is only filled when timing is requested.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub verdict: Verdict,
    pub summary: String,
    pub warnings: Vec<String>,
    pub result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input: {}\n", self.input_digest));
        out.push_str(&format!("verdict: {}\n", self.verdict.as_str()));
        out.push_str(&format!("summary: {}\n", self.summary));
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        if let Value::Object(map) = &self.result {
            for (key, value) in map {
                out.push_str(&format!("{key}: {value}\n"));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed_ms: {ms}\n"));
        }
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Verdict::Holds.exit_code(), 0);
        assert_eq!(Verdict::Computed.exit_code(), 0);
        assert_eq!(Verdict::Refuted.exit_code(), 1);
        assert_eq!(Verdict::Error.exit_code(), 2);
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn timing_is_omitted_by_default() {
        let report = RunReport {
            command: "blocker".into(),
            input_digest: digest(b"x"),
            verdict: Verdict::Computed,
            summary: "s".into(),
            warnings: vec![],
            result: serde_json::json!({"b": 1, "a": [1, 2]}),
            elapsed_ms: None,
        };
        let json = report.to_json();
        assert!(!json.contains("elapsed_ms"));
        let back: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(
            report.to_text(),
            format!(
                "command: blocker\ninput: {}\nverdict: computed\nsummary: s\na: [1,2]\nb: 1\n",
                digest(b"x")
            )
        );
    }
}
