use ctxlab::gallery::anchors::Anchor;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// The outcome of one command. Contains nothing time- or host-dependent, so
/// the same input always renders to the same bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub scenario: String,
    pub verdict: String,
    /// Each statement checked on the way, including re-verification of the
    /// certificate.
    pub checks: Vec<Anchor>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<serde_json::Value>,
}

impl Report {
    pub fn new(command: &str, scenario: &str) -> Self {
        Self {
            command: command.into(),
            scenario: scenario.into(),
            verdict: String::new(),
            checks: Vec::new(),
            certificate: None,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Anchor { name: name.into(), passed, detail: detail.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = format!("{} {}: {}\n", self.command, self.scenario, self.verdict);
                for c in &self.checks {
                    let mark = if c.passed { "pass" } else { "FAIL" };
                    if c.detail.is_empty() {
                        s += &format!("  [{mark}] {}\n", c.name);
                    } else {
                        s += &format!("  [{mark}] {} ({})\n", c.name, c.detail);
                    }
                }
                if let Some(cert) = &self.certificate {
                    s += "certificate:\n";
                    for line in serde_json::to_string_pretty(cert).expect("certificate serializes").lines() {
                        s += &format!("  {line}\n");
                    }
                }
                s
            }
        }
    }
}
