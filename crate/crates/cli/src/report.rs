use invrig::algebra::LawStatus;
use invrig::Error;
use serde_json::{json, Map, Value};

/// Collected output of one command. Text mode keeps human-readable lines;
/// machine mode keeps one JSON object per line, keys in insertion order.
pub struct Report {
    machine: bool,
    lines: Vec<String>,
    violated: bool,
}

impl Report {
    pub fn new(machine: bool) -> Self {
        Report {
            machine,
            lines: Vec::new(),
            violated: false,
        }
    }

    pub fn record(&mut self, kind: &str, fields: Value, text: impl Into<String>) {
        if self.machine {
            let mut m = Map::new();
            m.insert("record".into(), kind.into());
            if let Value::Object(f) = fields {
                m.extend(f);
            }
            self.lines.push(Value::Object(m).to_string());
        } else {
            let t = text.into();
            if !t.is_empty() {
                self.lines.push(t);
            }
        }
    }

    /// Line that only appears in machine output.
    pub fn machine_only(&mut self, kind: &str, fields: Value) {
        if self.machine {
            self.record(kind, fields, "");
        }
    }

    /// A failed check. Marks the report so the process exits with 1.
    pub fn violation(&mut self, check: &str, witness: Vec<String>) {
        self.violated = true;
        let text = format!("VIOLATION {check}; witness: ({})", witness.join(", "));
        self.record(
            "violation",
            json!({ "check": check, "witness": witness }),
            text,
        );
    }

    pub fn violated(&self) -> bool {
        self.violated
    }

    pub fn render(&self) -> String {
        let mut s = self.lines.join("\n");
        if !s.is_empty() {
            s.push('\n');
        }
        s
    }
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    /// Bad input, bad usage or an exhausted search budget: exit 2.
    Usage(String),
    /// A law or theorem check failed: exit 1. Each entry is `(check, witness)`.
    Violation(Vec<(String, Vec<String>)>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LawsViolated(rep) => Failure::Violation(
                rep.entries
                    .into_iter()
                    .filter(|e| e.status == LawStatus::Fail)
                    .map(|e| (e.law.to_string(), e.witness.unwrap_or_default()))
                    .collect(),
            ),
            Error::BimoduleHypothesis { law, witness } => {
                Failure::Violation(vec![(law.to_string(), vec![witness])])
            }
            Error::Invariant(msg) => Failure::Violation(vec![("invariant".into(), vec![msg])]),
            other => Failure::Usage(other.to_string()),
        }
    }
}

pub fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}
