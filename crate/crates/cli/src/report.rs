//! Command reports: a deterministic text body with `== section ==` markers, or
//! the same content as JSON with sorted keys. Timing is kept outside the body.

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

pub struct Section {
    pub title: String,
    entries: Vec<(String, Value)>,
}

impl Section {
    pub fn put(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.entries.push((key.to_string(), value.into()));
        self
    }
}

pub struct Report {
    command: String,
    inputs: Vec<(String, String)>,
    degree: Option<(usize, String)>,
    notes: Vec<String>,
    sections: Vec<Section>,
    checks: Vec<Check>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            inputs: vec![],
            degree: None,
            notes: vec![],
            sections: vec![],
            checks: vec![],
        }
    }

    pub fn input(&mut self, label: &str, content: &str) {
        self.inputs.push((label.to_string(), sha256_hex(content.as_bytes())));
    }

    pub fn degree(&mut self, d: usize, why: impl Into<String>) {
        self.degree = Some((d, why.into()));
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn section(&mut self, title: &str) -> &mut Section {
        self.sections.push(Section {
            title: title.to_string(),
            entries: vec![],
        });
        self.sections.last_mut().expect("just pushed")
    }

    pub fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("== eqos report ==\n");
        out.push_str(&format!("command: {}\n", self.command));
        for (label, digest) in &self.inputs {
            out.push_str(&format!("input: {label} sha256={digest}\n"));
        }
        if let Some((d, why)) = &self.degree {
            out.push_str(&format!("degree: {d} ({why})\n"));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        for s in &self.sections {
            out.push_str(&format!("== {} ==\n", s.title));
            for (k, v) in &s.entries {
                match v {
                    Value::Array(items) if items.iter().all(Value::is_string) && !items.is_empty() => {
                        out.push_str(&format!("{k}:\n"));
                        for item in items {
                            out.push_str(&format!("  {}\n", item.as_str().expect("string")));
                        }
                    }
                    Value::String(text) => out.push_str(&format!("{k}: {text}\n")),
                    other => out.push_str(&format!("{k}: {other}\n")),
                }
            }
        }
        if !self.checks.is_empty() {
            out.push_str("== checks ==\n");
            for c in &self.checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
            }
        }
        out.push_str(&format!("== status: {} ==\n", if self.passed() { "PASS" } else { "FAIL" }));
        out
    }

    pub fn to_json(&self) -> Value {
        let mut sections = Map::new();
        for s in &self.sections {
            let body: Map<String, Value> = s.entries.iter().cloned().collect();
            sections.insert(s.title.clone(), Value::Object(body));
        }
        json!({
            "command": self.command,
            "inputs": self.inputs.iter().map(|(l, d)| json!({"path": l, "sha256": d})).collect::<Vec<_>>(),
            "degree": self.degree.as_ref().map(|(d, why)| json!({"value": d, "reason": why})),
            "notes": self.notes,
            "sections": sections,
            "checks": self.checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>(),
            "status": if self.passed() { "PASS" } else { "FAIL" },
        })
    }
}
