use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::error::Kind;

/// Text and JSON renderings of one command's result, plus the failure
/// class (if any) that sets the exit code.
#[derive(Debug, Default)]
pub struct Report {
    text: String,
    json: Map<String, Value>,
    pub failure: Option<Kind>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.set("command", command);
        r
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.json.insert(key.to_string(), value.into());
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    /// Key/value line for the text view.
    pub fn field(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.text, "{key}: {value}");
    }

    pub fn block(&mut self, title: &str, body: &str) {
        let _ = writeln!(self.text, "{title}:");
        for l in body.lines() {
            let _ = writeln!(self.text, "  {l}");
        }
    }

    pub fn fail(&mut self, kind: Kind) {
        // the most severe failure wins
        if self.failure.is_none_or(|k| k.code() < kind.code()) {
            self.failure = Some(kind);
        }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&Value::Object(self.json.clone())).expect("serializable");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}
