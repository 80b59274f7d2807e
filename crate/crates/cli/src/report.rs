//! Reports: machine-readable `key=value` lines or a JSON object on stdout,
//! human prose on stderr.

use std::fmt;
use std::io::Write;

use serde_json::{json, Map, Value};

pub const SCHEMA: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    pub fn of(b: Option<bool>) -> Verdict {
        match b {
            Some(true) => Verdict::Pass,
            Some(false) => Verdict::Fail,
            None => Verdict::Inconclusive,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// One verdict-carrying line, e.g. `pair=(1,2) dim=0 PASS`.
#[derive(Clone, Debug)]
pub struct Check {
    pub fields: Vec<(String, Value)>,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub fields: Vec<(String, Value)>,
    pub checks: Vec<Check>,
    pub prose: Vec<String>,
    /// Overrides the verdict derived from the checks when set.
    pub verdict: Option<Verdict>,
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            fields: Vec::new(),
            checks: Vec::new(),
            prose: Vec::new(),
            verdict: None,
        }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Report {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn check(&mut self, fields: Vec<(&str, Value)>, verdict: Verdict) {
        let fields = fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        self.checks.push(Check { fields, verdict });
    }

    pub fn say(&mut self, line: impl Into<String>) {
        self.prose.push(line.into());
    }

    /// The worst verdict among the checks; a report without checks passes.
    pub fn verdict(&self) -> Verdict {
        self.verdict.unwrap_or_else(|| self.checks.iter().map(|c| c.verdict).max().unwrap_or(Verdict::Pass))
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("schema".into(), json!(SCHEMA));
        obj.insert("command".into(), json!(self.command));
        for (k, v) in &self.fields {
            obj.insert(k.clone(), v.clone());
        }
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut m: Map<String, Value> = c.fields.iter().cloned().collect();
                m.insert("verdict".into(), json!(c.verdict.to_string()));
                Value::Object(m)
            })
            .collect();
        obj.insert("checks".into(), Value::Array(checks));
        obj.insert("verdict".into(), json!(self.verdict().to_string()));
        Value::Object(obj)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("schema={SCHEMA}\ncommand={}\n", self.command);
        for (k, v) in &self.fields {
            out.push_str(&format!("{k}={}\n", plain(v)));
        }
        for c in &self.checks {
            let parts: Vec<String> = c.fields.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
            out.push_str(&format!("{} {}\n", parts.join(" "), c.verdict));
        }
        out.push_str(&format!("verdict={}\n", self.verdict()));
        out
    }

    pub fn emit(&self, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Text => out.write_all(self.to_text().as_bytes())?,
            Format::Json => {
                let s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                writeln!(out, "{s}")?;
            }
        }
        for line in &self.prose {
            writeln!(err, "{line}")?;
        }
        Ok(())
    }
}
