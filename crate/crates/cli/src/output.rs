use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::cli::Format;
use crate::settings::Settings;

/// How a command ended, before errors are considered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// a checked property failed; witnesses are saved
    Violation,
    BudgetExhausted,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::BudgetExhausted => 3,
        }
    }
}

/// Everything a command produces.
pub struct Outcome {
    pub report: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: Vec<String>,
    /// extra artifacts written next to the report
    pub files: Vec<(String, Vec<u8>)>,
    pub witnesses: Option<Value>,
    pub status: Status,
    /// printed instead of the report when there is no --out (gen commands)
    pub stdout_override: Option<String>,
}

impl Outcome {
    pub fn new(report: impl Serialize) -> Result<Outcome> {
        Ok(Outcome {
            report: serde_json::to_value(report)?,
            header: Vec::new(),
            rows: Vec::new(),
            text: Vec::new(),
            files: Vec::new(),
            witnesses: None,
            status: Status::Ok,
            stdout_override: None,
        })
    }

    pub fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.iter().map(|s| s.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn text(mut self, lines: Vec<String>) -> Self {
        self.text = lines;
        self
    }

    pub fn violation(mut self, witnesses: Value) -> Self {
        self.status = Status::Violation;
        self.witnesses = Some(witnesses);
        self
    }

    /// Text lines default to `key: value` of the top-level report.
    fn text_lines(&self) -> Vec<String> {
        if !self.text.is_empty() {
            return self.text.clone();
        }
        match &self.report {
            Value::Object(m) => m.iter().map(|(k, v)| format!("{k}: {}", compact(v))).collect(),
            v => vec![compact(v)],
        }
    }

    fn csv_bytes(&self) -> Result<Vec<u8>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.header.is_empty() {
            w.write_record(["key", "value"])?;
            if let Value::Object(m) = &self.report {
                for (k, v) in m {
                    w.write_record([k.as_str(), &compact(v)])?;
                }
            }
        } else {
            w.write_record(&self.header)?;
            for row in &self.rows {
                w.write_record(row)?;
            }
        }
        Ok(w.into_inner().map_err(|e| e.into_error())?)
    }

    fn render(&self, format: Format) -> Result<Vec<u8>> {
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report)?;
                s.push('\n');
                s.into_bytes()
            }
            Format::Csv => self.csv_bytes()?,
            Format::Text => {
                let mut s = self.text_lines().join("\n");
                s.push('\n');
                s.into_bytes()
            }
        })
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        v => v.to_string(),
    }
}

/// Moves every `seconds`/`within_limit` field out of the report so that
/// reruns are byte-identical; returns them keyed by JSON path.
pub fn strip_timings(v: &mut Value) -> BTreeMap<String, Value> {
    fn walk(v: &mut Value, path: &str, out: &mut BTreeMap<String, Value>) {
        match v {
            Value::Object(m) => {
                for key in ["seconds", "within_limit"] {
                    if let Some(t) = m.remove(key) {
                        out.insert(format!("{path}/{key}"), t);
                    }
                }
                for (k, child) in m.iter_mut() {
                    walk(child, &format!("{path}/{k}"), out);
                }
            }
            Value::Array(a) => {
                for (i, child) in a.iter_mut().enumerate() {
                    walk(child, &format!("{path}/{i}"), out);
                }
            }
            _ => {}
        }
    }
    let mut out = BTreeMap::new();
    walk(v, "", &mut out);
    out
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Serialize, serde::Deserialize)]
pub struct Manifest {
    pub tool: String,
    /// arguments after the program name, as given
    pub command_line: Vec<String>,
    pub settings: Settings,
    pub seeds: Vec<u64>,
    pub versions: BTreeMap<String, String>,
    pub wall_seconds: f64,
    pub timings: BTreeMap<String, Value>,
    pub exit_code: u8,
    /// file name -> sha256 of its bytes
    pub outputs: BTreeMap<String, String>,
}

pub fn versions() -> BTreeMap<String, String> {
    BTreeMap::from([
        ("ordsize-cli".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("ordsize-core".to_string(), ordsize::VERSION.to_string()),
    ])
}

pub struct RunInfo<'a> {
    pub argv: &'a [String],
    pub settings: &'a Settings,
    pub wall_seconds: f64,
    pub timings: BTreeMap<String, Value>,
}

fn write(dir: &Path, name: &str, bytes: &[u8], digests: &mut BTreeMap<String, String>) -> Result<()> {
    let p = dir.join(name);
    std::fs::write(&p, bytes).with_context(|| format!("writing {}", p.display()))?;
    digests.insert(name.to_string(), sha256_hex(bytes));
    Ok(())
}

/// Prints to stdout and, with --out, writes the report files and manifest.
pub fn emit(o: &Outcome, info: RunInfo) -> Result<()> {
    let fmt = info.settings.format;
    let body = o.render(fmt)?;
    let witnesses = match &o.witnesses {
        Some(w) => Some(serde_json::to_string_pretty(w)? + "\n"),
        None => None,
    };
    match &info.settings.out {
        None => {
            match &o.stdout_override {
                Some(s) => print!("{s}"),
                None => print!("{}", String::from_utf8_lossy(&body)),
            }
            if let Some(w) = witnesses {
                let p = Path::new("ordsize-witnesses.json");
                std::fs::write(p, w).context("writing ordsize-witnesses.json")?;
                eprintln!("witnesses saved to {}", p.display());
            }
        }
        Some(dir) => {
            print!("{}", String::from_utf8_lossy(&body));
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let mut digests = BTreeMap::new();
            let json = serde_json::to_string_pretty(&o.report)? + "\n";
            write(dir, "report.json", json.as_bytes(), &mut digests)?;
            match fmt {
                Format::Json => {}
                Format::Csv => write(dir, "report.csv", &body, &mut digests)?,
                Format::Text => write(dir, "report.txt", &body, &mut digests)?,
            }
            for (name, bytes) in &o.files {
                write(dir, name, bytes, &mut digests)?;
            }
            if let Some(w) = witnesses {
                write(dir, "witnesses.json", w.as_bytes(), &mut digests)?;
                eprintln!("witnesses saved to {}", dir.join("witnesses.json").display());
            }
            let manifest = Manifest {
                tool: "ordsize".into(),
                command_line: info.argv.to_vec(),
                settings: info.settings.clone(),
                seeds: vec![info.settings.seed],
                versions: versions(),
                wall_seconds: info.wall_seconds,
                timings: info.timings,
                exit_code: o.status.code(),
                outputs: digests,
            };
            std::fs::write(dir.join("manifest.json"), serde_json::to_string_pretty(&manifest)? + "\n")?;
        }
    }
    Ok(())
}
