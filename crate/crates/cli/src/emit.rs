//! Output plumbing: fixed-precision JSON, JSON-lines diagnostics, exit codes.

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::{json, Value};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

pub const EXIT_IO: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_NO_REGIME: i32 = 4;
pub const EXIT_WINDOW: i32 = 5;
pub const EXIT_RANGE: i32 = 6;
pub const EXIT_INADMISSIBLE: i32 = 7;

/// A failure that ends the run with a specific exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
    pub details: Value,
}

impl CliError {
    pub fn new(code: i32, kind: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            kind,
            message: message.into(),
            details: Value::Null,
        }
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    pub fn io(path: &Path, err: io::Error) -> Self {
        Self::new(EXIT_IO, "io", format!("{}: {err}", path.display()))
    }

    pub fn config(message: impl Into<String>) -> Self {
        Self::new(EXIT_CONFIG, "config", message)
    }
}

/// Pretty JSON with every float written to 17 significant digits.
struct Sig17<'a>(PrettyFormatter<'a>);

impl Formatter for Sig17<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(stretchlim::output::fmt17(value).as_bytes())
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17(PrettyFormatter::new()));
    value.serialize(&mut ser).expect("in-memory serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// One JSON object per line on standard error.
pub fn diagnostic(level: &str, kind: &str, message: &str, details: &Value) {
    let mut line = json!({ "level": level, "kind": kind, "message": message });
    if !details.is_null() {
        line["details"] = details.clone();
    }
    eprintln!("{line}");
}

pub fn report(err: &CliError) {
    diagnostic("error", err.kind, &err.message, &err.details);
}

/// Collects the files written by a command.
pub struct Outputs {
    prefix: String,
    written: Vec<PathBuf>,
}

impl Outputs {
    pub fn new(prefix: String) -> Self {
        Self {
            prefix,
            written: Vec::new(),
        }
    }

    pub fn path(&self, suffix: &str) -> PathBuf {
        PathBuf::from(format!("{}{suffix}", self.prefix))
    }

    pub fn write(&mut self, suffix: &str, contents: &[u8]) -> Result<(), CliError> {
        let path = self.path(suffix);
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        }
        fs::write(&path, contents).map_err(|e| CliError::io(&path, e))?;
        self.written.push(path);
        Ok(())
    }

    /// Writes through a callback into an in-memory buffer first.
    pub fn write_with(
        &mut self,
        suffix: &str,
        f: impl FnOnce(&mut Vec<u8>) -> io::Result<()>,
    ) -> Result<(), CliError> {
        let mut buf = Vec::new();
        f(&mut buf).map_err(|e| CliError::io(&self.path(suffix), e))?;
        self.write(suffix, &buf)
    }

    pub fn write_json<T: Serialize>(&mut self, suffix: &str, value: &T) -> Result<(), CliError> {
        self.write(suffix, to_json(value).as_bytes())
    }

    /// Prints the list of written files to standard output.
    pub fn finish(self) {
        let files: Vec<String> = self
            .written
            .iter()
            .map(|p| p.display().to_string())
            .collect();
        println!("{}", json!({ "written": files }));
    }
}
