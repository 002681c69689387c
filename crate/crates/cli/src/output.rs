use std::process::ExitCode;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

/// A usage or input error; exits with status 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

pub type CmdResult = Result<Output, Failure>;

/// Result of a command: human text, a structured body, and whether every
/// check it ran passed.
pub struct Output {
    pub text: String,
    pub body: Value,
    pub ok: bool,
}

impl Output {
    pub fn new<T: Serialize>(text: String, body: &T) -> Output {
        Output {
            text,
            body: serde_json::to_value(body).expect("serializable"),
            ok: true,
        }
    }

    pub fn checked(mut self, ok: bool) -> Output {
        self.ok = ok;
        self
    }

    pub fn emit(self, format: Format, command: Vec<String>) -> ExitCode {
        match format {
            Format::Text => print!("{}", self.text),
            Format::Structured => {
                let status = if self.ok { "ok" } else { "failed" };
                println!("{}", document(command, status, "result", self.body));
            }
        }
        if self.ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

#[derive(Serialize)]
struct Document {
    schema_version: u32,
    command: Vec<String>,
    status: &'static str,
}

fn document(command: Vec<String>, status: &'static str, key: &str, body: Value) -> String {
    let head = Document {
        schema_version: SCHEMA_VERSION,
        command,
        status,
    };
    let Value::Object(mut doc) = serde_json::to_value(head).expect("serializable") else {
        unreachable!("structs serialize to objects")
    };
    doc.insert(key.to_string(), body);
    serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable")
}

pub fn emit_error(format: Format, command: Vec<String>, msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    if format == Format::Structured {
        println!(
            "{}",
            document(command, "error", "error", Value::String(msg.to_string()))
        );
    }
    ExitCode::from(2)
}

#[derive(Debug, Default, Clone, Copy, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Serialize)]
pub struct RunReport<T: Serialize> {
    pub results: Vec<T>,
    pub summary: Summary,
}
