use std::fs;
use std::path::Path;

use conelab::json::{parse, to_canonical_string};
use conelab::{approx, format_rational, Rational};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Malformed or schema-violating input.
    Input,
    /// Well-formed input with a negative answer (non-membership,
    /// inconsistent dimensions, failing conditions).
    Semantic,
    /// A checked identity did not hold.
    Invariant,
}

impl Kind {
    pub fn code(self) -> u8 {
        match self {
            Kind::Input => 1,
            Kind::Semantic => 2,
            Kind::Invariant => 3,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub kind: Kind,
    pub message: String,
    /// Report still printed to stdout before exiting.
    pub output: Option<Value>,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Self { kind: Kind::Input, message: message.into(), output: None }
    }

    pub fn semantic(message: impl Into<String>) -> Self {
        Self { kind: Kind::Semantic, message: message.into(), output: None }
    }

    pub fn invariant(message: impl Into<String>) -> Self {
        Self { kind: Kind::Invariant, message: message.into(), output: None }
    }

    pub fn with_output(mut self, v: Value) -> Self {
        self.output = Some(v);
        self
    }
}

pub type CmdResult = Result<(), Failure>;

pub fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Prints canonical JSON to stdout, or writes it to `out`.
pub fn emit(v: &Value, out: Option<&Path>) -> CmdResult {
    let text = to_canonical_string(v);
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A rational as its canonical string, or as `{"exact", "approx"}` when
/// decimal renderings were requested.
pub fn rational(q: &Rational, with_approx: bool) -> Value {
    if with_approx {
        json!({ "exact": format_rational(q), "approx": format!("{}", approx(q)) })
    } else {
        Value::String(format_rational(q))
    }
}
