use std::fs;
use std::io::Read;
use std::path::Path;

use gag_core::format::{parse_any, PAPER_EXAMPLE};
use gag_core::GammaGroupoid;

use crate::CliError;

pub const PAPER_EXAMPLE_NAME: &str = "@paper-example";

/// Resolves `@paper-example`, `-` (stdin), a file path, or inline model text.
pub fn load_model(spec: &str) -> Result<GammaGroupoid, CliError> {
    let (origin, text) = if spec == PAPER_EXAMPLE_NAME {
        (spec.to_string(), PAPER_EXAMPLE.to_string())
    } else if spec == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Data(format!("stdin: {e}")))?;
        ("<stdin>".to_string(), buf)
    } else if looks_inline(spec) {
        ("<inline>".to_string(), spec.to_string())
    } else if Path::new(spec).exists() {
        let text = fs::read_to_string(spec).map_err(|e| CliError::Data(format!("{spec}: {e}")))?;
        (spec.to_string(), text)
    } else if spec.starts_with('@') {
        return Err(CliError::Usage(format!(
            "unknown built-in model `{spec}` (available: {PAPER_EXAMPLE_NAME})"
        )));
    } else {
        return Err(CliError::Data(format!("{spec}: no such file")));
    };
    parse_any(&text).map_err(|e| CliError::Data(format!("{origin}: {e}")))
}

fn looks_inline(spec: &str) -> bool {
    let t = spec.trim_start();
    t.starts_with('{') || t.starts_with("gag ") || spec.contains('\n')
}
