use std::fs;
use std::path::Path;

use pebbling_core::graph::{parse_edge_list, parse_graph6, GeneratorSpec, Graph};
use pebbling_core::optimal::Cap;
use pebbling_core::pebbling::Configuration;

use crate::CliError;

/// Resolves `--graph`: a generator spec (`path:6`), a file holding an edge
/// list or graph6 text, or an inline graph6 string, tried in that order.
pub fn load_graph(source: &str) -> Result<Graph, CliError> {
    if let Some((kind, _)) = source.split_once(':') {
        if kind.chars().all(|c| c.is_ascii_lowercase()) && !Path::new(source).exists() {
            return Ok(source.parse::<GeneratorSpec>()?.build());
        }
    }
    let path = Path::new(source);
    if path.is_file() {
        let text =
            fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{source}: {e}")))?;
        return parse_file(&text);
    }
    Ok(parse_graph6(source.trim())?)
}

fn parse_file(text: &str) -> Result<Graph, CliError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.split_whitespace().count() == 2 {
        Ok(parse_edge_list(text)?)
    } else {
        Ok(parse_graph6(first)?)
    }
}

pub fn parse_cap(text: &str) -> Result<Cap, String> {
    match text {
        "unbounded" | "inf" | "none" => Ok(Cap::Unbounded),
        _ => match text.parse::<u32>() {
            Ok(t) if t >= 1 => Ok(Cap::AtMost(t)),
            _ => Err(format!(
                "expected a cap of at least 1 or `unbounded`, got `{text}`"
            )),
        },
    }
}

pub fn parse_config(text: &str, n: usize) -> Result<Configuration, CliError> {
    let counts = text
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad pebble count `{c}` in --config")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if counts.len() != n {
        return Err(CliError::Usage(format!(
            "--config has {} entries but the graph has {n} vertices",
            counts.len()
        )));
    }
    Ok(Configuration::new(counts))
}
