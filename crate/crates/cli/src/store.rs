//! The on-disk MZV cache and sample-point files.

use std::fs;
use std::path::Path;

use mzv_hopf::index::parse_index;
use mzv_hopf::numeric::{MzvCache, MzvValue, Sample, TwoFloat};
use mzv_hopf::poly::parse_rational;
use serde_json::{json, Map, Value};

use crate::CliError;

/// Reads a cache written by [`save_cache`]. A missing file is an empty cache.
pub fn load_cache(path: &Path) -> Result<MzvCache, CliError> {
    let mut cache = MzvCache::new();
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
        Err(e) => return Err(CliError::Config(format!("cannot read cache {}: {e}", path.display()))),
    };
    let bad = |why: &str| CliError::Config(format!("malformed cache {}: {why}", path.display()));
    let root: Value = serde_json::from_str(&text).map_err(|e| bad(&e.to_string()))?;
    let entries = root.get("entries").and_then(Value::as_object).ok_or_else(|| bad("missing entries"))?;
    for (key, v) in entries {
        let k = parse_index(key).map_err(|e| bad(&e.to_string()))?;
        let field = |name: &str| v.get(name).and_then(Value::as_f64).ok_or_else(|| bad(&format!("{key}: {name}")));
        let value = TwoFloat::new_add(field("hi")?, field("lo")?);
        cache.insert(k, MzvValue { value, error: field("error")? });
    }
    Ok(cache)
}

pub fn save_cache(path: &Path, cache: &MzvCache) -> Result<(), CliError> {
    let mut entries = Map::new();
    for (k, v) in cache.entries() {
        entries.insert(k.to_string(), json!({"hi": v.value.hi(), "lo": v.value.lo(), "error": v.error}));
    }
    let text = serde_json::to_string_pretty(&json!({"version": 1, "entries": entries})).expect("cache serializes");
    fs::write(path, text + "\n").map_err(|e| CliError::Runtime(format!("cannot write cache {}: {e}", path.display())))
}

/// One sample `x, y, A, B` per line, separated by commas or whitespace.
/// Blank lines and `#` comments are skipped.
pub fn parse_samples(text: &str) -> Result<Vec<Sample>, CliError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty()).collect();
        if fields.len() != 4 {
            return Err(CliError::Config(format!("sample line {}: expected 4 values, got {}", n + 1, fields.len())));
        }
        let mut values = Vec::with_capacity(4);
        for f in fields {
            values.push(parse_rational(f).map_err(|e| CliError::Config(format!("sample line {}: {e}", n + 1)))?);
        }
        let [x, y, a, b]: [_; 4] = values.try_into().expect("four values");
        out.push(Sample::new(x, y, a, b));
    }
    if out.is_empty() {
        return Err(CliError::Config("sample file has no points".into()));
    }
    Ok(out)
}

pub fn load_samples(path: &Path) -> Result<Vec<Sample>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read samples {}: {e}", path.display())))?;
    parse_samples(&text)
}
