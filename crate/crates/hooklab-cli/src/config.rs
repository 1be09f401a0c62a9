//! Optional `key=value` configuration file; command-line flags take precedence.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};

/// Keys a config file may set; each matches the long flag of the same name.
pub const KEYS: &[&str] = &[
    "beta",
    "d",
    "family",
    "format",
    "identities",
    "max-size",
    "max-weight",
    "mode",
    "pair",
    "perm",
    "seed",
    "shape",
    "threads",
    "tolerance",
    "trials",
    "truncation",
];

#[derive(Clone, Debug, Default)]
pub struct FileConfig {
    values: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text)
    }

    /// Lines are `key = value`; blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                bail!("config line {}: expected key=value", no + 1);
            };
            let k = k.trim().replace('_', "-");
            if !KEYS.contains(&k.as_str()) {
                bail!("config line {}: unknown key '{k}'", no + 1);
            }
            values.insert(k, v.trim().to_string());
        }
        Ok(FileConfig { values })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// `flag` if given, else the parsed config value.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.get(key) {
            Some(v) => v.parse().map(Some).map_err(|e| anyhow::anyhow!("config key '{key}': {e}")),
            None => Ok(None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_overrides() {
        let c = FileConfig::parse("# comment\nseed = 7\nmax_size=5\n\n").unwrap();
        assert_eq!(c.pick::<u64>(None, "seed").unwrap(), Some(7));
        assert_eq!(c.pick::<u64>(Some(3), "seed").unwrap(), Some(3));
        assert_eq!(c.pick::<usize>(None, "max-size").unwrap(), Some(5));
        assert_eq!(c.pick::<usize>(None, "trials").unwrap(), None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        assert!(FileConfig::parse("colour=red").is_err());
        assert!(FileConfig::parse("seed").is_err());
    }
}
