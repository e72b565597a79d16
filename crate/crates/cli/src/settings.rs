use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use ordsize::search::DEFAULT_EXACT_LIMIT;
use serde::{Deserialize, Serialize};

use crate::cli::{Format, GlobalArgs};

/// Optional JSON config; every field may be omitted.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    seed: Option<u64>,
    threads: Option<usize>,
    format: Option<Format>,
    out: Option<PathBuf>,
    budget: Option<u64>,
    exact_limit: Option<usize>,
}

/// Resolved settings: command line over config file over defaults.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Settings {
    pub seed: u64,
    /// no seed was given anywhere; 0 was used
    pub seed_defaulted: bool,
    pub threads: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub budget: Option<u64>,
    pub exact_limit: usize,
}

fn read_config(path: &Path) -> Result<ConfigFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

impl Settings {
    pub fn resolve(g: &GlobalArgs) -> Result<Settings> {
        let cfg = match &g.config {
            Some(p) => read_config(p)?,
            None => ConfigFile::default(),
        };
        let seed = g.seed.or(cfg.seed);
        let threads = g.threads.or(cfg.threads);
        if threads == Some(0) {
            anyhow::bail!("--threads must be at least 1");
        }
        Ok(Settings {
            seed: seed.unwrap_or(0),
            seed_defaulted: seed.is_none(),
            threads,
            format: g.format.or(cfg.format).unwrap_or_default(),
            out: g.out.clone().or(cfg.out),
            budget: g.budget.or(cfg.budget),
            exact_limit: g.exact_limit.or(cfg.exact_limit).unwrap_or(DEFAULT_EXACT_LIMIT),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.json");
        std::fs::write(&p, r#"{"seed": 5, "budget": 10, "format": "csv"}"#).unwrap();
        let g = GlobalArgs { seed: Some(9), config: Some(p), ..Default::default() };
        let s = Settings::resolve(&g).unwrap();
        assert_eq!((s.seed, s.seed_defaulted, s.budget, s.format), (9, false, Some(10), Format::Csv));
        assert_eq!(s.exact_limit, DEFAULT_EXACT_LIMIT);
        let d = Settings::resolve(&GlobalArgs::default()).unwrap();
        assert!(d.seed_defaulted);
        assert_eq!(d.seed, 0);
    }

    #[test]
    fn unknown_config_key_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.json");
        std::fs::write(&p, r#"{"sede": 5}"#).unwrap();
        let g = GlobalArgs { config: Some(p), ..Default::default() };
        assert!(Settings::resolve(&g).is_err());
    }
}
