use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Bipartite configuration model with truncated power-law degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerLawConfig {
    pub n_contributors: usize,
    pub n_items: usize,
    pub alpha_c: f64,
    pub alpha_i: f64,
    pub max_degree_c: u32,
    pub max_degree_i: u32,
    /// Smallest item degree drawn (1 unless a redundancy floor is wanted).
    pub min_degree_i: u32,
    pub seed: u64,
}

impl PowerLawConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParams(m));
        if self.n_contributors == 0 || self.n_items == 0 {
            return bad("node counts must be positive".into());
        }
        for (name, a) in [("alpha_c", self.alpha_c), ("alpha_i", self.alpha_i)] {
            if !(a > 0.0 && a.is_finite()) {
                return bad(format!("{name} must be a positive number, got {a}"));
            }
        }
        if self.max_degree_c == 0 || self.max_degree_c as usize > self.n_items {
            return bad(format!(
                "max contributor degree {} must lie in 1..={}",
                self.max_degree_c, self.n_items
            ));
        }
        if self.max_degree_i == 0 || self.max_degree_i as usize > self.n_contributors {
            return bad(format!(
                "max item degree {} must lie in 1..={}",
                self.max_degree_i, self.n_contributors
            ));
        }
        if self.min_degree_i == 0 || self.min_degree_i > self.max_degree_i {
            return bad(format!(
                "min item degree {} must lie in 1..={}",
                self.min_degree_i, self.max_degree_i
            ));
        }
        Ok(())
    }

    /// Synthetic benchmark rows (a)–(e): 5 000 nodes per side.
    pub fn benchmark(row: char, seed: u64) -> Option<Self> {
        let (alpha_c, alpha_i, max_degree_c, max_degree_i) = match row {
            'a' => (0.5, 0.5, 20, 100),
            'b' => (0.5, 0.5, 100, 20),
            'c' => (0.5, 0.5, 100, 100),
            'd' => (0.5, 0.7, 100, 100),
            'e' => (0.7, 0.5, 100, 100),
            _ => return None,
        };
        Some(PowerLawConfig {
            n_contributors: 5_000,
            n_items: 5_000,
            alpha_c,
            alpha_i,
            max_degree_c,
            max_degree_i,
            min_degree_i: 1,
            seed,
        })
    }
}

/// Bipartite Erdős–Rényi graph: every pair independently with probability `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErConfig {
    pub n_contributors: usize,
    pub n_items: usize,
    pub p: f64,
    pub seed: u64,
}

impl ErConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParams(format!("p must lie in [0, 1], got {}", self.p)));
        }
        Ok(())
    }

    /// Synthetic benchmark row (f).
    pub fn benchmark(seed: u64) -> Self {
        ErConfig {
            n_contributors: 5_000,
            n_items: 5_000,
            p: 0.004,
            seed,
        }
    }
}

/// `key = value` lines; `#` starts a comment, blank lines are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConfigMap(BTreeMap<String, String>);

impl ConfigMap {
    pub fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n as u64 + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (k, v) = content
                .split_once('=')
                .ok_or_else(|| Error::parse(line, "expected key = value"))?;
            let (k, v) = (k.trim(), v.trim());
            if k.is_empty() || k.contains(char::is_whitespace) {
                return Err(Error::parse(line, format!("bad key `{k}`")));
            }
            if map.insert(k.to_owned(), v.to_owned()).is_some() {
                return Err(Error::parse(line, format!("duplicate key `{k}`")));
            }
        }
        Ok(ConfigMap(map))
    }

    pub fn insert(&mut self, key: &str, value: impl ToString) {
        self.0.insert(key.to_owned(), value.to_string());
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.0.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::InvalidParams(format!("bad value `{v}` for `{key}`"))),
        }
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T> {
        self.get(key)?
            .ok_or_else(|| Error::InvalidParams(format!("missing `{key}`")))
    }

    fn reject_unknown(&self, allowed: &[&str]) -> Result<()> {
        match self.keys().find(|k| !allowed.contains(k)) {
            Some(k) => Err(Error::InvalidParams(format!("unknown key `{k}`"))),
            None => Ok(()),
        }
    }

    /// Keys: `nc ni alpha_c alpha_i dc di seed`, optional `min_di`.
    pub fn power_law(&self) -> Result<PowerLawConfig> {
        self.reject_unknown(&["nc", "ni", "alpha_c", "alpha_i", "dc", "di", "min_di", "seed"])?;
        let cfg = PowerLawConfig {
            n_contributors: self.require("nc")?,
            n_items: self.require("ni")?,
            alpha_c: self.require("alpha_c")?,
            alpha_i: self.require("alpha_i")?,
            max_degree_c: self.require("dc")?,
            max_degree_i: self.require("di")?,
            min_degree_i: self.get("min_di")?.unwrap_or(1),
            seed: self.require("seed")?,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Keys: `nc ni p seed`.
    pub fn er(&self) -> Result<ErConfig> {
        self.reject_unknown(&["nc", "ni", "p", "seed"])?;
        let cfg = ErConfig {
            n_contributors: self.require("nc")?,
            n_items: self.require("ni")?,
            p: self.require("p")?,
            seed: self.require("seed")?,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}
