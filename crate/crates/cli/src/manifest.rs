use std::io::{self, Read};
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Passes bytes through while hashing them.
pub struct HashingReader<R> {
    inner: R,
    hasher: Sha256,
}

impl<R: Read> HashingReader<R> {
    pub fn new(inner: R) -> Self {
        HashingReader {
            inner,
            hasher: Sha256::new(),
        }
    }

    /// Hex SHA-256 of everything read so far.
    pub fn finish(self) -> String {
        let digest = self.hasher.finalize();
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl<R: Read> Read for HashingReader<R> {
    fn read(&mut self, buf: &mut [u8]) -> io::Result<usize> {
        let n = self.inner.read(buf)?;
        self.hasher.update(&buf[..n]);
        Ok(n)
    }
}

#[derive(Debug, Serialize)]
pub struct InputRecord {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: &'static str,
    pub inputs: Vec<InputRecord>,
    pub method: Option<String>,
    pub parameters: serde_json::Value,
    pub seed: Option<u64>,
    pub wall_time_seconds: f64,
    pub outputs: Vec<String>,
    #[serde(skip)]
    started: Option<Instant>,
}

impl RunManifest {
    pub fn new(command: &str, started: Instant) -> Self {
        RunManifest {
            command: command.to_owned(),
            version: env!("CARGO_PKG_VERSION"),
            inputs: Vec::new(),
            method: None,
            parameters: serde_json::Value::Null,
            seed: None,
            wall_time_seconds: 0.0,
            outputs: Vec::new(),
            started: Some(started),
        }
    }

    pub fn input(mut self, path: &Path, sha256: &str) -> Self {
        self.inputs.push(InputRecord {
            path: path.display().to_string(),
            sha256: sha256.to_owned(),
        });
        self.stamp()
    }

    pub fn method(mut self, method: &str) -> Self {
        self.method = Some(method.to_owned());
        self
    }

    pub fn parameters(mut self, parameters: serde_json::Value) -> Self {
        self.parameters = parameters;
        self
    }

    pub fn seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn output(mut self, path: Option<&Path>) -> Self {
        if let Some(p) = path {
            self.outputs.push(p.display().to_string());
        }
        self.stamp()
    }

    fn stamp(mut self) -> Self {
        if let Some(t) = self.started {
            self.wall_time_seconds = t.elapsed().as_secs_f64();
        }
        self
    }
}
