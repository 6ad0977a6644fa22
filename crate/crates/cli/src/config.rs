//! Job configuration: which group, which field, which degrees, and how to
//! report. Invalid configurations map to exit code 2, cost-cap refusals to 3.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use sha2::{Digest, Sha256};
use tatebv_core::group::{parse_cycles, preset_group, GroupJson, DEFAULT_SIZE_CAP};
use tatebv_core::{CostCaps, Error, FieldSpec, Group, Preset};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VERIFICATION_FAILURE: i32 = 1;
    pub const INVALID_CONFIG: i32 = 2;
    pub const COST_CAP: i32 = 3;
}

/// A failure that ends the run with a nonzero exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unusable input (exit 2).
    Config(String),
    /// A computation was refused because it exceeds a cost cap (exit 3).
    CostCap(String),
    /// An internal computation failed (exit 1).
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => exit::INVALID_CONFIG,
            CliError::CostCap(_) => exit::COST_CAP,
            CliError::Failure(_) => exit::VERIFICATION_FAILURE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "invalid configuration: {m}"),
            CliError::CostCap(m) => write!(f, "refused: {m}"),
            CliError::Failure(m) => write!(f, "error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CostCap { .. } => CliError::CostCap(e.to_string()),
            Error::NotPrime(_)
            | Error::NotSquare
            | Error::EntryOutOfRange(_)
            | Error::NoIdentity
            | Error::NotAssociative(..)
            | Error::MissingInverse(_)
            | Error::DuplicateLabels
            | Error::InvalidPermutation(_)
            | Error::SizeCap(_)
            | Error::UnsupportedPreset(_)
            | Error::Parse(_)
            | Error::Window { .. } => CliError::Config(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

/// How the group is given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// `preset:param`, e.g. `symmetric:3`, `D:4`, `klein_four`.
    Preset { preset: Preset, param: usize },
    /// `perms:"(0 1 2),(0 1)"`: the closure of permutations in cycle notation.
    Perms(String),
    /// `file:PATH`: a JSON multiplication table `{"order", "mult", "labels"?}`.
    File(PathBuf),
}

impl FromStr for GroupSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if let Some(rest) = s.strip_prefix("perms:") {
            return Ok(GroupSpec::Perms(rest.trim().trim_matches('"').to_string()));
        }
        if let Some(rest) = s.strip_prefix("file:") {
            return Ok(GroupSpec::File(PathBuf::from(rest)));
        }
        let (name, param) = match s.split_once(':') {
            Some((name, param)) => {
                let param = param.parse::<usize>().map_err(|_| CliError::Config(format!("bad preset parameter {param:?}")))?;
                (name, Some(param))
            }
            None => (s, None),
        };
        let preset = Preset::from_str(name).map_err(|e| CliError::Config(e.to_string()))?;
        let param = match (preset, param) {
            (Preset::KleinFour | Preset::Quaternion8, p) => p.unwrap_or(0),
            (_, Some(p)) => p,
            (_, None) => return Err(CliError::Config(format!("preset {name:?} needs a parameter, e.g. {name}:3"))),
        };
        Ok(GroupSpec::Preset { preset, param })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Preset { preset: Preset::KleinFour, .. } => write!(f, "klein_four"),
            GroupSpec::Preset { preset: Preset::Quaternion8, .. } => write!(f, "quaternion8"),
            GroupSpec::Preset { preset, param } => {
                let name = match preset {
                    Preset::Cyclic => "cyclic",
                    Preset::Dihedral => "dihedral",
                    _ => "symmetric",
                };
                write!(f, "{name}:{param}")
            }
            GroupSpec::Perms(p) => write!(f, "perms:{p}"),
            GroupSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<Group, CliError> {
        match self {
            GroupSpec::Preset { preset, param } => Ok(preset_group(*preset, *param)?),
            GroupSpec::Perms(text) => Ok(Group::from_permutations(&parse_cycles(text)?, DEFAULT_SIZE_CAP)?),
            GroupSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
                let json: GroupJson = serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
                Ok(Group::from_json(&json)?)
            }
        }
    }
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(CliError::Config(format!("unknown format {other:?} (json, csv or text)"))),
        }
    }
}

/// Parses `LO..HI` (inclusive on both ends).
pub fn parse_window(s: &str) -> Result<(i32, i32), CliError> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| CliError::Config(format!("window {s:?} is not of the form LO..HI")))?;
    let parse = |t: &str| t.trim().parse::<i32>().map_err(|_| CliError::Config(format!("bad window bound {t:?}")));
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo >= hi {
        return Err(CliError::Config(format!("window {lo}..{hi} is empty: need LO < HI")));
    }
    Ok((lo, hi))
}

/// A validated job.
#[derive(Debug, Clone, Serialize)]
pub struct JobConfig {
    #[serde(serialize_with = "display")]
    pub group: GroupSpec,
    #[serde(rename = "char")]
    pub p: u32,
    pub window: (i32, i32),
    pub seed: u64,
    pub format: Format,
    pub threads: usize,
    /// Cap on basis elements per degree for the direct complex.
    pub direct_cap: u128,
    /// Cap on basis elements per degree for the centralizer complexes.
    pub decomposition_cap: u128,
}

fn display<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl JobConfig {
    pub fn new(group: GroupSpec, p: u32, window: (i32, i32), seed: u64, format: Format, threads: usize) -> Result<Self, CliError> {
        FieldSpec::new(p)?;
        if window.0 >= window.1 {
            return Err(CliError::Config(format!("window {}..{} is empty: need LO < HI", window.0, window.1)));
        }
        if threads == 0 {
            return Err(CliError::Config("thread count must be at least 1".into()));
        }
        let caps = CostCaps::default();
        Ok(JobConfig { group, p, window, seed, format, threads, direct_cap: caps.direct, decomposition_cap: caps.decomposition })
    }

    pub fn with_caps(mut self, direct: u128, decomposition: u128) -> Self {
        self.direct_cap = direct;
        self.decomposition_cap = decomposition;
        self
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec::new(self.p).expect("validated on construction")
    }

    pub fn caps(&self) -> CostCaps {
        CostCaps { direct: self.direct_cap, decomposition: self.decomposition_cap }
    }

    pub fn group(&self) -> Result<Arc<Group>, CliError> {
        Ok(Arc::new(self.group.build()?))
    }

    /// SHA-256 of the canonical JSON serialization, as lowercase hex.
    pub fn hash(&self) -> String {
        let json = serde_json::to_vec(self).expect("config serializes");
        Sha256::digest(&json).iter().map(|b| format!("{b:02x}")).collect()
    }
}
