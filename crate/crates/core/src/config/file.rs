//! Plain-text configuration files.
//!
//! ```text
//! # comments start with '#'
//! surface f 2
//! 1 origin
//! 2 -> 1
//! 3 -> 2 1
//! ```
//!
//! The first statement names the base surface (`surface p2` or
//! `surface f <δ>`); every further line is one point in blowup order, either
//! `<id> origin` or `<id> -> <parent> [<second proximity>]`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{ConfigError, Configuration, PointId};
use crate::lattice::SurfaceModel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `surface` line")]
    MissingSurface,
    #[error("line {line}: {error}")]
    Invalid { line: usize, error: ConfigError },
    #[error(transparent)]
    Config(#[from] ConfigError),
}

impl ConfigFileError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ConfigFileError::Syntax { line, .. } | ConfigFileError::Invalid { line, .. } => {
                Some(*line)
            }
            _ => None,
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> ConfigFileError {
    ConfigFileError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_id(line: usize, token: &str) -> Result<PointId, ConfigFileError> {
    token
        .parse::<PointId>()
        .map_err(|_| syntax(line, format!("`{token}` is not a point id")))
}

pub fn parse_configuration(text: &str) -> Result<Configuration, ConfigFileError> {
    let mut surface = None;
    let mut specs = Vec::new();
    let mut line_of: HashMap<PointId, usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if surface.is_none() {
            if tokens[0] != "surface" {
                return Err(ConfigFileError::MissingSurface);
            }
            let rest = tokens[1..].join(" ");
            surface = Some(
                rest.parse::<SurfaceModel>()
                    .map_err(|e| syntax(line, e.to_string()))?,
            );
            continue;
        }
        if tokens[0] == "surface" {
            return Err(syntax(line, "duplicate `surface` line"));
        }
        let id = parse_id(line, tokens[0])?;
        let proximities = match &tokens[1..] {
            ["origin"] => Vec::new(),
            ["->", targets @ ..] if (1..=2).contains(&targets.len()) => targets
                .iter()
                .map(|t| parse_id(line, t))
                .collect::<Result<Vec<_>, _>>()?,
            ["->", targets @ ..] if targets.len() > 2 => {
                return Err(ConfigFileError::Invalid {
                    line,
                    error: ConfigError::TooManyProximities {
                        id,
                        count: targets.len(),
                    },
                })
            }
            _ => {
                return Err(syntax(
                    line,
                    "expected `<id> origin` or `<id> -> <parent> [<second>]`",
                ))
            }
        };
        if let Some(&target) = proximities.iter().find(|&&t| t >= id) {
            return Err(ConfigFileError::Invalid {
                line,
                error: ConfigError::ForwardReference { id, target },
            });
        }
        if line_of.insert(id, line).is_some() {
            return Err(ConfigFileError::Invalid {
                line,
                error: ConfigError::DuplicateId { id },
            });
        }
        specs.push((id, proximities));
    }

    let surface = surface.ok_or(ConfigFileError::MissingSurface)?;
    Configuration::build(specs, surface).map_err(|e| match e.point_id().and_then(|id| line_of.get(&id)) {
        Some(&line) => ConfigFileError::Invalid { line, error: e },
        None => ConfigFileError::Config(e),
    })
}

pub(super) fn render(config: &Configuration) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "surface {}", config.surface().file_token());
    for p in config.points() {
        match p.proximities() {
            [] => {
                let _ = writeln!(out, "{} origin", p.id());
            }
            targets => {
                let targets: Vec<String> = targets.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{} -> {}", p.id(), targets.join(" "));
            }
        }
    }
    out
}
