//! Suite configuration: parsing, defaults and validation.

use std::sync::Arc;

use contentalg_core::suite::{expand, DEFAULT_MODULE_RANKS, DEFAULT_VALUATION_SAMPLES};
use contentalg_core::{Bounds, Error, FiniteRing, Monoid, MonoidDescriptor, RingDescriptor};
use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Checks {
    /// Only `"all"` is accepted here.
    Named(String),
    List(Vec<String>),
}

impl Default for Checks {
    fn default() -> Self {
        Checks::Named("all".into())
    }
}

impl Checks {
    pub fn names(&self) -> Vec<String> {
        match self {
            Checks::Named(s) => vec![s.clone()],
            Checks::List(v) => v.clone(),
        }
    }
}

fn default_ranks() -> Vec<usize> {
    DEFAULT_MODULE_RANKS.to_vec()
}

fn default_samples() -> usize {
    DEFAULT_VALUATION_SAMPLES
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub ring: RingDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid: Option<MonoidDescriptor>,
    #[serde(default)]
    pub bounds: Bounds,
    #[serde(default)]
    pub checks: Checks,
    #[serde(default = "default_ranks")]
    pub module_ranks: Vec<usize>,
    #[serde(default = "default_samples")]
    pub valuation_samples: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum ConfigError {
    #[error("schema error at line {line}, field '{field}': {msg}")]
    Schema { line: usize, field: String, msg: String },
    #[error("unknown check name '{0}'")]
    UnknownCheckName(String),
    #[error("{0}")]
    Io(String),
}

/// A validated configuration with its materialized ring and monoid.
pub struct Validated {
    pub config: SuiteConfig,
    pub ring: Arc<FiniteRing>,
    pub monoid: Option<Arc<Monoid>>,
    pub checks: Vec<&'static str>,
}

/// Line of the first occurrence of `"key"` in `text`, or 1.
fn line_of(text: &str, field: &str) -> usize {
    let key = format!("\"{}\"", field.rsplit('.').next().unwrap_or(field));
    text.lines()
        .position(|l| l.contains(&key))
        .map(|i| i + 1)
        .unwrap_or(1)
}

fn schema(text: &str, field: &str, msg: impl Into<String>) -> ConfigError {
    ConfigError::Schema {
        line: line_of(text, field),
        field: field.to_string(),
        msg: msg.into(),
    }
}

/// Field named in a serde error message, when there is one.
fn serde_field(msg: &str) -> String {
    for marker in ["missing field `", "unknown field `", "unknown variant `"] {
        if let Some(rest) = msg.split(marker).nth(1) {
            if let Some(name) = rest.split('`').next() {
                return name.to_string();
            }
        }
    }
    "<document>".into()
}

pub fn parse_config(text: &str) -> Result<Validated, ConfigError> {
    let config: SuiteConfig = serde_json::from_str(text).map_err(|e| {
        let msg = e.to_string();
        ConfigError::Schema {
            line: e.line(),
            field: serde_field(&msg),
            msg,
        }
    })?;
    validate(config, text)
}

pub fn validate(mut config: SuiteConfig, text: &str) -> Result<Validated, ConfigError> {
    let ring = FiniteRing::make(&config.ring, config.bounds.order_cap)
        .map_err(|e| schema(text, "ring", e.to_string()))?;
    let monoid = config
        .monoid
        .as_ref()
        .map(|d| Monoid::make(d).map(Arc::new))
        .transpose()
        .map_err(|e| schema(text, "monoid", e.to_string()))?;
    config.bounds = config.bounds.resolve(&ring).map_err(|e| {
        let msg = e.to_string();
        let field = if msg.contains("coeff_mode") {
            "bounds.coeff_mode"
        } else if msg.contains("support") {
            "bounds.support"
        } else {
            "bounds"
        };
        schema(text, field, msg)
    })?;
    if let Checks::Named(s) = &config.checks {
        if s != "all" {
            return Err(schema(text, "checks", format!("expected \"all\" or a list, got \"{s}\"")));
        }
    }
    if config.module_ranks.is_empty() || config.module_ranks.contains(&0) {
        return Err(schema(text, "module_ranks", "ranks must be a nonempty list of positive integers"));
    }
    let checks = expand(&config.checks.names(), monoid.is_some()).map_err(|e| match e {
        Error::UnknownCheck(n) => ConfigError::UnknownCheckName(n),
        other => schema(text, "monoid", other.to_string()),
    })?;
    Ok(Validated {
        config,
        ring,
        monoid,
        checks,
    })
}

pub fn load_config(path: &std::path::Path) -> Result<Validated, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

/// `kind:a,b,c` shorthand or inline JSON for a ring descriptor.
pub fn ring_arg(s: &str) -> Result<RingDescriptor, String> {
    if s.trim_start().starts_with('{') {
        return serde_json::from_str(s).map_err(|e| e.to_string());
    }
    let (kind, nums) = shorthand(s)?;
    match (kind, nums.as_slice()) {
        ("zmod", [n]) => Ok(RingDescriptor::Zmod { n: *n }),
        ("trunc_poly", [p, vars, cap]) => Ok(RingDescriptor::TruncPoly {
            p: *p,
            vars: *vars,
            cap: *cap,
        }),
        _ => Err(format!("unrecognized ring '{s}': use zmod:N, trunc_poly:P,VARS,CAP or JSON")),
    }
}

/// `kind:a,b,c` shorthand or inline JSON for a monoid descriptor.
pub fn monoid_arg(s: &str) -> Result<MonoidDescriptor, String> {
    if s.trim_start().starts_with('{') {
        return serde_json::from_str(s).map_err(|e| e.to_string());
    }
    let (kind, nums) = shorthand(s)?;
    match (kind, nums.as_slice()) {
        ("free", [rank]) => Ok(MonoidDescriptor::Free { rank: *rank as usize }),
        ("group", [free_rank, torsion @ ..]) => Ok(MonoidDescriptor::Group {
            free_rank: *free_rank as usize,
            torsion: torsion.to_vec(),
        }),
        ("trunc_add", [cap]) => Ok(MonoidDescriptor::TruncAdd { cap: *cap as usize }),
        _ => Err(format!(
            "unrecognized monoid '{s}': use free:K, group:FREE_RANK[,T1,...], trunc_add:CAP or JSON"
        )),
    }
}

fn shorthand(s: &str) -> Result<(&str, Vec<u32>), String> {
    let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
    let nums = rest
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("'{t}': {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((kind.trim(), nums))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_filled() {
        let v = parse_config(r#"{"ring":{"kind":"zmod","n":4},"monoid":{"kind":"free","rank":1}}"#).unwrap();
        assert_eq!(v.config.bounds.support, 3);
        assert_eq!(v.config.bounds.coeff_mode, Some(contentalg_core::CoeffMode::Exhaustive));
        assert_eq!(v.config.module_ranks, vec![1, 2]);
        assert_eq!(v.checks.len(), contentalg_core::CHECKS.len());
    }

    #[test]
    fn exhaustive_rejected_at_order_64() {
        let text = "{\n  \"ring\": {\"kind\":\"trunc_poly\",\"p\":2,\"vars\":2,\"cap\":3},\n  \"monoid\": {\"kind\":\"free\",\"rank\":1},\n  \"bounds\": {\"coeff_mode\":\"exhaustive\"}\n}";
        match parse_config(text) {
            Err(ConfigError::Schema { line, field, .. }) => {
                assert_eq!(field, "bounds.coeff_mode");
                assert_eq!(line, 4);
            }
            other => panic!("{:?}", other.err()),
        }
    }

    #[test]
    fn monoid_required() {
        let err = parse_config(r#"{"ring":{"kind":"zmod","n":4},"checks":["gaussian"]}"#).err().unwrap();
        assert!(matches!(err, ConfigError::Schema { ref field, .. } if field == "monoid"), "{err}");
        let ok = parse_config(r#"{"ring":{"kind":"zmod","n":4},"checks":["spectrum"]}"#).unwrap();
        assert_eq!(ok.checks, vec!["spectrum"]);
    }

    #[test]
    fn schema_errors_name_the_field() {
        let err = parse_config("{\"ring\":{\"kind\":\"zmod\",\"n\":4},\n\"colour\":1}").err().unwrap();
        assert!(matches!(err, ConfigError::Schema { line: 2, ref field, .. } if field == "colour"), "{err}");
        let err = parse_config(r#"{"monoid":{"kind":"free","rank":1}}"#).err().unwrap();
        assert!(matches!(err, ConfigError::Schema { ref field, .. } if field == "ring"), "{err}");
        let err = parse_config(r#"{"ring":{"kind":"zmod","n":4},"checks":["nope"]}"#).err().unwrap();
        assert_eq!(err, ConfigError::UnknownCheckName("nope".into()));
        let err = parse_config(r#"{"ring":{"kind":"zmod","n":4},"bounds":{"support":0}}"#).err().unwrap();
        assert!(matches!(err, ConfigError::Schema { ref field, .. } if field == "bounds.support"), "{err}");
    }

    #[test]
    fn shorthands() {
        assert_eq!(ring_arg("zmod:6").unwrap(), RingDescriptor::Zmod { n: 6 });
        assert_eq!(
            ring_arg("trunc_poly:2,2,3").unwrap(),
            RingDescriptor::TruncPoly { p: 2, vars: 2, cap: 3 }
        );
        assert_eq!(
            monoid_arg("group:0,2").unwrap(),
            MonoidDescriptor::Group { free_rank: 0, torsion: vec![2] }
        );
        assert_eq!(monoid_arg(r#"{"kind":"free","rank":2}"#).unwrap(), MonoidDescriptor::Free { rank: 2 });
        assert!(ring_arg("field:4").is_err());
    }
}
