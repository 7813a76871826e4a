//! Instance configuration from flags or a JSON file.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagram_tableaux::{Origin, PartitionDiagram};
use crate::exact_linear::Scalar;

use super::CliError;

/// Size limits; suites whose instance exceeds a cap fail with exit code `3`
/// (or are listed as skipped under `all`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    /// Largest admissible `N^d`.
    pub max_tensor_dim: usize,
    /// Largest `l^d·d!` for suites that multiply in `H_d(Λ)`.
    pub max_hecke_dim: u128,
    /// Spaces up to this dimension use exact ranks; larger ones work modulo a prime.
    pub exact_limit: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_tensor_dim: 1000,
            max_hecke_dim: 200,
            exact_limit: 200,
        }
    }
}

/// A configuration file or the merged flags. Every field is optional so that
/// flags can override a file field by field.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct InstanceConfig {
    pub parts: Option<Vec<usize>>,
    pub origin: Option<Vec<Scalar>>,
    pub d: Option<usize>,
    /// Rows kept by the row removal suite; defaults to all but the last.
    pub n_bar: Option<usize>,
    pub caps: Option<Caps>,
}

impl InstanceConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    /// Fields set in `other` replace those of `self`.
    pub fn merged(mut self, other: InstanceConfig) -> InstanceConfig {
        self.parts = other.parts.or(self.parts);
        self.origin = other.origin.or(self.origin);
        self.d = other.d.or(self.d);
        self.n_bar = other.n_bar.or(self.n_bar);
        self.caps = other.caps.or(self.caps);
        self
    }

    pub fn instance(&self) -> Result<Instance, CliError> {
        let parts = self
            .parts
            .as_ref()
            .ok_or_else(|| CliError::Config("parts are required".into()))?;
        let d = self
            .d
            .ok_or_else(|| CliError::Config("d is required".into()))?;
        let diagram = Arc::new(PartitionDiagram::new(parts)?);
        let origin = match &self.origin {
            Some(c) => Origin::for_diagram(c.clone(), &diagram)?,
            None => Origin::zero(diagram.level()),
        };
        let caps = self.caps.clone().unwrap_or_default();
        if caps.max_tensor_dim == 0 || caps.max_hecke_dim == 0 {
            return Err(CliError::Config("caps must be positive".into()));
        }
        Ok(Instance {
            diagram,
            origin,
            d,
            n_bar: self.n_bar,
            caps,
        })
    }
}

/// A validated `(λ, c, d)` instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub diagram: Arc<PartitionDiagram>,
    pub origin: Origin,
    pub d: usize,
    pub n_bar: Option<usize>,
    pub caps: Caps,
}

impl Instance {
    pub fn new(
        parts: &[usize],
        origin: Option<Vec<Scalar>>,
        d: usize,
    ) -> Result<Instance, CliError> {
        InstanceConfig {
            parts: Some(parts.to_vec()),
            origin,
            d: Some(d),
            ..Default::default()
        }
        .instance()
    }

    /// `N^d`, if it fits in `usize`.
    pub fn tensor_dim(&self) -> Option<usize> {
        self.diagram.boxes().checked_pow(self.d as u32)
    }
}

/// Parses `"2,3,4"`.
pub fn parse_parts(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Config(format!("bad part {t:?}")))
        })
        .collect()
}

/// Parses `"0,1/2"`.
pub fn parse_origin(s: &str) -> Result<Vec<Scalar>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Config(format!("bad rational {t:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let file =
            InstanceConfig::from_json(r#"{"parts":[2,2],"origin":["0","1/2"],"d":1}"#).unwrap();
        let flags = InstanceConfig {
            d: Some(2),
            ..Default::default()
        };
        let m = file.merged(flags);
        assert_eq!(m.d, Some(2));
        assert_eq!(m.parts, Some(vec![2, 2]));
        let inst = m.instance().unwrap();
        assert_eq!(inst.origin.values()[1], Scalar::new(1, 2));
        assert_eq!(inst.tensor_dim(), Some(16));
    }

    #[test]
    fn invalid_origin_and_fields() {
        let bad = InstanceConfig {
            parts: Some(vec![1, 2]),
            origin: Some(vec![Scalar::zero(), Scalar::one()]),
            d: Some(1),
            ..Default::default()
        };
        assert!(matches!(bad.instance(), Err(CliError::Config(_))));
        assert!(InstanceConfig::from_json(r#"{"partz":[1]}"#).is_err());
        assert_eq!(
            parse_origin("0, 1/2").unwrap(),
            vec![Scalar::zero(), Scalar::new(1, 2)]
        );
        assert!(parse_parts("1,x").is_err());
    }
}
