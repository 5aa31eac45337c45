//! Shape specification files.

use serde::Deserialize;

use crate::error::SpecError;
use crate::shape::{Cell, Shape};

/// A shape given either as explicit cells or as a skew diagram, with an
/// optional shift number.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    #[serde(default)]
    pub cells: Option<Vec<[i64; 2]>>,
    #[serde(default)]
    pub lambda: Option<Vec<u32>>,
    #[serde(default)]
    pub mu: Option<Vec<u32>>,
    #[serde(default)]
    pub w: Option<u32>,
}

impl PairSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let spec: PairSpec = serde_json::from_str(text).map_err(|e| SpecError::Parse(e.to_string()))?;
        match (&spec.cells, &spec.lambda) {
            (Some(_), Some(_)) => Err(SpecError::AmbiguousShape),
            (Some(_), None) if spec.mu.is_some() => Err(SpecError::AmbiguousShape),
            (None, None) => Err(SpecError::MissingShape),
            _ => Ok(spec),
        }
    }

    pub fn shape(&self) -> Result<Shape, SpecError> {
        match (&self.cells, &self.lambda) {
            (Some(cells), None) => Ok(cells.iter().map(|&c| Cell::from(c)).collect()),
            (None, Some(lambda)) => Ok(Shape::from_skew(lambda, self.mu.as_deref().unwrap_or(&[]))?),
            (Some(_), Some(_)) => Err(SpecError::AmbiguousShape),
            (None, None) => Err(SpecError::MissingShape),
        }
    }
}
