use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource limits for the bounded searches.
///
/// A zero limit disables the corresponding search; only invariant checks run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// States visited by a Hurwitz orbit search (both directions combined).
    pub max_states: usize,
    /// Slide moves per search direction.
    pub max_depth: usize,
    /// Elements enumerated in a super summit set.
    pub max_summit: usize,
    /// Word length bound for fixed-word enumeration in the free group.
    pub max_fixed_length: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 1_000_000,
            max_depth: 64,
            max_summit: 20_000,
            max_fixed_length: 6,
        }
    }
}

impl Budget {
    pub const ENV_VAR: &'static str = "BRAIDFACT_BUDGET";

    pub fn invariants_only() -> Self {
        Budget {
            max_states: 0,
            max_depth: 0,
            max_summit: 0,
            max_fixed_length: 0,
        }
    }

    /// Applies `key=value` overrides separated by commas, e.g.
    /// `max_states=5000,max_depth=8`.
    pub fn with_overrides(mut self, overrides: &str) -> Result<Self> {
        for item in overrides.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("budget override {item:?} is not key=value"))
            })?;
            let value: usize = value.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("budget value {value:?} is not a nonnegative integer"))
            })?;
            match key.trim().replace('-', "_").as_str() {
                "max_states" | "states" => self.max_states = value,
                "max_depth" | "depth" => self.max_depth = value,
                "max_summit" | "summit" => self.max_summit = value,
                "max_fixed_length" | "fixed_length" => self.max_fixed_length = value,
                other => {
                    return Err(Error::InvalidArgument(format!("unknown budget key {other:?}")))
                }
            }
        }
        Ok(self)
    }

    /// Defaults, overridden by the `BRAIDFACT_BUDGET` environment variable when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(overrides) => Budget::default().with_overrides(&overrides),
            Err(_) => Ok(Budget::default()),
        }
    }
}

impl FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Budget::default().with_overrides(s)
    }
}
