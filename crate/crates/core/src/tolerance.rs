//! Named comparison tolerances.
//!
//! All equality tests in the crate are tolerance based. The process-wide
//! values are fixed the first time [`tolerances`] is called (or explicitly via
//! [`install`]) and never change afterwards.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Environment variable holding tolerance overrides.
///
/// Either a single number, applied to `cx`, `mat`, `det` and `j`, or a comma
/// separated list of `key=value` pairs, e.g. `cx=1e-10,fix=1e-7`.
pub const ENV_VAR: &str = "JNUM_TOL";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Complex scalar equality.
    pub cx: f64,
    /// Projective matrix equality (max-entry norm).
    pub mat: f64,
    /// Allowed |det - 1| for a constructed matrix.
    pub det: f64,
    /// Slack on the Jørgensen lower bound of one.
    pub j: f64,
    /// Minimum separation of fixed points for them to count as distinct.
    pub fix: f64,
    /// Largest rotation order searched when classifying elliptics.
    pub order_cap: u32,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { cx: 1e-9, mat: 1e-9, det: 1e-9, j: 1e-9, fix: 1e-6, order_cap: 256 }
    }
}

impl Tolerances {
    /// Applies an override string in the [`ENV_VAR`] format on top of `self`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(self);
        }
        if let Ok(v) = spec.parse::<f64>() {
            check_positive("tolerance", v)?;
            self.cx = v;
            self.mat = v;
            self.det = v;
            self.j = v;
            return Ok(self);
        }
        for item in spec.split(',') {
            let (key, value) =
                item.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {item:?}")))?;
            let key = key.trim();
            let value = value.trim();
            if key == "order_cap" {
                self.order_cap = value.parse().map_err(|_| Error::Parse(format!("bad order_cap {value:?}")))?;
                continue;
            }
            let v: f64 = value.parse().map_err(|_| Error::Parse(format!("bad tolerance value {value:?}")))?;
            check_positive(key, v)?;
            match key {
                "cx" => self.cx = v,
                "mat" => self.mat = v,
                "det" => self.det = v,
                "j" => self.j = v,
                "fix" => self.fix = v,
                _ => return Err(Error::Parse(format!("unknown tolerance {key:?}"))),
            }
        }
        Ok(self)
    }

    /// Defaults with the environment override applied, if present.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ENV_VAR) {
            Ok(s) => Self::default().with_overrides(&s),
            Err(_) => Ok(Self::default()),
        }
    }
}

fn check_positive(key: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::Parse(format!("{key} must be a positive finite number")))
    }
}

static GLOBAL: OnceLock<Tolerances> = OnceLock::new();

/// The process-wide tolerances. A malformed [`ENV_VAR`] falls back to the
/// defaults here; front ends should validate it with [`Tolerances::from_env`].
pub fn tolerances() -> &'static Tolerances {
    GLOBAL.get_or_init(|| Tolerances::from_env().unwrap_or_default())
}

/// Fixes the process-wide tolerances. Fails if they were already read.
pub fn install(tol: Tolerances) -> std::result::Result<(), Tolerances> {
    GLOBAL.set(tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_value_override_sets_equalities() {
        let t = Tolerances::default().with_overrides("1e-7").unwrap();
        assert_eq!(t.cx, 1e-7);
        assert_eq!(t.mat, 1e-7);
        assert_eq!(t.j, 1e-7);
        assert_eq!(t.fix, 1e-6);
    }

    #[test]
    fn keyed_overrides() {
        let t = Tolerances::default().with_overrides("fix=1e-5, order_cap=64").unwrap();
        assert_eq!(t.fix, 1e-5);
        assert_eq!(t.order_cap, 64);
        assert_eq!(t.cx, 1e-9);
    }

    #[test]
    fn rejects_garbage() {
        assert!(Tolerances::default().with_overrides("cx=-1").is_err());
        assert!(Tolerances::default().with_overrides("nope=1e-3").is_err());
        assert!(Tolerances::default().with_overrides("cx").is_err());
    }
}
