//! Jørgensen numbers, two-bridge Riley representations and arithmetic-group
//! tests for two-generator Kleinian groups.
//!
//! ```
//! use jnum::riley::{knot_jreport, SelectionOptions, TwoBridge};
//!
//! let tb = TwoBridge::parse("9/5")?;
//! let r = knot_jreport(&tb, &SelectionOptions::default())?;
//! assert!((r.jreport.value - 1.55603019).abs() < 1e-8);
//! # Ok::<(), jnum::Error>(())
//! ```

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod riley;
pub mod roots;
pub mod tolerance;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
