//! Exact enumeration of lattice paths from `(0, 0)` to `(alpha k, beta k)` by
//! their left and right bounces on the line `y = (beta / alpha) x`.
//!
//! Every generating function is a truncated power series with arbitrary
//! precision integer coefficients ([`Series`]); the [`oracle`] module provides
//! brute-force counts to check them against.

pub mod beta_one;
pub mod bounce_gf;
pub mod catalog;
pub mod closed_forms;
pub mod error;
pub mod identities;
pub mod oracle;
pub mod series;

pub use bounce_gf::{BounceFree, BounceTable, MarkerSeries, Side};
pub use catalog::{series_by_name, SeriesName, SeriesParams};
pub use closed_forms::{BaseSeries, Restriction, Slope, Step};
pub use error::{Error, Result};
pub use oracle::{BounceProfile, StepWord};
pub use series::{RationalSeries, Series};
