//! Exact truncated power series over the rationals and the catalog of
//! generating functions. No floating point is used anywhere here; a
//! non-integral coefficient in a counting series is itself a failure signal.

mod bivariate;
mod catalan;
pub mod catalog;
mod power;

pub use bivariate::{BivariateSeries, YPoly};
pub use catalan::{binomial, catalan, catalan_series, gen_catalan, sqrt_one_minus_4x};
pub use catalog::{gf_catalog, invert_transform, CatalogName, CatalogSeries};
pub use power::PowerSeries;

/// Truncation order used when none is requested.
pub const DEFAULT_ORDER: usize = 40;
