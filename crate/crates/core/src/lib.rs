//! Exact integer homology of graph path complexes, with generators for
//! poset and CW-complex derived graphs and closed-form rank checks.

pub mod ai_complex;
pub mod corpus;
pub mod cw;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod homology;
pub mod matrix;
pub mod order_complex;
pub mod paths;
pub mod pk_sigma;
pub mod poset;
pub mod series;
pub mod suites;
pub mod snf;

pub use cw::{Cell, RegularCw};
pub use error::{Error, Result};
pub use formulas::{falling, support_bounds, SupportBounds};
pub use graph::{DistanceMatrix, Family, Graph};
pub use homology::{table, BiGradedTable, HomologyGroup};
pub use order_complex::{IntChain, OrderComplex};
pub use paths::{enumerate_paths, PathBasis, PathKind};
pub use poset::Poset;
pub use matrix::SparseIntMatrix;
pub use series::{magnitude_series, PowerSeries, SeriesMethod};
pub use snf::{rank, smith_normal_form, smith_normal_form_with_transforms, SnfResult};
