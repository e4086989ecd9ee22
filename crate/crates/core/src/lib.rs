//! Set partitions, the intertwining number and depth index, rank-control
//! matrices, the Bruhat-Chevalley-Renner order and q-Stirling polynomials.

pub mod error;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod poset;
pub mod qpoly;
pub mod stats;
pub mod verify;

pub use error::{MatrixError, PartitionError, PosetError};
pub use matrix::{rank_control, rank_control_of, FieldMatrix, RankControlMatrix, ZeroOneMatrix};
pub use partition::{
    ArcDiagram, GeneralizedArc, PartitionStyle, RestrictedGrowthString, SetPartition,
};
pub use poly::{BivariatePolynomial, IntPolynomial};
pub use poset::{ExportFormat, Poset, POSET_LIMIT};
pub use qpoly::{q_stirling, Statistic};
pub use stats::{depth_index, intertwining, IntertwiningMethod, StatReport};
