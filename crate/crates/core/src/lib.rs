//! Exact verification of sum-of-tails q-series identities.
//!
//! The crate has three layers:
//!
//! * [`series`]: truncated power series over `i64` with checked arithmetic.
//! * [`partitions`], [`diagrams`], [`involutions`]: partitions, their 2/1
//!   diagrams, and the sign-reversing pairings that explain each identity.
//! * [`identities`], [`mocktheta`]: the identities themselves, each checked
//!   by independent series and enumeration routes.
//!
//! ```
//! use qpart::identities::{verify, CaseId};
//!
//! let report = verify(CaseId::Iv, 20).unwrap();
//! assert!(report.equal);
//! ```

pub mod diagrams;
pub mod identities;
pub mod involutions;
pub mod mocktheta;
pub mod partitions;
pub mod series;
pub mod sweeps;

pub use diagrams::{Diagram, DiagramStyle};
pub use identities::{CaseId, CaseSpec, VerificationReport};
pub use partitions::{Partition, PartitionFamily};
pub use series::{SeriesError, TruncatedSeries};
