//! Cross-subject adaptation for windowed multichannel time-series classifiers.
//!
//! A classifier pretrained on source subjects is adapted to a new target
//! subject without dense labeling. Each iteration runs up to four steps:
//!
//! 1. [`selftrain`] — pseudo-label the target training windows with the
//!    current teacher, keep the high-confidence ones as the self-training
//!    set `S`, and pick one representative center per class.
//! 2. [`active`] — score the remaining windows by a distance-margin metric,
//!    stratify them by class boundary, and query an oracle for the most
//!    informative ones to form the core set `Q`.
//! 3. [`augment`] — propagate each queried label to spatio-temporally
//!    similar neighbors, forming the augmented core set `A`.
//! 4. [`pipeline`] — fine-tune the dense head of a student model on
//!    `S ∪ A`; the student becomes the next iteration's teacher.
//!
//! [`dataset`] handles ingestion, windowing, and cross-subject splits;
//! [`netcore`] is the minimal deterministic network engine underneath
//! [`classifier`]; [`embedding`] provides the 3-D PCA space in which all
//! step-1..3 distances are computed; [`eval`] holds metrics and the
//! leave-one-subject-out benchmark harness.
//!
//! Heavy inner loops are data-parallel when the `parallel` feature (on by
//! default) is enabled; results are bit-identical either way — see
//! [`parallel`] for the ordering rules that make that hold.

pub mod active;
pub mod augment;
pub mod classifier;
pub mod config;
pub mod dataset;
pub mod embedding;
pub mod error;
pub mod eval;
pub mod hash;
pub mod netcore;
pub mod parallel;
pub mod pipeline;
pub mod selftrain;

pub use error::{Error, Result};
