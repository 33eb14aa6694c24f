//! Minimal deterministic network engine: layer forward/backward passes,
//! cross-entropy loss, and Adam.
//!
//! Determinism contract: given the same seed, inputs, and configuration,
//! training produces bit-identical parameters regardless of thread count.
//! Parallel loops never let a floating-point reduction cross the parallel
//! axis (batch sums run in index order inside one task), and all dropout
//! masks are drawn from a single sequential RNG stream.

mod adam;
mod init;
mod layer;
mod loss;
mod net;
mod tensor;

pub use adam::{adam_step, AdamState};
pub use init::he_uniform;
pub use layer::{
    BatchNorm, Conv1d, Conv2d, Dense, Dropout, Fanout, FanoutSplit, Layer, LayerGrads,
};
pub use loss::{cross_entropy, cross_entropy_one_hot, LossGrad};
pub use net::{Mode, Network, Step, Trace};
pub use tensor::Tensor;
