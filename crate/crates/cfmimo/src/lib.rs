//! Cell-free massive MIMO system simulator with sparse large-scale fading
//! (LSF) processing.
//!
//! The crate covers the full evaluation pipeline of a user-centric cell-free
//! network operated in distributed mode:
//!
//! * network drops with wrap-around geometry, pathloss/shadowing and
//!   spatially correlated Rayleigh fading ([`geometry`], [`channel`]),
//! * pilot assignment and per-AP MMSE channel estimation ([`pilot`]),
//! * local combining and Monte Carlo estimation of the second-order
//!   statistics that drive all LSF decoding/precoding designs ([`combining`],
//!   [`lsf`]),
//! * uplink LSF decoding: optimal, partial and sparse variants ([`uplink`],
//!   [`sparse`]),
//! * downlink LSF precoding via uplink-downlink duality and per-AP power
//!   allocation ([`downlink`]),
//! * the network power-consumption model and energy efficiency ([`power`]),
//! * an experiment harness with reproducible, seeded scenario runs
//!   ([`harness`]).
//!
//! All channel gains are expressed relative to the noise power, i.e. the
//! receiver noise variance is 1 in every internal computation, while transmit
//! powers are kept in watts. See [`config::NoiseConfig`] for the conversion.
//!
//! Data-parallel sections (Monte Carlo blocks, network drops, per-UE solver
//! instances) run on rayon when the default `parallel` feature is enabled and
//! fall back to sequential loops otherwise; results are bit-identical either
//! way.

pub mod channel;
pub mod combining;
pub mod config;
pub mod downlink;
mod error;
pub mod geometry;
pub mod grid;
pub mod harness;
pub mod linalg;
pub mod lsf;
pub mod par;
pub mod pilot;
pub mod power;
pub mod power_control;
pub mod rng;
pub mod snapshot;
pub mod sparse;
pub mod uplink;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Complex scalar used for all channel-domain quantities.
pub type C64 = num_complex::Complex64;

/// Dynamically sized complex matrix.
pub type CMat = nalgebra::DMatrix<C64>;

/// Dynamically sized complex vector.
pub type CVec = nalgebra::DVector<C64>;

/// Dynamically sized real matrix.
pub type RMat = nalgebra::DMatrix<f64>;

/// Dynamically sized real vector.
pub type RVec = nalgebra::DVector<f64>;
