//! Robust multi-user MISO precoding for visible-light downlinks.
//!
//! A transmitter with `L` ceiling LEDs serves `K` single-photodiode users.
//! Each user feeds back a scalar-quantized (log-domain) version of its
//! channel vector, so the transmitter only knows a rectangular uncertainty
//! box per user. This crate designs the per-user beamvectors that minimize
//! the optical power headroom per LED while guaranteeing a target SNIR for
//! *every* channel inside the boxes — a finite second-order cone program
//! over the box vertices — and also the non-robust variant that trusts the
//! reconstruction point.
//!
//! Pipeline, bottom to top:
//!
//! - [`scenario`]: room geometry, LED grid placement, random user drops
//! - [`channel`]: Lambertian line-of-sight gains between LEDs and PDs
//! - [`quantizer`]: uniform quantization of gains in dB, range calibration
//! - [`region`]: per-user uncertainty boxes and their vertex enumeration
//! - [`socp`]: self-contained second-order cone solver (interior point on
//!   the homogeneous self-dual embedding, Nesterov–Todd scaling)
//! - [`precoder`]: builds the robust / non-robust cone programs and
//!   post-processes solutions
//! - [`metrics`]: SNIR evaluation, worst-corner scans, per-LED power
//!
//! The crate is `no_std`-compatible (`alloc` required): disable default
//! features and enable `libm` for the float math fallback. Everything here
//! is pure computation; file formats, the CLI, and the Monte Carlo harness
//! live in the companion `luxbeam` crate.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("luxbeam-core needs either the `std` or the `libm` feature");

extern crate alloc;

pub mod channel;
pub mod linalg;
mod math;
pub mod metrics;
pub mod precoder;
pub mod quantizer;
pub mod region;
pub mod scenario;
pub mod socp;

pub use channel::{ChannelMatrix, OpticalParams};
pub use metrics::EvaluationReport;
pub use precoder::{DesignOutcome, DesignSpec, DesignStatus};
pub use quantizer::{QuantizedChannel, QuantizerConfig};
pub use region::{UncertaintyBox, VertexSet};
pub use scenario::{Point3, RoomConfig, Scenario};
pub use socp::{ConeBlock, ConeProgram, SolveResult, SolveStatus, SolverSettings};
