//! Average-rate maximization for an IRS-assisted UAV uplink under a
//! malicious jammer.
//!
//! A ground node transmits to a UAV while a jammer interferes; a passive
//! reflecting surface (IRS) reshapes both channels. The library jointly
//! optimizes the ground node's per-slot transmit power, the IRS phase
//! shifts and the UAV trajectory by alternating over the three blocks:
//!
//! * [`power::waterfill`] — closed-form capped water-filling for the
//!   power block,
//! * [`phases`] — per-slot Dinkelbach fractional programming over a
//!   unit-diagonal semidefinite relaxation, with Gaussian-randomization
//!   rank-1 recovery,
//! * [`trajectory`] — successive convex approximation of the trajectory
//!   block, solved by the in-repo barrier solver,
//! * [`ao`] — the outer alternating-optimization driver and the two
//!   benchmark pipelines (fixed line trajectory, no IRS).
//!
//! The two solver kernels used by the blocks live in [`convex`]: a
//! unit-diagonal complex SDP solver and a smooth convex subproblem
//! solver. Both are self-contained.

pub mod ao;
pub mod channel;
pub mod convex;
pub mod phases;
pub mod power;
pub mod scenario;
pub mod trajectory;

/// Shared tolerances used across modules.
pub mod tol {
    /// Feasibility tolerance for constraint checks.
    pub const FEAS: f64 = 1e-8;
    /// Allowed negative-eigenvalue slack when checking matrices for PSD.
    pub const PSD: f64 = 1e-9;
    /// Default solver tolerance (duality gap / stationarity).
    pub const SOLVER: f64 = 1e-6;
    /// Allowed objective decrease per block update before it counts as a
    /// monotonicity violation.
    pub const MONO: f64 = 1e-6;
}

pub use scenario::{IrsGrid, PhaseSchedule, Position3, PowerProfile, Scenario, Trajectory};
