//! Optimal strategy revision in population games.
//!
//! A large population of agents repeatedly revises its choice among `n`
//! strategies. The population state `x(t)` lives on the probability simplex
//! and evolves under a revision protocol; the protocol that maximizes a
//! finite-horizon payoff with quadratic revision costs is the pairwise rate
//!
//! ```text
//! rate(i -> j) = [p_j(t) - p_i(t)]_+ / q_ij(x(t))
//! ```
//!
//! where the payoff vector `p(t) = v(t, x(t))` solves a backward
//! Hamilton-Jacobi equation coupled to the forward population flow. This
//! crate computes the coupled pair by damped fixed-point iteration over
//! (forward, backward) ODE solves, provides the classic evolutionary
//! dynamics (Smith, replicator, projection) as closed forms and as special
//! cases of the weighted protocol, and validates the mean-field model
//! against a finite-agent Monte Carlo simulator.
//!
//! The crate is `no_std` (with `alloc`); IO, configuration, and the command
//! line front end live in the companion `popmfg-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod agents;
pub mod analysis;
pub mod dynamics;
pub mod error;
pub mod game;
pub mod grid;
pub mod hj;
pub mod solver;
pub mod state;
pub mod weights;

mod math;
mod ode;

pub use agents::{simulate, AgentPopulation, PayoffSignal};
pub use analysis::{
    contractiveness_probe, horizon_sweep, is_nash, nash_equilibrium,
    payoff_functional_estimate, positive_correlation_audit, stationary_diagnostics, sweep_point,
    ContractivenessProbe, CorrelationAudit, RolloutEstimate, StationaryDiagnostics, SweepConfig,
    SweepPoint,
};
pub use dynamics::{
    closed_form_field, ed_vector_field, integrate_forward, protocol_rate, DynamicsModel,
    PayoffSource, ProtocolKind,
};
pub use error::{Error, Result};
pub use game::{evaluate_payoff, GameSpec};
pub use grid::{TimeGrid, Trajectory};
pub use hj::{hj_rhs, integrate_backward, ValueTrajectory};
pub use solver::{fixed_point_error, solve, SolveResult, SolverConfig};
pub use state::{l2_distance, l2_norm, linf_norm, renormalize, PayoffVector, PopulationState};
pub use weights::{MigrationGraph, WeightKind, WeightScheme, DEFAULT_WEIGHT_FLOOR};
