//! Currency-network dedollarization simulator and reserve-composition
//! regression toolkit.
//!
//! The crate has two halves that share nothing but a few domain types:
//!
//! * a Monte Carlo simulator of dedollarization contagion on a
//!   hub-and-spoke world network with inflation and debt-interest
//!   feedback ([`config`], [`network`], [`econ`], [`cascade`],
//!   [`ensemble`]), and
//! * an econometric pipeline for yearly reserve-composition panels:
//!   log-log OLS with currency dummies, Ridge, Lasso, heteroskedasticity
//!   and stability diagnostics, and a dummy-coefficient equilibrium-year
//!   extrapolation ([`panel`], [`regress`]).
//!
//! Everything is deterministic given a master seed; ensemble runs derive
//! independent streams from `(master_seed, run_index)`.

pub mod cascade;
pub mod config;
pub mod econ;
pub mod ensemble;
pub mod network;
pub mod panel;
pub mod regress;
pub mod rng;
pub mod state;
pub mod svg;

pub use config::SimConfig;
pub use ensemble::{monte_carlo, run_simulation, EnsembleStats, Trajectory};
pub use network::{CurrencyLabel, Graph};
pub use state::{CountryState, WorldState};
