//! Synthesis and simulated execution of human-like and robotic-like
//! 3-D movements on a UR3-class arm.
//!
//! The pipeline has four stages:
//!
//! 1. [`synthesis`] generates timed Cartesian paths between random target
//!    points, with either a bell-shaped (lognormal) or trapezoidal speed
//!    profile built from the [`lognormal`] stroke primitives.
//! 2. [`kinematics`] converts paths to joint-space trajectories through
//!    damped-least-squares inverse kinematics with a fixed tool orientation.
//! 3. [`control`] interpolates the joint trajectory with cubic splines and
//!    drives a simulated velocity-controlled plant through a PI
//!    feed-forward loop at 125 Hz.
//! 4. [`evaluation`] recovers tool-point speed from executed trajectories
//!    and scores tracking fidelity as an SNR in decibels.
//!
//! [`manifest`] and [`pipeline`] tie the stages together for the CLI.

pub mod error;
pub mod lognormal;

pub use error::{Error, Result};
