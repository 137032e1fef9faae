//! Shrinking-target laboratory for toral translations and reparametrized
//! linear flows.
//!
//! The crate builds Diophantine vectors with certified approximation
//! behaviour, generates the radii schedules used in shrinking-target
//! dichotomies, verifies the relevant inequality chains in exact
//! big-rational / interval arithmetic, and cross-checks the verdicts by
//! seeded simulation where the constants are small enough to simulate.
//!
//! Module map:
//!
//! - [`real`] — arbitrary-precision ball arithmetic (`RealScalar`): every
//!   quantity carries a guaranteed error radius and undecidable comparisons
//!   are explicit errors, never guesses.
//! - [`diophantine`] — continued fractions, distance-to-lattice arithmetic,
//!   brute-force simultaneous approximation, and constructors for vectors
//!   with certified Liouville-type decay.
//! - [`torus`] — points, sup-metric balls, translation orbits and measure
//!   computation (exact in one dimension, grid / Monte-Carlo above).
//! - [`targets`] — radius schedules, hit sets and Borel–Cantelli
//!   experiments, including the empty-limsup and non-BC constructions.
//! - [`mstp`] — the positive direction: ε(α), the covering-lemma
//!   trichotomy as an executable check, and the η lower-bound experiment.
//! - [`flow`] — reparametrized linear flows on T^{d+1}: integration,
//!   Poincaré sections, the invariant density and the monotone
//!   shrinking-target failure experiment.
//! - [`cli`] — declarative experiment runner with reproducible CSV/JSON
//!   reports (exposed through the `shrinklab` binary).

pub mod cli;
pub mod diophantine;
pub mod error;
pub mod flow;
pub mod mstp;
pub mod num_util;
pub mod real;
pub mod targets;
pub mod torus;

pub use error::{Error, Result};

/// Verification regime for experiments whose faithful constants are far
/// beyond direct simulation.
///
/// `Faithful` runs the paper-scale constants through symbolic inequality
/// chains only; `Simulable` uses scaled-down constants small enough for
/// direct orbit simulation and Monte-Carlo cross-checks. Reports always
/// name the regime they were produced under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Faithful,
    Simulable,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Regime::Faithful => write!(f, "faithful"),
            Regime::Simulable => write!(f, "simulable"),
        }
    }
}
