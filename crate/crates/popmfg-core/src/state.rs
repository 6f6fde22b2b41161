//! Population states on the probability simplex and payoff vectors.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Absolute tolerance on the simplex constraint `sum x_i = 1`.
pub const SIMPLEX_TOL: f64 = 1e-9;

/// Distribution of strategy choices: a point on the `n`-simplex.
///
/// Construction validates the simplex invariants (entries nonnegative, sum
/// within [`SIMPLEX_TOL`] of one, at least two strategies); instances are
/// immutable afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct PopulationState {
    masses: Vec<f64>,
}

impl PopulationState {
    pub fn new(masses: Vec<f64>) -> Result<Self> {
        let mut masses = masses;
        if masses.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "a population state needs at least 2 strategies, got {}",
                masses.len()
            )));
        }
        let mut sum = 0.0;
        for m in masses.iter_mut() {
            if !m.is_finite() {
                return Err(Error::InvalidInput(format!("non-finite mass {m}")));
            }
            if *m < 0.0 {
                if *m < -SIMPLEX_TOL {
                    return Err(Error::InvalidInput(format!("negative mass {m}")));
                }
                *m = 0.0;
            }
            sum += *m;
        }
        if math::abs(sum - 1.0) > SIMPLEX_TOL {
            return Err(Error::InvalidInput(format!(
                "masses sum to {sum}, expected 1 within {SIMPLEX_TOL:e}"
            )));
        }
        Ok(Self { masses })
    }

    /// The barycenter `(1/n, ..., 1/n)`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "a population state needs at least 2 strategies, got {n}"
            )));
        }
        Ok(Self {
            masses: vec![1.0 / n as f64; n],
        })
    }

    /// Projects arbitrary values onto the simplex (clip negatives, rescale)
    /// and wraps the result.
    pub fn renormalized(values: &[f64]) -> Result<Self> {
        let mut v = values.to_vec();
        renormalize(&mut v)?;
        Self::new(v)
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    pub fn len(&self) -> usize {
        self.masses.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_masses(self) -> Vec<f64> {
        self.masses
    }
}

/// Payoffs per strategy, in the payoff units of the game.
#[derive(Debug, Clone, PartialEq)]
pub struct PayoffVector {
    values: Vec<f64>,
}

impl PayoffVector {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl From<Vec<f64>> for PayoffVector {
    fn from(values: Vec<f64>) -> Self {
        Self::new(values)
    }
}

/// Clips negative entries to zero and rescales to unit sum, in place.
///
/// Applied by the forward integrators after every step; Runge-Kutta does not
/// exactly preserve the simplex.
pub fn renormalize(values: &mut [f64]) -> Result<()> {
    let mut sum = 0.0;
    for v in values.iter_mut() {
        if *v < 0.0 {
            *v = 0.0;
        }
        sum += *v;
    }
    if !(sum.is_finite() && sum > 0.0) {
        return Err(Error::Domain(format!(
            "cannot renormalize onto the simplex: mass total is {sum}"
        )));
    }
    for v in values.iter_mut() {
        *v /= sum;
    }
    Ok(())
}

pub fn l2_norm(v: &[f64]) -> f64 {
    math::sqrt(v.iter().map(|a| a * a).sum())
}

pub fn linf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |acc, a| acc.max(math::abs(*a)))
}

pub fn l2_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    math::sqrt(
        a.iter()
            .zip(b)
            .map(|(x, y)| (x - y) * (x - y))
            .sum(),
    )
}
