//! Population game payoff functions.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::state::{PayoffVector, PopulationState};

/// Default barrier offset for [`GameSpec::epsilon_modified`], keeping the
/// logarithm finite on the simplex boundary.
pub const DEFAULT_BARRIER_DELTA: f64 = 1e-6;

/// Payoff function `F: simplex -> R^n` of a population game.
#[derive(Debug, Clone, PartialEq)]
pub enum GameSpec {
    /// Six-route congestion game with two coupled corridors; payoffs are the
    /// negated link loads.
    Congestion6,
    /// Standard Rock-Paper-Scissors: each strategy beats the next cyclically.
    Rps3,
    /// Affine game `F(x) = A x + b`.
    Linear { matrix: Vec<Vec<f64>>, offset: Vec<f64> },
    /// Barrier modification `F(x) - epsilon * ln(x + delta)` applied
    /// componentwise; forces an interior equilibrium and strengthens
    /// contractivity.
    EpsilonModified {
        base: Box<GameSpec>,
        epsilon: f64,
        delta: f64,
    },
}

impl GameSpec {
    pub fn linear(matrix: Vec<Vec<f64>>, offset: Vec<f64>) -> Result<Self> {
        let n = offset.len();
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "a linear game needs at least 2 strategies, got {n}"
            )));
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidInput(format!(
                "linear game matrix must be {n}x{n} to match the offset"
            )));
        }
        let finite = offset.iter().all(|v| v.is_finite())
            && matrix.iter().flatten().all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidInput("non-finite linear game coefficient".into()));
        }
        Ok(GameSpec::Linear { matrix, offset })
    }

    pub fn epsilon_modified(base: GameSpec, epsilon: f64, delta: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidInput(format!(
                "barrier strength must be positive, got {epsilon}"
            )));
        }
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidInput(format!(
                "barrier offset must be positive, got {delta}"
            )));
        }
        Ok(GameSpec::EpsilonModified {
            base: Box::new(base),
            epsilon,
            delta,
        })
    }

    /// Number of strategies `n`.
    pub fn strategy_count(&self) -> usize {
        match self {
            GameSpec::Congestion6 => 6,
            GameSpec::Rps3 => 3,
            GameSpec::Linear { offset, .. } => offset.len(),
            GameSpec::EpsilonModified { base, .. } => base.strategy_count(),
        }
    }

    /// Evaluates `F` on a raw mass vector without simplex validation.
    ///
    /// Integrator stages sit slightly off the simplex; payoffs extend to
    /// such points by the same closed forms.
    pub fn payoff(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.strategy_count()];
        self.payoff_into(x, &mut out)?;
        Ok(out)
    }

    pub fn payoff_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        let n = self.strategy_count();
        if x.len() != n || out.len() != n {
            return Err(Error::InvalidInput(format!(
                "payoff evaluation: expected {n} strategies, got state {} / output {}",
                x.len(),
                out.len()
            )));
        }
        match self {
            GameSpec::Congestion6 => {
                out[0] = -(2.5 * x[0] + x[1]);
                out[1] = -(x[0] + 2.5 * x[1] + x[2] + 0.5 * x[4]);
                out[2] = -(x[1] + 2.5 * x[2]);
                out[3] = -(2.5 * x[3] + x[4]);
                out[4] = -(0.5 * x[1] + x[3] + 2.5 * x[4] + x[5]);
                out[5] = -(x[4] + 2.5 * x[5]);
            }
            GameSpec::Rps3 => {
                out[0] = -x[1] + x[2];
                out[1] = x[0] - x[2];
                out[2] = -x[0] + x[1];
            }
            GameSpec::Linear { matrix, offset } => {
                for (i, row) in matrix.iter().enumerate() {
                    let mut acc = offset[i];
                    for (a, xv) in row.iter().zip(x) {
                        acc += a * xv;
                    }
                    out[i] = acc;
                }
            }
            GameSpec::EpsilonModified { base, epsilon, delta } => {
                base.payoff_into(x, out)?;
                for (o, xv) in out.iter_mut().zip(x) {
                    let arg = xv + delta;
                    if arg <= 0.0 {
                        return Err(Error::Domain(format!(
                            "barrier log undefined at mass {xv} with offset {delta}"
                        )));
                    }
                    *o -= epsilon * math::ln(arg);
                }
            }
        }
        Ok(())
    }
}

/// Evaluates the payoff vector `F(x)` at a validated population state.
pub fn evaluate_payoff(game: &GameSpec, x: &PopulationState) -> Result<PayoffVector> {
    Ok(PayoffVector::new(game.payoff(x.masses())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::linf_norm;
    use proptest::prelude::*;

    #[test]
    fn rps_is_zero_at_the_barycenter() {
        let x = PopulationState::uniform(3).unwrap();
        let p = evaluate_payoff(&GameSpec::Rps3, &x).unwrap();
        assert_eq!(p.values(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn rps_at_pure_rock() {
        let x = PopulationState::new(vec![1.0, 0.0, 0.0]).unwrap();
        let p = evaluate_payoff(&GameSpec::Rps3, &x).unwrap();
        assert_eq!(p.values(), &[0.0, 1.0, -1.0]);
    }

    #[test]
    fn congestion_at_the_uniform_state() {
        let x = PopulationState::uniform(6).unwrap();
        let p = evaluate_payoff(&GameSpec::Congestion6, &x).unwrap();
        assert!((p.values()[0] - (-7.0 / 12.0)).abs() < 1e-15);
        assert!((p.values()[1] - (-5.0 / 6.0)).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        assert!(GameSpec::Rps3.payoff(&[0.5, 0.5]).is_err());
        assert!(GameSpec::Congestion6.payoff(&[1.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn linear_game_evaluates_affinely() {
        let game = GameSpec::linear(
            vec![vec![-1.0, 0.0], vec![0.0, -1.0]],
            vec![0.25, 0.5],
        )
        .unwrap();
        let x = PopulationState::new(vec![0.4, 0.6]).unwrap();
        let p = evaluate_payoff(&game, &x).unwrap();
        assert_eq!(p.values(), &[-0.15, -0.1]);
    }

    #[test]
    fn linear_game_validation() {
        assert!(GameSpec::linear(vec![vec![1.0]], vec![0.0]).is_err());
        assert!(GameSpec::linear(vec![vec![1.0, 2.0]], vec![0.0, 0.0]).is_err());
        assert!(GameSpec::linear(
            vec![vec![f64::NAN, 0.0], vec![0.0, 0.0]],
            vec![0.0, 0.0]
        )
        .is_err());
    }

    #[test]
    fn barrier_game_requires_positive_arguments() {
        let game = GameSpec::epsilon_modified(GameSpec::Rps3, 0.1, 1e-6).unwrap();
        assert!(game.payoff(&[1.0, 0.0, 0.0]).is_ok());
        // A stage value below -delta leaves the log domain.
        assert!(matches!(
            game.payoff(&[-1e-3, 0.5, 0.5]),
            Err(Error::Domain(_))
        ));
        assert!(GameSpec::epsilon_modified(GameSpec::Rps3, 0.0, 1e-6).is_err());
        assert!(GameSpec::epsilon_modified(GameSpec::Rps3, 0.1, 0.0).is_err());
    }

    #[test]
    fn payoff_evaluation_is_deterministic() {
        let x = PopulationState::new(vec![0.2, 0.3, 0.5]).unwrap();
        let a = evaluate_payoff(&GameSpec::Rps3, &x).unwrap();
        let b = evaluate_payoff(&GameSpec::Rps3, &x).unwrap();
        assert_eq!(a.values(), b.values());
    }

    proptest! {
        #[test]
        fn rps_payoffs_sum_to_zero(raw in proptest::collection::vec(0.01f64..1.0, 3)) {
            let x = PopulationState::renormalized(&raw).unwrap();
            let p = evaluate_payoff(&GameSpec::Rps3, &x).unwrap();
            let total: f64 = p.values().iter().sum();
            prop_assert!(total.abs() <= 1e-15);
        }

        #[test]
        fn barrier_modification_converges_to_the_base_game(
            raw in proptest::collection::vec(0.05f64..1.0, 3),
            eps in 1e-6f64..1e-2,
        ) {
            let delta = 1e-6;
            let x = PopulationState::renormalized(&raw).unwrap();
            let base = evaluate_payoff(&GameSpec::Rps3, &x).unwrap();
            let modified = GameSpec::epsilon_modified(GameSpec::Rps3, eps, delta).unwrap();
            let shifted = evaluate_payoff(&modified, &x).unwrap();
            let gap: Vec<f64> = shifted
                .values()
                .iter()
                .zip(base.values())
                .map(|(a, b)| a - b)
                .collect();
            let bound = eps
                * x.masses()
                    .iter()
                    .map(|m| libm::fabs(libm::log(m + delta)))
                    .fold(0.0f64, f64::max);
            prop_assert!(linf_norm(&gap) <= bound + 1e-12);
        }
    }
}
