//! Uniform time grids and piecewise-linear trajectories.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::state::SIMPLEX_TOL;

/// Uniform grid of `steps + 1` nodes over `[t0, t_end]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeGrid {
    t0: f64,
    t_end: f64,
    steps: usize,
}

impl TimeGrid {
    pub fn new(t0: f64, t_end: f64, steps: usize) -> Result<Self> {
        if !(t0.is_finite() && t_end.is_finite()) || t0 < 0.0 || t_end <= t0 {
            return Err(Error::InvalidInput(format!(
                "need 0 <= t0 < t_end, got t0 = {t0}, t_end = {t_end}"
            )));
        }
        if steps < 2 {
            return Err(Error::InvalidInput(format!(
                "a time grid needs at least 2 steps, got {steps}"
            )));
        }
        Ok(Self { t0, t_end, steps })
    }

    /// Builds a grid with spacing as close as possible to `dt` (the step
    /// count is rounded to an integer).
    pub fn from_step_size(t0: f64, t_end: f64, dt: f64) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::InvalidInput(format!("step size must be positive, got {dt}")));
        }
        let steps = math::round((t_end - t0) / dt) as usize;
        Self::new(t0, t_end, steps.max(2))
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn node_count(&self) -> usize {
        self.steps + 1
    }

    pub fn dt(&self) -> f64 {
        (self.t_end - self.t0) / self.steps as f64
    }

    pub fn span(&self) -> f64 {
        self.t_end - self.t0
    }

    /// Time of node `k`; the last node is `t_end` exactly.
    pub fn node_time(&self, k: usize) -> f64 {
        debug_assert!(k <= self.steps);
        if k == self.steps {
            self.t_end
        } else {
            self.t0 + k as f64 * self.dt()
        }
    }
}

/// Vector-valued path sampled on a [`TimeGrid`], evaluated between nodes by
/// linear interpolation.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    grid: TimeGrid,
    dim: usize,
    data: Vec<f64>,
}

impl Trajectory {
    /// Wraps flat row-major node data (`node_count * dim` values).
    pub fn from_flat(grid: TimeGrid, dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("trajectory dimension must be positive".into()));
        }
        if data.len() != grid.node_count() * dim {
            return Err(Error::InvalidInput(format!(
                "expected {} node values ({} nodes x dim {}), got {}",
                grid.node_count() * dim,
                grid.node_count(),
                dim,
                data.len()
            )));
        }
        Ok(Self { grid, dim, data })
    }

    pub fn from_nodes(grid: TimeGrid, nodes: &[Vec<f64>]) -> Result<Self> {
        if nodes.is_empty() || nodes[0].is_empty() {
            return Err(Error::InvalidInput("trajectory needs non-empty nodes".into()));
        }
        let dim = nodes[0].len();
        if nodes.iter().any(|n| n.len() != dim) {
            return Err(Error::InvalidInput("ragged trajectory nodes".into()));
        }
        let mut data = Vec::with_capacity(nodes.len() * dim);
        for node in nodes {
            data.extend_from_slice(node);
        }
        Self::from_flat(grid, dim, data)
    }

    /// A trajectory holding the same vector at every node.
    pub fn constant(grid: TimeGrid, values: &[f64]) -> Result<Self> {
        let mut data = Vec::with_capacity(grid.node_count() * values.len());
        for _ in 0..grid.node_count() {
            data.extend_from_slice(values);
        }
        Self::from_flat(grid, values.len(), data)
    }

    pub fn grid(&self) -> &TimeGrid {
        &self.grid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn node(&self, k: usize) -> &[f64] {
        &self.data[k * self.dim..(k + 1) * self.dim]
    }

    pub fn nodes(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim)
    }

    pub fn eval(&self, t: f64) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.dim];
        self.eval_into(t, &mut out)?;
        Ok(out)
    }

    /// Linear interpolation between the bracketing nodes; queries within
    /// `1e-9` steps of a node return that node exactly.
    pub fn eval_into(&self, t: f64, out: &mut [f64]) -> Result<()> {
        debug_assert_eq!(out.len(), self.dim);
        let (t0, t_end) = (self.grid.t0, self.grid.t_end);
        let slack = 1e-9 * self.grid.span();
        if !t.is_finite() || t < t0 - slack || t > t_end + slack {
            return Err(Error::OutOfRange { t, t0, t_end });
        }
        let tc = t.clamp(t0, t_end);
        let s = (tc - t0) / self.grid.dt();
        let nearest = math::round(s);
        if math::abs(s - nearest) <= 1e-9 && nearest >= 0.0 && nearest <= self.grid.steps as f64 {
            out.copy_from_slice(self.node(nearest as usize));
            return Ok(());
        }
        let k = (math::floor(s) as usize).min(self.grid.steps - 1);
        let theta = (tc - self.grid.node_time(k)) / self.grid.dt();
        let a = self.node(k);
        let b = self.node(k + 1);
        if theta <= 0.0 {
            out.copy_from_slice(a);
        } else if theta >= 1.0 {
            out.copy_from_slice(b);
        } else {
            for (o, (ai, bi)) in out.iter_mut().zip(a.iter().zip(b)) {
                *o = (1.0 - theta) * ai + theta * bi;
            }
        }
        Ok(())
    }

    /// Verifies the state-trajectory invariant: every node on the simplex
    /// within `tol`.
    pub fn check_simplex(&self, tol: f64) -> Result<()> {
        for (k, node) in self.nodes().enumerate() {
            let mut sum = 0.0;
            for &m in node {
                if !m.is_finite() || m < -tol {
                    return Err(Error::InvalidInput(format!(
                        "node {k} is off the simplex: mass {m}"
                    )));
                }
                sum += m;
            }
            if math::abs(sum - 1.0) > tol {
                return Err(Error::InvalidInput(format!(
                    "node {k} is off the simplex: sum {sum}"
                )));
            }
        }
        Ok(())
    }
}

/// Convenience wrapper for [`Trajectory::check_simplex`] at the default
/// tolerance.
pub(crate) fn check_state_trajectory(traj: &Trajectory) -> Result<()> {
    traj.check_simplex(SIMPLEX_TOL)
}
