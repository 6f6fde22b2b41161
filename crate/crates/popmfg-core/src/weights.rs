//! Revision-cost weights `q_ij(x)` and migration constraints.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default floor keeping mass-dependent weights bounded near the simplex
/// boundary.
pub const DEFAULT_WEIGHT_FLOOR: f64 = 1e-8;

/// Undirected connected graph of permitted strategy switches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MigrationGraph {
    n: usize,
    adjacency: Vec<bool>,
}

impl MigrationGraph {
    /// Builds a graph from a symmetric 0/1 adjacency matrix with zero
    /// diagonal; the graph must be connected.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        if n < 2 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(format!(
                "adjacency matrix must be square with n >= 2, got {n} rows"
            )));
        }
        let mut adjacency = vec![false; n * n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                if a > 1 {
                    return Err(Error::InvalidInput(format!(
                        "adjacency entries must be 0 or 1, got {a} at ({i}, {j})"
                    )));
                }
                if i == j && a != 0 {
                    return Err(Error::InvalidInput("adjacency diagonal must be zero".into()));
                }
                if rows[j][i] != a {
                    return Err(Error::InvalidInput(format!(
                        "adjacency must be symmetric, mismatch at ({i}, {j})"
                    )));
                }
                adjacency[i * n + j] = a == 1;
            }
        }
        let graph = Self { n, adjacency };
        if !graph.is_connected() {
            return Err(Error::InvalidInput("migration graph must be connected".into()));
        }
        Ok(graph)
    }

    /// The complete graph on `n` strategies.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidInput(format!(
                "a migration graph needs at least 2 strategies, got {n}"
            )));
        }
        let mut adjacency = vec![true; n * n];
        for i in 0..n {
            adjacency[i * n + i] = false;
        }
        Ok(Self { n, adjacency })
    }

    pub fn strategy_count(&self) -> usize {
        self.n
    }

    pub fn permits(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.n + j]
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..self.n {
                if self.permits(i, j) && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// The three weight families recovering the classic dynamics models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// `q_ij = 1` (Smith dynamics).
    Unit,
    /// `q_ij = 1 / x_j` (replicator dynamics).
    InverseTargetMass,
    /// `q_ij = x_i` (projection dynamics).
    SelfMass,
}

/// Revision-cost weights, optionally restricted to a migration graph.
///
/// Mass-dependent kinds clamp the relevant mass at `floor` so weights stay
/// positive and finite up to the simplex boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightScheme {
    pub kind: WeightKind,
    pub graph: Option<MigrationGraph>,
    pub floor: f64,
}

impl WeightScheme {
    pub fn new(kind: WeightKind) -> Self {
        Self {
            kind,
            graph: None,
            floor: DEFAULT_WEIGHT_FLOOR,
        }
    }

    pub fn unit() -> Self {
        Self::new(WeightKind::Unit)
    }

    pub fn inverse_target_mass() -> Self {
        Self::new(WeightKind::InverseTargetMass)
    }

    pub fn self_mass() -> Self {
        Self::new(WeightKind::SelfMass)
    }

    pub fn with_graph(mut self, graph: MigrationGraph) -> Self {
        self.graph = Some(graph);
        self
    }

    pub fn with_floor(mut self, floor: f64) -> Result<Self> {
        if !(floor.is_finite() && floor > 0.0) {
            return Err(Error::InvalidInput(format!(
                "weight floor must be positive, got {floor}"
            )));
        }
        self.floor = floor;
        Ok(self)
    }

    /// The weight `q_ij(x)` for the switch `i -> j`, or `None` when the
    /// migration graph forbids the link.
    ///
    /// Takes the raw mass vector so integrator stage values evaluate
    /// directly; `i == j` is rejected (self-transitions carry no weight).
    pub fn weight(&self, x: &[f64], i: usize, j: usize) -> Result<Option<f64>> {
        if i == j {
            return Err(Error::InvalidInput(format!(
                "weights are defined for distinct strategies only, got i = j = {i}"
            )));
        }
        if i >= x.len() || j >= x.len() {
            return Err(Error::InvalidInput(format!(
                "strategy index out of range: ({i}, {j}) for {} strategies",
                x.len()
            )));
        }
        if let Some(graph) = &self.graph {
            if graph.strategy_count() != x.len() {
                return Err(Error::InvalidInput(format!(
                    "migration graph has {} strategies, state has {}",
                    graph.strategy_count(),
                    x.len()
                )));
            }
            if !graph.permits(i, j) {
                return Ok(None);
            }
        }
        let q = match self.kind {
            WeightKind::Unit => 1.0,
            WeightKind::InverseTargetMass => 1.0 / x[j].max(self.floor),
            WeightKind::SelfMass => x[i].max(self.floor),
        };
        Ok(Some(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_weight_is_one() {
        let scheme = WeightScheme::unit();
        assert_eq!(scheme.weight(&[0.3, 0.7], 0, 1).unwrap(), Some(1.0));
        assert_eq!(scheme.weight(&[0.3, 0.7], 1, 0).unwrap(), Some(1.0));
    }

    #[test]
    fn inverse_target_mass_weight() {
        let scheme = WeightScheme::inverse_target_mass();
        assert_eq!(scheme.weight(&[0.5, 0.5], 0, 1).unwrap(), Some(2.0));
    }

    #[test]
    fn self_mass_weight() {
        let scheme = WeightScheme::self_mass();
        assert_eq!(scheme.weight(&[0.25, 0.75], 0, 1).unwrap(), Some(0.25));
    }

    #[test]
    fn floor_guards_the_boundary() {
        let scheme = WeightScheme::inverse_target_mass();
        let q = scheme.weight(&[1.0, 0.0], 0, 1).unwrap().unwrap();
        assert_eq!(q, 1.0 / DEFAULT_WEIGHT_FLOOR);
        let scheme = WeightScheme::self_mass();
        let q = scheme.weight(&[0.0, 1.0], 0, 1).unwrap().unwrap();
        assert_eq!(q, DEFAULT_WEIGHT_FLOOR);
    }

    #[test]
    fn graph_forbids_missing_links() {
        // Path graph 0 - 1 - 2: the (0, 2) link is forbidden.
        let graph = MigrationGraph::from_rows(&[
            vec![0, 1, 0],
            vec![1, 0, 1],
            vec![0, 1, 0],
        ])
        .unwrap();
        let scheme = WeightScheme::unit().with_graph(graph);
        let x = [0.2, 0.3, 0.5];
        assert_eq!(scheme.weight(&x, 0, 2).unwrap(), None);
        assert_eq!(scheme.weight(&x, 0, 1).unwrap(), Some(1.0));
    }

    #[test]
    fn self_transition_is_rejected() {
        let scheme = WeightScheme::unit();
        assert!(scheme.weight(&[0.5, 0.5], 1, 1).is_err());
    }

    #[test]
    fn weights_stay_positive_on_the_interior() {
        let x = [0.2, 0.3, 0.5];
        for scheme in [
            WeightScheme::unit(),
            WeightScheme::inverse_target_mass(),
            WeightScheme::self_mass(),
        ] {
            for i in 0..3 {
                for j in 0..3 {
                    if i == j {
                        continue;
                    }
                    let q = scheme.weight(&x, i, j).unwrap().unwrap();
                    assert!(q > 0.0);
                }
            }
        }
    }

    #[test]
    fn graph_validation() {
        // Asymmetric.
        assert!(MigrationGraph::from_rows(&[vec![0, 1], vec![0, 0]]).is_err());
        // Nonzero diagonal.
        assert!(MigrationGraph::from_rows(&[vec![1, 1], vec![1, 0]]).is_err());
        // Disconnected (two isolated pairs).
        assert!(MigrationGraph::from_rows(&[
            vec![0, 1, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
        ])
        .is_err());
        // Complete graph is fine.
        let g = MigrationGraph::complete(4).unwrap();
        assert!(g.permits(0, 3));
        assert!(!g.permits(2, 2));
    }

    #[test]
    fn invalid_floor_is_rejected() {
        assert!(WeightScheme::unit().with_floor(0.0).is_err());
        assert!(WeightScheme::unit().with_floor(-1.0).is_err());
        assert!(WeightScheme::unit().with_floor(1e-6).is_ok());
    }
}
