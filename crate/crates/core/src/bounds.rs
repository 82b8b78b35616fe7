//! Genus lower bounds: closed formulas for complete and complete
//! multipartite families, the Euler-formula bound driven by girth, and
//! obstruction-subgraph bounds with validated witnesses.
//!
//! Everything here is exact integer arithmetic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{self, SimpleGraph, SubgraphWitness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("{0}")]
    Domain(String),
    #[error("Euler bounds require a connected graph")]
    Disconnected,
}

/// The graph families with built-in genus formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    /// K_n
    Complete(usize),
    /// K_{m,n}
    CompleteBipartite(usize, usize),
    /// K_{n,n,n}
    CompleteTripartite(usize),
    /// K_{n,n,n,n}
    CompleteQuadripartite(usize),
}

fn ceil_div(num: i64, den: i64) -> i64 {
    debug_assert!(den > 0);
    (num + den - 1).div_euclid(den)
}

/// Orientable genus of the family member. K_{3,3,3,3} is the stated
/// exceptional value 5.
pub fn formula_genus(family: GraphFamily) -> Result<usize, BoundsError> {
    match family {
        GraphFamily::Complete(n) => {
            if n < 3 {
                return Err(BoundsError::Domain(format!("K_n needs n >= 3, got {n}")));
            }
            Ok(ceil_div(((n - 3) * (n - 4)) as i64, 12) as usize)
        }
        GraphFamily::CompleteBipartite(m, n) => {
            if m < 2 || n < 2 {
                return Err(BoundsError::Domain(format!("K_{{m,n}} needs m,n >= 2, got {m},{n}")));
            }
            Ok(ceil_div(((m - 2) * (n - 2)) as i64, 4) as usize)
        }
        GraphFamily::CompleteTripartite(n) => {
            if n < 1 {
                return Err(BoundsError::Domain("K_{n,n,n} needs n >= 1".into()));
            }
            Ok((n - 1) * n.saturating_sub(2) / 2)
        }
        GraphFamily::CompleteQuadripartite(n) => {
            if n < 1 {
                return Err(BoundsError::Domain("K_{n,n,n,n} needs n >= 1".into()));
            }
            if n == 3 {
                Ok(5)
            } else {
                Ok((n - 1) * (n - 1))
            }
        }
    }
}

/// Nonorientable genus of the family member. K_7 is the stated exceptional
/// value 3.
pub fn formula_nonorientable_genus(family: GraphFamily) -> Result<usize, BoundsError> {
    match family {
        GraphFamily::Complete(n) => {
            if n < 3 {
                return Err(BoundsError::Domain(format!("K_n needs n >= 3, got {n}")));
            }
            if n == 7 {
                Ok(3)
            } else {
                Ok(ceil_div(((n - 3) * (n - 4)) as i64, 6) as usize)
            }
        }
        GraphFamily::CompleteBipartite(m, n) => {
            if m < 2 || n < 2 {
                return Err(BoundsError::Domain(format!("K_{{m,n}} needs m,n >= 2, got {m},{n}")));
            }
            Ok(ceil_div(((m - 2) * (n - 2)) as i64, 2) as usize)
        }
        other => Err(BoundsError::Domain(format!(
            "no built-in nonorientable formula for {other:?}"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundProvenance {
    EulerFormula,
    ObstructionSubgraph,
    ClosedFormula,
}

/// A genus lower bound with its provenance; obstruction bounds carry the
/// validated witness they came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bound: usize,
    pub orientable: bool,
    pub provenance: BoundProvenance,
    pub witness: Option<SubgraphWitness>,
}

/// Euler-formula lower bound. With girth g every face has at least g sides,
/// so g*F <= 2E; solving the Euler relation for the genus gives the bound.
/// True girth is used up to 5 and clamped to 3 beyond; forests report 0.
pub fn euler_lower_bound(
    graph: &SimpleGraph,
    orientable: bool,
) -> Result<BoundReport, BoundsError> {
    if !graph.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    let report = |bound: usize| BoundReport {
        bound,
        orientable,
        provenance: BoundProvenance::EulerFormula,
        witness: None,
    };
    let g = match graph.girth() {
        None => return Ok(report(0)),
        Some(g) if g <= 5 => g as i64,
        Some(_) => 3,
    };
    let v = graph.vertex_count() as i64;
    let e = graph.edge_count() as i64;
    // E(1 - 2/g) - V + 2, kept exact as (E(g-2) - gV + 2g) / g
    let num = e * (g - 2) - g * v + 2 * g;
    let bound = if orientable {
        ceil_div(num, 2 * g)
    } else {
        ceil_div(num, g)
    };
    Ok(report(bound.max(0) as usize))
}

#[derive(Debug, Clone, Copy)]
enum Obstruction {
    Clique(usize),
    Bipartite(usize, usize),
}

impl Obstruction {
    fn bound(&self, orientable: bool) -> usize {
        let family = match *self {
            Obstruction::Clique(n) => GraphFamily::Complete(n),
            Obstruction::Bipartite(m, n) => GraphFamily::CompleteBipartite(m, n),
        };
        if orientable {
            formula_genus(family).expect("menu entries are in the formula domain")
        } else {
            formula_nonorientable_genus(family).expect("menu entries are in the formula domain")
        }
    }

    fn find(&self, graph: &SimpleGraph, step_limit: Option<u64>) -> Option<SubgraphWitness> {
        match *self {
            Obstruction::Clique(n) => graph::find_clique_limited(graph, n, step_limit),
            Obstruction::Bipartite(m, n) => {
                graph::find_complete_bipartite_limited(graph, m, n, step_limit)
            }
        }
    }
}

const OBSTRUCTION_MENU: [Obstruction; 8] = [
    Obstruction::Clique(9),
    Obstruction::Clique(8),
    Obstruction::Clique(7),
    Obstruction::Bipartite(6, 4),
    Obstruction::Bipartite(4, 5),
    Obstruction::Bipartite(5, 4),
    Obstruction::Bipartite(4, 4),
    Obstruction::Bipartite(3, 3),
];

/// Scans the fixed obstruction menu in decreasing bound order and returns
/// the first (hence best) subgraph found, with its formula bound. Returns
/// bound 0 with no witness when nothing is found within the step limit.
pub fn obstruction_lower_bound(
    graph: &SimpleGraph,
    orientable: bool,
    step_limit: Option<u64>,
) -> BoundReport {
    let mut menu: Vec<(usize, usize)> = OBSTRUCTION_MENU
        .iter()
        .enumerate()
        .map(|(pos, obs)| (obs.bound(orientable), pos))
        .collect();
    menu.sort_by_key(|&(bound, pos)| (std::cmp::Reverse(bound), pos));
    for (bound, pos) in menu {
        if bound == 0 {
            break;
        }
        let obs = OBSTRUCTION_MENU[pos];
        if let Some(witness) = obs.find(graph, step_limit) {
            debug_assert!(witness.validate(graph));
            return BoundReport {
                bound,
                orientable,
                provenance: BoundProvenance::ObstructionSubgraph,
                witness: Some(witness),
            };
        }
    }
    BoundReport { bound: 0, orientable, provenance: BoundProvenance::ObstructionSubgraph, witness: None }
}

/// The better of the Euler and obstruction bounds; ties prefer the Euler
/// bound, which is cheaper to audit.
pub fn best_lower_bound(graph: &SimpleGraph, orientable: bool) -> Result<BoundReport, BoundsError> {
    let euler = euler_lower_bound(graph, orientable)?;
    let obstruction = obstruction_lower_bound(graph, orientable, None);
    if obstruction.bound > euler.bound {
        Ok(obstruction)
    } else {
        Ok(euler)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::{build_noncyclic_graph, complete_graph, complete_multipartite};

    fn gamma(name: &str) -> SimpleGraph {
        build_noncyclic_graph(&catalog::find_group(name).unwrap()).unwrap()
    }

    #[test]
    fn orientable_formula_values() {
        assert_eq!(formula_genus(GraphFamily::Complete(7)).unwrap(), 1);
        assert_eq!(formula_genus(GraphFamily::CompleteQuadripartite(3)).unwrap(), 5);
        assert_eq!(formula_genus(GraphFamily::CompleteQuadripartite(2)).unwrap(), 1);
        assert_eq!(formula_genus(GraphFamily::CompleteTripartite(1)).unwrap(), 0);
        assert_eq!(formula_genus(GraphFamily::CompleteTripartite(4)).unwrap(), 3);
        assert!(formula_genus(GraphFamily::Complete(2)).is_err());
        assert!(formula_genus(GraphFamily::CompleteBipartite(1, 5)).is_err());
    }

    #[test]
    fn nonorientable_formula_values() {
        assert_eq!(formula_nonorientable_genus(GraphFamily::Complete(7)).unwrap(), 3);
        assert_eq!(formula_nonorientable_genus(GraphFamily::Complete(6)).unwrap(), 1);
        assert_eq!(formula_nonorientable_genus(GraphFamily::CompleteBipartite(4, 4)).unwrap(), 2);
        assert!(formula_nonorientable_genus(GraphFamily::CompleteTripartite(3)).is_err());
    }

    #[test]
    fn formula_monotonicity_within_families() {
        for n in 3..12 {
            assert!(
                formula_genus(GraphFamily::Complete(n + 1)).unwrap()
                    >= formula_genus(GraphFamily::Complete(n)).unwrap()
            );
        }
        for m in 2..8 {
            for n in 2..8 {
                assert!(
                    formula_genus(GraphFamily::CompleteBipartite(m + 1, n)).unwrap()
                        >= formula_genus(GraphFamily::CompleteBipartite(m, n)).unwrap()
                );
                assert!(
                    formula_nonorientable_genus(GraphFamily::CompleteBipartite(m, n + 1)).unwrap()
                        >= formula_nonorientable_genus(GraphFamily::CompleteBipartite(m, n))
                            .unwrap()
                );
            }
        }
    }

    #[test]
    fn euler_bound_examples() {
        let g = gamma("Z2xZ6");
        assert_eq!(euler_lower_bound(&g, false).unwrap().bound, 2);
        assert_eq!(euler_lower_bound(&g, true).unwrap().bound, 1);
        assert_eq!(euler_lower_bound(&complete_graph(4), true).unwrap().bound, 0);
        // forests report 0
        let mut tree = SimpleGraph::with_order(3);
        tree.add_edge(0, 1).unwrap();
        tree.add_edge(1, 2).unwrap();
        assert_eq!(euler_lower_bound(&tree, true).unwrap().bound, 0);
        // disconnected input is refused
        let two = SimpleGraph::with_order(2);
        assert_eq!(euler_lower_bound(&two, true).unwrap_err(), BoundsError::Disconnected);
    }

    #[test]
    fn euler_bound_is_tight_for_complete_families() {
        for n in 3..=9 {
            let bound = euler_lower_bound(&complete_graph(n), true).unwrap().bound;
            assert_eq!(bound, formula_genus(GraphFamily::Complete(n)).unwrap(), "K{n}");
        }
        for m in 2..=5 {
            for n in m..=6 {
                let g = complete_multipartite(&[m, n]).unwrap();
                assert_eq!(
                    euler_lower_bound(&g, true).unwrap().bound,
                    formula_genus(GraphFamily::CompleteBipartite(m, n)).unwrap(),
                    "K{m},{n}"
                );
                assert_eq!(
                    euler_lower_bound(&g, false).unwrap().bound,
                    formula_nonorientable_genus(GraphFamily::CompleteBipartite(m, n)).unwrap(),
                    "K{m},{n} nonorientable"
                );
            }
        }
    }

    #[test]
    fn euler_bound_is_label_invariant() {
        let g = gamma("D8");
        let perm: Vec<usize> = (0..g.vertex_count()).rev().collect();
        let mut relabeled = SimpleGraph::with_order(g.vertex_count());
        for (u, v) in g.edges() {
            relabeled.add_edge(perm[u], perm[v]).unwrap();
        }
        assert_eq!(
            euler_lower_bound(&g, true).unwrap().bound,
            euler_lower_bound(&relabeled, true).unwrap().bound
        );
    }

    #[test]
    fn obstruction_examples() {
        // Z2^4 has at least 9 involutions inducing K9
        let g = gamma("Z2xZ2xZ2xZ2");
        let report = obstruction_lower_bound(&g, true, None);
        assert!(report.bound >= 3);
        assert!(report.witness.unwrap().validate(&g));

        let g = gamma("Z2xZ4");
        let report = obstruction_lower_bound(&g, false, None);
        assert!(report.bound >= 1);

        let mut tree = SimpleGraph::with_order(4);
        tree.add_edge(0, 1).unwrap();
        tree.add_edge(0, 2).unwrap();
        tree.add_edge(0, 3).unwrap();
        let report = obstruction_lower_bound(&tree, true, None);
        assert_eq!(report.bound, 0);
        assert!(report.witness.is_none());
    }

    #[test]
    fn best_bound_examples() {
        let g = gamma("Z2xZ6");
        let report = best_lower_bound(&g, false).unwrap();
        assert_eq!(report.bound, 2);
        assert_eq!(report.provenance, BoundProvenance::EulerFormula);

        let g = gamma("Z3xZ3");
        let report = best_lower_bound(&g, false).unwrap();
        assert_eq!(report.bound, 2);

        assert_eq!(best_lower_bound(&complete_graph(4), true).unwrap().bound, 0);
    }
}
