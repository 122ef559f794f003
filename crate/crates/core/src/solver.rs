//! Exact search procedures over compatible matchings.
//!
//! Everything here is plain backtracking with canonical (lexicographic)
//! tie-breaking, so identical inputs always produce identical results. The
//! enumeration is the ground-truth oracle the optimizers are tested against.

use crate::analysis::lower_bound;
use crate::geometry::Rational;
use crate::graph::{
    compatible_candidates, first_candidate, is_compatible_edge, CompatContext, Edge,
    GeometricGraph, Matching,
};
use num_traits::{Signed, ToPrimitive};
use rand_chacha::ChaCha8Rng;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Default branch-node budget for the exact solvers.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("node budget of {0} exhausted")]
pub struct BudgetExceeded(pub u64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    Feasible,
    Infeasible,
    BudgetExceeded,
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::Feasible => "feasible",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::BudgetExceeded => "budget-exceeded",
        };
        f.write_str(s)
    }
}

/// Outcome of an exact search.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub matching: Matching,
    pub objective: usize,
    pub status: SolveStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Candidate orderings for the greedy construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyOrdering {
    Lexicographic,
    ShortestEdgeFirst,
    LongestEdgeFirst,
    SeededRandom,
}

impl std::str::FromStr for GreedyOrdering {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lexicographic" => Ok(GreedyOrdering::Lexicographic),
            "shortest-edge-first" => Ok(GreedyOrdering::ShortestEdgeFirst),
            "longest-edge-first" => Ok(GreedyOrdering::LongestEdgeFirst),
            "seeded-random" => Ok(GreedyOrdering::SeededRandom),
            other => Err(format!("unknown greedy ordering: {other}")),
        }
    }
}

/// A greedy ordering plus the seed that makes it reproducible.
#[derive(Debug, Clone, Copy)]
pub struct GreedyStrategy {
    pub ordering: GreedyOrdering,
    pub seed: u64,
}

impl Default for GreedyStrategy {
    fn default() -> Self {
        GreedyStrategy {
            ordering: GreedyOrdering::Lexicographic,
            seed: 0,
        }
    }
}

fn squared_length(g: &GeometricGraph, (u, v): Edge) -> Rational {
    let a = g.point(u);
    let b = g.point(v);
    let dx = &a.x - &b.x;
    let dy = &a.y - &b.y;
    &dx * &dx + &dy * &dy
}

/// Repeatedly add the first candidate under the strategy's ordering until
/// the matching is maximal.
pub fn greedy_maximal(g: &GeometricGraph, strategy: GreedyStrategy) -> Matching {
    let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
    let mut m = Matching::empty();
    loop {
        let candidates = compatible_candidates(g, &m);
        if candidates.is_empty() {
            return m;
        }
        let pick = match strategy.ordering {
            GreedyOrdering::Lexicographic => *candidates.iter().next().unwrap(),
            GreedyOrdering::ShortestEdgeFirst => candidates
                .iter()
                .min_by(|&&a, &&b| squared_length(g, a).cmp(&squared_length(g, b)).then(a.cmp(&b)))
                .copied()
                .unwrap(),
            GreedyOrdering::LongestEdgeFirst => candidates
                .iter()
                .min_by(|&&a, &&b| squared_length(g, b).cmp(&squared_length(g, a)).then(a.cmp(&b)))
                .copied()
                .unwrap(),
            GreedyOrdering::SeededRandom => {
                let k = rng.random_range(0..candidates.len());
                *candidates.iter().nth(k).unwrap()
            }
        };
        m = m.with_pair(pick.0, pick.1);
    }
}

struct NodeCounter {
    nodes: u64,
    budget: u64,
}

impl NodeCounter {
    fn new(budget: u64) -> Self {
        NodeCounter { nodes: 0, budget }
    }

    fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(BudgetExceeded(self.budget))
        } else {
            Ok(())
        }
    }
}

/// All maximal compatible matchings of G, each exactly once in canonical
/// (sorted pair list) order.
pub fn enumerate_maximal(
    g: &GeometricGraph,
    node_budget: u64,
) -> Result<Vec<Matching>, BudgetExceeded> {
    let mut counter = NodeCounter::new(node_budget);
    let mut out: BTreeSet<Vec<Edge>> = BTreeSet::new();

    fn recurse(
        g: &GeometricGraph,
        current: &Matching,
        excluded: &BTreeSet<Edge>,
        counter: &mut NodeCounter,
        out: &mut BTreeSet<Vec<Edge>>,
    ) -> Result<(), BudgetExceeded> {
        counter.tick()?;
        let candidates = compatible_candidates(g, current);
        let branch = candidates.iter().find(|e| !excluded.contains(e)).copied();
        match branch {
            None => {
                // Every remaining candidate was excluded; the leaf only
                // counts if nothing at all can be added.
                if candidates.is_empty() {
                    out.insert(current.pairs().collect());
                }
                Ok(())
            }
            Some((u, v)) => {
                recurse(g, &current.with_pair(u, v), excluded, counter, out)?;
                let mut excluded = excluded.clone();
                excluded.insert((u, v));
                recurse(g, current, &excluded, counter, out)
            }
        }
    }

    recurse(g, &Matching::empty(), &BTreeSet::new(), &mut counter, &mut out)?;
    Ok(out
        .into_iter()
        .map(|pairs| Matching::new(pairs).expect("enumerated pairs are disjoint"))
        .collect())
}

/// Ceiling of a nonnegative rational, for turning bounds into integer targets.
fn ceil_to_usize(r: &Rational) -> usize {
    if r.is_negative() {
        return 0;
    }
    r.ceil().to_integer().to_usize().unwrap_or(0)
}

/// Minimum maximal compatible matching, mm(G), by branch and bound.
pub fn min_maximal(g: &GeometricGraph, node_budget: u64) -> SolveResult {
    let start = Instant::now();
    let mut counter = NodeCounter::new(node_budget);
    let mut best = greedy_maximal(g, GreedyStrategy::default());
    let floor = lower_bound(g).map(|b| ceil_to_usize(&b)).unwrap_or(0);

    fn recurse(
        g: &GeometricGraph,
        current: &Matching,
        excluded: &BTreeSet<Edge>,
        best: &mut Matching,
        floor: usize,
        counter: &mut NodeCounter,
    ) -> Result<(), BudgetExceeded> {
        counter.tick()?;
        if current.len() >= best.len() {
            return Ok(());
        }
        if best.len() == floor && floor > 0 {
            return Ok(());
        }
        let candidates = compatible_candidates(g, current);
        let branch = candidates.iter().find(|e| !excluded.contains(e)).copied();
        match branch {
            None => {
                if candidates.is_empty() && current.len() < best.len() {
                    *best = current.clone();
                }
                Ok(())
            }
            Some((u, v)) => {
                recurse(g, &current.with_pair(u, v), excluded, best, floor, counter)?;
                let mut excluded = excluded.clone();
                excluded.insert((u, v));
                recurse(g, current, &excluded, best, floor, counter)
            }
        }
    }

    let status = match recurse(
        g,
        &Matching::empty(),
        &BTreeSet::new(),
        &mut best,
        floor,
        &mut counter,
    ) {
        Ok(()) => SolveStatus::Optimal,
        Err(_) => SolveStatus::Feasible,
    };
    SolveResult {
        objective: best.len(),
        matching: best,
        status,
        nodes_explored: counter.nodes,
        elapsed: start.elapsed(),
    }
}

/// Largest compatible matching, d(G), by branch and bound.
pub fn max_compatible(g: &GeometricGraph, node_budget: u64) -> SolveResult {
    let start = Instant::now();
    let mut counter = NodeCounter::new(node_budget);
    let mut best = greedy_maximal(g, GreedyStrategy::default());

    fn recurse(
        g: &GeometricGraph,
        current: &Matching,
        excluded: &BTreeSet<Edge>,
        best: &mut Matching,
        counter: &mut NodeCounter,
    ) -> Result<(), BudgetExceeded> {
        counter.tick()?;
        if current.len() > best.len() {
            *best = current.clone();
        }
        let candidates: Vec<Edge> = compatible_candidates(g, current)
            .into_iter()
            .filter(|e| !excluded.contains(e))
            .collect();
        // The matching can grow by at most one pair per two free vertices
        // and by at most one pair per remaining candidate.
        let free = g.vertex_count() - 2 * current.len();
        let room = candidates.len().min(free / 2);
        if current.len() + room <= best.len() {
            return Ok(());
        }
        if let Some(&(u, v)) = candidates.first() {
            recurse(g, &current.with_pair(u, v), excluded, best, counter)?;
            let mut excluded = excluded.clone();
            excluded.insert((u, v));
            recurse(g, current, &excluded, best, counter)?;
        }
        Ok(())
    }

    let status = match recurse(
        g,
        &Matching::empty(),
        &BTreeSet::new(),
        &mut best,
        &mut counter,
    ) {
        Ok(()) => SolveStatus::Optimal,
        Err(_) => SolveStatus::Feasible,
    };
    SolveResult {
        objective: best.len(),
        matching: best,
        status,
        nodes_explored: counter.nodes,
        elapsed: start.elapsed(),
    }
}

/// Decide whether G admits a compatible perfect matching.
pub fn has_perfect_compatible(g: &GeometricGraph, node_budget: u64) -> SolveResult {
    let start = Instant::now();
    let mut counter = NodeCounter::new(node_budget);
    let n = g.vertex_count();
    if n % 2 == 1 {
        return SolveResult {
            matching: Matching::empty(),
            objective: 0,
            status: SolveStatus::Infeasible,
            nodes_explored: 0,
            elapsed: start.elapsed(),
        };
    }

    fn recurse(
        g: &GeometricGraph,
        current: &Matching,
        counter: &mut NodeCounter,
    ) -> Result<Option<Matching>, BudgetExceeded> {
        counter.tick()?;
        let n = g.vertex_count();
        if 2 * current.len() == n {
            return Ok(Some(current.clone()));
        }
        let ctx = CompatContext::new(g, current);
        let covered = current.vertices();
        // Fail fast: every unmatched vertex must still have a partner.
        let mut pivot = None;
        for u in 0..n {
            if covered.contains(&u) {
                continue;
            }
            let mut has_partner = false;
            for v in 0..n {
                if v != u && !covered.contains(&v) && ctx.check_pair(u.min(v), u.max(v)).is_ok() {
                    has_partner = true;
                    break;
                }
            }
            if !has_partner {
                return Ok(None);
            }
            if pivot.is_none() {
                pivot = Some(u);
            }
        }
        let u = pivot.expect("some vertex is unmatched");
        for v in (u + 1)..n {
            if covered.contains(&v) || ctx.check_pair(u, v).is_err() {
                continue;
            }
            if let Some(found) = recurse(g, &current.with_pair(u, v), counter)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    match recurse(g, &Matching::empty(), &mut counter) {
        Ok(Some(m)) => SolveResult {
            objective: m.len(),
            matching: m,
            status: SolveStatus::Optimal,
            nodes_explored: counter.nodes,
            elapsed: start.elapsed(),
        },
        Ok(None) => SolveResult {
            matching: Matching::empty(),
            objective: 0,
            status: SolveStatus::Infeasible,
            nodes_explored: counter.nodes,
            elapsed: start.elapsed(),
        },
        Err(_) => SolveResult {
            matching: Matching::empty(),
            objective: 0,
            status: SolveStatus::BudgetExceeded,
            nodes_explored: counter.nodes,
            elapsed: start.elapsed(),
        },
    }
}

/// Exact number of compatible perfect matchings of G.
pub fn count_perfect_compatible(
    g: &GeometricGraph,
    node_budget: u64,
) -> Result<u64, BudgetExceeded> {
    let mut counter = NodeCounter::new(node_budget);
    let n = g.vertex_count();
    if n % 2 == 1 {
        return Ok(0);
    }

    fn recurse(
        g: &GeometricGraph,
        current: &Matching,
        counter: &mut NodeCounter,
    ) -> Result<u64, BudgetExceeded> {
        counter.tick()?;
        let n = g.vertex_count();
        if 2 * current.len() == n {
            return Ok(1);
        }
        let ctx = CompatContext::new(g, current);
        let covered = current.vertices();
        let u = (0..n).find(|v| !covered.contains(v)).expect("unmatched");
        let mut total = 0;
        for v in (u + 1)..n {
            if covered.contains(&v) || ctx.check_pair(u, v).is_err() {
                continue;
            }
            total += recurse(g, &current.with_pair(u, v), counter)?;
        }
        Ok(total)
    }

    recurse(g, &Matching::empty(), &mut counter)
}

/// Collect every compatible perfect matching; the forced-structure checks on
/// gadget fixtures intersect these solution sets.
pub fn all_perfect_compatible(
    g: &GeometricGraph,
    node_budget: u64,
) -> Result<Vec<Matching>, BudgetExceeded> {
    let mut counter = NodeCounter::new(node_budget);
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n % 2 == 1 {
        return Ok(out);
    }

    fn recurse(
        g: &GeometricGraph,
        current: &Matching,
        counter: &mut NodeCounter,
        out: &mut Vec<Matching>,
    ) -> Result<(), BudgetExceeded> {
        counter.tick()?;
        let n = g.vertex_count();
        if 2 * current.len() == n {
            out.push(current.clone());
            return Ok(());
        }
        let ctx = CompatContext::new(g, current);
        let covered = current.vertices();
        let u = (0..n).find(|v| !covered.contains(v)).expect("unmatched");
        for v in (u + 1)..n {
            if covered.contains(&v) || ctx.check_pair(u, v).is_err() {
                continue;
            }
            recurse(g, &current.with_pair(u, v), counter, out)?;
        }
        Ok(())
    }

    recurse(g, &Matching::empty(), &mut counter, &mut out)?;
    Ok(out)
}

/// True iff adding {u, v} keeps M a compatible matching (convenience
/// re-export used by gadget verification).
pub fn can_add(g: &GeometricGraph, m: &Matching, u: usize, v: usize) -> bool {
    is_compatible_edge(g, m, u, v)
}

/// First candidate of the empty matching, if any; used by quick feasibility
/// screens.
pub fn any_candidate(g: &GeometricGraph) -> Option<Edge> {
    first_candidate(g, &Matching::empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn square() -> GeometricGraph {
        GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(2, 0),
                Point::from_ints(2, 2),
                Point::from_ints(0, 2),
            ],
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
        )
        .unwrap()
    }

    fn triangle() -> GeometricGraph {
        GeometricGraph::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(4, 0),
                Point::from_ints(1, 3),
            ],
            vec![(0, 1), (1, 2), (2, 0)],
        )
        .unwrap()
    }

    fn convex_points(n: usize) -> GeometricGraph {
        let pts = (0..n)
            .map(|i| Point::from_ints(i as i64, (i * i) as i64))
            .collect();
        GeometricGraph::new(pts, vec![]).unwrap()
    }

    #[test]
    fn greedy_on_small_polygons() {
        assert!(greedy_maximal(&triangle(), GreedyStrategy::default()).is_empty());
        let m = greedy_maximal(&square(), GreedyStrategy::default());
        assert_eq!(m.pairs().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn greedy_deterministic_per_seed() {
        let strat = GreedyStrategy {
            ordering: GreedyOrdering::SeededRandom,
            seed: 7,
        };
        let a = greedy_maximal(&convex_points(8), strat);
        let b = greedy_maximal(&convex_points(8), strat);
        assert_eq!(a, b);
    }

    #[test]
    fn enumerate_square_and_triangle() {
        let ms = enumerate_maximal(&square(), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(ms.len(), 2);
        let ms = enumerate_maximal(&triangle(), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(ms.len(), 1);
        assert!(ms[0].is_empty());
    }

    #[test]
    fn enumerate_four_convex_points() {
        // Two perfect matchings along the hull plus each crossing diagonal
        // alone.
        let ms = enumerate_maximal(&convex_points(4), DEFAULT_NODE_BUDGET).unwrap();
        let lists: Vec<Vec<Edge>> = ms.iter().map(|m| m.pairs().collect()).collect();
        assert_eq!(
            lists,
            vec![
                vec![(0, 1), (2, 3)],
                vec![(0, 2)],
                vec![(0, 3), (1, 2)],
                vec![(1, 3)],
            ]
        );
    }

    #[test]
    fn min_maximal_basics() {
        assert_eq!(min_maximal(&triangle(), DEFAULT_NODE_BUDGET).objective, 0);
        let res = min_maximal(&square(), DEFAULT_NODE_BUDGET);
        assert_eq!(res.objective, 1);
        assert_eq!(res.status, SolveStatus::Optimal);
    }

    #[test]
    fn max_compatible_basics() {
        assert_eq!(max_compatible(&square(), DEFAULT_NODE_BUDGET).objective, 1);
        assert_eq!(
            max_compatible(&convex_points(6), DEFAULT_NODE_BUDGET).objective,
            3
        );
    }

    #[test]
    fn perfect_matching_decision() {
        let res = has_perfect_compatible(&square(), DEFAULT_NODE_BUDGET);
        assert_eq!(res.status, SolveStatus::Infeasible);
        let res = has_perfect_compatible(&convex_points(6), DEFAULT_NODE_BUDGET);
        assert_eq!(res.status, SolveStatus::Optimal);
        assert_eq!(res.objective, 3);
        let res = has_perfect_compatible(&triangle(), DEFAULT_NODE_BUDGET);
        assert_eq!(res.status, SolveStatus::Infeasible);
    }

    #[test]
    fn perfect_matching_counts() {
        assert_eq!(count_perfect_compatible(&square(), 1 << 20).unwrap(), 0);
        assert_eq!(
            count_perfect_compatible(&convex_points(4), 1 << 20).unwrap(),
            2
        );
        assert_eq!(count_perfect_compatible(&triangle(), 1 << 20).unwrap(), 0);
    }

    #[test]
    fn budget_is_respected() {
        let err = enumerate_maximal(&convex_points(8), 3);
        assert_eq!(err, Err(BudgetExceeded(3)));
    }

    #[test]
    fn oracle_agreement_small() {
        for g in [square(), triangle(), convex_points(6)] {
            let all = enumerate_maximal(&g, DEFAULT_NODE_BUDGET).unwrap();
            let min = all.iter().map(|m| m.len()).min().unwrap();
            let max = all.iter().map(|m| m.len()).max().unwrap();
            assert_eq!(min_maximal(&g, DEFAULT_NODE_BUDGET).objective, min);
            assert_eq!(max_compatible(&g, DEFAULT_NODE_BUDGET).objective, max);
            let greedy = greedy_maximal(&g, GreedyStrategy::default()).len();
            assert!(min <= greedy && greedy <= max);
        }
    }
}
