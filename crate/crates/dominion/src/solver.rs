//! Exact minimum-dominating-set computation on incidence graphs, full
//! enumeration of minimum dominating sets, neatness classification, and an
//! independent brute-force oracle for cross-checks.
//!
//! The solver is branch-and-bound on the equivalent minimum set-cover
//! instance: the universe is the vertex set and each vertex contributes its
//! closed neighborhood as a candidate set. Branching always picks the
//! undominated vertex with the fewest remaining candidate dominators (ties by
//! lowest index) and tries its candidates in increasing index order, with
//! left-to-right exclusion so that no partial solution is visited twice. The
//! lower bound at a node is the larger of a greedy packing of pairwise
//! disjoint candidate sets (each needs its own dominator) and the counting
//! bound ⌈undominated / best single coverage⌉. The incumbent starts from a
//! greedy cover.
//!
//! Internally the search is graph-generic (any family of closed
//! neighborhoods); the supported public surface is incidence graphs.

use crate::bitset::BitSet;
use crate::design::Design;
use crate::incidence::{IncidenceGraph, VertexSet};
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use thiserror::Error;

/// Default branch-and-bound node budget per search phase.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// Environment variable overriding [`DEFAULT_NODE_BUDGET`].
pub const NODE_BUDGET_ENV: &str = "DOMINION_NODE_BUDGET";

/// Largest vertex count accepted by the exhaustive-subset oracle.
pub const ORACLE_VERTEX_CAP: usize = 26;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Node budget applied to each search phase (optimization, enumeration).
    /// Exceeding it is an explicit incomplete result, never a wrong answer.
    pub node_budget: u64,
    /// Worker threads for the optimization phase. γ is identical for any
    /// thread count; the witness is deterministic in single-threaded mode.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        let node_budget = std::env::var(NODE_BUDGET_ENV)
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(DEFAULT_NODE_BUDGET);
        SolverConfig {
            node_budget,
            threads: 1,
        }
    }
}

impl SolverConfig {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error(
        "node budget {budget} exhausted after {nodes} nodes; best bounds {lower} <= gamma <= {upper}"
    )]
    BudgetExceeded {
        budget: u64,
        nodes: u64,
        lower: usize,
        upper: usize,
    },
    #[error("enumeration budget {budget} exhausted after {nodes} nodes with {found} sets found")]
    EnumerationBudgetExceeded {
        budget: u64,
        nodes: u64,
        found: usize,
    },
    #[error("graph with {vertices} vertices exceeds the exhaustive-oracle cap {cap}")]
    OracleCapExceeded { vertices: usize, cap: usize },
    #[error(
        "no minimum dominating set with all-member external private neighbours among {enumerated} \
         enumerated sets; such a set must exist, so this indicates a solver bug"
    )]
    EpnNotFound { enumerated: usize },
}

/// The certified outcome of an exact γ computation.
#[derive(Clone, Debug)]
pub struct GammaResult {
    /// The domination number: no dominating set of size `gamma - 1` exists
    /// (certified by exhausted search).
    pub gamma: usize,
    /// One minimum dominating set.
    pub witness: VertexSet,
    /// Branch-and-bound nodes expanded.
    pub nodes_explored: u64,
    /// Lower bound established at the search root.
    pub root_lower_bound: usize,
}

/// Outcome of classifying every minimum dominating set of a design.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeatnessReport {
    pub gamma: usize,
    pub count_mds: usize,
    pub count_neat: usize,
    /// Some minimum dominating set is neat.
    pub is_neat_design: bool,
    /// Every minimum dominating set is neat.
    pub is_super_neat: bool,
}

/// Exact γ of an incidence graph with a witness and an optimality trace.
pub fn minimum_domination(
    g: &IncidenceGraph,
    cfg: &SolverConfig,
) -> Result<GammaResult, SolverError> {
    solve_cover(g.closed_neighborhoods(), cfg)
}

/// Every minimum dominating set, each exactly once, in canonical
/// lexicographic order.
pub fn enumerate_minimum_dominating_sets(
    g: &IncidenceGraph,
    cfg: &SolverConfig,
) -> Result<Vec<VertexSet>, SolverError> {
    let closed = g.closed_neighborhoods();
    let gamma = solve_cover(closed, cfg)?.gamma;
    let n = closed.len();
    let mut out = Vec::new();
    enumerate_covers(closed, gamma, cfg.node_budget, &mut |chosen| {
        out.push(BitSet::from_indices(n, chosen.iter().copied()));
        true
    })?;
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "duplicate sets");
    Ok(out)
}

/// Classifies a design as neat / super-neat by full enumeration.
pub fn classify_neatness(d: &Design, cfg: &SolverConfig) -> Result<NeatnessReport, SolverError> {
    let g = IncidenceGraph::new(d);
    let sets = enumerate_minimum_dominating_sets(&g, cfg)?;
    let count_mds = sets.len();
    let count_neat = sets.iter().filter(|s| d.is_neat(s)).count();
    let gamma = sets[0].count_ones();
    Ok(NeatnessReport {
        gamma,
        count_mds,
        count_neat,
        is_neat_design: count_neat >= 1,
        is_super_neat: count_neat == count_mds,
    })
}

/// A minimum dominating set in which every member has an external private
/// neighbour. One always exists, so failure to find one is a solver bug.
pub fn epn_certified_mds(
    g: &IncidenceGraph,
    cfg: &SolverConfig,
) -> Result<VertexSet, SolverError> {
    let closed = g.closed_neighborhoods();
    let gamma = solve_cover(closed, cfg)?.gamma;
    let n = closed.len();
    let mut found: Option<VertexSet> = None;
    let mut enumerated = 0usize;
    enumerate_covers(closed, gamma, cfg.node_budget, &mut |chosen| {
        enumerated += 1;
        let s = BitSet::from_indices(n, chosen.iter().copied());
        if g.all_members_have_epn(&s) {
            found = Some(s);
            false
        } else {
            true
        }
    })?;
    found.ok_or(SolverError::EpnNotFound { enumerated })
}

/// γ by brute force: tests all vertex subsets in increasing cardinality.
/// Used only as an independent cross-check; refuses graphs above the cap.
pub fn exhaustive_gamma_oracle(g: &IncidenceGraph) -> Result<usize, SolverError> {
    exhaustive_gamma_oracle_with_cap(g, ORACLE_VERTEX_CAP)
}

pub fn exhaustive_gamma_oracle_with_cap(
    g: &IncidenceGraph,
    cap: usize,
) -> Result<usize, SolverError> {
    let vertices = g.vertex_count();
    if vertices > cap {
        return Err(SolverError::OracleCapExceeded { vertices, cap });
    }
    Ok(oracle_cover(g.closed_neighborhoods()))
}

pub(crate) fn oracle_cover(closed: &[BitSet]) -> usize {
    let n = closed.len();
    assert!(n > 0);
    let full = BitSet::full(n);

    fn any_cover(
        closed: &[BitSet],
        full: &BitSet,
        start: usize,
        remaining: usize,
        covered: &BitSet,
    ) -> bool {
        if *covered == *full {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        for i in start..=closed.len() - remaining {
            if any_cover(closed, full, i + 1, remaining - 1, &covered.union(&closed[i])) {
                return true;
            }
        }
        false
    }

    let empty = BitSet::new(n);
    (1..=n)
        .find(|&size| any_cover(closed, &full, 0, size, &empty))
        .expect("the full vertex set dominates")
}

// ---------------------------------------------------------------------------
// Branch-and-bound internals
// ---------------------------------------------------------------------------

struct Instance<'a> {
    closed: &'a [BitSet],
    full: BitSet,
}

struct SearchShared {
    best_size: AtomicUsize,
    witness: Mutex<BitSet>,
    nodes: AtomicU64,
    budget: u64,
    aborted: AtomicBool,
}

impl SearchShared {
    fn offer(&self, chosen: &[usize], n: usize) {
        let mut witness = self.witness.lock().unwrap();
        if chosen.len() < self.best_size.load(Ordering::Relaxed) {
            self.best_size.store(chosen.len(), Ordering::Relaxed);
            *witness = BitSet::from_indices(n, chosen.iter().copied());
        }
    }
}

/// Greedy cover: repeatedly pick the vertex covering the most undominated
/// vertices, ties by lowest index.
fn greedy_cover(closed: &[BitSet], full: &BitSet) -> Vec<usize> {
    let n = closed.len();
    let mut covered = BitSet::new(n);
    let mut picks = Vec::new();
    while covered != *full {
        let mut best = 0usize;
        let mut best_gain = 0usize;
        for (c, nb) in closed.iter().enumerate() {
            let gain = nb.count_ones() - nb.intersection_count(&covered);
            if gain > best_gain {
                best_gain = gain;
                best = c;
            }
        }
        debug_assert!(best_gain > 0, "every vertex dominates itself");
        covered.union_with(&closed[best]);
        picks.push(best);
    }
    picks
}

/// Lower bound on additional picks plus the canonical branching vertex.
///
/// Returns `None` when some undominated vertex has no remaining candidate
/// dominator (dead branch). The bound is the max of a greedy packing of
/// pairwise disjoint candidate sets and ⌈undominated / best coverage⌉.
fn bound_and_branch(
    inst: &Instance,
    covered: &BitSet,
    allowed: &BitSet,
) -> Option<(usize, usize)> {
    let n = inst.closed.len();
    let uncovered = inst.full.difference(covered);
    debug_assert!(!uncovered.is_empty());

    let mut pack_union = BitSet::new(n);
    let mut pack = 0usize;
    let mut branch_vertex = usize::MAX;
    let mut fewest = usize::MAX;
    for u in uncovered.iter_ones() {
        let cand_count = inst.closed[u].intersection_count(allowed);
        if cand_count == 0 {
            return None;
        }
        if cand_count < fewest {
            fewest = cand_count;
            branch_vertex = u;
        }
        if !inst.closed[u].masked_intersects(allowed, &pack_union) {
            inst.closed[u].masked_union_into(allowed, &mut pack_union);
            pack += 1;
        }
    }

    let mut best_cover = 0usize;
    for c in allowed.iter_ones() {
        let gain = inst.closed[c].intersection_count(&uncovered);
        if gain > best_cover {
            best_cover = gain;
        }
    }
    let count_bound = uncovered.count_ones().div_ceil(best_cover);

    Some((pack.max(count_bound), branch_vertex))
}

fn dfs(
    inst: &Instance,
    shared: &SearchShared,
    chosen: &mut Vec<usize>,
    covered: &BitSet,
    mut allowed: BitSet,
) {
    if shared.aborted.load(Ordering::Relaxed) {
        return;
    }
    if shared.nodes.fetch_add(1, Ordering::Relaxed) + 1 > shared.budget {
        shared.aborted.store(true, Ordering::Relaxed);
        return;
    }
    if *covered == inst.full {
        shared.offer(chosen, inst.closed.len());
        return;
    }
    let depth = chosen.len();
    let best = shared.best_size.load(Ordering::Relaxed);
    let Some((lb, branch_vertex)) = bound_and_branch(inst, covered, &allowed) else {
        return;
    };
    if depth + lb >= best {
        return;
    }
    let cands = inst.closed[branch_vertex].intersection(&allowed).indices();
    for c in cands {
        allowed.remove(c);
        chosen.push(c);
        dfs(inst, shared, chosen, &covered.union(&inst.closed[c]), allowed.clone());
        chosen.pop();
        if shared.aborted.load(Ordering::Relaxed) {
            return;
        }
    }
}

pub(crate) fn solve_cover(
    closed: &[BitSet],
    cfg: &SolverConfig,
) -> Result<GammaResult, SolverError> {
    let n = closed.len();
    if n == 0 {
        return Err(SolverError::EmptyGraph);
    }
    let inst = Instance {
        closed,
        full: BitSet::full(n),
    };
    let greedy = greedy_cover(closed, &inst.full);
    let covered0 = BitSet::new(n);
    let allowed0 = BitSet::full(n);
    let root_lower_bound = bound_and_branch(&inst, &covered0, &allowed0)
        .expect("every vertex dominates itself")
        .0;

    let shared = SearchShared {
        best_size: AtomicUsize::new(greedy.len()),
        witness: Mutex::new(BitSet::from_indices(n, greedy.iter().copied())),
        nodes: AtomicU64::new(0),
        budget: cfg.node_budget,
        aborted: AtomicBool::new(false),
    };

    if root_lower_bound < greedy.len() {
        if cfg.threads > 1 {
            search_parallel(&inst, &shared, cfg.threads);
        } else {
            let mut chosen = Vec::new();
            dfs(&inst, &shared, &mut chosen, &covered0, allowed0);
        }
    }

    let nodes = shared.nodes.load(Ordering::Relaxed);
    let upper = shared.best_size.load(Ordering::Relaxed);
    if shared.aborted.load(Ordering::Relaxed) {
        return Err(SolverError::BudgetExceeded {
            budget: cfg.node_budget,
            nodes,
            lower: root_lower_bound,
            upper,
        });
    }
    let witness = shared.witness.into_inner().unwrap();
    debug_assert!(is_cover(closed, &inst.full, &witness));
    Ok(GammaResult {
        gamma: upper,
        witness,
        nodes_explored: nodes,
        root_lower_bound,
    })
}

/// Splits the root's candidate branches over a scoped worker pool. Workers
/// share the incumbent monotonically (only improvements are published), so
/// γ is identical for any worker count.
fn search_parallel(inst: &Instance, shared: &SearchShared, threads: usize) {
    let covered0 = BitSet::new(inst.closed.len());
    let allowed0 = BitSet::full(inst.closed.len());
    let Some((_, branch_vertex)) = bound_and_branch(inst, &covered0, &allowed0) else {
        return;
    };
    // Root node accounting, matching the sequential search.
    if shared.nodes.fetch_add(1, Ordering::Relaxed) + 1 > shared.budget {
        shared.aborted.store(true, Ordering::Relaxed);
        return;
    }

    let mut branches = Vec::new();
    let mut allowed = allowed0;
    for c in inst.closed[branch_vertex].clone().iter_ones() {
        allowed.remove(c);
        branches.push((c, covered0.union(&inst.closed[c]), allowed.clone()));
    }

    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..threads.min(branches.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= branches.len() || shared.aborted.load(Ordering::Relaxed) {
                    break;
                }
                let (c, covered, allowed) = &branches[i];
                let mut chosen = vec![*c];
                dfs(inst, shared, &mut chosen, covered, allowed.clone());
            });
        }
    });
}

fn is_cover(closed: &[BitSet], full: &BitSet, s: &BitSet) -> bool {
    let mut covered = BitSet::new(closed.len());
    for u in s.iter_ones() {
        covered.union_with(&closed[u]);
    }
    covered == *full
}

/// Depth-bounded exhaustive enumeration of all dominating sets of size
/// exactly `gamma`. `visit` receives each set once (order is search order,
/// not sorted) and returns whether to continue.
fn enumerate_covers(
    closed: &[BitSet],
    gamma: usize,
    budget: u64,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> Result<(), SolverError> {
    struct Ctx<'v, V: FnMut(&[usize]) -> bool> {
        nodes: u64,
        budget: u64,
        found: usize,
        visit: &'v mut V,
    }

    fn rec<V: FnMut(&[usize]) -> bool>(
        inst: &Instance,
        ctx: &mut Ctx<'_, V>,
        gamma: usize,
        chosen: &mut Vec<usize>,
        covered: &BitSet,
        mut allowed: BitSet,
    ) -> Result<bool, SolverError> {
        ctx.nodes += 1;
        if ctx.nodes > ctx.budget {
            return Err(SolverError::EnumerationBudgetExceeded {
                budget: ctx.budget,
                nodes: ctx.nodes,
                found: ctx.found,
            });
        }
        if *covered == inst.full {
            assert_eq!(
                chosen.len(),
                gamma,
                "dominating set below gamma found during enumeration — solver bug"
            );
            ctx.found += 1;
            return Ok((ctx.visit)(chosen));
        }
        if chosen.len() == gamma {
            return Ok(true);
        }
        let Some((lb, branch_vertex)) = bound_and_branch(inst, covered, &allowed) else {
            return Ok(true);
        };
        if chosen.len() + lb > gamma {
            return Ok(true);
        }
        let cands = inst.closed[branch_vertex].intersection(&allowed).indices();
        for c in cands {
            allowed.remove(c);
            chosen.push(c);
            let proceed = rec(
                inst,
                ctx,
                gamma,
                chosen,
                &covered.union(&inst.closed[c]),
                allowed.clone(),
            )?;
            chosen.pop();
            if !proceed {
                return Ok(false);
            }
        }
        Ok(true)
    }

    let n = closed.len();
    let inst = Instance {
        closed,
        full: BitSet::full(n),
    };
    let mut ctx = Ctx {
        nodes: 0,
        budget,
        found: 0,
        visit,
    };
    let mut chosen = Vec::new();
    rec(&inst, &mut ctx, gamma, &mut chosen, &BitSet::new(n), BitSet::full(n))?;
    Ok(())
}
