//! Exact domination and total domination via branch-and-bound set cover.
//!
//! A dominating set is a cover of the vertex set by closed neighborhoods; a
//! total dominating set is a cover by open neighborhoods. The solver
//! decomposes into connected components, preprocesses each with the standard
//! subset reductions, initializes with the deterministic greedy cover, lower
//! bounds with a packing of pairwise-disjoint neighborhoods, and branches on
//! a least-coverable uncovered vertex. There is no randomness anywhere, so
//! witnesses and node counts are reproducible bit for bit.

use crate::graph::SimpleGraph;
use crate::group::{GroupError, GroupTable};
use crate::mask::SubsetMask;
use num::rational::Ratio;
use serde::Serialize;
use std::time::{Duration, Instant};

/// Wall-clock budget for one solve. Exceeding it degrades the result to
/// certified bounds; it never produces a wrong answer.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn from_secs(secs: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_secs(secs)),
        }
    }

    pub fn from_duration(d: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + d),
        }
    }

    fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_secs(60)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominationKind {
    Domination,
    TotalDomination,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    Exact,
    GreedyUpperOnly,
    Formula,
}

/// Outcome of a γ or γ_t computation.
///
/// `value` is present exactly when the number is known: for total domination
/// it is absent both when no total dominating set exists (`exists == false`,
/// an exact nonexistence) and when the budget ran out (`method` says which).
/// Exact results carry a witness that passes the corresponding certificate
/// check, and `lower_bound == value == upper_bound`.
#[derive(Debug, Clone, Serialize)]
pub struct DominationResult {
    pub kind: DominationKind,
    pub value: Option<usize>,
    pub witness: Option<SubsetMask>,
    pub method: SolveMethod,
    /// False only for total domination on a graph with an isolated vertex.
    pub exists: bool,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub node_count: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl DominationResult {
    pub fn is_exact(&self) -> bool {
        self.method == SolveMethod::Exact
    }
}

/// Closed-neighborhood cover test.
pub fn is_dominating_set(g: &SimpleGraph, s: &SubsetMask) -> bool {
    (0..g.vertex_count()).all(|v| s.contains(v) || g.neighbors(v).intersects(s))
}

/// Open-neighborhood cover test: members need neighbors in the set too.
pub fn is_total_dominating_set(g: &SimpleGraph, s: &SubsetMask) -> bool {
    (0..g.vertex_count()).all(|v| g.neighbors(v).intersects(s))
}

/// Classical greedy cover by closed neighborhoods: repeatedly take the vertex
/// covering the most uncovered vertices, ties broken by least index.
pub fn greedy_dominating_set(g: &SimpleGraph) -> SubsetMask {
    greedy_cover(g, false).expect("closed neighborhoods always cover")
}

/// Greedy cover by open neighborhoods; None iff some vertex is isolated.
pub fn greedy_total_dominating_set(g: &SimpleGraph) -> Option<SubsetMask> {
    greedy_cover(g, true)
}

fn greedy_cover(g: &SimpleGraph, open: bool) -> Option<SubsetMask> {
    let n = g.vertex_count();
    let cover: Vec<SubsetMask> = (0..n)
        .map(|v| {
            if open {
                g.neighbors(v).clone()
            } else {
                g.closed_neighborhood(v)
            }
        })
        .collect();
    let mut covered = SubsetMask::empty(n);
    let mut chosen = SubsetMask::empty(n);
    while covered.len() < n {
        let best = (0..n)
            .filter(|&v| !chosen.contains(v))
            .max_by(|&a, &b| {
                cover[a]
                    .difference_len(&covered)
                    .cmp(&cover[b].difference_len(&covered))
                    .then(b.cmp(&a))
            })?;
        if cover[best].difference_len(&covered) == 0 {
            return None;
        }
        chosen.insert(best);
        covered.union_with(&cover[best]);
    }
    Some(chosen)
}

/// γ(G): exact unless the budget expires, in which case certified bounds are
/// returned with `method == GreedyUpperOnly`.
pub fn exact_domination_number(g: &SimpleGraph, budget: &Budget) -> DominationResult {
    solve(g, DominationKind::Domination, budget)
}

/// γ_t(G): `exists == false` (with no value) iff the graph has an isolated
/// vertex; otherwise as for γ.
pub fn exact_total_domination_number(g: &SimpleGraph, budget: &Budget) -> DominationResult {
    solve(g, DominationKind::TotalDomination, budget)
}

fn solve(g: &SimpleGraph, kind: DominationKind, budget: &Budget) -> DominationResult {
    let start = Instant::now();
    let n = g.vertex_count();
    let open = kind == DominationKind::TotalDomination;
    if open && !g.isolated_vertices().is_empty() {
        return DominationResult {
            kind,
            value: None,
            witness: None,
            method: SolveMethod::Exact,
            exists: false,
            lower_bound: 0,
            upper_bound: 0,
            node_count: 0,
            elapsed: start.elapsed(),
        };
    }
    let mut witness = SubsetMask::empty(n);
    let mut lower = 0usize;
    let mut upper = 0usize;
    let mut nodes = 0u64;
    let mut all_exact = true;
    for comp in g.connected_components() {
        let outcome = solve_component(g, &comp, open, budget);
        lower += outcome.lower;
        upper += outcome.upper;
        nodes += outcome.nodes;
        all_exact &= outcome.exact;
        for v in outcome.witness {
            witness.insert(v);
        }
    }
    debug_assert!(
        if open {
            is_total_dominating_set(g, &witness)
        } else {
            is_dominating_set(g, &witness)
        },
        "solver witness must certify"
    );
    DominationResult {
        kind,
        value: all_exact.then_some(upper),
        witness: Some(witness),
        method: if all_exact { SolveMethod::Exact } else { SolveMethod::GreedyUpperOnly },
        exists: true,
        lower_bound: lower,
        upper_bound: upper,
        node_count: nodes,
        elapsed: start.elapsed(),
    }
}

struct ComponentOutcome {
    lower: usize,
    upper: usize,
    witness: Vec<usize>,
    exact: bool,
    nodes: u64,
}

/// One connected component, as a set-cover instance in local indices.
struct CoverInstance {
    /// Global vertex id per local candidate/element index.
    globals: Vec<usize>,
    /// cover[v] = local vertices covered by choosing v (reduced universe only).
    cover: Vec<SubsetMask>,
    /// coverers[e] = surviving candidates that cover element e.
    coverers: Vec<SubsetMask>,
    /// Elements still requiring coverage after reductions.
    universe: SubsetMask,
    /// Candidates surviving the subset reduction.
    candidates: SubsetMask,
}

impl CoverInstance {
    fn new(g: &SimpleGraph, comp: &SubsetMask, open: bool) -> CoverInstance {
        let globals: Vec<usize> = comp.iter().collect();
        let m = globals.len();
        let mut local_of = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in globals.iter().enumerate() {
            local_of[v] = i;
        }
        let mut cover = vec![SubsetMask::empty(m); m];
        for (i, &v) in globals.iter().enumerate() {
            for w in g.neighbors(v).iter() {
                if comp.contains(w) {
                    cover[i].insert(local_of[w]);
                }
            }
            if !open {
                cover[i].insert(i);
            }
        }
        let mut inst = CoverInstance {
            globals,
            cover,
            coverers: Vec::new(),
            universe: SubsetMask::full(m),
            candidates: SubsetMask::full(m),
        };
        inst.reduce();
        inst
    }

    /// Standard exactness-preserving reductions, applied once up front:
    /// an element whose coverer set contains another element's coverer set is
    /// implied by it; a candidate whose cover is contained in another
    /// candidate's cover is never needed.
    fn reduce(&mut self) {
        let m = self.globals.len();
        let mut coverers = vec![SubsetMask::empty(m); m];
        for v in 0..m {
            for e in self.cover[v].iter() {
                coverers[e].insert(v);
            }
        }
        for e1 in 0..m {
            if !self.universe.contains(e1) {
                continue;
            }
            for e2 in 0..m {
                if e1 != e2
                    && self.universe.contains(e1)
                    && self.universe.contains(e2)
                    && coverers[e1].is_subset_of(&coverers[e2])
                    && (coverers[e1] != coverers[e2] || e1 < e2)
                {
                    self.universe.remove(e2);
                }
            }
        }
        for v in 0..m {
            self.cover[v].intersect_with(&self.universe);
        }
        for v1 in 0..m {
            if self.cover[v1].is_empty() {
                self.candidates.remove(v1);
                continue;
            }
            for v2 in 0..m {
                if v1 != v2
                    && self.candidates.contains(v1)
                    && self.candidates.contains(v2)
                    && self.cover[v1].is_subset_of(&self.cover[v2])
                    && (self.cover[v1] != self.cover[v2] || v2 < v1)
                {
                    self.candidates.remove(v1);
                    break;
                }
            }
        }
        self.coverers = (0..m)
            .map(|e| {
                let mut c = SubsetMask::empty(m);
                if self.universe.contains(e) {
                    for v in self.candidates.iter() {
                        if self.cover[v].contains(e) {
                            c.insert(v);
                        }
                    }
                }
                c
            })
            .collect();
    }

    /// Greedy cover over the reduced instance: most new coverage first, ties
    /// to the least index.
    fn greedy(&self) -> Option<Vec<usize>> {
        let mut covered = self.universe.complement();
        let mut picks = Vec::new();
        let all = SubsetMask::full(self.globals.len());
        while covered != all {
            let best = self
                .candidates
                .iter()
                .max_by(|&a, &b| {
                    self.cover[a]
                        .difference_len(&covered)
                        .cmp(&self.cover[b].difference_len(&covered))
                        .then(b.cmp(&a))
                })?;
            if self.cover[best].difference_len(&covered) == 0 {
                return None;
            }
            picks.push(best);
            covered.union_with(&self.cover[best]);
        }
        Some(picks)
    }

    /// Packing lower bound: greedily collect uncovered elements (fewest active
    /// coverers first) whose coverer sets are pairwise disjoint. Any cover
    /// spends a distinct candidate on each of them. None when some element has
    /// no active coverer left (infeasible branch).
    fn packing_bound(&self, covered: &SubsetMask, banned: &SubsetMask) -> Option<usize> {
        let m = self.globals.len();
        let mut elems: Vec<(usize, SubsetMask)> = Vec::new();
        for e in self.universe.iter() {
            if covered.contains(e) {
                continue;
            }
            let mut c = self.coverers[e].clone();
            c.subtract(banned);
            if c.is_empty() {
                return None;
            }
            elems.push((e, c));
        }
        elems.sort_by_key(|(e, c)| (c.len(), *e));
        let mut used = SubsetMask::empty(m);
        let mut count = 0;
        for (_e, c) in &elems {
            if c.is_disjoint(&used) {
                used.union_with(c);
                count += 1;
            }
        }
        Some(count)
    }
}

struct Search<'a> {
    inst: &'a CoverInstance,
    best: Vec<usize>,
    nodes: u64,
    aborted: bool,
    budget: &'a Budget,
}

impl Search<'_> {
    fn run(&mut self, covered: &SubsetMask, banned: &SubsetMask, chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if self.nodes % 1024 == 0 && self.budget.expired() {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        if self.inst.universe.is_subset_of(covered) {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        let Some(lb) = self.inst.packing_bound(covered, banned) else {
            return; // infeasible branch
        };
        if chosen.len() + lb.max(1) >= self.best.len() {
            return;
        }
        // branch on the uncovered element with the fewest active coverers
        let mut branch_cands: Vec<usize> = Vec::new();
        let mut found = false;
        for e in self.inst.universe.iter() {
            if covered.contains(e) {
                continue;
            }
            let mut c = self.inst.coverers[e].clone();
            c.subtract(banned);
            if !found || c.len() < branch_cands.len() {
                found = true;
                branch_cands = c.to_vec();
                if branch_cands.len() <= 1 {
                    break;
                }
            }
        }
        debug_assert!(found);
        branch_cands.sort_by(|&a, &b| {
            self.inst.cover[b]
                .difference_len(covered)
                .cmp(&self.inst.cover[a].difference_len(covered))
                .then(a.cmp(&b))
        });
        let mut banned = banned.clone();
        for v in branch_cands {
            let mut next_covered = covered.clone();
            next_covered.union_with(&self.inst.cover[v]);
            chosen.push(v);
            self.run(&next_covered, &banned, chosen);
            chosen.pop();
            if self.aborted {
                return;
            }
            // later branches must cover the element some other way
            banned.insert(v);
        }
    }
}

fn solve_component(g: &SimpleGraph, comp: &SubsetMask, open: bool, budget: &Budget) -> ComponentOutcome {
    if comp.len() == 1 && !open {
        let v = comp.first().unwrap();
        return ComponentOutcome {
            lower: 1,
            upper: 1,
            witness: vec![v],
            exact: true,
            nodes: 0,
        };
    }
    let inst = CoverInstance::new(g, comp, open);
    let greedy = inst
        .greedy()
        .expect("components of size > 1 (or closed covers) are coverable");
    let root_lower = inst
        .packing_bound(&inst.universe.complement(), &SubsetMask::empty(inst.globals.len()))
        .expect("root is feasible")
        .max(1);
    if budget.expired() || root_lower == greedy.len() {
        return ComponentOutcome {
            lower: root_lower.min(greedy.len()),
            upper: greedy.len(),
            witness: greedy.iter().map(|&v| inst.globals[v]).collect(),
            exact: root_lower == greedy.len(),
            nodes: 0,
        };
    }
    let mut search = Search {
        inst: &inst,
        best: greedy,
        nodes: 0,
        aborted: false,
        budget,
    };
    let covered = inst.universe.complement();
    let banned = SubsetMask::empty(inst.globals.len());
    let mut chosen = Vec::new();
    search.run(&covered, &banned, &mut chosen);
    let exact = !search.aborted;
    ComponentOutcome {
        lower: if exact { search.best.len() } else { root_lower },
        upper: search.best.len(),
        witness: search.best.iter().map(|&v| inst.globals[v]).collect(),
        exact,
        nodes: search.nodes,
    }
}

/// Exact bounds on γ(C**(G)) / |G| as rationals; equal endpoints when the
/// solver finished. Abelian groups have no proper commuting graph to measure.
pub fn domination_ratio(g: &GroupTable, budget: &Budget) -> Result<RatioBounds, GroupError> {
    if g.is_abelian() {
        return Err(GroupError::BadParameter(format!(
            "domination ratio needs a non-abelian group, got {}",
            g.descriptor()
        )));
    }
    let (proper, _) = crate::commuting::proper_commuting_graph(g);
    let result = exact_domination_number(&proper, budget);
    let order = g.order() as u64;
    Ok(RatioBounds {
        lower: Ratio::new(result.lower_bound as u64, order),
        upper: Ratio::new(result.upper_bound as u64, order),
        exact: result.is_exact(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioBounds {
    pub lower: Ratio<u64>,
    pub upper: Ratio<u64>,
    pub exact: bool,
}

impl RatioBounds {
    pub fn exact_value(&self) -> Option<Ratio<u64>> {
        self.exact.then_some(self.upper)
    }
}

/// Reference implementations by exhaustive subset enumeration, for n small
/// enough that 2^n scans are cheap. Kept deliberately independent of the
/// branch-and-bound path: plain neighborhood scans, no shared cover machinery.
pub mod brute {
    use super::*;

    fn any_combination(
        n: usize,
        k: usize,
        check: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        fn rec(
            start: usize,
            n: usize,
            left: usize,
            cur: &mut Vec<usize>,
            check: &mut impl FnMut(&[usize]) -> bool,
        ) -> bool {
            if left == 0 {
                return check(cur);
            }
            for v in start..=n - left {
                cur.push(v);
                if rec(v + 1, n, left - 1, cur, check) {
                    return true;
                }
                cur.pop();
            }
            false
        }
        if k > n {
            return false;
        }
        rec(0, n, k, &mut Vec::with_capacity(k), check)
    }

    fn search(g: &SimpleGraph, open: bool) -> Option<usize> {
        let n = g.vertex_count();
        assert!(n <= 24, "brute force oracle is for small graphs");
        if open && (0..n).any(|v| g.neighbors(v).is_empty()) {
            return None;
        }
        for k in 0..=n {
            let mut check = |combo: &[usize]| {
                let s = SubsetMask::from_indices(n, combo.iter().copied());
                if open {
                    is_total_dominating_set(g, &s)
                } else {
                    is_dominating_set(g, &s)
                }
            };
            if any_combination(n, k, &mut check) {
                return Some(k);
            }
        }
        unreachable!("the full vertex set dominates")
    }

    pub fn domination_number(g: &SimpleGraph) -> usize {
        search(g, false).expect("a dominating set always exists")
    }

    pub fn total_domination_number(g: &SimpleGraph) -> Option<usize> {
        search(g, true)
    }
}
