//! Exact and greedy minimum hitting set over vertex bitsets.
//!
//! Every constraint is a set of candidate vertices, and a solution must
//! contain at least one candidate from each constraint. The exact search
//! branches on the constraint with the fewest remaining candidates and
//! forbids each candidate once its branch is exhausted, so every set is
//! visited at most once. The bound is a greedy packing of constraints with
//! pairwise disjoint candidate sets.

use std::collections::HashSet;
use std::time::Instant;

use crate::bitset::VertexSet;

/// A reduced hitting set instance.
#[derive(Debug, Clone)]
pub struct HittingSetInstance {
    universe: usize,
    /// Inclusion-minimal constraints, sorted by size then content.
    constraints: Vec<VertexSet>,
}

/// Outcome of a budgeted feasibility search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Found(Vec<usize>),
    Infeasible,
    TimedOut,
}

/// Outcome of an optimization run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Optimum {
    pub solution: Vec<usize>,
    /// False when the deadline stopped the search early.
    pub proven: bool,
}

/// Enumerated solutions of one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub solutions: Vec<Vec<usize>>,
    pub cap_hit: bool,
}

impl HittingSetInstance {
    /// Deduplicates the constraints and drops any that contain another one,
    /// which leaves the set of solutions unchanged.
    pub fn new(universe: usize, constraints: impl IntoIterator<Item = VertexSet>) -> Self {
        let unique: HashSet<VertexSet> = constraints.into_iter().collect();
        let mut sorted: Vec<VertexSet> = unique.into_iter().collect();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let mut kept: Vec<VertexSet> = Vec::with_capacity(sorted.len());
        for c in sorted {
            assert!(!c.is_empty(), "empty constraint cannot be hit");
            if !kept.iter().any(|k| k.is_subset(&c)) {
                kept.push(c);
            }
        }
        HittingSetInstance {
            universe,
            constraints: kept,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn constraints(&self) -> &[VertexSet] {
        &self.constraints
    }

    pub fn is_hit_by(&self, set: &VertexSet) -> bool {
        self.constraints.iter().all(|c| c.intersects(set))
    }

    /// Repeatedly takes the vertex hitting the most unhit constraints,
    /// preferring the lowest index on ties.
    pub fn greedy(&self) -> Vec<usize> {
        let mut open: Vec<&VertexSet> = self.constraints.iter().collect();
        let mut picked = Vec::new();
        while !open.is_empty() {
            let mut counts = vec![0usize; self.universe];
            for c in &open {
                for v in c.iter() {
                    counts[v] += 1;
                }
            }
            let best = (0..self.universe)
                .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
                .expect("nonempty universe");
            picked.push(best);
            open.retain(|c| !c.contains(best));
        }
        picked.sort_unstable();
        picked
    }

    /// Minimum hitting set, seeded with `incumbent` as the initial upper
    /// bound.
    pub fn minimum(&self, incumbent: Vec<usize>, deadline: Option<Instant>) -> Optimum {
        debug_assert!(self.is_hit_by(&VertexSet::from_indices(
            self.universe,
            incumbent.iter().copied()
        )));
        let mut search = Search::new(self, deadline, Mode::Optimize);
        search.best_len = incumbent.len();
        search.best = Some(incumbent);
        let all: Vec<u32> = (0..self.constraints.len() as u32).collect();
        search.run(&all);
        let mut solution = search.best.take().expect("incumbent is kept");
        solution.sort_unstable();
        Optimum {
            solution,
            proven: !search.timed_out,
        }
    }

    /// Searches for a solution of size at most `budget` that contains every
    /// vertex of `forced` and none of `forbidden`.
    pub fn feasible(
        &self,
        forced: &[usize],
        forbidden: &VertexSet,
        budget: usize,
        deadline: Option<Instant>,
    ) -> Feasibility {
        if forced.len() > budget || forced.iter().any(|&v| forbidden.contains(v)) {
            return Feasibility::Infeasible;
        }
        let forced_set = VertexSet::from_indices(self.universe, forced.iter().copied());
        let open: Vec<u32> = (0..self.constraints.len() as u32)
            .filter(|&c| !self.constraints[c as usize].intersects(&forced_set))
            .collect();
        let mut search = Search::new(self, deadline, Mode::FirstFeasible);
        search.best_len = budget + 1;
        search.chosen = forced.to_vec();
        search.forbidden = forbidden.clone();
        search.run(&open);
        match (search.best, search.timed_out) {
            (Some(mut s), _) => {
                s.sort_unstable();
                Feasibility::Found(s)
            }
            (None, true) => Feasibility::TimedOut,
            (None, false) => Feasibility::Infeasible,
        }
    }

    /// The lexicographically smallest solution of size `size`, which must be
    /// the optimum. Fixes members one at a time, smallest index first.
    pub fn lex_smallest(&self, size: usize, deadline: Option<Instant>) -> Option<Vec<usize>> {
        let mut prefix: Vec<usize> = Vec::with_capacity(size);
        let mut forbidden = VertexSet::new(self.universe);
        for v in 0..self.universe {
            if prefix.len() == size {
                break;
            }
            prefix.push(v);
            match self.feasible(&prefix, &forbidden, size, deadline) {
                Feasibility::Found(_) => {}
                Feasibility::Infeasible => {
                    prefix.pop();
                    forbidden.insert(v);
                }
                Feasibility::TimedOut => return None,
            }
        }
        let set = VertexSet::from_indices(self.universe, prefix.iter().copied());
        (prefix.len() == size && self.is_hit_by(&set)).then_some(prefix)
    }

    /// All solutions of exactly `size` vertices, in lexicographic order, up
    /// to `cap` of them. `size` must not be below the optimum.
    pub fn enumerate(&self, size: usize, cap: usize) -> Enumeration {
        let mut out = Enumeration {
            solutions: Vec::new(),
            cap_hit: false,
        };
        let all: Vec<u32> = (0..self.constraints.len() as u32).collect();
        let mut below = VertexSet::new(self.universe);
        let mut chosen = Vec::with_capacity(size);
        self.enumerate_from(0, size, cap, &all, &mut chosen, &mut below, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate_from(
        &self,
        v: usize,
        size: usize,
        cap: usize,
        open: &[u32],
        chosen: &mut Vec<usize>,
        below: &mut VertexSet,
        out: &mut Enumeration,
    ) {
        if out.cap_hit {
            return;
        }
        // With nothing open and room left, keep going: padding with larger
        // vertices still yields a solution.
        if open.is_empty() && chosen.len() == size {
            if out.solutions.len() == cap {
                out.cap_hit = true;
            } else {
                out.solutions.push(chosen.clone());
            }
            return;
        }
        if chosen.len() == size || v == self.universe {
            return;
        }
        // `below` holds 0..v, which are no longer available.
        match packing_bound(&self.constraints, open, below) {
            Some(lb) if chosen.len() + lb <= size => {}
            _ => return,
        }
        if self.universe - v < size - chosen.len() {
            return;
        }
        let rest: Vec<u32> = open
            .iter()
            .copied()
            .filter(|&c| !self.constraints[c as usize].contains(v))
            .collect();
        below.insert(v);
        chosen.push(v);
        self.enumerate_from(v + 1, size, cap, &rest, chosen, below, out);
        chosen.pop();
        self.enumerate_from(v + 1, size, cap, open, chosen, below, out);
        below.remove(v);
    }
}

/// Lower bound on the number of extra vertices needed to hit `open` without
/// using `forbidden`; `None` if some constraint has no candidate left.
fn packing_bound(constraints: &[VertexSet], open: &[u32], forbidden: &VertexSet) -> Option<usize> {
    let mut used = forbidden.clone();
    let mut count = 0;
    for &c in open {
        let c = &constraints[c as usize];
        if c.is_subset(forbidden) {
            return None;
        }
        if c.is_subset(&used) {
            continue;
        }
        let mut avail = c.clone();
        avail.difference_with(&used);
        let fresh = avail.len() == c.difference_len(forbidden);
        if fresh {
            count += 1;
            used.union_with(c);
        }
    }
    Some(count)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Optimize,
    FirstFeasible,
}

struct Search<'a> {
    constraints: &'a [VertexSet],
    chosen: Vec<usize>,
    forbidden: VertexSet,
    best: Option<Vec<usize>>,
    /// Only solutions strictly smaller than this are of interest.
    best_len: usize,
    mode: Mode,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl<'a> Search<'a> {
    fn new(inst: &'a HittingSetInstance, deadline: Option<Instant>, mode: Mode) -> Self {
        Search {
            constraints: &inst.constraints,
            chosen: Vec::new(),
            forbidden: VertexSet::new(inst.universe),
            best: None,
            best_len: usize::MAX,
            mode,
            deadline,
            nodes: 0,
            timed_out: false,
        }
    }

    fn out_of_time(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % 1024 == 1 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Returns true when the search should stop.
    fn run(&mut self, open: &[u32]) -> bool {
        if self.out_of_time() {
            return true;
        }
        if open.is_empty() {
            if self.chosen.len() < self.best_len {
                self.best = Some(self.chosen.clone());
                self.best_len = self.chosen.len();
            }
            return self.mode == Mode::FirstFeasible;
        }
        match packing_bound(self.constraints, open, &self.forbidden) {
            Some(lb) if self.chosen.len() + lb.max(1) < self.best_len => {}
            _ => return false,
        }
        let branch = open
            .iter()
            .copied()
            .min_by_key(|&c| self.constraints[c as usize].difference_len(&self.forbidden))
            .expect("open is nonempty");
        let mut candidates = self.constraints[branch as usize].clone();
        candidates.difference_with(&self.forbidden);
        let mut tried = Vec::new();
        let mut stop = false;
        for v in candidates.iter() {
            if self.chosen.len() + 1 >= self.best_len {
                break;
            }
            let rest: Vec<u32> = open
                .iter()
                .copied()
                .filter(|&c| !self.constraints[c as usize].contains(v))
                .collect();
            self.chosen.push(v);
            stop = self.run(&rest);
            self.chosen.pop();
            if stop {
                break;
            }
            self.forbidden.insert(v);
            tried.push(v);
        }
        for v in tried {
            self.forbidden.remove(v);
        }
        stop
    }
}
