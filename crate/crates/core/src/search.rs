//! Exhaustive search for the longest sequence whose subsequence products
//! avoid a forbidden set.
//!
//! Sequences are enumerated as nondecreasing lists of candidate positions, so
//! each multiset is visited once. The search state is the product set of the
//! prefix together with the smallest position still allowed; since
//! `Π(T·a) = Π(T) ∪ {a} ∪ Π(T)·a`, the best extension length depends on nothing
//! else and is memoized on that pair.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use dashmap::DashMap;
use rayon::prelude::*;

use crate::elements::ElementSet;
use crate::error::{Error, Result};
use crate::sequence::CommutativeMonoid;

/// Environment variable overriding the default node budget.
pub const BUDGET_ENV: &str = "EBRING_BUDGET";

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Default number of memo entries kept before inserts stop.
pub const DEFAULT_MEMO_CAP: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: Some(DEFAULT_NODE_BUDGET),
            max_time: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_nodes: None,
            max_time: None,
        }
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            max_nodes: Some(n),
            max_time: None,
        }
    }

    /// The default budget, with the node count taken from `EBRING_BUDGET` when set.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Budget::nodes(n),
            None => Budget::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Length of the longest admissible sequence.
    pub max_length: usize,
    /// Lexicographically least admissible sequence of that length.
    pub witness: Vec<usize>,
    /// Search nodes expanded (memo hits excluded).
    pub nodes: u64,
}

pub(crate) struct FreeSequenceSearch {
    size: usize,
    table: Vec<u32>,
    forbidden: ElementSet,
    candidates: Vec<usize>,
    memo: DashMap<(ElementSet, u32), u32>,
    memo_cap: usize,
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    deepest: AtomicUsize,
    exhausted: AtomicBool,
}

impl FreeSequenceSearch {
    /// Terms range over `candidates`; a sequence is admissible when none of
    /// its subsequence products lies in `forbidden`.
    pub fn new<M: CommutativeMonoid + ?Sized>(
        monoid: &M,
        forbidden: ElementSet,
        budget: Budget,
    ) -> Self {
        let n = monoid.size();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(monoid.op(a, b) as u32);
            }
        }
        let candidates = (0..n).filter(|&a| !forbidden.contains(a)).collect();
        FreeSequenceSearch {
            size: n,
            table,
            forbidden,
            candidates,
            memo: DashMap::new(),
            memo_cap: DEFAULT_MEMO_CAP,
            budget,
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            deepest: AtomicUsize::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    fn extend(&self, set: &ElementSet, a: usize) -> Option<ElementSet> {
        let mut next = set.clone();
        next.insert(a);
        for s in set.iter() {
            let p = self.table[s * self.size + a] as usize;
            if self.forbidden.contains(p) {
                return None;
            }
            next.insert(p);
        }
        Some(next)
    }

    fn out_of_budget(&self) -> Error {
        self.exhausted.store(true, Ordering::Relaxed);
        Error::BudgetExhausted {
            best_lower_bound: self.deepest.load(Ordering::Relaxed) + 1,
            nodes: self.nodes.load(Ordering::Relaxed),
        }
    }

    fn charge(&self, depth: usize) -> Result<()> {
        self.deepest.fetch_max(depth, Ordering::Relaxed);
        let nodes = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.exhausted.load(Ordering::Relaxed) {
            return Err(self.out_of_budget());
        }
        if self.budget.max_nodes.is_some_and(|cap| nodes > cap) {
            return Err(self.out_of_budget());
        }
        if nodes.is_multiple_of(4096) && self.budget.max_time.is_some_and(|t| self.start.elapsed() > t) {
            return Err(self.out_of_budget());
        }
        Ok(())
    }

    /// Longest admissible extension of a prefix with product set `set`,
    /// using candidate positions `>= pos`.
    fn best_extension(&self, set: &ElementSet, pos: usize, depth: usize) -> Result<usize> {
        let key = (set.clone(), pos as u32);
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v as usize);
        }
        self.charge(depth)?;
        let mut best = 0;
        for p in pos..self.candidates.len() {
            if let Some(next) = self.extend(set, self.candidates[p]) {
                best = best.max(1 + self.best_extension(&next, p, depth + 1)?);
            }
        }
        if self.memo.len() < self.memo_cap {
            self.memo.insert(key, best as u32);
        }
        Ok(best)
    }

    pub fn run(&self, parallel: bool) -> Result<SearchOutcome> {
        let empty = ElementSet::empty(self.size);
        let branch = |p: usize| -> Result<usize> {
            match self.extend(&empty, self.candidates[p]) {
                Some(next) => Ok(1 + self.best_extension(&next, p, 1)?),
                None => Ok(0),
            }
        };
        let positions: Vec<usize> = (0..self.candidates.len()).collect();
        let values: Vec<Result<usize>> = if parallel {
            positions.par_iter().map(|&p| branch(p)).collect()
        } else {
            positions.iter().map(|&p| branch(p)).collect()
        };
        let mut max_length = 0;
        for v in values {
            max_length = max_length.max(v?);
        }

        // Rebuild the lexicographically least optimal sequence.
        let mut witness = Vec::with_capacity(max_length);
        let mut set = empty;
        let mut pos = 0;
        let mut remaining = max_length;
        while remaining > 0 {
            let mut chosen = None;
            for p in pos..self.candidates.len() {
                if let Some(next) = self.extend(&set, self.candidates[p]) {
                    if 1 + self.best_extension(&next, p, witness.len() + 1)? == remaining {
                        chosen = Some((p, next));
                        break;
                    }
                }
            }
            let (p, next) = chosen.ok_or_else(|| {
                Error::InternalConsistency("optimal sequence could not be rebuilt".into())
            })?;
            witness.push(self.candidates[p]);
            set = next;
            pos = p;
            remaining -= 1;
        }
        Ok(SearchOutcome {
            max_length,
            witness,
            nodes: self.nodes.load(Ordering::Relaxed),
        })
    }
}
