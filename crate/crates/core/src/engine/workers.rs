//! Worker pool primitives: dynamic chunk claiming, worker-private scratch,
//! and next-iteration queue construction.

use std::ops::Range;
use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};
use std::thread;

use crate::balancing::BalancerState;
use crate::graph::Id;

use super::forbidden::ForbiddenMarker;

/// Scratch owned by one worker for the whole run.
#[derive(Debug, Clone)]
pub struct WorkerState {
    pub forbidden: ForbiddenMarker,
    /// Per-net local queue; reset by length only.
    pub local: Vec<Id>,
    /// Private next-iteration buffer, merged at the barrier.
    pub next: Vec<Id>,
    pub balancer: BalancerState,
}

impl WorkerState {
    pub fn new(forbidden_capacity: usize) -> Self {
        Self {
            forbidden: ForbiddenMarker::with_capacity(forbidden_capacity),
            local: Vec::new(),
            next: Vec::new(),
            balancer: BalancerState::default(),
        }
    }
}

/// A fixed set of workers. Each phase call spawns scoped threads that claim
/// chunks of an index range through a shared cursor; the calling thread acts
/// as worker 0.
#[derive(Debug, Clone)]
pub struct Workers {
    states: Vec<WorkerState>,
}

impl Workers {
    pub fn new(count: usize, forbidden_capacity: usize) -> Self {
        assert!(count >= 1, "need at least one worker");
        Self { states: (0..count).map(|_| WorkerState::new(forbidden_capacity)).collect() }
    }

    pub fn count(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[WorkerState] {
        &self.states
    }

    pub fn states_mut(&mut self) -> &mut [WorkerState] {
        &mut self.states
    }

    /// Runs `body` over `0..len` split into chunks of `chunk` indices.
    /// Returns once every chunk is done (phase barrier).
    pub fn for_each_chunk<F>(&mut self, len: usize, chunk: usize, body: F)
    where
        F: Fn(&mut WorkerState, Range<usize>) + Sync,
    {
        if len == 0 {
            return;
        }
        let chunk = chunk.max(1);
        let cursor = AtomicUsize::new(0);
        let work = |state: &mut WorkerState| loop {
            let start = cursor.fetch_add(chunk, Ordering::Relaxed);
            if start >= len {
                break;
            }
            body(state, start..(start + chunk).min(len));
        };
        let active = self.states.len().min(len.div_ceil(chunk));
        let (first, rest) = self.states[..active].split_first_mut().expect("at least one worker");
        if rest.is_empty() {
            work(first);
            return;
        }
        thread::scope(|s| {
            for state in rest.iter_mut() {
                s.spawn(|| work(state));
            }
            work(first);
        });
    }

    /// Concatenates and clears the private `next` buffers in worker order.
    pub fn drain_next(&mut self) -> Vec<Id> {
        let total = self.states.iter().map(|s| s.next.len()).sum();
        let mut out = Vec::with_capacity(total);
        for s in &mut self.states {
            out.extend_from_slice(&s.next);
            s.next.clear();
        }
        out
    }
}

/// Shared append-only queue with an atomic tail, sized for the worst case.
#[derive(Debug)]
pub struct SharedQueue {
    slots: Vec<AtomicU32>,
    tail: AtomicUsize,
}

impl SharedQueue {
    pub fn with_capacity(capacity: usize) -> Self {
        Self { slots: (0..capacity).map(|_| AtomicU32::new(0)).collect(), tail: AtomicUsize::new(0) }
    }

    #[inline]
    pub fn push(&self, v: Id) {
        let i = self.tail.fetch_add(1, Ordering::Relaxed);
        self.slots[i].store(v, Ordering::Relaxed);
    }

    pub fn into_vec(self) -> Vec<Id> {
        let len = self.tail.into_inner();
        self.slots.into_iter().take(len).map(AtomicU32::into_inner).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_index_visited_once() {
        for workers in [1, 2, 4, 7] {
            for chunk in [1, 3, 64, 1000] {
                let mut w = Workers::new(workers, 4);
                let hits: Vec<AtomicUsize> = (0..503).map(|_| AtomicUsize::new(0)).collect();
                w.for_each_chunk(hits.len(), chunk, |st, r| {
                    for i in r {
                        hits[i].fetch_add(1, Ordering::Relaxed);
                        st.next.push(i as Id);
                    }
                });
                assert!(hits.iter().all(|h| h.load(Ordering::Relaxed) == 1));
                let mut merged = w.drain_next();
                merged.sort_unstable();
                assert_eq!(merged, (0..503).collect::<Vec<Id>>());
                assert!(w.states().iter().all(|s| s.next.is_empty()));
            }
        }
    }

    #[test]
    fn shared_queue_collects_concurrent_pushes() {
        let q = SharedQueue::with_capacity(1000);
        let mut w = Workers::new(4, 4);
        w.for_each_chunk(1000, 10, |_, r| r.for_each(|i| q.push(i as Id)));
        let mut v = q.into_vec();
        v.sort_unstable();
        assert_eq!(v, (0..1000).collect::<Vec<Id>>());
    }
}
