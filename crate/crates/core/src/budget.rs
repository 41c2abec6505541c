//! Time and step budgets for long-running eliminations.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// A shareable resource guard. Clones share the step counter and the
/// cancellation flag, so a budget handed to several sub-computations is
/// consumed jointly.
#[derive(Debug, Clone)]
pub struct Budget {
    inner: Arc<Inner>,
}

#[derive(Debug)]
struct Inner {
    start: Instant,
    deadline: Option<Instant>,
    max_steps: Option<u64>,
    steps: AtomicU64,
    cancelled: AtomicBool,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::build(None, None)
    }

    pub fn with_time(limit: Duration) -> Self {
        Self::build(Some(limit), None)
    }

    pub fn with_steps(max_steps: u64) -> Self {
        Self::build(None, Some(max_steps))
    }

    pub fn new(limit: Option<Duration>, max_steps: Option<u64>) -> Self {
        Self::build(limit, max_steps)
    }

    fn build(limit: Option<Duration>, max_steps: Option<u64>) -> Self {
        let start = Instant::now();
        Budget {
            inner: Arc::new(Inner {
                start,
                deadline: limit.map(|d| start + d),
                max_steps,
                steps: AtomicU64::new(0),
                cancelled: AtomicBool::new(false),
            }),
        }
    }

    /// A fresh budget for a sub-computation: its own step counter and
    /// cancellation flag, and a deadline no later than this one's.
    pub fn child(&self, limit: Option<Duration>) -> Self {
        let child = Self::build(limit, None);
        let deadline = match (child.inner.deadline, self.inner.deadline) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Budget {
            inner: Arc::new(Inner {
                start: child.inner.start,
                deadline,
                max_steps: None,
                steps: AtomicU64::new(0),
                cancelled: AtomicBool::new(self.inner.cancelled.load(Ordering::Relaxed)),
            }),
        }
    }

    pub fn elapsed(&self) -> Duration {
        self.inner.start.elapsed()
    }

    pub fn steps(&self) -> u64 {
        self.inner.steps.load(Ordering::Relaxed)
    }

    pub fn cancel(&self) {
        self.inner.cancelled.store(true, Ordering::Relaxed);
    }

    /// Records `n` units of work and fails once the budget is exhausted.
    pub fn charge(&self, n: u64) -> Result<()> {
        let steps = self.inner.steps.fetch_add(n, Ordering::Relaxed) + n;
        if let Some(max) = self.inner.max_steps {
            if steps > max {
                return Err(self.timeout());
            }
        }
        self.check()
    }

    pub fn check(&self) -> Result<()> {
        if self.inner.cancelled.load(Ordering::Relaxed) {
            return Err(self.timeout());
        }
        if let Some(deadline) = self.inner.deadline {
            if Instant::now() >= deadline {
                return Err(self.timeout());
            }
        }
        Ok(())
    }

    fn timeout(&self) -> Error {
        Error::Timeout { elapsed_ms: self.elapsed().as_millis() as u64 }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::unlimited()
    }
}
